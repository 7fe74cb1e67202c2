#include <cmath>

#include <doctest.h>

#include "qfv/builtin.hpp"
#include "qfv/qfi.hpp"
#include "test_helpers.hpp"

using namespace qfv;

namespace {

DensityMatrix wrap(Matrix m, Dims dims) { return {std::move(m), std::move(dims)}; }

}  // namespace

TEST_CASE("variance: identity observable and closed forms") {
  std::mt19937_64 rng(1);
  DensityMatrix rho = wrap(test::random_density(4, rng), {2, 2});
  CHECK(variance(rho, Matrix::Identity(4, 4)) == doctest::Approx(0.0).epsilon(1e-12));

  // Bound entangled mixture: Var(A x I - I x B) = 4 sqrt(2) - 4.
  DensityMatrix bound = example1_state(builtin::example1_p(), builtin::example1_q());
  ObservableSet set1 = builtin::example1_observables();
  double v = variance(bound, pairwise_difference(set1, 0, 1));
  CHECK(v == doctest::Approx(4.0 * std::sqrt(2.0) - 4.0).epsilon(1e-12));
}

TEST_CASE("variance: noisy two-qubit family matches 2 - 4p^2/81 - 14p/9") {
  NoisyFamily family = example2_family();
  ObservableSet set = builtin::example2_observables();
  Matrix diff = pairwise_difference(set, 0, 1);
  for (double p : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    double v = variance(white_noise_mix(family, p), diff);
    CHECK(v == doctest::Approx(2.0 - 4.0 * p * p / 81.0 - 14.0 * p / 9.0).epsilon(1e-12));
  }
}

TEST_CASE("variance: rejects mismatched dims and non-Hermitian operators") {
  std::mt19937_64 rng(2);
  DensityMatrix rho = wrap(test::random_density(4, rng), {2, 2});
  CHECK_THROWS_AS(variance(rho, Matrix::Identity(3, 3)), DimensionMismatch);
  Matrix bad(4, 4);
  bad.setZero();
  bad(0, 1) = Complex(1, 0);
  CHECK_THROWS_AS(variance(rho, bad), NotHermitian);
}

TEST_CASE("covariance: product states and maximally mixed give zero") {
  std::mt19937_64 rng(3);
  Matrix rho_a = test::random_density(2, rng);
  Matrix rho_b = test::random_density(3, rng);
  DensityMatrix prod = wrap(kron(rho_a, rho_b), {2, 3});
  Observable a = make_observable(test::random_hermitian(2, rng));
  Observable b = make_observable(test::random_hermitian(3, rng));
  CHECK(std::abs(covariance(prod, a, b)) <= 1e-12);

  DensityMatrix mixed = maximally_mixed({2, 2});
  Observable z = pauli("z");
  CHECK(std::abs(covariance(mixed, z, z)) <= 1e-15);
}

TEST_CASE("covariance: pure two-qubit state with sigma_z pair") {
  // <sz x sz> = 7/9 and <I x sz> picks up only the |10> asymmetry.
  DensityMatrix rho = white_noise_mix(example2_family(), 1.0);
  Observable z = pauli("z");
  Matrix sz = z.matrix;
  Matrix i2 = Matrix::Identity(2, 2);
  double ea = expectation(rho, kron(sz, i2));
  double eb = expectation(rho, kron(i2, sz));
  CHECK(covariance(rho, z, z) == doctest::Approx(7.0 / 9.0 - ea * eb).epsilon(1e-12));
}

TEST_CASE("qfi: pure state equals variance; maximally mixed gives exactly zero") {
  DensityMatrix pure = white_noise_mix(example2_family(), 1.0);
  Matrix sum = collective_sum(builtin::example2_observables());
  QfiResult f = qfi(pure, sum);
  CHECK(f.value == doctest::Approx(32.0 / 9.0).epsilon(1e-9));
  CHECK(f.value == doctest::Approx(variance(pure, sum)).epsilon(1e-9));
  CHECK(f.rank_used == 1);

  std::mt19937_64 rng(4);
  DensityMatrix mixed = maximally_mixed({2, 2});
  Matrix o = test::random_hermitian(4, rng);
  CHECK(qfi(mixed, o).value == 0.0);
}

TEST_CASE("qfi: bound entangled mixture reproduces 8 - 4 sqrt(2)") {
  DensityMatrix rho = example1_state(builtin::example1_p(), builtin::example1_q());
  Matrix sum = collective_sum(builtin::example1_observables());
  CHECK(qfi(rho, sum).value == doctest::Approx(8.0 - 4.0 * std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("qfi: bounded above by variance on random mixed states") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 2 + trial % 3;
    Dims dims = (trial % 2 == 0) ? Dims{d, d} : Dims{d};
    const int total = total_dim(dims);
    DensityMatrix rho = wrap(test::random_density(total, rng), dims);
    Matrix o = test::random_hermitian(total, rng);
    CHECK(qfi(rho, o).value <= variance(rho, o) + 1e-9);
  }
}

TEST_CASE("qfi: pure-state identity on random product and entangled kets") {
  std::mt19937_64 rng(6);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    Vector v(4);
    for (int i = 0; i < 4; ++i) v(i) = Complex(gauss(rng), gauss(rng));
    v /= v.norm();
    DensityMatrix rho = pure_density({v, {2, 2}});
    Matrix o = test::random_hermitian(4, rng);
    const double var = variance(rho, o);
    CHECK(std::abs(qfi(rho, o).value - var) <= 1e-9 * std::max(1.0, var));
  }
}

TEST_CASE("qfi: unitary covariance") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    DensityMatrix rho = wrap(test::random_density(4, rng), {2, 2});
    Matrix o = test::random_hermitian(4, rng);
    // Eigenvector matrix of an unrelated Hermitian matrix is unitary.
    Matrix u = hermitian_eig(test::random_hermitian(4, rng)).eigenvectors;
    DensityMatrix rotated = wrap(u * rho.matrix * u.adjoint(), {2, 2});
    Matrix o_rot = u * o * u.adjoint();
    CHECK(std::abs(qfi(rotated, o_rot).value - qfi(rho, o).value) <= 1e-9);
  }
}

TEST_CASE("qfi_noisy_closed_form: the three reported curves") {
  NoisyFamily f2 = example2_family();
  Matrix sum2 = collective_sum(builtin::example2_observables());
  NoisyFamily f3 = example3_family();
  Matrix sum3 = collective_sum(builtin::example3_observables());
  Matrix sum3z = collective_sum(builtin::example3_pauli_observables());

  for (double p : {0.0, 0.1, 0.3439, 0.5, 0.9, 1.0}) {
    CHECK(qfi_noisy_closed_form(f2, sum2, p) ==
          doctest::Approx(64.0 * p * p / (9.0 * p + 9.0)).epsilon(1e-12));
    CHECK(qfi_noisy_closed_form(f3, sum3, p) ==
          doctest::Approx(656.0 * p * p / (243.0 * p + 81.0)).epsilon(1e-12));
    CHECK(qfi_noisy_closed_form(f3, sum3z, p) ==
          doctest::Approx(2624.0 * p * p / (243.0 * p + 81.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(qfi_noisy_closed_form(f2, sum2, 1.5), ParameterOutOfRange);
}

TEST_CASE("qfi_noisy_closed_form: agrees with the numeric spectral route") {
  struct Case {
    NoisyFamily family;
    Matrix op;
  };
  std::vector<Case> cases;
  cases.push_back({example2_family(), collective_sum(builtin::example2_observables())});
  cases.push_back({example3_family(), collective_sum(builtin::example3_observables())});
  cases.push_back({example3_family(), collective_sum(builtin::example3_pauli_observables())});

  for (const auto& c : cases) {
    for (int i = 0; i <= 100; ++i) {
      const double p = i / 100.0;
      const double closed = qfi_noisy_closed_form(c.family, c.op, p);
      const double numeric = qfi(white_noise_mix(c.family, p), c.op).value;
      CHECK(std::abs(closed - numeric) <= 1e-8);
    }
  }
}
