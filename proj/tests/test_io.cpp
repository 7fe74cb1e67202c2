#include <sstream>

#include <doctest.h>

#include "qfv/builtin.hpp"
#include "qfv/io.hpp"
#include "test_helpers.hpp"

using namespace qfv;

TEST_CASE("state files: round-trip is bit-exact") {
  DensityMatrix rho = example1_state(builtin::example1_p(), builtin::example1_q());
  std::stringstream buf;
  write_state(buf, rho);
  DensityMatrix back = read_state(buf);
  CHECK(back.dims == rho.dims);
  CHECK(back.matrix == rho.matrix);

  // And a state with genuinely irrational entries off the diagonal.
  DensityMatrix sep = random_separable({2, 3}, 4, 12345);
  std::stringstream buf2;
  write_state(buf2, sep);
  DensityMatrix back2 = read_state(buf2);
  CHECK(back2.matrix == sep.matrix);
}

TEST_CASE("observable files: round-trip is bit-exact") {
  std::mt19937_64 rng(8);
  Observable op = make_observable(test::random_hermitian(3, rng));
  std::stringstream buf;
  write_observable(buf, op);
  Observable back = read_observable(buf);
  CHECK(back.local_dim == 3);
  CHECK(back.matrix == op.matrix);
}

TEST_CASE("state parser: rejects malformed input with a named field") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_state(in);
  };
  CHECK_THROWS_AS(parse("not json"), ParseError);
  CHECK_THROWS_WITH_AS(parse(R"({"matrix": [[[1,0]]]})"), doctest::Contains("dims"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse(R"({"dims": [2]})"), doctest::Contains("matrix"), ParseError);
  CHECK_THROWS_WITH_AS(parse(R"({"dims": [2], "matrix": [[[1,0]], [[0,0]]]})"),
                       doctest::Contains("matrix"), ParseError);
  CHECK_THROWS_WITH_AS(parse(R"({"dims": [1], "matrix": [[1]]})"), doctest::Contains("matrix"),
                       ParseError);
  CHECK_THROWS_AS(parse(R"({"dims": [0], "matrix": [[[1,0]]]})"), ParseError);
}

TEST_CASE("state parser: enforces density matrix invariants") {
  // Trace 2.
  std::istringstream bad_trace(
      R"({"dims": [2], "matrix": [[[1,0],[0,0]],[[0,0],[1,0]]]})");
  CHECK_THROWS_AS(read_state(bad_trace), InvariantViolation);

  // Non-Hermitian off-diagonal.
  std::istringstream non_herm(
      R"({"dims": [2], "matrix": [[[0.5,0],[0.3,0]],[[0,0],[0.5,0]]]})");
  CHECK_THROWS_AS(read_state(non_herm), InvariantViolation);

  // Negative eigenvalue.
  std::istringstream not_psd(
      R"({"dims": [2], "matrix": [[[1.5,0],[0,0]],[[0,0],[-0.5,0]]]})");
  CHECK_THROWS_AS(read_state(not_psd), InvariantViolation);
}

TEST_CASE("observable parser: rejects non-Hermitian and mismatched dims") {
  std::istringstream non_herm(
      R"({"local_dim": 2, "matrix": [[[0,0],[1,0]],[[0,0],[0,0]]]})");
  CHECK_THROWS_AS(read_observable(non_herm), ParseError);

  std::istringstream bad_dim(
      R"({"local_dim": 3, "matrix": [[[1,0],[0,0]],[[0,0],[1,0]]]})");
  CHECK_THROWS_AS(read_observable(bad_dim), ParseError);
}
