#include "qfv/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace qfv {

namespace {

using nlohmann::json;

Matrix parse_matrix(const json& j) {
  if (!j.is_array() || j.empty())
    throw ParseError("field 'matrix' must be a nonempty array of rows");
  const size_t n = j.size();
  Matrix m(n, n);
  for (size_t r = 0; r < n; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != n)
      throw ParseError("field 'matrix' row " + std::to_string(r) + " has wrong length");
    for (size_t c = 0; c < n; ++c) {
      const json& e = row[c];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number())
        throw ParseError("field 'matrix' entry (" + std::to_string(r) + "," +
                         std::to_string(c) + ") is not a [re, im] pair");
      m(r, c) = Complex(e[0].get<double>(), e[1].get<double>());
    }
  }
  if (!m.allFinite()) throw ParseError("field 'matrix' contains non-finite entries");
  return m;
}

json dump_matrix(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json parse_stream(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw ParseError(std::string("invalid JSON: ") + err.what());
  }
}

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return in;
}

}  // namespace

DensityMatrix read_state(std::istream& in) {
  const json j = parse_stream(in);
  if (!j.contains("dims")) throw ParseError("missing field 'dims'");
  if (!j.contains("matrix")) throw ParseError("missing field 'matrix'");
  Dims dims;
  for (const json& d : j["dims"]) {
    if (!d.is_number_integer() || d.get<int>() < 1)
      throw ParseError("field 'dims' entries must be positive integers");
    dims.push_back(d.get<int>());
  }
  DensityMatrix rho{parse_matrix(j["matrix"]), std::move(dims)};
  validate_density(rho);
  return rho;
}

DensityMatrix read_state_file(const std::string& path) {
  auto in = open_file(path);
  return read_state(in);
}

void write_state(std::ostream& out, const DensityMatrix& rho) {
  json j;
  j["dims"] = rho.dims;
  j["matrix"] = dump_matrix(rho.matrix);
  out << j.dump(2) << "\n";
}

Observable read_observable(std::istream& in) {
  const json j = parse_stream(in);
  if (!j.contains("local_dim")) throw ParseError("missing field 'local_dim'");
  if (!j.contains("matrix")) throw ParseError("missing field 'matrix'");
  if (!j["local_dim"].is_number_integer())
    throw ParseError("field 'local_dim' must be an integer");
  const int d = j["local_dim"].get<int>();
  Matrix m = parse_matrix(j["matrix"]);
  if (m.rows() != d) throw ParseError("field 'local_dim' does not match 'matrix' dimension");
  if (!is_hermitian(m)) throw ParseError("field 'matrix' is not Hermitian within 1e-10");
  return {std::move(m), d};
}

Observable read_observable_file(const std::string& path) {
  auto in = open_file(path);
  return read_observable(in);
}

void write_observable(std::ostream& out, const Observable& op) {
  json j;
  j["local_dim"] = op.local_dim;
  j["matrix"] = dump_matrix(op.matrix);
  out << j.dump(2) << "\n";
}

}  // namespace qfv
