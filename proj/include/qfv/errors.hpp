#ifndef QFV_ERRORS_HPP
#define QFV_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace qfv {

struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotHermitian : std::runtime_error {
  explicit NotHermitian(const std::string& what) : std::runtime_error(what) {}
};

struct NotNormalized : std::runtime_error {
  explicit NotNormalized(const std::string& what) : std::runtime_error(what) {}
};

struct ParameterOutOfRange : std::runtime_error {
  explicit ParameterOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct UnknownName : std::runtime_error {
  explicit UnknownName(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct InvariantViolation : std::runtime_error {
  explicit InvariantViolation(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qfv

#endif
