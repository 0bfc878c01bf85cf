#include "rota/core/scalar.hpp"

#include <cctype>
#include <string>

#include "rota/core/errors.hpp"

namespace rota {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  if (!body.empty() && body.front() == '-') body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ValidationError("malformed rational literal '" + std::string(text) + "'");
  }
  BigInt denominator(std::string(den), 10);
  if (denominator == 0) {
    throw ValidationError("zero denominator in '" + std::string(text) + "'");
  }
  BigInt numerator(std::string(num), 10);
  if (text.front() == '-') numerator = -numerator;
  Scalar value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string to_string(const Scalar& value) { return value.get_str(10); }

}  // namespace rota
