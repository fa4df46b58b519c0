#include "polyslice/scalar.hpp"

#include <cctype>
#include <cstdio>

#include "polyslice/errors.hpp"

namespace polyslice {
namespace {

bool is_integer_text(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  if (text.empty()) return false;
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  const auto den_text = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_text(num_text) || !is_integer_text(den_text)) {
    throw InvalidArgument("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw InvalidArgument("zero denominator: '" + std::string(text) + "'");
  Scalar value(parse_integer(num_text), den);
  value.canonicalize();
  return value;
}

std::string format_scalar(const Scalar& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

double to_double(const Scalar& value) { return value.get_d(); }

std::string format_decimal(const Scalar& value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value.get_d());
  return buf;
}

}  // namespace polyslice
