#include "genmech/rational.hpp"

#include <cctype>
#include <cstdio>

namespace genmech {

std::string format_rational(const Rational& r) {
  // cpp_rational streams as "p/q", or "p" when the denominator is 1.
  return r.str();
}

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto bad = [&]() -> Rational {
    fail(ErrorCode::BadRational, "'" + text + "' is not a rational (expected p or p/q)");
  };
  std::size_t start = 0;
  if (start < text.size() && text[start] == '-') ++start;
  std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!all_digits(text, start, text.size())) return bad();
    return Rational(BigInt(text));
  }
  if (!all_digits(text, start, slash)) return bad();
  if (!all_digits(text, slash + 1, text.size())) return bad();
  BigInt num(text.substr(0, slash));
  BigInt den(text.substr(slash + 1));
  if (den == 0) fail(ErrorCode::BadRational, "'" + text + "' has a zero denominator");
  return Rational(num, den);
}

Rational inverse_power(std::uint64_t k, std::uint64_t e) {
  if (k < 1) fail(ErrorCode::Internal, "inverse_power base must be >= 1");
  return Rational(BigInt(1), pow(BigInt(k), static_cast<unsigned>(e)));
}

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string format_real12(double x) {
  if (x == 0.0) x = 0.0;  // normalize -0
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", x);
  return buf;
}

}  // namespace genmech
