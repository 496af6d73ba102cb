#include "morita/exact/rational.hpp"

#include <cctype>

#include "morita/error.hpp"

namespace morita {

Integer to_integer(const Rational& r) {
  if (!is_integer(r)) throw Error(Errc::NonInteger, to_string(r) + " is not an integer");
  return num(r);
}

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& r) {
  if (is_integer(r)) return num(r).str();
  return num(r).str() + "/" + den(r).str();
}

namespace {

bool parse_integer(std::string_view s, Integer& out) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (s[0] == '-' || s[0] == '+') i = 1;
  if (i == s.size()) return false;
  for (std::size_t j = i; j < s.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(s[j]))) return false;
  out = Integer(std::string(s[0] == '+' ? s.substr(1) : s));
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  Integer p, q(1);
  const bool ok = slash == std::string_view::npos
                      ? parse_integer(s, p)
                      : parse_integer(trim(s.substr(0, slash)), p) &&
                            parse_integer(trim(s.substr(slash + 1)), q);
  if (!ok) throw Error(Errc::InvalidArgument, "not a rational: '" + std::string(text) + "'");
  if (q == 0) throw Error(Errc::ZeroDenominator, "'" + std::string(text) + "'");
  return Rational(p, q);
}

Integer factorial(unsigned n) {
  Integer r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace morita
