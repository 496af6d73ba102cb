#include "morita/exact/rational_function.hpp"

#include <algorithm>
#include <sstream>

#include "morita/error.hpp"

namespace morita {

std::string to_string(const Poly& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int d = p.degree(); d >= 0; --d) {
    Rational c = p[static_cast<std::size_t>(d)];
    if (c == 0) continue;
    const bool negative = c < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (d == 0 || c != 1) os << to_string(c);
    if (d >= 1) os << var;
    if (d >= 2) os << "^" << d;
  }
  return os.str();
}

bool has_integer_coefficients(const Poly& p) {
  const auto c = p.coefficients();
  return std::all_of(c.begin(), c.end(), [](const Rational& r) { return is_integer(r); });
}

// ---------------------------------------------------------------------------

RationalFunction rf_normalize(Poly num, Poly den) {
  if (den.is_zero()) throw Error(Errc::ZeroDenominator, "rational function with zero denominator");
  if (num.is_zero()) return RationalFunction();
  const Poly g = gcd(num, den);
  if (g.degree() > 0) {
    num = divmod(num, g).first;
    den = divmod(den, g).first;
  }
  const Rational lead = den.leading();
  if (lead != 1) {
    num *= Rational(1) / lead;
    den *= Rational(1) / lead;
  }
  return RationalFunction(std::move(num), std::move(den), 0);
}

Rational RationalFunction::operator()(const Rational& x) const {
  const Rational d = den_(x);
  if (d == 0) throw Error(Errc::ZeroDenominator, "evaluation at a pole x = " + to_string(x));
  return num_(x) / d;
}

RationalFunction RationalFunction::operator-() const { return RationalFunction(-num_, den_, 0); }

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return rf_normalize(a.num_ + b.num_, a.den_);
  return rf_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return rf_normalize(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw Error(Errc::ZeroDenominator, "division by the zero rational function");
  return rf_normalize(a.num_ * b.den_, a.den_ * b.num_);
}

std::string to_string(const RationalFunction& f, std::string_view var) {
  if (f.is_polynomial()) return to_string(f.num(), var);
  return "(" + to_string(f.num(), var) + ")/(" + to_string(f.den(), var) + ")";
}

// ---------------------------------------------------------------------------

Rational PartialFraction::residue(const Integer& p) const {
  const auto it = residues.find(p);
  return it == residues.end() ? Rational(0) : it->second;
}

RationalFunction PartialFraction::recombine() const {
  RationalFunction sum;
  for (const auto& [pole, r] : residues)
    sum += RationalFunction(Poly::constant(r)) /
           RationalFunction(Poly::shifted_x(-Rational(pole)));
  return sum;
}

PartialFraction partial_fractions(const Poly& num, const Poly& den) {
  if (den.is_zero()) throw Error(Errc::ZeroDenominator, "partial fractions of x/0");
  if (num.degree() >= den.degree())
    throw Error(Errc::DegreeError, "numerator degree " + std::to_string(num.degree()) +
                                       " >= denominator degree " + std::to_string(den.degree()));
  const Poly d = monic(den);
  const Poly n = num * (Rational(1) / den.leading());
  if (!has_integer_coefficients(d))
    throw Error(Errc::NonSimplePoles, "denominator " + to_string(d) + " has non-integer roots");
  const auto split = rational_roots(d);
  if (split.remainder.degree() > 0)
    throw Error(Errc::NonSimplePoles, "denominator factor " + to_string(split.remainder) +
                                          " has no integer roots");
  if (std::adjacent_find(split.roots.begin(), split.roots.end()) != split.roots.end())
    throw Error(Errc::NonSimplePoles, "denominator " + to_string(d) + " has a repeated root");

  // For simple poles the residue at p is n(p) / d'(p).
  const Poly dd = d.derivative();
  PartialFraction pf;
  for (const auto& p : split.roots) {
    const Rational x(p);
    pf.residues.emplace(p, n(x) / dd(x));
  }
  return pf;
}

PartialFraction partial_fractions(const RationalFunction& f) {
  return partial_fractions(f.num(), f.den());
}

// ---------------------------------------------------------------------------

namespace {

// Positive divisors of |c|, c != 0.
std::vector<Integer> divisors(Integer c) {
  if (c < 0) c = -c;
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= c; ++d) {
    if (c % d == 0) {
      small.push_back(d);
      if (d * d != c) large.push_back(c / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Exact division of p by (x - r), assuming p(r) = 0.
Poly deflate(const Poly& p, const Rational& r) {
  const auto c = p.coefficients();
  std::vector<Rational> q(c.size() - 1);
  Rational carry = 0;
  for (std::size_t i = c.size() - 1; i >= 1; --i) {
    carry = c[i] + carry * r;
    q[i - 1] = carry;
  }
  return Poly(std::move(q));
}

}  // namespace

RootExtraction rational_roots(const Poly& p) {
  if (!p.is_monic() || !has_integer_coefficients(p))
    throw Error(Errc::NotMonicInteger, to_string(p) + " is not a monic integer polynomial");
  RootExtraction out;
  Poly rest = p;
  while (rest.degree() > 0 && rest[0] == 0) {
    out.roots.emplace_back(0);
    rest = deflate(rest, 0);
  }
  if (rest.degree() > 0) {
    for (const auto& d : divisors(num(rest[0]))) {
      for (const Integer& candidate : {d, Integer(-d)}) {
        const Rational x(candidate);
        while (rest.degree() > 0 && rest(x) == 0) {
          out.roots.push_back(candidate);
          rest = deflate(rest, x);
        }
      }
      if (rest.degree() <= 0) break;
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.remainder = std::move(rest);
  return out;
}

}  // namespace morita
