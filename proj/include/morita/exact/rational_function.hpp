#pragma once

#include <map>
#include <string>
#include <vector>

#include "morita/exact/polynomial.hpp"
#include "morita/exact/rational.hpp"

namespace morita {

/// Reduced quotient num/den over Q: den is monic and gcd(num, den) = 1.
/// The only way to build one from arbitrary polynomials is rf_normalize.
class RationalFunction {
 public:
  RationalFunction() : den_(Poly::constant(1)) {}
  RationalFunction(Poly p) : num_(std::move(p)), den_(Poly::constant(1)) {}  // NOLINT
  RationalFunction(const Rational& c) : RationalFunction(Poly::constant(c)) {}  // NOLINT

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }
  /// deg num < deg den, i.e. the function vanishes at infinity.
  bool is_proper() const { return num_.degree() < den_.degree(); }

  /// Throws Error(ZeroDenominator) at a pole.
  Rational operator()(const Rational& x) const;

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

 private:
  friend RationalFunction rf_normalize(Poly num, Poly den);
  RationalFunction(Poly n, Poly d, int) : num_(std::move(n)), den_(std::move(d)) {}

  Poly num_;
  Poly den_;
};

/// Divides out the polynomial gcd and rescales so that den is monic.
/// Throws Error(ZeroDenominator) if den = 0.
RationalFunction rf_normalize(Poly num, Poly den);

std::string to_string(const RationalFunction& f, std::string_view var = "x");

/// sum over poles p of residues[p] / (x - p)
struct PartialFraction {
  std::map<Integer, Rational> residues;

  /// Residue at p, zero when p is not listed.
  Rational residue(const Integer& p) const;
  RationalFunction recombine() const;
};

/// Residues of num/den at the roots of den. den must split into distinct
/// linear factors with integer roots (Error NonSimplePoles otherwise) and
/// deg num < deg den (Error DegreeError). The inputs need not be reduced:
/// a root of den that cancels against num is listed with residue zero.
PartialFraction partial_fractions(const Poly& num, const Poly& den);
PartialFraction partial_fractions(const RationalFunction& f);

struct RootExtraction {
  /// Integer roots with multiplicity, ascending.
  std::vector<Integer> roots;
  /// The factor left after removing (x - r) for every root; has no integer roots.
  Poly remainder;
};

/// Integer roots of a monic integer polynomial by trial of the divisors of
/// the constant term. Throws Error(NotMonicInteger) otherwise.
RootExtraction rational_roots(const Poly& p);

}  // namespace morita
