#pragma once

#include <map>
#include <string>
#include <vector>

#include "morita/exact/linalg.hpp"
#include "morita/exact/rational.hpp"

namespace morita::poisson {

using Exponent = std::vector<int>;

/// Sparse polynomial in a fixed number of variables with exact coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
 public:
  explicit MultiPoly(int nvars = 0) : nvars_(nvars) {}

  static MultiPoly constant(int nvars, const Rational& c);
  static MultiPoly variable(int nvars, int i);
  static MultiPoly monomial(const Exponent& e, const Rational& c = 1);

  int nvars() const { return nvars_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Coefficient of x^e (zero if absent).
  Rational coeff(const Exponent& e) const;
  /// -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  void add_term(const Exponent& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  MultiPoly derivative(int i) const;

 private:
  int nvars_;
  std::map<Exponent, Rational> terms_;
};

MultiPoly pow(const MultiPoly& p, int e);

/// p(sum_j images[0] ...), i.e. variable i replaced by images[i]; all images
/// must share one variable count, which becomes the result's.
MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images);

/// x -> M x: variable i replaced by sum_j M(i, j) x_j.
MultiPoly linear_substitute(const MultiPoly& p, const RMatrix& m);

/// All exponent vectors of total degree d in n variables, in lexicographic
/// descending order.
std::vector<Exponent> monomials(int nvars, int degree);

std::string to_string(const MultiPoly& p);

}  // namespace morita::poisson
