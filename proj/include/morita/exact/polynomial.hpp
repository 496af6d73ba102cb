#pragma once

// Dense univariate polynomials over an exact field.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "morita/error.hpp"
#include "morita/exact/rational.hpp"

namespace morita {

/// Coefficients are stored lowest degree first; the highest stored entry is
/// never zero, so the zero polynomial has no coefficients at all.
template <typename Scalar>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const Scalar& c) { return Polynomial(std::vector<Scalar>{c}); }
  static Polynomial monomial(const Scalar& c, std::size_t degree) {
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }
  /// x + shift
  static Polynomial shifted_x(const Scalar& shift) { return Polynomial{shift, Scalar(1)}; }

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Scalar& leading() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  Scalar operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
  std::span<const Scalar> coefficients() const { return c_; }

  /// Horner evaluation.
  Scalar operator()(const Scalar& x) const {
    Scalar acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Polynomial operator-() const {
    Polynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Scalar(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Scalar& s) { return a *= s; }
  friend Polynomial operator*(const Scalar& s, Polynomial a) { return a *= s; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> r(a.c_.size() + b.c_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Polynomial(std::move(r));
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Scalar> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Scalar(static_cast<long>(i));
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Scalar> c_;
};

using Poly = Polynomial<Rational>;

template <typename Scalar>
Scalar poly_eval(const Polynomial<Scalar>& p, const Scalar& x) {
  return p(x);
}

/// Euclidean division: a = q*b + r with deg r < deg b.
template <typename Scalar>
std::pair<Polynomial<Scalar>, Polynomial<Scalar>> divmod(const Polynomial<Scalar>& a,
                                                         const Polynomial<Scalar>& b) {
  if (b.is_zero()) throw Error(Errc::ZeroDenominator, "polynomial division by zero");
  Polynomial<Scalar> q, r = a;
  while (!r.is_zero() && r.degree() >= b.degree()) {
    const auto shift = static_cast<std::size_t>(r.degree() - b.degree());
    const auto t = Polynomial<Scalar>::monomial(r.leading() / b.leading(), shift);
    q += t;
    r -= t * b;
  }
  return {q, r};
}

template <typename Scalar>
Polynomial<Scalar> monic(const Polynomial<Scalar>& p) {
  if (p.is_zero()) return p;
  return p * (Scalar(1) / p.leading());
}

/// Monic gcd; gcd(0, 0) = 0.
template <typename Scalar>
Polynomial<Scalar> gcd(Polynomial<Scalar> a, Polynomial<Scalar> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

/// prod_{r in roots} (x - r)
template <typename Scalar, typename Range>
Polynomial<Scalar> from_roots(const Range& roots) {
  Polynomial<Scalar> p = Polynomial<Scalar>::constant(Scalar(1));
  for (const auto& r : roots) p *= Polynomial<Scalar>::shifted_x(-Scalar(r));
  return p;
}

template <typename Scalar>
Polynomial<Scalar> pow(const Polynomial<Scalar>& p, unsigned e) {
  Polynomial<Scalar> r = Polynomial<Scalar>::constant(Scalar(1));
  for (unsigned i = 0; i < e; ++i) r *= p;
  return r;
}

/// Human-readable form in the variable `var`, highest degree first.
std::string to_string(const Poly& p, std::string_view var = "x");

/// True when every coefficient is an integer.
bool has_integer_coefficients(const Poly& p);

}  // namespace morita
