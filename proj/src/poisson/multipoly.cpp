#include "morita/poisson/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "morita/error.hpp"

namespace morita::poisson {

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
  MultiPoly p(nvars);
  p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
  return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  Exponent e(static_cast<std::size_t>(nvars), 0);
  e[static_cast<std::size_t>(i)] = 1;
  return monomial(e);
}

MultiPoly MultiPoly::monomial(const Exponent& e, const Rational& c) {
  MultiPoly p(static_cast<int>(e.size()));
  p.add_term(e, c);
  return p;
}

Rational MultiPoly::coeff(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, std::accumulate(e.begin(), e.end(), 0));
  return d;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) {
    return std::accumulate(t.first.begin(), t.first.end(), 0) == d;
  });
}

void MultiPoly::add_term(const Exponent& e, const Rational& c) {
  if (static_cast<int>(e.size()) != nvars_)
    throw Error(Errc::InvalidArgument, "exponent length does not match variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r(std::max(a.nvars_, b.nvars_));
  Exponent e(static_cast<std::size_t>(r.nvars_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  return r;
}

MultiPoly MultiPoly::derivative(int i) const {
  const auto k = static_cast<std::size_t>(i);
  MultiPoly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Exponent d = e;
    --d[k];
    r.add_term(d, c * e[k]);
  }
  return r;
}

MultiPoly pow(const MultiPoly& p, int e) {
  MultiPoly r = MultiPoly::constant(p.nvars(), 1);
  for (int i = 0; i < e; ++i) r = r * p;
  return r;
}

MultiPoly substitute(const MultiPoly& p, const std::vector<MultiPoly>& images) {
  if (static_cast<int>(images.size()) != p.nvars())
    throw Error(Errc::InvalidArgument, "substitution needs one image per variable");
  const int target = images.empty() ? 0 : images.front().nvars();
  // powers[i][k] = images[i]^k, filled on demand
  std::vector<std::vector<MultiPoly>> powers(images.size());
  auto power = [&](std::size_t i, int k) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(target, 1));
    while (static_cast<int>(cache.size()) <= k) cache.push_back(cache.back() * images[i]);
    return cache[static_cast<std::size_t>(k)];
  };
  MultiPoly r(target);
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0) term = term * power(i, e[i]);
    r += term;
  }
  return r;
}

MultiPoly linear_substitute(const MultiPoly& p, const RMatrix& m) {
  const int n = p.nvars();
  if (m.rows() != n || m.cols() != n)
    throw Error(Errc::InvalidArgument, "linear substitution matrix has the wrong size");
  std::vector<MultiPoly> images;
  for (int i = 0; i < n; ++i) {
    MultiPoly row(n);
    for (int j = 0; j < n; ++j)
      if (m(i, j) != 0) row += MultiPoly::variable(n, j) * m(i, j);
    images.push_back(std::move(row));
  }
  return substitute(p, images);
}

namespace {

void fill_monomials(Exponent& e, std::size_t i, int left, std::vector<Exponent>& out) {
  if (i + 1 == e.size()) {
    e[i] = left;
    out.push_back(e);
    return;
  }
  for (int k = left; k >= 0; --k) {
    e[i] = k;
    fill_monomials(e, i + 1, left - k, out);
  }
}

}  // namespace

std::vector<Exponent> monomials(int nvars, int degree) {
  std::vector<Exponent> out;
  if (nvars == 0) {
    if (degree == 0) out.emplace_back();
    return out;
  }
  Exponent e(static_cast<std::size_t>(nvars), 0);
  fill_monomials(e, 0, degree, out);
  return out;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c0] = *it;
    Rational c = c0;
    const bool negative = c < 0;
    if (negative) c = -c;
    os << (first ? (negative ? "-" : "") : (negative ? " - " : " + "));
    first = false;
    const bool constant = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    bool wrote = false;
    if (constant || c != 1) {
      os << morita::to_string(c);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << "x" << i;
      if (e[i] > 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace morita::poisson
