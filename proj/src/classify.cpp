#include "morita/classify.hpp"

#include <algorithm>

#include "morita/error.hpp"

namespace morita {

KTheoryVector KTheoryVector::zero(int n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "K-theory vectors need n >= 2");
  KTheoryVector v;
  v.n_ = n;
  v.basis_ = nontrivial_partitions(n);
  v.coords_.assign(v.basis_.size(), Integer(0));
  return v;
}

KTheoryVector KTheoryVector::from_coords(int n, std::vector<Integer> coords) {
  KTheoryVector v = zero(n);
  if (coords.size() != v.basis_.size())
    throw Error(Errc::InvalidArgument, "n = " + std::to_string(n) + " needs " +
                                           std::to_string(v.basis_.size()) + " coordinates, got " +
                                           std::to_string(coords.size()));
  v.coords_ = std::move(coords);
  return v;
}

std::size_t KTheoryVector::index_of(const Partition& lambda) const {
  const auto it = std::find(basis_.begin(), basis_.end(), lambda);
  if (it == basis_.end())
    throw Error(Errc::InvalidArgument,
                to_string(lambda) + " is not a nontrivial partition of " + std::to_string(n_));
  return static_cast<std::size_t>(it - basis_.begin());
}

const Integer& KTheoryVector::operator[](const Partition& lambda) const { return coords_[index_of(lambda)]; }

KTheoryVector& KTheoryVector::set(const Partition& lambda, Integer value) {
  coords_[index_of(lambda)] = std::move(value);
  return *this;
}

bool KTheoryVector::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const Integer& z) { return z == 0; });
}

std::string to_string(const KTheoryVector& v) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < v.coords().size(); ++i) {
    if (v.coords()[i] == 0) continue;
    if (!first) s += ", ";
    first = false;
    s += to_string(v.basis()[i]) + ": " + v.coords()[i].str();
  }
  return s + "}";
}

std::string to_string(const Relation& r) {
  // q = +1:  c = c' + s;   q = -1:  c = -c' - 1 - s
  const Integer shift = r.q == 1 ? r.s : Integer(-1 - r.s);
  std::string s = r.q == 1 ? "c = c'" : "c = -c'";
  if (shift > 0) s += " + " + shift.str();
  if (shift < 0) s += " - " + Integer(-shift).str();
  return s;
}

std::string_view to_string(RejectionReason r) noexcept {
  switch (r) {
    case RejectionReason::NonIntegerRoots: return "NonIntegerRoots";
    case RejectionReason::CommonDifferenceNotUnit: return "CommonDifferenceNotUnit";
    case RejectionReason::NotArithmeticProgression: return "NotArithmeticProgression";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------

ZMatrix hook_matrix(int n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "hook_matrix needs n >= 2");
  ZMatrix h(n - 1, n - 1);
  for (int m = 1; m < n; ++m) {
    const auto a = a_coefficients(Partition::hook(m, n));
    for (int k = 1; k < n; ++k) h(m - 1, k - 1) = a[static_cast<std::size_t>(k - 1)];
  }
  return h;
}

RMatrix invert_hook_matrix(int n) {
  const RMatrix c = inverse(to_rational(hook_matrix(n)));
  std::vector<RationalFunction> g;
  for (int m = 1; m < n; ++m) g.push_back(g_function(Partition::hook(m, n)));
  for (int k = 1; k < n; ++k) {
    RationalFunction sum;
    for (int m = 1; m < n; ++m)
      if (c(k - 1, m - 1) != 0) sum += RationalFunction(c(k - 1, m - 1)) * g[static_cast<std::size_t>(m - 1)];
    const RationalFunction expected = rf_normalize(Poly::constant(1), Poly::shifted_x(k));
    if (sum != expected)
      throw Error(Errc::InternalDisagreement, "hook basis does not recombine to 1/(x+" + std::to_string(k) + ")");
  }
  return c;
}

FData build_f(const KTheoryVector& v) { return build_f(v, a_coefficient_table(v.n())); }

FData build_f(const KTheoryVector& v, const ACoeffTable& table) {
  const int n = v.n();
  if (table.n != n) throw Error(Errc::InvalidArgument, "coefficient table is for a different n");
  FData out;
  out.a.assign(static_cast<std::size_t>(n - 1), Integer(0));
  for (std::size_t i = 0; i < v.basis().size(); ++i) {
    if (v.coords()[i] == 0) continue;
    const auto& row = table.entries[i];
    for (std::size_t k = 0; k < row.size(); ++k) out.a[k] += v.coords()[i] * row[k];
  }
  auto prod_except = [n](int skip) {
    Poly p = Poly::constant(1);
    for (int j = 1; j < n; ++j)
      if (j != skip) p *= Poly::shifted_x(j);
    return p;
  };
  out.f = prod_except(0);
  for (int k = 1; k < n; ++k) {
    const auto& ak = out.a[static_cast<std::size_t>(k - 1)];
    if (ak != 0) out.f += prod_except(k) * Rational(ak);
  }
  return out;
}

Derivation derive_relation(const KTheoryVector& v) {
  return derive_relation(v, a_coefficient_table(v.n()));
}

Derivation derive_relation(const KTheoryVector& v, const ACoeffTable& table) {
  const int n = v.n();
  const FData data = build_f(v, table);
  auto roots = rational_roots(data.f);

  Rejection rej;
  rej.roots = roots.roots;
  rej.remainder = roots.remainder;
  for (std::size_t i = 1; i < roots.roots.size(); ++i)
    rej.differences.push_back(roots.roots[i] - roots.roots[i - 1]);

  if (roots.remainder.degree() > 0) {
    rej.reason = RejectionReason::NonIntegerRoots;
    return rej;
  }
  if (std::adjacent_find(rej.differences.begin(), rej.differences.end(), std::not_equal_to<>{}) !=
      rej.differences.end()) {
    rej.reason = RejectionReason::NotArithmeticProgression;
    return rej;
  }
  if (!rej.differences.empty() && rej.differences.front() != 1) {
    rej.reason = RejectionReason::CommonDifferenceNotUnit;
    return rej;
  }

  Integer sum_a = 0;
  for (const auto& a : data.a) sum_a += a;
  const Integer scale = Integer(n) * (n - 1);
  if (sum_a % scale != 0)
    throw Error(Errc::InternalDivisibility,
                "sum a_k = " + sum_a.str() + " is not divisible by n(n-1) = " + scale.str());
  const Integer s = sum_a / scale;

  // Each reading x_k = x_1 + (1-k) q of the roots fixes q; with x = n c' the
  // first relation n c = (x - x_1)/q - 1 gives the shift independently of s.
  std::vector<Relation> out;
  for (const int q : {1, -1}) {
    const Integer& x1 = q == 1 ? roots.roots.back() : roots.roots.front();
    const Rational shift = Rational(-x1 - q + Integer(q - 1) * n / 2) / n;
    if (shift != Rational(s))
      throw Error(Errc::InternalDisagreement, "root reading gives shift " + to_string(shift) +
                                                  " but Viete gives " + s.str());
    out.push_back({q, s});
  }
  return out;
}

Integer kostka_shift(const KTheoryVector& v) {
  const int n = v.n();
  std::vector<int> alpha_parts(static_cast<std::size_t>(n - 1), 1);
  alpha_parts[0] = 2;
  const Partition alpha(std::move(alpha_parts));
  Integer s = 0;
  for (std::size_t i = 0; i < v.basis().size(); ++i)
    if (v.coords()[i] != 0) s += kostka(conjugate(v.basis()[i]), alpha) * v.coords()[i];
  return s;
}

IdentityReport remark_identity_check(const KTheoryVector& v) {
  const FData data = build_f(v);
  Integer sum_a = 0;
  for (const auto& a : data.a) sum_a += a;
  const Integer rhs = Integer(v.n()) * (v.n() - 1) * kostka_shift(v);
  IdentityReport r;
  r.pass = sum_a == rhs;
  r.detail = "sum a_k = " + sum_a.str() + (r.pass ? " == " : " != ") + "n(n-1) sum K n = " + rhs.str();
  return r;
}

std::map<Relation, std::vector<KTheoryVector>> search_relations(int n, int bound) {
  if (bound < 0) throw Error(Errc::InvalidArgument, "search bound must be nonnegative");
  const ACoeffTable table = a_coefficient_table(n);
  const std::size_t dim = table.rows.size();
  std::map<Relation, std::vector<KTheoryVector>> found;
  std::vector<Integer> coords(dim, Integer(-bound));
  while (true) {
    const auto v = KTheoryVector::from_coords(n, coords);
    const Derivation d = derive_relation(v, table);
    if (const auto* rels = std::get_if<std::vector<Relation>>(&d))
      for (const auto& r : *rels) found[r].push_back(v);
    // odometer
    std::size_t i = 0;
    while (i < dim && coords[i] == bound) coords[i++] = -bound;
    if (i == dim) break;
    ++coords[i];
  }

  for (const auto& [rel, witnesses] : found)
    for (const auto& w : witnesses) {
      const Derivation again = derive_relation(w, table);
      const auto* rels = std::get_if<std::vector<Relation>>(&again);
      if (rels == nullptr || std::find(rels->begin(), rels->end(), rel) == rels->end())
        throw Error(Errc::InternalDisagreement, "witness " + to_string(w) + " does not revalidate");
    }
  return found;
}

Rational iso_obstruction(int n, long l, int sign) {
  if (n < 2) throw Error(Errc::InvalidArgument, "iso_obstruction needs n >= 2");
  if (sign != 1 && sign != -1) throw Error(Errc::InvalidArgument, "sign must be +1 or -1");
  const Rational nl = Rational(n) * l;
  Poly p = Poly::monomial(Rational(1), static_cast<std::size_t>(n));
  for (int k = 1; k < n; ++k) p *= Poly{nl + k, Rational(sign)};
  return poly_eval(p, Rational(-sign) * nl);
}

}  // namespace morita
