#include "morita/traces.hpp"

#include "morita/error.hpp"

namespace morita {

namespace {

void require_nontrivial(const Partition& lambda) {
  if (lambda.length() <= 1)
    throw Error(Errc::TrivialPartition, to_string(lambda) + " is the trivial representation");
}

Rational sign_power(int e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

Poly content_polynomial(const Partition& lambda) {
  Poly f = Poly::constant(1);
  for (int c : content_multiset(lambda)) f *= Poly::shifted_x(c);
  return f;
}

Poly trivial_content_polynomial(int n) { return content_polynomial(Partition::row(n)); }

RationalFunction g_function(const Partition& lambda) {
  require_nontrivial(lambda);
  const Poly triv = trivial_content_polynomial(lambda.weight());
  const Rational dim(dimension(lambda));
  return rf_normalize((triv - content_polynomial(lambda)) * dim, triv);
}

namespace a_route {

std::vector<Rational> partial_fractions(const Partition& lambda) {
  const auto pf = morita::partial_fractions(g_function(lambda));
  std::vector<Rational> a;
  for (int k = 1; k < lambda.weight(); ++k) a.push_back(pf.residue(Integer(-k)));
  // Poles must lie in {-1, ..., -(n-1)}.
  for (const auto& [pole, r] : pf.residues)
    if (pole > -1 || pole < -(lambda.weight() - 1))
      throw Error(Errc::RouteDisagreement, "G" + to_string(lambda) + " has a pole at " + pole.str());
  return a;
}

std::vector<Rational> content_product(const Partition& lambda) {
  const int n = lambda.weight();
  const Rational dim(dimension(lambda));
  const auto contents = content_multiset(lambda);
  std::vector<Rational> a;
  for (int k = 1; k < n; ++k) {
    Rational top = 1, bottom = 1;
    for (int c : contents) top *= c - k;
    for (int l = 0; l < n; ++l)
      if (l != k) bottom *= l - k;
    a.push_back(-dim * top / bottom);
  }
  return a;
}

std::vector<Rational> conjugate_content(const Partition& lambda) {
  const int n = lambda.weight();
  const Rational dim(dimension(lambda));
  const Poly f = content_polynomial(conjugate(lambda));
  std::vector<Rational> a;
  for (int k = 1; k < n; ++k) {
    const Rational denom(factorial(static_cast<unsigned>(k)) *
                         factorial(static_cast<unsigned>(n - 1 - k)));
    a.push_back(sign_power(n - k - 1) * dim * f(Rational(k)) / denom);
  }
  return a;
}

std::vector<Rational> schur(const Partition& lambda) {
  const int n = lambda.weight();
  const Partition dual = conjugate(lambda);
  std::vector<Rational> a;
  for (int k = 1; k < n; ++k)
    a.push_back(sign_power(n - k - 1) * Rational(n * binomial(n - 1, k) * schur_eval_ones(dual, k)));
  return a;
}

}  // namespace a_route

std::vector<Integer> a_coefficients(const Partition& lambda) {
  require_nontrivial(lambda);
  const auto reference = a_route::partial_fractions(lambda);
  const std::pair<const char*, std::vector<Rational>> others[] = {
      {"content product", a_route::content_product(lambda)},
      {"conjugate content", a_route::conjugate_content(lambda)},
      {"Schur", a_route::schur(lambda)},
  };
  for (const auto& [name, values] : others)
    if (values != reference)
      throw Error(Errc::RouteDisagreement,
                  std::string(name) + " route disagrees with partial fractions for " + to_string(lambda));
  std::vector<Integer> out;
  out.reserve(reference.size());
  for (const auto& r : reference) {
    if (!is_integer(r))
      throw Error(Errc::NonInteger, "a coefficient " + to_string(r) + " of " + to_string(lambda));
    out.push_back(num(r));
  }
  return out;
}

ACoeffTable a_coefficient_table(int n) {
  ACoeffTable t;
  t.n = n;
  t.rows = nontrivial_partitions(n);
  for (const auto& lambda : t.rows) t.entries.push_back(a_coefficients(lambda));
  return t;
}

TraceValue chi_H(const Partition& lambda) {
  const int n = lambda.weight();
  const Poly denom = Poly::monomial(Rational(factorial(static_cast<unsigned>(n))), static_cast<std::size_t>(n));
  return {rf_normalize(content_polynomial(lambda) * Rational(dimension(lambda)), denom)};
}

TraceValue chi_B(const Partition& lambda) {
  return {rf_normalize(content_polynomial(lambda) * Rational(dimension(lambda)),
                       trivial_content_polynomial(lambda.weight()))};
}

TraceValue morita_phi_factor(int n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "morita_phi_factor needs n >= 2");
  return {rf_normalize(Poly::monomial(Rational(factorial(static_cast<unsigned>(n))), static_cast<std::size_t>(n)),
                       trivial_content_polynomial(n))};
}

IdentityReport verify_sum_identity(int n) {
  Poly sum;
  for (const auto& lambda : enumerate_partitions(n)) {
    const Rational d(dimension(lambda));
    sum += content_polynomial(lambda) * (d * d);
  }
  const Poly expected = Poly::monomial(Rational(factorial(static_cast<unsigned>(n))), static_cast<std::size_t>(n));
  IdentityReport r;
  r.pass = sum == expected;
  r.detail = "sum dim^2 F = " + to_string(sum) + (r.pass ? " == " : " != ") + to_string(expected);
  return r;
}

}  // namespace morita
