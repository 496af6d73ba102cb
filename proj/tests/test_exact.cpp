#include <doctest.h>

#include "morita/error.hpp"
#include "morita/exact/polynomial.hpp"
#include "morita/exact/rational.hpp"
#include "morita/exact/rational_function.hpp"
#include "oracles.hpp"

using namespace morita;

namespace {

Poly P(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly(std::move(v));
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4 ") == Rational(-4));
  CHECK(parse_rational("+2/4") == Rational(1, 2));
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK(to_string(Rational(7)) == "7");
  CHECK(code_of([] { parse_rational("1/0"); }) == Errc::ZeroDenominator);
  CHECK(code_of([] { parse_rational("0.5"); }) == Errc::InvalidArgument);
  CHECK(code_of([] { parse_rational(""); }) == Errc::InvalidArgument);
  CHECK(code_of([] { to_integer(Rational(1, 3)); }) == Errc::NonInteger);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(9, 4) == 126);
  CHECK(binomial(3, 5) == 0);
}

TEST_CASE("rational values stay in lowest terms") {
  for (int t = 0; t < 200; ++t) {
    const Rational a = oracle::small_rational(20), b = oracle::small_rational(20);
    const Rational s = a + b;
    CHECK(den(s) > 0);
    CHECK(gcd(num(s), den(s)) == 1);
    CHECK(parse_rational(to_string(s)) == s);
  }
}

TEST_CASE("poly_eval") {
  CHECK(poly_eval(P({0, 0, 1}), Rational(-3)) == 9);
  CHECK(poly_eval(Poly::shifted_x(4) * Poly::shifted_x(5), Rational(-4)) == 0);
  CHECK(Poly::shifted_x(4) * Poly::shifted_x(5) == P({20, 9, 1}));
  CHECK(poly_eval(Poly{}, Rational(17, 3)) == 0);
}

TEST_CASE("polynomial structure") {
  CHECK(Poly{}.degree() == -1);
  CHECK(P({1, 2, 0, 0}).degree() == 1);
  CHECK(P({0, 0, 3}).derivative() == P({0, 6}));
  CHECK(to_string(P({2, -3, 1})) == "x^2 - 3x + 2");
  CHECK(gcd(P({0, -1, 1}) * P({3, 1}), P({0, 1, 1}) * P({3, 1})) == P({0, 3, 1}));
  CHECK(code_of([] { divmod(P({1, 1}), Poly{}); }) == Errc::ZeroDenominator);
}

TEST_CASE("division identity on random polynomials") {
  for (int t = 0; t < 100; ++t) {
    const Poly a = oracle::random_poly(6), b = oracle::random_poly(3);
    if (b.is_zero()) continue;
    const auto [q, r] = divmod(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("rf_normalize") {
  const auto a = rf_normalize(P({0, 2}), P({0, 0, 2}));
  CHECK(a.num() == P({1}));
  CHECK(a.den() == P({0, 1}));

  const Poly den = P({1, 1}) * P({2, 1});
  const auto b = rf_normalize(P({0, 6}), den);
  CHECK(b.num() == P({0, 6}));
  CHECK(b.den() == den);

  const auto c = rf_normalize(P({0, -1, 1}), P({0, 1, 1}));
  CHECK(c.num() == P({-1, 1}));
  CHECK(c.den() == P({1, 1}));

  CHECK(code_of([] { rf_normalize(P({1}), Poly{}); }) == Errc::ZeroDenominator);
  CHECK(rf_normalize(Poly{}, P({5, 2})).den() == P({1}));
}

TEST_CASE("rf_normalize is idempotent and preserves values") {
  for (int t = 0; t < 100; ++t) {
    const Poly n = oracle::random_poly(4), d = oracle::random_poly(4);
    if (d.is_zero()) continue;
    const auto f = rf_normalize(n, d);
    CHECK(rf_normalize(f.num(), f.den()) == f);
    CHECK(f.den().is_monic());
    CHECK(gcd(f.num(), f.den()).degree() <= 0);
    CHECK(f.num() * d == n * f.den());
  }
}

TEST_CASE("rational function arithmetic") {
  const RationalFunction f = rf_normalize(P({1}), P({1, 1}));
  const RationalFunction g = rf_normalize(P({1}), P({-1, 1}));
  CHECK(f + g == rf_normalize(P({0, 2}), P({-1, 0, 1})));
  CHECK((f - f).is_zero());
  CHECK(f / f == RationalFunction(Rational(1)));
  CHECK(f(Rational(1)) == Rational(1, 2));
  CHECK(code_of([&] { f(Rational(-1)); }) == Errc::ZeroDenominator);
}

TEST_CASE("partial_fractions") {
  const auto pf = partial_fractions(P({0, 6}), P({1, 1}) * P({2, 1}));
  CHECK(pf.residues.size() == 2);
  CHECK(pf.residue(-1) == -6);
  CHECK(pf.residue(-2) == 12);
  // oracle: 6x = a(x+2) + b(x+1) solved as a linear system
  const auto sol = oracle::residues_by_linear_system(P({0, 6}), {Rational(-1), Rational(-2)});
  CHECK(sol[0] == -6);
  CHECK(sol[1] == 12);

  const auto zero = partial_fractions(Poly{}, P({1, 1}));
  CHECK(zero.residues.size() == 1);
  CHECK(zero.residue(-1) == 0);

  CHECK(partial_fractions(P({2}), P({1, 1})).residue(-1) == 2);
}

TEST_CASE("partial_fractions errors") {
  CHECK(code_of([] { partial_fractions(P({0, 0, 1}), P({1, 1})); }) == Errc::DegreeError);
  CHECK(code_of([] { partial_fractions(P({1}), P({1, 2, 1})); }) == Errc::NonSimplePoles);
  CHECK(code_of([] { partial_fractions(P({1}), P({1, 0, 1})); }) == Errc::NonSimplePoles);
  CHECK(code_of([] { partial_fractions(P({1}), P({1, 2})); }) == Errc::NonSimplePoles);
}

TEST_CASE("partial fractions recombine and match the linear-system oracle") {
  for (int t = 0; t < 60; ++t) {
    const int m = oracle::uniform(1, 5);
    std::vector<Rational> roots;
    for (int r : oracle::distinct_ints(m, -9, 9)) roots.emplace_back(r);
    const Poly den = from_roots<Rational>(roots);
    const Poly top = oracle::random_poly(m - 1);
    const auto pf = partial_fractions(top, den);
    CHECK(pf.recombine() == rf_normalize(top, den));
    const auto sol = oracle::residues_by_linear_system(top, roots);
    for (std::size_t k = 0; k < roots.size(); ++k) CHECK(pf.residue(num(roots[k])) == sol[k]);
  }
}

TEST_CASE("rational_roots") {
  const auto a = rational_roots(P({20, 9, 1}));
  CHECK(a.roots == std::vector<Integer>{-5, -4});
  CHECK(a.remainder == P({1}));

  const auto b = rational_roots(P({1, 1, 1}));
  CHECK(b.roots.empty());
  CHECK(b.remainder == P({1, 1, 1}));

  const auto c = rational_roots(P({2, 3, 1}));
  CHECK(c.roots == std::vector<Integer>{-2, -1});

  const auto d = rational_roots(P({0, 0, -4, 0, 1}));  // x^2 (x-2)(x+2)
  CHECK(d.roots == std::vector<Integer>{-2, 0, 0, 2});

  CHECK(code_of([] { rational_roots(P({1, 2})); }) == Errc::NotMonicInteger);
  CHECK(rational_roots(P({1})).roots.empty());
}

TEST_CASE("rational_roots factor the input exactly") {
  for (int t = 0; t < 80; ++t) {
    std::vector<Integer> roots;
    const int m = oracle::uniform(0, 5);
    for (int i = 0; i < m; ++i) roots.emplace_back(oracle::uniform(-12, 12));
    Poly extra = Poly::constant(1);
    if (oracle::uniform(0, 1)) extra = P({oracle::uniform(1, 5), 0, 1});  // x^2 + c, no integer roots
    const Poly p = from_roots<Rational>(roots) * extra;
    const auto r = rational_roots(p);
    CHECK(from_roots<Rational>(r.roots) * r.remainder == p);
    std::sort(roots.begin(), roots.end());
    CHECK(r.roots == roots);
    CHECK(r.remainder == extra);
  }
}
