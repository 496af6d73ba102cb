#include "morita/poisson/homology.hpp"

#include <map>

#include "morita/error.hpp"

namespace morita::poisson {

namespace {

using MonomialIndex = std::map<Exponent, Eigen::Index>;

MonomialIndex index_monomials(const std::vector<Exponent>& ms) {
  MonomialIndex idx;
  for (std::size_t i = 0; i < ms.size(); ++i) idx.emplace(ms[i], static_cast<Eigen::Index>(i));
  return idx;
}

// Rows of the result are the coefficient vectors of the given polynomials.
RMatrix coefficient_rows(const std::vector<MultiPoly>& polys, const MonomialIndex& idx) {
  RMatrix m = RMatrix::Zero(static_cast<Eigen::Index>(polys.size()), static_cast<Eigen::Index>(idx.size()));
  for (std::size_t r = 0; r < polys.size(); ++r)
    for (const auto& [e, c] : polys[r].terms()) m(static_cast<Eigen::Index>(r), idx.at(e)) = c;
  return m;
}

std::vector<std::vector<MultiPoly>> invariant_bases(const SymplecticAction& action, int max_degree) {
  std::vector<std::vector<MultiPoly>> out;
  for (int d = 0; d <= max_degree; ++d) out.push_back(invariant_basis(action, d));
  return out;
}

int span_dim(const std::vector<std::vector<MultiPoly>>& bases, const RMatrix& form, int degree) {
  const int nvars = static_cast<int>(form.rows());
  std::vector<MultiPoly> brackets;
  for (int i = 1; 2 * i <= degree + 2; ++i) {
    const int j = degree + 2 - i;
    for (std::size_t a = 0; a < bases[static_cast<std::size_t>(i)].size(); ++a)
      for (std::size_t b = i == j ? a + 1 : 0; b < bases[static_cast<std::size_t>(j)].size(); ++b) {
        auto br = bracket(bases[static_cast<std::size_t>(i)][a], bases[static_cast<std::size_t>(j)][b], form);
        if (!br.is_zero()) brackets.push_back(std::move(br));
      }
  }
  if (brackets.empty()) return 0;
  return static_cast<int>(rank(coefficient_rows(brackets, index_monomials(monomials(nvars, degree)))));
}

// Left-hand side of the functional equation for each monomial x^e of the
// given degree, as polynomials in (u, v).
std::vector<MultiPoly> functional_images(const SymplecticAction& action, const std::vector<Exponent>& ms) {
  const int m = action.dim();
  const int uv = 2 * m;
  std::vector<MultiPoly> images(ms.size(), MultiPoly(uv));
  for (const auto& g : action.elements()) {
    const RMatrix jg = action.form() * g;
    MultiPoly pairing(uv);  // (u, g v) = u^T J g v
    for (int a = 0; a < m; ++a)
      for (int c = 0; c < m; ++c)
        if (jg(a, c) != 0) {
          Exponent e(static_cast<std::size_t>(uv), 0);
          ++e[static_cast<std::size_t>(a)];
          ++e[static_cast<std::size_t>(m + c)];
          pairing.add_term(e, jg(a, c));
        }
    std::vector<MultiPoly> shifted;  // u_i + (g v)_i
    for (int i = 0; i < m; ++i) {
      MultiPoly l = MultiPoly::variable(uv, i);
      for (int j = 0; j < m; ++j)
        if (g(i, j) != 0) l += MultiPoly::variable(uv, m + j) * g(i, j);
      shifted.push_back(std::move(l));
    }
    std::vector<std::vector<MultiPoly>> powers(static_cast<std::size_t>(m),
                                               {MultiPoly::constant(uv, 1)});
    for (std::size_t k = 0; k < ms.size(); ++k) {
      MultiPoly term = pairing;
      for (std::size_t i = 0; i < ms[k].size(); ++i) {
        auto& cache = powers[i];
        while (static_cast<int>(cache.size()) <= ms[k][i]) cache.push_back(cache.back() * shifted[i]);
        if (ms[k][i] > 0) term = term * cache[static_cast<std::size_t>(ms[k][i])];
      }
      images[k] += term;
    }
  }
  return images;
}

// Columns of the result: one column per unknown monomial coefficient.
RMatrix equation_matrix(const std::vector<MultiPoly>& columns) {
  MonomialIndex rows;
  for (const auto& p : columns)
    for (const auto& [e, c] : p.terms()) rows.try_emplace(e, static_cast<Eigen::Index>(rows.size()));
  RMatrix m = RMatrix::Zero(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(columns.size()));
  for (std::size_t k = 0; k < columns.size(); ++k)
    for (const auto& [e, c] : columns[k].terms()) m(rows.at(e), static_cast<Eigen::Index>(k)) = c;
  return m;
}

RMatrix invariance_matrix(const SymplecticAction& action, const std::vector<Exponent>& ms) {
  // One block of rows per group element: the coefficients of P(g x) - P(x).
  std::vector<MultiPoly> columns;
  RMatrix out(0, static_cast<Eigen::Index>(ms.size()));
  for (const auto& g : action.elements()) {
    columns.clear();
    for (const auto& e : ms) {
      const auto x = MultiPoly::monomial(e);
      columns.push_back(linear_substitute(x, g) - x);
    }
    const RMatrix block = equation_matrix(columns);
    RMatrix grown(out.rows() + block.rows(), out.cols());
    grown << out, block;
    out = std::move(grown);
  }
  return out;
}

}  // namespace

MultiPoly bracket(const MultiPoly& p, const MultiPoly& q, const RMatrix& form) {
  const int n = static_cast<int>(form.rows());
  if (p.nvars() != n || q.nvars() != n)
    throw Error(Errc::InvalidArgument, "bracket operands must live on V");
  const RMatrix pi = -inverse(form);
  std::vector<MultiPoly> dp, dq;
  for (int a = 0; a < n; ++a) {
    dp.push_back(p.derivative(a));
    dq.push_back(q.derivative(a));
  }
  MultiPoly r(n);
  for (int a = 0; a < n; ++a) {
    if (dp[static_cast<std::size_t>(a)].is_zero()) continue;
    for (int b = 0; b < n; ++b)
      if (pi(a, b) != 0 && !dq[static_cast<std::size_t>(b)].is_zero())
        r += (dp[static_cast<std::size_t>(a)] * dq[static_cast<std::size_t>(b)]) * pi(a, b);
  }
  return r;
}

MultiPoly reynolds(const SymplecticAction& action, const MultiPoly& p) {
  MultiPoly sum(action.dim());
  for (const auto& g : action.elements()) sum += linear_substitute(p, g);
  return sum * Rational(1, static_cast<long>(action.order()));
}

std::vector<MultiPoly> invariant_basis(const SymplecticAction& action, int degree) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  const int n = action.dim();
  const auto ms = monomials(n, degree);
  std::vector<MultiPoly> averages;
  for (const auto& e : ms) averages.push_back(reynolds(action, MultiPoly::monomial(e)));
  RMatrix m = coefficient_rows(averages, index_monomials(ms));
  const auto pivots = reduce_rows(m);
  std::vector<MultiPoly> basis;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    MultiPoly b(n);
    for (std::size_t c = 0; c < ms.size(); ++c)
      b.add_term(ms[c], m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)));
    basis.push_back(std::move(b));
  }
  return basis;
}

int bracket_span_dim(const SymplecticAction& action, int degree) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  return span_dim(invariant_bases(action, degree + 1), action.form(), degree);
}

int GradedDims::total() const {
  int t = 0;
  for (int d : dims) t += d;
  return t;
}

bool GradedDims::stabilized() const {
  const int tail = (max_degree + 3) / 4;
  for (int k = 0; k < tail; ++k)
    if (dims[static_cast<std::size_t>(max_degree - k)] != 0) return false;
  return true;
}

GradedDims hp0_dims(const SymplecticAction& action, int max_degree) {
  if (max_degree < 0) throw Error(Errc::InvalidArgument, "max_degree must be nonnegative");
  const auto bases = invariant_bases(action, max_degree + 1);
  GradedDims g;
  g.max_degree = max_degree;
  for (int d = 0; d <= max_degree; ++d) {
    const int a = static_cast<int>(bases[static_cast<std::size_t>(d)].size());
    g.invariant_dims.push_back(a);
    g.dims.push_back(a - span_dim(bases, action.form(), d));
  }
  return g;
}

std::vector<MultiPoly> functional_solutions(const SymplecticAction& action, int degree) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  const auto ms = monomials(action.dim(), degree);
  const RMatrix kernel = nullspace(equation_matrix(functional_images(action, ms)));
  std::vector<MultiPoly> out;
  for (Eigen::Index c = 0; c < kernel.cols(); ++c) {
    MultiPoly p(action.dim());
    for (std::size_t k = 0; k < ms.size(); ++k) p.add_term(ms[k], kernel(static_cast<Eigen::Index>(k), c));
    out.push_back(std::move(p));
  }
  return out;
}

int functional_solutions_dim(const SymplecticAction& action, int degree) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  const auto ms = monomials(action.dim(), degree);
  const RMatrix eq = equation_matrix(functional_images(action, ms));
  return static_cast<int>(ms.size()) - static_cast<int>(rank(eq));
}

int invariant_functional_solutions_dim(const SymplecticAction& action, int degree) {
  if (degree < 0) throw Error(Errc::InvalidArgument, "degree must be nonnegative");
  const auto ms = monomials(action.dim(), degree);
  const RMatrix eq = equation_matrix(functional_images(action, ms));
  const RMatrix inv = invariance_matrix(action, ms);
  RMatrix both(eq.rows() + inv.rows(), static_cast<Eigen::Index>(ms.size()));
  both << eq, inv;
  return static_cast<int>(ms.size()) - static_cast<int>(rank(both));
}

bool solves_functional_equation(const SymplecticAction& action, const MultiPoly& p) {
  if (p.nvars() != action.dim()) throw Error(Errc::InvalidArgument, "P must live on V");
  std::vector<Exponent> ms;
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : p.terms()) {
    ms.push_back(e);
    coeffs.push_back(c);
  }
  const auto images = functional_images(action, ms);
  MultiPoly total(2 * action.dim());
  for (std::size_t k = 0; k < ms.size(); ++k) total += images[k] * coeffs[k];
  return total.is_zero();
}

DualityReport duality_check(const SymplecticAction& action, int max_degree) {
  DualityReport r;
  r.hp0 = hp0_dims(action, max_degree).dims;
  for (int d = 0; d <= max_degree; ++d) {
    r.solutions.push_back(functional_solutions_dim(action, d));
    r.invariant_solutions.push_back(invariant_functional_solutions_dim(action, d));
  }
  r.pass = r.hp0 == r.solutions;
  r.invariant_pass = r.hp0 == r.invariant_solutions;
  return r;
}

}  // namespace morita::poisson
