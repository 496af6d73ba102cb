#pragma once

// Zeroth Poisson homology A/{A,A} of the invariant ring A = Q[V]^G, degree
// by degree, together with the dual description by the functional equation
//   sum_{g in G} (u, g v) P(u + g v) = 0   for all u, v in V,
// whose homogeneous degree-n solutions P are dual to (A/{A,A})_n.

#include <vector>

#include "morita/poisson/action.hpp"
#include "morita/poisson/multipoly.hpp"

namespace morita::poisson {

/// {p, q} = sum_{a,b} Pi(a,b) dp/dx_a dq/dx_b with Pi = -J^{-1}, so that the
/// linear functions (u, x) and (w, x) bracket to the constant (u, w). For
/// the standard form this is {x_i, x_{d+i}} = 1.
MultiPoly bracket(const MultiPoly& p, const MultiPoly& q, const RMatrix& form);

/// Reynolds average of p over the group.
MultiPoly reynolds(const SymplecticAction& action, const MultiPoly& p);

/// Basis of the degree-d invariants, in reduced echelon form with respect to
/// the descending monomial order.
std::vector<MultiPoly> invariant_basis(const SymplecticAction& action, int degree);

/// dim of sum_{i+j = degree+2, i,j >= 1} {A_i, A_j}.
int bracket_span_dim(const SymplecticAction& action, int degree);

struct GradedDims {
  int max_degree = 0;
  /// dims[n] = dim (A/{A,A})_n for n = 0..max_degree.
  std::vector<int> dims;
  /// dim A_n, for reference.
  std::vector<int> invariant_dims;

  int total() const;
  /// The last ceil(max_degree / 4) degrees are all zero. A heuristic, not a
  /// finiteness proof.
  bool stabilized() const;
};

GradedDims hp0_dims(const SymplecticAction& action, int max_degree);

/// Basis of the homogeneous degree-n polynomials P solving the functional
/// equation (no invariance imposed).
std::vector<MultiPoly> functional_solutions(const SymplecticAction& action, int degree);
int functional_solutions_dim(const SymplecticAction& action, int degree);
/// Dimension of the G-invariant solutions only.
int invariant_functional_solutions_dim(const SymplecticAction& action, int degree);

/// True when P satisfies the functional equation.
bool solves_functional_equation(const SymplecticAction& action, const MultiPoly& p);

struct DualityReport {
  /// hp0 == solutions in every degree.
  bool pass = false;
  /// hp0 == invariant_solutions in every degree.
  bool invariant_pass = false;
  std::vector<int> hp0;
  std::vector<int> solutions;
  std::vector<int> invariant_solutions;
};

/// Compares hp0_dims against functional_solutions_dim in every degree up to
/// max_degree, and separately against the G-invariant solution counts. The
/// two can differ: for S_3 on h + h* there is a non-invariant solution in
/// degree 2 while (A/{A,A})_2 = 0.
DualityReport duality_check(const SymplecticAction& action, int max_degree);

}  // namespace morita::poisson
