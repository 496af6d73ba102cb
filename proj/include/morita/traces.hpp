#pragma once

// Content polynomials and the Hattori-Stallings trace formulas for the
// rational Cherednik algebra H_c of S_n and its spherical subalgebra B_c.
//
// Every trace value is a rational function of x = n*c and stands for its
// coefficient on the basis vector Tr(1) of the one-dimensional trace group.

#include <string>
#include <vector>

#include "morita/exact/polynomial.hpp"
#include "morita/exact/rational_function.hpp"
#include "morita/partitions.hpp"

namespace morita {

struct TraceValue {
  RationalFunction value;
  friend bool operator==(const TraceValue&, const TraceValue&) = default;
};

/// Outcome of an exact identity check.
struct IdentityReport {
  bool pass = false;
  std::string detail;
};

/// F_lambda(x) = prod over cells (x + j - i).
Poly content_polynomial(const Partition& lambda);

/// F_triv(x) = x (x+1) ... (x+n-1).
Poly trivial_content_polynomial(int n);

/// G_lambda(x) = dim(lambda) (1 - F_lambda(x) / F_triv(x)), reduced.
/// Error(TrivialPartition) for lambda = (n).
RationalFunction g_function(const Partition& lambda);

/// The independent formulas for a_{lambda,k}, k = 1..n-1 (entry k-1). Each
/// returns exact rationals; none of them assumes integrality.
namespace a_route {
/// Residues of G_lambda at x = -k.
std::vector<Rational> partial_fractions(const Partition& lambda);
/// -dim(lambda) prod_cells (j - i - k) / prod_{l != k} (l - k).
std::vector<Rational> content_product(const Partition& lambda);
/// (-1)^{n-k-1} dim(lambda) F_{lambda'}(k) / (k! (n-1-k)!).
std::vector<Rational> conjugate_content(const Partition& lambda);
/// (-1)^{n-k-1} n C(n-1, k) s_{lambda'}(1^k).
std::vector<Rational> schur(const Partition& lambda);
}  // namespace a_route

/// Elementary-fraction coefficients of G_lambda = sum_k a_k / (x + k).
/// All routes must agree (Error RouteDisagreement) and every value must be
/// an integer (Error NonInteger).
std::vector<Integer> a_coefficients(const Partition& lambda);

/// a_{lambda,k} for every nontrivial lambda of n, rows in canonical order.
struct ACoeffTable {
  int n = 0;
  std::vector<Partition> rows;
  std::vector<std::vector<Integer>> entries;

  /// 1 <= k <= n-1
  const Integer& at(std::size_t row, int k) const {
    return entries[row][static_cast<std::size_t>(k - 1)];
  }
};

ACoeffTable a_coefficient_table(int n);

/// dim(lambda) F_lambda(x) / (n! x^n), the trace of P_lambda in HH_0(H_c).
TraceValue chi_H(const Partition& lambda);
/// dim(lambda) F_lambda(x) / F_triv(x), the trace of eP_lambda in HH_0(B_c).
TraceValue chi_B(const Partition& lambda);
/// n! x^n / F_triv(x): the image of Tr_{H_c}(1) under the Morita map.
TraceValue morita_phi_factor(int n);

/// sum_{lambda |- n} dim(lambda)^2 F_lambda(x) = n! x^n.
IdentityReport verify_sum_identity(int n);

}  // namespace morita
