#pragma once

// From K-theory data of a Morita equivalence B_c ~ B_c' to the parameter
// relation it forces.
//
// A class [P] = [B_c'] + sum_lambda n_lambda [eP_lambda~] determines
//   f(x) = prod_{k=1}^{n-1} (x+k) + sum_k a_k prod_{j != k} (x+j),
//   a_k = sum_lambda n_lambda a_{lambda,k},
// whose roots must form an arithmetic progression with unit difference q.
// The resulting relation is q (c + 1/2) = (c' + 1/2) + s with
// s = sum_k a_k / (n (n-1)).

#include <compare>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "morita/exact/linalg.hpp"
#include "morita/exact/polynomial.hpp"
#include "morita/partitions.hpp"
#include "morita/traces.hpp"

namespace morita {

/// Integer coordinates n_lambda on the reduced K-group, indexed by the
/// nontrivial partitions of n in descending lexicographic order.
class KTheoryVector {
 public:
  static KTheoryVector zero(int n);
  /// Error(InvalidArgument) if coords has the wrong length.
  static KTheoryVector from_coords(int n, std::vector<Integer> coords);

  int n() const { return n_; }
  const std::vector<Partition>& basis() const { return basis_; }
  const std::vector<Integer>& coords() const { return coords_; }

  /// Error(InvalidArgument) if lambda is not a nontrivial partition of n.
  const Integer& operator[](const Partition& lambda) const;
  KTheoryVector& set(const Partition& lambda, Integer value);

  bool is_zero() const;

  friend bool operator==(const KTheoryVector& a, const KTheoryVector& b) {
    return a.n_ == b.n_ && a.coords_ == b.coords_;
  }

 private:
  std::size_t index_of(const Partition& lambda) const;

  int n_ = 0;
  std::vector<Partition> basis_;
  std::vector<Integer> coords_;
};

std::string to_string(const KTheoryVector& v);

/// q (c + 1/2) = (c' + 1/2) + s with q = +1 or -1.
struct Relation {
  int q = 1;
  Integer s = 0;

  friend auto operator<=>(const Relation& a, const Relation& b) {
    if (auto c = b.q <=> a.q; c != 0) return c;  // q = +1 first
    if (a.s < b.s) return std::strong_ordering::less;
    if (a.s > b.s) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  friend bool operator==(const Relation&, const Relation&) = default;
};

/// "c = c' + 1", "c = -c' - 2", ...
std::string to_string(const Relation& r);

enum class RejectionReason { NonIntegerRoots, CommonDifferenceNotUnit, NotArithmeticProgression };

std::string_view to_string(RejectionReason r) noexcept;

struct Rejection {
  RejectionReason reason;
  /// Integer roots that were found, ascending.
  std::vector<Integer> roots;
  /// Factor of f without integer roots (constant 1 when f splits).
  Poly remainder;
  /// Consecutive differences of the ascending roots.
  std::vector<Integer> differences;
};

using Derivation = std::variant<std::vector<Relation>, Rejection>;

/// a_{lambda_m, k} with rows m = 1..n-1 for the hooks (m, 1^{n-m}) and
/// columns k = 1..n-1; zero below the diagonal.
ZMatrix hook_matrix(int n);

/// C with 1/(x+k) = sum_m C(k-1, m-1) G_{lambda_m}(x). The identity is
/// checked by exact recombination before returning.
RMatrix invert_hook_matrix(int n);

struct FData {
  Poly f;
  std::vector<Integer> a;  // a_k, entry k-1
};

FData build_f(const KTheoryVector& v);
/// Same, reusing a precomputed a_coefficient_table(v.n()).
FData build_f(const KTheoryVector& v, const ACoeffTable& table);

/// Relations consistent with the data, in (q, s) order, or the reason none is.
Derivation derive_relation(const KTheoryVector& v);
Derivation derive_relation(const KTheoryVector& v, const ACoeffTable& table);

/// sum_k a_k = n (n-1) sum_lambda K_{lambda', alpha} n_lambda, alpha = (2, 1^{n-2}).
IdentityReport remark_identity_check(const KTheoryVector& v);

/// s = sum_lambda K_{lambda', alpha} n_lambda.
Integer kostka_shift(const KTheoryVector& v);

/// Every vector with |n_lambda| <= bound, grouped by the relations it yields.
std::map<Relation, std::vector<KTheoryVector>> search_relations(int n, int bound);

/// prod_{k=1}^{n-1} (sign x + n l + k) x^n evaluated at x = -sign n l.
Rational iso_obstruction(int n, long l, int sign);

}  // namespace morita
