#pragma once

// Partition combinatorics of the symmetric group S_n.

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "morita/exact/rational.hpp"

namespace morita {

/// A weakly decreasing sequence of positive integers. Weight, length and the
/// multiplicities mu_i (number of parts equal to i) are computed once on
/// construction.
class Partition {
 public:
  Partition() = default;
  /// Throws Error(InvalidArgument) unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  /// The hook (m, 1^{n-m}), 1 <= m <= n.
  static Partition hook(int m, int n);
  static Partition row(int n) { return Partition({n}); }
  static Partition column(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

  std::span<const int> parts() const { return parts_; }
  int weight() const { return weight_; }
  int length() const { return static_cast<int>(parts_.size()); }
  /// Number of parts equal to i (0 for i outside 1..largest part).
  int multiplicity(int i) const;
  /// Length of row i (0-based), 0 beyond the last row.
  int operator[](int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

  bool dominates(const Partition& other) const;

  /// Lexicographic on parts.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  std::vector<int> mult_;  // mult_[i-1] = mu_i
  int weight_ = 0;
};

/// "(2,1,1)"
std::string to_string(const Partition& p);

/// All partitions of n >= 1 in descending lexicographic order; the head is
/// (n), so the tail is the list of nontrivial irreducibles.
std::vector<Partition> enumerate_partitions(int n);

/// enumerate_partitions(n) without its head.
std::vector<Partition> nontrivial_partitions(int n);

Partition conjugate(const Partition& p);

/// Hook length of cell (i, j), 0-based.
int hook_length(const Partition& p, int i, int j);

/// n! / prod of hook lengths.
Integer dimension(const Partition& p);

/// {j - i : (i, j) in the diagram}, row by row.
std::vector<int> content_multiset(const Partition& p);

/// Semistandard tableaux of shape `shape` and content `content`, counted by
/// adding one horizontal strip per content entry. Error(WeightMismatch)
/// when the weights differ.
Integer kostka(const Partition& shape, const Partition& content);

/// m_sigma(1^k) = C(k, l) l! / prod mu_i!
Integer monomial_eval_ones(const Partition& sigma, int k);

/// s_lambda(1^k) through the Kostka expansion sum_sigma K_{lambda sigma} m_sigma(1^k).
Integer schur_ones_by_kostka(const Partition& lambda, int k);
/// s_lambda(1^k) through the hook-content product prod (k + j - i) / h(i, j).
Integer schur_ones_by_hook_content(const Partition& lambda, int k);
/// Both routes above; Error(InternalDisagreement) if they differ.
Integer schur_eval_ones(const Partition& lambda, int k);

}  // namespace morita
