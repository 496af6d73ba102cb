#pragma once

#include <cstddef>
#include <vector>

#include "morita/exact/linalg.hpp"

namespace morita::poisson {

/// A finite group G of rational matrices preserving a skew form J on
/// V = Q^{2d}: g^T J g = J for every element.
class SymplecticAction {
 public:
  /// Breadth-first closure of the generators under multiplication.
  /// Error(NotSymplectic) if a generator or product breaks the form,
  /// Error(OrderCapExceeded) if the group grows past `cap` elements,
  /// Error(InvalidArgument) for shape problems or a degenerate / non-skew J.
  static SymplecticAction close(const std::vector<RMatrix>& generators, const RMatrix& form,
                                std::size_t cap = 5000);

  int dim() const { return static_cast<int>(form_.rows()); }
  const RMatrix& form() const { return form_; }
  /// Identity first, then breadth-first discovery order.
  const std::vector<RMatrix>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }

 private:
  RMatrix form_;
  std::vector<RMatrix> elements_;
};

/// Free-function spelling of SymplecticAction::close.
inline SymplecticAction close_group(const std::vector<RMatrix>& generators, const RMatrix& form,
                                    std::size_t cap = 5000) {
  return SymplecticAction::close(generators, form, cap);
}

/// [[0, I_d], [-I_d, 0]]
RMatrix standard_form(int d);

bool is_symplectic(const RMatrix& g, const RMatrix& form);

/// S_n acting on h + h*, where h is the reflection representation written in
/// the simple-root basis (integer matrices) and h* carries the contragredient
/// action; J is the canonical pairing between h and h*. n >= 2.
SymplecticAction symmetric_group_action(int n);

}  // namespace morita::poisson
