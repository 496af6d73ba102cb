#include "morita/poisson/action.hpp"

#include <algorithm>
#include <deque>

#include "morita/error.hpp"

namespace morita::poisson {

RMatrix standard_form(int d) {
  RMatrix j = RMatrix::Zero(2 * d, 2 * d);
  for (int i = 0; i < d; ++i) {
    j(i, d + i) = 1;
    j(d + i, i) = -1;
  }
  return j;
}

bool is_symplectic(const RMatrix& g, const RMatrix& form) {
  return g.rows() == form.rows() && g.cols() == form.cols() && RMatrix(g.transpose() * form * g) == form;
}

SymplecticAction SymplecticAction::close(const std::vector<RMatrix>& generators, const RMatrix& form,
                                         std::size_t cap) {
  const auto n = form.rows();
  if (form.cols() != n || n == 0 || n % 2 != 0)
    throw Error(Errc::InvalidArgument, "symplectic form must be square of even positive size");
  if (RMatrix(form.transpose()) != RMatrix(-form))
    throw Error(Errc::InvalidArgument, "form is not skew-symmetric");
  if (rank(form) != n) throw Error(Errc::InvalidArgument, "form is degenerate");

  for (std::size_t i = 0; i < generators.size(); ++i) {
    const auto& g = generators[i];
    if (g.rows() != n || g.cols() != n)
      throw Error(Errc::InvalidArgument, "generator " + std::to_string(i) + " has the wrong size");
    if (!is_symplectic(g, form))
      throw Error(Errc::NotSymplectic, "generator " + std::to_string(i) + " does not preserve the form");
  }

  SymplecticAction a;
  a.form_ = form;
  a.elements_.push_back(RMatrix::Identity(n, n));
  std::deque<std::size_t> frontier{0};
  while (!frontier.empty()) {
    const RMatrix current = a.elements_[frontier.front()];
    frontier.pop_front();
    for (const auto& g : generators) {
      RMatrix next = g * current;
      if (std::find(a.elements_.begin(), a.elements_.end(), next) != a.elements_.end()) continue;
      if (!is_symplectic(next, form)) throw Error(Errc::NotSymplectic, "a product leaves Sp(V)");
      if (a.elements_.size() >= cap)
        throw Error(Errc::OrderCapExceeded, "group order exceeds " + std::to_string(cap));
      a.elements_.push_back(std::move(next));
      frontier.push_back(a.elements_.size() - 1);
    }
  }
  return a;
}

SymplecticAction symmetric_group_action(int n) {
  if (n < 2) throw Error(Errc::InvalidArgument, "symmetric_group_action needs n >= 2");
  const int d = n - 1;
  // Simple reflection s_i on the root basis: alpha_j -> alpha_j - <alpha_i, alpha_j> alpha_i.
  auto cartan = [](int i, int j) { return i == j ? 2 : (std::abs(i - j) == 1 ? -1 : 0); };
  std::vector<RMatrix> gens;
  for (int i = 0; i < d; ++i) {
    RMatrix s = RMatrix::Identity(d, d);
    for (int j = 0; j < d; ++j) s(i, j) -= cartan(i, j);
    RMatrix g = RMatrix::Zero(2 * d, 2 * d);
    g.topLeftCorner(d, d) = s;
    g.bottomRightCorner(d, d) = inverse(s).transpose();
    gens.push_back(std::move(g));
  }
  return SymplecticAction::close(gens, standard_form(d));
}

}  // namespace morita::poisson
