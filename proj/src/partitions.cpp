#include "morita/partitions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "morita/error.hpp"

namespace morita {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error(Errc::InvalidArgument, "partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw Error(Errc::InvalidArgument, "partition parts must be weakly decreasing");
  }
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  mult_.assign(parts_.empty() ? 0 : static_cast<std::size_t>(parts_.front()), 0);
  for (int p : parts_) ++mult_[static_cast<std::size_t>(p - 1)];
}

Partition Partition::hook(int m, int n) {
  if (m < 1 || m > n) throw Error(Errc::InvalidArgument, "hook (m, 1^{n-m}) needs 1 <= m <= n");
  std::vector<int> parts(static_cast<std::size_t>(n - m + 1), 1);
  parts[0] = m;
  return Partition(std::move(parts));
}

int Partition::multiplicity(int i) const {
  if (i < 1 || i > static_cast<int>(mult_.size())) return 0;
  return mult_[static_cast<std::size_t>(i - 1)];
}

bool Partition::dominates(const Partition& other) const {
  if (weight_ != other.weight_) return false;
  int a = 0, b = 0;
  for (int i = 0; i < std::max(length(), other.length()); ++i) {
    a += (*this)[i];
    b += other[i];
    if (a < b) return false;
  }
  return true;
}

std::string to_string(const Partition& p) {
  std::string s = "(";
  for (int i = 0; i < p.length(); ++i) {
    if (i > 0) s += ",";
    s += std::to_string(p[i]);
  }
  return s + ")";
}

std::vector<Partition> enumerate_partitions(int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "enumerate_partitions needs n >= 1");
  std::vector<Partition> out;
  std::vector<int> a{n};
  while (true) {
    out.emplace_back(a);
    // Rightmost part larger than 1; everything after it is a run of ones.
    auto i = static_cast<int>(a.size()) - 1;
    while (i >= 0 && a[static_cast<std::size_t>(i)] == 1) --i;
    if (i < 0) break;
    int rem = static_cast<int>(a.size()) - i;  // the ones plus the unit taken from a[i]
    const int v = --a[static_cast<std::size_t>(i)];
    a.resize(static_cast<std::size_t>(i + 1));
    while (rem > v) {
      a.push_back(v);
      rem -= v;
    }
    a.push_back(rem);
  }
  return out;
}

std::vector<Partition> nontrivial_partitions(int n) {
  auto all = enumerate_partitions(n);
  all.erase(all.begin());
  return all;
}

Partition conjugate(const Partition& p) {
  std::vector<int> cols(static_cast<std::size_t>(p[0]), 0);
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) ++cols[static_cast<std::size_t>(j)];
  return Partition(std::move(cols));
}

int hook_length(const Partition& p, int i, int j) {
  int below = 0;
  for (int r = i + 1; r < p.length() && p[r] > j; ++r) ++below;
  return p[i] - j + below;
}

Integer dimension(const Partition& p) {
  Integer hooks = 1;
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) hooks *= hook_length(p, i, j);
  return factorial(static_cast<unsigned>(p.weight())) / hooks;
}

std::vector<int> content_multiset(const Partition& p) {
  std::vector<int> c;
  c.reserve(static_cast<std::size_t>(p.weight()));
  for (int i = 0; i < p.length(); ++i)
    for (int j = 0; j < p[i]; ++j) c.push_back(j - i);
  return c;
}

// ---------------------------------------------------------------------------

namespace {

class StripCounter {
 public:
  StripCounter(const Partition& shape, const Partition& content) : shape_(shape), content_(content) {}

  Integer count(int step, const std::vector<int>& inner) {
    if (step == content_.length()) return 1;
    const auto key = std::make_pair(step, inner);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Integer total = 0;
    std::vector<int> outer = inner;
    extend(step, inner, outer, 0, content_[step], total);
    memo_.emplace(key, total);
    return total;
  }

 private:
  // Add `left` boxes to rows >= row so that outer/inner is a horizontal strip
  // inside the shape.
  void extend(int step, const std::vector<int>& inner, std::vector<int>& outer, int row, int left,
              Integer& total) {
    if (left == 0) {
      total += count(step + 1, outer);
      return;
    }
    if (row == shape_.length()) return;
    const auto r = static_cast<std::size_t>(row);
    const int cap = row == 0 ? shape_[0] : std::min(shape_[row], inner[r - 1]);
    for (int add = 0; add <= std::min(left, cap - inner[r]); ++add) {
      outer[r] = inner[r] + add;
      extend(step, inner, outer, row + 1, left - add, total);
    }
    outer[r] = inner[r];
  }

  const Partition& shape_;
  const Partition& content_;
  std::map<std::pair<int, std::vector<int>>, Integer> memo_;
};

}  // namespace

Integer kostka(const Partition& shape, const Partition& content) {
  if (shape.weight() != content.weight())
    throw Error(Errc::WeightMismatch, "kostka " + to_string(shape) + " vs " + to_string(content));
  StripCounter counter(shape, content);
  return counter.count(0, std::vector<int>(static_cast<std::size_t>(shape.length()), 0));
}

Integer monomial_eval_ones(const Partition& sigma, int k) {
  const int l = sigma.length();
  if (k < l) return 0;
  Integer r = binomial(k, l) * factorial(static_cast<unsigned>(l));
  for (int i = 1; i <= sigma[0]; ++i) r /= factorial(static_cast<unsigned>(sigma.multiplicity(i)));
  return r;
}

Integer schur_ones_by_kostka(const Partition& lambda, int k) {
  if (lambda.weight() == 0) return 1;
  Integer sum = 0;
  for (const auto& sigma : enumerate_partitions(lambda.weight()))
    sum += kostka(lambda, sigma) * monomial_eval_ones(sigma, k);
  return sum;
}

Integer schur_ones_by_hook_content(const Partition& lambda, int k) {
  Rational prod = 1;
  for (int i = 0; i < lambda.length(); ++i)
    for (int j = 0; j < lambda[i]; ++j) prod *= Rational(k + j - i, hook_length(lambda, i, j));
  return to_integer(prod);
}

Integer schur_eval_ones(const Partition& lambda, int k) {
  const Integer a = schur_ones_by_kostka(lambda, k);
  const Integer b = schur_ones_by_hook_content(lambda, k);
  if (a != b)
    throw Error(Errc::InternalDisagreement, "s_" + to_string(lambda) + "(1^" + std::to_string(k) +
                                                "): Kostka route " + a.str() + " vs hook-content " +
                                                b.str());
  return a;
}

}  // namespace morita
