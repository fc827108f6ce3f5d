#pragma once

// Littlewood-Richardson coefficients by exhaustive tableau enumeration and
// the resulting product on H*(Gr(r,n)). This is the ground truth the Horn
// recursion and the finite-field probe are checked against.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hornsat/errors.hpp"
#include "hornsat/schubert.hpp"

namespace hornsat {

using Coefficient = boost::multiprecision::cpp_int;

/// Asks for c^outer_{inner, weight}: the number of LR skew tableaux of shape
/// outer/inner and content weight.
struct LRCountRequest {
  Partition outer;
  Partition inner;
  Partition weight;
};

namespace detail {

class LRCounter {
 public:
  LRCounter(const Partition& outer, const Partition& inner, const Partition& content)
      : outer_(outer.parts().begin(), outer.parts().end()),
        content_(content.parts().begin(), content.parts().end()),
        used_(content_.size() + 1, 0) {
    inner_.assign(outer_.size(), 0);
    for (int a = 1; a <= inner.length(); ++a) inner_[static_cast<std::size_t>(a - 1)] = inner.part(a);
    fill_.resize(outer_.size());
    for (std::size_t i = 0; i < outer_.size(); ++i) fill_[i].assign(static_cast<std::size_t>(outer_[i]), 0);
  }

  std::uint64_t count() {
    total_ = 0;
    if (!outer_.empty()) place(0, outer_[0] - 1);
    else total_ = content_.empty() ? 1 : 0;
    return total_;
  }

 private:
  // Cells are filled in reverse reading order: rows top to bottom, each row
  // right to left. The lattice condition is then a prefix condition.
  void place(std::size_t row, int col) {
    if (col < inner_[row]) {
      if (row + 1 == outer_.size()) {
        ++total_;
        return;
      }
      place(row + 1, outer_[row + 1] - 1);
      return;
    }
    const int kinds = static_cast<int>(content_.size());
    int hi = kinds;
    if (col + 1 < outer_[row]) hi = std::min(hi, fill_[row][static_cast<std::size_t>(col + 1)]);
    // Lattice words put at most row+1 in row `row` (0-based).
    hi = std::min(hi, static_cast<int>(row) + 1);
    int lo = 1;
    if (row > 0 && col >= inner_[row - 1] && col < outer_[row - 1]) lo = fill_[row - 1][static_cast<std::size_t>(col)] + 1;
    for (int v = lo; v <= hi; ++v) {
      if (used_[static_cast<std::size_t>(v)] >= content_[static_cast<std::size_t>(v - 1)]) continue;
      if (v > 1 && used_[static_cast<std::size_t>(v)] + 1 > used_[static_cast<std::size_t>(v - 1)]) continue;
      ++used_[static_cast<std::size_t>(v)];
      fill_[row][static_cast<std::size_t>(col)] = v;
      place(row, col - 1);
      --used_[static_cast<std::size_t>(v)];
    }
    fill_[row][static_cast<std::size_t>(col)] = 0;
  }

  std::vector<int> outer_;
  std::vector<int> inner_;
  std::vector<int> content_;
  std::vector<int> used_;
  std::vector<std::vector<int>> fill_;
  std::uint64_t total_ = 0;
};

}  // namespace detail

inline Coefficient lr_coefficient(const LRCountRequest& req) {
  if (!req.outer.contains(req.inner)) return 0;
  if (req.outer.weight() != req.inner.weight() + req.weight.weight()) return 0;
  if (req.weight.length() > req.outer.length()) return 0;
  return Coefficient(detail::LRCounter(req.outer, req.inner, req.weight).count());
}

/// Sparse nonnegative combination of Schubert classes sigma_lambda in
/// H*(Gr(r,n)); every key fits the r x (n-r) rectangle and no stored
/// coefficient is zero.
class CohomClass {
 public:
  using Terms = std::map<Partition, Coefficient>;

  CohomClass(int r, int n) : r_(r), n_(n) {
    if (r < 0 || n < r) throw InvalidArgument("need 0 <= r <= n");
  }

  static CohomClass unit(int r, int n) { return schubert(Partition{}, r, n); }

  /// sigma_lambda, or zero when lambda leaves the rectangle.
  static CohomClass schubert(const Partition& lambda, int r, int n) {
    CohomClass c(r, n);
    if (lambda.fits(r, n - r)) c.terms_.emplace(lambda, 1);
    return c;
  }

  static CohomClass of_index(const SchubertIndex& idx) {
    return schubert(index_to_partition(idx), idx.size(), idx.ambient());
  }

  int r() const noexcept { return r_; }
  int n() const noexcept { return n_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  Coefficient coefficient(const Partition& lambda) const {
    const auto it = terms_.find(lambda);
    return it == terms_.end() ? Coefficient(0) : it->second;
  }

  /// Coefficient of the point class ((n-r)^r).
  Coefficient point_coefficient() const {
    return coefficient(Partition(std::vector<int>(static_cast<std::size_t>(r_), n_ - r_)));
  }

  void add(const Partition& lambda, const Coefficient& c) {
    if (c == 0) return;
    if (!lambda.fits(r_, n_ - r_)) throw RectangleOverflow("term outside the rectangle");
    auto& slot = terms_[lambda];
    slot += c;
    if (slot == 0) terms_.erase(lambda);
  }

  friend bool operator==(const CohomClass& a, const CohomClass& b) {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int r_;
  int n_;
  Terms terms_;
};

namespace detail {

inline void partitions_between(const Partition& inner, int rows, int cols, int weight,
                               std::vector<Partition>& out) {
  std::vector<int> cur;
  std::function<void(int, int, int)> rec = [&](int row, int bound, int left) {
    if (row == rows) {
      if (left == 0) out.emplace_back(cur);
      return;
    }
    const int lo = inner.part(row + 1);
    for (int x = std::min(bound, lo + left); x >= lo; --x) {
      cur.push_back(x);
      rec(row + 1, x, left - (x - lo));
      cur.pop_back();
    }
  };
  if (inner.fits(rows, cols)) rec(0, cols, weight - inner.weight());
}

/// Memo of sigma_lambda * sigma_mu inside the r x (n-r) rectangle, shared by
/// all callers; readers never block each other.
class PairProductMemo {
 public:
  using Key = std::tuple<int, int, Partition, Partition>;
  using Value = std::shared_ptr<const std::vector<std::pair<Partition, Coefficient>>>;

  static PairProductMemo& instance() {
    static PairProductMemo memo;
    return memo;
  }

  Value get(const Partition& a, const Partition& b, int r, int n) {
    Key key{r, n, std::min(a, b), std::max(a, b)};
    {
      std::shared_lock lock(mutex_);
      if (auto it = table_.find(key); it != table_.end()) return it->second;
    }
    auto value = std::make_shared<std::vector<std::pair<Partition, Coefficient>>>();
    const Partition& lam = std::get<2>(key);
    const Partition& mu = std::get<3>(key);
    std::vector<Partition> candidates;
    partitions_between(lam, r, n - r, lam.weight() + mu.weight(), candidates);
    for (const auto& nu : candidates) {
      if (!nu.contains(mu)) continue;
      Coefficient c = lr_coefficient({nu, lam, mu});
      if (c != 0) value->emplace_back(nu, std::move(c));
    }
    std::unique_lock lock(mutex_);
    return table_.emplace(std::move(key), std::move(value)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<Key, Value> table_;
};

}  // namespace detail

/// Bilinear product, truncated to the rectangle.
inline CohomClass product(const CohomClass& a, const CohomClass& b) {
  if (a.r() != b.r() || a.n() != b.n()) throw RectangleMismatch("classes live in different Grassmannians");
  CohomClass out(a.r(), a.n());
  for (const auto& [lam, ca] : a.terms())
    for (const auto& [mu, cb] : b.terms()) {
      const auto pairs = detail::PairProductMemo::instance().get(lam, mu, a.r(), a.n());
      for (const auto& [nu, c] : *pairs) out.add(nu, ca * cb * c);
    }
  return out;
}

/// prod_j omega_{I^j}, folded left.
inline CohomClass product_of(const ProblemTuple& p) {
  CohomClass acc = CohomClass::unit(p.r(), p.n());
  for (const auto& idx : p.indices()) {
    acc = product(acc, CohomClass::of_index(idx));
    if (acc.is_zero()) break;
  }
  return acc;
}

struct IntersectionNumber {
  Coefficient value;
  /// False when the total codimension is not r(n-r); value is then 0.
  bool top_degree = false;
};

inline IntersectionNumber intersection_number(const ProblemTuple& p) {
  if (total_codim(p) != p.r() * (p.n() - p.r())) return {0, false};
  return {product_of(p).point_coefficient(), true};
}

/// Whether prod_j omega_{I^j} is nonzero in any degree.
inline bool is_nonzero_product(const ProblemTuple& p) {
  if (expected_dim(p) < 0) return false;
  return !product_of(p).is_zero();
}

struct SaturationResult {
  bool p1 = false;  ///< prod sigma_{lambda, l} != 0 in Gr(r, r + l)
  bool p2 = false;  ///< prod sigma_{N lambda, N l} != 0 in Gr(r, r + N l)
  bool equivalent() const noexcept { return p1 == p2; }
};

/// Nonvanishing of prod_k sigma_{lambda_k, l} and of its N-fold dilation.
inline SaturationResult saturation_check(std::span<const Partition> parts, int r, int ell, int factor) {
  if (r < 1 || ell < 1 || factor < 1) throw InvalidArgument("need r, l, N >= 1");
  for (const auto& p : parts) {
    if (p.length() > r) throw InvalidArgument("partition has more than r parts");
    if (p.width() > ell) throw WidthOverflow("partition wider than l");
  }
  auto nonzero = [&](int scale) {
    const int n = r + scale * ell;
    int degree = 0;
    for (const auto& p : parts) degree += scale * p.weight();
    if (degree > r * (n - r)) return false;
    CohomClass acc = CohomClass::unit(r, n);
    for (const auto& p : parts) {
      acc = product(acc, CohomClass::schubert(p.scaled(scale), r, n));
      if (acc.is_zero()) return false;
    }
    return true;
  };
  return {nonzero(1), nonzero(factor)};
}

}  // namespace hornsat
