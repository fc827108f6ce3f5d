#pragma once

// The recursive Horn criterion. A tuple in Gr(r,n) has nonzero product iff
// every inequality indexed by a nonvanishing (mode B) or point-class
// (mode C) K-tuple of Gr(d,r), 0 < d <= r, holds. Tables of such K-tuples
// are built by the same criterion one level down and memoized.

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <tuple>
#include <vector>

#include "hornsat/errors.hpp"
#include "hornsat/lr.hpp"
#include "hornsat/schubert.hpp"

namespace hornsat {

enum class HornMode { B, C };

inline std::string to_string(HornMode m) { return m == HornMode::B ? "B" : "C"; }

inline HornMode parse_mode(std::string_view s) {
  if (s == "B" || s == "b") return HornMode::B;
  if (s == "C" || s == "c") return HornMode::C;
  throw ParseError("mode must be B or C");
}

struct HornVerdict {
  bool nonzero = false;
  /// The first violated inequality, present iff nonzero is false.
  std::optional<InequalityLHS> witness;
  HornMode mode = HornMode::B;
  /// Number of nested Grassmannian levels the decision consulted.
  int trace_depth = 0;
};

/// s-tuples of d-subsets of [r] whose product in H*(Gr(d,r)) is nonzero,
/// and the subset whose product is exactly the point class.
struct NonvanishingTable {
  int d = 0;
  int r = 0;
  int s = 0;
  std::vector<std::vector<SchubertIndex>> tuples;
  std::vector<std::vector<SchubertIndex>> point_tuples;
  int depth = 0;

  const std::vector<std::vector<SchubertIndex>>& labels(HornMode m) const {
    return m == HornMode::B ? tuples : point_tuples;
  }
};

/// Label of one Horn inequality for Gr(r,n).
struct InequalityLabel {
  int d = 0;
  std::vector<SchubertIndex> ktuple;
  friend bool operator==(const InequalityLabel&, const InequalityLabel&) = default;
};

class TableCache;

namespace detail {
std::shared_ptr<const NonvanishingTable> compute_table(int d, int r, int s, TableCache& cache);
}

/// Memo of NonvanishingTable keyed by (d, r, s). Each key is written once
/// and read many times; safe to share between threads.
class TableCache {
 public:
  static constexpr int kDefaultDepthBound = 7;

  explicit TableCache(int depth_bound = kDefaultDepthBound) : depth_bound_(depth_bound) {}

  int depth_bound() const noexcept { return depth_bound_; }

  void check_depth(int r) const {
    if (r > depth_bound_)
      throw DepthExceeded("r = " + std::to_string(r) + " exceeds the depth bound " + std::to_string(depth_bound_));
  }

  std::shared_ptr<const NonvanishingTable> get(int d, int r, int s) {
    if (d <= 0 || d > r || s < 1) throw InvalidArgument("table needs 0 < d <= r and s >= 1");
    check_depth(r);
    const auto key = std::make_tuple(d, r, s);
    {
      std::shared_lock lock(mutex_);
      if (auto it = tables_.find(key); it != tables_.end()) return it->second;
    }
    auto table = detail::compute_table(d, r, s, *this);
    std::unique_lock lock(mutex_);
    return tables_.emplace(key, std::move(table)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return tables_.size();
  }

 private:
  int depth_bound_;
  mutable std::shared_mutex mutex_;
  std::map<std::tuple<int, int, int>, std::shared_ptr<const NonvanishingTable>> tables_;
};

/// Checks every inequality of the chosen family in order of increasing d,
/// K-tuples lexicographic; the first violation found is the witness.
inline HornVerdict horn_decide(const ProblemTuple& p, HornMode mode, TableCache& cache) {
  cache.check_depth(p.r());
  HornVerdict v;
  v.mode = mode;
  if (p.r() == 0) {
    // Gr(0,n) is a point and every index is empty.
    v.nonzero = true;
    v.trace_depth = 1;
    return v;
  }
  int depth = 0;
  for (int d = 1; d <= p.r(); ++d) {
    const auto table = cache.get(d, p.r(), p.s());
    depth = std::max(depth, table->depth);
    for (const auto& k : table->labels(mode)) {
      InequalityLHS lhs = horn_lhs(p, k);
      if (lhs.violated()) {
        v.nonzero = false;
        v.witness = std::move(lhs);
        v.trace_depth = depth + 1;
        return v;
      }
    }
  }
  v.nonzero = true;
  v.trace_depth = depth + 1;
  return v;
}

inline const NonvanishingTable& build_table(int d, int r, int s, TableCache& cache) {
  // The cache owns the table for its whole lifetime.
  return *cache.get(d, r, s);
}

inline std::vector<InequalityLabel> enumerate_inequalities(int r, int n, int s, HornMode mode, TableCache& cache) {
  if (r < 1 || n < r || s < 1) throw InvalidArgument("need 1 <= r <= n and s >= 1");
  cache.check_depth(r);
  std::vector<InequalityLabel> out;
  for (int d = 1; d <= r; ++d)
    for (const auto& k : cache.get(d, r, s)->labels(mode)) out.push_back({d, k});
  return out;
}

namespace detail {

inline std::shared_ptr<const NonvanishingTable> compute_table(int d, int r, int s, TableCache& cache) {
  auto t = std::make_shared<NonvanishingTable>();
  t->d = d;
  t->r = r;
  t->s = s;
  if (d == r) {
    // Gr(r,r) is a point: only the fundamental tuple, which is also the point class.
    std::vector<SchubertIndex> full(static_cast<std::size_t>(s), SchubertIndex::fundamental(r, r));
    t->tuples.push_back(full);
    t->point_tuples.push_back(std::move(full));
    t->depth = 0;
    return t;
  }
  int depth = 0;
  const int top = d * (r - d);
  for_each_tuple(all_indices(d, r), s, [&](const std::vector<SchubertIndex>& k) {
    ProblemTuple sub(d, r, k);
    const HornVerdict v = horn_decide(sub, HornMode::B, cache);
    depth = std::max(depth, v.trace_depth);
    if (!v.nonzero) return;
    t->tuples.push_back(k);
    if (total_codim(sub) == top && intersection_number(sub).value == 1) t->point_tuples.push_back(k);
  });
  t->depth = depth;
  return t;
}

}  // namespace detail

}  // namespace hornsat
