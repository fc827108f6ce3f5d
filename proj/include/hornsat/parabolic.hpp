#pragma once

// Parabolic slopes on V = k^r and the Harder-Narasimhan maximal
// contradictor. For generic flags the positions a subspace can occupy are
// exactly the nonvanishing K-tuples, so everything here runs over the
// tables of the Horn recursion.

#include <algorithm>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "hornsat/errors.hpp"
#include "hornsat/horn_criterion.hpp"
#include "hornsat/lr.hpp"
#include "hornsat/schubert.hpp"

namespace hornsat {

using Slope = boost::rational<long long>;

inline std::string format_slope(const Slope& x) {
  return std::to_string(x.numerator()) + "/" + std::to_string(x.denominator());
}

/// Integer weights w^j_1 >= ... >= w^j_r, one row per flag.
class ParabolicData {
 public:
  ParabolicData(int r, std::vector<std::vector<int>> weights) : r_(r), w_(std::move(weights)) {
    if (r < 1) throw InvalidArgument("parabolic data needs r >= 1");
    if (w_.empty()) throw InvalidArgument("parabolic data needs at least one flag");
    for (const auto& row : w_) {
      if (static_cast<int>(row.size()) != r) throw InvalidArgument("weight row must have r entries");
      if (!std::is_sorted(row.rbegin(), row.rend())) throw InvalidArgument("weights must be weakly decreasing");
    }
  }

  int r() const noexcept { return r_; }
  int s() const noexcept { return static_cast<int>(w_.size()); }
  /// w^j_a, both 1-based.
  int weight(int j, int a) const { return w_.at(static_cast<std::size_t>(j - 1)).at(static_cast<std::size_t>(a - 1)); }
  const std::vector<std::vector<int>>& rows() const noexcept { return w_; }

  ParabolicData scaled(int factor) const {
    if (factor < 1) throw InvalidArgument("scale factor must be positive");
    auto w = w_;
    for (auto& row : w)
      for (auto& x : row) x *= factor;
    return {r_, std::move(w)};
  }

 private:
  int r_;
  std::vector<std::vector<int>> w_;
};

inline ParabolicData weights_from_problem(const ProblemTuple& p) {
  if (p.r() < 1) throw InvalidArgument("parabolic data needs r >= 1");
  std::vector<std::vector<int>> w;
  for (const auto& idx : p.indices()) w.push_back(index_weights(idx));
  return {p.r(), std::move(w)};
}

/// mu(S) = (sum_j sum_{a in K^j} w^j_a) / d.
inline Slope slope(const ParabolicData& data, std::span<const SchubertIndex> ktuple) {
  if (static_cast<int>(ktuple.size()) != data.s()) throw InvalidArgument("need one subset per flag");
  const int d = ktuple.front().size();
  if (d < 1) throw InvalidArgument("slope needs d >= 1");
  long long total = 0;
  for (int j = 1; j <= data.s(); ++j) {
    const auto& k = ktuple[static_cast<std::size_t>(j - 1)];
    if (k.ambient() != data.r() || k.size() != d) throw InvalidArgument("subsets must be d-subsets of [r]");
    for (int a : k.elements()) total += data.weight(j, a);
  }
  return {total, d};
}

inline Slope total_slope(const ParabolicData& data) {
  const std::vector<SchubertIndex> full(static_cast<std::size_t>(data.s()), SchubertIndex::fundamental(data.r(), data.r()));
  return slope(data, full);
}

struct SlopeReport {
  int d = 0;
  std::vector<SchubertIndex> ktuple;
  Slope slope;
};

/// Nonvanishing K-tuples with 0 < d < r and slope above mu(V), ordered by
/// slope descending, then d descending, then K lexicographically.
inline std::vector<SlopeReport> contradictor_candidates(const ParabolicData& data, TableCache& cache) {
  const Slope mu = total_slope(data);
  std::vector<SlopeReport> out;
  for (int d = 1; d < data.r(); ++d)
    for (const auto& k : cache.get(d, data.r(), data.s())->tuples) {
      const Slope x = slope(data, k);
      if (x > mu) out.push_back({d, k, x});
    }
  std::stable_sort(out.begin(), out.end(), [](const SlopeReport& a, const SlopeReport& b) {
    if (a.slope != b.slope) return a.slope > b.slope;
    return a.d > b.d;
  });
  return out;
}

inline bool is_semistable(const ParabolicData& data, TableCache& cache) {
  const Slope mu = total_slope(data);
  for (int d = 1; d < data.r(); ++d)
    for (const auto& k : cache.get(d, data.r(), data.s())->tuples)
      if (slope(data, k) > mu) return false;
  return true;
}

enum class HNOutcome {
  semistable,                  ///< no contradictor; nothing to certify
  codimension_violation,       ///< sum of codimensions exceeds r(n-r)
  certificate,                 ///< violated inequality with point-class K-tuple
  unstable_without_violation,  ///< contradictor exists but its inequality holds
};

inline std::string to_string(HNOutcome o) {
  switch (o) {
    case HNOutcome::semistable: return "semistable";
    case HNOutcome::codimension_violation: return "codimension_violation";
    case HNOutcome::certificate: return "certificate";
    case HNOutcome::unstable_without_violation: return "unstable_without_violation";
  }
  return "?";
}

struct HNCertificate {
  SlopeReport contradictor;
  std::vector<SchubertIndex> ltuple;  ///< contradictor positions composed into [n]
  InequalityLHS violated;
  Coefficient point_check;  ///< point-class coefficient of the K-tuple in Gr(d, r)
};

struct HNResult {
  HNOutcome outcome = HNOutcome::semistable;
  Slope total;
  long codim_excess = 0;  ///< sum codim - r(n-r) when positive
  int candidates_tried = 0;
  std::optional<HNCertificate> certificate;
};

/// Turns instability into a violated inequality. The candidates are scanned
/// in contradictor order and the first whose K-tuple multiplies to exactly
/// the point class of Gr(d, r) is taken.
inline HNResult hn_certificate(const ProblemTuple& p, TableCache& cache) {
  HNResult res;
  const long excess = static_cast<long>(total_codim(p)) - static_cast<long>(p.r()) * (p.n() - p.r());
  if (excess > 0) {
    res.outcome = HNOutcome::codimension_violation;
    res.codim_excess = excess;
    return res;
  }
  const ParabolicData data = weights_from_problem(p);
  res.total = total_slope(data);
  const auto candidates = contradictor_candidates(data, cache);
  if (candidates.empty()) {
    res.outcome = HNOutcome::semistable;
    return res;
  }
  for (const auto& c : candidates) {
    ++res.candidates_tried;
    const IntersectionNumber num = intersection_number(ProblemTuple(c.d, p.r(), c.ktuple));
    if (!num.top_degree || num.value != 1) continue;
    HNCertificate cert;
    cert.contradictor = c;
    for (int j = 1; j <= p.s(); ++j)
      cert.ltuple.push_back(compose_positions(c.ktuple[static_cast<std::size_t>(j - 1)], p.index(j)));
    cert.violated = horn_lhs(p, c.ktuple);
    cert.point_check = num.value;
    res.outcome = cert.violated.violated() ? HNOutcome::certificate : HNOutcome::unstable_without_violation;
    res.certificate = std::move(cert);
    return res;
  }
  throw CandidatesExhausted("no contradictor candidate multiplies to the point class for " + format_problem(p));
}

}  // namespace hornsat
