#pragma once

// Combinatorics of Schubert classes in Gr(r,n): indices, partitions,
// codimensions, expected dimensions and the Horn inequality left-hand side.
// Every position is 1-based.

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hornsat/errors.hpp"

namespace hornsat {

/// Strictly increasing subset {i_1 < ... < i_r} of [n]; the label of a
/// Schubert class omega_I in H*(Gr(r,n)).
class SchubertIndex {
 public:
  SchubertIndex() = default;

  SchubertIndex(int n, std::vector<int> elems) : n_(n), elems_(std::move(elems)) {
    if (n_ < 0) throw InvalidArgument("ambient dimension must be nonnegative");
    if (static_cast<int>(elems_.size()) > n_) throw InvalidArgument("index has more elements than its ambient dimension");
    for (std::size_t a = 0; a < elems_.size(); ++a) {
      if (elems_[a] < 1 || elems_[a] > n_) throw InvalidArgument("index element out of range [1, n]");
      if (a > 0 && elems_[a] <= elems_[a - 1]) throw InvalidArgument("index elements must be strictly increasing");
    }
  }

  /// {n-r+1, ..., n}: the fundamental class.
  static SchubertIndex fundamental(int r, int n) {
    std::vector<int> e(static_cast<std::size_t>(r));
    std::iota(e.begin(), e.end(), n - r + 1);
    return {n, std::move(e)};
  }

  /// {1, ..., r}: the class of a point.
  static SchubertIndex point(int r, int n) {
    std::vector<int> e(static_cast<std::size_t>(r));
    std::iota(e.begin(), e.end(), 1);
    return {n, std::move(e)};
  }

  int ambient() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(elems_.size()); }
  bool empty() const noexcept { return elems_.empty(); }
  std::span<const int> elements() const noexcept { return elems_; }

  /// i_a for 1 <= a <= size().
  int at(int a) const { return elems_.at(static_cast<std::size_t>(a - 1)); }

  bool contains(int i) const { return std::binary_search(elems_.begin(), elems_.end(), i); }

  friend bool operator==(const SchubertIndex&, const SchubertIndex&) = default;
  friend auto operator<=>(const SchubertIndex&, const SchubertIndex&) = default;

 private:
  int n_ = 0;
  std::vector<int> elems_;
};

/// Weakly decreasing sequence of nonnegative integers with trailing zeros
/// removed, so that structural equality is equality of partitions.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t a = 0; a < parts_.size(); ++a) {
      if (parts_[a] < 0) throw InvalidArgument("partition parts must be nonnegative");
      if (a > 0 && parts_[a] > parts_[a - 1]) throw InvalidArgument("partition parts must weakly decrease");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  }

  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int weight() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }
  bool empty() const noexcept { return parts_.empty(); }
  std::span<const int> parts() const noexcept { return parts_; }

  /// lambda_a for a >= 1, zero past the last part.
  int part(int a) const noexcept { return a >= 1 && a <= length() ? parts_[static_cast<std::size_t>(a - 1)] : 0; }

  int width() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  bool fits(int rows, int cols) const noexcept { return length() <= rows && width() <= cols; }

  /// Young diagram containment: inner is contained in *this.
  bool contains(const Partition& inner) const noexcept {
    if (inner.length() > length()) return false;
    for (int a = 1; a <= inner.length(); ++a)
      if (inner.part(a) > part(a)) return false;
    return true;
  }

  Partition scaled(int factor) const {
    std::vector<int> p = parts_;
    for (int& x : p) x *= factor;
    return Partition(std::move(p));
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// An s-tuple of Schubert indices in Gr(r,n).
class ProblemTuple {
 public:
  ProblemTuple(int r, int n, std::vector<SchubertIndex> indices) : r_(r), n_(n), indices_(std::move(indices)) {
    if (r_ < 0 || n_ < r_) throw InvalidArgument("need 0 <= r <= n");
    if (indices_.empty()) throw InvalidArgument("a problem needs at least one index");
    for (const auto& idx : indices_)
      if (idx.size() != r_ || idx.ambient() != n_) throw InvalidArgument("every index must have r elements in [n]");
  }

  int r() const noexcept { return r_; }
  int n() const noexcept { return n_; }
  int s() const noexcept { return static_cast<int>(indices_.size()); }
  const std::vector<SchubertIndex>& indices() const noexcept { return indices_; }
  const SchubertIndex& index(int j) const { return indices_.at(static_cast<std::size_t>(j - 1)); }

  friend bool operator==(const ProblemTuple&, const ProblemTuple&) = default;

 private:
  int r_;
  int n_;
  std::vector<SchubertIndex> indices_;
};

/// Left-hand side of the Horn inequality for sub-dimension d and a K-tuple
/// of d-subsets of [r]. The inequality holds when value <= 0.
struct InequalityLHS {
  int d = 0;
  std::vector<SchubertIndex> ktuple;
  long value = 0;

  bool violated() const noexcept { return value > 0; }
  friend bool operator==(const InequalityLHS&, const InequalityLHS&) = default;
};

/// Parabolic weights n - r + a - i_a, a = 1..r. They weakly decrease in a.
inline std::vector<int> index_weights(const SchubertIndex& idx) {
  const int r = idx.size();
  const int n = idx.ambient();
  std::vector<int> w(static_cast<std::size_t>(r));
  for (int a = 1; a <= r; ++a) w[static_cast<std::size_t>(a - 1)] = n - r + a - idx.at(a);
  return w;
}

inline int codim(const SchubertIndex& idx) {
  const auto w = index_weights(idx);
  return std::accumulate(w.begin(), w.end(), 0);
}

inline Partition index_to_partition(const SchubertIndex& idx) { return Partition(index_weights(idx)); }

/// i_a = (n - r) + a - lambda_a. Throws RectangleOverflow outside r x (n-r).
inline SchubertIndex partition_to_index(const Partition& lambda, int r, int n) {
  if (r < 0 || n < r) throw InvalidArgument("need 0 <= r <= n");
  if (!lambda.fits(r, n - r)) throw RectangleOverflow("partition does not fit the r x (n-r) rectangle");
  std::vector<int> e(static_cast<std::size_t>(r));
  for (int a = 1; a <= r; ++a) e[static_cast<std::size_t>(a - 1)] = n - r + a - lambda.part(a);
  return {n, std::move(e)};
}

/// I^v = { n+1-i : i in [n] \ I }, an index of Gr(n-r, n).
inline SchubertIndex dual_index(const SchubertIndex& idx) {
  const int n = idx.ambient();
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(n - idx.size()));
  for (int i = n; i >= 1; --i)
    if (!idx.contains(i)) e.push_back(n + 1 - i);
  return {n, std::move(e)};
}

inline ProblemTuple dual_problem(const ProblemTuple& p) {
  std::vector<SchubertIndex> d;
  d.reserve(p.indices().size());
  for (const auto& idx : p.indices()) d.push_back(dual_index(idx));
  return {p.n() - p.r(), p.n(), std::move(d)};
}

inline int total_codim(const ProblemTuple& p) {
  int c = 0;
  for (const auto& idx : p.indices()) c += codim(idx);
  return c;
}

/// r(n-r) minus the total codimension. May be negative.
inline int expected_dim(const ProblemTuple& p) { return p.r() * (p.n() - p.r()) - total_codim(p); }

/// {i_a : a in K} for K a subset of [r] and I an r-subset of [n].
inline SchubertIndex compose_positions(const SchubertIndex& k, const SchubertIndex& i) {
  if (k.ambient() != i.size()) throw InvalidArgument("K must be a subset of [|I|]");
  std::vector<int> e;
  e.reserve(static_cast<std::size_t>(k.size()));
  for (int a : k.elements()) e.push_back(i.at(a));
  return {i.ambient(), std::move(e)};
}

namespace detail {

inline int common_size(const ProblemTuple& p, std::span<const SchubertIndex> ktuple) {
  if (static_cast<int>(ktuple.size()) != p.s()) throw InvalidArgument("K-tuple must have one subset per index");
  const int d = ktuple.front().size();
  for (const auto& k : ktuple)
    if (k.ambient() != p.r() || k.size() != d) throw InvalidArgument("K-tuple entries must be d-subsets of [r]");
  return d;
}

}  // namespace detail

/// sum_j sum_{a in K^j} (n - r + a - i^j_a) - d(n - r).
inline InequalityLHS horn_lhs(const ProblemTuple& p, std::span<const SchubertIndex> ktuple) {
  const int d = detail::common_size(p, ktuple);
  long v = -static_cast<long>(d) * (p.n() - p.r());
  for (int j = 1; j <= p.s(); ++j) {
    const auto& idx = p.index(j);
    for (int a : ktuple[static_cast<std::size_t>(j - 1)].elements()) v += p.n() - p.r() + a - idx.at(a);
  }
  return {d, std::vector<SchubertIndex>(ktuple.begin(), ktuple.end()), v};
}

/// The d = 0 inequality 0 <= 0.
inline InequalityLHS horn_lhs_empty(const ProblemTuple& p) {
  return {0, std::vector<SchubertIndex>(static_cast<std::size_t>(p.s()), SchubertIndex(p.r(), {})), 0};
}

/// Evaluates dim(S,V,E(V)) - dim(S,W,E) through the composed L-tuple and,
/// separately, through horn_lhs. Throws IdentityViolation if they differ.
inline long dim_difference_identity(const ProblemTuple& p, std::span<const SchubertIndex> ktuple) {
  const int d = detail::common_size(p, ktuple);
  std::vector<SchubertIndex> ls;
  ls.reserve(ktuple.size());
  for (int j = 1; j <= p.s(); ++j) ls.push_back(compose_positions(ktuple[static_cast<std::size_t>(j - 1)], p.index(j)));
  const long in_v = expected_dim(ProblemTuple(d, p.r(), std::vector<SchubertIndex>(ktuple.begin(), ktuple.end())));
  const long in_w = expected_dim(ProblemTuple(d, p.n(), std::move(ls)));
  const long lhs = horn_lhs(p, ktuple).value;
  if (in_v - in_w != lhs) throw IdentityViolation("dimension difference disagrees with the Horn left-hand side");
  return lhs;
}

// ---------------------------------------------------------------------------
// Enumeration

/// All r-subsets of [n] in lexicographic order.
inline std::vector<SchubertIndex> all_indices(int r, int n) {
  std::vector<SchubertIndex> out;
  if (r < 0 || r > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  std::iota(cur.begin(), cur.end(), 1);
  while (true) {
    out.emplace_back(n, cur);
    int a = r - 1;
    while (a >= 0 && cur[static_cast<std::size_t>(a)] == n - r + a + 1) --a;
    if (a < 0) break;
    ++cur[static_cast<std::size_t>(a)];
    for (int b = a + 1; b < r; ++b) cur[static_cast<std::size_t>(b)] = cur[static_cast<std::size_t>(b - 1)] + 1;
  }
  return out;
}

/// Calls fn on every s-tuple drawn from choices, in lexicographic order.
template <typename T, typename Fn>
void for_each_tuple(const std::vector<T>& choices, int s, Fn&& fn) {
  if (choices.empty() || s <= 0) return;
  std::vector<std::size_t> odo(static_cast<std::size_t>(s), 0);
  std::vector<T> cur(static_cast<std::size_t>(s), choices.front());
  while (true) {
    for (std::size_t j = 0; j < odo.size(); ++j) cur[j] = choices[odo[j]];
    fn(std::as_const(cur));
    std::size_t j = odo.size();
    while (j > 0 && odo[j - 1] + 1 == choices.size()) odo[--j] = 0;
    if (j == 0) break;
    ++odo[j - 1];
  }
}

/// Every s-tuple of r-subsets of [n] as problems of Gr(r,n).
inline std::vector<ProblemTuple> all_problems(int r, int n, int s) {
  std::vector<ProblemTuple> out;
  for_each_tuple(all_indices(r, n), s, [&](const std::vector<SchubertIndex>& t) { out.emplace_back(r, n, t); });
  return out;
}

/// All partitions inside the rows x cols rectangle, ordered by weight then
/// reverse-lexicographically within a weight.
inline std::vector<Partition> partitions_in_box(int rows, int cols) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int row, int bound) {
    if (row == rows) {
      out.emplace_back(cur);
      return;
    }
    for (int x = bound; x >= 0; --x) {
      cur.push_back(x);
      rec(row + 1, x);
      cur.pop_back();
    }
  };
  rec(0, cols);
  std::stable_sort(out.begin(), out.end(), [](const Partition& a, const Partition& b) { return a.weight() < b.weight(); });
  return out;
}

// ---------------------------------------------------------------------------
// Text encodings: index "1,4"; tuple "1,4;2,3@4"; partition "2,1".

namespace detail {

inline std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = text.find(',', pos);
    const std::string_view tok = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    int value = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    while (first != last && *first == ' ') ++first;
    while (last != first && *(last - 1) == ' ') --last;
    const auto res = std::from_chars(first, last, value);
    if (first == last || res.ec != std::errc() || res.ptr != last) throw ParseError("not an integer: '" + std::string(tok) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::string join_ints(std::span<const int> xs) {
  std::string s;
  for (std::size_t a = 0; a < xs.size(); ++a) {
    if (a) s += ',';
    s += std::to_string(xs[a]);
  }
  return s;
}

}  // namespace detail

inline std::string format_index(const SchubertIndex& idx) { return detail::join_ints(idx.elements()); }

inline SchubertIndex parse_index(std::string_view text, int n) {
  try {
    return {n, detail::parse_int_list(text)};
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("bad index '") + std::string(text) + "': " + e.what());
  }
}

inline std::string format_partition(const Partition& p) { return detail::join_ints(p.parts()); }

inline Partition parse_partition(std::string_view text) {
  try {
    return Partition(detail::parse_int_list(text));
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("bad partition '") + std::string(text) + "': " + e.what());
  }
}

inline std::string format_tuple(std::span<const SchubertIndex> indices) {
  std::string s;
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (j) s += ';';
    s += format_index(indices[j]);
  }
  return s;
}

inline std::string format_problem(const ProblemTuple& p) { return format_tuple(p.indices()) + "@" + std::to_string(p.n()); }

inline ProblemTuple parse_problem(std::string_view text) {
  const std::size_t at = text.rfind('@');
  if (at == std::string_view::npos) throw ParseError("tuple must end in '@n'");
  const auto nv = detail::parse_int_list(text.substr(at + 1));
  if (nv.size() != 1 || nv[0] < 0) throw ParseError("bad ambient dimension after '@'");
  const int n = nv[0];
  std::vector<SchubertIndex> indices;
  const std::string_view body = text.substr(0, at);
  std::size_t pos = 0;
  while (true) {
    const std::size_t semi = body.find(';', pos);
    indices.push_back(parse_index(body.substr(pos, semi == std::string_view::npos ? std::string_view::npos : semi - pos), n));
    if (semi == std::string_view::npos) break;
    pos = semi + 1;
  }
  const int r = indices.front().size();
  try {
    return {r, n, std::move(indices)};
  } catch (const InvalidArgument& e) {
    throw ParseError(std::string("bad tuple: ") + e.what());
  }
}

}  // namespace hornsat
