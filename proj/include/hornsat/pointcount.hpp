#pragma once

// Brute-force point counts of zero-dimensional Schubert problems over tiny
// prime fields. Every point of Gr(r,n)(F_q) is enumerated as a reduced
// row-echelon matrix and tested against the closed Schubert conditions.

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hornsat/errors.hpp"
#include "hornsat/modular.hpp"
#include "hornsat/probe.hpp"
#include "hornsat/schubert.hpp"

namespace hornsat {

inline constexpr std::uint64_t kMaxEnumeratedPoints = 1'000'000;

/// [n choose r]_q.
inline boost::multiprecision::cpp_int gaussian_binomial(int n, int r, std::uint32_t q) {
  using boost::multiprecision::cpp_int;
  if (r < 0 || r > n) return 0;
  cpp_int num = 1;
  cpp_int den = 1;
  for (int i = 0; i < r; ++i) {
    num *= boost::multiprecision::pow(cpp_int(q), n - i) - 1;
    den *= boost::multiprecision::pow(cpp_int(q), i + 1) - 1;
  }
  return num / den;
}

struct EnumeratedGrassmannian {
  int r = 0;
  int n = 0;
  std::uint32_t q = 2;
  /// n x r column bases, transposes of the reduced row-echelon representatives.
  std::vector<Matrix> points;
};

inline EnumeratedGrassmannian enumerate_grassmannian(int r, int n, std::uint32_t q) {
  if (r < 0 || n < r) throw InvalidArgument("need 0 <= r <= n");
  if (q > 5 || !PrimeField::is_prime(q)) throw InvalidArgument("field size must be 2, 3 or 5");
  if (gaussian_binomial(n, r, q) > kMaxEnumeratedPoints)
    throw SizeExceeded("Gr(" + std::to_string(r) + "," + std::to_string(n) + ")(F_" + std::to_string(q) + ") is too large");

  EnumeratedGrassmannian g{r, n, q, {}};
  if (r == 0) {
    g.points.emplace_back(n, 0);
    return g;
  }
  for (const auto& pivots : all_indices(r, n)) {
    // Free entries sit right of each pivot, away from later pivot columns.
    std::vector<std::pair<int, int>> free;
    for (int a = 1; a <= r; ++a)
      for (int c = pivots.at(a) + 1; c <= n; ++c)
        if (!pivots.contains(c)) free.emplace_back(a - 1, c - 1);
    std::vector<std::uint32_t> digits(free.size(), 0);
    while (true) {
      Matrix basis(n, r);
      for (int a = 1; a <= r; ++a) basis(pivots.at(a) - 1, a - 1) = 1;
      for (std::size_t k = 0; k < free.size(); ++k) basis(free[k].second, free[k].first) = digits[k];
      g.points.push_back(std::move(basis));
      std::size_t k = 0;
      while (k < digits.size() && digits[k] + 1 == q) digits[k++] = 0;
      if (k == digits.size()) break;
      ++digits[k];
    }
  }
  return g;
}

/// Dimension of the Zariski tangent space at V of the intersection of the
/// rank loci dim(V cap E^j_{i_a}) >= a. A locus where the rank is exceeded
/// is singular at V and contributes no equation; a tight one asks
/// phi(V cap E_{i_a}) inside (E_{i_a} + V)/V. On the open cells this is Hom_I.
inline int tangent_nullity(const ProblemTuple& p, const Subspace& v, std::span<const FlagBasis> flags, const PrimeField& f) {
  const int r = p.r();
  const int q = p.n() - p.r();
  const QuotientFrame frame = quotient_frame(v, f);
  std::vector<std::vector<std::uint32_t>> eqs;
  for (int j = 1; j <= p.s(); ++j) {
    const auto& e = flags[static_cast<std::size_t>(j - 1)];
    for (int a = 1; a <= r; ++a) {
      const Matrix part = e.part(p.index(j).at(a));
      const Matrix meet = intersect_column_spaces(v.basis(), part, f);
      if (meet.cols() != a) continue;
      const Matrix x = solve_in_basis(v.basis(), meet, f);
      const Matrix target = multiply(frame.projection, part, f);
      const Matrix annihilators = nullspace(target.transpose(), f);
      for (int k = 0; k < annihilators.cols(); ++k)
        for (int c = 0; c < x.cols(); ++c) {
          std::vector<std::uint32_t> row(static_cast<std::size_t>(r * q), 0);
          for (int t = 0; t < q; ++t)
            for (int y = 0; y < r; ++y) row[static_cast<std::size_t>(t * r + y)] = f.mul(annihilators(t, k), x(y, c));
          eqs.push_back(std::move(row));
        }
    }
  }
  Matrix system(static_cast<int>(eqs.size()), r * q);
  for (int i = 0; i < system.rows(); ++i)
    for (int k = 0; k < system.cols(); ++k) system(i, k) = eqs[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  return r * q - rank(std::move(system), f);
}

struct CountResult {
  std::uint64_t count = 0;
  /// Some solution has a nonzero tangent space, so the flags are not generic.
  bool degenerate = false;
  int max_tangent_nullity = 0;
  /// Cell positions of the solutions, keyed by tuple encoding.
  std::map<std::string, std::uint64_t> positions;
};

/// Points of the intersection of Omega_{I^j}(E^j), where V lies in
/// Omega_I(E) iff its cell position J satisfies J <= I entrywise.
inline CountResult count_solutions(const ProblemTuple& p, std::span<const FlagBasis> flags, const EnumeratedGrassmannian& g) {
  if (expected_dim(p) != 0) throw InvalidArgument("point counts need expected dimension 0");
  if (g.r != p.r() || g.n != p.n()) throw InvalidArgument("enumeration does not match the problem");
  if (static_cast<int>(flags.size()) != p.s()) throw InvalidArgument("need one flag per index");
  for (const auto& e : flags)
    if (e.dim() != p.n()) throw InvalidArgument("flags must live in k^n");

  const PrimeField f(g.q);
  CountResult res;
  std::vector<SchubertIndex> pos;
  for (const auto& basis : g.points) {
    pos.clear();
    bool inside = true;
    for (int j = 1; j <= p.s() && inside; ++j) {
      auto cell = detail::adapt(multiply(flags[static_cast<std::size_t>(j - 1)].inverse_basis(), basis, f), f).position;
      for (int a = 1; a <= p.r(); ++a)
        if (cell.at(a) > p.index(j).at(a)) inside = false;
      pos.push_back(std::move(cell));
    }
    if (!inside) continue;
    ++res.count;
    ++res.positions[format_tuple(pos)];
    const int nullity = tangent_nullity(p, Subspace(basis, f), flags, f);
    res.max_tangent_nullity = std::max(res.max_tangent_nullity, nullity);
    if (nullity != 0) res.degenerate = true;
  }
  return res;
}

struct CountSample {
  std::uint64_t seed = 0;
  CountResult result;
};

inline std::vector<FlagBasis> random_flags(int s, int n, const PrimeField& f, Rng& rng) {
  std::vector<FlagBasis> out;
  for (int j = 0; j < s; ++j) out.push_back(random_flag(n, f, rng));
  return out;
}

/// One count per flag sample; sample k draws its flags from seed base_seed + k.
inline std::vector<CountSample> count_distribution(const ProblemTuple& p, std::uint32_t q, int samples, std::uint64_t base_seed) {
  if (samples < 1) throw InvalidArgument("need at least one sample");
  const auto g = enumerate_grassmannian(p.r(), p.n(), q);
  const PrimeField f(q);
  std::vector<CountSample> out;
  for (int k = 0; k < samples; ++k) {
    const std::uint64_t seed = base_seed + static_cast<std::uint64_t>(k);
    Rng rng(seed);
    const auto flags = random_flags(p.s(), p.n(), f, rng);
    out.push_back({seed, count_solutions(p, flags, g)});
  }
  return out;
}

}  // namespace hornsat
