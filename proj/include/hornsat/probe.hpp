#pragma once

// Finite-field tangent-space probe. For random flags F on V = k^r and G on
// Q = k^(n-r) it computes the space of maps phi : V -> Q with
// phi(F^j_a) inside G^j_{i^j_a - a}, certifies nonvanishing when its rank is
// the expected dimension, and unwinds the recursive kernel filtration.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hornsat/errors.hpp"
#include "hornsat/modular.hpp"
#include "hornsat/schubert.hpp"

namespace hornsat {

/// Complete flag E_1 < ... < E_m of k^m: E_j is spanned by the first j
/// columns of an invertible matrix.
class FlagBasis {
 public:
  FlagBasis() = default;
  FlagBasis(Matrix basis, const PrimeField& f) : basis_(std::move(basis)) {
    if (basis_.rows() != basis_.cols()) throw InvalidArgument("flag basis must be square");
    inverse_ = inverse(basis_, f);
  }

  int dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const Matrix& inverse_basis() const noexcept { return inverse_; }

  /// Basis of E_j, 0 <= j <= dim().
  Matrix part(int j) const { return basis_.columns(0, j); }

 private:
  Matrix basis_;
  Matrix inverse_;
};

/// Subspace of k^m given by a basis of full column rank.
class Subspace {
 public:
  Subspace() = default;
  Subspace(Matrix basis, const PrimeField& f) : basis_(std::move(basis)) {
    if (rank(basis_, f) != basis_.cols()) throw InvalidArgument("subspace basis is not of full column rank");
  }

  static Subspace whole(int m) {
    Subspace s;
    s.basis_ = Matrix::identity(m);
    return s;
  }

  int ambient() const noexcept { return basis_.rows(); }
  int dim() const noexcept { return basis_.cols(); }
  const Matrix& basis() const noexcept { return basis_; }

 private:
  Matrix basis_;
};

inline FlagBasis random_flag(int m, const PrimeField& f, Rng& rng) {
  if (m < 0) throw InvalidArgument("negative flag dimension");
  return {random_invertible(m, f, rng), f};
}

namespace detail {

/// Result of column-reducing flag coordinates of a subspace from the bottom.
struct AdaptedBasis {
  SchubertIndex position;
  /// d x d; column a holds coordinates (w.r.t. the subspace basis) of a
  /// vector in E_{i_a} but not E_{i_a - 1}.
  Matrix transform;
};

/// coords = E^{-1} S, an m x d matrix of full column rank.
inline AdaptedBasis adapt(Matrix coords, const PrimeField& f) {
  const int m = coords.rows();
  const int d = coords.cols();
  Matrix t = Matrix::identity(d);
  std::vector<int> pivot_row(static_cast<std::size_t>(d), -1);
  for (int row = m - 1; row >= 0; --row) {
    int piv = -1;
    for (int c = 0; c < d; ++c)
      if (pivot_row[static_cast<std::size_t>(c)] < 0 && coords(row, c)) {
        piv = c;
        break;
      }
    if (piv < 0) continue;
    pivot_row[static_cast<std::size_t>(piv)] = row;
    const std::uint32_t inv = f.inv(coords(row, piv));
    for (int c = 0; c < d; ++c) {
      if (c == piv || pivot_row[static_cast<std::size_t>(c)] >= 0 || !coords(row, c)) continue;
      const std::uint32_t factor = f.mul(coords(row, c), inv);
      for (int i = 0; i < m; ++i) coords(i, c) = f.sub(coords(i, c), f.mul(factor, coords(i, piv)));
      for (int i = 0; i < d; ++i) t(i, c) = f.sub(t(i, c), f.mul(factor, t(i, piv)));
    }
  }
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  for (int c = 0; c < d; ++c)
    if (pivot_row[static_cast<std::size_t>(c)] < 0) throw InvalidArgument("subspace basis is not of full column rank");
  std::sort(order.begin(), order.end(), [&](int a, int b) { return pivot_row[static_cast<std::size_t>(a)] < pivot_row[static_cast<std::size_t>(b)]; });
  std::vector<int> elems;
  Matrix sorted(d, d);
  for (int a = 0; a < d; ++a) {
    const int c = order[static_cast<std::size_t>(a)];
    elems.push_back(pivot_row[static_cast<std::size_t>(c)] + 1);
    for (int i = 0; i < d; ++i) sorted(i, a) = t(i, c);
  }
  return {SchubertIndex(m, std::move(elems)), std::move(sorted)};
}

}  // namespace detail

/// The unique I with S in the open cell of E: the jumps of a -> dim(S cap E_a).
inline SchubertIndex schubert_position(const Subspace& s, const FlagBasis& e, const PrimeField& f) {
  if (s.ambient() != e.dim()) throw InvalidArgument("subspace and flag live in different spaces");
  return detail::adapt(multiply(e.inverse_basis(), s.basis(), f), f).position;
}

/// A complement of V chosen from standard basis vectors at the non-pivot
/// coordinates of V's basis, with the matching projection W -> W/V.
struct QuotientFrame {
  Matrix projection;  ///< (m - r) x m, kernel exactly V
  Matrix section;     ///< m x (m - r), projection * section = identity
};

inline QuotientFrame quotient_frame(const Subspace& v, const PrimeField& f) {
  const int m = v.ambient();
  Matrix rows = v.basis().transpose();
  const auto pivots = rref(rows, f);
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  for (int c : pivots) used[static_cast<std::size_t>(c)] = true;
  Matrix section(m, m - v.dim());
  int k = 0;
  for (int i = 0; i < m; ++i)
    if (!used[static_cast<std::size_t>(i)]) section(i, k++) = 1;
  const Matrix inv = inverse(hstack(v.basis(), section), f);
  return {inv.row_block(v.dim(), m - v.dim()), std::move(section)};
}

struct InducedFlags {
  SchubertIndex position;  ///< cell of V with respect to E
  FlagBasis on_sub;        ///< E_a(V) = E_{i_a} cap V, in coordinates of V's basis
  FlagBasis on_quotient;   ///< E_b(W/V) = p(E_{alpha(b)}), in coordinates of the frame
  QuotientFrame frame;
};

inline InducedFlags induced_flags(const Subspace& v, const FlagBasis& e, const PrimeField& f) {
  if (v.ambient() != e.dim()) throw InvalidArgument("subspace and flag live in different spaces");
  auto adapted = detail::adapt(multiply(e.inverse_basis(), v.basis(), f), f);
  QuotientFrame frame = quotient_frame(v, f);
  const int m = e.dim();
  Matrix q(m - v.dim(), m - v.dim());
  int b = 0;
  for (int col = 1; col <= m; ++col) {
    if (adapted.position.contains(col)) continue;
    const Matrix img = multiply(frame.projection, e.basis().column(col - 1), f);
    for (int i = 0; i < q.rows(); ++i) q(i, b) = img(i, 0);
    ++b;
  }
  return {adapted.position, FlagBasis(std::move(adapted.transform), f), FlagBasis(std::move(q), f), std::move(frame)};
}

/// Flags on V = k^r and Q = k^(n-r), one pair per index of the problem.
struct ProbeFlags {
  std::vector<FlagBasis> on_v;
  std::vector<FlagBasis> on_q;
};

inline ProbeFlags random_probe_flags(const ProblemTuple& p, const PrimeField& f, Rng& rng) {
  ProbeFlags flags;
  for (int j = 0; j < p.s(); ++j) {
    flags.on_v.push_back(random_flag(p.r(), f, rng));
    flags.on_q.push_back(random_flag(p.n() - p.r(), f, rng));
  }
  return flags;
}

/// Hom_I(V, Q, F, G) as the solution space of the flag constraints.
struct HomSpace {
  int domain_dim = 0;
  int codomain_dim = 0;
  int constraint_count = 0;
  /// Each element is a codomain_dim x domain_dim matrix.
  std::vector<Matrix> kernel_basis;

  int observed_rank() const noexcept { return static_cast<int>(kernel_basis.size()); }
};

inline HomSpace hom_space(const ProblemTuple& p, std::span<const FlagBasis> flags_v, std::span<const FlagBasis> flags_q,
                          const PrimeField& f) {
  const int r = p.r();
  const int q = p.n() - p.r();
  if (static_cast<int>(flags_v.size()) != p.s() || static_cast<int>(flags_q.size()) != p.s())
    throw InvalidArgument("need one flag pair per index");
  for (int j = 0; j < p.s(); ++j)
    if (flags_v[static_cast<std::size_t>(j)].dim() != r || flags_q[static_cast<std::size_t>(j)].dim() != q)
      throw InvalidArgument("flag dimensions must be r and n - r");

  HomSpace h;
  h.domain_dim = r;
  h.codomain_dim = q;
  const int unknowns = r * q;
  // Row t of G^{-1} phi F must vanish in column c for t >= i_c - c.
  std::vector<std::vector<std::uint32_t>> eqs;
  for (int j = 1; j <= p.s(); ++j) {
    const auto& idx = p.index(j);
    const Matrix& ginv = flags_q[static_cast<std::size_t>(j - 1)].inverse_basis();
    const Matrix& fb = flags_v[static_cast<std::size_t>(j - 1)].basis();
    for (int c = 1; c <= r; ++c)
      for (int t = idx.at(c) - c; t < q; ++t) {
        std::vector<std::uint32_t> row(static_cast<std::size_t>(unknowns), 0);
        for (int x = 0; x < q; ++x)
          for (int y = 0; y < r; ++y) row[static_cast<std::size_t>(x * r + y)] = f.mul(ginv(t, x), fb(y, c - 1));
        eqs.push_back(std::move(row));
      }
  }
  h.constraint_count = static_cast<int>(eqs.size());
  if (unknowns == 0) return h;
  Matrix system(static_cast<int>(eqs.size()), unknowns);
  for (int i = 0; i < system.rows(); ++i)
    for (int k = 0; k < unknowns; ++k) system(i, k) = eqs[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
  const Matrix null = nullspace(std::move(system), f);
  for (int b = 0; b < null.cols(); ++b) {
    Matrix phi(q, r);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < r; ++y) phi(x, y) = null(x * r + y, b);
    h.kernel_basis.push_back(std::move(phi));
  }
  return h;
}

enum class ProbeOutcome { certified_nonzero, inconclusive };

inline std::string to_string(ProbeOutcome o) {
  return o == ProbeOutcome::certified_nonzero ? "CERTIFIED_NONZERO" : "INCONCLUSIVE";
}

struct ProbeReport {
  ProbeOutcome outcome = ProbeOutcome::inconclusive;
  int expected = 0;
  std::vector<int> observed_ranks;  ///< one per trial run
};

/// Certifies nonvanishing when some trial's rank equals the expected
/// dimension. Never certifies a vanishing product: the observed rank bounds
/// the generic rank from above and the expected dimension from below.
inline ProbeReport certify_nonzero(const ProblemTuple& p, int trials, const PrimeField& f, Rng& rng) {
  if (trials < 1) throw InvalidArgument("trials must be at least 1");
  ProbeReport rep;
  rep.expected = expected_dim(p);
  if (rep.expected < 0) return rep;
  for (int t = 0; t < trials; ++t) {
    const auto flags = random_probe_flags(p, f, rng);
    const int rk = hom_space(p, flags.on_v, flags.on_q, f).observed_rank();
    rep.observed_ranks.push_back(rk);
    if (rk == rep.expected) {
      rep.outcome = ProbeOutcome::certified_nonzero;
      break;
    }
  }
  return rep;
}

/// A generic phi in Hom_I with its kernel S and the positions of S.
struct KernelSample {
  Matrix phi;
  Subspace kernel;
  int d = 0;
  std::vector<SchubertIndex> positions;  ///< K^j, d-subsets of [r]
  int kernel_excess = 0;                 ///< dim(S, V, F)
  long lhs = 0;                          ///< Horn left-hand side at K
};

namespace detail {

inline bool dominates(const std::vector<SchubertIndex>& a, const std::vector<SchubertIndex>& b) {
  for (std::size_t j = 0; j < a.size(); ++j)
    for (int x = 1; x <= a[j].size(); ++x)
      if (a[j].at(x) < b[j].at(x)) return false;
  return true;
}

}  // namespace detail

inline constexpr int kKernelSamples = 5;

/// Picks, among random combinations of the kernel basis, one of minimal
/// kernel dimension and componentwise-maximal positions, then checks the
/// rank identity rank = expected + dim(S,V,F) + lhs(K). Any inconsistency is
/// a GenericityFailure.
inline KernelSample generic_kernel_element(const ProblemTuple& p, const HomSpace& h,
                                           std::span<const FlagBasis> flags_v, const PrimeField& f, Rng& rng,
                                           int samples = kKernelSamples) {
  const int r = p.r();
  const int q = p.n() - p.r();
  auto describe = [&](Matrix phi) {
    KernelSample ks;
    ks.kernel = Subspace(nullspace(phi, f), f);
    ks.phi = std::move(phi);
    ks.d = ks.kernel.dim();
    for (int j = 0; j < p.s(); ++j) ks.positions.push_back(schubert_position(ks.kernel, flags_v[static_cast<std::size_t>(j)], f));
    return ks;
  };

  KernelSample best;
  if (h.observed_rank() == 0) {
    best = describe(Matrix(q, r));
  } else {
    std::vector<KernelSample> drawn;
    for (int t = 0; t < samples; ++t) {
      Matrix phi(q, r);
      for (const auto& b : h.kernel_basis) {
        const std::uint32_t c = f.random(rng);
        for (int x = 0; x < q; ++x)
          for (int y = 0; y < r; ++y) phi(x, y) = f.add(phi(x, y), f.mul(c, b(x, y)));
      }
      drawn.push_back(describe(std::move(phi)));
    }
    const int dmin = std::min_element(drawn.begin(), drawn.end(), [](const auto& a, const auto& b) { return a.d < b.d; })->d;
    std::optional<std::size_t> pick;
    for (std::size_t i = 0; i < drawn.size() && !pick; ++i) {
      if (drawn[i].d != dmin) continue;
      bool top = true;
      for (const auto& other : drawn)
        if (other.d == dmin && !detail::dominates(drawn[i].positions, other.positions)) top = false;
      if (top) pick = i;
    }
    if (!pick) throw GenericityFailure("sampled kernels have incomparable positions");
    best = std::move(drawn[*pick]);
  }
  best.kernel_excess = expected_dim(ProblemTuple(best.d, r, best.positions));
  best.lhs = horn_lhs(p, best.positions).value;
  if (best.kernel_excess < 0) throw GenericityFailure("kernel lies in an unexpectedly small cell");
  if (h.observed_rank() != expected_dim(p) + best.kernel_excess + best.lhs)
    throw GenericityFailure("rank identity fails: flags are not generic");
  return best;
}

/// Chain S^(h) < ... < S^(1) < S^(0) = V with maps eta_u : S^(u) -> Q
/// whose kernels are S^(u+1).
struct FiltrationCertificate {
  std::uint64_t seed = 0;
  std::uint32_t prime = PrimeField::kDefaultPrime;
  std::string problem;
  int hom_rank = 0;
  std::vector<Subspace> chain;                        ///< chain[u] = S^(u), u = 0..h
  std::vector<Matrix> maps;                           ///< maps[u] = eta_u in chain[u]'s basis, u < h
  std::vector<std::vector<SchubertIndex>> positions;  ///< positions[u] = J(u) in [r]

  int depth() const noexcept { return static_cast<int>(chain.size()) - 1; }

  std::vector<int> dims() const {
    std::vector<int> d;
    for (const auto& s : chain) d.push_back(s.dim());
    return d;
  }
};

namespace detail {

inline std::vector<SchubertIndex> positions_of(const Subspace& s, std::span<const FlagBasis> flags, const PrimeField& f) {
  std::vector<SchubertIndex> out;
  for (const auto& e : flags) out.push_back(schubert_position(s, e, f));
  return out;
}

inline FiltrationCertificate filtration(const ProblemTuple& p, const ProbeFlags& flags, const PrimeField& f, Rng& rng) {
  const int r = p.r();
  FiltrationCertificate cert;
  cert.prime = f.modulus();
  cert.problem = format_problem(p);
  const HomSpace h = hom_space(p, flags.on_v, flags.on_q, f);
  cert.hom_rank = h.observed_rank();
  cert.chain.push_back(Subspace::whole(r));
  cert.positions.emplace_back(static_cast<std::size_t>(p.s()), SchubertIndex::fundamental(r, r));
  if (h.observed_rank() == 0) return cert;

  KernelSample ks = generic_kernel_element(p, h, flags.on_v, f, rng);
  if (ks.kernel_excess == 0) {
    cert.chain.push_back(ks.kernel);
    cert.maps.push_back(ks.phi);
    cert.positions.push_back(ks.positions);
    return cert;
  }
  if (ks.d == 0 || ks.d == r) throw GenericityFailure("positive kernel excess with a trivial kernel");

  ProbeFlags sub_flags;
  QuotientFrame frame;
  for (const auto& e : flags.on_v) {
    InducedFlags ind = induced_flags(ks.kernel, e, f);
    sub_flags.on_v.push_back(std::move(ind.on_sub));
    sub_flags.on_q.push_back(std::move(ind.on_quotient));
    frame = std::move(ind.frame);
  }
  const ProblemTuple sub_problem(ks.d, r, ks.positions);
  const FiltrationCertificate sub = filtration(sub_problem, sub_flags, f, rng);
  if (sub.depth() == 0) throw GenericityFailure("induced problem produced an empty filtration");

  const Matrix phi_bar = multiply(ks.phi, frame.section, f);
  cert.maps.push_back(ks.phi);
  for (const auto& gamma : sub.maps) cert.maps.push_back(multiply(phi_bar, gamma, f));
  for (int u = 0; u <= sub.depth(); ++u) {
    Subspace s(multiply(ks.kernel.basis(), sub.chain[static_cast<std::size_t>(u)].basis(), f), f);
    cert.positions.push_back(positions_of(s, flags.on_v, f));
    cert.chain.push_back(std::move(s));
  }
  return cert;
}

}  // namespace detail

inline FiltrationCertificate build_filtration(const ProblemTuple& p, const ProbeFlags& flags, const PrimeField& f, Rng& rng) {
  return detail::filtration(p, flags, f, rng);
}

struct FiltrationCheck {
  bool structure = false;   ///< chain strictly decreasing, maps injective on graded pieces
  bool clause_i = false;    ///< dim(S^(h), V, F) = 0
  bool clause_ii = false;   ///< eta_u(S^(u) cap F^j_a) inside G^j_{i^j_a - a}
  bool clause_iii = false;  ///< hom rank = expected + lhs(J(h))
  int observed_rank = 0;
  long predicted_rank = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return structure && clause_i && clause_ii && clause_iii; }
};

inline FiltrationCheck verify_filtration(const FiltrationCertificate& cert, const ProblemTuple& p, const ProbeFlags& flags,
                                         const PrimeField& f) {
  FiltrationCheck chk;
  const int r = p.r();
  const int q = p.n() - p.r();
  const int h = cert.depth();

  chk.structure = h >= 0 && cert.chain.front().dim() == r && cert.chain.front().ambient() == r &&
                  static_cast<int>(cert.maps.size()) == h && static_cast<int>(cert.positions.size()) == h + 1;
  if (!chk.structure) {
    chk.failures.push_back("certificate shape is inconsistent");
    return chk;
  }
  for (int u = 0; u < h && chk.structure; ++u) {
    const Subspace& big = cert.chain[static_cast<std::size_t>(u)];
    const Subspace& small = cert.chain[static_cast<std::size_t>(u + 1)];
    const Matrix& eta = cert.maps[static_cast<std::size_t>(u)];
    if (small.dim() >= big.dim() || !column_space_contains(big.basis(), small.basis(), f)) {
      chk.structure = false;
      chk.failures.push_back("chain is not strictly decreasing at u = " + std::to_string(u));
      break;
    }
    if (eta.rows() != q || eta.cols() != big.dim()) {
      chk.structure = false;
      chk.failures.push_back("eta_" + std::to_string(u) + " has the wrong shape");
      break;
    }
    const Matrix small_in_big = solve_in_basis(big.basis(), small.basis(), f);
    if (!multiply(eta, small_in_big, f).is_zero() || rank(eta, f) != big.dim() - small.dim()) {
      chk.structure = false;
      chk.failures.push_back("eta_" + std::to_string(u) + " is not injective on S^(u)/S^(u+1)");
    }
  }
  for (int u = 0; u <= h && chk.structure; ++u)
    if (detail::positions_of(cert.chain[static_cast<std::size_t>(u)], flags.on_v, f) != cert.positions[static_cast<std::size_t>(u)]) {
      chk.structure = false;
      chk.failures.push_back("recorded positions disagree with the chain at u = " + std::to_string(u));
    }

  const auto& last = cert.positions.back();
  const int dh = cert.chain.back().dim();
  chk.clause_i = expected_dim(ProblemTuple(dh, r, last)) == 0;
  if (!chk.clause_i) chk.failures.push_back("(i): dim(S^(h), V, F) is not zero");

  chk.clause_ii = true;
  for (int u = 0; u < h && chk.clause_ii; ++u) {
    const Subspace& s = cert.chain[static_cast<std::size_t>(u)];
    const Matrix& eta = cert.maps[static_cast<std::size_t>(u)];
    for (int j = 1; j <= p.s() && chk.clause_ii; ++j) {
      const auto& fj = flags.on_v[static_cast<std::size_t>(j - 1)];
      const auto& gj = flags.on_q[static_cast<std::size_t>(j - 1)];
      for (int a = 1; a <= r; ++a) {
        const Matrix meet = intersect_column_spaces(s.basis(), fj.part(a), f);
        if (meet.cols() == 0) continue;
        const Matrix image = multiply(eta, solve_in_basis(s.basis(), meet, f), f);
        if (!column_space_contains(gj.part(p.index(j).at(a) - a), image, f)) {
          chk.clause_ii = false;
          chk.failures.push_back("(ii): eta_" + std::to_string(u) + " violates j = " + std::to_string(j) + ", a = " + std::to_string(a));
          break;
        }
      }
    }
  }

  chk.observed_rank = hom_space(p, flags.on_v, flags.on_q, f).observed_rank();
  chk.predicted_rank = expected_dim(p) + horn_lhs(p, last).value;
  chk.clause_iii = chk.observed_rank == chk.predicted_rank;
  if (!chk.clause_iii) chk.failures.push_back("(iii): hom rank differs from the predicted value");
  return chk;
}

inline constexpr int kReseedBudget = 10;

/// Everything the probe says about one problem for one draw of flags.
struct ProbeAnalysis {
  std::uint64_t seed = 0;  ///< seed of the successful draw
  int attempts = 0;        ///< draws used, including failed ones
  int expected = 0;
  int rank = 0;
  KernelSample kernel;
  FiltrationCertificate filtration;
  FiltrationCheck check;
};

/// Draws flags from seed, seed + 1, ... until the kernel sample and the
/// filtration both pass their genericity checks.
inline ProbeAnalysis analyze_problem(const ProblemTuple& p, const PrimeField& f, std::uint64_t seed,
                                     int budget = kReseedBudget) {
  std::string last_error = "no attempts made";
  for (int k = 0; k < budget; ++k) {
    ProbeAnalysis out;
    out.seed = seed + static_cast<std::uint64_t>(k);
    out.attempts = k + 1;
    Rng rng(out.seed);
    try {
      const ProbeFlags flags = random_probe_flags(p, f, rng);
      const HomSpace h = hom_space(p, flags.on_v, flags.on_q, f);
      out.expected = expected_dim(p);
      out.rank = h.observed_rank();
      out.kernel = generic_kernel_element(p, h, flags.on_v, f, rng);
      out.filtration = build_filtration(p, flags, f, rng);
      out.filtration.seed = out.seed;
      out.check = verify_filtration(out.filtration, p, flags, f);
      return out;
    } catch (const GenericityFailure& e) {
      last_error = e.what();
    }
  }
  throw GenericityFailure("no generic draw in " + std::to_string(budget) + " attempts: " + last_error);
}

/// J(u) pushed into [n] through the problem's indices.
inline std::vector<SchubertIndex> composed_positions(const FiltrationCertificate& cert, const ProblemTuple& p, int u) {
  std::vector<SchubertIndex> out;
  const auto& ju = cert.positions.at(static_cast<std::size_t>(u));
  for (int j = 1; j <= p.s(); ++j) out.push_back(compose_positions(ju[static_cast<std::size_t>(j - 1)], p.index(j)));
  return out;
}

}  // namespace hornsat
