// hornsat: command-line front end.
//
// Exit codes: 0 nonzero, 1 zero, 2 inconclusive, 3 engines disagree,
// 64 bad input, 65 size or depth bound hit, 70 internal inconsistency,
// 75 no generic flags found.

#include <cstdint>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hornsat/hornsat.hpp"
#include "report.hpp"

namespace {

using namespace hornsat;
using report::Json;

enum Exit : int {
  kNonzero = 0,
  kZero = 1,
  kInconclusive = 2,
  kDisagree = 3,
  kUsage = 64,
  kBound = 65,
  kInternal = 70,
  kNotGeneric = 75,
};

struct RunConfig {
  std::uint32_t prime = PrimeField::kDefaultPrime;
  int trials = 3;
  std::uint64_t seed = 1;
  int depth = TableCache::kDefaultDepthBound;
  std::string format = "text";
  std::string mode = "B";
  std::string engine = "all";

  bool json() const { return format == "json"; }
};

void emit(const RunConfig& cfg, const Json& j, const std::string& text) {
  if (cfg.json()) std::cout << j.dump(2) << "\n";
  else std::cout << text;
}

std::string yesno(bool b) { return b ? "nonzero" : "zero"; }

// ---------------------------------------------------------------------------

int cmd_nonzero(const RunConfig& cfg, const std::string& text) {
  const ProblemTuple p = parse_problem(text);
  TableCache cache(cfg.depth);
  const PrimeField f(cfg.prime);
  Rng rng(cfg.seed);

  Json j{{"problem", format_problem(p)}, {"seed", cfg.seed}, {"prime", cfg.prime}, {"engine", cfg.engine}};
  std::ostringstream out;
  out << "problem " << format_problem(p) << "\n";
  std::optional<bool> oracle, horn_b, horn_c;
  std::optional<ProbeReport> probe;

  const bool all = cfg.engine == "all";
  if (all || cfg.engine == "oracle") {
    oracle = is_nonzero_product(p);
    j["oracle"] = *oracle;
    out << "  oracle   " << yesno(*oracle) << "\n";
  }
  if (all || cfg.engine == "horn") {
    const auto modes = all ? std::vector<HornMode>{HornMode::B, HornMode::C} : std::vector<HornMode>{parse_mode(cfg.mode)};
    for (HornMode m : modes) {
      const HornVerdict v = horn_decide(p, m, cache);
      (m == HornMode::B ? horn_b : horn_c) = v.nonzero;
      j["horn_" + to_string(m)] = report::verdict_json(v);
      out << "  horn-" << to_string(m) << "   " << yesno(v.nonzero);
      if (v.witness) out << "  witness d=" << v.witness->d << " K=" << format_tuple(v.witness->ktuple) << " value=" << v.witness->value;
      out << "\n";
    }
  }
  if (all || cfg.engine == "probe") {
    probe = certify_nonzero(p, cfg.trials, f, rng);
    j["probe"] = report::probe_json(*probe);
    out << "  probe    " << to_string(probe->outcome) << " (expected " << probe->expected << ")\n";
  }
  if (!oracle && !horn_b && !horn_c && !probe) throw ParseError("unknown engine '" + cfg.engine + "'");

  std::vector<bool> decided;
  for (const auto& x : {oracle, horn_b, horn_c})
    if (x) decided.push_back(*x);
  const bool certified = probe && probe->outcome == ProbeOutcome::certified_nonzero;
  if (certified) decided.push_back(true);

  int code = kInconclusive;
  if (!decided.empty()) {
    const bool first = decided.front();
    bool agree = true;
    for (bool b : decided) agree = agree && b == first;
    code = agree ? (first ? kNonzero : kZero) : kDisagree;
  }
  j["agree"] = code != kDisagree;
  j["exit"] = code;
  out << (code == kDisagree ? "engines DISAGREE\n" : "verdict " + std::string(code == kNonzero ? "nonzero" : code == kZero ? "zero" : "inconclusive") + "\n");
  emit(cfg, j, out.str());
  return code;
}

int cmd_inequalities(const RunConfig& cfg, int r, int n, int s) {
  TableCache cache(cfg.depth);
  const HornMode m = parse_mode(cfg.mode);
  const auto list = enumerate_inequalities(r, n, s, m, cache);
  Json arr = Json::array();
  std::ostringstream out;
  out << "# Gr(" << r << "," << n << ") s=" << s << " mode " << to_string(m) << ": " << list.size() << " inequalities\n";
  for (const auto& lab : list) {
    arr.push_back(Json{{"d", lab.d}, {"ktuple", report::tuple_json(lab.ktuple)}});
    out << "d=" << lab.d << " K=" << format_tuple(lab.ktuple) << "\n";
  }
  emit(cfg, Json{{"r", r}, {"n", n}, {"s", s}, {"mode", to_string(m)}, {"count", list.size()}, {"inequalities", arr}}, out.str());
  return 0;
}

int cmd_table(const RunConfig& cfg, int d, int r, int s) {
  TableCache cache(cfg.depth);
  const auto& t = build_table(d, r, s, cache);
  Json tuples = Json::array();
  Json points = Json::array();
  for (const auto& k : t.tuples) tuples.push_back(report::tuple_json(k));
  for (const auto& k : t.point_tuples) points.push_back(report::tuple_json(k));
  std::ostringstream out;
  out << "# Gr(" << d << "," << r << ") s=" << s << ": " << t.tuples.size() << " nonvanishing, " << t.point_tuples.size()
      << " point classes, depth " << t.depth << "\n";
  for (const auto& k : t.tuples) out << format_tuple(k) << "\n";
  emit(cfg, Json{{"d", d}, {"r", r}, {"s", s}, {"depth", t.depth}, {"tuples", tuples}, {"point_tuples", points}}, out.str());
  return 0;
}

// Values stated in the worked examples of the source text.
struct Golden {
  std::string name;
  std::string problem;
  int rank;
  int expected;
  int kernel_dim;
  std::vector<std::string> kernel_positions;
  long lhs;
  int depth;
  std::optional<std::vector<std::string>> last_positions_in_n;
  std::optional<bool> certified;
};

const std::vector<Golden>& goldens() {
  static const std::vector<Golden> g{
      {"zero-sum", "1,4;2,3@4", 1, 0, 1, {"1", "2"}, 1, 1, std::nullopt, false},
      {"balanced", "1,4;2,4@4", 1, 1, 1, {"1", "2"}, 0, 1, std::nullopt, true},
      {"two-step", "1,4,5,6;2,3,5,6@6", 4, 4, 2, {"1,4", "2,4"}, 0, 2, std::vector<std::string>{"1", "6"}, true},
      {"single-line", "2,4@4", 2, 2, 0, {""}, 0, 1, std::nullopt, true},
  };
  return g;
}

int cmd_examples(const RunConfig& cfg) {
  const PrimeField f(cfg.prime);
  TableCache cache(cfg.depth);
  Json arr = Json::array();
  std::ostringstream out;
  bool all_ok = true;
  for (const auto& g : goldens()) {
    const ProblemTuple p = parse_problem(g.problem);
    Json j{{"example", g.name}, {"problem", g.problem}};
    std::vector<std::string> mismatches;
    auto check = [&](const std::string& what, const auto& got, const auto& want) {
      if (!(got == want)) {
        std::ostringstream m;
        m << what << ": got " << Json(got).dump() << ", expected " << Json(want).dump();
        mismatches.push_back(m.str());
      }
    };
    try {
      const ProbeAnalysis a = analyze_problem(p, f, cfg.seed);
      std::vector<std::string> kpos;
      for (const auto& k : a.kernel.positions) kpos.push_back(format_index(k));
      const long lhs = horn_lhs(p, a.filtration.positions.back()).value;
      Rng rng(a.seed);
      const bool certified = certify_nonzero(p, cfg.trials, f, rng).outcome == ProbeOutcome::certified_nonzero;
      const bool nonzero = horn_decide(p, HornMode::B, cache).nonzero;

      check("hom rank", a.rank, g.rank);
      check("expected dimension", a.expected, g.expected);
      check("kernel dimension", a.kernel.d, g.kernel_dim);
      check("kernel positions", kpos, g.kernel_positions);
      check("inequality value", lhs, g.lhs);
      check("filtration depth", a.filtration.depth(), g.depth);
      if (g.last_positions_in_n) {
        std::vector<std::string> last;
        for (const auto& h : composed_positions(a.filtration, p, a.filtration.depth())) last.push_back(format_index(h));
        check("J(h) in [n]", last, *g.last_positions_in_n);
      }
      if (g.certified) check("certified", certified, *g.certified);
      check("horn verdict", nonzero, g.lhs == 0);
      check("filtration verifies", a.check.ok(), true);

      j["seed"] = a.seed;
      j["attempts"] = a.attempts;
      j["hom_rank"] = a.rank;
      j["expected"] = a.expected;
      j["kernel_dim"] = a.kernel.d;
      j["kernel_positions"] = kpos;
      j["kernel_excess"] = a.kernel.kernel_excess;
      j["filtration"] = report::filtration_json(a.filtration, p, a.check);
      j["certified"] = certified;
      j["horn_nonzero"] = nonzero;
    } catch (const GenericityFailure& e) {
      mismatches.push_back(std::string("genericity: ") + e.what());
    }
    const bool ok = mismatches.empty();
    all_ok = all_ok && ok;
    j["pass"] = ok;
    j["mismatches"] = mismatches;
    arr.push_back(j);
    out << g.name << " " << g.problem << ": " << (ok ? "PASS" : "FAIL") << "\n";
    for (const auto& m : mismatches) out << "    " << m << "\n";
  }
  if (cfg.json()) std::cout << arr.dump(2) << "\n";
  else std::cout << out.str();
  return all_ok ? 0 : 1;
}

int cmd_saturation(const RunConfig& cfg, const std::vector<std::string>& parts_text, int r, int ell, int factor) {
  std::vector<Partition> parts;
  for (const auto& t : parts_text) parts.push_back(parse_partition(t));
  const SaturationResult res = saturation_check(parts, r, ell, factor);
  Json j{{"partitions", parts_text}, {"r", r}, {"l", ell}, {"N", factor}, {"p1", res.p1}, {"p2", res.p2}, {"equivalent", res.equivalent()}};
  std::ostringstream out;
  out << "P1 " << std::boolalpha << res.p1 << ", P2 " << res.p2 << ", equivalent: " << res.equivalent() << "\n";
  emit(cfg, j, out.str());
  return res.equivalent() ? 0 : 1;
}

int cmd_hn(const RunConfig& cfg, const std::string& text) {
  const ProblemTuple p = parse_problem(text);
  TableCache cache(cfg.depth);
  const HNResult res = hn_certificate(p, cache);
  Json j = report::hn_json(res);
  j = Json{{"problem", format_problem(p)}, {"result", j}};
  std::ostringstream out;
  out << "problem " << format_problem(p) << ": " << to_string(res.outcome) << " (mu(V) = " << format_slope(res.total) << ")\n";
  if (res.certificate) {
    const auto& c = *res.certificate;
    out << "  contradictor d=" << c.contradictor.d << " K=" << format_tuple(c.contradictor.ktuple) << " slope " << format_slope(c.contradictor.slope)
        << "\n  L=" << format_tuple(c.ltuple) << " value " << c.violated.value << " point check " << c.point_check << "\n";
  }
  emit(cfg, j, out.str());
  switch (res.outcome) {
    case HNOutcome::semistable: return kNonzero;
    case HNOutcome::codimension_violation:
    case HNOutcome::certificate: return kZero;
    case HNOutcome::unstable_without_violation: return kInconclusive;
  }
  return kInternal;
}

int cmd_filtration(const RunConfig& cfg, const std::string& text) {
  const ProblemTuple p = parse_problem(text);
  const PrimeField f(cfg.prime);
  const ProbeAnalysis a = analyze_problem(p, f, cfg.seed);
  const auto& c = a.filtration;
  std::ostringstream out;
  out << "problem " << c.problem << " seed " << c.seed << " prime " << c.prime << "\n";
  out << "  hom rank " << c.hom_rank << " (expected " << a.expected << "), depth " << c.depth() << "\n";
  for (int u = 0; u <= c.depth(); ++u)
    out << "  S(" << u << ") dim " << c.chain[static_cast<std::size_t>(u)].dim() << "  J=" << format_tuple(c.positions[static_cast<std::size_t>(u)])
        << "  in [n]: " << format_tuple(composed_positions(c, p, u)) << "\n";
  out << "  (i) " << std::boolalpha << a.check.clause_i << "  (ii) " << a.check.clause_ii << "  (iii) " << a.check.clause_iii
      << "  structure " << a.check.structure << "\n";
  emit(cfg, report::filtration_json(c, p, a.check), out.str());
  return a.check.ok() ? 0 : 1;
}

int cmd_count(const RunConfig& cfg, const std::string& text, std::uint32_t q, int samples) {
  const ProblemTuple p = parse_problem(text);
  const auto dist = count_distribution(p, q, samples, cfg.seed);
  if (cfg.json()) {
    Json arr = Json::array();
    for (const auto& s : dist)
      arr.push_back(Json{{"seed", s.seed}, {"count", s.result.count}, {"degenerate", s.result.degenerate}});
    std::cout << Json{{"problem", format_problem(p)}, {"q", q}, {"samples", arr}}.dump(2) << "\n";
  } else {
    std::cout << "seed,count,degenerate\n";
    for (const auto& s : dist) std::cout << s.seed << "," << s.result.count << "," << (s.result.degenerate ? 1 : 0) << "\n";
  }
  return 0;
}

int cmd_sweep(const RunConfig& cfg, int r, int n, int s) {
  TableCache cache(cfg.depth);
  const PrimeField f(cfg.prime);
  Rng rng(cfg.seed);
  long total = 0, disagree = 0, probe_false = 0, probe_abstain = 0;
  for (const auto& p : all_problems(r, n, s)) {
    ++total;
    const bool o = is_nonzero_product(p);
    const bool b = horn_decide(p, HornMode::B, cache).nonzero;
    const bool c = horn_decide(p, HornMode::C, cache).nonzero;
    const bool cert = certify_nonzero(p, cfg.trials, f, rng).outcome == ProbeOutcome::certified_nonzero;
    if (o != b || o != c) ++disagree;
    if (cert && !o) ++probe_false;
    if (!cert && o) ++probe_abstain;
  }
  const bool ok = disagree == 0 && probe_false == 0;
  Json j{{"r", r}, {"n", n}, {"s", s}, {"tuples", total}, {"horn_oracle_disagreements", disagree},
         {"probe_false_certificates", probe_false}, {"probe_abstentions", probe_abstain}, {"ok", ok}};
  std::ostringstream out;
  out << "Gr(" << r << "," << n << ") s=" << s << ": " << total << " tuples, " << disagree << " disagreements, " << probe_false
      << " false certificates, " << probe_abstain << " abstentions\n";
  emit(cfg, j, out.str());
  return ok ? 0 : kDisagree;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nonvanishing of Schubert products: LR oracle, Horn recursion, finite-field probe"};
  app.require_subcommand(1);
  app.fallthrough();
  RunConfig cfg;
  app.add_option("--prime", cfg.prime, "prime modulus for the probe")->capture_default_str();
  app.add_option("--trials", cfg.trials, "probe trials")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  app.add_option("--depth", cfg.depth, "largest r the Horn recursion may visit")->capture_default_str();
  app.add_option("--mode", cfg.mode, "inequality family")->check(CLI::IsMember({"B", "C", "b", "c"}))->capture_default_str();
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  app.add_option("--engine", cfg.engine, "engine for 'nonzero'")
      ->check(CLI::IsMember({"oracle", "horn", "probe", "all"}))
      ->capture_default_str();

  std::function<int()> run;
  std::string tuple;
  int r = 0, n = 0, s = 0, d = 0, ell = 1, factor = 2, samples = 50;
  std::uint32_t q = 5;
  std::vector<std::string> parts;

  auto* nz = app.add_subcommand("nonzero", "decide whether a product of Schubert classes vanishes");
  nz->add_option("tuple", tuple, "problem, e.g. 1,4;2,3@4")->required();
  nz->callback([&] { run = [&] { return cmd_nonzero(cfg, tuple); }; });

  auto* ineq = app.add_subcommand("inequalities", "list the Horn inequalities of Gr(r,n)");
  ineq->add_option("r", r)->required();
  ineq->add_option("n", n)->required();
  ineq->add_option("s", s)->required();
  ineq->callback([&] { run = [&] { return cmd_inequalities(cfg, r, n, s); }; });

  auto* table = app.add_subcommand("table", "nonvanishing d-subset tuples of [r]");
  table->add_option("d", d)->required();
  table->add_option("r", r)->required();
  table->add_option("s", s)->required();
  table->callback([&] { run = [&] { return cmd_table(cfg, d, r, s); }; });

  auto* ex = app.add_subcommand("examples", "rerun the four worked examples against their stated values");
  ex->callback([&] { run = [&] { return cmd_examples(cfg); }; });

  auto* sat = app.add_subcommand("saturation", "compare nonvanishing before and after scaling by N");
  sat->add_option("partitions", parts, "partitions such as 2,1")->required();
  sat->add_option("--r", r, "rank")->required();
  sat->add_option("--ell", ell, "width bound l")->required();
  sat->add_option("--factor", factor, "scale N")->capture_default_str();
  sat->callback([&] { run = [&] { return cmd_saturation(cfg, parts, r, ell, factor); }; });

  auto* hn = app.add_subcommand("hn", "Harder-Narasimhan certificate of a vanishing product");
  hn->add_option("tuple", tuple)->required();
  hn->callback([&] { run = [&] { return cmd_hn(cfg, tuple); }; });

  auto* filt = app.add_subcommand("filtration", "kernel filtration with its verification");
  filt->add_option("tuple", tuple)->required();
  filt->callback([&] { run = [&] { return cmd_filtration(cfg, tuple); }; });

  auto* count = app.add_subcommand("count", "count F_q points over random flags (CSV)");
  count->add_option("tuple", tuple)->required();
  count->add_option("--q", q, "field size (2, 3 or 5)")->capture_default_str();
  count->add_option("--samples", samples, "flag samples")->check(CLI::PositiveNumber)->capture_default_str();
  count->callback([&] { run = [&] { return cmd_count(cfg, tuple, q, samples); }; });

  auto* sweep = app.add_subcommand("sweep", "exhaustive engine agreement over Gr(r,n)");
  sweep->group("");
  sweep->add_option("r", r)->required();
  sweep->add_option("n", n)->required();
  sweep->add_option("s", s)->required();
  sweep->callback([&] { run = [&] { return cmd_sweep(cfg, r, n, s); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    return run();
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const WidthOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const RectangleOverflow& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const DepthExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBound;
  } catch (const SizeExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBound;
  } catch (const GenericityFailure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNotGeneric;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
}
