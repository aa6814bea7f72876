#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bdg/codec.hpp"
#include "bdg/conditions.hpp"
#include "bdg/error.hpp"
#include "bdg/generators.hpp"
#include "bdg/hamilton.hpp"
#include "bdg/oracle.hpp"

namespace bdg::cli {
namespace {

using nlohmann::ordered_json;

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) raise(Errc::parse_error, "cannot open " + path);
    buf << file.rdbuf();
  }
  return buf.str();
}

EngineMode parse_mode(const std::string& token) {
  if (token == "full") return EngineMode::full;
  if (token == "remark26" || token == "one-sided-forward") return EngineMode::one_sided_forward;
  return EngineMode::one_sided_reverse;  // remark26-reverse | one-sided-reverse
}

const std::vector<std::string> mode_tokens = {
    "full", "remark26", "remark26-reverse", "one-sided-forward", "one-sided-reverse"};

int usage_error(std::ostream& err, const std::string& message) {
  err << "error: " << message << "\n";
  return 2;
}

void print_seq(std::ostream& out, const char* head, std::span<const Vertex> seq) {
  out << head;
  for (Vertex v : seq) out << ' ' << to_string(v);
  out << "\n";
}

ordered_json seq_json(std::span<const Vertex> seq) {
  ordered_json arr = ordered_json::array();
  for (Vertex v : seq) arr.push_back(to_string(v));
  return arr;
}

ordered_json results_json(const std::vector<std::uint64_t>& codes, int a, int b) {
  ordered_json arr = ordered_json::array();
  for (std::uint64_t c : codes)
    arr.push_back({{"index", c}, {"bdg", to_single_line(digraph_from_code(c, a, b))}});
  return arr;
}

void print_result_lines(std::ostream& out, const std::vector<std::uint64_t>& codes,
                        int a, int b) {
  for (std::uint64_t c : codes)
    out << c << ' ' << to_single_line(digraph_from_code(c, a, b)) << "\n";
}

void emit_json(std::ostream& out, const ordered_json& doc) { out << doc.dump(2) << "\n"; }

constexpr const char* witness_note = "condition fails; non-Hamiltonicity NOT implied";

ordered_json witness_json(const Witness& w) {
  return {{"kind", w.kind == WitnessKind::hall_pair ? "hall-pair" : "degree-pair"},
          {"u", to_string(w.u)},
          {"v", to_string(w.v)},
          {"sum", w.sum},
          {"bound", w.bound},
          {"note", witness_note}};
}

struct CheckArgs {
  std::string file;
  std::string cond = "a2star";
  int k = -1;
};

int do_check(const CheckArgs& a, bool as_json, std::ostream& out, std::ostream& err) {
  ConditionSpec spec;
  bool uses_k = a.cond == "a2star" || a.cond == "ak-star" || a.cond == "a_k";
  if (a.cond == "a2star") {
    if (a.k >= 0 && a.k != 2) return usage_error(err, "a2star fixes k = 2; use ak-star for other levels");
    spec = ConditionSpec::ak_star(2);
  } else if (a.cond == "ak-star" || a.cond == "a_k") {
    if (a.k < 0) return usage_error(err, "--cond " + a.cond + " requires --k");
    spec = a.cond == "ak-star" ? ConditionSpec::ak_star(a.k) : ConditionSpec::ak(a.k);
  } else {
    if (a.k >= 0) return usage_error(err, "--k does not apply to --cond " + a.cond);
    spec = a.cond == "strict-half" ? ConditionSpec::strict_half_sum()
                                   : ConditionSpec::dirac_bipartite();
  }

  BipartiteDigraph d = parse_bdg(read_input(a.file));
  ConditionReport report = check(d, spec);

  if (as_json) {
    ordered_json doc{{"command", "check"}, {"condition", a.cond}};
    if (uses_k) doc["k"] = spec.k;
    doc["a"] = d.a();
    doc["b"] = d.b();
    doc["threshold"] = {{"num", report.threshold.num}, {"den", report.threshold.den}};
    doc["holds"] = report.holds;
    ordered_json viols = ordered_json::array();
    for (const Violation& v : report.violations)
      viols.push_back({{"u", to_string(v.u)}, {"v", to_string(v.v)}, {"sum", v.sum}});
    doc["violations"] = viols;
    emit_json(out, doc);
  } else if (report.holds) {
    out << "OK " << a.cond << "\n";
  } else {
    const Violation& v = report.violations.front();
    out << "FAIL " << a.cond << " witness " << to_string(v.u) << ' ' << to_string(v.v)
        << " sum " << v.sum << " bound " << to_string(report.threshold) << "\n";
  }
  return report.holds ? 0 : 1;
}

struct HamiltonArgs {
  std::string file;
  std::string mode = "full";
  bool trace = false;
  bool fallback = false;
};

int do_hamilton(const HamiltonArgs& a, bool as_json, std::ostream& out, std::ostream&) {
  BipartiteDigraph d = parse_bdg(read_input(a.file));
  EngineMode mode = parse_mode(a.mode);

  std::optional<EngineRun> run;
  bool no_matching = false;
  try {
    run = run_engine(d, mode);
  } catch (const bdg::Error& e) {
    if (e.code() != Errc::matching_absent) throw;
    no_matching = true;
  }

  bool cycle = run && run->outcome.is_cycle();
  // The oracle settles hamiltonicity when the engine only certifies that the
  // mode's hypothesis fails.
  std::optional<std::optional<std::vector<Vertex>>> oracle;
  if (a.fallback && !cycle) oracle = brute_cycle(d, 2 * d.a());

  int rc;
  if (cycle) rc = 0;
  else if (oracle && *oracle) rc = 0;
  else rc = 1;

  if (as_json) {
    ordered_json doc{{"command", "hamilton"},
                     {"mode", engine_mode_name(mode)},
                     {"a", d.a()},
                     {"b", d.b()}};
    if (a.trace && run) {
      ordered_json moves = ordered_json::array();
      for (const MoveRecord& r : run->trace)
        moves.push_back({{"kind", move_kind_name(r.kind)},
                         {"before", r.before_len},
                         {"after", r.after_len}});
      doc["trace"] = moves;
    }
    if (no_matching) {
      doc["outcome"] = "matching-absent";
    } else if (cycle) {
      doc["outcome"] = "cycle";
      doc["cycle"] = seq_json(run->outcome.cycle());
    } else {
      doc["outcome"] = "witness";
      doc["witness"] = witness_json(run->outcome.witness());
    }
    if (oracle)
      doc["oracle"] = {{"length", 2 * d.a()},
                       {"cycle", *oracle ? seq_json(**oracle) : ordered_json(nullptr)}};
    emit_json(out, doc);
    return rc;
  }

  if (a.trace && run)
    for (const MoveRecord& r : run->trace)
      out << "MOVE " << move_kind_name(r.kind) << " len " << r.before_len << "→"
          << r.after_len << "\n";
  if (no_matching) {
    out << "MATCHING ABSENT\n";
  } else if (cycle) {
    print_seq(out, "CYCLE", run->outcome.cycle());
  } else {
    const Witness& w = run->outcome.witness();
    out << "WITNESS " << to_string(w.u) << ' ' << to_string(w.v) << " sum " << w.sum
        << " bound " << w.bound << "\n"
        << witness_note << "\n";
  }
  if (oracle) {
    if (*oracle) print_seq(out, "ORACLE CYCLE", **oracle);
    else out << "ORACLE NONE\n";
  }
  return rc;
}

struct OracleArgs {
  std::string file;
  int length = -1;
};

int do_oracle(const OracleArgs& a, bool as_json, std::ostream& out, std::ostream&) {
  BipartiteDigraph d = parse_bdg(read_input(a.file));
  int length = a.length >= 0 ? a.length : 2 * std::min(d.a(), d.b());
  auto cycle = brute_cycle(d, length);

  if (as_json) {
    ordered_json doc{{"command", "oracle"},
                     {"length", length},
                     {"a", d.a()},
                     {"b", d.b()},
                     {"cycle", cycle ? seq_json(*cycle) : ordered_json(nullptr)}};
    emit_json(out, doc);
  } else if (cycle) {
    print_seq(out, "CYCLE", *cycle);
  } else {
    out << "NONE\n";
  }
  return cycle ? 0 : 1;
}

struct GenArgs {
  std::string kind;
  int a = -1, b = -1, k = -1;
  double p = 0.5;
  std::uint64_t seed = 0;
};

int do_gen(const GenArgs& g, bool as_json, std::ostream& out, std::ostream& err) {
  ordered_json doc{{"command", "gen"}, {"kind", g.kind}};
  BipartiteDigraph d(1, 1);
  if (g.kind == "fig1") {
    d = regular_nonhamiltonian_example();
  } else {
    if (g.a < 0 || g.b < 0) return usage_error(err, "gen " + g.kind + " requires --a and --b");
    doc["a"] = g.a;
    doc["b"] = g.b;
    if (g.kind == "complete") {
      d = complete_bipartite(g.a, g.b);
    } else if (g.kind == "fig2") {
      int k = g.k >= 0 ? g.k : 0;
      doc["k"] = k;
      d = two_block_family({g.a, g.b, k});
    } else {  // random
      if (g.p < 0.0 || g.p > 1.0) return usage_error(err, "--p must lie in [0, 1]");
      doc["p"] = g.p;
      doc["seed"] = g.seed;
      doc["generator"] = std::string(random_generator_name);
      d = random_digraph(g.a, g.b, g.p, g.seed);
    }
  }

  if (as_json) {
    doc["bdg"] = to_single_line(d);
    emit_json(out, doc);
  } else {
    out << serialize_bdg(d);
  }
  return 0;
}

struct VerifyArgs {
  int a = 0;
  int k = 2;
  std::string mode = "full";
  int jobs = 1;
  std::string range;
};

int do_verify(const VerifyArgs& v, bool as_json, std::ostream& out, std::ostream& err) {
  EngineMode mode = parse_mode(v.mode);
  std::optional<IndexRange> range;
  if (!v.range.empty()) {
    if (v.jobs != 1) return usage_error(err, "--jobs cannot be combined with --range");
    auto colon = v.range.find(':');
    try {
      if (colon == std::string::npos) throw std::invalid_argument("no ':'");
      IndexRange r{std::stoull(v.range.substr(0, colon)),
                   std::stoull(v.range.substr(colon + 1))};
      if (r.lo > r.hi) throw std::invalid_argument("lo > hi");
      std::uint64_t count = enumeration_count(v.a, v.a);
      r.lo = std::min(r.lo, count);
      r.hi = std::min(r.hi, count);
      range = r;
    } catch (const std::logic_error&) {
      return usage_error(err, "--range expects LO:HI with decimal half-open bounds");
    }
  }

  VerificationStats stats = range        ? exhaustive_verify(v.a, v.k, mode, range)
                            : v.jobs > 1 ? exhaustive_verify_parallel(v.a, v.k, mode, v.jobs)
                                         : exhaustive_verify(v.a, v.k, mode);
  int rc = stats.counterexamples.empty() && stats.engine_failures.empty() ? 0 : 1;

  if (as_json) {
    ordered_json doc{{"command", "verify-theorem"},
                     {"a", v.a},
                     {"k", v.k},
                     {"mode", engine_mode_name(mode)},
                     {"jobs", v.jobs}};
    if (range) doc["range"] = {{"lo", range->lo}, {"hi", range->hi}};
    doc["total"] = stats.total;
    doc["satisfying"] = stats.satisfying;
    doc["hamiltonian"] = stats.hamiltonian_among_satisfying;
    doc["counterexamples"] = results_json(stats.counterexamples, v.a, v.a);
    doc["engine_failures"] = results_json(stats.engine_failures, v.a, v.a);
    emit_json(out, doc);
    return rc;
  }

  out << "checked " << stats.total << " satisfying " << stats.satisfying
      << " counterexamples " << stats.counterexamples.size() << "\n";
  print_result_lines(out, stats.counterexamples, v.a, v.a);
  if (!stats.engine_failures.empty()) {
    out << "engine-failures " << stats.engine_failures.size() << "\n";
    print_result_lines(out, stats.engine_failures, v.a, v.a);
  }
  return rc;
}

int emit_codes(ordered_json doc, const std::vector<std::uint64_t>& codes, int a, int b,
               bool fail_when_found, bool as_json, std::ostream& out) {
  int rc = fail_when_found && !codes.empty() ? 1 : 0;
  if (as_json) {
    doc["found"] = codes.size();
    doc["results"] = results_json(codes, a, b);
    emit_json(out, doc);
  } else {
    out << "found " << codes.size() << "\n";
    print_result_lines(out, codes, a, b);
  }
  return rc;
}

int do_fmt(const std::string& file, bool as_json, std::ostream& out) {
  BipartiteDigraph d = parse_bdg(read_input(file));
  if (as_json) {
    emit_json(out, ordered_json{{"command", "fmt"},
                                {"a", d.a()},
                                {"b", d.b()},
                                {"bdg", to_single_line(d)}});
  } else {
    out << serialize_bdg(d);
  }
  return 0;
}

}  // namespace

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"balanced bipartite digraph hamiltonicity toolkit", "bdg"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a single JSON document instead of text lines");

  CheckArgs chk;
  auto* c_check = app.add_subcommand("check", "evaluate a degree condition on a digraph");
  c_check->fallthrough();
  c_check->add_option("file", chk.file, "BDG file, or - for standard input")->required();
  c_check->add_option("--cond", chk.cond, "a2star|a_k|ak-star|strict-half|dirac")
      ->check(CLI::IsMember({"a2star", "a_k", "ak-star", "strict-half", "dirac"}));
  c_check->add_option("--k", chk.k, "level for ak-star and a_k");

  HamiltonArgs ham;
  auto* c_ham = app.add_subcommand("hamilton", "spanning cycle or failure witness");
  c_ham->fallthrough();
  c_ham->add_option("file", ham.file, "BDG file, or - for standard input")->required();
  c_ham->add_option("--mode", ham.mode, "engine hypothesis variant")
      ->check(CLI::IsMember(mode_tokens));
  c_ham->add_flag("--trace", ham.trace, "print one MOVE line per cycle-building step");
  c_ham->add_flag("--fallback-oracle", ham.fallback,
                  "on a witness, settle hamiltonicity by exhaustive search");

  OracleArgs orc;
  auto* c_orc = app.add_subcommand("oracle", "exhaustive cycle search");
  c_orc->fallthrough();
  c_orc->add_option("file", orc.file, "BDG file, or - for standard input")->required();
  c_orc->add_option("--length", orc.length, "cycle length (default: spans the smaller class)");

  GenArgs gen;
  auto* c_gen = app.add_subcommand("gen", "write a generated digraph to standard output");
  c_gen->fallthrough();
  c_gen->add_option("kind", gen.kind, "complete|fig2|fig1|random")
      ->required()
      ->check(CLI::IsMember({"complete", "fig2", "fig1", "random"}));
  c_gen->add_option("--a", gen.a, "size of class X");
  c_gen->add_option("--b", gen.b, "size of class Y");
  c_gen->add_option("--k", gen.k, "family level (fig2)");
  c_gen->add_option("--p", gen.p, "arc probability (random)");
  c_gen->add_option("--seed", gen.seed, "generator seed (random)");

  VerifyArgs ver;
  auto* c_ver = app.add_subcommand("verify-theorem", "exhaustive engine verification sweep");
  c_ver->fallthrough();
  c_ver->add_option("--a", ver.a, "class size")->required();
  c_ver->add_option("--k", ver.k, "hypothesis level");
  c_ver->add_option("--mode", ver.mode, "engine hypothesis variant")
      ->check(CLI::IsMember(mode_tokens));
  c_ver->add_option("--jobs", ver.jobs, "worker count")->check(CLI::PositiveNumber);
  c_ver->add_option("--range", ver.range, "code interval LO:HI (half-open)");

  int sh_a = 0, sh_k = 0;
  auto* c_sharp = app.add_subcommand("sharpness", "satisfiers of a weakened bound with no spanning cycle");
  c_sharp->fallthrough();
  c_sharp->add_option("--a", sh_a, "class size")->required();
  c_sharp->add_option("--k", sh_k, "hypothesis level")->required();

  int cj_a = 0, cj_b = 0;
  auto* c_conj = app.add_subcommand("conjecture", "strict half-sum satisfiers missing a cycle through X");
  c_conj->fallthrough();
  c_conj->add_option("--a", cj_a, "size of class X")->required();
  c_conj->add_option("--b", cj_b, "size of class Y")->required();

  std::string fmt_file;
  auto* c_fmt = app.add_subcommand("fmt", "canonicalize a BDG file");
  c_fmt->fallthrough();
  c_fmt->add_option("file", fmt_file, "BDG file, or - for standard input")->required();

  std::reverse(args.begin(), args.end());
  try {
    app.parse(std::move(args));
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e, out, err);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (c_check->parsed()) return do_check(chk, as_json, out, err);
    if (c_ham->parsed()) return do_hamilton(ham, as_json, out, err);
    if (c_orc->parsed()) return do_oracle(orc, as_json, out, err);
    if (c_gen->parsed()) return do_gen(gen, as_json, out, err);
    if (c_ver->parsed()) return do_verify(ver, as_json, out, err);
    if (c_sharp->parsed())
      return emit_codes({{"command", "sharpness"}, {"a", sh_a}, {"k", sh_k}},
                        sharpness_search(sh_a, sh_k), sh_a, sh_a, false, as_json, out);
    if (c_conj->parsed())
      return emit_codes({{"command", "conjecture"}, {"a", cj_a}, {"b", cj_b}},
                        conjecture_search(cj_a, cj_b), cj_a, cj_b, true, as_json, out);
    if (c_fmt->parsed()) return do_fmt(fmt_file, as_json, out);
  } catch (const bdg::Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::theorem_violation ? 3 : 2;
  }
  return usage_error(err, "no subcommand given");
}

}  // namespace bdg::cli
