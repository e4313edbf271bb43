#include "maxmin/io/cli.hpp"

#include "maxmin/io/instance.hpp"
#include "maxmin/io/report.hpp"
#include "maxmin/io/sampling.hpp"
#include "maxmin/maxmin.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>
#include <thread>

namespace maxmin::io {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string input;
  bool json = false;
  std::string b;
  std::string x0;
  bool force_oracle = false;
  Index max_oracle_n = 4;
  std::size_t max_oracle_candidates = 16;
  bool grid_refine = false;
  std::optional<std::uint64_t> seed;
  std::size_t count = 200;
  std::string dump;
};

OracleLimits limits_of(const Options& o) {
  OracleLimits l;
  l.max_n = o.max_oracle_n;
  l.refine = o.grid_refine ? 4 : 2;
  l.max_candidates = o.max_oracle_candidates * std::size_t(l.refine / 2);
  l.workers = std::max(1u, std::thread::hardware_concurrency());
  return l;
}

std::string fmt_tick(Tick t, Tick factor) {
  if (t % factor == 0) return std::to_string(t / factor);
  std::ostringstream s;
  s << double(t) / double(factor);
  return s.str();
}

std::string fmt(const Vector<Tick>& v, Tick factor = 1) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt_tick(v[i], factor);
  return s + ")";
}

std::string fmt_set(const IndexSet& set) {
  std::string s = "{";
  for (std::size_t k = 0; k < set.size(); ++k) s += (k ? ", " : "") + std::to_string(set[k] + 1);
  return s + "}";
}

std::string fmt_cycles(const CycleDecomposition& d) {
  std::string s;
  for (const auto& c : d.cycles) {
    s += "(";
    for (std::size_t k = 0; k < c.size(); ++k) s += (k ? " " : "") + std::to_string(c[k] + 1);
    s += ")";
  }
  return s;
}

const char* yes_no(bool b) { return b ? "yes" : "no"; }

class Table {
 public:
  Table& row(std::string key, std::string value) {
    rows_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  void print(std::ostream& out) const {
    std::size_t width = 0;
    for (const auto& [k, v] : rows_) width = std::max(width, k.size());
    for (const auto& [k, v] : rows_) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  }

 private:
  std::vector<std::pair<std::string, std::string>> rows_;
};

Vector<Tick> flag_vector(const std::string& flag, const std::string& text, const Instance& inst) {
  std::vector<Tick> ticks;
  try {
    ticks = parse_tick_list(text);
  } catch (const ParseError& e) {
    throw UsageError(flag + ": " + e.what());
  }
  if (Index(ticks.size()) != inst.size())
    throw UsageError(flag + ": expected " + std::to_string(inst.size()) + " values, got " +
                     std::to_string(ticks.size()));
  for (Tick t : ticks)
    if (t > inst.top)
      throw UsageError(flag + ": tick " + std::to_string(t) + " outside [0, " + std::to_string(inst.top) + "]");
  return {inst.top, ticks};
}

int cmd_eigen(const Instance& inst, const Options& o, std::ostream& out) {
  const auto g = greatest_eigenvector_trace(inst.matrix);
  const auto agg = aggregates(inst.matrix);
  if (o.json) {
    out << eigen_to_json(inst.matrix, g, agg).dump(2) << '\n';
  } else {
    Table()
        .row("greatest eigenvector x+", fmt(g.vector))
        .row("c(A)", std::to_string(agg.row_max_floor))
        .row("c*(A)", fmt(agg.constant))
        .row("m_A", std::to_string(agg.max_entry))
        .row("iterations", std::to_string(g.iterations) + (g.early_exit ? " (early exit)" : ""))
        .print(out);
  }
  return kHolds;
}

int cmd_orbit(const Instance& inst, const Options& o, std::ostream& out) {
  Vector<Tick> x0;
  if (!o.x0.empty())
    x0 = flag_vector("--x0", o.x0, inst);
  else if (inst.vector)
    x0 = *inst.vector;
  else
    throw UsageError("orbit needs a start vector: pass --x0 or set \"vector\" in the instance");
  const auto orb = orbit(inst.matrix, x0);
  if (o.json) {
    out << orbit_to_json(orb).dump(2) << '\n';
  } else {
    Table t;
    t.row("transient", std::to_string(orb.transient))
        .row("period", std::to_string(orb.period))
        .row("reaches V(A)", yes_no(orb.hits_eigenvector));
    for (std::size_t r = 0; r < orb.prefix.size(); ++r) t.row("x(" + std::to_string(r) + ")", fmt(orb.prefix[r]));
    t.print(out);
  }
  return orb.hits_eigenvector ? kHolds : kFails;
}

int cmd_check_conforming(const Instance& inst, const Options& o, std::ostream& out) {
  const auto limits = limits_of(o);
  const auto x = inst.box();
  const auto rep = check_conforming(inst.matrix, x, limits);
  std::optional<OracleVerdict<Tick>> oracle;
  int code = rep.verdict == Verdict::Simple ? kHolds : rep.verdict == Verdict::NotSimple ? kFails : kInapplicable;
  if (rep.verdict == Verdict::Inapplicable && o.force_oracle) {
    oracle = brute_x_simple(inst.matrix, x, limits);
    code = oracle->holds ? kHolds : kFails;
  }

  if (o.json) {
    auto j = conformism_to_json(rep);
    if (oracle) {
      const Tick f = oracle->grid.factor;
      j["oracle"] = {{"holds", oracle->holds},
                     {"grid_factor", f},
                     {"eigenvectors", oracle->eigenvectors},
                     {"witness", oracle->witness ? json{{"target", refined_to_json(oracle->witness->first, f)},
                                                        {"second", refined_to_json(oracle->witness->second, f)}}
                                                 : json(nullptr)}};
    }
    out << j.dump(2) << '\n';
    return code;
  }

  Table t;
  t.row("verdict", to_string(rep.verdict)).row("x+", fmt(rep.greatest));
  if (!rep.applicable) {
    t.row("reason", "needs lower < c*(A) and max lower < min upper");
  } else {
    t.row("gamma", std::to_string(rep.gamma));
    if (rep.level_perm) t.row("level cycles", fmt_cycles(*rep.level_perm));
    if (rep.permutation_failure) {
      const bool empty = rep.permutation_failure->kind == PermutationFailure::Kind::EmptyColumn;
      t.row("not a level permutation", std::string(empty ? "column " : "redundant column ") +
                                           std::to_string(rep.permutation_failure->column + 1) +
                                           (empty ? " has no entry >= gamma" : ""));
    }
    if (rep.ef) t.row("e", fmt(rep.ef->e)).row("f", fmt(rep.ef->f));
    for (const auto& v : rep.violations) {
      std::string what = "arc (" + std::to_string(v.from + 1) + "," + std::to_string(v.to + 1) + ")";
      if (v.column) what += ", column " + std::to_string(*v.column + 1);
      t.row("violates condition " + std::to_string(v.condition), what);
    }
    if (rep.verdict == Verdict::Simple)
      for (const auto& r : eigenspace_structure(rep)) {
        std::string label = "(";
        for (std::size_t k = 0; k < r.cycle.size(); ++k) label += (k ? " " : "") + std::to_string(r.cycle[k] + 1);
        t.row("values on cycle " + label + ")", "[" + std::to_string(r.low) + ", " + std::to_string(r.high) + "]");
      }
    if (rep.witness) {
      t.row("witness b", fmt(rep.witness->target))
          .row("witness y1", fmt(rep.witness->first))
          .row("witness y2", fmt(rep.witness->second));
      if (rep.witness_from_search) t.row("witness source", "grid search");
    }
  }
  if (oracle) {
    const Tick f = oracle->grid.factor;
    t.row("oracle verdict", oracle->holds ? "Simple" : "NotSimple");
    if (oracle->witness)
      t.row("oracle witness b", fmt(oracle->witness->first, f)).row("oracle witness y2", fmt(oracle->witness->second, f));
  }
  t.print(out);
  return code;
}

int cmd_solve(const Instance& inst, const Options& o, std::ostream& out) {
  Vector<Tick> b;
  if (!o.b.empty())
    b = flag_vector("--b", o.b, inst);
  else if (inst.b)
    b = *inst.b;
  else
    throw UsageError("solve needs a right-hand side: pass --b or set \"b\" in the instance");
  const auto x = inst.box();
  const auto rep = solve(inst.matrix, b, x);
  const auto second = second_solution(inst.matrix, b, x, rep);
  const int code = rep.unique_in_box ? kHolds : rep.solvable ? kFails : kInapplicable;

  if (o.json) {
    auto j = solve_to_json(rep);
    j["second_solution"] = second ? json(second->to_std()) : json(nullptr);
    out << j.dump(2) << '\n';
    return code;
  }
  Table t;
  t.row("solvable", yes_no(rep.solvable)).row("unique in X", yes_no(rep.unique_in_box)).row("principal", fmt(rep.principal));
  for (std::size_t j = 0; j < rep.cover_sets.size(); ++j)
    t.row("M_" + std::to_string(j + 1), fmt_set(rep.cover_sets[j]));
  if (!rep.slack_columns.empty()) t.row("slack columns", fmt_set(rep.slack_columns));
  if (second) t.row("second solution", fmt(*second));
  if (!rep.reduction.removed_rows.empty()) {
    t.row("rows at lower bound", fmt_set(rep.reduction.removed_rows));
    if (!rep.reduction.consistent)
      t.row("conflict", "column " + std::to_string(*rep.reduction.conflict_column + 1) + " capped below its lower bound");
    for (const auto& [k, v] : rep.reduction.forced_columns)
      t.row("forced x_" + std::to_string(k + 1), std::to_string(v));
    for (const auto& [k, v] : rep.reduction.capped_columns)
      t.row("capped x_" + std::to_string(k + 1), "<= " + std::to_string(v));
  }
  t.print(out);
  return code;
}

int cmd_robust(const Instance& inst, const Options& o, std::ostream& out) {
  const auto rep = robustness_report(inst.matrix, inst.box(), limits_of(o));
  if (o.json) {
    out << robustness_to_json(rep).dump(2) << '\n';
  } else {
    Table t;
    t.row("weakly robust", yes_no(rep.weakly_robust))
        .row("weakly X-robust", yes_no(rep.weakly_x_robust))
        .row("X invariant", yes_no(rep.x_invariant))
        .row("characterizations agree", yes_no(rep.forms_agree));
    if (rep.robust_counterexample)
      t.row("attracted, not fixed", fmt(*rep.robust_counterexample, rep.grid_factor));
    if (rep.x_counterexample) t.row("attracted in X, not fixed", fmt(*rep.x_counterexample, rep.grid_factor));
    t.print(out);
  }
  return rep.weakly_x_robust ? kHolds : kFails;
}

struct Check {
  std::string name;
  std::string analytic;
  std::string oracle;
  bool agree{true};
};

std::vector<Check> verify_instance(const Matrix<Tick>& a, const Box<Tick>& x, const std::optional<Vector<Tick>>& b,
                                   const OracleLimits& limits) {
  std::vector<Check> checks;
  const Index n = a.size();

  {
    const auto g = greatest_eigenvector(a);
    const auto all = enumerate_eigenvectors(a, Box<Tick>::full(n, a.top()), limits);
    VectorStorage<Tick> top = VectorStorage<Tick>::Zero(n);
    for (const auto& p : all.points) top = top.cwiseMax(p.ticks());
    const Vector<Tick> best(all.grid.top, top);
    checks.push_back({"greatest eigenvector", fmt(g), fmt(best, all.grid.factor), refine(g, all.grid.factor) == best});
  }

  const auto rep = check_conforming(a, x, limits);
  const auto brute = brute_x_simple(a, x, limits);
  const std::string brute_verdict = brute.holds ? "Simple" : "NotSimple";
  if (rep.verdict == Verdict::Inapplicable)
    checks.push_back({"X-simple image eigenspace", "Inapplicable", brute_verdict, true});
  else
    checks.push_back({"X-simple image eigenspace", to_string(rep.verdict), brute_verdict,
                      (rep.verdict == Verdict::Simple) == brute.holds});

  if (rep.verdict == Verdict::Simple) {
    const auto ranges = eigenspace_structure(rep);
    const auto eig = enumerate_eigenvectors(a, x, limits);
    const Tick f = eig.grid.factor;
    const auto described = collect_points(eig.grid, limits.workers, [&](const VectorStorage<Tick>& p) {
      return in_structure(ranges, Vector<Tick>(eig.grid.top, p), f);
    });
    bool same = described.size() == eig.points.size();
    for (std::size_t k = 0; same && k < described.size(); ++k) same = described[k] == eig.points[k].ticks();
    checks.push_back({"eigenspace in X", std::to_string(described.size()) + " grid points by cycle ranges",
                      std::to_string(eig.points.size()) + " grid eigenvectors", same});
  }
  if (rep.verdict == Verdict::NotSimple)
    checks.push_back({"witness", "b=" + fmt(rep.witness->target) + " y2=" + fmt(rep.witness->second), "substitution",
                      witness_valid(a, x, *rep.witness)});

  if (b) {
    const auto sol = solve(a, *b, x);
    const auto en = enumerate_solutions(a, *b, x, limits);
    const Tick f = en.grid.factor;
    bool agree = sol.solvable == !en.points.empty() && sol.unique_in_box == (en.points.size() == 1);
    std::string oracle = std::to_string(en.points.size()) + " grid solutions";
    if (!en.points.empty()) {
      VectorStorage<Tick> top = en.points.front().ticks();
      for (const auto& p : en.points) top = top.cwiseMax(p.ticks());
      const Vector<Tick> best(en.grid.top, top);
      oracle += ", max " + fmt(best, f);
      if (sol.solvable) agree = agree && refine(sol.principal, f) == best;
    }
    const std::string analytic = std::string(sol.solvable ? (sol.unique_in_box ? "unique" : "solvable") : "unsolvable") +
                                 ", principal " + fmt(sol.principal);
    checks.push_back({"solve", analytic, oracle, agree});
  }

  {
    const auto rr = robustness_report(a, x, limits);
    const std::string analytic = std::string("weakly robust ") + yes_no(rr.weakly_robust) + ", weakly X-robust " +
                                 yes_no(rr.weakly_x_robust);
    checks.push_back({"robustness characterizations", analytic, rr.forms_agree ? "forms agree" : "forms disagree",
                      rr.forms_agree && (!rr.weakly_robust || rr.weakly_x_robust)});
  }
  return checks;
}

bool all_agree(const std::vector<Check>& checks) {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.agree; });
}

json checks_to_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks)
    out.push_back({{"name", c.name}, {"analytic", c.analytic}, {"oracle", c.oracle}, {"agree", c.agree}});
  return out;
}

void print_checks(const std::vector<Check>& checks, std::ostream& out) {
  Table t;
  for (const auto& c : checks) t.row(c.name, std::string(c.agree ? "agree" : "DISAGREE") + ": " + c.analytic + " | oracle " + c.oracle);
  t.print(out);
}

void dump_instance(const Instance& inst, const Options& o, std::ostream& err) {
  const std::string text = to_json(inst).dump() + "\n";
  if (o.dump.empty()) {
    err << "disagreeing instance:\n" << text;
    return;
  }
  std::ofstream f(o.dump);
  f << text;
  err << "disagreeing instance written to " << o.dump << '\n';
}

int cmd_verify_harness(const Options& o, std::ostream& out, std::ostream& err) {
  const auto limits = limits_of(o);
  Rng rng(*o.seed);
  for (std::size_t k = 0; k < o.count; ++k) {
    const Index n = Index(2 + rng() % 2);
    const Tick top = 10;
    Instance inst;
    inst.top = top;
    if (rng() % 2 == 0) {
      auto s = random_conformism_sample(rng, n, top);
      inst.matrix = s.matrix;
      inst.lower = s.box.lower();
      inst.upper = s.box.upper();
    } else {
      const auto palette = random_palette(rng, top, 5);
      inst.matrix = random_matrix(rng, n, top, palette);
      const auto x = random_box(rng, n, top, palette);
      inst.lower = x.lower();
      inst.upper = x.upper();
    }
    const auto palette = random_palette(rng, top, 5);
    inst.b = rng() % 2 == 0 ? matvec(inst.matrix, random_vector(rng, n, top, palette)) : random_vector(rng, n, top, palette);
    const auto checks = verify_instance(inst.matrix, inst.box(), inst.b, limits);
    if (!all_agree(checks)) {
      if (o.json)
        out << json{{"instances", k + 1}, {"agree", false}, {"checks", checks_to_json(checks)}}.dump(2) << '\n';
      else
        print_checks(checks, out);
      dump_instance(inst, o, err);
      return kFails;
    }
  }
  if (o.json)
    out << json{{"instances", o.count}, {"agree", true}, {"seed", *o.seed}}.dump(2) << '\n';
  else
    Table().row("instances", std::to_string(o.count)).row("seed", std::to_string(*o.seed)).row("result", "all checks agree").print(out);
  return kHolds;
}

int cmd_verify(const Instance& inst, const Options& o, std::ostream& out, std::ostream& err) {
  const auto checks = verify_instance(inst.matrix, inst.box(), inst.b, limits_of(o));
  const bool agree = all_agree(checks);
  if (o.json)
    out << json{{"instances", 1}, {"agree", agree}, {"checks", checks_to_json(checks)}}.dump(2) << '\n';
  else
    print_checks(checks, out);
  if (!agree) dump_instance(inst, o, err);
  return agree ? kHolds : kFails;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Max-min linear algebra over the chain [0, top]"};
  app.name("maxmin");
  app.require_subcommand(1, 1);

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input,-i", o.input, "Instance file (JSON)");
    sub->add_flag("--json", o.json, "Machine-readable output");
  };
  auto oracle_opts = [&](CLI::App* sub) {
    sub->add_option("--max-oracle-n", o.max_oracle_n, "Largest dimension the oracle enumerates")->check(CLI::PositiveNumber);
    sub->add_option("--max-oracle-candidates", o.max_oracle_candidates, "Grid candidates allowed per coordinate")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--grid-refine", o.grid_refine, "Three interior grid points per gap instead of one");
  };

  auto* eigen = app.add_subcommand("eigen", "Greatest eigenvector and aggregates");
  common(eigen);
  auto* orb = app.add_subcommand("orbit", "Transient and period of the orbit of x0");
  common(orb);
  orb->add_option("--x0", o.x0, "Start vector, e.g. 7,9,6,5");
  auto* conf = app.add_subcommand("check-conforming", "Is every eigenvector in X an X-simple image?");
  common(conf);
  oracle_opts(conf);
  conf->add_flag("--force-oracle", o.force_oracle, "Decide by enumeration when the test is inapplicable");
  auto* sol = app.add_subcommand("solve", "Solve A x = b within X");
  common(sol);
  sol->add_option("--b", o.b, "Right-hand side, e.g. 5,6,6,5");
  auto* rob = app.add_subcommand("robust", "Weak robustness, weak X-robustness, invariance of X");
  common(rob);
  oracle_opts(rob);
  auto* ver = app.add_subcommand("verify", "Cross-check analytic results against the oracle");
  common(ver);
  oracle_opts(ver);
  ver->add_option("--seed", o.seed, "Run the randomized harness with this seed instead of --input");
  ver->add_option("--count", o.count, "Random instances for --seed")->check(CLI::PositiveNumber);
  ver->add_option("--dump", o.dump, "Write a disagreeing instance here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kHolds : kUsage;
  }

  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  try {
    if (name == "verify" && o.seed) return cmd_verify_harness(o, out, err);
    if (o.input.empty()) throw UsageError(name + " needs --input");
    Instance inst;
    try {
      inst = load_instance(o.input);
    } catch (const ParseError& e) {
      err << o.input << ": " << e.what() << '\n';
      return kInputError;
    }
    if (name == "eigen") return cmd_eigen(inst, o, out);
    if (name == "orbit") return cmd_orbit(inst, o, out);
    if (name == "check-conforming") return cmd_check_conforming(inst, o, out);
    if (name == "solve") return cmd_solve(inst, o, out);
    if (name == "robust") return cmd_robust(inst, o, out);
    return cmd_verify(inst, o, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const TooLargeError& e) {
    err << "instance too large for the oracle: " << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace maxmin::io
