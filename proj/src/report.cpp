#include "maxmin/io/report.hpp"

#include <cmath>

namespace maxmin::io {

namespace {

json ticks(const Vector<Tick>& v) { return v.to_std(); }

Vector<Tick> vec(const json& j, Tick top) { return {top, j.get<std::vector<Tick>>()}; }

json labels(const std::vector<Index>& idx) {
  json out = json::array();
  for (Index i : idx) out.push_back(i + 1);
  return out;
}

std::vector<Index> unlabel(const json& j) {
  std::vector<Index> out;
  for (const auto& v : j) out.push_back(v.get<Index>() - 1);
  return out;
}

json optional_refined(const std::optional<Vector<Tick>>& v, Tick factor) {
  return v ? refined_to_json(*v, factor) : json(nullptr);
}

std::optional<Vector<Tick>> optional_refined_from(const json& j, Tick top, Tick factor) {
  if (j.is_null()) return std::nullopt;
  return refined_from_json(j, top, factor);
}

const char* kind_name(PermutationFailure::Kind k) {
  return k == PermutationFailure::Kind::EmptyColumn ? "EmptyColumn" : "RedundantColumn";
}

Verdict verdict_from(const std::string& s) {
  if (s == "Simple") return Verdict::Simple;
  if (s == "NotSimple") return Verdict::NotSimple;
  if (s == "Inapplicable") return Verdict::Inapplicable;
  throw Error("unknown verdict '" + s + "'");
}

}  // namespace

json refined_to_json(const Vector<Tick>& v, Tick factor) {
  json out = json::array();
  for (Index i = 0; i < v.size(); ++i) {
    if (v[i] % factor == 0)
      out.push_back(v[i] / factor);
    else
      out.push_back(double(v[i]) / double(factor));
  }
  return out;
}

Vector<Tick> refined_from_json(const json& j, Tick top, Tick factor) {
  std::vector<Tick> t;
  for (const auto& x : j) t.push_back(Tick(std::llround(x.get<double>() * factor)));
  return {Tick(top * factor), t};
}

json eigen_to_json(const Matrix<Tick>& a, const GreatestEigenvector<Tick>& g, const Aggregates<Tick>& agg) {
  return {{"top", a.top()},
          {"greatest", ticks(g.vector)},
          {"iterations", g.iterations},
          {"early_exit", g.early_exit},
          {"max_entry", agg.max_entry},
          {"row_max_floor", agg.row_max_floor},
          {"constant", ticks(agg.constant)}};
}

json orbit_to_json(const OrbitSummary<Tick>& o) {
  json trace = json::array();
  for (const auto& v : o.prefix) trace.push_back(ticks(v));
  return {{"top", o.prefix.empty() ? Tick(1) : o.prefix.front().top()},
          {"transient", o.transient},
          {"period", o.period},
          {"hits_eigenvector", o.hits_eigenvector},
          {"trace", std::move(trace)}};
}

OrbitSummary<Tick> orbit_from_json(const json& j) {
  OrbitSummary<Tick> o;
  const Tick top = j.at("top").get<Tick>();
  o.transient = j.at("transient").get<Index>();
  o.period = j.at("period").get<Index>();
  o.hits_eigenvector = j.at("hits_eigenvector").get<bool>();
  for (const auto& v : j.at("trace")) o.prefix.push_back(vec(v, top));
  return o;
}

json conformism_to_json(const ConformismReport<Tick>& r) {
  const Tick top = r.greatest.top();
  json j = {{"top", top},
            {"applicable", r.applicable},
            {"verdict", to_string(r.verdict)},
            {"gamma", r.gamma},
            {"greatest", ticks(r.greatest)},
            {"witness_from_search", r.witness_from_search}};
  if (r.level_perm) {
    json cycles = json::array();
    for (const auto& c : r.level_perm->cycles) cycles.push_back(labels(c));
    j["cycles"] = std::move(cycles);
  } else {
    j["cycles"] = nullptr;
  }
  j["permutation_failure"] =
      r.permutation_failure
          ? json{{"kind", kind_name(r.permutation_failure->kind)}, {"column", r.permutation_failure->column + 1}}
          : json(nullptr);
  j["e"] = r.ef ? ticks(r.ef->e) : json(nullptr);
  j["f"] = r.ef ? ticks(r.ef->f) : json(nullptr);
  json violations = json::array();
  for (const auto& v : r.violations)
    violations.push_back({{"arc", {v.from + 1, v.to + 1}},
                          {"condition", v.condition},
                          {"column", v.column ? json(*v.column + 1) : json(nullptr)}});
  j["violations"] = std::move(violations);
  j["witness"] = r.witness ? json{{"target", ticks(r.witness->target)},
                                  {"first", ticks(r.witness->first)},
                                  {"second", ticks(r.witness->second)}}
                           : json(nullptr);
  return j;
}

ConformismReport<Tick> conformism_from_json(const json& j) {
  ConformismReport<Tick> r;
  const Tick top = j.at("top").get<Tick>();
  r.applicable = j.at("applicable").get<bool>();
  r.verdict = verdict_from(j.at("verdict").get<std::string>());
  r.gamma = j.at("gamma").get<Tick>();
  r.greatest = vec(j.at("greatest"), top);
  r.witness_from_search = j.at("witness_from_search").get<bool>();
  if (!j.at("cycles").is_null()) {
    std::vector<Index> sigma(std::size_t(r.greatest.size()), -1);
    for (const auto& c : j.at("cycles")) {
      const auto nodes = unlabel(c);
      for (std::size_t k = 0; k < nodes.size(); ++k) sigma[std::size_t(nodes[k])] = nodes[(k + 1) % nodes.size()];
    }
    r.level_perm = CycleDecomposition::from_permutation(std::move(sigma));
  }
  if (const auto& pf = j.at("permutation_failure"); !pf.is_null()) {
    const auto kind = pf.at("kind").get<std::string>() == "EmptyColumn" ? PermutationFailure::Kind::EmptyColumn
                                                                        : PermutationFailure::Kind::RedundantColumn;
    r.permutation_failure = PermutationFailure{kind, pf.at("column").get<Index>() - 1};
  }
  if (!j.at("e").is_null()) r.ef = EFVectors<Tick>{vec(j.at("e"), top), vec(j.at("f"), top)};
  for (const auto& v : j.at("violations")) {
    Violation viol{v.at("arc")[0].get<Index>() - 1, v.at("arc")[1].get<Index>() - 1, v.at("condition").get<int>(),
                   std::nullopt};
    if (!v.at("column").is_null()) viol.column = v.at("column").get<Index>() - 1;
    r.violations.push_back(viol);
  }
  if (const auto& w = j.at("witness"); !w.is_null())
    r.witness = Witness<Tick>{vec(w.at("target"), top), vec(w.at("first"), top), vec(w.at("second"), top)};
  return r;
}

json solve_to_json(const SolveReport<Tick>& r) {
  const Tick top = r.principal.top();
  json covers = json::array();
  for (const auto& s : r.cover_sets) covers.push_back(labels(s));
  json forced = json::array();
  for (const auto& [k, v] : r.reduction.forced_columns) forced.push_back({k + 1, v});
  json capped = json::array();
  for (const auto& [k, v] : r.reduction.capped_columns) capped.push_back({k + 1, v});
  json reduction = {{"removed_rows", labels(r.reduction.removed_rows)},
                    {"kept_rows", labels(r.reduction.kept_rows)},
                    {"forced_columns", std::move(forced)},
                    {"capped_columns", std::move(capped)},
                    {"consistent", r.reduction.consistent},
                    {"conflict_column", r.reduction.conflict_column ? json(*r.reduction.conflict_column + 1)
                                                                    : json(nullptr)},
                    {"lower", ticks(r.reduction.box.lower())},
                    {"upper", ticks(r.reduction.box.upper())}};
  return {{"top", top},
          {"principal", ticks(r.principal)},
          {"cover_sets", std::move(covers)},
          {"solvable", r.solvable},
          {"unique", r.unique_in_box},
          {"slack_columns", labels(r.slack_columns)},
          {"reduction", std::move(reduction)}};
}

SolveReport<Tick> solve_from_json(const json& j) {
  SolveReport<Tick> r;
  const Tick top = j.at("top").get<Tick>();
  r.principal = vec(j.at("principal"), top);
  for (const auto& s : j.at("cover_sets")) r.cover_sets.push_back(unlabel(s));
  r.solvable = j.at("solvable").get<bool>();
  r.unique_in_box = j.at("unique").get<bool>();
  r.slack_columns = unlabel(j.at("slack_columns"));
  const auto& red = j.at("reduction");
  r.reduction.removed_rows = unlabel(red.at("removed_rows"));
  r.reduction.kept_rows = unlabel(red.at("kept_rows"));
  for (const auto& p : red.at("forced_columns"))
    r.reduction.forced_columns.emplace_back(p[0].get<Index>() - 1, p[1].get<Tick>());
  for (const auto& p : red.at("capped_columns"))
    r.reduction.capped_columns.emplace_back(p[0].get<Index>() - 1, p[1].get<Tick>());
  r.reduction.consistent = red.at("consistent").get<bool>();
  if (!red.at("conflict_column").is_null()) r.reduction.conflict_column = red.at("conflict_column").get<Index>() - 1;
  const auto lower = red.at("lower").get<std::vector<Tick>>();
  if (!lower.empty()) r.reduction.box = Box<Tick>(vec(red.at("lower"), top), vec(red.at("upper"), top));
  return r;
}

json robustness_to_json(const RobustnessReport<Tick>& r) {
  return {{"top", r.top},
          {"grid_factor", r.grid_factor},
          {"weakly_robust", r.weakly_robust},
          {"weakly_x_robust", r.weakly_x_robust},
          {"x_invariant", r.x_invariant},
          {"forms_agree", r.forms_agree},
          {"robust_counterexample", optional_refined(r.robust_counterexample, r.grid_factor)},
          {"x_counterexample", optional_refined(r.x_counterexample, r.grid_factor)}};
}

RobustnessReport<Tick> robustness_from_json(const json& j) {
  RobustnessReport<Tick> r;
  r.top = j.at("top").get<Tick>();
  r.grid_factor = j.at("grid_factor").get<Tick>();
  r.weakly_robust = j.at("weakly_robust").get<bool>();
  r.weakly_x_robust = j.at("weakly_x_robust").get<bool>();
  r.x_invariant = j.at("x_invariant").get<bool>();
  r.forms_agree = j.at("forms_agree").get<bool>();
  r.robust_counterexample = optional_refined_from(j.at("robust_counterexample"), r.top, r.grid_factor);
  r.x_counterexample = optional_refined_from(j.at("x_counterexample"), r.top, r.grid_factor);
  return r;
}

}  // namespace maxmin::io
