#pragma once

// Command layer behind the monideal tool: one report per (command, instance).

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <functional>
#include <future>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <variant>
#include <vector>

#include "json.hpp"
#include "monideal/asym.hpp"
#include "monideal/core.hpp"
#include "monideal/decomp.hpp"
#include "monideal/error.hpp"
#include "monideal/generator.hpp"
#include "monideal/lp.hpp"
#include "monideal/polar.hpp"
#include "monideal/powers.hpp"
#include "monideal/text.hpp"
#include "monideal/weightgraph.hpp"

namespace monideal::cli {

using Json = nlohmann::ordered_json;
using monideal::to_string;

inline constexpr std::string_view schema_version = "1.0.0";

inline const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names{
      "decompose", "assprimes", "sympow",     "alpha", "polarize", "weighting", "hypergraph", "whisker",
      "waldschmidt", "c1",      "simis",      "c2",    "resurgence", "membership", "generate", "batch"};
  return names;
}

struct Options {
  bool json = false;
  std::optional<std::size_t> vars;
  unsigned max_s = 4;
  unsigned max_t = 4;
  unsigned s = 2;
  unsigned t = 2;
  std::optional<std::string> monomial;
  GeneratorConfig generator;
  std::string batch_command = "c1";
  unsigned threads = 0;  // 0: hardware concurrency
  std::string counterexample_path = "c1-counterexamples.txt";
  bool timings = true;
};

struct Instance {
  std::string label;
  std::string text;
};

struct Report {
  Json json;
  std::string text;
  int exit_code = 0;
};

enum class Status { ok, refuted, error };

inline std::string_view to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::refuted: return "refuted";
    case Status::error: return "error";
  }
  return "?";
}

inline int exit_code(Status s) { return s == Status::ok ? 0 : s == Status::refuted ? 2 : 1; }

/// Instance files: one instance per line, optionally "label: text"; blank
/// lines and lines starting with '#' are skipped.
inline std::vector<Instance> parse_instance_lines(std::string_view text) {
  std::vector<Instance> out;
  std::vector<std::string> labels;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    Instance inst;
    auto colon = line.find(':');
    if (colon != std::string::npos) {
      inst.label = line.substr(first, colon - first);
      while (!inst.label.empty() && std::isspace(static_cast<unsigned char>(inst.label.back()))) inst.label.pop_back();
      inst.text = line.substr(colon + 1);
    } else {
      inst.label = "line-" + std::to_string(lineno);
      inst.text = line.substr(first);
    }
    while (!inst.text.empty() && std::isspace(static_cast<unsigned char>(inst.text.back()))) inst.text.pop_back();
    if (inst.label.empty()) throw Error(Errc::syntax_error, "line " + std::to_string(lineno) + ": empty label");
    if (std::find(labels.begin(), labels.end(), inst.label) != labels.end())
      throw Error(Errc::invalid_argument, "duplicate instance label '" + inst.label + "'");
    labels.push_back(inst.label);
    out.push_back(std::move(inst));
  }
  return out;
}

namespace detail {

inline Json vars_json(const std::vector<VarIndex>& vars) {
  Json a = Json::array();
  for (auto v : vars) a.push_back(v + 1);
  return a;
}

inline Json gens_json(const MonomialIdeal& ideal) {
  Json a = Json::array();
  for (const auto& g : ideal.gens()) a.push_back(render(g, ideal.ring()));
  return a;
}

inline Json rationals_json(const std::vector<Rational>& qs) {
  Json a = Json::array();
  for (const auto& q : qs) a.push_back(to_string(q));
  return a;
}

inline Decomposition as_decomposition(const IdealOrDecomposition& v) {
  if (auto d = std::get_if<Decomposition>(&v)) return *d;
  return irreducible_decomposition(std::get<MonomialIdeal>(v));
}

inline MonomialIdeal as_ideal(const IdealOrDecomposition& v) {
  if (auto i = std::get_if<MonomialIdeal>(&v)) return *i;
  return ideal_of(std::get<Decomposition>(v));
}

inline void require_positive(unsigned v, const char* flag) {
  if (v == 0) throw Error(Errc::invalid_argument, std::string(flag) + " must be at least 1");
}

inline void persist_counterexample(const std::string& path, const std::string& label, const std::string& canonical) {
  if (path.empty()) return;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  std::ofstream out(path, std::ios::app);
  out << label << ": " << canonical << "\n";
}

inline std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

inline void text_lines(const Json& obj, const std::string& prefix, std::string& out) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    const auto key = prefix + it.key();
    if (it->is_object() && !it->empty()) {
      text_lines(*it, key + ".", out);
    } else {
      out += key + ": " + scalar_text(*it) + "\n";
    }
  }
}

inline std::string render_text(const Json& report) {
  std::string out;
  if (report.contains("instance")) {
    const auto& inst = report["instance"];
    out += "instance " + inst["label"].get<std::string>();
    if (inst.contains("canonical")) out += ": " + inst["canonical"].get<std::string>();
    out += "\n";
  }
  out += "command: " + report["command"].get<std::string>() + "\n";
  out += "status: " + report["status"].get<std::string>() + "\n";
  if (report.contains("error"))
    out += "error: " + report["error"]["code"].get<std::string>() + ": " +
           report["error"]["message"].get<std::string>() + "\n";
  if (report.contains("outputs")) text_lines(report["outputs"], "", out);
  return out;
}

using Handler = std::function<Status(const IdealOrDecomposition&, const Options&, Json&)>;

inline Status cmd_decompose(const IdealOrDecomposition& v, const Options&, Json& out) {
  const auto d = as_decomposition(v);
  Json comps = Json::array();
  for (const auto& c : d.components()) {
    Json w = Json::array();
    for (const auto& f : c.factors()) w.push_back(f.weight);
    comps.push_back({{"vars", vars_json(c.vars())}, {"weights", w}, {"text", render(c, d.ring())}});
  }
  out["decomposition"] = render(d);
  out["components"] = comps;
  out["irredundant"] = d.irredundant();
  out["distinct_radicals"] = d.distinct_radicals();
  out["embedded_primes"] = has_embedded_primes(d);
  out["big_height"] = big_height(d);
  return Status::ok;
}

inline Status cmd_assprimes(const IdealOrDecomposition& v, const Options&, Json& out) {
  const auto d = as_decomposition(v);
  Json primes = Json::array();
  for (const auto& p : associated_primes(d)) primes.push_back(vars_json(p));
  out["primes"] = primes;
  out["big_height"] = big_height(d);
  out["embedded_primes"] = has_embedded_primes(d);
  return Status::ok;
}

inline Status cmd_sympow(const IdealOrDecomposition& v, const Options& o, Json& out) {
  require_positive(o.s, "-s");
  const auto d = as_decomposition(v);
  const auto p = symbolic_power(d, o.s);
  out["s"] = o.s;
  out["generators"] = gens_json(p);
  out["alpha"] = alpha(p);
  return Status::ok;
}

inline Status cmd_alpha(const IdealOrDecomposition& v, const Options& o, Json& out) {
  require_positive(o.max_s, "--max-s");
  const auto ideal = as_ideal(v);
  out["alpha"] = alpha(ideal);
  const auto dec = as_decomposition(v);
  if (dec.minimal() && !has_embedded_primes(dec)) {
    Json alphas = Json::array();
    for (unsigned s = 1; s <= o.max_s; ++s) alphas.push_back(alpha(symbolic_power(dec, s)));
    out["symbolic_alphas"] = alphas;
    out["sequence"] = rationals_json(alpha_sequence(dec, o.max_s));
  }
  return Status::ok;
}

inline Status cmd_polarize(const IdealOrDecomposition& v, const Options& o, Json& out) {
  require_positive(o.s, "-s");
  const auto ideal = as_ideal(v);
  const auto pol = polarize(ideal);
  out["layer_counts"] = Json(std::vector<Exponent>(pol.layout.layer_counts().begin(), pol.layout.layer_counts().end()));
  out["generators"] = gens_json(pol.ideal);
  const auto d = as_decomposition(v);
  if (d.minimal() && !has_embedded_primes(d)) {
    const auto pd = polarized_decomposition(d);
    out["polarized_decomposition"] = render(pd.decomposition);
    out["s"] = o.s;
    out["alpha_symbolic"] = alpha(symbolic_power(d, o.s));
    out["alpha_polarized_symbolic"] = alpha_polarized_symbolic(d, o.s);
  }
  return Status::ok;
}

inline Status cmd_weighting(const IdealOrDecomposition& v, const Options&, Json& out) {
  const auto d = as_decomposition(v);
  require_minimal(d);
  Json pairs = Json::array();
  for (auto [k, l] : conflict_set(d)) pairs.push_back({k + 1, l + 1});
  out["conflict_set"] = pairs;
  if (auto det = detect_standard_weighting(d)) {
    out["standard_weighting"] = {
        {"radical", render(det->squarefree)},
        {"weights", std::vector<Exponent>(det->weighting.weights().begin(), det->weighting.weights().end())}};
  } else {
    out["standard_weighting"] = nullptr;
  }
  return Status::ok;
}

inline Status cmd_hypergraph(const IdealOrDecomposition& v, const Options&, Json& out) {
  const auto d = as_decomposition(v);
  require_minimal(d);
  const auto h = build_hypergraph(d);
  Json edges = Json::array();
  for (const auto& e : h.edges()) edges.push_back(vars_json(e));
  out["vertices"] = h.vertex_count();
  out["edges"] = edges;
  out["graph"] = h.is_graph();
  if (h.is_graph()) {
    if (auto col = is_bipartite(h)) {
      std::vector<VarIndex> side0, side1;
      for (std::size_t i = 0; i < col->size(); ++i) ((*col)[i] == 0 ? side0 : side1).push_back(i);
      out["bipartite"] = {vars_json(side0), vars_json(side1)};
    } else {
      out["bipartite"] = nullptr;
    }
  }
  out["chromatic_number"] = chromatic_number(h);
  return Status::ok;
}

inline Status cmd_whisker(const IdealOrDecomposition& v, const Options& o, Json& out) {
  require_positive(o.max_s, "--max-s");
  const auto d = as_decomposition(v);
  require_standard(d);
  const auto h = build_hypergraph(d);
  const auto ws = find_whisker_structure(h);
  if (!ws) {
    out["structure"] = nullptr;
    return Status::ok;
  }
  Json edges = Json::array();
  for (auto j : ws->whisker_edges) edges.push_back(vars_json(d[j].vars()));
  out["structure"] = {{"whisker_edges", edges},
                      {"attach_vertices", vars_json(ws->attach_vertices)},
                      {"core", vars_json(ws->core)},
                      {"degenerate", ws->degenerate(h)}};
  const bool cond = whisker_weight_conditions(d, *ws);
  out["conditions"] = cond;
  if (cond) {
    Json rows = Json::array();
    bool all = true;
    for (unsigned s = 1; s <= o.max_s; ++s) {
      const auto b = whisker_bounds(d, *ws, s);
      all = all && b.holds();
      rows.push_back({{"s", s},
                      {"ell", b.ell},
                      {"alpha_symbolic", b.alpha_symbolic},
                      {"alpha_polarized", b.alpha_polarized},
                      {"holds", b.holds()}});
    }
    out["bounds"] = rows;
    return all ? Status::ok : Status::refuted;
  }
  return Status::ok;
}

inline Status cmd_waldschmidt(const IdealOrDecomposition& v, const Options&, Json& out) {
  const auto d = as_decomposition(v);
  const auto sol = waldschmidt_lp_solution(d);
  out["lp_value"] = to_string(sol.value);
  out["point"] = rationals_json(sol.point);
  out["chudnovsky_bound"] = to_string(chudnovsky_bound(d));
  return Status::ok;
}

inline Status cmd_c1(const IdealOrDecomposition& v, const Options& o, Json& out) {
  require_positive(o.max_s, "--max-s");
  const auto d = as_decomposition(v);
  const auto rep = check_c1(d, o.max_s);
  out["result"] = std::string(to_string(rep.status));
  out["alpha"] = rep.alpha;
  out["big_height"] = rep.big_height;
  out["bound"] = to_string(rep.bound);
  out["lp_value"] = to_string(rep.lp_value);
  out["sequence"] = rationals_json(rep.sequence);
  out["standard_weighting"] = conflict_set(d).empty();
  if (rep.refuted_at) out["refuted_at"] = *rep.refuted_at;
  return rep.status == C1Status::refuted ? Status::refuted : Status::ok;
}

inline Json verdict_json(const SimisVerdict& v, const Ring& ring) {
  Json j;
  j["verdict"] = std::string(to_string(v.kind));
  if (!v.tag.empty()) j["tag"] = v.tag;
  j["power"] = v.power;
  if (v.witness) j["witness"] = render(*v.witness, ring);
  if (v.reduction)
    j["reduction"] = {
        {"radical", render(v.reduction->squarefree)},
        {"weights",
         std::vector<Exponent>(v.reduction->weighting.weights().begin(), v.reduction->weighting.weights().end())}};
  if (v.radical_check) {
    j["radical_check"] = {{"bound", v.radical_check->bound}, {"passed", v.radical_check->passed()}};
    if (v.radical_check->failing_power) j["radical_check"]["failing_power"] = *v.radical_check->failing_power;
  }
  return j;
}

inline Status cmd_simis(const IdealOrDecomposition& v, const Options& o, Json& out) {
  require_positive(o.max_s, "--max-s");
  const auto d = as_decomposition(v);
  out["bounded"] = verdict_json(simis_check(d, o.max_s), d.ring());
  out["classification"] = verdict_json(classify_simis(d, o.max_s), d.ring());
  return Status::ok;
}

inline Status cmd_c2(const IdealOrDecomposition& v, const Options& o, Json& out) {
  require_positive(o.max_s, "--max-s");
  const auto d = as_decomposition(v);
  const auto rep = check_c2(d, o.max_s);
  out["result"] = std::string(to_string(rep.status));
  out["standard_weighting"] = rep.has_standard_weighting;
  out["classification"] = verdict_json(rep.verdict, d.ring());
  if (rep.radical_check) out["radical_simis_up_to"] = rep.radical_check->passed();
  return rep.status == C2Status::refuted ? Status::refuted : Status::ok;
}

inline Status cmd_resurgence(const IdealOrDecomposition& v, const Options& o, Json& out) {
  require_positive(o.max_s, "--max-s");
  require_positive(o.max_t, "--max-t");
  const auto d = as_decomposition(v);
  const auto res = resurgence_search(d, o.max_s, o.max_t);
  Json pairs = Json::array();
  for (const auto& p : res.failing) pairs.push_back({{"s", p.s}, {"t", p.t}, {"witness", render(p.witness, d.ring())}});
  out["grid"] = {o.max_s, o.max_t};
  out["lower_bound"] = res.lower_bound ? Json(to_string(*res.lower_bound)) : Json(nullptr);
  out["failing_pairs"] = pairs;
  Json cells = Json::array();
  for (const auto& c : improved_containment_cells(d, res, o.max_s, o.max_t))
    cells.push_back({{"s", c.s}, {"t", c.t}, {"holds", c.holds}});
  out["improved_containment"] = cells;
  if (conflict_set(d).empty())
    out["rho_a_upper_bound"] = to_string(rho_a_upper_bound(d));
  return Status::ok;
}

inline Status cmd_membership(const IdealOrDecomposition& v, const Options& o, Json& out) {
  require_positive(o.t, "-t");
  if (!o.monomial) throw Error(Errc::invalid_argument, "membership needs --monomial");
  const auto d = as_decomposition(v);
  const auto ideal = ideal_of(d);
  const auto f = parse_monomial(*o.monomial, d.nvars());
  out["monomial"] = render(f, d.ring());
  out["t"] = o.t;
  out["in_ordinary_power"] = in_ordinary_power(ideal, f, o.t);
  const MembershipMatrix m(d);
  const auto mm = matrix_membership(m, f, o.t);
  out["matrix_verdict"] = mm.verdict == Membership::yes ? "yes" : mm.verdict == Membership::no ? "no" : "indeterminate";
  Json cert = Json::array();
  for (const auto& [a, mult] : mm.certificate) cert.push_back({{"column", vars_json(a)}, {"multiplicity", mult}});
  out["certificate"] = cert;
  if (!has_embedded_primes(d)) out["in_symbolic_power"] = in_symbolic_power(d, f, o.t);
  return Status::ok;
}

inline const Handler* find_handler(std::string_view cmd) {
  static const std::vector<std::pair<std::string_view, Handler>> table{
      {"decompose", cmd_decompose}, {"assprimes", cmd_assprimes},   {"sympow", cmd_sympow},
      {"alpha", cmd_alpha},         {"polarize", cmd_polarize},     {"weighting", cmd_weighting},
      {"hypergraph", cmd_hypergraph}, {"whisker", cmd_whisker},     {"waldschmidt", cmd_waldschmidt},
      {"c1", cmd_c1},               {"simis", cmd_simis},           {"c2", cmd_c2},
      {"resurgence", cmd_resurgence}, {"membership", cmd_membership}};
  for (const auto& [name, h] : table)
    if (name == cmd) return &h;
  return nullptr;
}

inline Json inputs_json(std::string_view cmd, const Options& o) {
  Json in = Json::object();
  if (o.vars) in["vars"] = *o.vars;
  if (cmd == "sympow" || cmd == "polarize") in["s"] = o.s;
  if (cmd == "membership") {
    in["t"] = o.t;
    if (o.monomial) in["monomial"] = *o.monomial;
  }
  if (cmd == "alpha" || cmd == "c1" || cmd == "simis" || cmd == "c2" || cmd == "whisker" || cmd == "resurgence")
    in["max_s"] = o.max_s;
  if (cmd == "resurgence") in["max_t"] = o.max_t;
  if (cmd == "generate" || cmd == "batch") {
    const auto& g = o.generator;
    if (cmd == "generate")
      in["generator"] = {{"n", {g.n_min, g.n_max}},
                         {"r", {g.r_min, g.r_max}},
                         {"heights", std::string(to_string(g.heights))},
                         {"h_max", g.h_max},
                         {"w", {g.w_min, g.w_max}},
                         {"filter", std::string(to_string(g.filter))},
                         {"seed", g.seed},
                         {"count", g.count}};
    if (cmd == "batch") in["command"] = o.batch_command;
  }
  return in;
}

inline double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

inline Report finish(Json j, Status st, const Options& o, std::chrono::steady_clock::time_point start) {
  j["status"] = std::string(to_string(st));
  if (o.timings) j["timings"] = {{"total_ms", elapsed_ms(start)}};
  Report r;
  r.text = render_text(j);
  r.json = std::move(j);
  r.exit_code = exit_code(st);
  return r;
}

inline void set_error(Json& j, const std::string& code, const std::string& message) {
  j["outputs"] = Json::object();
  j["error"] = {{"code", code}, {"message", message}};
}

}  // namespace detail

/// Runs one instance-level command.
inline Report run_instance_command(std::string_view cmd, const Instance& inst, const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  Json j;
  j["schema_version"] = std::string(schema_version);
  j["command"] = std::string(cmd);
  j["instance"] = {{"label", inst.label}, {"input", inst.text}};
  j["inputs"] = detail::inputs_json(cmd, o);
  Status st = Status::ok;
  try {
    const auto* handler = detail::find_handler(cmd);
    if (!handler) throw Error(Errc::invalid_argument, "unknown command '" + std::string(cmd) + "'");
    const auto parsed = parse_ideal(inst.text, o.vars);
    j["instance"]["form"] = std::holds_alternative<Decomposition>(parsed) ? "decomposition" : "generators";
    j["instance"]["canonical"] = render(parsed);
    j["instance"]["nvars"] = std::visit([](const auto& x) { return x.nvars(); }, parsed);
    Json outputs = Json::object();
    st = (*handler)(parsed, o, outputs);
    j["outputs"] = std::move(outputs);
    if (st == Status::refuted && cmd == "c1")
      detail::persist_counterexample(o.counterexample_path, inst.label, j["instance"]["canonical"].get<std::string>());
  } catch (const Error& e) {
    st = Status::error;
    detail::set_error(j, std::string(to_string(e.code())), e.what());
  } catch (const std::exception& e) {
    st = Status::error;
    detail::set_error(j, "internal", e.what());
  }
  return detail::finish(std::move(j), st, o, start);
}

inline Report run_generate(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  Json j;
  j["schema_version"] = std::string(schema_version);
  j["command"] = "generate";
  j["inputs"] = detail::inputs_json("generate", o);
  Status st = Status::ok;
  std::string lines;
  try {
    Json list = Json::array();
    for (const auto& g : generate_instances(o.generator)) {
      const auto text = render(g.decomposition);
      list.push_back({{"label", g.label}, {"text", text}});
      lines += g.label + ": " + text + "\n";
    }
    j["outputs"] = {{"instances", list}};
  } catch (const Error& e) {
    st = Status::error;
    detail::set_error(j, std::string(to_string(e.code())), e.what());
  }
  auto r = detail::finish(std::move(j), st, o, start);
  if (st == Status::ok) r.text = lines;  // plain output is a ready-to-use instance file
  return r;
}

/// Runs `o.batch_command` on every instance of an instance file. Jobs run
/// concurrently; reports come back in file order.
inline Report run_batch(std::string_view file_text, const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  Json j;
  j["schema_version"] = std::string(schema_version);
  j["command"] = "batch";
  j["inputs"] = detail::inputs_json("batch", o);
  Status st = Status::ok;
  try {
    if (o.batch_command == "batch" || o.batch_command == "generate" || !detail::find_handler(o.batch_command))
      throw Error(Errc::invalid_argument, "batch cannot run '" + o.batch_command + "'");
    const auto instances = parse_instance_lines(file_text);
    std::vector<Report> reports(instances.size());
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(o.threads ? o.threads : hw, instances.size()));
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t k = w; k < instances.size(); k += workers)
          reports[k] = run_instance_command(o.batch_command, instances[k], o);
      }));
    for (auto& f : jobs) f.get();

    Json list = Json::array();
    std::size_t ok = 0, refuted = 0, errors = 0;
    for (auto& r : reports) {
      const auto s = r.json["status"].get<std::string>();
      (s == "ok" ? ok : s == "refuted" ? refuted : errors)++;
      list.push_back(std::move(r.json));
    }
    j["outputs"] = {{"summary", {{"instances", reports.size()}, {"ok", ok}, {"refuted", refuted}, {"error", errors}}},
                    {"reports", list}};
    st = refuted ? Status::refuted : errors ? Status::error : Status::ok;
  } catch (const Error& e) {
    st = Status::error;
    detail::set_error(j, std::string(to_string(e.code())), e.what());
  }
  auto r = detail::finish(std::move(j), st, o, start);
  if (r.json["outputs"].contains("reports")) {
    std::string text;
    for (const auto& rep : r.json["outputs"]["reports"]) text += detail::render_text(rep) + "\n";
    const auto& sum = r.json["outputs"]["summary"];
    text += "summary: " + sum.dump() + "\n";
    r.text = text;
  }
  return r;
}

/// Entry point shared by the tool and the tests. `input` is the instance text
/// (or the instance file for batch); generate ignores it.
inline Report run_command(std::string_view cmd, const Instance& input, const Options& o) {
  if (cmd == "generate") return run_generate(o);
  if (cmd == "batch") return run_batch(input.text, o);
  return run_instance_command(cmd, input, o);
}

}  // namespace monideal::cli
