#include "laxlin/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "laxlin/io.hpp"

namespace laxlin {

namespace fs = std::filesystem;

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

struct Report {
  explicit Report(std::string cmd, std::optional<std::uint64_t> s = std::nullopt) : command(std::move(cmd)), seed(s) {}

  std::string command;
  std::string status = "pass";
  std::optional<std::uint64_t> seed;
  ojson counts = ojson::object();
  ojson witness;  ///< null when absent
  ojson result;   ///< null when absent
};

ojson report_json(const Report& r, std::optional<double> timing_ms) {
  ojson j;
  j["type"] = "report";
  j["command"] = r.command;
  j["status"] = r.status;
  if (r.seed) j["seed"] = *r.seed;
  if (!r.counts.empty()) j["counts"] = r.counts;
  if (!r.witness.is_null()) j["witness"] = r.witness;
  if (!r.result.is_null()) j["result"] = r.result;
  if (timing_ms) j["timing_ms"] = *timing_ms;
  return j;
}

std::string scalar(const ojson& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string report_text(const ojson& j) {
  std::ostringstream os;
  for (const auto& [key, value] : j.items()) {
    if (key == "type") continue;
    if (value.is_object()) {
      for (const auto& [k, v] : value.items()) os << key << "." << k << ": " << scalar(v) << "\n";
    } else {
      os << key << ": " << scalar(value) << "\n";
    }
  }
  return os.str();
}

std::string read_stream(std::istream& in) {
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

fs::path resolve(const std::string& path, const std::string& base) {
  fs::path p(path);
  return base.empty() || p.is_absolute() ? p : fs::path(base) / p;
}

struct Loaded {
  json doc;
  std::string source;
};

// A file path, "-" for stdin, or inline JSON starting with '{'.
Loaded load(const std::string& arg, std::istream& in, const std::string& base, const std::string& expected_type) {
  std::string text, source;
  if (arg == "-") {
    text = read_stream(in);
    source = "<stdin>";
  } else if (!arg.empty() && arg.front() == '{') {
    text = arg;
    source = "<inline>";
  } else {
    std::ifstream f(resolve(arg, base));
    if (!f) throw InputError(arg + ": cannot open file");
    text = read_stream(f);
    source = arg;
  }
  Loaded l{parse_json(text, source), source};
  require_valid(l.doc, source);
  if (!expected_type.empty()) {
    const auto t = l.doc["type"].get<std::string>();
    if (t != expected_type) throw InputError(source + ": /type: expected \"" + expected_type + "\", got \"" + t + "\"");
  }
  return l;
}

template <class F>
auto with_source(const std::string& source, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

SymSeq load_symseq(const std::string& arg, std::istream& in, const std::string& base) {
  const auto l = load(arg, in, base, "symseq");
  return with_source(l.source, [&] { return symseq_from_json(l.doc); });
}

OperadData load_operad(const std::string& arg, std::istream& in, const std::string& base) {
  const auto l = load(arg, in, base, "operad");
  return with_source(l.source, [&] { return operad_from_json(l.doc); });
}

PolyFunSeq load_funseq(const std::string& arg, std::istream& in, const std::string& base) {
  const auto l = load(arg, in, base, "funseq");
  return with_source(l.source, [&] { return funseq_from_json(l.doc); });
}

ojson laws_json(const std::vector<LawReport>& laws, Report& r) {
  ojson out = ojson::array();
  for (const auto& law : laws) {
    ojson l;
    l["law"] = law.law;
    l["checked"] = law.checked;
    l["failures"] = law.failures;
    out.push_back(l);
    r.counts[law.law] = law.checked;
    if (!law.pass()) {
      r.status = "fail";
      if (r.witness.is_null()) r.witness = law.law + ": " + (law.witness.empty() ? "nothing checked" : law.witness);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Subcommands

Report cmd_partitions(int n, int k) {
  Report r{"partitions"};
  const auto parts = k > 0 ? enumerate_partitions(n, k) : enumerate_partitions(n);
  // Stirling numbers of the second kind from their recurrence.
  std::vector<std::vector<long long>> s(uz(n + 1), std::vector<long long>(uz(n + 1), 0));
  s[0][0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= i; ++j) s[uz(i)][uz(j)] = j * s[uz(i - 1)][uz(j)] + s[uz(i - 1)][uz(j - 1)];
  long long expected = 0;
  for (int j = 0; j <= n; ++j)
    if (k == 0 || j == k) expected += s[uz(n)][uz(j)];
  ojson list = ojson::array();
  for (const auto& p : parts) list.push_back(to_string(p));
  r.counts["enumerated"] = parts.size();
  r.counts["expected"] = expected;
  r.result["n"] = n;
  if (k > 0) r.result["k"] = k;
  r.result["partitions"] = list;
  if (static_cast<long long>(parts.size()) != expected) {
    r.status = "fail";
    r.witness = "count differs from the Stirling recurrence";
  }
  return r;
}

Report cmd_injections(int m, int n) {
  Report r{"injections"};
  const auto all = enumerate_injections(m, n);
  long long expected = 1;
  for (int i = 0; i < m; ++i) expected *= n - i;
  ojson list = ojson::array();
  long long standard = 0;
  for (const auto& f : all) {
    list.push_back(to_string(f));
    standard += is_standard_inclusion(f) ? 1 : 0;
  }
  r.counts["enumerated"] = all.size();
  r.counts["expected"] = expected;
  r.counts["standard"] = standard;
  r.result["m"] = m;
  r.result["n"] = n;
  r.result["injections"] = list;
  if (static_cast<long long>(all.size()) != expected || standard != (m <= n ? 1 : 0)) {
    r.status = "fail";
    r.witness = "count differs from n!/(n-m)! or the standard inclusion is not unique";
  }
  return r;
}

Report cmd_compose_symseq(const SymSeq& a, const SymSeq& b, int max_level) {
  Report r{"compose-symseq"};
  const auto c = compose_product(a, b, max_level);
  ojson levels = ojson::array();
  for (int n = 1; n <= max_level; ++n) {
    const auto& lv = c.seq.level(n);
    const long long oracle = composite_cardinality(a, b, n);
    ojson l;
    l["n"] = n;
    l["size"] = lv.size();
    l["oracle"] = oracle;
    l["elements"] = lv.labels();
    levels.push_back(l);
    r.counts["level " + std::to_string(n)] = lv.size();
    if (lv.size() != oracle && r.status == "pass") {
      r.status = "fail";
      r.witness = "level " + std::to_string(n) + ": " + std::to_string(lv.size()) + " elements, partition sum gives " + std::to_string(oracle);
    }
  }
  r.result["levels"] = levels;
  r.result["composite"] = to_json(c.seq);
  return r;
}

Report cmd_check_operad(const OperadData& op, int max_level) {
  Report r{"check-operad"};
  const auto rep = check_operad(op, max_level);
  r.counts["checked"] = rep.checked;
  if (!rep.pass) {
    r.status = "fail";
    ojson w;
    w["law"] = rep.law;
    w["tuple"] = rep.witness;
    w["lhs"] = rep.lhs;
    w["rhs"] = rep.rhs;
    r.witness = w;
  }
  return r;
}

ojson composite_terms_json(const FunComposite& c, const PolyFunSeq& g) {
  ojson levels = ojson::array();
  for (int n = 1; n <= c.seq.max_level(); ++n) {
    ojson terms = ojson::array();
    const auto& lv = c.seq.level(n);
    for (std::size_t t = 0; t < lv.terms.size(); ++t) {
      const auto& ct = c.terms[uz(n - 1)][t];
      ojson coeff = ojson::array();
      for (const auto& label : lv.terms[t].coeff) coeff.push_back(render(label));
      ojson e;
      e["coeff"] = coeff;
      e["exps"] = lv.terms[t].exps;
      e["partition"] = to_string(ct.partition);
      e["outer"] = ct.outer;
      e["outer_exps"] = g.level(ct.partition.num_blocks()).terms[uz(ct.outer)].exps;
      e["inner"] = ct.inner;
      terms.push_back(e);
    }
    ojson l;
    l["n"] = n;
    l["terms"] = terms;
    levels.push_back(l);
  }
  return levels;
}

Report cmd_compose_funseq(const PolyFunSeq& g, const PolyFunSeq& f, int max_level) {
  Report r{"compose-funseq"};
  const auto c = compose_funseq(g, f, max_level);
  for (int n = 1; n <= max_level; ++n) r.counts["level " + std::to_string(n)] = c.seq.level(n).terms.size();
  r.result["levels"] = composite_terms_json(c, g);
  r.result["composite"] = to_json(c.seq);
  return r;
}

Report cmd_multilinearize(const PolyFunSeq& f) {
  Report r{"multilinearize"};
  const auto m = multilinearize_at_S0(f);
  for (int n = 1; n <= m.seq.max_level(); ++n) r.counts["level " + std::to_string(n)] = m.seq.level(n).size();
  r.result = to_json(m.seq);
  return r;
}

Report cmd_chain_rule(const PolyFunSeq& g, const PolyFunSeq& f, int max_level) {
  Report r{"chain-rule"};
  const auto rep = chain_rule_compare(g, f, max_level);
  ojson levels = ojson::array();
  bool oracle_ok = true;
  for (const auto& lv : rep.levels) {
    ojson l;
    l["n"] = lv.n;
    l["lhs"] = lv.lhs;
    l["rhs"] = lv.rhs;
    l["oracle"] = lv.oracle;
    levels.push_back(l);
    r.counts["level " + std::to_string(lv.n)] = lv.lhs;
    oracle_ok = oracle_ok && lv.lhs == lv.oracle;
  }
  ojson flags;
  flags["well_defined"] = rep.well_defined;
  flags["injective"] = rep.injective;
  flags["surjective"] = rep.surjective;
  flags["equivariant"] = rep.equivariant;
  flags["multipointed"] = rep.multipointed;
  ojson flagged = ojson::array();
  for (const auto& [n, p] : rep.flagged) {
    ojson e;
    e["n"] = n;
    e["partition"] = to_string(p);
    flagged.push_back(e);
  }
  r.result["bijective_equivariant"] = rep.bijective_equivariant();
  r.result["flags"] = flags;
  r.result["levels"] = levels;
  r.result["flagged"] = flagged;
  if (!rep.bijective_equivariant()) {
    r.status = "fail";
    r.witness = rep.witness;
  } else if (!oracle_ok) {
    r.status = "fail";
    r.witness = "cardinality differs from the partition-sum oracle";
  }
  return r;
}

std::vector<int> arities_of(const std::vector<SpherePoint>& ts) {
  std::vector<int> out;
  for (const auto& t : ts) out.push_back(t ? t->arity() : 0);
  return out;
}

Report cmd_sphere_gamma(const Loaded& l) {
  Report r{"sphere gamma"};
  const auto s = with_source(l.source, [&] { return sphere_point_from_json(l.doc["s"], "/s"); });
  std::vector<SpherePoint> ts;
  for (std::size_t i = 0; i < l.doc["ts"].size(); ++i)
    ts.push_back(with_source(l.source, [&] { return sphere_point_from_json(l.doc["ts"][i], "/ts/" + std::to_string(i)); }));
  if (s && s->arity() != static_cast<int>(ts.size()))
    throw InputError(l.source + ": /ts: need " + std::to_string(s->arity()) + " points, one per coordinate of s");
  const auto u = gamma(s, ts);
  r.result["gamma"] = to_json(u);
  if (u) {
    const auto pre = gamma_inv(*u, arities_of(ts));
    ojson inv;
    inv["outer"] = to_json(pre.outer);
    ojson inner = ojson::array();
    for (const auto& t : pre.inner) inner.push_back(to_json(t));
    inv["inner"] = inner;
    r.result["gamma_inv"] = inv;
    bool same = SpherePoint(pre.outer) == s;
    for (std::size_t i = 0; i < ts.size(); ++i) same = same && SpherePoint(pre.inner[i]) == ts[i];
    r.counts["round trips"] = 1;
    if (!same) {
      r.status = "fail";
      r.witness = "gamma_inv does not recover the inputs";
    }
  }
  return r;
}

Report cmd_sphere_coend(const Loaded& l) {
  Report r{"sphere coend"};
  const auto s = with_source(l.source, [&] { return sphere_point_from_json(l.doc["s"], "/s"); });
  std::optional<Rational> x;
  if (l.doc["x"] != "inf") x = with_source(l.source, [&] { return rational_from_json(l.doc["x"], "/x"); });
  if (x && (*x <= 0 || *x >= 1)) throw InputError(l.source + ": /x: must lie strictly between 0 and 1");
  const auto z = coend_adjoint(s, x);
  r.result["z"] = to_json(z);
  if (z) {
    const auto back = coend_inverse(*z);
    ojson inv;
    inv["s"] = to_json(back.s);
    inv["x"] = to_string(back.x);
    r.result["inverse"] = inv;
    r.counts["round trips"] = 1;
    if (SpherePoint(back.s) != s || back.x != *x) {
      r.status = "fail";
      r.witness = "coend_inverse does not recover the input";
    }
  }
  return r;
}

Report cmd_sphere_stabilize(const Loaded& l) {
  Report r{"sphere stabilize"};
  const int units = l.doc["units"].get<int>(), arity = l.doc["arity"].get<int>();
  const auto f = with_source(l.source, [&] { return descriptor_from_json(l.doc["map"], units, arity, "/map"); });
  ojson images = ojson::array();
  for (std::size_t i = 0; i < l.doc["points"].size(); ++i) {
    const auto p = with_source(l.source, [&] { return suspension_from_json(l.doc["points"][i], units, arity, "/points/" + std::to_string(i)); });
    const auto q = f(p);
    ojson e;
    e["point"] = to_json(p);
    e["image"] = to_json(q);
    e["cube"] = to_json(to_cube(q));
    images.push_back(e);
  }
  const auto [pi, rho] = f.permutation_part();
  r.counts["points"] = images.size();
  r.result["map"] = f.describe();
  r.result["slot_permutation"] = to_string(pi);
  r.result["unit_permutation"] = to_string(rho);
  r.result["images"] = images;
  return r;
}

Report cmd_conncalc(long long c, long long kappa, long long ell, int stages) {
  Report r{"conncalc report"};
  const ExcisionHypothesis h{c, kappa};
  const auto p = iterate_profile(h, ell, stages);
  const auto v = bokstedt_verdict(p);
  ojson st = ojson::array();
  for (const auto& s : p.stages) st.push_back(to_json(s));
  const auto after = iterate_T1(h, stages);
  r.counts["stages"] = p.stages.size();
  r.result["hypothesis"] = {{"c", c}, {"kappa", kappa}};
  r.result["ell"] = ell;
  r.result["t1_connectivity"] = *t1_connectivity(h, ell);
  r.result["after_stages"] = {{"c", after.c}, {"kappa", after.kappa}};
  r.result["stages"] = st;
  r.result["verdict"] = v.satisfied ? "criterion satisfied" : "not established";
  r.result["reason"] = v.reason;
  if (v.satisfied) {
    r.result["anchor"] = v.anchor;
    r.result["slope"] = v.slope ? to_string(*v.slope) : "inf";
  } else {
    r.status = "not-established";
    r.result["window"] = {v.window.first, v.window.second};
  }
  return r;
}

Report cmd_conncalc_verdict(const std::vector<std::string>& values) {
  Report r{"conncalc verdict"};
  std::vector<Connectivity> v;
  ojson echo = ojson::array();
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& s = values[i];
    if (s == "inf") {
      v.push_back(Connectivity::infinity());
    } else {
      std::size_t used = 0;
      long long x = 0;
      try {
        x = std::stoll(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != s.size())
        throw InputError("--values[" + std::to_string(i) + "]: expected an integer or inf, got '" + s + "'");
      v.push_back(Connectivity::finite(x));
    }
    echo.push_back(to_json(v.back()));
  }
  const auto verdict = bokstedt_verdict(v);
  r.counts["stages"] = v.size();
  r.result["stages"] = echo;
  r.result["verdict"] = verdict.satisfied ? "criterion satisfied" : "not established";
  r.result["reason"] = verdict.reason;
  if (verdict.satisfied) {
    r.result["anchor"] = verdict.anchor;
    r.result["slope"] = verdict.slope ? to_string(*verdict.slope) : "inf";
  } else {
    r.status = "not-established";
    r.result["window"] = {verdict.window.first, verdict.window.second};
  }
  return r;
}

Report cmd_conncalc_examples(const std::vector<int>& dims) {
  Report r{"conncalc examples"};
  ojson list = ojson::array();
  for (const auto& h : example_hypotheses(dims)) {
    ojson e;
    e["functor"] = h.functor;
    e["c"] = h.c;
    e["kappa"] = h.kappa;
    e["note"] = h.note;
    list.push_back(e);
  }
  r.counts["records"] = list.size();
  r.result["hypotheses"] = list;
  return r;
}

Report cmd_schemas(const std::string& dir) {
  Report r{"schemas"};
  const auto files = emit_schemas(dir);
  ojson names = ojson::array();
  for (const auto& f : files) names.push_back(fs::path(f).filename().string());
  r.counts["files"] = files.size();
  r.result["files"] = names;
  return r;
}

// Loads a document fully (schema plus semantic checks) without running it.
void load_any(const Loaded& l) {
  with_source(l.source, [&] {
    const auto t = l.doc["type"].get<std::string>();
    if (t == "symseq") symseq_from_json(l.doc);
    else if (t == "operad") operad_from_json(l.doc);
    else if (t == "funseq") funseq_from_json(l.doc);
    else if (t == "sphere-gamma") {
      sphere_point_from_json(l.doc["s"], "/s");
      for (std::size_t i = 0; i < l.doc["ts"].size(); ++i) sphere_point_from_json(l.doc["ts"][i], "/ts/" + std::to_string(i));
    } else if (t == "sphere-coend") {
      sphere_point_from_json(l.doc["s"], "/s");
    } else if (t == "sphere-stabilize") {
      const int units = l.doc["units"].get<int>(), arity = l.doc["arity"].get<int>();
      descriptor_from_json(l.doc["map"], units, arity, "/map");
      for (std::size_t i = 0; i < l.doc["points"].size(); ++i)
        suspension_from_json(l.doc["points"][i], units, arity, "/points/" + std::to_string(i));
    }
    return 0;
  });
}

Report cmd_validate(const std::vector<std::string>& inputs, std::istream& in, const std::string& base) {
  Report r{"validate"};
  ojson files = ojson::array();
  long long valid = 0;
  for (const auto& arg : inputs) {
    ojson e;
    e["input"] = arg;
    try {
      const auto l = load(arg, in, base, "");
      load_any(l);
      e["schema"] = schema_for(l.doc);
      e["valid"] = true;
      ++valid;
    } catch (const InputError& err) {
      e["valid"] = false;
      e["error"] = err.what();
      if (r.status == "pass") {
        r.status = "fail";
        r.witness = err.what();
      }
    }
    files.push_back(e);
  }
  r.counts["inputs"] = inputs.size();
  r.counts["valid"] = valid;
  r.result["inputs"] = files;
  return r;
}

Report cmd_golden(const std::string& data_dir, bool update) {
  Report r{update ? "golden update" : "golden check"};
  ojson cases = ojson::array();
  long long ok = 0;
  for (const auto& g : check_goldens(data_dir, update)) {
    ojson e;
    e["name"] = g.name;
    e["ok"] = g.ok;
    if (!g.ok) e["detail"] = g.detail;
    cases.push_back(e);
    ok += g.ok ? 1 : 0;
    if (!g.ok && r.status == "pass") {
      r.status = "fail";
      r.witness = g.name + ": " + g.detail;
    }
  }
  for (const auto& c : validate_corpus(data_dir)) {
    if (!c.ok && r.status == "pass") {
      r.status = "fail";
      r.witness = c.file + ": " + c.detail;
    }
    r.counts["corpus files"] = r.counts.value("corpus files", 0) + 1;
  }
  r.counts["cases"] = cases.size();
  r.counts["matching"] = ok;
  r.result["cases"] = cases;
  return r;
}

std::string example_data(const std::string& name, int max_level) {
  if (name == "com") return to_json(make_com(max_level)).dump(2);
  if (name == "ass") return to_json(make_ass(max_level)).dump(2);
  if (name == "unit") return to_json(unit_seq(max_level)).dump(2);
  for (const auto& b : builtin_examples(max_level))
    if (b.name == name) return to_json(b.seq).dump(2);
  throw InputError("unknown example '" + name + "'");
}

}  // namespace

int exit_code(const std::string& status) { return status == "pass" ? 0 : 1; }

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in,
        const std::string& base_dir) {
  CLI::App app{"Symmetric sequences, operads, functor composition, the sphere operad and connectivity estimates."};
  app.name("laxlin");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "json", output;
  bool timing = false;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--output,-o", output, "write the report to a file");
  app.add_flag("--timing", timing, "add the elapsed time to the report");

  std::function<Report()> action;
  std::function<std::string()> raw;  // commands that print data rather than a report

  struct {
    int n = 0, k = 0, m = 0, max_level = 0, grid_den = 6, max_total = 5, max_n = 4, stages = 10;
    long long samples = 0, c = 0, kappa = 0, ell = 0;
    std::uint64_t seed = 0;
    std::string a, b, g, f, input, dir = "schemas", name, data_dir;
    std::vector<std::string> inputs;
    std::vector<int> dims{0, 1, 2};
    std::vector<std::string> values;
    bool update = false;
  } o;

  auto* partitions = app.add_subcommand("partitions", "enumerate the partitions of {1..n}");
  partitions->add_option("--n", o.n, "ground set size")->required()->check(CLI::Range(0, 10));
  partitions->add_option("--k", o.k, "number of blocks (all when omitted)")->check(CLI::Range(1, 10));
  partitions->callback([&] { action = [&] { return cmd_partitions(o.n, o.k); }; });

  auto* injections = app.add_subcommand("injections", "enumerate the injections [m] -> [n]");
  injections->add_option("--m", o.m, "domain size")->required()->check(CLI::Range(0, 7));
  injections->add_option("--n", o.n, "codomain size")->required()->check(CLI::Range(0, 7));
  injections->callback([&] { action = [&] { return cmd_injections(o.m, o.n); }; });

  auto* compose_symseq = app.add_subcommand("compose-symseq", "composition product A o B");
  compose_symseq->add_option("--a", o.a, "outer sequence")->required();
  compose_symseq->add_option("--b", o.b, "inner sequence")->required();
  compose_symseq->add_option("--max-level", o.max_level)->required()->check(CLI::Range(1, 8));
  compose_symseq->callback([&] {
    action = [&] { return cmd_compose_symseq(load_symseq(o.a, in, base_dir), load_symseq(o.b, in, base_dir), o.max_level); };
  });

  auto* check = app.add_subcommand("check-operad", "check the operad axioms exhaustively");
  check->add_option("--input", o.input)->required();
  check->add_option("--max-level", o.max_level)->required()->check(CLI::Range(1, 8));
  check->callback([&] { action = [&] { return cmd_check_operad(load_operad(o.input, in, base_dir), o.max_level); }; });

  auto* compose_funseq_cmd = app.add_subcommand("compose-funseq", "substitute F into G");
  compose_funseq_cmd->add_option("--g", o.g, "outer functor sequence")->required();
  compose_funseq_cmd->add_option("--f", o.f, "inner functor sequence")->required();
  compose_funseq_cmd->add_option("--max-level", o.max_level)->required()->check(CLI::Range(1, 6));
  compose_funseq_cmd->callback([&] {
    action = [&] { return cmd_compose_funseq(load_funseq(o.g, in, base_dir), load_funseq(o.f, in, base_dir), o.max_level); };
  });

  auto* multilinearize = app.add_subcommand("multilinearize", "multilinear part at S^0");
  multilinearize->add_option("--input", o.input)->required();
  multilinearize->callback([&] { action = [&] { return cmd_multilinearize(load_funseq(o.input, in, base_dir)); }; });

  auto* chain = app.add_subcommand("chain-rule", "compare D1 G o D1 F with D1 (G o F) at S^0");
  chain->add_option("--g", o.g)->required();
  chain->add_option("--f", o.f)->required();
  chain->add_option("--max-level", o.max_level)->required()->check(CLI::Range(1, 6));
  chain->callback([&] {
    action = [&] { return cmd_chain_rule(load_funseq(o.g, in, base_dir), load_funseq(o.f, in, base_dir), o.max_level); };
  });

  auto* sphere = app.add_subcommand("sphere", "the sphere operad in exact arithmetic");
  sphere->require_subcommand(1);
  auto need_seed = [&](CLI::App* cmd) {
    if (cmd->count("--seed") == 0) throw InputError("--seed is required for randomized checks");
  };
  auto* sg = sphere->add_subcommand("gamma", "evaluate gamma on --input, or check its laws");
  sg->add_option("--input", o.input);
  sg->add_option("--samples", o.samples)->check(CLI::Range(0LL, 10000000LL));
  sg->add_option("--seed", o.seed);
  sg->add_option("--grid-den", o.grid_den)->check(CLI::Range(1, 8));
  sg->add_option("--max-total", o.max_total)->check(CLI::Range(1, 6));
  sg->callback([&] {
    action = [&, sg] {
      if (!o.input.empty()) return cmd_sphere_gamma(load(o.input, in, base_dir, "sphere-gamma"));
      need_seed(sg);
      Report r{"sphere gamma", o.seed};
      r.result["laws"] = laws_json(check_sphere_operad(o.samples, o.seed, o.grid_den, o.max_total), r);
      return r;
    };
  });
  auto* sc = sphere->add_subcommand("coend", "evaluate the cube homeomorphism on --input, or check its laws");
  sc->add_option("--input", o.input);
  sc->add_option("--samples", o.samples)->check(CLI::Range(0LL, 10000000LL));
  sc->add_option("--seed", o.seed);
  sc->add_option("--max-n", o.max_n)->check(CLI::Range(1, 8));
  sc->callback([&] {
    action = [&, sc] {
      if (!o.input.empty()) return cmd_sphere_coend(load(o.input, in, base_dir, "sphere-coend"));
      need_seed(sc);
      Report r{"sphere coend", o.seed};
      r.result["laws"] = laws_json(check_coend(o.samples, o.seed, o.max_n), r);
      return r;
    };
  });
  auto* ss = sphere->add_subcommand("stabilize", "evaluate a stabilized map on --input, or check the laws");
  ss->add_option("--input", o.input);
  ss->add_option("--samples", o.samples)->check(CLI::Range(0LL, 10000000LL));
  ss->add_option("--seed", o.seed);
  ss->callback([&] {
    action = [&, ss] {
      if (!o.input.empty()) return cmd_sphere_stabilize(load(o.input, in, base_dir, "sphere-stabilize"));
      need_seed(ss);
      Report r{"sphere stabilize", o.seed};
      r.result["laws"] = laws_json(check_stabilization(o.samples, o.seed), r);
      return r;
    };
  });
  auto* st = sphere->add_subcommand("tower-example", "stabilize along (2) then (2,1) against (3) in one step");
  st->add_option("--grid-den", o.grid_den)->check(CLI::Range(1, 12));
  st->callback([&] {
    action = [&] {
      Report r{"sphere tower-example"};
      r.result["laws"] = laws_json(reproduce_tower_example(o.grid_den), r);
      return r;
    };
  });

  auto* conn = app.add_subcommand("conncalc", "connectivity estimates for stable 1-excision");
  conn->require_subcommand(1);
  auto* cr = conn->add_subcommand("report", "stage connectivities and the growth criterion");
  cr->add_option("--c", o.c)->required();
  cr->add_option("--kappa", o.kappa)->required();
  cr->add_option("--ell", o.ell)->required();
  cr->add_option("--stages", o.stages)->check(CLI::Range(1, 100000));
  cr->callback([&] { action = [&] { return cmd_conncalc(o.c, o.kappa, o.ell, o.stages); }; });
  auto* cv = conn->add_subcommand("verdict", "the growth criterion for a given connectivity profile");
  cv->add_option("--values", o.values, "stage connectivities: integers or inf")->required();
  cv->callback([&] { action = [&] { return cmd_conncalc_verdict(o.values); }; });
  auto* ce = conn->add_subcommand("examples", "the catalogued excision statements");
  ce->add_option("--dims", o.dims, "dimensions of K");
  ce->callback([&] { action = [&] { return cmd_conncalc_examples(o.dims); }; });

  auto* schemas_cmd = app.add_subcommand("schemas", "write the JSON schemas");
  schemas_cmd->add_option("--out", o.dir, "target directory");
  schemas_cmd->callback([&] { action = [&] { return cmd_schemas(resolve(o.dir, base_dir).string()); }; });

  auto* validate_cmd = app.add_subcommand("validate", "validate documents against their schemas");
  validate_cmd->add_option("inputs", o.inputs, "files, - for stdin, or inline JSON")->required();
  validate_cmd->callback([&] { action = [&] { return cmd_validate(o.inputs, in, base_dir); }; });

  auto* golden = app.add_subcommand("golden", "replay the golden reports and validate the example corpus");
  golden->add_option("--data-dir", o.data_dir, "directory holding golden/ and examples/")->required();
  golden->add_flag("--update", o.update, "rewrite the golden files");
  golden->callback([&] { action = [&] { return cmd_golden(resolve(o.data_dir, base_dir).string(), o.update); }; });

  auto* example = app.add_subcommand("example", "print a built-in data file");
  example->add_option("--name", o.name, "com, ass, unit, or a built-in functor sequence")->required();
  example->add_option("--max-level", o.max_level)->required()->check(CLI::Range(1, 6));
  example->callback([&] { raw = [&] { return example_data(o.name, o.max_level); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto emit = [&](const std::string& text) {
    if (output.empty()) {
      out << text;
      return;
    }
    std::ofstream f(resolve(output, base_dir));
    if (!f) throw InputError(output + ": cannot write file");
    f << text;
  };

  try {
    if (raw) {
      emit(raw() + "\n");
      return 0;
    }
    const auto t0 = std::chrono::steady_clock::now();
    const Report r = action();
    std::optional<double> ms;
    if (timing) ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    const auto j = report_json(r, ms);
    emit(format == "text" ? report_text(j) : j.dump(2) + "\n");
    return exit_code(r.status);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << "\n";
  }
  return 2;
}

std::vector<std::string> emit_schemas(const std::string& dir) {
  fs::create_directories(dir);
  std::vector<std::string> written;
  for (const auto& [name, schema] : schemas()) {
    const auto path = (fs::path(dir) / schema_file_name(name)).string();
    std::ofstream f(path);
    if (!f) throw InputError(path + ": cannot write file");
    f << schema.dump(2) << "\n";
    written.push_back(path);
  }
  return written;
}

std::vector<GoldenOutcome> check_goldens(const std::string& data_dir, bool update) {
  const auto golden = fs::path(data_dir) / "golden";
  std::ifstream mf(golden / "manifest.json");
  if (!mf) throw InputError((golden / "manifest.json").string() + ": cannot open file");
  const auto manifest = parse_json(read_stream(mf), "golden/manifest.json");
  std::vector<GoldenOutcome> outcomes;
  for (const auto& c : manifest.at("cases")) {
    GoldenOutcome g;
    g.name = c.at("name").get<std::string>();
    const auto args = c.at("args").get<std::vector<std::string>>();
    const int expected_exit = c.at("exit").get<int>();
    std::ostringstream out, err;
    std::istringstream in;
    const int code = run(args, out, err, in, data_dir);
    const auto file = golden / (g.name + ".json");
    if (update) {
      std::ofstream(file) << out.str();
      g.ok = code == expected_exit;
      if (!g.ok) g.detail = "exit code " + std::to_string(code) + ", expected " + std::to_string(expected_exit) + ": " + err.str();
    } else if (code != expected_exit) {
      g.detail = "exit code " + std::to_string(code) + ", expected " + std::to_string(expected_exit) + ": " + err.str();
    } else {
      std::ifstream gf(file);
      if (!gf) {
        g.detail = "missing golden file";
      } else {
        const auto want = read_stream(gf);
        const auto got = out.str();
        g.ok = want == got;
        if (!g.ok) {
          std::istringstream a(want), b(got);
          std::string la, lb;
          int line = 1;
          while (std::getline(a, la) && std::getline(b, lb) && la == lb) ++line;
          g.detail = "differs at line " + std::to_string(line);
        }
      }
    }
    outcomes.push_back(std::move(g));
  }
  return outcomes;
}

std::vector<CorpusOutcome> validate_corpus(const std::string& data_dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::recursive_directory_iterator(fs::path(data_dir) / "examples"))
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  std::vector<CorpusOutcome> out;
  std::istringstream none;
  for (const auto& p : files) {
    CorpusOutcome c;
    c.file = fs::relative(p, data_dir).string();
    try {
      load_any(load(p.string(), none, "", ""));
      c.ok = true;
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace laxlin
