#include "laxlin/io.hpp"

#include <regex>

namespace laxlin {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

std::string escape(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::string show_ptr(const std::string& ptr) { return ptr.empty() ? "(root)" : ptr; }

[[noreturn]] void fail(const std::string& ptr, const std::string& msg) { throw InputError(show_ptr(ptr) + ": " + msg); }

// ---------------------------------------------------------------------------
// Schema validation

bool has_type(const json& v, const std::string& t) {
  if (t == "object") return v.is_object();
  if (t == "array") return v.is_array();
  if (t == "string") return v.is_string();
  if (t == "integer") return v.is_number_integer();
  if (t == "number") return v.is_number();
  if (t == "boolean") return v.is_boolean();
  if (t == "null") return v.is_null();
  return false;
}

struct Validator {
  const json& root;

  void check(const json& v, const json& s, const std::string& ptr, std::vector<std::string>& errs) const {
    if (s.is_boolean()) {
      if (!s.get<bool>()) errs.push_back(show_ptr(ptr) + ": no value is allowed here");
      return;
    }
    if (auto it = s.find("$ref"); it != s.end()) {
      const auto ref = it->get<std::string>();
      if (ref.rfind("#", 0) != 0) throw std::logic_error("schema: only local references are supported");
      check(v, root.at(json::json_pointer(ref.substr(1))), ptr, errs);
      return;
    }
    if (auto it = s.find("type"); it != s.end()) {
      bool ok = false;
      std::string expected;
      if (it->is_array()) {
        for (const auto& t : *it) {
          ok = ok || has_type(v, t.get<std::string>());
          expected += (expected.empty() ? "" : " or ") + t.get<std::string>();
        }
      } else {
        ok = has_type(v, it->get<std::string>());
        expected = it->get<std::string>();
      }
      if (!ok) {
        errs.push_back(show_ptr(ptr) + ": expected " + expected + ", got " + v.type_name());
        return;
      }
    }
    if (auto it = s.find("const"); it != s.end() && v != *it)
      errs.push_back(show_ptr(ptr) + ": expected " + it->dump());
    if (auto it = s.find("enum"); it != s.end()) {
      bool found = false;
      for (const auto& e : *it) found = found || v == e;
      if (!found) errs.push_back(show_ptr(ptr) + ": expected one of " + it->dump());
    }
    if (v.is_string()) {
      const auto& str = v.get_ref<const std::string&>();
      if (auto it = s.find("minLength"); it != s.end() && str.size() < it->get<std::size_t>())
        errs.push_back(show_ptr(ptr) + ": string is too short");
      if (auto it = s.find("pattern"); it != s.end() && !std::regex_search(str, std::regex(it->get<std::string>())))
        errs.push_back(show_ptr(ptr) + ": '" + str + "' does not match " + it->get<std::string>());
    }
    if (v.is_number()) {
      if (auto it = s.find("minimum"); it != s.end() && v.get<double>() < it->get<double>())
        errs.push_back(show_ptr(ptr) + ": must be at least " + it->dump());
      if (auto it = s.find("maximum"); it != s.end() && v.get<double>() > it->get<double>())
        errs.push_back(show_ptr(ptr) + ": must be at most " + it->dump());
    }
    if (v.is_array()) {
      if (auto it = s.find("minItems"); it != s.end() && v.size() < it->get<std::size_t>())
        errs.push_back(show_ptr(ptr) + ": needs at least " + it->dump() + " items");
      if (auto it = s.find("maxItems"); it != s.end() && v.size() > it->get<std::size_t>())
        errs.push_back(show_ptr(ptr) + ": allows at most " + it->dump() + " items");
      if (auto it = s.find("items"); it != s.end())
        for (std::size_t i = 0; i < v.size(); ++i) check(v[i], *it, ptr + "/" + std::to_string(i), errs);
    }
    if (v.is_object()) {
      if (auto it = s.find("required"); it != s.end())
        for (const auto& key : *it)
          if (!v.contains(key.get<std::string>()))
            errs.push_back(show_ptr(ptr) + ": missing required field '" + key.get<std::string>() + "'");
      const auto props = s.find("properties");
      for (const auto& [key, value] : v.items()) {
        const std::string child = ptr + "/" + escape(key);
        if (props != s.end() && props->contains(key)) {
          check(value, props->at(key), child, errs);
        } else if (auto extra = s.find("additionalProperties"); extra != s.end()) {
          if (extra->is_boolean() && !extra->get<bool>()) errs.push_back(show_ptr(child) + ": unexpected field");
          else if (extra->is_object()) check(value, *extra, child, errs);
        }
      }
    }
    if (auto it = s.find("oneOf"); it != s.end()) {
      int matches = 0;
      std::vector<std::string> best;
      std::size_t best_depth = 0;
      for (const auto& alt : *it) {
        std::vector<std::string> e;
        check(v, alt, ptr, e);
        if (e.empty()) {
          ++matches;
          continue;
        }
        // Report the alternative that got furthest into the document.
        const std::size_t depth = e.front().find(':');
        if (best.empty() || depth > best_depth || (depth == best_depth && e.size() < best.size())) {
          best = e;
          best_depth = depth;
        }
      }
      if (matches == 0) errs.insert(errs.end(), best.begin(), best.end());
      if (matches > 1) errs.push_back(show_ptr(ptr) + ": matches more than one alternative");
    }
    if (auto it = s.find("if"); it != s.end()) {
      std::vector<std::string> e;
      check(v, *it, ptr, e);
      if (e.empty()) {
        if (auto then = s.find("then"); then != s.end()) check(v, *then, ptr, errs);
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Conversions

template <class F>
auto guarded(const std::string& ptr, F f) -> decltype(f()) {
  try {
    return f();
  } catch (const InputError&) {
    throw;
  } catch (const std::invalid_argument& e) {
    fail(ptr, e.what());
  } catch (const std::domain_error& e) {
    fail(ptr, e.what());
  }
}

ojson levels_to_json(const SymSeq& s) {
  ojson levels = ojson::array();
  for (const auto& lv : s.levels()) {
    ojson l;
    l["arity"] = lv.arity();
    l["labels"] = lv.labels();
    if (!lv.trivial_action()) {
      ojson gens = ojson::array();
      for (const auto& g : lv.generators()) {
        ojson row = ojson::array();
        for (Elem e : g) row.push_back(lv.label(e));
        gens.push_back(row);
      }
      l["generators"] = gens;
    }
    levels.push_back(l);
  }
  return levels;
}

SymSeq levels_from_json(const json& levels, const std::string& ptr) {
  std::vector<PointedSigmaSet> out;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    const auto& l = levels[i];
    const std::string lp = ptr + "/" + std::to_string(i);
    const int arity = l.at("arity").get<int>();
    if (arity != static_cast<int>(i) + 1) fail(lp + "/arity", "level " + std::to_string(i + 1) + " must have arity " + std::to_string(i + 1));
    const auto labels = l.at("labels").get<std::vector<std::string>>();
    std::map<std::string, Elem> index;
    for (std::size_t e = 0; e < labels.size(); ++e)
      if (!index.emplace(labels[e], static_cast<Elem>(e)).second)
        fail(lp + "/labels/" + std::to_string(e), "duplicate label '" + labels[e] + "'");
    std::vector<std::vector<Elem>> gens;
    if (l.contains("generators") && !l["generators"].empty()) {
      const auto& g = l["generators"];
      if (static_cast<int>(g.size()) != arity - 1)
        fail(lp + "/generators", "need " + std::to_string(arity - 1) + " generator rows, got " + std::to_string(g.size()));
      for (std::size_t r = 0; r < g.size(); ++r) {
        if (g[r].size() != labels.size())
          fail(lp + "/generators/" + std::to_string(r), "need one image per label");
        std::vector<Elem> row;
        for (std::size_t e = 0; e < g[r].size(); ++e) {
          const auto name = g[r][e].get<std::string>();
          auto it = index.find(name);
          if (it == index.end()) fail(lp + "/generators/" + std::to_string(r) + "/" + std::to_string(e), "unknown label '" + name + "'");
          row.push_back(it->second);
        }
        gens.push_back(std::move(row));
      }
    }
    out.push_back(guarded(lp, [&] { return PointedSigmaSet(arity, labels, gens); }));
  }
  return SymSeq(std::move(out));
}

Elem find_label(const SymSeq& s, int level, const std::string& label, const std::string& ptr) {
  if (level < 1 || level > s.max_level()) fail(ptr, "level " + std::to_string(level) + " is not present");
  const auto e = s.level(level).find(label);
  if (!e) fail(ptr, "'" + label + "' is not an element of level " + std::to_string(level));
  return *e;
}

CoeffLabel parse_coeff_label(const std::string& s) {
  if (s == "1") return {};
  CoeffLabel out;
  std::size_t start = 0;
  while (true) {
    const auto star = s.find('*', start);
    out.push_back(s.substr(start, star - start));
    if (star == std::string::npos) break;
    start = star + 1;
  }
  return out;
}

SimplexPoint simplex_from_json(const json& j, const std::string& ptr) {
  std::vector<Rational> coords;
  for (std::size_t i = 0; i < j.size(); ++i) coords.push_back(rational_from_json(j[i], ptr + "/" + std::to_string(i)));
  return guarded(ptr, [&] { return SimplexPoint(std::move(coords)); });
}

std::vector<int> ints(const json& j) { return j.get<std::vector<int>>(); }

Permutation perm_from_json(const json& j, int size, const std::string& ptr) {
  const auto m = ints(j);
  if (static_cast<int>(m.size()) != size)
    fail(ptr, "expected a permutation of " + std::to_string(size) + " elements");
  return guarded(ptr, [&] { return Permutation(m); });
}

}  // namespace

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::string what = e.what();
    if (auto close = what.find("] "); what.rfind("[json.exception", 0) == 0 && close != std::string::npos) what = what.substr(close + 2);
    throw InputError(source + ": malformed JSON: " + what);
  }
}

std::string schema_for(const json& doc) {
  if (!doc.is_object() || !doc.contains("type") || !doc["type"].is_string())
    throw InputError("(root): missing string field 'type'");
  const auto t = doc["type"].get<std::string>();
  if (t == "symseq" || t == "operad" || t == "funseq" || t == "report") return t;
  if (t.rfind("sphere-", 0) == 0) return "sphere";
  throw InputError("/type: unknown document type '" + t + "'");
}

std::vector<std::string> validate(const json& instance, const json& schema) {
  std::vector<std::string> errs;
  Validator{schema}.check(instance, schema, "", errs);
  return errs;
}

void require_valid(const json& doc, const std::string& source) {
  static const auto plain = [] {
    std::map<std::string, json> out;
    for (const auto& [name, s] : schemas()) out[name] = json::parse(s.dump());
    return out;
  }();
  try {
    const auto errs = validate(doc, plain.at(schema_for(doc)));
    if (!errs.empty()) throw InputError("schema violation at " + errs.front());
  } catch (const InputError& e) {
    throw InputError(source + ": " + e.what());
  }
}

ojson to_json(const SymSeq& s) {
  ojson j;
  j["type"] = "symseq";
  j["levels"] = levels_to_json(s);
  return j;
}

SymSeq symseq_from_json(const json& j) { return levels_from_json(j.at("levels"), "/levels"); }

ojson to_json(const OperadData& op) {
  const auto& s = op.seq();
  ojson j;
  j["type"] = "operad";
  j["levels"] = levels_to_json(s);
  j["unit"] = s.level(1).label(op.unit());
  ojson entries = ojson::array();
  for (const auto& [parts, table] : op.tables()) {
    const int k = static_cast<int>(parts.size());
    int total = 0;
    for (int p : parts) total += p;
    for (std::size_t code = 0; code < table.table.size(); ++code) {
      const Elem r = table.table[code];
      if (r == kMissing) continue;
      std::vector<std::string> inner(parts.size());
      std::size_t c = code;
      for (std::size_t i = parts.size(); i-- > 0;) {
        const auto size = uz(s.level(parts[i]).size());
        inner[i] = s.level(parts[i]).label(static_cast<Elem>(c % size));
        c /= size;
      }
      ojson e;
      e["parts"] = parts;
      e["outer"] = s.level(k).label(static_cast<Elem>(c));
      e["inner"] = inner;
      e["result"] = describe(s.level(total), r);
      entries.push_back(e);
    }
  }
  j["gamma"] = entries;
  return j;
}

OperadData operad_from_json(const json& j) {
  const auto seq = symseq_from_json(j);
  const Elem unit = find_label(seq, 1, j.at("unit").get<std::string>(), "/unit");
  std::map<std::vector<int>, GammaTable> tables;
  const auto& entries = j.at("gamma");
  for (std::size_t i = 0; i < entries.size(); ++i) {
    const auto& e = entries[i];
    const std::string ep = "/gamma/" + std::to_string(i);
    const auto parts = ints(e.at("parts"));
    const int k = static_cast<int>(parts.size());
    const auto inner = e.at("inner").get<std::vector<std::string>>();
    if (inner.size() != parts.size()) fail(ep + "/inner", "need one inner element per part");
    int total = 0;
    for (int p : parts) total += p;
    if (total > seq.max_level()) fail(ep + "/parts", "total arity " + std::to_string(total) + " exceeds the top level");
    auto& table = tables[parts];
    if (table.parts.empty()) {
      std::size_t size = uz(seq.level(k).size());
      for (int p : parts) size *= uz(seq.level(p).size());
      table.parts = parts;
      table.table.assign(size, kMissing);
    }
    std::size_t code = uz(find_label(seq, k, e.at("outer").get<std::string>(), ep + "/outer"));
    for (std::size_t b = 0; b < parts.size(); ++b)
      code = code * uz(seq.level(parts[b]).size()) +
             uz(find_label(seq, parts[b], inner[b], ep + "/inner/" + std::to_string(b)));
    const auto result = e.at("result").get<std::string>();
    const Elem r = result == "*" ? kBasepoint : find_label(seq, total, result, ep + "/result");
    if (table.table[code] != kMissing && table.table[code] != r) fail(ep, "conflicts with an earlier entry");
    table.table[code] = r;
  }
  std::vector<GammaTable> list;
  for (auto& [parts, t] : tables) list.push_back(std::move(t));
  return guarded("/gamma", [&] { return OperadData(seq, unit, std::move(list)); });
}

ojson to_json(const PolyFunSeq& f) {
  ojson j;
  j["type"] = "funseq";
  ojson levels = ojson::array();
  for (const auto& lv : f.levels()) {
    ojson terms = ojson::array();
    for (const auto& m : lv.terms) {
      ojson t;
      ojson coeff = ojson::array();
      for (const auto& c : m.coeff) coeff.push_back(render(c));
      t["coeff"] = coeff;
      t["exps"] = m.exps;
      terms.push_back(t);
    }
    ojson l;
    l["arity"] = lv.arity;
    l["terms"] = terms;
    levels.push_back(l);
  }
  j["levels"] = levels;
  return j;
}

PolyFunSeq funseq_from_json(const json& j) {
  std::vector<PolyMultiFun> levels;
  const auto& ls = j.at("levels");
  for (std::size_t i = 0; i < ls.size(); ++i) {
    const std::string lp = "/levels/" + std::to_string(i);
    const int arity = ls[i].at("arity").get<int>();
    if (arity != static_cast<int>(i) + 1) fail(lp + "/arity", "level " + std::to_string(i + 1) + " must have arity " + std::to_string(i + 1));
    PolyMultiFun lv{arity, {}};
    const auto& terms = ls[i].at("terms");
    for (std::size_t t = 0; t < terms.size(); ++t) {
      const std::string tp = lp + "/terms/" + std::to_string(t);
      Monomial m;
      for (const auto& c : terms[t].at("coeff")) m.coeff.push_back(parse_coeff_label(c.get<std::string>()));
      m.exps = ints(terms[t].at("exps"));
      if (m.arity() != arity) fail(tp + "/exps", "need one exponent per variable");
      if (terms[t].contains("action")) m.action = terms[t]["action"].get<std::vector<std::vector<int>>>();
      lv.terms.push_back(std::move(m));
    }
    levels.push_back(std::move(lv));
  }
  return guarded("/levels", [&] { return PolyFunSeq(std::move(levels)); });
}

ojson to_json(const SimplexPoint& p) {
  ojson out = ojson::array();
  for (const auto& c : p.coords()) out.push_back(to_string(c));
  return out;
}

ojson to_json(const SpherePoint& p) { return p ? to_json(*p) : ojson("inf"); }

ojson to_json(const SuspensionPoint& p) {
  if (p.basepoint) return "inf";
  ojson sphere = ojson::array(), x = ojson::array();
  for (const auto& s : p.sphere) sphere.push_back(to_json(s));
  for (const auto& c : p.x) x.push_back(to_string(c));
  ojson out;
  out["sphere"] = sphere;
  out["x"] = x;
  return out;
}

ojson to_json(const CubePoint& p) {
  if (!p) return "inf";
  ojson out = ojson::array();
  for (const auto& c : *p) out.push_back(to_string(c));
  return out;
}

Rational rational_from_json(const json& j, const std::string& ptr) {
  return guarded(ptr, [&] { return parse_rational(j.get<std::string>()); });
}

SpherePoint sphere_point_from_json(const json& j, const std::string& ptr) {
  if (j.is_string()) return std::nullopt;
  return simplex_from_json(j, ptr);
}

MapDescriptor descriptor_from_json(const json& j, int units, int arity, const std::string& ptr) {
  using M = MapDescriptor;
  const auto op = j.at("op").get<std::string>();
  auto need = [&](const char* field) -> const json& {
    if (!j.contains(field)) fail(ptr, "op '" + op + "' needs field '" + field + "'");
    return j[field];
  };
  if (op == "identity") return M::identity(units, arity);
  if (op == "constant") return M::constant(units, arity, arity);
  if (op == "permute_units") return M::permute_units(perm_from_json(need("perm"), units, ptr + "/perm"), arity);
  if (op == "permute_slots") return M::permute_slots(perm_from_json(need("perm"), arity, ptr + "/perm"), units);
  if (op == "reflect") {
    const auto mask = need("mask").get<std::vector<bool>>();
    if (static_cast<int>(mask.size()) != units) fail(ptr + "/mask", "need one flag per unit");
    return M::reflect(mask, arity);
  }
  if (op == "compose") {
    const auto f = descriptor_from_json(need("f"), units, arity, ptr + "/f");
    const auto g = descriptor_from_json(need("g"), units, arity, ptr + "/g");
    return M::compose(f, g);
  }
  if (op == "stabilize") {
    const auto blocks = ints(need("blocks"));
    int total = 0;
    for (int b : blocks) total += b;
    if (total != arity) fail(ptr + "/blocks", "blocks must sum to the arity " + std::to_string(arity));
    const auto f = descriptor_from_json(need("f"), units, static_cast<int>(blocks.size()), ptr + "/f");
    return M::stabilize(f, blocks);
  }
  fail(ptr + "/op", "unknown op '" + op + "'");
}

SuspensionPoint suspension_from_json(const json& j, int units, int arity, const std::string& ptr) {
  if (j.is_string()) return SuspensionPoint::base();
  const auto& sphere = j.at("sphere");
  const auto& x = j.at("x");
  if (static_cast<int>(sphere.size()) != units) fail(ptr + "/sphere", "need one simplex point per unit");
  if (static_cast<int>(x.size()) != units) fail(ptr + "/x", "need one coordinate per unit");
  SuspensionPoint p;
  for (std::size_t u = 0; u < sphere.size(); ++u) {
    const std::string sp = ptr + "/sphere/" + std::to_string(u);
    p.sphere.push_back(simplex_from_json(sphere[u], sp));
    if (p.sphere.back().arity() != arity) fail(sp, "expected arity " + std::to_string(arity));
    const std::string xp = ptr + "/x/" + std::to_string(u);
    p.x.push_back(rational_from_json(x[u], xp));
    if (p.x.back() <= 0 || p.x.back() >= 1) fail(xp, "must lie strictly between 0 and 1");
  }
  return p;
}

ojson to_json(const Connectivity& c) { return c.infinite ? ojson("inf") : ojson(c.value); }

}  // namespace laxlin
