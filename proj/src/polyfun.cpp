#include "laxlin/polyfun.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace laxlin {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

bool is_permutation_of(const std::vector<int>& v, std::size_t n) {
  if (v.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (int x : v) {
    if (x < 0 || uz(x) >= n || seen[uz(x)]) return false;
    seen[uz(x)] = true;
  }
  return true;
}

std::vector<int> swapped(std::vector<int> exps, int i) {
  std::swap(exps[uz(i)], exps[uz(i + 1)]);
  return exps;
}

// Mixed-radix code, first digit most significant.
long long encode(const std::vector<int>& digits, const std::vector<int>& radices) {
  long long code = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) code = code * radices[i] + digits[i];
  return code;
}

std::vector<int> decode(long long code, const std::vector<int>& radices) {
  std::vector<int> digits(radices.size());
  for (std::size_t i = radices.size(); i-- > 0;) {
    digits[i] = static_cast<int>(code % radices[i]);
    code /= radices[i];
  }
  return digits;
}

// Cartesian product of coefficient sets, tuples concatenated, in
// lexicographic order of the factor labels.
Coefficient smash(const std::vector<const Coefficient*>& factors) {
  std::vector<int> radices;
  long long total = 1;
  for (const auto* f : factors) {
    radices.push_back(static_cast<int>(f->size()));
    total *= static_cast<long long>(f->size());
  }
  Coefficient out;
  out.reserve(static_cast<std::size_t>(total));
  for (long long code = 0; code < total; ++code) {
    const auto digits = decode(code, radices);
    CoeffLabel label;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      const auto& part = (*factors[i])[uz(digits[i])];
      label.insert(label.end(), part.begin(), part.end());
    }
    out.push_back(std::move(label));
  }
  return out;
}

using TermLabel = std::pair<int, int>;

TermLabel apply_gen(const LevelSymmetry& sym, int i, TermLabel x) {
  const auto& img = sym[uz(i)][uz(x.first)];
  return {img.term, img.labels[uz(x.second)]};
}

}  // namespace

std::string render(const CoeffLabel& label) {
  if (label.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < label.size(); ++i) {
    if (i) out += '*';
    out += label[i];
  }
  return out;
}

bool Monomial::multilinear() const {
  return !exps.empty() && std::all_of(exps.begin(), exps.end(), [](int d) { return d == 1; });
}

bool Monomial::constant() const {
  return std::adjacent_find(exps.begin(), exps.end(), std::not_equal_to<>()) == exps.end();
}

PolyFunSeq::PolyFunSeq(std::vector<PolyMultiFun> levels) : levels_(std::move(levels)) {
  for (std::size_t lv = 0; lv < levels_.size(); ++lv) {
    const int n = static_cast<int>(lv) + 1;
    const auto& terms = levels_[lv].terms;
    for (const auto& t : terms)
      if (static_cast<int>(t.exps.size()) != n)
        throw std::invalid_argument("level " + std::to_string(n) + ": term arity differs from level");
    // Equal terms are grouped; a generator matches the r-th member of a group
    // with the r-th member of the group of its permuted copy.
    using Key = std::tuple<Coefficient, std::vector<int>, std::vector<std::vector<int>>>;
    std::map<Key, std::vector<int>> groups;
    std::vector<int> rank(terms.size());
    for (std::size_t t = 0; t < terms.size(); ++t) {
      auto& g = groups[{terms[t].coeff, terms[t].exps, terms[t].action}];
      rank[t] = static_cast<int>(g.size());
      g.push_back(static_cast<int>(t));
    }
    LevelSymmetry sym;
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<TermImage> gen;
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto& m = terms[t];
        if (!m.action.empty()) {
          if (m.action.size() != uz(n - 1)) throw std::invalid_argument("level " + std::to_string(n) + ": action needs one table per generator");
          gen.push_back({static_cast<int>(t), m.action[uz(i)]});
          continue;
        }
        const auto it = groups.find({m.coeff, swapped(m.exps, i), m.action});
        if (it == groups.end() || it->second.size() <= uz(rank[t]))
          throw std::invalid_argument("level " + std::to_string(n) + " is not symmetric: no partner for term " +
                                      std::to_string(t + 1) + " under s" + std::to_string(i + 1));
        std::vector<int> ident(m.coeff.size());
        std::iota(ident.begin(), ident.end(), 0);
        gen.push_back({it->second[uz(rank[t])], std::move(ident)});
      }
      sym.push_back(std::move(gen));
    }
    symmetry_.push_back(std::move(sym));
  }
  validate();
  // Coefficient actions now live in the witnesses.
  for (auto& lvl : levels_)
    for (auto& m : lvl.terms) m.action.clear();
}

PolyFunSeq::PolyFunSeq(std::vector<PolyMultiFun> levels, std::vector<LevelSymmetry> symmetry)
    : levels_(std::move(levels)), symmetry_(std::move(symmetry)) {
  validate();
}

void PolyFunSeq::validate() const {
  if (symmetry_.size() != levels_.size()) throw std::invalid_argument("symmetry data does not cover every level");
  for (std::size_t lv = 0; lv < levels_.size(); ++lv) {
    const int n = static_cast<int>(lv) + 1;
    const std::string where = "level " + std::to_string(n) + ": ";
    const auto& lvl = levels_[lv];
    if (lvl.arity != n) throw std::invalid_argument(where + "arity differs from level");
    const auto& terms = lvl.terms;
    for (const auto& m : terms) {
      if (static_cast<int>(m.exps.size()) != n) throw std::invalid_argument(where + "term arity differs from level");
      for (int d : m.exps)
        if (d < 0) throw std::invalid_argument(where + "negative exponent");
      std::set<CoeffLabel> seen(m.coeff.begin(), m.coeff.end());
      if (seen.size() != m.coeff.size()) throw std::invalid_argument(where + "repeated coefficient label");
      if (!m.action.empty()) {
        if (!m.constant()) throw std::invalid_argument(where + "a coefficient action needs equal exponents");
        if (m.action.size() != uz(n - 1)) throw std::invalid_argument(where + "action needs one table per generator");
        for (const auto& a : m.action)
          if (!is_permutation_of(a, m.coeff.size())) throw std::invalid_argument(where + "action table is not a bijection");
      }
    }
    const auto& sym = symmetry_[lv];
    if (sym.size() != uz(n - 1)) throw std::invalid_argument(where + "symmetry needs one table per generator");
    for (int i = 0; i + 1 < n; ++i) {
      const auto& gen = sym[uz(i)];
      if (gen.size() != terms.size()) throw std::invalid_argument(where + "symmetry table size differs from term count");
      for (std::size_t t = 0; t < terms.size(); ++t) {
        const auto& img = gen[t];
        if (img.term < 0 || uz(img.term) >= terms.size()) throw std::invalid_argument(where + "symmetry image out of range");
        const auto& src = terms[t];
        const auto& dst = terms[uz(img.term)];
        if (dst.exps != swapped(src.exps, i)) throw std::invalid_argument(where + "symmetry image has the wrong exponents");
        if (dst.coeff.size() != src.coeff.size() || !is_permutation_of(img.labels, src.coeff.size()))
          throw std::invalid_argument(where + "symmetry label map is not a bijection");
        if (!src.action.empty() && (img.term != static_cast<int>(t) || img.labels != src.action[uz(i)]))
          throw std::invalid_argument(where + "symmetry disagrees with a coefficient action");
      }
    }
    // Coxeter relations on (term, label) pairs.
    std::vector<TermLabel> all;
    for (std::size_t t = 0; t < terms.size(); ++t)
      for (std::size_t a = 0; a < terms[t].coeff.size(); ++a) all.emplace_back(static_cast<int>(t), static_cast<int>(a));
    for (const auto& x : all)
      for (int i = 0; i + 1 < n; ++i) {
        if (apply_gen(sym, i, apply_gen(sym, i, x)) != x) throw std::invalid_argument(where + "s_i is not an involution");
        for (int j = i + 1; j + 1 < n; ++j) {
          if (j == i + 1) {
            auto y = x;
            for (int r = 0; r < 3; ++r) y = apply_gen(sym, i, apply_gen(sym, j, y));
            if (y != x) throw std::invalid_argument(where + "braid relation fails");
          } else if (apply_gen(sym, i, apply_gen(sym, j, x)) != apply_gen(sym, j, apply_gen(sym, i, x))) {
            throw std::invalid_argument(where + "distant generators do not commute");
          }
        }
      }
  }
}

const PolyMultiFun& PolyFunSeq::level(int n) const {
  if (n < 1 || n > max_level())
    throw TruncationError("functor sequence level " + std::to_string(n) + " is not available");
  return levels_[uz(n - 1)];
}

TermImage PolyFunSeq::act(int n, const Permutation& sigma, int term) const {
  if (sigma.size() != n) throw SizeMismatch("action: permutation size differs from level");
  const auto& lvl = level(n);
  TermImage out{term, std::vector<int>(lvl.terms[uz(term)].coeff.size())};
  std::iota(out.labels.begin(), out.labels.end(), 0);
  const auto word = sigma.adjacent_word();
  const auto& sym = symmetry(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    const auto& img = sym[uz(*it)][uz(out.term)];
    for (auto& a : out.labels) a = img.labels[uz(a)];
    out.term = img.term;
  }
  return out;
}

bool PolyFunSeq::multipointed() const {
  for (const auto& lvl : levels_)
    for (const auto& m : lvl.terms)
      for (int d : m.exps)
        if (d < 1) return false;
  return true;
}

bool PolyFunSeq::no_constant_terms() const {
  for (const auto& lvl : levels_)
    for (const auto& m : lvl.terms)
      if (std::all_of(m.exps.begin(), m.exps.end(), [](int d) { return d == 0; })) return false;
  return true;
}

PointedSet evaluate(const PolyMultiFun& f, const std::vector<PointedSet>& inputs) {
  if (static_cast<int>(inputs.size()) != f.arity) throw SizeMismatch("evaluate: wrong number of inputs");
  PointedSet out;
  for (std::size_t t = 0; t < f.terms.size(); ++t) {
    const auto& m = f.terms[t];
    std::vector<std::vector<std::string>> factors;
    std::vector<std::string> coeff;
    for (const auto& c : m.coeff) coeff.push_back(render(c));
    factors.push_back(std::move(coeff));
    for (std::size_t i = 0; i < m.exps.size(); ++i)
      for (int c = 0; c < m.exps[i]; ++c) factors.push_back(inputs[i].labels);
    std::vector<int> radices;
    long long total = 1;
    for (const auto& fac : factors) {
      radices.push_back(static_cast<int>(fac.size()));
      total *= static_cast<long long>(fac.size());
    }
    for (long long code = 0; code < total; ++code) {
      const auto digits = decode(code, radices);
      std::string label = "t" + std::to_string(t + 1) + ":";
      for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) label += '*';
        label += factors[i][uz(digits[i])];
      }
      out.labels.push_back(std::move(label));
    }
  }
  return out;
}

PolyFunSeq unit_funseq(int max_level) {
  std::vector<PolyMultiFun> levels;
  for (int n = 1; n <= max_level; ++n) {
    PolyMultiFun lvl{n, {}};
    if (n == 1) lvl.terms.push_back({{CoeffLabel{}}, {1}, {}});
    levels.push_back(std::move(lvl));
  }
  return PolyFunSeq(std::move(levels));
}

int FunComposite::index_of(int n, const CompositeTerm& t) const {
  const auto& m = lookup[uz(n - 1)];
  const auto it = m.find(t);
  return it == m.end() ? -1 : it->second;
}

namespace {

// Coefficient radices of a composite term, in smash order.
std::vector<int> radices_of(const CompositeTerm& key, const PolyFunSeq& g, const PolyFunSeq& f) {
  const int k = key.partition.num_blocks();
  std::vector<int> r{static_cast<int>(g.level(k).terms[uz(key.outer)].coeff.size())};
  for (int i = 0; i < k; ++i) {
    const int ni = static_cast<int>(key.partition.block(i).size());
    for (int t : key.inner[uz(i)]) r.push_back(static_cast<int>(f.level(ni).terms[uz(t)].coeff.size()));
  }
  return r;
}

}  // namespace

FunComposite compose_funseq(const PolyFunSeq& g, const PolyFunSeq& f, int max_level) {
  if (g.max_level() < max_level || f.max_level() < max_level)
    throw TruncationError("compose_funseq: inputs must provide levels 1.." + std::to_string(max_level));
  if (!f.no_constant_terms()) throw std::invalid_argument("compose_funseq: inner sequence has a term with all exponents zero");

  FunComposite out;
  std::vector<PolyMultiFun> levels;
  std::vector<LevelSymmetry> symmetry;
  for (int n = 1; n <= max_level; ++n) {
    PolyMultiFun lvl{n, {}};
    std::vector<CompositeTerm> keys;
    std::map<CompositeTerm, int> lookup;
    for (const auto& p : enumerate_partitions(n)) {
      const int k = p.num_blocks();
      const auto sizes = p.block_sizes();
      const auto& gterms = g.level(k).terms;
      for (std::size_t gi = 0; gi < gterms.size(); ++gi) {
        const auto& gm = gterms[gi];
        // One choice per copy, slot-major.
        std::vector<int> slot_of;
        for (int i = 0; i < k; ++i)
          for (int c = 0; c < gm.exps[uz(i)]; ++c) slot_of.push_back(i);
        bool empty = false;
        for (int s : slot_of)
          if (f.level(sizes[uz(s)]).terms.empty()) empty = true;
        if (empty) continue;
        std::vector<int> choice(slot_of.size(), 0);
        while (true) {
          CompositeTerm key{p, static_cast<int>(gi), std::vector<std::vector<int>>(uz(k))};
          for (std::size_t c = 0; c < choice.size(); ++c) key.inner[uz(slot_of[c])].push_back(choice[c]);
          Monomial m{{}, std::vector<int>(uz(n), 0), {}};
          std::vector<const Coefficient*> factors{&gm.coeff};
          for (int i = 0; i < k; ++i)
            for (int t : key.inner[uz(i)]) {
              const auto& fm = f.level(sizes[uz(i)]).terms[uz(t)];
              for (std::size_t l = 0; l < fm.exps.size(); ++l) m.exps[uz(p.block(i)[l])] += fm.exps[l];
              factors.push_back(&fm.coeff);
            }
          m.coeff = smash(factors);
          lookup.emplace(key, static_cast<int>(keys.size()));
          keys.push_back(std::move(key));
          lvl.terms.push_back(std::move(m));
          // Advance the odometer; the last copy varies fastest.
          std::size_t pos = choice.size();
          while (pos > 0) {
            const auto limit = static_cast<int>(f.level(sizes[uz(slot_of[pos - 1])]).terms.size());
            if (++choice[pos - 1] < limit) break;
            choice[--pos] = 0;
          }
          if (pos == 0) break;
        }
      }
    }

    LevelSymmetry sym;
    for (int i = 0; i + 1 < n; ++i) {
      const auto s = Permutation::adjacent(n, i);
      std::vector<TermImage> gen;
      for (const auto& key : keys) {
        const auto bd = induced_block_data(s, key.partition);
        const int k = key.partition.num_blocks();
        const auto gimg = g.act(k, bd.tau, key.outer);
        CompositeTerm target{bd.image, gimg.term, std::vector<std::vector<int>>(uz(k))};
        std::vector<std::vector<TermImage>> fimg(uz(k));
        for (int b = 0; b < k; ++b) {
          const int nb = static_cast<int>(key.partition.block(b).size());
          for (int t : key.inner[uz(b)]) {
            fimg[uz(b)].push_back(f.act(nb, bd.rho[uz(b)], t));
            target.inner[uz(bd.tau(b))].push_back(fimg[uz(b)].back().term);
          }
        }
        const int idx = lookup.at(target);
        const auto src_r = radices_of(key, g, f);
        const auto dst_r = radices_of(target, g, f);
        // Offsets of each slot's digits in the target ordering.
        std::vector<int> offset(uz(k), 1);
        for (int b = 0, acc = 1; b < k; ++b) {
          offset[uz(b)] = acc;
          acc += static_cast<int>(target.inner[uz(b)].size());
        }
        const long long count = static_cast<long long>(lvl.terms[uz(lookup.at(key))].coeff.size());
        std::vector<int> labels(uz(static_cast<int>(count)));
        for (long long code = 0; code < count; ++code) {
          const auto d = decode(code, src_r);
          std::vector<int> nd(d.size());
          nd[0] = gimg.labels[uz(d[0])];
          std::size_t pos = 1;
          for (int b = 0; b < k; ++b)
            for (std::size_t c = 0; c < key.inner[uz(b)].size(); ++c, ++pos)
              nd[uz(offset[uz(bd.tau(b))]) + c] = fimg[uz(b)][c].labels[uz(d[pos])];
          labels[uz(static_cast<int>(code))] = static_cast<int>(encode(nd, dst_r));
        }
        gen.push_back({idx, std::move(labels)});
      }
      sym.push_back(std::move(gen));
    }
    levels.push_back(std::move(lvl));
    symmetry.push_back(std::move(sym));
    out.terms.push_back(std::move(keys));
    out.lookup.push_back(std::move(lookup));
  }
  out.seq = PolyFunSeq(std::move(levels), std::move(symmetry));
  return out;
}

Elem Multilinear::index_of(int n, int term, int label) const {
  const auto& m = lookup[uz(n - 1)];
  const auto it = m.find({term, label});
  return it == m.end() ? kBasepoint : it->second;
}

Multilinear multilinearize_at_S0(const PolyFunSeq& f) {
  Multilinear out;
  std::vector<PointedSigmaSet> levels;
  for (int n = 1; n <= f.max_level(); ++n) {
    const auto& terms = f.level(n).terms;
    std::vector<std::pair<int, int>> elems;
    std::map<std::pair<int, int>, Elem> lookup;
    std::vector<std::string> labels;
    for (std::size_t t = 0; t < terms.size(); ++t) {
      if (!terms[t].multilinear()) continue;
      for (std::size_t a = 0; a < terms[t].coeff.size(); ++a) {
        lookup.emplace(std::pair{static_cast<int>(t), static_cast<int>(a)}, static_cast<Elem>(elems.size()));
        elems.emplace_back(static_cast<int>(t), static_cast<int>(a));
        labels.push_back("t" + std::to_string(t + 1) + ":" + render(terms[t].coeff[a]));
      }
    }
    std::vector<std::vector<Elem>> gens;
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<Elem> gen;
      for (const auto& x : elems) gen.push_back(lookup.at(apply_gen(f.symmetry(n), i, x)));
      gens.push_back(std::move(gen));
    }
    if (n == 1 || elems.empty()) gens.clear();
    levels.emplace_back(n, std::move(labels), std::move(gens));
    out.elements.push_back(std::move(elems));
    out.lookup.push_back(std::move(lookup));
  }
  out.seq = SymSeq(std::move(levels));
  return out;
}

ChainRuleReport chain_rule_compare(const PolyFunSeq& g, const PolyFunSeq& f, int max_level) {
  ChainRuleReport r;
  r.multipointed = g.multipointed() && f.multipointed();
  r.composite = compose_funseq(g, f, max_level);
  r.lhs_g = multilinearize_at_S0(g);
  r.lhs_f = multilinearize_at_S0(f);
  r.rhs = multilinearize_at_S0(r.composite.seq);
  const auto mg = r.lhs_g.seq.truncated(max_level);
  const auto mf = r.lhs_f.seq.truncated(max_level);
  r.lhs = compose_product(mg, mf, max_level);

  auto fail = [&r](bool& flag, std::string why) {
    if (flag && r.witness.empty()) r.witness = std::move(why);
    flag = false;
  };

  for (int n = 1; n <= max_level; ++n) {
    const auto& src = r.lhs.seq.level(n);
    const auto& dst = r.rhs.seq.level(n);
    std::vector<Elem> mu;
    for (Elem e = 0; e < src.size(); ++e) {
      const auto& x = r.lhs.element(n, e);
      const int k = x.partition.num_blocks();
      const auto [tg, a] = r.lhs_g.elements[uz(k - 1)][uz(x.outer)];
      CompositeTerm key{x.partition, tg, {}};
      std::vector<int> digits{a};
      for (int i = 0; i < k; ++i) {
        const int ni = static_cast<int>(x.partition.block(i).size());
        const auto [tf, b] = r.lhs_f.elements[uz(ni - 1)][uz(x.inner[uz(i)])];
        key.inner.push_back({tf});
        digits.push_back(b);
      }
      Elem image = kBasepoint;
      const int idx = r.composite.index_of(n, key);
      if (idx >= 0) {
        const auto code = encode(digits, radices_of(key, g, f));
        image = r.rhs.index_of(n, idx, static_cast<int>(code));
      }
      if (image == kBasepoint) fail(r.well_defined, "level " + std::to_string(n) + ": no multilinear image for " + src.label(e));
      mu.push_back(image);
    }
    std::vector<int> hits(uz(dst.size()), 0);
    for (std::size_t e = 0; e < mu.size(); ++e) {
      if (mu[e] == kBasepoint) continue;
      if (++hits[uz(mu[e])] > 1)
        fail(r.injective, "level " + std::to_string(n) + ": two elements map to " + dst.label(mu[e]));
    }
    for (Elem e = 0; e < dst.size(); ++e)
      if (hits[uz(e)] == 0) fail(r.surjective, "level " + std::to_string(n) + ": nothing maps to " + dst.label(e));
    for (int i = 0; i + 1 < n; ++i)
      for (Elem e = 0; e < src.size(); ++e) {
        const Elem m = mu[uz(e)];
        if (m == kBasepoint) continue;
        const Elem moved = mu[uz(src.act_generator(i, e))];
        if (moved != dst.act_generator(i, m))
          fail(r.equivariant, "level " + std::to_string(n) + ": s" + std::to_string(i + 1) + " does not commute at " + src.label(e));
      }
    r.mu.push_back(std::move(mu));
    r.levels.push_back({n, src.size(), dst.size(), composite_cardinality(mg, mf, n)});

    for (const auto& p : enumerate_partitions(n)) {
      if (mg.level(p.num_blocks()).size() == 0) continue;
      for (int s : p.block_sizes())
        if (mf.level(s).size() == 0) {
          r.flagged.emplace_back(n, p);
          break;
        }
    }
  }
  return r;
}

FunAssociator funseq_associator(const PolyFunSeq& g, const PolyFunSeq& f, const PolyFunSeq& h, int max_level) {
  for (int n = 1; n <= max_level; ++n)
    for (const auto& m : g.level(n).terms)
      if (!m.multilinear()) throw std::invalid_argument("funseq_associator: outer sequence must be multilinear");
  FunAssociator out;
  out.gf = compose_funseq(g, f, max_level);
  out.gf_h = compose_funseq(out.gf.seq, h, max_level);
  out.fh = compose_funseq(f, h, max_level);
  out.g_fh = compose_funseq(g, out.fh.seq, max_level);
  for (int n = 1; n <= max_level; ++n) {
    std::vector<int> fwd;
    for (const auto& x : out.gf_h.terms[uz(n - 1)]) {
      const auto& p = x.partition;
      const auto& y = out.gf.terms[uz(p.num_blocks() - 1)][uz(x.outer)];  // (Q, g, (f_j))
      const auto& q = y.partition;
      std::vector<std::vector<int>> coarse;
      std::vector<std::vector<int>> regrouped;
      for (int j = 0; j < q.num_blocks(); ++j) {
        std::vector<int> merged;
        for (int i : q.block(j)) merged.insert(merged.end(), p.block(i).begin(), p.block(i).end());
        std::sort(merged.begin(), merged.end());
        std::vector<std::vector<int>> sub;
        CompositeTerm z{{}, y.inner[uz(j)].at(0), {}};
        for (int i : q.block(j)) {
          std::vector<int> rel;
          for (int v : p.block(i))
            rel.push_back(static_cast<int>(std::lower_bound(merged.begin(), merged.end(), v) - merged.begin()));
          sub.push_back(std::move(rel));
          z.inner.push_back(x.inner[uz(i)]);
        }
        const int size = static_cast<int>(merged.size());
        z.partition = UnorderedPartition(size, std::move(sub));
        regrouped.push_back({out.fh.index_of(size, z)});
        coarse.push_back(std::move(merged));
      }
      CompositeTerm w{UnorderedPartition(n, std::move(coarse)), y.outer, std::move(regrouped)};
      fwd.push_back(out.g_fh.index_of(n, w));
    }
    out.forward.push_back(std::move(fwd));
  }
  return out;
}

PolyFunSeq smash_power_funseq(int max_level) {
  std::vector<PolyMultiFun> levels;
  for (int n = 1; n <= max_level; ++n)
    levels.push_back({n, {{{CoeffLabel{}}, std::vector<int>(uz(n), 1), {}}}});
  return PolyFunSeq(std::move(levels));
}

PolyFunSeq operad_funseq(const OperadData& op, int max_level) {
  const auto report = check_operad(op, max_level);
  if (!report.pass) throw std::invalid_argument("operad_funseq: not an operad (" + report.law + ")");
  std::vector<PolyMultiFun> levels;
  for (int n = 1; n <= max_level; ++n) {
    const auto& s = op.seq().level(n);
    PolyMultiFun lvl{n, {}};
    if (s.size() > 0) {
      Monomial m{{}, std::vector<int>(uz(n), 1), {}};
      for (const auto& l : s.labels()) m.coeff.push_back({l});
      for (int i = 0; i + 1 < n; ++i) {
        std::vector<int> table;
        for (Elem e = 0; e < s.size(); ++e) table.push_back(s.act_generator(i, e));
        m.action.push_back(std::move(table));
      }
      lvl.terms.push_back(std::move(m));
    }
    levels.push_back(std::move(lvl));
  }
  return PolyFunSeq(std::move(levels));
}

std::vector<BuiltinExample> builtin_examples(int max_level) {
  return {{"smash-powers", smash_power_funseq(max_level)},
          {"com", operad_funseq(make_com(max_level), max_level)},
          {"ass", operad_funseq(make_ass(max_level), max_level)}};
}

}  // namespace laxlin
