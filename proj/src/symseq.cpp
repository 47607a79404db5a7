#include "laxlin/symseq.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <sstream>

namespace laxlin {

namespace {

std::vector<std::vector<Elem>> identity_generators(int arity, int size) {
  std::vector<Elem> id(static_cast<std::size_t>(size));
  std::iota(id.begin(), id.end(), 0);
  return std::vector<std::vector<Elem>>(static_cast<std::size_t>(std::max(arity - 1, 0)), id);
}

// Calls fn on every tuple (e_0, ..., e_{r-1}) with 0 <= e_i < sizes[i], in
// lexicographic order. Stops early when fn returns false.
bool for_each_tuple(const std::vector<int>& sizes, const std::function<bool(const std::vector<Elem>&)>& fn) {
  for (int s : sizes)
    if (s <= 0) return true;
  std::vector<Elem> t(sizes.size(), 0);
  while (true) {
    if (!fn(t)) return false;
    int pos = static_cast<int>(t.size()) - 1;
    while (pos >= 0) {
      auto& slot = t[static_cast<std::size_t>(pos)];
      if (++slot < sizes[static_cast<std::size_t>(pos)]) break;
      slot = 0;
      --pos;
    }
    if (pos < 0) return true;
  }
}

// act() specialised to s_i = (i i+1). Nothing lies strictly between i and
// i+1, so block orders are preserved: within one block s_i is a generator
// on that block; across two blocks the blocks trade places only when i and
// i+1 are both least elements.
CompositeElement act_adjacent(int i, const CompositeElement& x, const SymSeq& a, const SymSeq& b) {
  const auto& p = x.partition;
  const int bi = p.block_of(i), bj = p.block_of(i + 1);
  CompositeElement out = x;
  if (bi == bj) {
    const auto& blk = p.block(bi);
    const int pos = static_cast<int>(std::lower_bound(blk.begin(), blk.end(), i) - blk.begin());
    auto& e = out.inner[static_cast<std::size_t>(bi)];
    e = b.level(static_cast<int>(blk.size())).act_generator(pos, e);
    return out;
  }
  auto blocks = p.blocks();
  for (auto* blk : {&blocks[static_cast<std::size_t>(bi)], &blocks[static_cast<std::size_t>(bj)]})
    for (int& y : *blk) y = y == i ? i + 1 : y == i + 1 ? i : y;
  if (p.block(bi).front() == i && p.block(bj).front() == i + 1) {
    // bj == bi + 1: the two blocks swap positions.
    out.outer = a.level(p.num_blocks()).act_generator(bi, x.outer);
    std::swap(out.inner[static_cast<std::size_t>(bi)], out.inner[static_cast<std::size_t>(bj)]);
  }
  out.partition = UnorderedPartition(p.ground(), std::move(blocks));
  return out;
}

std::string composite_label(const CompositeElement& x, const SymSeq& a, const SymSeq& b) {
  std::string out = to_string(x.partition);
  out += ':';
  out += a.level(x.partition.num_blocks()).label(x.outer);
  out += '(';
  for (std::size_t i = 0; i < x.inner.size(); ++i) {
    const int ni = static_cast<int>(x.partition.block(static_cast<int>(i)).size());
    if (i) out += ',';
    out += b.level(ni).label(x.inner[i]);
  }
  out += ')';
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

PointedSigmaSet::PointedSigmaSet(int arity, std::vector<std::string> labels,
                                 std::vector<std::vector<Elem>> generators)
    : arity_(arity), labels_(std::move(labels)), gens_(std::move(generators)) {
  if (arity < 1) throw std::invalid_argument("pointed Σ-set: arity must be positive");
  for (std::size_t e = 0; e < labels_.size(); ++e) {
    if (!index_.emplace(labels_[e], static_cast<Elem>(e)).second)
      throw std::invalid_argument("pointed Σ-set: duplicate label '" + labels_[e] + "'");
  }
  const int sz = size();
  if (gens_.empty()) {
    gens_ = identity_generators(arity, sz);
    return;
  }
  if (static_cast<int>(gens_.size()) != arity - 1)
    throw std::invalid_argument("pointed Σ-set: expected " + std::to_string(arity - 1) + " generator tables");
  for (const auto& g : gens_) {
    if (static_cast<int>(g.size()) != sz) throw std::invalid_argument("pointed Σ-set: generator table has wrong length");
    std::vector<bool> hit(static_cast<std::size_t>(sz), false);
    for (Elem y : g) {
      if (y < 0 || y >= sz || hit[static_cast<std::size_t>(y)])
        throw std::invalid_argument("pointed Σ-set: generator is not a bijection of the non-basepoint elements");
      hit[static_cast<std::size_t>(y)] = true;
    }
  }
  // Coxeter relations present Σ_n, so they are exactly the group-action laws.
  auto s = [&](int i, Elem e) { return gens_[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)]; };
  for (Elem e = 0; e < sz; ++e) {
    for (int i = 0; i + 1 < arity; ++i) {
      if (s(i, s(i, e)) != e) throw std::invalid_argument("pointed Σ-set: s_" + std::to_string(i + 1) + " is not an involution");
      if (i + 2 < arity) {
        Elem x = e;
        for (int r = 0; r < 3; ++r) x = s(i, s(i + 1, x));
        if (x != e) throw std::invalid_argument("pointed Σ-set: braid relation fails at s_" + std::to_string(i + 1));
      }
      for (int j = i + 2; j + 1 < arity; ++j)
        if (s(i, s(j, e)) != s(j, s(i, e)))
          throw std::invalid_argument("pointed Σ-set: distant generators do not commute");
    }
  }
}

std::optional<Elem> PointedSigmaSet::find(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Elem PointedSigmaSet::act(const Permutation& sigma, Elem e) const {
  if (sigma.size() != arity_) throw SizeMismatch("action: permutation size differs from arity");
  if (e == kBasepoint) return e;
  if (arity_ > 32) {
    const auto word = sigma.adjacent_word();
    for (auto it = word.rbegin(); it != word.rend(); ++it) e = act_generator(*it, e);
    return e;
  }
  // Bubble-sort σ in place: the swaps, in the order made, are the word of
  // σ read right to left, so applying them in turn acts by σ.
  std::array<int, 32> m{};
  std::copy(sigma.mapping().begin(), sigma.mapping().end(), m.begin());
  const auto n = static_cast<std::size_t>(arity_);
  for (std::size_t pass = 0; pass < n; ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (m[i] > m[i + 1]) {
        std::swap(m[i], m[i + 1]);
        e = act_generator(static_cast<int>(i), e);
        changed = true;
      }
    if (!changed) break;
  }
  return e;
}

bool PointedSigmaSet::trivial_action() const {
  for (const auto& g : gens_)
    for (std::size_t e = 0; e < g.size(); ++e)
      if (g[e] != static_cast<Elem>(e)) return false;
  return true;
}

SymSeq::SymSeq(std::vector<PointedSigmaSet> levels) : levels_(std::move(levels)) {
  if (levels_.empty()) throw std::invalid_argument("symmetric sequence needs at least one level");
  for (std::size_t i = 0; i < levels_.size(); ++i)
    if (levels_[i].arity() != static_cast<int>(i + 1))
      throw std::invalid_argument("symmetric sequence: level " + std::to_string(i + 1) + " has arity " +
                                  std::to_string(levels_[i].arity()));
}

const PointedSigmaSet& SymSeq::level(int n) const {
  if (n < 1 || n > max_level())
    throw TruncationError("symmetric sequence has no level " + std::to_string(n) + " (max level " +
                          std::to_string(max_level()) + ")");
  return levels_[static_cast<std::size_t>(n - 1)];
}

SymSeq SymSeq::truncated(int n) const {
  if (n > max_level()) throw TruncationError("cannot truncate above max level");
  return SymSeq(std::vector<PointedSigmaSet>(levels_.begin(), levels_.begin() + n));
}

SymSeq unit_seq(int max_level) {
  if (max_level < 1) throw std::invalid_argument("unit_seq: max level must be positive");
  std::vector<PointedSigmaSet> levels;
  levels.emplace_back(1, std::vector<std::string>{"1"});
  for (int n = 2; n <= max_level; ++n) levels.emplace_back(n, std::vector<std::string>{});
  return SymSeq(std::move(levels));
}

// ---------------------------------------------------------------------------

CompositeElement act(const Permutation& sigma, const CompositeElement& x, const SymSeq& a, const SymSeq& b) {
  auto data = induced_block_data(sigma, x.partition);
  const int k = x.partition.num_blocks();
  CompositeElement out;
  out.outer = a.level(k).act(data.tau, x.outer);
  out.inner.assign(static_cast<std::size_t>(k), kBasepoint);
  for (int i = 0; i < k; ++i) {
    const int ni = static_cast<int>(x.partition.block(i).size());
    out.inner[static_cast<std::size_t>(data.tau(i))] =
        b.level(ni).act(data.rho[static_cast<std::size_t>(i)], x.inner[static_cast<std::size_t>(i)]);
  }
  out.partition = std::move(data.image);
  return out;
}

Elem Composite::index_of(int n, const CompositeElement& x) const {
  if (x.outer == kBasepoint) return kBasepoint;
  for (Elem e : x.inner)
    if (e == kBasepoint) return kBasepoint;
  const auto& m = lookup[static_cast<std::size_t>(n - 1)];
  auto it = m.find(x);
  if (it == m.end()) throw std::logic_error("composite element not found: " + to_string(x.partition));
  return it->second;
}

Composite compose_product(const SymSeq& a, const SymSeq& b, int max_level) {
  if (max_level < 1) throw std::invalid_argument("compose_product: max level must be positive");
  if (a.max_level() < max_level || b.max_level() < max_level)
    throw TruncationError("compose_product: inputs stop at levels " + std::to_string(a.max_level()) + " and " +
                          std::to_string(b.max_level()) + ", need " + std::to_string(max_level));
  Composite out;
  out.elements.resize(static_cast<std::size_t>(max_level));
  out.lookup.resize(static_cast<std::size_t>(max_level));
  std::vector<PointedSigmaSet> levels;
  for (int n = 1; n <= max_level; ++n) {
    auto& elems = out.elements[static_cast<std::size_t>(n - 1)];
    auto& lookup = out.lookup[static_cast<std::size_t>(n - 1)];
    for (const auto& p : enumerate_partitions(n)) {
      const int k = p.num_blocks();
      std::vector<int> sizes{a.level(k).size()};
      for (int ni : p.block_sizes()) sizes.push_back(b.level(ni).size());
      for_each_tuple(sizes, [&](const std::vector<Elem>& t) {
        CompositeElement x{p, t[0], std::vector<Elem>(t.begin() + 1, t.end())};
        lookup.emplace(x, static_cast<Elem>(elems.size()));
        elems.push_back(std::move(x));
        return true;
      });
    }
    std::vector<std::string> labels;
    labels.reserve(elems.size());
    for (const auto& x : elems) labels.push_back(composite_label(x, a, b));
    std::vector<std::vector<Elem>> gens;
    for (int i = 0; i + 1 < n; ++i) {
      std::vector<Elem> g;
      g.reserve(elems.size());
      for (const auto& x : elems) g.push_back(lookup.at(act_adjacent(i, x, a, b)));
      gens.push_back(std::move(g));
    }
    levels.emplace_back(n, std::move(labels), std::move(gens));
  }
  out.seq = SymSeq(std::move(levels));
  return out;
}

long long composite_cardinality(const SymSeq& a, const SymSeq& b, int n) {
  long long total = 0;
  for (const auto& p : enumerate_partitions(n)) {
    long long term = a.level(p.num_blocks()).size();
    for (int ni : p.block_sizes()) term *= b.level(ni).size();
    total += term;
  }
  return total;
}

LevelMap identity_map(const SymSeq& s) {
  LevelMap m;
  for (const auto& lv : s.levels()) {
    std::vector<Elem> id(static_cast<std::size_t>(lv.size()));
    std::iota(id.begin(), id.end(), 0);
    m.push_back(std::move(id));
  }
  return m;
}

LevelMap map_compose(const Composite& source, const LevelMap& f, const LevelMap& g, const Composite& target) {
  LevelMap out;
  for (std::size_t lv = 0; lv < source.elements.size(); ++lv) {
    const int n = static_cast<int>(lv + 1);
    std::vector<Elem> m;
    m.reserve(source.elements[lv].size());
    for (const auto& x : source.elements[lv]) {
      const int k = x.partition.num_blocks();
      CompositeElement y{x.partition, f[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(x.outer)], {}};
      for (int i = 0; i < k; ++i) {
        const auto ni = x.partition.block(i).size();
        y.inner.push_back(g[ni - 1][static_cast<std::size_t>(x.inner[static_cast<std::size_t>(i)])]);
      }
      m.push_back(target.index_of(n, y));
    }
    out.push_back(std::move(m));
  }
  return out;
}

Associator associator(const SymSeq& a, const SymSeq& b, const SymSeq& c, int max_level) {
  Associator out;
  out.ab = compose_product(a, b, max_level);
  out.ab_c = compose_product(out.ab.seq, c, max_level);
  out.bc = compose_product(b, c, max_level);
  out.a_bc = compose_product(a, out.bc.seq, max_level);
  for (int n = 1; n <= max_level; ++n) {
    std::vector<Elem> m;
    for (const auto& x : out.ab_c.elements[static_cast<std::size_t>(n - 1)]) {
      const auto& p = x.partition;
      const int k = p.num_blocks();
      const auto& y = out.ab.element(k, x.outer);  // (Q, a, (b_j)) with Q a partition of the blocks of P
      const auto& q = y.partition;
      std::vector<std::vector<int>> coarse;
      std::vector<Elem> regrouped;
      for (int j = 0; j < q.num_blocks(); ++j) {
        std::vector<int> merged;
        for (int i : q.block(j)) merged.insert(merged.end(), p.block(i).begin(), p.block(i).end());
        std::sort(merged.begin(), merged.end());
        // Restrict P to the merged block, relabelled order-preservingly.
        std::vector<std::vector<int>> sub;
        CompositeElement z;
        z.outer = y.inner[static_cast<std::size_t>(j)];
        for (int i : q.block(j)) {
          std::vector<int> rel;
          for (int v : p.block(i))
            rel.push_back(static_cast<int>(std::lower_bound(merged.begin(), merged.end(), v) - merged.begin()));
          sub.push_back(std::move(rel));
          z.inner.push_back(x.inner[static_cast<std::size_t>(i)]);
        }
        z.partition = UnorderedPartition(static_cast<int>(merged.size()), std::move(sub));
        regrouped.push_back(out.bc.index_of(static_cast<int>(merged.size()), z));
        coarse.push_back(std::move(merged));
      }
      CompositeElement w{UnorderedPartition(n, std::move(coarse)), y.outer, std::move(regrouped)};
      m.push_back(out.a_bc.index_of(n, w));
    }
    out.forward.push_back(std::move(m));
  }
  return out;
}

LevelMap left_unitor(const Composite& unit_a) {
  LevelMap out;
  for (const auto& elems : unit_a.elements) {
    std::vector<Elem> m;
    for (const auto& x : elems) {
      if (x.partition.num_blocks() != 1) throw std::logic_error("left unitor: unexpected partition");
      m.push_back(x.inner[0]);
    }
    out.push_back(std::move(m));
  }
  return out;
}

LevelMap right_unitor(const Composite& a_unit) {
  LevelMap out;
  for (const auto& elems : a_unit.elements) {
    std::vector<Elem> m;
    for (const auto& x : elems) {
      if (x.partition.num_blocks() != x.partition.ground()) throw std::logic_error("right unitor: unexpected partition");
      m.push_back(x.outer);
    }
    out.push_back(std::move(m));
  }
  return out;
}

bool is_equivariant_bijection(const LevelMap& map, const SymSeq& source, const SymSeq& target) {
  if (static_cast<int>(map.size()) > source.max_level() || static_cast<int>(map.size()) > target.max_level()) return false;
  for (std::size_t lv = 0; lv < map.size(); ++lv) {
    const int n = static_cast<int>(lv + 1);
    const auto& src = source.level(n);
    const auto& dst = target.level(n);
    const auto& m = map[lv];
    if (static_cast<int>(m.size()) != src.size() || src.size() != dst.size()) return false;
    std::vector<bool> hit(static_cast<std::size_t>(dst.size()), false);
    for (Elem y : m) {
      if (y < 0 || y >= dst.size() || hit[static_cast<std::size_t>(y)]) return false;
      hit[static_cast<std::size_t>(y)] = true;
    }
    for (int i = 0; i + 1 < n; ++i)
      for (Elem e = 0; e < src.size(); ++e)
        if (m[static_cast<std::size_t>(src.act_generator(i, e))] != dst.act_generator(i, m[static_cast<std::size_t>(e)]))
          return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

OperadData::OperadData(SymSeq seq, Elem unit, std::vector<GammaTable> tables) : seq_(std::move(seq)), unit_(unit) {
  if (unit < 0 || unit >= seq_.level(1).size()) throw std::invalid_argument("operad: unit is not an element of level 1");
  for (auto& t : tables) {
    if (t.parts.empty()) throw std::invalid_argument("operad: γ-table with no parts");
    const int k = static_cast<int>(t.parts.size());
    int total = 0;
    std::size_t expected = static_cast<std::size_t>(seq_.level(k).size());
    for (int j : t.parts) {
      if (j < 1) throw std::invalid_argument("operad: γ-table part must be positive");
      total += j;
      expected *= static_cast<std::size_t>(seq_.level(j).size());
    }
    const int out_size = seq_.level(total).size();
    if (t.table.size() != expected)
      throw std::invalid_argument("operad: γ-table for k=" + std::to_string(k) + " has " + std::to_string(t.table.size()) +
                                  " entries, expected " + std::to_string(expected));
    for (Elem e : t.table)
      if (e != kMissing && e != kBasepoint && (e < 0 || e >= out_size))
        throw std::invalid_argument("operad: γ-table output outside level " + std::to_string(total));
    auto key = t.parts;
    if (!tables_.emplace(std::move(key), std::move(t)).second) throw std::invalid_argument("operad: duplicate γ-table");
  }
}

std::size_t OperadData::code(const std::vector<int>& parts, Elem x, const std::vector<Elem>& ys) const {
  std::size_t c = static_cast<std::size_t>(x);
  for (std::size_t i = 0; i < parts.size(); ++i)
    c = c * static_cast<std::size_t>(seq_.level(parts[i]).size()) + static_cast<std::size_t>(ys[i]);
  return c;
}

Elem OperadData::gamma(Elem x, const std::vector<int>& parts, const std::vector<Elem>& ys) const {
  if (x == kBasepoint) return kBasepoint;
  for (Elem y : ys)
    if (y == kBasepoint) return kBasepoint;
  auto it = tables_.find(parts);
  auto shape = [&] {
    std::string s = "k=" + std::to_string(parts.size()) + " parts=(";
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
    return s + ")";
  };
  if (it == tables_.end()) throw IncompleteDataError("operad: no γ-table for " + shape());
  const Elem v = it->second.table[code(parts, x, ys)];
  if (v == kMissing) throw IncompleteDataError("operad: missing γ-table entry for " + shape());
  return v;
}

OperadData OperadData::with_entry(const std::vector<int>& parts, std::size_t c, Elem value) const {
  OperadData copy = *this;
  copy.tables_.at(parts).table.at(c) = value;
  return copy;
}

namespace {

class OperadChecker {
 public:
  OperadChecker(const OperadData& op, int n) : op_(op), n_(n) {}

  OperadReport run() {
    check_complete();
    if (!unit_laws()) return report_;
    if (!outer_equivariance()) return report_;
    if (!inner_equivariance()) return report_;
    associativity();
    return report_;
  }

 private:
  const PointedSigmaSet& lv(int n) const { return op_.seq().level(n); }

  std::string show(int n, Elem e) const { return e == kBasepoint ? std::string("*") : lv(n).label(e); }

  bool fail(std::string law, std::vector<std::string> witness, std::string lhs, std::string rhs) {
    report_.pass = false;
    report_.law = std::move(law);
    report_.witness = std::move(witness);
    report_.lhs = std::move(lhs);
    report_.rhs = std::move(rhs);
    return false;
  }

  std::vector<std::string> tuple_labels(int k, Elem x, const std::vector<int>& parts, const std::vector<Elem>& ys) const {
    std::vector<std::string> w{show(k, x)};
    for (std::size_t i = 0; i < parts.size(); ++i) w.push_back(show(parts[i], ys[i]));
    return w;
  }

  // Every shape (k; j_1..j_k) with total arity <= N, in a fixed order.
  template <class Fn>
  bool for_each_shape(Fn&& fn) const {
    for (int k = 1; k <= n_; ++k)
      for (int total = k; total <= n_; ++total)
        for (const auto& comp : enumerate_compositions(total, k))
          if (!fn(comp.parts, total)) return false;
    return true;
  }

  void check_complete() const {
    if (n_ > op_.seq().max_level())
      throw TruncationError("check_operad: operad stops at level " + std::to_string(op_.seq().max_level()));
    for_each_shape([&](const std::vector<int>& parts, int) {
      const int k = static_cast<int>(parts.size());
      std::vector<int> sizes{lv(k).size()};
      for (int j : parts) sizes.push_back(lv(j).size());
      for_each_tuple(sizes, [&](const std::vector<Elem>& t) {
        op_.gamma(t[0], parts, std::vector<Elem>(t.begin() + 1, t.end()));
        return true;
      });
      return true;
    });
  }

  bool unit_laws() {
    const Elem e = op_.unit();
    for (int j = 1; j <= n_; ++j)
      for (Elem x = 0; x < lv(j).size(); ++x) {
        ++report_.checked;
        const Elem got = op_.gamma(e, {j}, {x});
        if (got != x) return fail("left unit", {show(1, e), show(j, x)}, show(j, got), show(j, x));
      }
    for (int k = 1; k <= n_; ++k)
      for (Elem x = 0; x < lv(k).size(); ++x) {
        ++report_.checked;
        std::vector<int> ones(static_cast<std::size_t>(k), 1);
        std::vector<Elem> units(static_cast<std::size_t>(k), e);
        const Elem got = op_.gamma(x, ones, units);
        if (got != x) return fail("right unit", tuple_labels(k, x, ones, units), show(k, got), show(k, x));
      }
    return true;
  }

  bool outer_equivariance() {
    return for_each_shape([&](const std::vector<int>& parts, int total) {
      const int k = static_cast<int>(parts.size());
      std::vector<int> sizes{lv(k).size()};
      for (int j : parts) sizes.push_back(lv(j).size());
      for (int g = 0; g + 1 < k; ++g) {
        const auto sigma = Permutation::adjacent(k, g);
        const auto block = block_permutation(sigma, parts);
        std::vector<int> moved_parts(parts.size());
        for (int i = 0; i < k; ++i) moved_parts[static_cast<std::size_t>(sigma(i))] = parts[static_cast<std::size_t>(i)];
        const bool ok = for_each_tuple(sizes, [&](const std::vector<Elem>& t) {
          ++report_.checked;
          std::vector<Elem> ys(t.begin() + 1, t.end()), moved(ys.size());
          for (int i = 0; i < k; ++i) moved[static_cast<std::size_t>(sigma(i))] = ys[static_cast<std::size_t>(i)];
          const Elem lhs = op_.gamma(lv(k).act_generator(g, t[0]), moved_parts, moved);
          const Elem rhs = lv(total).act(block, op_.gamma(t[0], parts, ys));
          if (lhs == rhs) return true;
          auto w = tuple_labels(k, t[0], parts, ys);
          w.insert(w.begin(), "s" + std::to_string(g + 1));
          return fail("block equivariance", std::move(w), show(total, lhs), show(total, rhs));
        });
        if (!ok) return false;
      }
      return true;
    });
  }

  bool inner_equivariance() {
    return for_each_shape([&](const std::vector<int>& parts, int total) {
      const int k = static_cast<int>(parts.size());
      std::vector<int> sizes{lv(k).size()};
      for (int j : parts) sizes.push_back(lv(j).size());
      for (int slot = 0; slot < k; ++slot) {
        const int j = parts[static_cast<std::size_t>(slot)];
        for (int g = 0; g + 1 < j; ++g) {
          std::vector<Permutation> pieces;
          for (int i = 0; i < k; ++i)
            pieces.push_back(i == slot ? Permutation::adjacent(j, g) : Permutation::identity(parts[static_cast<std::size_t>(i)]));
          const auto sum = block_sum(pieces);
          const bool ok = for_each_tuple(sizes, [&](const std::vector<Elem>& t) {
            ++report_.checked;
            std::vector<Elem> ys(t.begin() + 1, t.end()), moved = ys;
            moved[static_cast<std::size_t>(slot)] = lv(j).act_generator(g, ys[static_cast<std::size_t>(slot)]);
            const Elem lhs = op_.gamma(t[0], parts, moved);
            const Elem rhs = lv(total).act(sum, op_.gamma(t[0], parts, ys));
            if (lhs == rhs) return true;
            auto w = tuple_labels(k, t[0], parts, ys);
            w.insert(w.begin(), "slot " + std::to_string(slot + 1) + " s" + std::to_string(g + 1));
            return fail("inner equivariance", std::move(w), show(total, lhs), show(total, rhs));
          });
          if (!ok) return false;
        }
      }
      return true;
    });
  }

  bool associativity() {
    for (int k = 1; k <= n_; ++k)
      for (int mid = k; mid <= n_; ++mid)
        for (const auto& jc : enumerate_compositions(mid, k))
          for (int top = mid; top <= n_; ++top)
            for (const auto& mc : enumerate_compositions(top, mid))
              if (!associativity_shape(jc.parts, mc.parts, top)) return false;
    return true;
  }

  // x ∈ O(k), y_i ∈ O(j_i), z_l ∈ O(m_l) with the m's grouped by the j's.
  bool associativity_shape(const std::vector<int>& js, const std::vector<int>& ms, int top) {
    const int k = static_cast<int>(js.size());
    const int mid = static_cast<int>(ms.size());
    std::vector<int> sizes{lv(k).size()};
    for (int j : js) sizes.push_back(lv(j).size());
    for (int m : ms) sizes.push_back(lv(m).size());
    std::vector<int> grouped;  // Σ of m's over each j-group
    std::vector<std::vector<int>> m_groups;
    for (int i = 0, pos = 0; i < k; ++i) {
      std::vector<int> g(ms.begin() + pos, ms.begin() + pos + js[static_cast<std::size_t>(i)]);
      grouped.push_back(std::accumulate(g.begin(), g.end(), 0));
      m_groups.push_back(std::move(g));
      pos += js[static_cast<std::size_t>(i)];
    }
    return for_each_tuple(sizes, [&](const std::vector<Elem>& t) {
      ++report_.checked;
      const Elem x = t[0];
      std::vector<Elem> ys(t.begin() + 1, t.begin() + 1 + k);
      std::vector<Elem> zs(t.begin() + 1 + k, t.end());
      const Elem lhs = op_.gamma(op_.gamma(x, js, ys), ms, zs);
      std::vector<Elem> inner;
      for (int i = 0, pos = 0; i < k; ++i) {
        const auto& g = m_groups[static_cast<std::size_t>(i)];
        std::vector<Elem> zi(zs.begin() + pos, zs.begin() + pos + static_cast<int>(g.size()));
        inner.push_back(op_.gamma(ys[static_cast<std::size_t>(i)], g, zi));
        pos += static_cast<int>(g.size());
      }
      const Elem rhs = op_.gamma(x, grouped, inner);
      if (lhs == rhs) return true;
      std::vector<std::string> w{show(k, x)};
      for (int i = 0; i < k; ++i) w.push_back(show(js[static_cast<std::size_t>(i)], ys[static_cast<std::size_t>(i)]));
      for (int l = 0; l < mid; ++l) w.push_back(show(ms[static_cast<std::size_t>(l)], zs[static_cast<std::size_t>(l)]));
      return fail("associativity", std::move(w), show(top, lhs), show(top, rhs));
    });
  }

  const OperadData& op_;
  int n_;
  OperadReport report_;
};

}  // namespace

OperadReport check_operad(const OperadData& op, int max_level) {
  if (max_level < 1) throw std::invalid_argument("check_operad: max level must be positive");
  return OperadChecker(op, max_level).run();
}

OperadData make_com(int max_level) {
  std::vector<PointedSigmaSet> levels;
  for (int n = 1; n <= max_level; ++n) levels.emplace_back(n, std::vector<std::string>{"c" + std::to_string(n)});
  std::vector<GammaTable> tables;
  for (int k = 1; k <= max_level; ++k)
    for (int total = k; total <= max_level; ++total)
      for (const auto& comp : enumerate_compositions(total, k)) tables.push_back({comp.parts, {0}});
  return OperadData(SymSeq(std::move(levels)), 0, std::move(tables));
}

OperadData make_ass(int max_level) {
  std::vector<PointedSigmaSet> levels;
  std::vector<std::vector<Permutation>> perms;
  for (int n = 1; n <= max_level; ++n) {
    auto all = all_permutations(n);
    std::vector<std::string> labels;
    for (const auto& p : all) labels.push_back(to_string(p));
    std::vector<std::vector<Elem>> gens;
    for (int i = 0; i + 1 < n; ++i) {
      const auto s = Permutation::adjacent(n, i);
      std::vector<Elem> g;
      for (const auto& p : all) g.push_back(static_cast<Elem>((s * p).rank()));
      gens.push_back(std::move(g));
    }
    levels.emplace_back(n, std::move(labels), std::move(gens));
    perms.push_back(std::move(all));
  }
  SymSeq seq(std::move(levels));
  std::vector<GammaTable> tables;
  for (int k = 1; k <= max_level; ++k)
    for (int total = k; total <= max_level; ++total)
      for (const auto& comp : enumerate_compositions(total, k)) {
        GammaTable t{comp.parts, {}};
        std::vector<int> sizes{seq.level(k).size()};
        for (int j : comp.parts) sizes.push_back(seq.level(j).size());
        std::vector<int> offset(static_cast<std::size_t>(k), 0);
        for (int i = 1; i < k; ++i) offset[static_cast<std::size_t>(i)] = offset[static_cast<std::size_t>(i - 1)] + comp.parts[static_cast<std::size_t>(i - 1)];
        // Substitute the word of block w(p) for each letter of w.
        for_each_tuple(sizes, [&](const std::vector<Elem>& tup) {
          const auto& w = perms[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(tup[0])];
          std::vector<int> word;
          for (int p = 0; p < k; ++p) {
            const int b = w(p);
            const auto& v = perms[static_cast<std::size_t>(comp.parts[static_cast<std::size_t>(b)] - 1)][static_cast<std::size_t>(tup[static_cast<std::size_t>(b + 1)])];
            for (int l = 0; l < v.size(); ++l) word.push_back(offset[static_cast<std::size_t>(b)] + v(l));
          }
          t.table.push_back(static_cast<Elem>(Permutation(std::move(word)).rank()));
          return true;
        });
        tables.push_back(std::move(t));
      }
  return OperadData(std::move(seq), 0, std::move(tables));
}

std::string describe(const PointedSigmaSet& s, Elem e) { return e == kBasepoint ? "*" : s.label(e); }

}  // namespace laxlin
