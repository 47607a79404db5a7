#include "laxlin/sphere.hpp"

#include <algorithm>
#include <regex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace laxlin {

namespace {

std::size_t uz(int i) { return static_cast<std::size_t>(i); }

Rational abs_q(const Rational& q) { return q < 0 ? Rational(-q) : q; }

}  // namespace

std::string to_string(const Rational& q) { return q.get_str(); }

Rational parse_rational(const std::string& s) {
  static const std::regex pattern(R"(-?[0-9]+(/[0-9]+)?)");
  if (!std::regex_match(s, pattern)) throw std::invalid_argument("not a rational number: '" + s + "'");
  const auto slash = s.find('/');
  if (slash != std::string::npos && std::all_of(s.begin() + static_cast<std::ptrdiff_t>(slash) + 1, s.end(), [](char c) { return c == '0'; }))
    throw std::invalid_argument("zero denominator: '" + s + "'");
  Rational q(s);
  q.canonicalize();
  return q;
}

SimplexPoint::SimplexPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw std::invalid_argument("simplex point: arity must be positive");
  Rational sum = 0;
  for (const auto& c : coords_) {
    if (c <= 0) throw std::invalid_argument("simplex point: coordinates must be positive");
    sum += c;
  }
  if (sum != 1) throw std::invalid_argument("simplex point: coordinates must sum to 1");
}

SimplexPoint SimplexPoint::barycenter(int n) {
  return SimplexPoint(std::vector<Rational>(uz(n), Rational(1, static_cast<unsigned long>(n))));
}

std::string to_string(const SimplexPoint& p) {
  std::string out = "(";
  for (int i = 0; i < p.arity(); ++i) out += (i ? "," : "") + to_string(p[i]);
  return out + ")";
}

std::string to_string(const SpherePoint& p) { return p ? to_string(*p) : "inf"; }

SimplexPoint gamma(const SimplexPoint& s, const std::vector<SimplexPoint>& ts) {
  if (static_cast<int>(ts.size()) != s.arity()) throw SizeMismatch("gamma: expected one input per coordinate of s");
  std::vector<Rational> out;
  for (int i = 0; i < s.arity(); ++i)
    for (const auto& c : ts[uz(i)].coords()) out.push_back(s[i] * c);
  return SimplexPoint(std::move(out));
}

SpherePoint gamma(const SpherePoint& s, const std::vector<SpherePoint>& ts) {
  if (s && static_cast<int>(ts.size()) != s->arity()) throw SizeMismatch("gamma: expected one input per coordinate of s");
  if (!s) return std::nullopt;
  std::vector<SimplexPoint> inner;
  for (const auto& t : ts) {
    if (!t) return std::nullopt;
    inner.push_back(*t);
  }
  return gamma(*s, inner);
}

GammaPreimage gamma_inv(const SimplexPoint& u, const std::vector<int>& blocks) {
  int total = 0;
  for (int b : blocks) {
    if (b < 1) throw std::invalid_argument("gamma_inv: block sizes must be positive");
    total += b;
  }
  if (total != u.arity()) throw SizeMismatch("gamma_inv: blocks do not sum to the arity");
  std::vector<Rational> outer;
  std::vector<SimplexPoint> inner;
  int pos = 0;
  for (int b : blocks) {
    Rational s = 0;
    for (int l = 0; l < b; ++l) s += u[pos + l];
    std::vector<Rational> t;
    for (int l = 0; l < b; ++l) t.push_back(u[pos + l] / s);
    outer.push_back(s);
    inner.emplace_back(std::move(t));
    pos += b;
  }
  return {SimplexPoint(std::move(outer)), std::move(inner)};
}

SimplexPoint permute(const Permutation& sigma, const SimplexPoint& p) {
  if (sigma.size() != p.arity()) throw SizeMismatch("permute: permutation size differs from arity");
  std::vector<Rational> out(uz(p.arity()));
  for (int i = 0; i < p.arity(); ++i) out[uz(sigma(i))] = p[i];
  return SimplexPoint(std::move(out));
}

SpherePoint permute(const Permutation& sigma, const SpherePoint& p) {
  if (!p) return p;
  return permute(sigma, *p);
}

SmashSpherePoint smash_gamma(const SmashSpherePoint& s, const std::vector<SmashSpherePoint>& ts) {
  for (const auto& t : ts)
    if (s && t && t->size() != s->size()) throw SizeMismatch("smash_gamma: factors are indexed by different sets");
  if (!s) return std::nullopt;
  for (const auto& t : ts)
    if (!t) return std::nullopt;
  std::vector<SimplexPoint> out;
  for (std::size_t u = 0; u < s->size(); ++u) {
    std::vector<SimplexPoint> inner;
    for (const auto& t : ts) inner.push_back((*t)[u]);
    out.push_back(gamma((*s)[u], inner));
  }
  return out;
}

SmashSpherePoint permute(const Permutation& sigma, const SmashSpherePoint& p) {
  if (!p) return p;
  std::vector<SimplexPoint> out;
  for (const auto& f : *p) out.push_back(permute(sigma, f));
  return out;
}

// ---------------------------------------------------------------------------
// 𝐒_n ∧ S¹ ≅ Sⁿ

namespace {

// Gauge of the corner simplex {y > 0, Σy < 1} about its centre 1/(n+1).
Rational gauge_corner(const std::vector<Rational>& v) {
  Rational m = 0, sum = 0;
  for (const auto& c : v) {
    if (-c > m) m = -c;
    sum += c;
  }
  if (sum > m) m = sum;
  return m * static_cast<long>(v.size() + 1);
}

// Gauge of the cube (0,1)ⁿ about its centre 1/2.
Rational gauge_cube(const std::vector<Rational>& w) {
  Rational m = 0;
  for (const auto& c : w)
    if (abs_q(c) > m) m = abs_q(c);
  return m * 2;
}

}  // namespace

CubePoint coend_adjoint(const SpherePoint& s, const std::optional<Rational>& x) {
  if (!s || !x) return std::nullopt;
  if (*x <= 0 || *x >= 1) throw std::invalid_argument("coend_adjoint: x must lie in (0,1)");
  const auto n = s->coords().size();
  const Rational centre(1, static_cast<unsigned long>(n + 1));
  std::vector<Rational> v;
  for (const auto& c : s->coords()) v.push_back(*x * c - centre);
  const Rational gk = gauge_corner(v), gc = gauge_cube(v);
  std::vector<Rational> z;
  for (const auto& c : v) z.push_back(gc == 0 ? Rational(1, 2) : Rational(1, 2) + c * gk / gc);
  return z;
}

CoendPreimage coend_inverse(const std::vector<Rational>& z) {
  if (z.empty()) throw std::invalid_argument("coend_inverse: empty point");
  for (const auto& c : z)
    if (c <= 0 || c >= 1) throw std::invalid_argument("coend_inverse: coordinates must lie in (0,1)");
  const auto n = z.size();
  const Rational centre(1, static_cast<unsigned long>(n + 1));
  std::vector<Rational> w;
  for (const auto& c : z) w.push_back(c - Rational(1, 2));
  const Rational gk = gauge_corner(w), gc = gauge_cube(w);
  std::vector<Rational> y;
  Rational x = 0;
  for (const auto& c : w) {
    y.push_back(gk == 0 ? centre : centre + c * gc / gk);
    x += y.back();
  }
  for (auto& c : y) c /= x;
  return {SimplexPoint(std::move(y)), x};
}

// ---------------------------------------------------------------------------
// Stabilization

std::string to_string(const SuspensionPoint& p) {
  if (p.basepoint) return "inf";
  std::string out = "[";
  for (std::size_t u = 0; u < p.sphere.size(); ++u) {
    if (u) out += ", ";
    out += to_string(p.sphere[u]) + " ^ " + to_string(p.x[u]);
  }
  return out + "]";
}

CubePoint to_cube(const SuspensionPoint& p) {
  if (p.basepoint) return std::nullopt;
  std::vector<Rational> out;
  for (std::size_t u = 0; u < p.sphere.size(); ++u) {
    const auto z = coend_adjoint(p.sphere[u], p.x[u]);
    out.insert(out.end(), z->begin(), z->end());
  }
  return out;
}

SuspensionPoint from_cube(const CubePoint& z, int units, int arity) {
  if (!z) return SuspensionPoint::base();
  if (z->size() != uz(units * arity)) throw SizeMismatch("from_cube: dimension differs from |U|·m");
  SuspensionPoint p;
  for (int u = 0; u < units; ++u) {
    const auto first = z->begin() + static_cast<std::ptrdiff_t>(u * arity);
    const auto pre = coend_inverse(std::vector<Rational>(first, first + arity));
    p.sphere.push_back(pre.s);
    p.x.push_back(pre.x);
  }
  return p;
}

struct MapDescriptor::Node {
  enum class Kind { Identity, PermuteUnits, PermuteSlots, Reflect, Constant, Compose, Stabilize, Slice };
  Kind kind = Kind::Identity;
  int units = 1, dom = 1, cod = 1;
  Permutation perm;
  std::vector<bool> mask;
  std::vector<int> blocks;
  std::vector<std::vector<SimplexPoint>> slice;
  std::shared_ptr<const Node> a, b;
};

namespace {

using Node = MapDescriptor::Node;
using Kind = Node::Kind;

void check_point(const SuspensionPoint& p, int units, int arity) {
  if (p.basepoint) return;
  if (static_cast<int>(p.sphere.size()) != units || static_cast<int>(p.x.size()) != units)
    throw SizeMismatch("map evaluation: point is indexed by a different set");
  for (const auto& s : p.sphere)
    if (s.arity() != arity) throw SizeMismatch("map evaluation: point has the wrong arity");
  for (const auto& x : p.x)
    if (x <= 0 || x >= 1) throw std::invalid_argument("map evaluation: coordinate outside (0,1)");
}

std::pair<Permutation, Permutation> perm_part(const Node& n) {
  if (n.dom != n.cod) throw std::logic_error("permutation part: not an endomorphism");
  switch (n.kind) {
    case Kind::PermuteUnits: return {Permutation::identity(n.dom), n.perm};
    case Kind::PermuteSlots: return {n.perm, Permutation::identity(n.units)};
    case Kind::Compose: {
      const auto f = perm_part(*n.a), g = perm_part(*n.b);
      return {f.first * g.first, f.second * g.second};
    }
    case Kind::Stabilize: {
      const auto f = perm_part(*n.a);
      return {block_permutation(f.first, n.blocks), f.second};
    }
    case Kind::Slice: throw std::logic_error("permutation part: slice is not an endomorphism");
    default: return {Permutation::identity(n.dom), Permutation::identity(n.units)};
  }
}

SuspensionPoint eval(const Node& n, const SuspensionPoint& p) {
  check_point(p, n.units, n.dom);
  if (p.basepoint) return p;
  switch (n.kind) {
    case Kind::Identity: return p;
    case Kind::PermuteUnits: {
      SuspensionPoint q{false, p.sphere, p.x};
      for (int u = 0; u < n.units; ++u) {
        q.sphere[uz(n.perm(u))] = p.sphere[uz(u)];
        q.x[uz(n.perm(u))] = p.x[uz(u)];
      }
      return q;
    }
    case Kind::PermuteSlots: {
      SuspensionPoint q{false, {}, p.x};
      for (const auto& s : p.sphere) q.sphere.push_back(permute(n.perm, s));
      return q;
    }
    case Kind::Reflect: {
      SuspensionPoint q = p;
      for (int u = 0; u < n.units; ++u)
        if (n.mask[uz(u)]) q.x[uz(u)] = 1 - q.x[uz(u)];
      return q;
    }
    case Kind::Constant: return SuspensionPoint::base();
    case Kind::Compose: return eval(*n.a, eval(*n.b, p));
    case Kind::Stabilize: {
      const Node& f = *n.a;
      SuspensionPoint inner{false, {}, p.x};
      std::vector<std::vector<SimplexPoint>> q;
      for (const auto& s : p.sphere) {
        auto pre = gamma_inv(s, n.blocks);
        inner.sphere.push_back(std::move(pre.outer));
        q.push_back(std::move(pre.inner));
      }
      const auto image = eval(f, inner);
      if (image.basepoint) return image;
      const auto [pi, rho] = perm_part(f);
      std::vector<std::vector<SimplexPoint>> moved(q.size(), std::vector<SimplexPoint>(uz(f.dom)));
      for (int u = 0; u < n.units; ++u)
        for (int i = 0; i < f.dom; ++i) moved[uz(rho(u))][uz(pi(i))] = q[uz(u)][uz(i)];
      SuspensionPoint out{false, {}, image.x};
      for (int u = 0; u < n.units; ++u) out.sphere.push_back(gamma(image.sphere[uz(u)], moved[uz(u)]));
      return out;
    }
    case Kind::Slice: {
      SuspensionPoint out{false, {}, p.x};
      for (int u = 0; u < n.units; ++u) out.sphere.push_back(gamma(p.sphere[uz(u)], n.slice[uz(u)]));
      return out;
    }
  }
  throw std::logic_error("unknown map node");
}

std::string describe(const Node& n) {
  switch (n.kind) {
    case Kind::Identity: return "id";
    case Kind::PermuteUnits: return "units" + to_string(n.perm);
    case Kind::PermuteSlots: return "slots" + to_string(n.perm);
    case Kind::Reflect: {
      std::string m;
      for (bool b : n.mask) m += b ? '1' : '0';
      return "reflect[" + m + "]";
    }
    case Kind::Constant: return "const";
    case Kind::Compose: return "(" + describe(*n.a) + " . " + describe(*n.b) + ")";
    case Kind::Stabilize: {
      std::string s;
      for (std::size_t i = 0; i < n.blocks.size(); ++i) s += (i ? "," : "") + std::to_string(n.blocks[i]);
      return "stab[" + s + "](" + describe(*n.a) + ")";
    }
    case Kind::Slice: return "slice";
  }
  return "?";
}

std::shared_ptr<Node> make(Kind kind, int units, int dom, int cod) {
  if (units < 1 || dom < 1 || cod < 1) throw std::invalid_argument("map descriptor: sizes must be positive");
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->units = units;
  n->dom = dom;
  n->cod = cod;
  return n;
}

}  // namespace

MapDescriptor MapDescriptor::identity(int units, int arity) { return MapDescriptor(make(Kind::Identity, units, arity, arity)); }

MapDescriptor MapDescriptor::permute_units(const Permutation& rho, int arity) {
  auto n = make(Kind::PermuteUnits, rho.size(), arity, arity);
  n->perm = rho;
  return MapDescriptor(n);
}

MapDescriptor MapDescriptor::permute_slots(const Permutation& pi, int units) {
  auto n = make(Kind::PermuteSlots, units, pi.size(), pi.size());
  n->perm = pi;
  return MapDescriptor(n);
}

MapDescriptor MapDescriptor::reflect(const std::vector<bool>& mask, int arity) {
  auto n = make(Kind::Reflect, static_cast<int>(mask.size()), arity, arity);
  n->mask = mask;
  return MapDescriptor(n);
}

MapDescriptor MapDescriptor::constant(int units, int dom, int cod) { return MapDescriptor(make(Kind::Constant, units, dom, cod)); }

MapDescriptor MapDescriptor::compose(const MapDescriptor& f, const MapDescriptor& g) {
  if (f.units() != g.units() || f.dom() != g.cod()) throw SizeMismatch("compose: maps are not composable");
  auto n = make(Kind::Compose, f.units(), g.dom(), f.cod());
  n->a = f.node_;
  n->b = g.node_;
  return MapDescriptor(n);
}

MapDescriptor MapDescriptor::stabilize(const MapDescriptor& f, const std::vector<int>& blocks) {
  if (!f.endomorphism()) throw SizeMismatch("stabilize: map must be a self-map");
  if (static_cast<int>(blocks.size()) != f.dom()) throw SizeMismatch("stabilize: need one block per slot");
  int total = 0;
  for (int b : blocks) {
    if (b < 1) throw std::invalid_argument("stabilize: block sizes must be positive");
    total += b;
  }
  auto n = make(Kind::Stabilize, f.units(), total, total);
  n->blocks = blocks;
  n->a = f.node_;
  return MapDescriptor(n);
}

MapDescriptor MapDescriptor::stabilize(const MapDescriptor& f, int j) {
  return stabilize(f, std::vector<int>(uz(f.dom()), j));
}

MapDescriptor MapDescriptor::slice(const std::vector<std::vector<SimplexPoint>>& points) {
  if (points.empty() || points.front().empty()) throw std::invalid_argument("slice: need points");
  const auto m = points.front().size();
  std::vector<int> arities;
  for (const auto& s : points.front()) arities.push_back(s.arity());
  for (const auto& row : points) {
    if (row.size() != m) throw SizeMismatch("slice: every unit needs the same number of points");
    for (std::size_t i = 0; i < m; ++i)
      if (row[i].arity() != arities[i]) throw SizeMismatch("slice: arities must agree across units");
  }
  int total = 0;
  for (int a : arities) total += a;
  auto n = make(Kind::Slice, static_cast<int>(points.size()), static_cast<int>(m), total);
  n->slice = points;
  return MapDescriptor(n);
}

int MapDescriptor::units() const { return node_->units; }
int MapDescriptor::dom() const { return node_->dom; }
int MapDescriptor::cod() const { return node_->cod; }

SuspensionPoint MapDescriptor::operator()(const SuspensionPoint& p) const { return eval(*node_, p); }

std::pair<Permutation, Permutation> MapDescriptor::permutation_part() const { return perm_part(*node_); }

std::string MapDescriptor::describe() const { return laxlin::describe(*node_); }

MapDescriptor stabilize_at(const MapDescriptor& f, int j, const std::vector<SimplexPoint>& s) {
  if (static_cast<int>(s.size()) != f.units()) throw SizeMismatch("stabilize_at: need one point per unit");
  std::vector<std::vector<SimplexPoint>> rows;
  for (const auto& p : s) {
    if (p.arity() != j) throw SizeMismatch("stabilize_at: point has the wrong arity");
    rows.emplace_back(uz(f.dom()), p);
  }
  return MapDescriptor::compose(MapDescriptor::stabilize(f, j), MapDescriptor::slice(rows));
}

// ---------------------------------------------------------------------------
// Sampling

SimplexPoint random_simplex(int n, SphereRng& rng) {
  std::uniform_int_distribution<long> w(1, 12);
  std::vector<long> weights;
  long total = 0;
  for (int i = 0; i < n; ++i) {
    weights.push_back(w(rng));
    total += weights.back();
  }
  std::vector<Rational> c;
  for (long x : weights) c.emplace_back(x, total);
  for (auto& q : c) q.canonicalize();
  return SimplexPoint(std::move(c));
}

Rational random_unit_interval(SphereRng& rng) {
  std::uniform_int_distribution<long> d(2, 24);
  const long den = d(rng);
  std::uniform_int_distribution<long> k(1, den - 1);
  Rational q(k(rng), den);
  q.canonicalize();
  return q;
}

SuspensionPoint random_suspension(int units, int arity, SphereRng& rng) {
  SuspensionPoint p;
  for (int u = 0; u < units; ++u) {
    p.sphere.push_back(random_simplex(arity, rng));
    p.x.push_back(random_unit_interval(rng));
  }
  return p;
}

std::vector<SimplexPoint> simplex_grid(int n, int max_den) {
  std::set<std::vector<Rational>> seen;
  std::vector<SimplexPoint> out;
  for (int d = n; d <= max_den; ++d)
    for (const auto& c : enumerate_compositions(d, n)) {
      std::vector<Rational> q;
      for (int part : c.parts) {
        q.emplace_back(part, d);
        q.back().canonicalize();
      }
      if (seen.insert(q).second) out.emplace_back(std::move(q));
    }
  return out;
}

std::vector<Rational> interval_grid(int max_den) {
  std::set<Rational> seen;
  std::vector<Rational> out;
  for (int d = 2; d <= max_den; ++d)
    for (int k = 1; k < d; ++k) {
      Rational q(k, d);
      q.canonicalize();
      if (seen.insert(q).second) out.push_back(q);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Law checks

namespace {

LawReport named(std::string law) {
  LawReport r;
  r.law = std::move(law);
  return r;
}

void record(LawReport& r, bool ok, const std::string& witness) {
  ++r.checked;
  if (!ok) {
    if (r.failures == 0) r.witness = witness;
    ++r.failures;
  }
}

std::string show(const std::vector<SimplexPoint>& ts) {
  std::string out;
  for (const auto& t : ts) out += to_string(t);
  return out;
}

Permutation random_perm(int n, SphereRng& rng) {
  std::vector<int> m(uz(n));
  for (int i = 0; i < n; ++i) m[uz(i)] = i;
  std::shuffle(m.begin(), m.end(), rng);
  return Permutation(std::move(m));
}

int rand_in(SphereRng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

struct OperadLaws {
  LawReport assoc{named("associativity")}, equiv{named("equivariance")}, unit{named("unit")}, inverse{named("inverse")};

  // γ(γ(s; t); u) = γ(s; γ(t¹; u-block 1), ...).
  void associativity(const SimplexPoint& s, const std::vector<SimplexPoint>& t, const std::vector<SimplexPoint>& u) {
    const auto lhs = gamma(gamma(s, t), u);
    std::vector<SimplexPoint> grouped;
    std::size_t pos = 0;
    for (const auto& ti : t) {
      std::vector<SimplexPoint> block(u.begin() + static_cast<std::ptrdiff_t>(pos),
                                      u.begin() + static_cast<std::ptrdiff_t>(pos + uz(ti.arity())));
      grouped.push_back(gamma(ti, block));
      pos += uz(ti.arity());
    }
    record(assoc, lhs == gamma(s, grouped), to_string(s) + ";" + show(t) + ";" + show(u));
  }

  // Outer: γ(σ·s; t_{σ⁻¹}) = block(σ)·γ(s; t). Inner: γ(s; ρ_i·t_i) = (⊔ρ_i)·γ(s; t).
  void equivariance(const SimplexPoint& s, const std::vector<SimplexPoint>& t, const Permutation& sigma,
                    const std::vector<Permutation>& rho) {
    std::vector<int> sizes;
    for (const auto& ti : t) sizes.push_back(ti.arity());
    const auto base = gamma(s, t);
    std::vector<SimplexPoint> moved(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) moved[uz(sigma(static_cast<int>(i)))] = t[i];
    record(equiv, gamma(permute(sigma, s), moved) == permute(block_permutation(sigma, sizes), base),
           "outer " + to_string(sigma) + " at " + to_string(s) + ";" + show(t));
    std::vector<SimplexPoint> inner;
    for (std::size_t i = 0; i < t.size(); ++i) inner.push_back(permute(rho[i], t[i]));
    record(equiv, gamma(s, inner) == permute(block_sum(rho), base), "inner at " + to_string(s) + ";" + show(t));
  }

  void units(const SimplexPoint& s, const std::vector<SimplexPoint>& t) {
    const auto u = gamma(s, t);
    record(unit, gamma(SimplexPoint::unit(), {u}) == u, "left unit at " + to_string(u));
    record(unit, gamma(u, std::vector<SimplexPoint>(uz(u.arity()), SimplexPoint::unit())) == u, "right unit at " + to_string(u));
  }

  void inverses(const SimplexPoint& s, const std::vector<SimplexPoint>& t) {
    std::vector<int> sizes;
    for (const auto& ti : t) sizes.push_back(ti.arity());
    const auto u = gamma(s, t);
    const auto pre = gamma_inv(u, sizes);
    record(inverse, pre.outer == s && pre.inner == t, "gamma_inv(gamma) at " + to_string(s) + ";" + show(t));
    record(inverse, gamma(pre.outer, pre.inner) == u, "gamma(gamma_inv) at " + to_string(u));
  }
};

// Every tuple in the product of the given point lists, passed to fn.
template <class Fn>
void for_each_tuple(const std::vector<std::vector<SimplexPoint>>& lists, Fn fn) {
  for (const auto& l : lists)
    if (l.empty()) return;
  std::vector<std::size_t> idx(lists.size(), 0);
  while (true) {
    std::vector<SimplexPoint> tuple;
    for (std::size_t i = 0; i < lists.size(); ++i) tuple.push_back(lists[i][idx[i]]);
    fn(tuple);
    std::size_t pos = lists.size();
    while (pos > 0 && ++idx[pos - 1] == lists[pos - 1].size()) idx[--pos] = 0;
    if (pos == 0) return;
  }
}

}  // namespace

std::vector<LawReport> check_sphere_operad(long long samples, std::uint64_t seed, int grid_den, int max_total) {
  OperadLaws laws;
  SphereRng rng(seed);
  for (long long n = 0; n < samples; ++n) {
    const int k = rand_in(rng, 1, 3);
    const auto s = random_simplex(k, rng);
    std::vector<SimplexPoint> t;
    std::vector<Permutation> rho;
    int total = 0;
    for (int i = 0; i < k; ++i) {
      t.push_back(random_simplex(rand_in(rng, 1, 3), rng));
      rho.push_back(random_perm(t.back().arity(), rng));
      total += t.back().arity();
    }
    std::vector<SimplexPoint> u;
    for (int i = 0; i < total; ++i) u.push_back(random_simplex(rand_in(rng, 1, 2), rng));
    laws.associativity(s, t, u);
    laws.equivariance(s, t, random_perm(k, rng), rho);
    laws.units(s, t);
    laws.inverses(s, t);
  }

  std::vector<std::vector<SimplexPoint>> grid{{}};
  for (int n = 1; n <= max_total; ++n) grid.push_back(simplex_grid(n, grid_den));
  for (int total = 1; total <= max_total; ++total)
    for (int k = 1; k <= total; ++k)
      for (const auto& comp : enumerate_compositions(total, k)) {
        std::vector<std::vector<SimplexPoint>> lists{grid[uz(k)]};
        for (int j : comp.parts) lists.push_back(grid[uz(j)]);
        for_each_tuple(lists, [&](const std::vector<SimplexPoint>& tuple) {
          const SimplexPoint& s = tuple.front();
          const std::vector<SimplexPoint> t(tuple.begin() + 1, tuple.end());
          laws.units(s, t);
          laws.inverses(s, t);
          // Generators of Σ_k on the outside and of each Σ_{j_i} inside.
          std::vector<Permutation> ids;
          for (int j : comp.parts) ids.push_back(Permutation::identity(j));
          for (int i = 0; i + 1 < k; ++i) laws.equivariance(s, t, Permutation::adjacent(k, i), ids);
          for (int b = 0; b < k; ++b)
            for (int i = 0; i + 1 < comp.parts[uz(b)]; ++i) {
              auto rho = ids;
              rho[uz(b)] = Permutation::adjacent(comp.parts[uz(b)], i);
              laws.equivariance(s, t, Permutation::identity(k), rho);
            }
        });
        // Associativity over every further splitting with total arity ≤ max_total.
        for (int outer_total = total; outer_total <= max_total; ++outer_total)
          for (const auto& split : enumerate_compositions(outer_total, total)) {
            auto lists2 = lists;
            for (int l : split.parts) lists2.push_back(grid[uz(l)]);
            for_each_tuple(lists2, [&](const std::vector<SimplexPoint>& tuple) {
              const std::vector<SimplexPoint> t(tuple.begin() + 1, tuple.begin() + 1 + k);
              const std::vector<SimplexPoint> u(tuple.begin() + 1 + k, tuple.end());
              laws.associativity(tuple.front(), t, u);
            });
          }
      }
  return {laws.assoc, laws.equiv, laws.unit, laws.inverse};
}

std::vector<LawReport> check_coend(long long samples, std::uint64_t seed, int max_n) {
  LawReport trip{named("round trip")}, equiv{named("equivariance")}, range{named("range")}, diag{named("diagonal")}, base{named("basepoint")};
  SphereRng rng(seed);
  for (int n = 1; n <= max_n; ++n) {
    record(base, !coend_adjoint(std::nullopt, Rational(1, 2)) && !coend_adjoint(SimplexPoint::barycenter(n), std::nullopt),
           "n=" + std::to_string(n));
    for (long long i = 0; i < samples; ++i) {
      const auto s = random_simplex(n, rng);
      const auto x = random_unit_interval(rng);
      const auto z = *coend_adjoint(s, x);
      bool inside = z.size() == uz(n);
      for (const auto& c : z) inside = inside && c > 0 && c < 1;
      record(range, inside, to_string(s) + " ^ " + to_string(x));
      const auto pre = coend_inverse(z);
      record(trip, pre.s == s && pre.x == x, to_string(s) + " ^ " + to_string(x));
      // The other direction: a random cube point comes back exactly.
      std::vector<Rational> w;
      for (int c = 0; c < n; ++c) w.push_back(random_unit_interval(rng));
      const auto back = coend_inverse(w);
      record(trip, *coend_adjoint(back.s, back.x) == w, "cube point");
      const auto sigma = random_perm(n, rng);
      std::vector<Rational> moved(uz(n));
      for (int c = 0; c < n; ++c) moved[uz(sigma(c))] = z[uz(c)];
      record(equiv, *coend_adjoint(permute(sigma, s), x) == moved, to_string(sigma) + " at " + to_string(s));
      const auto d = *coend_adjoint(SimplexPoint::barycenter(n), x);
      record(diag, std::all_of(d.begin(), d.end(), [&](const Rational& c) { return c == d.front(); }),
             "barycenter ^ " + to_string(x));
    }
  }
  return {trip, equiv, range, diag, base};
}

namespace {

MapDescriptor random_endo(int units, int arity, SphereRng& rng, int depth) {
  const int pick = rand_in(rng, 0, depth > 0 ? 5 : 3);
  switch (pick) {
    case 0: return MapDescriptor::permute_units(random_perm(units, rng), arity);
    case 1: return MapDescriptor::permute_slots(random_perm(arity, rng), units);
    case 2: {
      std::vector<bool> mask;
      for (int u = 0; u < units; ++u) mask.push_back(rng() % 2 == 0);
      return MapDescriptor::reflect(mask, arity);
    }
    case 3: return MapDescriptor::identity(units, arity);
    case 4:
      return MapDescriptor::compose(random_endo(units, arity, rng, depth - 1), random_endo(units, arity, rng, depth - 1));
    default: {
      // A stabilization of a map on fewer slots, when one exists.
      if (arity == 1) return random_endo(units, arity, rng, depth - 1);
      const int m = rand_in(rng, 1, arity - 1);
      const auto comps = enumerate_compositions(arity, m);
      const auto& blocks = comps[rng() % comps.size()].parts;
      return MapDescriptor::stabilize(random_endo(units, m, rng, depth - 1), blocks);
    }
  }
}

std::vector<int> random_blocks(int parts, int max_part, SphereRng& rng) {
  std::vector<int> b;
  for (int i = 0; i < parts; ++i) b.push_back(rand_in(rng, 1, max_part));
  return b;
}

// Blocks of the one-step stabilization: the second blocks summed over each
// first block.
std::vector<int> combine_blocks(const std::vector<int>& first, const std::vector<int>& second) {
  std::vector<int> out;
  std::size_t pos = 0;
  for (int b : first) {
    int sum = 0;
    for (int i = 0; i < b; ++i) sum += second[pos++];
    out.push_back(sum);
  }
  return out;
}

}  // namespace

std::vector<LawReport> check_stabilization(long long samples, std::uint64_t seed) {
  LawReport full{named("associativity")}, sliced{named("associativity at slices")}, ident{named("identity")}, swap{named("swap structure")},
      functor{named("functoriality")}, equiv{named("equivariance")};
  SphereRng rng(seed);
  using M = MapDescriptor;
  for (long long n = 0; n < samples; ++n) {
    const int units = rand_in(rng, 1, 3);
    const int m = rand_in(rng, 1, 2);
    const auto f = random_endo(units, m, rng, 2);
    const auto b1 = random_blocks(m, 3, rng);
    int m1 = 0;
    for (int b : b1) m1 += b;
    const auto b2 = random_blocks(m1, 2, rng);
    const auto p = random_suspension(units, [&] { int s = 0; for (int b : b2) s += b; return s; }(), rng);
    const auto two = M::stabilize(M::stabilize(f, b1), b2);
    const auto one = M::stabilize(f, combine_blocks(b1, b2));
    record(full, two(p) == one(p), f.describe() + " at " + to_string(p));

    // Slices: stabilize twice at s1 then s2 = once at γ(s1; s2, ..., s2).
    const int j1 = rand_in(rng, 1, 3), j2 = rand_in(rng, 1, 2);
    std::vector<SimplexPoint> s1, s2, s12;
    for (int u = 0; u < units; ++u) {
      s1.push_back(random_simplex(j1, rng));
      s2.push_back(random_simplex(j2, rng));
      s12.push_back(gamma(s1.back(), std::vector<SimplexPoint>(uz(j1), s2.back())));
    }
    const auto q = random_suspension(units, m, rng);
    const auto lhs = stabilize_at(M::stabilize(f, j1), j2, s2);
    std::vector<std::vector<SimplexPoint>> rows1;
    for (const auto& s : s1) rows1.emplace_back(uz(m), s);
    const auto twice = M::compose(lhs, M::slice(rows1));
    const auto once = stabilize_at(f, j1 * j2, s12);
    record(sliced, twice(q) == once(q), f.describe() + " at " + to_string(q));

    const auto e = random_suspension(units, m1, rng);
    record(ident, M::stabilize(M::identity(units, m), b1)(e) == e, to_string(e));

    // Stabilizing a slot permutation gives the induced block permutation.
    const auto pi = random_perm(m, rng);
    const auto r = random_suspension(units, m1, rng);
    record(equiv, M::stabilize(M::permute_slots(pi, units), b1)(r) == M::permute_slots(block_permutation(pi, b1), units)(r),
           to_string(pi) + " at " + to_string(r));

    // stab_b(f ∘ g) = stab_{π_g b}(f) ∘ stab_b(g).
    const auto g = random_endo(units, m, rng, 1);
    const auto pg = g.permutation_part().first;
    std::vector<int> moved_blocks(b1.size());
    for (int i = 0; i < m; ++i) moved_blocks[uz(pg(i))] = b1[uz(i)];
    record(functor, M::stabilize(M::compose(f, g), b1)(r) == M::compose(M::stabilize(f, moved_blocks), M::stabilize(g, b1))(r),
           f.describe() + " after " + g.describe() + " at " + to_string(r));

    // The swap on |U| = 2 stabilized once swaps the two cube blocks.
    const auto w = random_suspension(2, 2, rng);
    const auto cube_in = *to_cube(w);
    const auto cube_out = to_cube(M::stabilize(M::permute_units(Permutation({1, 0}), 1), 2)(w));
    const std::vector<Rational> expected{cube_in[2], cube_in[3], cube_in[0], cube_in[1]};
    record(swap, cube_out && *cube_out == expected, to_string(w));
  }
  return {full, sliced, ident, swap, functor, equiv};
}

std::vector<LawReport> reproduce_tower_example(int grid_den) {
  using M = MapDescriptor;
  const SimplexPoint a({Rational(1, 2), Rational(1, 2)});
  const SimplexPoint b = a;
  const SimplexPoint c = SimplexPoint::unit();
  const auto abc = gamma(a, {b, c});
  LawReport point{named("tower point")}, full{named("tower")}, sliced{named("tower at the slice")}, perm{named("tower with a swap")}, constant{named("tower constant")};
  record(point, abc == SimplexPoint({Rational(1, 4), Rational(1, 4), Rational(1, 2)}), to_string(abc));

  auto grid3 = simplex_grid(3, grid_den);
  grid3.push_back(abc);
  const auto xs = interval_grid(grid_den);
  const Permutation swap({1, 0});
  for (const auto& f : {M::identity(1, 1), M::reflect({true}, 1)}) {
    const auto two = M::stabilize(M::stabilize(f, 2), std::vector<int>{2, 1});
    const auto one = M::stabilize(f, 3);
    const auto two_swapped = M::stabilize(M::compose(M::permute_slots(swap, 1), M::stabilize(f, 2)), std::vector<int>{2, 1});
    const auto one_swapped = M::compose(M::permute_slots(block_permutation(swap, {2, 1}), 1), one);
    const auto two_slice = M::compose(M::compose(two, M::slice({{b, c}})), M::slice({{a}}));
    const auto one_slice = M::compose(one, M::slice({{abc}}));
    for (const auto& x : xs) {
      for (const auto& t : grid3) {
        const SuspensionPoint p{false, {t}, {x}};
        record(full, two(p) == one(p), f.describe() + " at " + to_string(p));
        record(perm, two_swapped(p) == one_swapped(p), f.describe() + " at " + to_string(p));
      }
      const SuspensionPoint p{false, {SimplexPoint::unit()}, {x}};
      record(sliced, two_slice(p) == one_slice(p), f.describe() + " at " + to_string(p));
    }
  }
  const auto k = M::constant(1, 1, 1);
  const auto two = M::stabilize(M::stabilize(k, 2), std::vector<int>{2, 1});
  const auto one = M::stabilize(k, 3);
  for (const auto& x : xs)
    for (const auto& t : grid3) {
      const SuspensionPoint p{false, {t}, {x}};
      record(constant, two(p).basepoint && one(p).basepoint, to_string(p));
    }
  return {point, full, sliced, perm, constant};
}

}  // namespace laxlin
