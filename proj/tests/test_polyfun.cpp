#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>

#include "generators.hpp"
#include "laxlin/polyfun.hpp"
#include "oracles.hpp"

using namespace laxlin;

namespace {

Monomial mono(std::vector<std::string> coeff_atoms, std::vector<int> exps) {
  Monomial m{{}, std::move(exps), {}};
  for (auto& a : coeff_atoms) m.coeff.push_back({std::move(a)});
  return m;
}

// G₁ = A∧X, G₂ = B∧X∧Y, F₁ = C∧X, F₂ = D∧X∧Y.
PolyFunSeq abcd(const std::string& one, const std::string& two) {
  return PolyFunSeq({PolyMultiFun{1, {mono({one}, {1})}}, PolyMultiFun{2, {mono({two}, {1, 1})}}});
}

std::vector<std::int64_t> sizes_of(const SymSeq& s) {
  std::vector<std::int64_t> out{0};
  for (const auto& lv : s.levels()) out.push_back(lv.size());
  return out;
}

// (exponents, coefficient label) pairs with the atoms of each label sorted,
// so factor order does not matter.
using Signature = std::multiset<std::pair<std::vector<int>, std::vector<std::string>>>;

Signature signature(const Monomial& m) {
  Signature out;
  for (auto label : m.coeff) {
    std::sort(label.begin(), label.end());
    out.emplace(m.exps, std::move(label));
  }
  return out;
}

std::vector<std::string> sorted_atoms(const PolyFunSeq& f, int n, int term, int label) {
  auto l = f.level(n).terms[static_cast<std::size_t>(term)].coeff[static_cast<std::size_t>(label)];
  std::sort(l.begin(), l.end());
  return l;
}

}  // namespace

TEST_CASE("evaluate") {
  const PolyMultiFun ax{1, {mono({"a1", "a2"}, {1})}};
  CHECK(evaluate(ax, {PointedSet{{"s"}}}).size() == 2);
  CHECK(evaluate(ax, {PointedSet{}}).size() == 0);
  const PolyMultiFun sq{1, {Monomial{{CoeffLabel{}}, {2}, {}}}};
  const auto four = evaluate(sq, {PointedSet{{"x", "y"}}});
  CHECK(four.size() == 4);
  CHECK(four.labels.front() == "t1:1*x*x");
  const PolyMultiFun xy{2, {mono({"b"}, {1, 1}), mono({"c"}, {0, 1})}};
  CHECK(evaluate(xy, {PointedSet{}, PointedSet{{"y"}}}).size() == 1);
  CHECK_THROWS_AS(evaluate(xy, {PointedSet{}}), SizeMismatch);
}

TEST_CASE("symmetry witnesses are validated") {
  // (1,2) without its partner (2,1) is not symmetric.
  CHECK_THROWS(PolyFunSeq({PolyMultiFun{1, {}}, PolyMultiFun{2, {mono({"a"}, {1, 2})}}}));
  CHECK_NOTHROW(PolyFunSeq({PolyMultiFun{1, {}}, PolyMultiFun{2, {mono({"a"}, {1, 2}), mono({"a"}, {2, 1})}}}));
  // A coefficient action needs equal exponents and must be a bijection.
  auto m = mono({"a", "b"}, {1, 1});
  m.action = {{1, 0}};
  CHECK_NOTHROW(PolyFunSeq({PolyMultiFun{1, {}}, PolyMultiFun{2, {m}}}));
  m.action = {{0, 0}};
  CHECK_THROWS(PolyFunSeq({PolyMultiFun{1, {}}, PolyMultiFun{2, {m}}}));
  // s1 fixing and s2 swapping the labels breaks the braid relation.
  auto b = mono({"a", "b"}, {1, 1, 1});
  b.action = {{0, 1}, {1, 0}};
  CHECK_THROWS(PolyFunSeq({PolyMultiFun{1, {}}, PolyMultiFun{2, {}}, PolyMultiFun{3, {b}}}));
}

TEST_CASE("compose_funseq example") {
  const auto g = abcd("A", "B");
  const auto f = abcd("C", "D");
  const auto gf = compose_funseq(g, f, 2);
  const auto& lv = gf.seq.level(2);
  REQUIRE(lv.terms.size() == 2);
  CHECK(render(lv.terms[0].coeff.at(0)) == "A*D");
  CHECK(lv.terms[0].exps == std::vector<int>{1, 1});
  CHECK(render(lv.terms[1].coeff.at(0)) == "B*C*C");
  CHECK(lv.terms[1].exps == std::vector<int>{1, 1});
  CHECK_THROWS_AS(compose_funseq(g, f, 3), TruncationError);
}

TEST_CASE("compose_funseq sums over every partition, not only consecutive blocks") {
  const auto g = PolyFunSeq({PolyMultiFun{1, {mono({"A"}, {1})}}, PolyMultiFun{2, {mono({"B"}, {1, 1})}},
                             PolyMultiFun{3, {}}});
  const auto f = PolyFunSeq({PolyMultiFun{1, {mono({"C"}, {1})}}, PolyMultiFun{2, {mono({"D"}, {1, 1})}},
                             PolyMultiFun{3, {}}});
  // Level 3: A(F₃) = 0, B(F₁,F₂) over the three 1+2 partitions, nothing else.
  const auto gf = compose_funseq(g, f, 3);
  CHECK(gf.seq.level(3).terms.size() == 3);
  CHECK(gf.terms[2][0].partition == UnorderedPartition(3, {{0, 1}, {2}}));
  CHECK(gf.terms[2][2].partition == UnorderedPartition(3, {{0}, {1, 2}}));
}

TEST_CASE("compose_funseq rejects inner constant terms") {
  const auto g = abcd("A", "B");
  const auto f = PolyFunSeq({PolyMultiFun{1, {mono({"c"}, {0})}}, PolyMultiFun{2, {}}});
  CHECK_THROWS_AS(compose_funseq(g, f, 2), std::invalid_argument);
  CHECK_NOTHROW(compose_funseq(f, g, 2));  // constants are fine on the outside
}

TEST_CASE("the unit functor sequence is a strict two-sided unit") {
  gen::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = gen::random_funseq(4, "f", rng);
    const auto u = unit_funseq(4);
    CHECK(compose_funseq(u, f, 4).seq == f);
    CHECK(compose_funseq(f, u, 4).seq == f);
  }
}

TEST_CASE("composites are symmetric: signatures are Σ_n-invariant for n <= 4") {
  gen::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = gen::random_funseq(4, "g", rng);
    const auto f = gen::random_funseq(4, "f", rng);
    const auto gf = compose_funseq(g, f, 4);
    for (int n = 1; n <= 4; ++n) {
      Signature base;
      for (const auto& m : gf.seq.level(n).terms) base.merge(signature(m));
      for (const auto& s : all_permutations(n)) {
        Signature moved;
        for (const auto& m : gf.seq.level(n).terms) {
          auto p = m;
          for (int i = 0; i < n; ++i) p.exps[static_cast<std::size_t>(s(i))] = m.exps[static_cast<std::size_t>(i)];
          moved.merge(signature(p));
        }
        REQUIRE(moved == base);
        // The stored witnesses realise σ on terms.
        for (std::size_t t = 0; t < gf.seq.level(n).terms.size(); ++t) {
          const auto img = gf.seq.act(n, s, static_cast<int>(t));
          const auto& src = gf.seq.level(n).terms[t];
          const auto& dst = gf.seq.level(n).terms[static_cast<std::size_t>(img.term)];
          for (int i = 0; i < n; ++i) REQUIRE(dst.exps[static_cast<std::size_t>(s(i))] == src.exps[static_cast<std::size_t>(i)]);
        }
      }
    }
  }
}

TEST_CASE("associativity with a multilinear outer sequence, n <= 4") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const auto g = gen::random_funseq(4, "g", rng, true);
    const auto f = gen::random_funseq(4, "f", rng);
    const auto h = gen::random_funseq(4, "h", rng);
    const auto as = funseq_associator(g, f, h, 4);
    for (int n = 1; n <= 4; ++n) {
      const auto& src = as.gf_h.seq.level(n).terms;
      const auto& dst = as.g_fh.seq.level(n).terms;
      const auto& fwd = as.forward[static_cast<std::size_t>(n - 1)];
      REQUIRE(src.size() == dst.size());
      std::vector<int> hits(dst.size(), 0);
      for (std::size_t t = 0; t < src.size(); ++t) {
        REQUIRE(fwd[t] >= 0);
        ++hits[static_cast<std::size_t>(fwd[t])];
        REQUIRE(signature(src[t]) == signature(dst[static_cast<std::size_t>(fwd[t])]));
      }
      for (int c : hits) REQUIRE(c == 1);
    }
  }
}

TEST_CASE("a squared outer slot breaks term-level associativity") {
  // G₁ = X∧X; F and H each have X and X∧Y. Each copy of the squared slot in
  // G∘(F∘H) may pick its own partition; (G∘F)∘H fixes one.
  const auto g = PolyFunSeq({PolyMultiFun{1, {Monomial{{CoeffLabel{}}, {2}, {}}}}, PolyMultiFun{2, {}}});
  const auto f = abcd("C", "D");
  const auto h = abcd("E", "K");
  const auto gf_h = compose_funseq(compose_funseq(g, f, 2).seq, h, 2);
  const auto g_fh = compose_funseq(g, compose_funseq(f, h, 2).seq, 2);
  CHECK(gf_h.seq.level(2).terms.size() == 2);
  CHECK(g_fh.seq.level(2).terms.size() == 4);
  CHECK_THROWS(funseq_associator(g, f, h, 2));
  // Their multilinear parts agree (both empty).
  CHECK(multilinearize_at_S0(gf_h.seq).seq.level(2).size() == multilinearize_at_S0(g_fh.seq).seq.level(2).size());
}

TEST_CASE("multilinearize_at_S0 examples") {
  const auto sq = PolyFunSeq({PolyMultiFun{1, {Monomial{{CoeffLabel{}}, {2}, {}}}}});
  CHECK(multilinearize_at_S0(sq).seq.level(1).size() == 0);
  const auto ax = PolyFunSeq({PolyMultiFun{1, {mono({"a1", "a2"}, {1})}}});
  const auto m = multilinearize_at_S0(ax);
  CHECK(m.seq.level(1).labels() == std::vector<std::string>{"t1:a1", "t1:a2"});
  const auto gf = compose_funseq(abcd("A", "B"), abcd("C", "D"), 2);
  CHECK(multilinearize_at_S0(gf.seq).seq.level(2).labels() == std::vector<std::string>{"t1:A*D", "t2:B*C*C"});
}

TEST_CASE("chain rule on the A/B/C/D example") {
  const auto r = chain_rule_compare(abcd("A", "B"), abcd("C", "D"), 2);
  CHECK(r.bijective_equivariant());
  CHECK(r.witness.empty());
  REQUIRE(r.levels.size() == 2);
  CHECK(r.levels[1].lhs == 2);
  CHECK(r.levels[1].rhs == 2);
  CHECK(r.levels[1].oracle == 2);
  const auto& lv = r.lhs.elements[1];
  for (std::size_t e = 0; e < lv.size(); ++e) {
    const auto& label = r.rhs.seq.level(2).label(r.mu[1][e]);
    if (lv[e].partition.num_blocks() == 1) CHECK(label == "t1:A*D");
    else CHECK(label == "t2:B*C*C");
  }
}

TEST_CASE("chain rule with unit sequences is the identity on the unit") {
  const auto u = unit_funseq(3);
  const auto r = chain_rule_compare(u, u, 3);
  CHECK(r.bijective_equivariant());
  CHECK(r.rhs.seq.level(1).size() == 1);
  CHECK(r.mu[0] == std::vector<Elem>{0});
  CHECK(r.rhs.seq.level(2).size() == 0);
}

TEST_CASE("Faà di Bruno count: 𝔻₁(G∘F) matches the partition sum for n <= 5") {
  gen::Rng rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = gen::random_funseq(5, "g", rng);
    const auto f = gen::random_funseq(5, "f", rng);
    const auto r = chain_rule_compare(g, f, 5);
    REQUIRE(r.bijective_equivariant());
    const auto a = sizes_of(r.lhs_g.seq);
    const auto b = sizes_of(r.lhs_f.seq);
    for (const auto& lv : r.levels) {
      REQUIRE(lv.rhs == oracle::composite_count(a, b, lv.n));
      REQUIRE(lv.lhs == lv.rhs);
      REQUIRE(lv.oracle == lv.rhs);
    }
  }
}

TEST_CASE("μ is a levelwise equivariant bijection on random pairs, N = 4") {
  gen::Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const bool linear = trial % 2 == 0;
    const auto g = gen::random_funseq(4, "g", rng, linear);
    const auto f = gen::random_funseq(4, "f", rng, linear);
    const auto r = chain_rule_compare(g, f, 4);
    REQUIRE_MESSAGE(r.bijective_equivariant(), r.witness);
    CHECK(r.multipointed);
    // Equivariance for every σ, not just generators.
    for (int n = 1; n <= 4; ++n) {
      const auto& src = r.lhs.seq.level(n);
      const auto& dst = r.rhs.seq.level(n);
      for (const auto& s : all_permutations(n))
        for (Elem e = 0; e < src.size(); ++e)
          REQUIRE(r.mu[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(src.act(s, e))] ==
                  dst.act(s, r.mu[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(e)]));
    }
  }
}

TEST_CASE("without multipointedness μ can miss multilinear terms") {
  // F₂ = D∧X ∨ D∧Y is not pointed in each variable; G₁ = X∧X.
  const auto g = PolyFunSeq({PolyMultiFun{1, {Monomial{{CoeffLabel{}}, {2}, {}}}}, PolyMultiFun{2, {}}});
  const auto f = PolyFunSeq({PolyMultiFun{1, {}}, PolyMultiFun{2, {mono({"D"}, {1, 0}), mono({"D"}, {0, 1})}}});
  const auto r = chain_rule_compare(g, f, 2);
  CHECK_FALSE(r.multipointed);
  CHECK_FALSE(r.surjective);
  CHECK_FALSE(r.witness.empty());
  CHECK(r.levels[1].lhs == 0);
  CHECK(r.levels[1].rhs > 0);
}

TEST_CASE("summands without a multilinear inner part are flagged") {
  // F₂ = X∧Y∧Y has no multilinear part; G₂ = B∧X∧Y does.
  const auto g = abcd("A", "B");
  const auto f = PolyFunSeq({PolyMultiFun{1, {mono({"C"}, {1})}},
                             PolyMultiFun{2, {mono({"D"}, {1, 2}), mono({"D"}, {2, 1})}}});
  const auto r = chain_rule_compare(g, f, 2);
  CHECK(r.bijective_equivariant());
  REQUIRE(r.flagged.size() == 1);
  CHECK(r.flagged[0].first == 2);
  CHECK(r.flagged[0].second == UnorderedPartition(2, {{0, 1}}));
}

TEST_CASE("μ is natural in term relabellings") {
  gen::Rng rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = gen::random_funseq(4, "g", rng);
    const auto f = gen::random_funseq(4, "f", rng);
    const auto g2 = gen::relabel_terms(g, rng);
    const auto f2 = gen::relabel_terms(f, rng);
    const auto r = chain_rule_compare(g, f, 4);
    const auto r2 = chain_rule_compare(g2.seq, f2.seq, 4);
    // 𝔻₁ of the relabellings, as level maps.
    auto linear_map = [](const Multilinear& from, const Multilinear& to, const std::vector<std::vector<int>>& p) {
      LevelMap out;
      for (std::size_t lv = 0; lv < from.elements.size(); ++lv) {
        std::vector<Elem> m;
        for (const auto& [t, a] : from.elements[lv])
          m.push_back(to.index_of(static_cast<int>(lv) + 1, p[lv][static_cast<std::size_t>(t)], a));
        out.push_back(std::move(m));
      }
      return out;
    };
    const auto mg = linear_map(r.lhs_g, r2.lhs_g, g2.perm);
    const auto mf = linear_map(r.lhs_f, r2.lhs_f, f2.perm);
    const auto top = map_compose(r.lhs, mg, mf, r2.lhs);
    for (int n = 1; n <= 4; ++n) {
      const auto lv = static_cast<std::size_t>(n - 1);
      for (std::size_t e = 0; e < r.mu[lv].size(); ++e) {
        // The composite term under the relabelling (g∘f)(P, t, u) = (P, g(t), f(u)).
        const auto [term, label] = r.rhs.elements[lv][static_cast<std::size_t>(r.mu[lv][e])];
        auto key = r.composite.terms[lv][static_cast<std::size_t>(term)];
        const int k = key.partition.num_blocks();
        key.outer = g2.perm[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(key.outer)];
        for (int i = 0; i < k; ++i) {
          const auto ni = key.partition.block(i).size();
          for (auto& t : key.inner[static_cast<std::size_t>(i)]) t = f2.perm[ni - 1][static_cast<std::size_t>(t)];
        }
        const Elem down = r2.rhs.index_of(n, r2.composite.index_of(n, key), label);
        REQUIRE(r2.mu[lv][static_cast<std::size_t>(top[lv][e])] == down);
      }
    }
  }
}

TEST_CASE("μ is associative: both routes agree up to the regrouping") {
  gen::Rng rng(41);
  for (int trial = 0; trial < 8; ++trial) {
    const int N = 4;
    const auto g = gen::random_funseq(N, "g", rng, true);
    const auto f = gen::random_funseq(N, "f", rng);
    const auto h = gen::random_funseq(N, "h", rng);
    const auto gf = chain_rule_compare(g, f, N);
    const auto fh = chain_rule_compare(f, h, N);
    const auto gf_h = chain_rule_compare(gf.composite.seq, h, N);
    const auto g_fh = chain_rule_compare(g, fh.composite.seq, N);
    const auto regroup = funseq_associator(g, f, h, N);
    // ((G F) H) -> (G∘F) H -> (G∘F)∘H
    const auto mh = gf_h.lhs_f.seq;
    const auto src = compose_product(gf.lhs.seq, mh, N);
    const auto route1 = map_compose(src, gf.mu, identity_map(mh), gf_h.lhs);
    // ((G F) H) -> (G (F H)) -> G (F∘H) -> G∘(F∘H)
    const auto as = associator(gf.lhs_g.seq.truncated(N), gf.lhs_f.seq.truncated(N), mh.truncated(N), N);
    const auto inner = map_compose(as.a_bc, identity_map(gf.lhs_g.seq), fh.mu, g_fh.lhs);
    for (int n = 1; n <= N; ++n) {
      const auto lv = static_cast<std::size_t>(n - 1);
      REQUIRE(as.ab_c.seq.level(n).labels() == src.seq.level(n).labels());
      for (std::size_t e = 0; e < src.elements[lv].size(); ++e) {
        const Elem x1 = gf_h.mu[lv][static_cast<std::size_t>(route1[lv][e])];
        const auto y = as.forward[lv][e];
        const Elem x2 = g_fh.mu[lv][static_cast<std::size_t>(inner[lv][static_cast<std::size_t>(y)])];
        const auto [t1, a1] = gf_h.rhs.elements[lv][static_cast<std::size_t>(x1)];
        const auto [t2, a2] = g_fh.rhs.elements[lv][static_cast<std::size_t>(x2)];
        REQUIRE(regroup.forward[lv][static_cast<std::size_t>(t1)] == t2);
        REQUIRE(sorted_atoms(gf_h.composite.seq, n, t1, a1) == sorted_atoms(g_fh.composite.seq, n, t2, a2));
      }
    }
  }
}

TEST_CASE("builtin examples") {
  const auto ex = builtin_examples(4);
  REQUIRE(ex.size() == 3);
  const auto& smash = ex[0].seq;
  CHECK(evaluate(smash.level(2), {PointedSet{{"1"}}, PointedSet{{"1"}}}).size() == 1);
  const auto m = multilinearize_at_S0(smash);
  for (int n = 1; n <= 4; ++n) {
    CHECK(m.seq.level(n).size() == 1);
    CHECK(m.seq.level(n).trivial_action());
    CHECK(ex[1].seq.level(n).terms.at(0).coeff.size() == 1);
  }
  // 𝔻₁ of the Ass sequence recovers Ass with its action.
  const auto ass = make_ass(4);
  const auto mass = multilinearize_at_S0(ex[2].seq);
  for (int n = 1; n <= 4; ++n) CHECK(mass.seq.level(n).generators() == ass.seq().level(n).generators());
  for (const auto& e : ex) {
    const auto r = chain_rule_compare(e.seq, e.seq, 4);
    CHECK_MESSAGE(r.bijective_equivariant(), e.name);
  }
  CHECK_THROWS(operad_funseq(make_com(3).with_entry({1}, 0, kBasepoint), 3));
}
