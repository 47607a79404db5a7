#pragma once

// Symmetric sequences of finite pointed Σ_n-sets, the composition product,
// its associator and unitors, and an exhaustive operad-axiom checker.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "laxlin/combinat.hpp"

namespace laxlin {

/// Element handle inside a pointed set; the shared basepoint is kBasepoint.
using Elem = int;
inline constexpr Elem kBasepoint = -1;

class TruncationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IncompleteDataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite pointed set with a Σ_n-action. Non-basepoint elements carry
/// unique labels; the action is stored on the adjacent transpositions and
/// checked against the Coxeter presentation of Σ_n on construction.
class PointedSigmaSet {
 public:
  PointedSigmaSet() = default;
  /// `generators[i][e]` is the image of element e under s_i (i < arity-1).
  /// An empty `generators` means the trivial action.
  PointedSigmaSet(int arity, std::vector<std::string> labels,
                  std::vector<std::vector<Elem>> generators = {});

  int arity() const { return arity_; }
  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(Elem e) const { return labels_[static_cast<std::size_t>(e)]; }
  const std::vector<std::vector<Elem>>& generators() const { return gens_; }
  std::optional<Elem> find(const std::string& label) const;

  Elem act(const Permutation& sigma, Elem e) const;
  Elem act_generator(int i, Elem e) const {
    return e == kBasepoint ? e : gens_[static_cast<std::size_t>(i)][static_cast<std::size_t>(e)];
  }
  bool trivial_action() const;

 private:
  int arity_ = 1;
  std::vector<std::string> labels_;
  std::vector<std::vector<Elem>> gens_;
  std::map<std::string, Elem> index_;
};

/// Levels 1..max_level; `level(n)` has arity n.
class SymSeq {
 public:
  SymSeq() = default;
  explicit SymSeq(std::vector<PointedSigmaSet> levels);

  int max_level() const { return static_cast<int>(levels_.size()); }
  const PointedSigmaSet& level(int n) const;
  const std::vector<PointedSigmaSet>& levels() const { return levels_; }
  SymSeq truncated(int n) const;

 private:
  std::vector<PointedSigmaSet> levels_;
};

SymSeq unit_seq(int max_level);

/// An element (P, a, (b_i)) of (A∘B)(n); inner[i] sits over block i of P
/// in canonical order.
struct CompositeElement {
  UnorderedPartition partition;
  Elem outer = kBasepoint;
  std::vector<Elem> inner;

  friend bool operator==(const CompositeElement&, const CompositeElement&) = default;
  friend auto operator<=>(const CompositeElement&, const CompositeElement&) = default;
};

/// σ·(P, a, (b_i)) = (σP, τ·a, (ρ_i·b_i placed at τ(i))).
CompositeElement act(const Permutation& sigma, const CompositeElement& x, const SymSeq& a,
                     const SymSeq& b);

/// The result of A∘B together with the structure of every element.
struct Composite {
  SymSeq seq;
  std::vector<std::vector<CompositeElement>> elements;      ///< per level n-1
  std::vector<std::map<CompositeElement, Elem>> lookup;     ///< per level n-1

  const CompositeElement& element(int n, Elem e) const {
    return elements[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(e)];
  }
  /// kBasepoint when absent (a basepoint factor collapses the smash).
  Elem index_of(int n, const CompositeElement& x) const;
};

/// Levels 1..N of A∘B. Throws TruncationError if A or B stop below N.
Composite compose_product(const SymSeq& a, const SymSeq& b, int max_level);

/// Non-basepoint count of (A∘B)(n) from the partition-sum formula, without
/// building the elements.
long long composite_cardinality(const SymSeq& a, const SymSeq& b, int n);

/// Per-level index maps between two sequences with the same max level.
using LevelMap = std::vector<std::vector<Elem>>;

LevelMap identity_map(const SymSeq& s);

/// f∘g : X∘Y -> X'∘Y' induced by level maps f: X -> X' and g: Y -> Y'.
LevelMap map_compose(const Composite& source, const LevelMap& f, const LevelMap& g,
                     const Composite& target);

/// The regrouping bijection ((A∘B)∘C)(n) -> (A∘(B∘C))(n) together with the
/// four composites it is built from.
struct Associator {
  Composite ab, ab_c, bc, a_bc;
  LevelMap forward;
};

Associator associator(const SymSeq& a, const SymSeq& b, const SymSeq& c, int max_level);

/// (1∘A)(n) -> A(n) and (A∘1)(n) -> A(n).
LevelMap left_unitor(const Composite& unit_a);
LevelMap right_unitor(const Composite& a_unit);

/// True iff `map` is a levelwise bijection source -> target commuting with
/// every adjacent transposition.
bool is_equivariant_bijection(const LevelMap& map, const SymSeq& source, const SymSeq& target);

// ---------------------------------------------------------------------------
// Operads

/// One γ-table O(k) ∧ O(j_1) ∧ ... ∧ O(j_k) -> O(Σ j_i), indexed by the
/// mixed-radix code of the non-basepoint input tuple.
struct GammaTable {
  std::vector<int> parts;    ///< (j_1, ..., j_k)
  std::vector<Elem> table;   ///< kMissing marks an absent entry
};

inline constexpr Elem kMissing = -2;

class OperadData {
 public:
  OperadData() = default;
  OperadData(SymSeq seq, Elem unit, std::vector<GammaTable> tables);

  const SymSeq& seq() const { return seq_; }
  Elem unit() const { return unit_; }
  const std::map<std::vector<int>, GammaTable>& tables() const { return tables_; }

  /// γ(x; ys). Basepoint inputs collapse; throws IncompleteDataError when the
  /// table or entry is absent.
  Elem gamma(Elem x, const std::vector<int>& parts, const std::vector<Elem>& ys) const;

  /// Table code of a non-basepoint tuple.
  std::size_t code(const std::vector<int>& parts, Elem x, const std::vector<Elem>& ys) const;
  /// Copy with one entry replaced.
  OperadData with_entry(const std::vector<int>& parts, std::size_t code, Elem value) const;

 private:
  SymSeq seq_;
  Elem unit_ = 0;
  std::map<std::vector<int>, GammaTable> tables_;
};

struct OperadReport {
  bool pass = true;
  std::string law;                 ///< failing law, empty on pass
  std::vector<std::string> witness;  ///< labels of the first failing tuple
  std::string lhs, rhs;
  long long checked = 0;
};

/// Exhaustive unit, equivariance and associativity check over all
/// non-basepoint tuples of total arity <= N.
OperadReport check_operad(const OperadData& op, int max_level);

/// Com: one non-basepoint point per level, trivial actions.
OperadData make_com(int max_level);
/// Ass: O(n) = (Σ_n)_+ with relabelling action and block substitution.
OperadData make_ass(int max_level);

std::string describe(const PointedSigmaSet& s, Elem e);

}  // namespace laxlin
