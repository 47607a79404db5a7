#pragma once

// A symbolic model of symmetric functor sequences: each level is a finite
// wedge of monomials A ∧ X_1^{∧d_1} ∧ ... ∧ X_k^{∧d_k} over finite pointed
// sets. Provides evaluation, composition by substitution, multilinear
// extraction at S^0, and the element-level comparison map between
// 𝔻₁G(S⁰)∘𝔻₁F(S⁰) and 𝔻₁(G∘F)(S⁰).

#include <map>
#include <string>
#include <vector>

#include "laxlin/combinat.hpp"
#include "laxlin/symseq.hpp"

namespace laxlin {

/// A label of a coefficient set: a tuple of atomic names. Smash products
/// concatenate tuples, so S⁰ = {()} is a strict unit.
using CoeffLabel = std::vector<std::string>;
using Coefficient = std::vector<CoeffLabel>;

std::string render(const CoeffLabel& label);

struct Monomial {
  Coefficient coeff;
  std::vector<int> exps;
  /// Optional Σ_k-action on the coefficient (generator tables on label
  /// indices). Only allowed when every exponent is equal, so that each σ
  /// fixes the monomial. Input only: a constructed PolyFunSeq keeps it in
  /// its symmetry witnesses and clears this field.
  std::vector<std::vector<int>> action;

  int arity() const { return static_cast<int>(exps.size()); }
  bool multilinear() const;
  bool constant() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

struct PolyMultiFun {
  int arity = 1;
  std::vector<Monomial> terms;

  friend bool operator==(const PolyMultiFun&, const PolyMultiFun&) = default;
};

/// Image of a term under a permutation of the variables, with the induced
/// bijection of coefficient labels.
struct TermImage {
  int term = 0;
  std::vector<int> labels;

  friend bool operator==(const TermImage&, const TermImage&) = default;
};

/// Symmetry witnesses of one level: gens[i][t] is the image of term t under
/// the adjacent transposition s_i.
using LevelSymmetry = std::vector<std::vector<TermImage>>;

class PolyFunSeq {
 public:
  PolyFunSeq() = default;
  /// Derives symmetry witnesses by matching each term with its permuted
  /// copy (r-th equal term to r-th equal term). Throws if a level is not
  /// symmetric.
  explicit PolyFunSeq(std::vector<PolyMultiFun> levels);
  /// Explicit witnesses; validated against the exponents and the Coxeter
  /// relations.
  PolyFunSeq(std::vector<PolyMultiFun> levels, std::vector<LevelSymmetry> symmetry);

  int max_level() const { return static_cast<int>(levels_.size()); }
  const PolyMultiFun& level(int n) const;
  const std::vector<PolyMultiFun>& levels() const { return levels_; }
  const LevelSymmetry& symmetry(int n) const { return symmetry_[static_cast<std::size_t>(n - 1)]; }

  /// σ applied to term t of level n.
  TermImage act(int n, const Permutation& sigma, int term) const;

  /// Every term has every exponent >= 1 ("pointed in each variable").
  bool multipointed() const;
  /// No term has all exponents zero.
  bool no_constant_terms() const;

  friend bool operator==(const PolyFunSeq&, const PolyFunSeq&) = default;

 private:
  void validate() const;

  std::vector<PolyMultiFun> levels_;
  std::vector<LevelSymmetry> symmetry_;
};

/// A finite pointed set by its non-basepoint labels.
struct PointedSet {
  std::vector<std::string> labels;
  int size() const { return static_cast<int>(labels.size()); }
};

PointedSet evaluate(const PolyMultiFun& f, const std::vector<PointedSet>& inputs);

/// id at level 1, empty above.
PolyFunSeq unit_funseq(int max_level);

/// Which substitution produced a term of G∘F: a partition P of the
/// variables, a term of G_k, and for each slot i the chosen terms of
/// F_{|P_i|}, one per copy of that slot.
struct CompositeTerm {
  UnorderedPartition partition;
  int outer = 0;
  std::vector<std::vector<int>> inner;

  friend bool operator==(const CompositeTerm&, const CompositeTerm&) = default;
  friend auto operator<=>(const CompositeTerm&, const CompositeTerm&) = default;
};

struct FunComposite {
  PolyFunSeq seq;
  std::vector<std::vector<CompositeTerm>> terms;          ///< per level n-1
  std::vector<std::map<CompositeTerm, int>> lookup;       ///< per level n-1

  int index_of(int n, const CompositeTerm& t) const;
};

/// Levels 1..N of G∘F. Slot i of a G_k-term is filled by F on the variables
/// of block i of a partition P of [n]; the slot's block sizes in canonical
/// order form the ordered composition (j_1, ..., j_k).
FunComposite compose_funseq(const PolyFunSeq& g, const PolyFunSeq& f, int max_level);

/// Multilinear part at S⁰ as a symmetric sequence, with the (term, label)
/// behind every element.
struct Multilinear {
  SymSeq seq;
  std::vector<std::vector<std::pair<int, int>>> elements;    ///< per level n-1
  std::vector<std::map<std::pair<int, int>, Elem>> lookup;  ///< per level n-1

  Elem index_of(int n, int term, int label) const;
};

Multilinear multilinearize_at_S0(const PolyFunSeq& f);

struct ChainRuleLevel {
  int n = 0;
  long long lhs = 0;
  long long rhs = 0;
  long long oracle = 0;
};

struct ChainRuleReport {
  bool well_defined = true;
  bool injective = true;
  bool surjective = true;
  bool equivariant = true;
  bool multipointed = true;
  std::vector<ChainRuleLevel> levels;
  /// Summands (n, P) where some slot of F has no multilinear part.
  std::vector<std::pair<int, UnorderedPartition>> flagged;
  std::string witness;  ///< first failure, empty on success

  Composite lhs;
  FunComposite composite;
  Multilinear lhs_g, lhs_f, rhs;
  LevelMap mu;

  bool bijective_equivariant() const { return well_defined && injective && surjective && equivariant; }
};

ChainRuleReport chain_rule_compare(const PolyFunSeq& g, const PolyFunSeq& f, int max_level);

/// Regrouping ((G∘F)∘H)_n -> (G∘(F∘H))_n of term indices. Requires G to be
/// multilinear at every level; throws otherwise.
struct FunAssociator {
  FunComposite gf, gf_h, fh, g_fh;
  std::vector<std::vector<int>> forward;
};

FunAssociator funseq_associator(const PolyFunSeq& g, const PolyFunSeq& f, const PolyFunSeq& h, int max_level);

/// ∧_k: coefficient S⁰ and exponents (1, ..., 1) at every level.
PolyFunSeq smash_power_funseq(int max_level);
/// X ↦ O(k) ∧ X_1 ∧ ... ∧ X_k with O's Σ_k-actions. Throws if O fails
/// check_operad.
PolyFunSeq operad_funseq(const OperadData& op, int max_level);

struct BuiltinExample {
  std::string name;
  PolyFunSeq seq;
};
std::vector<BuiltinExample> builtin_examples(int max_level);

}  // namespace laxlin
