#pragma once

// The skeletal category of finite sets [n] = {0, ..., n-1} and injections,
// its strict coproduct, symmetric groups, and partition enumeration.
//
// Indices are 0-based in memory. JSON encodings (see json_io.hpp) use the
// 1-based labels {1, ..., n}.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace laxlin {

class CompositionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SizeMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A morphism [dom] -> [cod] of the skeletal injection category.
class Injection {
 public:
  Injection() = default;
  /// Throws std::invalid_argument unless `image` is injective into [cod].
  Injection(int dom, int cod, std::vector<int> image);

  static Injection identity(int n);

  int dom() const { return dom_; }
  int cod() const { return cod_; }
  const std::vector<int>& image() const { return image_; }
  int operator()(int i) const { return image_[static_cast<std::size_t>(i)]; }

  bool is_bijection() const { return dom_ == cod_; }

  friend bool operator==(const Injection&, const Injection&) = default;
  friend auto operator<=>(const Injection&, const Injection&) = default;

 private:
  int dom_ = 0;
  int cod_ = 0;
  std::vector<int> image_;
};

/// g o f. Requires f.cod() == g.dom(), otherwise throws CompositionError.
Injection compose(const Injection& f, const Injection& g);

/// All injections [m] -> [n] in lexicographic order of their images.
std::vector<Injection> enumerate_injections(int m, int n);

/// f ⊔ g : [f.dom + g.dom] -> [f.cod + g.cod], g shifted past f.cod.
Injection coproduct(const Injection& f, const Injection& g);

/// The block swap [m+n] -> [m+n] sending the first m points after the last n.
Injection block_swap(int m, int n);

/// True iff f is a subset inclusion, i.e. a morphism of the subcategory ℕ.
bool is_standard_inclusion(const Injection& f);

/// An element of Σ_n. `p(i)` is the image of i; composition `p * q` applies q
/// first.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> mapping);

  static Permutation identity(int n);
  /// The adjacent transposition swapping i and i+1.
  static Permutation adjacent(int n, int i);
  /// Lexicographic rank and its inverse, 0 <= rank < n!.
  static Permutation unrank(int n, std::size_t rank);
  std::size_t rank() const;

  int size() const { return static_cast<int>(map_.size()); }
  const std::vector<int>& mapping() const { return map_; }
  int operator()(int i) const { return map_[static_cast<std::size_t>(i)]; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Word in adjacent transpositions whose product (leftmost applied last)
  /// equals this permutation: p = s_{w[0]} * s_{w[1]} * ... .
  std::vector<int> adjacent_word() const;

  Injection as_injection() const;

  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> map_;
};

/// All of Σ_n in lexicographic order (index == rank).
std::vector<Permutation> all_permutations(int n);

/// (τ_1 ⊔ ... ⊔ τ_k): permutes each consecutive block by its own τ_i.
Permutation block_sum(const std::vector<Permutation>& parts);

/// The permutation of [Σ sizes] moving consecutive block i (of length
/// sizes[i]) to block position tau(i), preserving order inside blocks.
Permutation block_permutation(const Permutation& tau, const std::vector<int>& sizes);

std::size_t factorial(int n);

/// A set partition of [n] with blocks sorted internally and ordered by
/// ascending least element.
class UnorderedPartition {
 public:
  UnorderedPartition() = default;
  /// Accepts blocks in any order; canonicalizes. Throws on overlap, gaps or
  /// empty blocks.
  UnorderedPartition(int ground, std::vector<std::vector<int>> blocks);

  int ground() const { return ground_; }
  int num_blocks() const { return static_cast<int>(blocks_.size()); }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<int>& block(int i) const { return blocks_[static_cast<std::size_t>(i)]; }
  std::vector<int> block_sizes() const;
  /// Index of the block containing x.
  int block_of(int x) const;

  friend bool operator==(const UnorderedPartition&, const UnorderedPartition&) = default;
  friend auto operator<=>(const UnorderedPartition&, const UnorderedPartition&) = default;

 private:
  int ground_ = 0;
  std::vector<std::vector<int>> blocks_;
};

/// Ordered k-tuple of positive integers with a fixed total.
struct OrderedComposition {
  int total = 0;
  std::vector<int> parts;

  friend bool operator==(const OrderedComposition&, const OrderedComposition&) = default;
  friend auto operator<=>(const OrderedComposition&, const OrderedComposition&) = default;
};

/// Partitions of [n] (into exactly k blocks when given), ordered by their
/// restricted growth strings.
std::vector<UnorderedPartition> enumerate_partitions(int n, std::optional<int> k = std::nullopt);

/// Ordered compositions of n into k positive parts, lexicographic.
std::vector<OrderedComposition> enumerate_compositions(int n, int k);

/// Bookkeeping for how σ moves the blocks of P.
struct BlockData {
  UnorderedPartition image;  ///< σP, canonical order
  Permutation tau;           ///< block i of P lands at position tau(i) of σP
  /// rho[i] ∈ Σ_{|P_i|}: order-preserving identifications of P_i and σ(P_i)
  /// conjugating σ restricted to P_i. Indexed by the block of P.
  std::vector<Permutation> rho;
};

BlockData induced_block_data(const Permutation& sigma, const UnorderedPartition& p);

/// The partition of [Σ parts] into consecutive blocks.
UnorderedPartition consecutive_partition(const std::vector<int>& sizes);

std::string to_string(const Injection& f);
std::string to_string(const Permutation& p);
std::string to_string(const UnorderedPartition& p);

}  // namespace laxlin
