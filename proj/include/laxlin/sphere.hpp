#pragma once

// The sphere operad 𝐒 in exact rational arithmetic: 𝐒_n is the open
// (n-1)-simplex plus a basepoint ∞. Also the smash-power operads 𝐒^U, the
// homeomorphism 𝐒_n ∧ S¹ ≅ Sⁿ onto the open cube, and stabilization of
// self-maps of 𝐒^U_m ∧ S^U.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "laxlin/combinat.hpp"

namespace laxlin {

using Rational = mpq_class;

std::string to_string(const Rational& q);
/// Parses "p/q" or "p"; throws std::invalid_argument on malformed input.
Rational parse_rational(const std::string& s);

/// A point of the open simplex: positive coordinates summing to 1.
class SimplexPoint {
 public:
  SimplexPoint() = default;
  /// Throws std::invalid_argument unless every coordinate is positive and
  /// the sum is exactly 1.
  explicit SimplexPoint(std::vector<Rational> coords);

  int arity() const { return static_cast<int>(coords_.size()); }
  const std::vector<Rational>& coords() const { return coords_; }
  const Rational& operator[](int i) const { return coords_[static_cast<std::size_t>(i)]; }

  static SimplexPoint unit() { return SimplexPoint({Rational(1)}); }
  static SimplexPoint barycenter(int n);

  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;

 private:
  std::vector<Rational> coords_;
};

/// nullopt is the basepoint ∞.
using SpherePoint = std::optional<SimplexPoint>;

std::string to_string(const SimplexPoint& p);
std::string to_string(const SpherePoint& p);

/// γ(s; t¹, ..., t^k) = (s_i · t^i_ℓ) in block order.
SimplexPoint gamma(const SimplexPoint& s, const std::vector<SimplexPoint>& ts);
SpherePoint gamma(const SpherePoint& s, const std::vector<SpherePoint>& ts);

struct GammaPreimage {
  SimplexPoint outer;
  std::vector<SimplexPoint> inner;
};

/// The exact inverse of γ along the block sizes `blocks`.
GammaPreimage gamma_inv(const SimplexPoint& u, const std::vector<int>& blocks);

/// Coordinate i moves to position σ(i).
SimplexPoint permute(const Permutation& sigma, const SimplexPoint& p);
SpherePoint permute(const Permutation& sigma, const SpherePoint& p);

/// A point of 𝐒^U_n: one simplex point per element of U, all of arity n;
/// nullopt is the basepoint.
using SmashSpherePoint = std::optional<std::vector<SimplexPoint>>;

/// Factorwise γ after regrouping the smash factors by u.
SmashSpherePoint smash_gamma(const SmashSpherePoint& s, const std::vector<SmashSpherePoint>& ts);
SmashSpherePoint permute(const Permutation& sigma, const SmashSpherePoint& p);

/// A point of Sⁿ = ((0,1)ⁿ)⁺; nullopt is ∞.
using CubePoint = std::optional<std::vector<Rational>>;

/// 𝐒_n ∧ S¹ → Sⁿ: y = x·s lies in the corner simplex {y > 0, Σy < 1},
/// which is mapped radially onto the open cube, centre to centre, using the
/// polyhedral gauges of both regions. Σ_n-equivariant and exact.
CubePoint coend_adjoint(const SpherePoint& s, const std::optional<Rational>& x);

struct CoendPreimage {
  SimplexPoint s;
  Rational x;
};
/// Exact inverse of coend_adjoint on non-basepoint cube points.
CoendPreimage coend_inverse(const std::vector<Rational>& z);

// ---------------------------------------------------------------------------
// Stabilization

/// A point of X(U, m) = 𝐒^U_m ∧ S^U ≅ S^{⊔_m U}: for every u ∈ U a point of
/// 𝐒_m and a coordinate x_u ∈ (0,1).
struct SuspensionPoint {
  bool basepoint = false;
  std::vector<SimplexPoint> sphere;
  std::vector<Rational> x;

  static SuspensionPoint base() { return {true, {}, {}}; }
  friend bool operator==(const SuspensionPoint&, const SuspensionPoint&) = default;
};

std::string to_string(const SuspensionPoint& p);

/// The structure homeomorphism X(U, m) ≅ S^{⊔_m U} ⊂ ((0,1)^{m|U|})⁺, built
/// from coend_adjoint on each u (u-major coordinates).
CubePoint to_cube(const SuspensionPoint& p);
SuspensionPoint from_cube(const CubePoint& z, int units, int arity);

/// A map X(U, m) → X(U, m') given as a composition tree.
class MapDescriptor {
 public:
  struct Node;

  static MapDescriptor identity(int units, int arity);
  /// Permutes the elements of U (sphere factor and coordinate together).
  static MapDescriptor permute_units(const Permutation& rho, int arity);
  /// The diagonal Σ_m-action on every sphere factor.
  static MapDescriptor permute_slots(const Permutation& pi, int units);
  /// x_u ↦ 1 - x_u for the marked u.
  static MapDescriptor reflect(const std::vector<bool>& mask, int arity);
  /// Constant at the basepoint.
  static MapDescriptor constant(int units, int dom, int cod);
  /// f ∘ g.
  static MapDescriptor compose(const MapDescriptor& f, const MapDescriptor& g);
  /// For f: X(U,m) → X(U,m) and blocks (j_1, ..., j_m): the self-map of
  /// X(U, Σj) that splits each sphere factor as γ(t; q_1, ..., q_m), applies f
  /// to (t, x), moves the q's along f's permutation part, and recomposes.
  static MapDescriptor stabilize(const MapDescriptor& f, const std::vector<int>& blocks);
  /// Uniform blocks (j, ..., j).
  static MapDescriptor stabilize(const MapDescriptor& f, int j);
  /// X(U, m) → X(U, Σ arities): (t, x) ↦ (γ(t_u; s_{u,1}, ..., s_{u,m}), x).
  static MapDescriptor slice(const std::vector<std::vector<SimplexPoint>>& points);

  int units() const;
  int dom() const;
  int cod() const;
  bool endomorphism() const { return dom() == cod(); }

  SuspensionPoint operator()(const SuspensionPoint& p) const;

  /// The permutation of slots and of U realised by an endomorphism.
  std::pair<Permutation, Permutation> permutation_part() const;

  std::string describe() const;

 private:
  explicit MapDescriptor(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// stabilize(f, j) restricted to the slice through s ∈ 𝐒^U_j:
/// stabilize(f, j) ∘ slice(s, ..., s).
MapDescriptor stabilize_at(const MapDescriptor& f, int j, const std::vector<SimplexPoint>& s);

// ---------------------------------------------------------------------------
// Sampling and law checks

using SphereRng = std::mt19937_64;

/// Weights drawn uniformly from [1, 12], normalised.
SimplexPoint random_simplex(int n, SphereRng& rng);
Rational random_unit_interval(SphereRng& rng);
SuspensionPoint random_suspension(int units, int arity, SphereRng& rng);
/// Every simplex point whose coordinates share a denominator d ≤ max_den.
std::vector<SimplexPoint> simplex_grid(int n, int max_den);
/// k/d for 0 < k < d ≤ max_den, without repeats.
std::vector<Rational> interval_grid(int max_den);

struct LawReport {
  std::string law;
  long long checked = 0;
  long long failures = 0;
  std::string witness;  ///< first failure
  bool pass() const { return failures == 0 && checked > 0; }
};

/// Associativity, equivariance, unit and inverse laws of γ on `samples`
/// random inputs plus the full grid with denominators ≤ grid_den for
/// Σ j_i ≤ max_total.
std::vector<LawReport> check_sphere_operad(long long samples, std::uint64_t seed, int grid_den, int max_total);

/// Round trip, equivariance, range and diagonal image of coend_adjoint for
/// n ≤ max_n, `samples` inputs per arity.
std::vector<LawReport> check_coend(long long samples, std::uint64_t seed, int max_n);

/// Associativity of stabilization (full and sliced), identity, the swap
/// structure example and functoriality on `samples` random points.
std::vector<LawReport> check_stabilization(long long samples, std::uint64_t seed);

/// f ∈ ΩS¹ stabilized along (2) then (2,1) against (3) in one step, at the
/// slice γ(a; b, c) with a = b = (1/2,1/2), c = (1) and on the grid.
std::vector<LawReport> reproduce_tower_example(int grid_den);

}  // namespace laxlin
