#pragma once

// Connectivity arithmetic for stable first-order excision: how E₁(c, κ)
// propagates under T₁, the connectivity of the stage maps
// T₁ⁱF → T₁ⁱ⁺¹F, and a finite-range check of Bökstedt's criterion
// (stage connectivities tending to infinity).

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace laxlin {

/// An integer or +∞.
struct Connectivity {
  bool infinite = false;
  long long value = 0;

  static Connectivity finite(long long v) { return {false, v}; }
  static Connectivity infinity() { return {true, 0}; }

  friend bool operator==(const Connectivity& a, const Connectivity& b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
  friend bool operator<(const Connectivity& a, const Connectivity& b) {
    if (a.infinite) return false;
    return b.infinite || a.value < b.value;
  }
  friend bool operator<=(const Connectivity& a, const Connectivity& b) { return !(b < a); }
};

std::string to_string(const Connectivity& c);

/// E₁(c, κ).
struct ExcisionHypothesis {
  long long c = 0;
  long long kappa = 0;

  friend bool operator==(const ExcisionHypothesis&, const ExcisionHypothesis&) = default;
};

/// E₁(c, κ) ↦ E₁(c - 1, κ - 1).
ExcisionHypothesis apply_T1(const ExcisionHypothesis& h);
/// apply_T1 iterated `times` times, one step at a time.
ExcisionHypothesis iterate_T1(const ExcisionHypothesis& h, int times);

/// Connectivity of t₁F: F → T₁F on (ℓ-1)-connected inputs: -c + 2ℓ when
/// ℓ ≥ κ, nullopt (no bound) otherwise.
std::optional<long long> t1_connectivity(const ExcisionHypothesis& h, long long ell);

class HypothesisNotApplicable : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

struct ConnectivityProfile {
  ExcisionHypothesis hypothesis;
  long long ell = 0;
  std::vector<Connectivity> stages;  ///< stages[i] bounds T₁ⁱF → T₁ⁱ⁺¹F
};

/// stages[i] = i - c + 2ℓ for 0 ≤ i ≤ N. Throws HypothesisNotApplicable
/// when ℓ < κ.
ConnectivityProfile iterate_profile(const ExcisionHypothesis& h, long long ell, int stages);

/// A bound n_{|x|} for a functor on 𝕀^q, tabulated by the norm |x| = Σ xᵢ.
struct MultiProfile {
  int q = 1;
  std::vector<Connectivity> bound;  ///< bound[|x|] for |x| = 0..R

  static MultiProfile tabulate(int q, int max_norm, const std::function<Connectivity(long long)>& n);
};

/// A reduced fraction num/den with den > 0.
struct Slope {
  long long num = 0;
  long long den = 1;

  friend bool operator==(const Slope&, const Slope&) = default;
};

std::string to_string(const Slope& s);

struct Verdict {
  bool satisfied = false;
  /// On success: an anchor j and slope a > 0 with v[i] ≥ v[j] + a(i - j)
  /// for all i ≥ j, v nondecreasing from j on. nullopt slope means the
  /// values are +∞ from the anchor on.
  std::size_t anchor = 0;
  std::optional<Slope> slope;
  /// On failure: the window [first, second] that breaks growth from the
  /// latest admissible anchor.
  std::pair<std::size_t, std::size_t> window{0, 0};
  std::string reason;
};

/// "criterion satisfied" iff some anchor j in the first half of the range
/// has v nondecreasing on [j, R] and v[i] > v[j] for every i > j; the
/// certified slope is the best such minimum secant. Otherwise "not
/// established". Needs at least two values.
Verdict bokstedt_verdict(const std::vector<Connectivity>& values);
Verdict bokstedt_verdict(const ConnectivityProfile& p);
Verdict bokstedt_verdict(const MultiProfile& p);

/// Stable 1-excision statements kept as written: constants may be
/// symbolic strings.
struct HypothesisRecord {
  std::string functor;
  std::string c;
  std::string kappa;
  std::string note;
};

/// The identity functor (symbolic constants, Blakers–Massey) and Hom(K, -)
/// for each requested dim K, with E₁(kn, -1) stored with k substituted.
std::vector<HypothesisRecord> example_hypotheses(const std::vector<int>& dims = {0, 1, 2});

}  // namespace laxlin
