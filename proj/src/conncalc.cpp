#include "laxlin/conncalc.hpp"

#include <numeric>

namespace laxlin {

std::string to_string(const Connectivity& c) { return c.infinite ? "inf" : std::to_string(c.value); }

ExcisionHypothesis apply_T1(const ExcisionHypothesis& h) { return {h.c - 1, h.kappa - 1}; }

ExcisionHypothesis iterate_T1(const ExcisionHypothesis& h, int times) {
  if (times < 0) throw std::invalid_argument("iterate_T1: negative count");
  ExcisionHypothesis out = h;
  for (int i = 0; i < times; ++i) out = apply_T1(out);
  return out;
}

std::optional<long long> t1_connectivity(const ExcisionHypothesis& h, long long ell) {
  if (ell < h.kappa) return std::nullopt;
  return -h.c + 2 * ell;
}

ConnectivityProfile iterate_profile(const ExcisionHypothesis& h, long long ell, int stages) {
  if (stages < 0) throw std::invalid_argument("iterate_profile: negative stage count");
  if (ell < h.kappa)
    throw HypothesisNotApplicable("iterate_profile: need ell >= kappa (ell = " + std::to_string(ell) +
                                  ", kappa = " + std::to_string(h.kappa) + ")");
  ConnectivityProfile p{h, ell, {}};
  // Stage i is t₁ applied to T₁ⁱF, which satisfies E₁(c - i, κ - i).
  for (int i = 0; i <= stages; ++i) p.stages.push_back(Connectivity::finite(*t1_connectivity(iterate_T1(h, i), ell)));
  return p;
}

MultiProfile MultiProfile::tabulate(int q, int max_norm, const std::function<Connectivity(long long)>& n) {
  if (q < 1 || max_norm < 0) throw std::invalid_argument("MultiProfile: need q >= 1 and max_norm >= 0");
  MultiProfile p{q, {}};
  for (long long x = 0; x <= max_norm; ++x) p.bound.push_back(n(x));
  return p;
}

std::string to_string(const Slope& s) { return s.den == 1 ? std::to_string(s.num) : std::to_string(s.num) + "/" + std::to_string(s.den); }

namespace {

Slope make_slope(long long num, long long den) {
  const long long g = std::gcd(num, den);
  return {num / g, den / g};
}

bool less(const Slope& a, const Slope& b) {
  return static_cast<__int128>(a.num) * b.den < static_cast<__int128>(b.num) * a.den;
}

// Minimum secant from anchor j, or nullopt for +∞; fails if growth breaks.
std::optional<std::optional<Slope>> certify(const std::vector<Connectivity>& v, std::size_t j) {
  std::optional<Slope> best;
  for (std::size_t i = j + 1; i < v.size(); ++i) {
    if (v[i] < v[i - 1] || v[i] <= v[j]) return std::nullopt;
    if (v[i].infinite) continue;
    const auto s = make_slope(v[i].value - v[j].value, static_cast<long long>(i - j));
    if (!best || less(s, *best)) best = s;
  }
  return best;
}

}  // namespace

Verdict bokstedt_verdict(const std::vector<Connectivity>& v) {
  Verdict out;
  if (v.size() < 2) {
    out.reason = "need at least two values";
    return out;
  }
  const std::size_t last = v.size() - 1;
  bool all_infinite = true;
  for (const auto& c : v) all_infinite = all_infinite && c.infinite;
  if (all_infinite) {
    out.satisfied = true;
    out.reason = "infinite throughout";
    return out;
  }
  for (std::size_t j = 0; j <= last / 2; ++j) {
    const auto cert = certify(v, j);
    if (!cert) continue;
    const bool better = !out.satisfied || (out.slope && (!*cert || less(*out.slope, **cert)));
    if (better) {
      out.satisfied = true;
      out.anchor = j;
      out.slope = *cert;
    }
  }
  if (out.satisfied) {
    out.reason = out.slope ? "grows at least linearly with slope " + to_string(*out.slope) : "infinite from the anchor on";
    return out;
  }
  const std::size_t j = last / 2;
  for (std::size_t i = j + 1; i <= last; ++i) {
    if (v[i] < v[i - 1]) {
      out.window = {i - 1, i};
      out.reason = "decreases";
      return out;
    }
    if (v[i] <= v[j]) {
      out.window = {j, i};
      out.reason = "does not grow";
      return out;
    }
  }
  out.window = {j, last};
  out.reason = "does not grow";
  return out;
}

Verdict bokstedt_verdict(const ConnectivityProfile& p) { return bokstedt_verdict(p.stages); }

Verdict bokstedt_verdict(const MultiProfile& p) { return bokstedt_verdict(p.bound); }

std::vector<HypothesisRecord> example_hypotheses(const std::vector<int>& dims) {
  std::vector<HypothesisRecord> out{{"identity", "c", "kappa", "stably 1-excisive (Blakers-Massey); constants symbolic"}};
  for (int k : dims) {
    if (k < 0) throw std::invalid_argument("example_hypotheses: dim K must be nonnegative");
    out.push_back({"Hom(K,-), dim K = " + std::to_string(k), std::to_string(k) + "n", "-1",
                   "stably 1-excisive; E1(kn, -1) with k = dim K, n kept symbolic"});
  }
  return out;
}

}  // namespace laxlin
