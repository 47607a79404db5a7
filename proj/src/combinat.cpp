#include "laxlin/combinat.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>

namespace laxlin {

Injection::Injection(int dom, int cod, std::vector<int> image)
    : dom_(dom), cod_(cod), image_(std::move(image)) {
  if (dom < 0 || cod < 0) throw std::invalid_argument("injection: negative object size");
  if (static_cast<int>(image_.size()) != dom)
    throw std::invalid_argument("injection: image length differs from domain size");
  std::vector<bool> hit(static_cast<std::size_t>(cod), false);
  for (int y : image_) {
    if (y < 0 || y >= cod) throw std::invalid_argument("injection: image entry out of range");
    if (hit[static_cast<std::size_t>(y)]) throw std::invalid_argument("injection: not injective");
    hit[static_cast<std::size_t>(y)] = true;
  }
}

Injection Injection::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 0);
  return Injection(n, n, std::move(img));
}

Injection compose(const Injection& f, const Injection& g) {
  if (f.cod() != g.dom()) {
    throw CompositionError("cannot compose [" + std::to_string(f.dom()) + "]->[" +
                           std::to_string(f.cod()) + "] with [" + std::to_string(g.dom()) +
                           "]->[" + std::to_string(g.cod()) + "]");
  }
  std::vector<int> img;
  img.reserve(f.image().size());
  for (int x : f.image()) img.push_back(g(x));
  return Injection(f.dom(), g.cod(), std::move(img));
}

std::vector<Injection> enumerate_injections(int m, int n) {
  std::vector<Injection> out;
  if (m < 0 || n < 0 || m > n) return out;
  std::vector<int> img(static_cast<std::size_t>(m), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  // Depth-first in lexicographic order.
  auto rec = [&](auto&& self, int pos) -> void {
    if (pos == m) {
      out.emplace_back(m, n, img);
      return;
    }
    for (int y = 0; y < n; ++y) {
      if (used[static_cast<std::size_t>(y)]) continue;
      used[static_cast<std::size_t>(y)] = true;
      img[static_cast<std::size_t>(pos)] = y;
      self(self, pos + 1);
      used[static_cast<std::size_t>(y)] = false;
    }
  };
  rec(rec, 0);
  return out;
}

Injection coproduct(const Injection& f, const Injection& g) {
  std::vector<int> img = f.image();
  img.reserve(img.size() + g.image().size());
  for (int y : g.image()) img.push_back(y + f.cod());
  return Injection(f.dom() + g.dom(), f.cod() + g.cod(), std::move(img));
}

Injection block_swap(int m, int n) {
  std::vector<int> img(static_cast<std::size_t>(m + n));
  for (int i = 0; i < m; ++i) img[static_cast<std::size_t>(i)] = i + n;
  for (int i = m; i < m + n; ++i) img[static_cast<std::size_t>(i)] = i - m;
  return Injection(m + n, m + n, std::move(img));
}

bool is_standard_inclusion(const Injection& f) {
  for (int i = 0; i < f.dom(); ++i)
    if (f(i) != i) return false;
  return true;
}

// ---------------------------------------------------------------------------

Permutation::Permutation(std::vector<int> mapping) : map_(std::move(mapping)) {
  // A bitmask suffices for the small sizes that dominate; fall back otherwise.
  if (map_.size() <= 64) {
    std::uint64_t hit = 0;
    for (int y : map_) {
      if (y < 0 || y >= size() || (hit >> y & 1U))
        throw std::invalid_argument("permutation: mapping is not a bijection");
      hit |= std::uint64_t{1} << y;
    }
    return;
  }
  std::vector<bool> hit(map_.size(), false);
  for (int y : map_) {
    if (y < 0 || y >= size() || hit[static_cast<std::size_t>(y)])
      throw std::invalid_argument("permutation: mapping is not a bijection");
    hit[static_cast<std::size_t>(y)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  return Permutation(std::move(m));
}

Permutation Permutation::adjacent(int n, int i) {
  if (i < 0 || i + 1 >= n) throw std::invalid_argument("adjacent transposition out of range");
  auto p = identity(n);
  std::swap(p.map_[static_cast<std::size_t>(i)], p.map_[static_cast<std::size_t>(i + 1)]);
  return p;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

Permutation Permutation::unrank(int n, std::size_t rank) {
  if (rank >= factorial(n)) throw std::invalid_argument("permutation rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> m;
  m.reserve(pool.size());
  for (int i = n; i >= 1; --i) {
    const std::size_t block = factorial(i - 1);
    const std::size_t idx = rank / block;
    rank %= block;
    m.push_back(pool[idx]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx));
  }
  return Permutation(std::move(m));
}

std::size_t Permutation::rank() const {
  std::size_t r = 0;
  const int n = size();
  for (int i = 0; i < n; ++i) {
    std::size_t smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (map_[static_cast<std::size_t>(j)] < map_[static_cast<std::size_t>(i)]) ++smaller;
    r += smaller * factorial(n - 1 - i);
  }
  return r;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[static_cast<std::size_t>(map_[i])] = static_cast<int>(i);
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < map_.size(); ++i)
    if (map_[i] != static_cast<int>(i)) return false;
  return true;
}

std::vector<int> Permutation::adjacent_word() const {
  // Bubble-sort the one-line notation; each position swap is a right
  // multiplication by s_i, so the recorded swaps reversed spell the word.
  std::vector<int> a = map_;
  std::vector<int> swaps;
  for (std::size_t pass = 0; pass < a.size(); ++pass) {
    bool changed = false;
    for (std::size_t i = 0; i + 1 < a.size(); ++i) {
      if (a[i] > a[i + 1]) {
        std::swap(a[i], a[i + 1]);
        swaps.push_back(static_cast<int>(i));
        changed = true;
      }
    }
    if (!changed) break;
  }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

Injection Permutation::as_injection() const { return Injection(size(), size(), map_); }

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw SizeMismatch("permutation product of different sizes");
  std::vector<int> m(q.map_.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = p(q.map_[i]);
  return Permutation(std::move(m));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<int> m(static_cast<std::size_t>(n));
  std::iota(m.begin(), m.end(), 0);
  do {
    out.emplace_back(m);
  } while (std::next_permutation(m.begin(), m.end()));
  return out;
}

Permutation block_sum(const std::vector<Permutation>& parts) {
  std::vector<int> m;
  int offset = 0;
  for (const auto& p : parts) {
    for (int x : p.mapping()) m.push_back(x + offset);
    offset += p.size();
  }
  return Permutation(std::move(m));
}

Permutation block_permutation(const Permutation& tau, const std::vector<int>& sizes) {
  const int k = tau.size();
  if (static_cast<int>(sizes.size()) != k) throw SizeMismatch("block_permutation: sizes/tau mismatch");
  const auto inv = tau.inverse();
  std::vector<int> old_off(static_cast<std::size_t>(k), 0), new_off(static_cast<std::size_t>(k), 0);
  for (int i = 1; i < k; ++i) old_off[static_cast<std::size_t>(i)] = old_off[static_cast<std::size_t>(i - 1)] + sizes[static_cast<std::size_t>(i - 1)];
  for (int p = 1; p < k; ++p)
    new_off[static_cast<std::size_t>(p)] = new_off[static_cast<std::size_t>(p - 1)] + sizes[static_cast<std::size_t>(inv(p - 1))];
  const int total = std::accumulate(sizes.begin(), sizes.end(), 0);
  std::vector<int> m(static_cast<std::size_t>(total));
  for (int i = 0; i < k; ++i)
    for (int l = 0; l < sizes[static_cast<std::size_t>(i)]; ++l)
      m[static_cast<std::size_t>(old_off[static_cast<std::size_t>(i)] + l)] = new_off[static_cast<std::size_t>(tau(i))] + l;
  return Permutation(std::move(m));
}

// ---------------------------------------------------------------------------

UnorderedPartition::UnorderedPartition(int ground, std::vector<std::vector<int>> blocks)
    : ground_(ground), blocks_(std::move(blocks)) {
  if (ground < 0) throw std::invalid_argument("partition: negative ground set");
  std::vector<bool> seen(ground > 64 ? static_cast<std::size_t>(ground) : 0, false);
  std::uint64_t seen_bits = 0;
  int covered = 0;
  for (auto& b : blocks_) {
    if (b.empty()) throw std::invalid_argument("partition: empty block");
    std::sort(b.begin(), b.end());
    for (int x : b) {
      if (x < 0 || x >= ground) throw std::invalid_argument("partition: element out of range");
      const bool dup = ground > 64 ? static_cast<bool>(seen[static_cast<std::size_t>(x)]) : (seen_bits >> x & 1U) != 0;
      if (dup) throw std::invalid_argument("partition: blocks overlap");
      if (ground > 64) seen[static_cast<std::size_t>(x)] = true;
      else seen_bits |= std::uint64_t{1} << x;
      ++covered;
    }
  }
  if (covered != ground) throw std::invalid_argument("partition: blocks do not cover the ground set");
  std::sort(blocks_.begin(), blocks_.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
}

std::vector<int> UnorderedPartition::block_sizes() const {
  std::vector<int> s;
  s.reserve(blocks_.size());
  for (const auto& b : blocks_) s.push_back(static_cast<int>(b.size()));
  return s;
}

int UnorderedPartition::block_of(int x) const {
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (std::binary_search(blocks_[i].begin(), blocks_[i].end(), x)) return static_cast<int>(i);
  throw std::out_of_range("partition: element not in ground set");
}

std::vector<UnorderedPartition> enumerate_partitions(int n, std::optional<int> k) {
  std::vector<UnorderedPartition> out;
  if (n < 1) throw std::invalid_argument("enumerate_partitions: n must be positive");
  if (k && (*k < 1 || *k > n)) throw std::invalid_argument("enumerate_partitions: k out of range");
  // Restricted growth strings: rgs[0] = 0, rgs[i] <= 1 + max(rgs[0..i-1]).
  std::vector<int> rgs(static_cast<std::size_t>(n), 0);
  auto emit = [&](int nblocks) {
    std::vector<std::vector<int>> blocks(static_cast<std::size_t>(nblocks));
    for (int i = 0; i < n; ++i) blocks[static_cast<std::size_t>(rgs[static_cast<std::size_t>(i)])].push_back(i);
    out.emplace_back(n, std::move(blocks));
  };
  auto rec = [&](auto&& self, int pos, int nblocks) -> void {
    if (k && nblocks + (n - pos) < *k) return;
    if (pos == n) {
      if (!k || nblocks == *k) emit(nblocks);
      return;
    }
    const int limit = k ? std::min(nblocks, *k - 1) : nblocks;
    for (int b = 0; b <= limit; ++b) {
      rgs[static_cast<std::size_t>(pos)] = b;
      self(self, pos + 1, std::max(nblocks, b + 1));
    }
  };
  rec(rec, 1, 1);
  return out;
}

std::vector<OrderedComposition> enumerate_compositions(int n, int k) {
  std::vector<OrderedComposition> out;
  if (k < 1 || n < 1 || k > n) return out;
  std::vector<int> parts(static_cast<std::size_t>(k), 1);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (pos == k - 1) {
      parts[static_cast<std::size_t>(pos)] = remaining;
      out.push_back({n, parts});
      return;
    }
    for (int v = 1; v <= remaining - (k - 1 - pos); ++v) {
      parts[static_cast<std::size_t>(pos)] = v;
      self(self, pos + 1, remaining - v);
    }
  };
  rec(rec, 0, n);
  return out;
}

BlockData induced_block_data(const Permutation& sigma, const UnorderedPartition& p) {
  if (sigma.size() != p.ground()) throw SizeMismatch("induced_block_data: permutation size differs from partition ground set");
  const int k = p.num_blocks();
  // σ(P_i) sorted; the canonical order of σP is by smallest element.
  std::vector<std::vector<int>> moved(static_cast<std::size_t>(k));
  std::vector<Permutation> rho;
  rho.reserve(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) {
    const auto& b = p.block(i);
    auto& img = moved[static_cast<std::size_t>(i)];
    img.reserve(b.size());
    for (int x : b) img.push_back(sigma(x));
    // rho[i](l) is the rank of σ(b[l]) within σ(P_i).
    std::vector<int> r(b.size());
    for (std::size_t l = 0; l < b.size(); ++l) {
      int rank = 0;
      for (int y : img)
        if (y < img[l]) ++rank;
      r[l] = rank;
    }
    rho.emplace_back(std::move(r));
    std::sort(img.begin(), img.end());
  }
  // Block i lands after every block with a smaller least element.
  std::vector<int> tau(static_cast<std::size_t>(k), 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (moved[static_cast<std::size_t>(j)].front() < moved[static_cast<std::size_t>(i)].front())
        ++tau[static_cast<std::size_t>(i)];
  std::vector<std::vector<int>> blocks(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i)
    blocks[static_cast<std::size_t>(tau[static_cast<std::size_t>(i)])] = std::move(moved[static_cast<std::size_t>(i)]);
  return {UnorderedPartition(p.ground(), std::move(blocks)), Permutation(std::move(tau)), std::move(rho)};
}

UnorderedPartition consecutive_partition(const std::vector<int>& sizes) {
  std::vector<std::vector<int>> blocks;
  int next = 0;
  for (int s : sizes) {
    std::vector<int> b(static_cast<std::size_t>(s));
    std::iota(b.begin(), b.end(), next);
    next += s;
    blocks.push_back(std::move(b));
  }
  return UnorderedPartition(next, std::move(blocks));
}

std::string to_string(const Injection& f) {
  std::ostringstream os;
  os << "[" << f.dom() << "]->[" << f.cod() << "](";
  for (int i = 0; i < f.dom(); ++i) os << (i ? " " : "") << (f(i) + 1);
  os << ")";
  return os.str();
}

std::string to_string(const Permutation& p) {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < p.size(); ++i) os << (i ? " " : "") << (p(i) + 1);
  os << ")";
  return os.str();
}

std::string to_string(const UnorderedPartition& p) {
  std::string out = "{";
  for (int i = 0; i < p.num_blocks(); ++i) {
    out += i ? ",{" : "{";
    const auto& b = p.block(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (j) out += ',';
      out += std::to_string(b[j] + 1);
    }
    out += '}';
  }
  out += '}';
  return out;
}

}  // namespace laxlin
