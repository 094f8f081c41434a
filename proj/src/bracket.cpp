// Kauffman bracket of the closed 3-braid (s1 s2^-1)^n.
//
// Strand positions 0,1,2 at levels 0..2n-1; level 2n is level 0 (closure).
// Crossing c sits between level c and c+1. Even c is s1 on positions (0,1),
// odd c is s2^-1 on positions (1,2).

#include <cstdint>
#include <map>
#include <numeric>
#include <thread>
#include <vector>

#include "weavekit/errors.hpp"
#include "weavekit/invariants.hpp"

namespace weavekit {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      int& p = parent[static_cast<std::size_t>(x)];
      p = parent[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

// counts[(a_count - b_count, loops)]
using Tally = std::map<std::pair<int, int>, std::uint64_t>;

void tally_range(long n, std::uint64_t begin, std::uint64_t end, Tally& out) {
  const int levels = static_cast<int>(2 * n);
  const int nodes = 3 * levels;
  auto node = [levels](int level, int pos) { return (level % levels) * 3 + pos; };
  for (std::uint64_t state = begin; state < end; ++state) {
    UnionFind uf(nodes);
    int a_count = 0;
    for (int c = 0; c < levels; ++c) {
      const bool bit_a = ((state >> c) & 1u) == 0;
      a_count += bit_a ? 1 : 0;
      const int lo = (c % 2 == 0) ? 0 : 1;
      const int other = (c % 2 == 0) ? 2 : 0;
      uf.unite(node(c, other), node(c + 1, other));
      // The A-smoothing of the positive s1 keeps strands vertical; for the
      // negative s2^-1 it is the cup-cap.
      const bool vertical = (c % 2 == 0) == bit_a;
      if (vertical) {
        uf.unite(node(c, lo), node(c + 1, lo));
        uf.unite(node(c, lo + 1), node(c + 1, lo + 1));
      } else {
        uf.unite(node(c, lo), node(c, lo + 1));
        uf.unite(node(c + 1, lo), node(c + 1, lo + 1));
      }
    }
    int loops = 0;
    for (int x = 0; x < nodes; ++x)
      if (uf.find(x) == x) ++loops;
    ++out[{2 * a_count - levels, loops}];
  }
}

}  // namespace

LaurentPoly jones_bracket_oracle(long n, unsigned jobs) {
  if (n < 1 || n > 10) throw RangeError("jones_bracket_oracle: n must be in 1..10");
  const std::uint64_t total = std::uint64_t{1} << (2 * n);
  if (jobs == 0) jobs = 1;
  if (jobs > total) jobs = static_cast<unsigned>(total);
  std::vector<Tally> parts(jobs);
  std::vector<std::thread> pool;
  for (unsigned j = 0; j < jobs; ++j) {
    std::uint64_t b = total * j / jobs, e = total * (j + 1) / jobs;
    pool.emplace_back(tally_range, n, b, e, std::ref(parts[j]));
  }
  for (auto& t : pool) t.join();
  Tally merged;
  for (const auto& p : parts)
    for (const auto& [k, c] : p) merged[k] += c;

  // delta = -A^2 - A^-2; <D> = sum A^(a-b) delta^(loops-1)
  const LaurentPoly delta(-2, {-1, 0, 0, 0, -1});
  std::map<int, LaurentPoly> delta_pow;
  LaurentPoly bracket;
  for (const auto& [k, c] : merged) {
    auto [exp_a, loops] = k;
    auto it = delta_pow.find(loops - 1);
    if (it == delta_pow.end()) {
      LaurentPoly d(0, {1});
      for (int i = 0; i < loops - 1; ++i) d = d * delta;
      it = delta_pow.emplace(loops - 1, d).first;
    }
    bracket += shifted(it->second, exp_a) * BigInt(static_cast<unsigned long>(c));
  }
  // Writhe is zero, so V(t) = <D> at A = t^(-1/4).
  LaurentPoly in_t;
  try {
    in_t = deflate(bracket, 4);
  } catch (const RangeError&) {
    throw StateSumParityError("bracket exponents not all divisible by 4");
  }
  return substitute_power(in_t, -1);
}

}  // namespace weavekit
