#include "simcores/gap_poset.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simcores {

namespace {

constexpr size_t kSieveLimit = 1u << 26;

std::vector<int> normalized_generators(const std::vector<int>& generators) {
  if (generators.empty())
    throw std::invalid_argument("empty generator set");
  std::vector<int> s(generators);
  for (int g : s)
    if (g < 1) throw std::invalid_argument("generators must be positive");
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

int gcd_of(const std::vector<int>& s) {
  int g = 0;
  for (int v : s) g = std::gcd(g, v);
  return g;
}

// Sieve of "generated" flags, stopping once min(S) consecutive generated
// values appear (every larger value is then generated by adding min(S)).
std::vector<char> sieve_generated(const std::vector<int>& gens) {
  const int step = gens.front();
  std::vector<char> table;
  table.push_back(1);  // 0 = empty combination
  int run = 0;
  while (run < step) {
    const int n = static_cast<int>(table.size());
    if (table.size() > kSieveLimit)
      throw std::runtime_error("gap table exceeds limit");
    char hit = 0;
    for (int g : gens) {
      if (g <= n && table[static_cast<size_t>(n - g)]) {
        hit = 1;
        break;
      }
    }
    table.push_back(hit);
    run = hit ? run + 1 : 0;
  }
  return table;
}

}  // namespace

bool is_generated(long long n, const std::vector<int>& generators) {
  auto gens = normalized_generators(generators);
  if (n < 0) return false;
  if (n == 0) return true;
  std::vector<char> table(static_cast<size_t>(n) + 1, 0);
  table[0] = 1;
  for (long long v = 1; v <= n; ++v) {
    for (int g : gens) {
      if (g <= v && table[static_cast<size_t>(v - g)]) {
        table[static_cast<size_t>(v)] = 1;
        break;
      }
    }
  }
  return table[static_cast<size_t>(n)];
}

std::vector<int> semigroup_gaps(const std::vector<int>& generators) {
  auto gens = normalized_generators(generators);
  if (gcd_of(gens) != 1) throw std::invalid_argument("infinite gap set");
  auto table = sieve_generated(gens);
  std::vector<int> gaps;
  for (size_t n = 1; n < table.size(); ++n)
    if (!table[n]) gaps.push_back(static_cast<int>(n));
  return gaps;
}

GapPoset build_poset(const std::vector<int>& generators) {
  auto gens = normalized_generators(generators);
  if (gcd_of(gens) != 1) throw std::invalid_argument("infinite gap set");
  GapPoset p;
  p.generators = gens;
  p.generated = sieve_generated(gens);
  for (size_t n = 1; n < p.generated.size(); ++n)
    if (!p.generated[n]) p.ground.push_back(static_cast<int>(n));
  for (int a : p.ground) {
    for (int g : gens) {
      const int b = a - g;
      if (b >= 1 && p.is_gap(b)) p.cover_edges.emplace_back(a, b);
    }
  }
  std::sort(p.cover_edges.begin(), p.cover_edges.end());
  return p;
}

namespace {

struct IdealDfs {
  const std::vector<int>& ground;
  // Indices of the strict predecessors of each element (all numerically
  // smaller, so always decided first).
  std::vector<std::vector<int>> preds;
  std::vector<char> chosen;
  std::vector<int> current;
  const std::function<void(const std::vector<int>&)>& visit;

  void run(size_t idx) {
    if (idx == ground.size()) {
      visit(current);
      return;
    }
    bool can_include = true;
    for (int j : preds[idx]) {
      if (!chosen[static_cast<size_t>(j)]) {
        can_include = false;
        break;
      }
    }
    if (can_include) {
      chosen[idx] = 1;
      current.push_back(ground[idx]);
      run(idx + 1);
      current.pop_back();
      chosen[idx] = 0;
    }
    run(idx + 1);
  }
};

}  // namespace

void lower_ideals(const GapPoset& poset,
                  const std::function<void(const std::vector<int>&)>& visit) {
  const size_t n = poset.ground.size();
  std::vector<std::vector<int>> preds(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      if (poset.below(poset.ground[j], poset.ground[i]))
        preds[i].push_back(static_cast<int>(j));
  IdealDfs dfs{poset.ground, std::move(preds), std::vector<char>(n, 0), {}, visit};
  dfs.run(0);
}

Count count_lower_ideals(const GapPoset& poset) {
  Count total = 0;
  lower_ideals(poset, [&](const std::vector<int>&) { ++total; });
  return total;
}

void cores_from_ideals(const std::vector<int>& generators,
                       const std::function<void(const Partition&)>& visit) {
  GapPoset poset = build_poset(generators);
  lower_ideals(poset, [&](const std::vector<int>& ideal) {
    visit(partition_from_first_column_hooks(ideal));
  });
}

}  // namespace simcores
