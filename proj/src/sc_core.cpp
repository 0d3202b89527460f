#include "simcores/sc_core.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace simcores {

bool TildePoset::in_ground(int h) const {
  return std::binary_search(ground.begin(), ground.end(), h);
}

bool TildePoset::pair_forbidden(int h1, int h2) const {
  const int sum = h1 + h2;
  return sum == 2 * s || sum == 2 * s + 2 || sum == 2 * s + 4;
}

std::vector<std::pair<int, int>> TildePoset::cover_edges() const {
  std::vector<std::pair<int, int>> edges;
  for (int b : ground) {
    for (int a : ground) {
      if (!below(a, b)) continue;
      bool covered = true;
      for (int c : ground) {
        if (below(a, c) && below(c, b)) {
          covered = false;
          break;
        }
      }
      if (covered) edges.emplace_back(b, a);  // b covers a
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

TildePoset build_tilde_poset(int s) {
  if (s < 1) throw std::invalid_argument("tilde parameter must be positive");
  TildePoset tp;
  tp.s = s;
  for (int g = 2 * s; g <= 2 * s + 4; ++g) tp.ambient_generators.push_back(g);
  GapPoset ambient = build_poset(tp.ambient_generators);
  tp.generated = ambient.generated;

  // Ground: odd gaps with none of s, s+1, s+2 weakly below. Keeping the
  // three parameters themselves out matches the highlighted elements of
  // the induced-subposet diagrams and condition (b) with h1 = h2.
  for (int h : ambient.ground) {
    if (h % 2 == 0) continue;
    bool excluded = false;
    for (int x = s; x <= s + 2; ++x) {
      if (h == x || (ambient.is_gap(x) && tp.is_generated_value(h - x) && h > x)) {
        excluded = true;
        break;
      }
    }
    if (!excluded) tp.ground.push_back(h);
  }

  for (size_t i = 0; i < tp.ground.size(); ++i)
    for (size_t j = i; j < tp.ground.size(); ++j)
      if (tp.pair_forbidden(tp.ground[i], tp.ground[j]))
        tp.forbidden.emplace_back(tp.ground[i], tp.ground[j]);
  return tp;
}

std::vector<std::pair<int, int>> forbidden_pairs(int s) {
  return build_tilde_poset(s).forbidden;
}

bool is_valid_md(const std::vector<int>& md, const TildePoset& tp) {
  for (int h : md)
    if (!tp.in_ground(h)) return false;
  std::set<int> members(md.begin(), md.end());
  if (members.size() != md.size()) return false;
  for (int h : md)
    for (int g : tp.ground)
      if (tp.below(g, h) && !members.count(g)) return false;
  for (int h1 : md)
    for (int h2 : md)
      if (h1 <= h2 && tp.pair_forbidden(h1, h2)) return false;
  return true;
}

bool is_valid_md(const std::vector<int>& md, int s) {
  return is_valid_md(md, build_tilde_poset(s));
}

bool fms_conditions(const std::vector<int>& md, int t) {
  if (t < 1) throw std::invalid_argument("invalid modulus");
  std::set<int> members(md.begin(), md.end());
  for (int h : md)
    if (h > 2 * t && !members.count(h - 2 * t)) return false;
  for (int h1 : md)
    for (int h2 : md)
      if ((h1 + h2) % (2 * t) == 0) return false;
  return true;
}

namespace {

struct ConstrainedDfs {
  const TildePoset& tp;
  std::vector<std::vector<int>> preds;  // predecessor indices
  std::vector<char> chosen;
  std::vector<int> current;             // ascending elements
  const std::function<void(const std::vector<int>&)>& visit;
  bool apply_forbidden = true;

  void run(size_t idx) {
    if (idx == tp.ground.size()) {
      visit(current);
      return;
    }
    const int h = tp.ground[idx];
    bool can_include = true;
    for (int j : preds[idx]) {
      if (!chosen[static_cast<size_t>(j)]) {
        can_include = false;
        break;
      }
    }
    if (can_include && apply_forbidden) {
      if (tp.pair_forbidden(h, h)) can_include = false;
      for (int c : current) {
        if (!can_include) break;
        if (tp.pair_forbidden(c, h)) can_include = false;
      }
    }
    if (can_include) {
      chosen[idx] = 1;
      current.push_back(h);
      run(idx + 1);
      current.pop_back();
      chosen[idx] = 0;
    }
    run(idx + 1);
  }
};

void run_ideal_dfs(const TildePoset& tp, bool apply_forbidden,
                   const std::function<void(const std::vector<int>&)>& visit) {
  const size_t n = tp.ground.size();
  std::vector<std::vector<int>> preds(n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < i; ++j)
      if (tp.below(tp.ground[j], tp.ground[i]))
        preds[i].push_back(static_cast<int>(j));
  ConstrainedDfs dfs{tp, std::move(preds), std::vector<char>(n, 0), {}, visit,
                     apply_forbidden};
  dfs.run(0);
}

}  // namespace

void enumerate_sc_cores(int s,
                        const std::function<void(const ScCoreWitness&)>& visit) {
  TildePoset tp = build_tilde_poset(s);
  run_ideal_dfs(tp, true, [&](const std::vector<int>& ideal) {
    ScCoreWitness w;
    w.md.assign(ideal.rbegin(), ideal.rend());
    w.partition = sc_partition_from_md(w.md);
    visit(w);
  });
}

Count count_sc_cores(int s) {
  if (s < 0) throw std::invalid_argument("core parameter must be nonnegative");
  if (s == 0) return 1;  // the empty partition
  TildePoset tp = build_tilde_poset(s);
  Count total = 0;
  run_ideal_dfs(tp, true, [&](const std::vector<int>&) { ++total; });
  return total;
}

void tilde_down_closed_subsets(
    const TildePoset& tp,
    const std::function<void(const std::vector<int>&)>& visit) {
  run_ideal_dfs(tp, false, visit);
}

std::vector<int> phi(const std::vector<int>& ideal, int two_s) {
  if (two_s % 2 != 0) throw std::invalid_argument("phi defined for even parameter");
  if (two_s < 4) throw std::invalid_argument("phi parameter must be at least 4");
  TildePoset tp = build_tilde_poset(two_s);
  const int marked = two_s - 1;
  if (!is_valid_md(ideal, tp) ||
      std::find(ideal.begin(), ideal.end(), marked) == ideal.end())
    throw std::invalid_argument("not in phi domain");

  // Rule ranges in terms of the even parameter p: delete for h in
  // [2p+5, 3p-1], add for h in [p+7, 2p-1]; membership is read from the
  // original ideal throughout.
  const int p = two_s;
  std::set<int> deletions, additions;
  for (int h : ideal) {
    if (h >= 2 * p + 5 && h <= 3 * p - 1) {
      deletions.insert(h - 2 * p - 4);
      deletions.insert(h - 2 * p - 2);
      deletions.insert(h - 2 * p);
    }
    if (h >= p + 7 && h <= 2 * p - 1) {
      additions.insert(2 * p - h);
      additions.insert(2 * p - h + 2);
      additions.insert(2 * p - h + 4);
    }
  }
  std::set<int> result(ideal.begin(), ideal.end());
  for (int d : deletions) result.erase(d);
  for (int a : additions) result.insert(a);
  result.erase(marked);
  return std::vector<int>(result.begin(), result.end());
}

void phi_domain(int two_s,
                const std::function<void(const std::vector<int>&)>& visit) {
  if (two_s % 2 != 0) throw std::invalid_argument("phi defined for even parameter");
  if (two_s < 4) throw std::invalid_argument("phi parameter must be at least 4");
  TildePoset tp = build_tilde_poset(two_s);
  const int marked = two_s - 1;
  run_ideal_dfs(tp, true, [&](const std::vector<int>& ideal) {
    if (std::binary_search(ideal.begin(), ideal.end(), marked)) visit(ideal);
  });
}

}  // namespace simcores
