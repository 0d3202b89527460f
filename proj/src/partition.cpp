#include "simcores/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace simcores {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("parts must be positive");
    if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
      throw std::invalid_argument("parts must be weakly decreasing");
  }
}

long long Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

Partition conjugate(const Partition& p) {
  const auto& parts = p.parts();
  if (parts.empty()) return Partition{};
  std::vector<int> conj(static_cast<size_t>(parts[0]));
  for (int j = 1; j <= parts[0]; ++j) {
    int count = 0;
    for (int part : parts) {
      if (part >= j) ++count;
      else break;
    }
    conj[static_cast<size_t>(j - 1)] = count;
  }
  return Partition(std::move(conj));
}

int hook_length(const Partition& p, int i, int j) {
  if (i < 1 || j < 1 || i > p.rows() || j > p.part(i))
    throw std::invalid_argument("box not in diagram");
  int col_height = 0;
  for (int part : p.parts()) {
    if (part >= j) ++col_height;
    else break;
  }
  return p.part(i) + col_height - i - j + 1;
}

namespace {

// Hook scan shared by the core tests: conjugate computed once, every box
// visited until a hook divisible by some modulus shows up.
bool no_hook_divisible(const Partition& p, const std::vector<int>& ts) {
  const auto& parts = p.parts();
  if (parts.empty()) return true;
  std::vector<int> conj(static_cast<size_t>(parts[0]), 0);
  for (int part : parts)
    for (int j = 0; j < part; ++j) ++conj[static_cast<size_t>(j)];
  for (size_t i = 0; i < parts.size(); ++i) {
    for (int j = 1; j <= parts[i]; ++j) {
      int hook = parts[i] + conj[static_cast<size_t>(j - 1)] -
                 static_cast<int>(i) - j;
      for (int t : ts)
        if (hook % t == 0) return false;
    }
  }
  return true;
}

}  // namespace

bool is_t_core(const Partition& p, int t) {
  if (t <= 0) throw std::invalid_argument("invalid modulus");
  return no_hook_divisible(p, {t});
}

bool is_simultaneous_core(const Partition& p, const std::vector<int>& ts) {
  if (ts.empty()) throw std::invalid_argument("empty modulus set");
  for (int t : ts)
    if (t <= 0) throw std::invalid_argument("invalid modulus");
  return no_hook_divisible(p, ts);
}

bool is_self_conjugate(const Partition& p) { return conjugate(p) == p; }

HookSet main_diagonal_hooks(const Partition& p) {
  HookSet h{HookKind::MainDiagonal, {}};
  for (int i = 1; i <= p.rows() && p.part(i) >= i; ++i)
    h.values.push_back(hook_length(p, i, i));
  return h;  // h(1,1) > h(2,2) > ..., already descending
}

Partition sc_partition_from_md(const std::vector<int>& md) {
  std::vector<int> sorted(md);
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] <= 0 || sorted[i] % 2 == 0)
      throw std::invalid_argument("invalid diagonal hook set");
    if (i + 1 < sorted.size() && sorted[i] == sorted[i + 1])
      throw std::invalid_argument("invalid diagonal hook set");
  }
  if (sorted.empty()) return Partition{};
  // Diagonal box i carries arm = leg = (h_i - 1) / 2.
  const int diag = static_cast<int>(sorted.size());
  std::vector<int> parts;
  for (int i = 1; i <= diag; ++i)
    parts.push_back(i + (sorted[static_cast<size_t>(i - 1)] - 1) / 2);
  const int total_rows = parts[0];
  for (int i = diag + 1; i <= total_rows; ++i) {
    int count = 0;
    for (int j = 0; j < diag; ++j)
      if (parts[static_cast<size_t>(j)] >= i) ++count;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

HookSet first_column_hooks(const Partition& p) {
  HookSet h{HookKind::FirstColumn, {}};
  const int rows = p.rows();
  for (int i = 1; i <= rows; ++i) h.values.push_back(p.part(i) + rows - i);
  return h;  // strictly decreasing
}

Partition partition_from_first_column_hooks(const std::vector<int>& hooks) {
  std::vector<int> sorted(hooks);
  std::sort(sorted.begin(), sorted.end(), std::greater<int>());
  for (size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] <= 0) throw std::invalid_argument("invalid hook set");
    if (i + 1 < sorted.size() && sorted[i] == sorted[i + 1])
      throw std::invalid_argument("invalid hook set");
  }
  const int rows = static_cast<int>(sorted.size());
  std::vector<int> parts;
  for (int i = 1; i <= rows; ++i)
    parts.push_back(sorted[static_cast<size_t>(i - 1)] - (rows - i));
  return Partition(std::move(parts));  // distinctness keeps parts >= 1
}

namespace {

void dfs_odd_subsets(long long cap, int next_odd, std::vector<int>& chosen,
                     const std::function<void(const std::vector<int>&)>& visit) {
  visit(chosen);
  for (long long o = next_odd; o <= cap; o += 2) {
    chosen.push_back(static_cast<int>(o));
    dfs_odd_subsets(cap - o, static_cast<int>(o) + 2, chosen, visit);
    chosen.pop_back();
  }
}

void for_each_md_subset(long long cap,
                        const std::function<void(const std::vector<int>&)>& visit) {
  if (cap < 0) return;
  std::vector<int> chosen;
  dfs_odd_subsets(cap, 1, chosen, visit);
}

}  // namespace

void enumerate_self_conjugate(long long cap,
                              const std::function<void(const Partition&)>& visit) {
  for_each_md_subset(cap, [&](const std::vector<int>& md) {
    visit(sc_partition_from_md(md));
  });
}

namespace {

void dfs_partitions(long long remaining, int max_part, std::vector<int>& parts,
                    const std::function<void(const Partition&)>& visit) {
  visit(Partition(parts));
  for (int part = std::min<long long>(max_part, remaining); part >= 1; --part) {
    parts.push_back(part);
    dfs_partitions(remaining - part, part, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

void enumerate_partitions_up_to(long long cap,
                                const std::function<void(const Partition&)>& visit) {
  if (cap < 0) return;
  std::vector<int> parts;
  dfs_partitions(cap, static_cast<int>(std::min<long long>(cap, 1 << 28)),
                 parts, visit);
}

Count brute_force_core_count(const std::vector<int>& ts, long long cap,
                             bool self_conjugate_only) {
  if (ts.empty()) throw std::invalid_argument("empty modulus set");
  Count total = 0;
  if (self_conjugate_only) {
    for_each_md_subset(cap, [&](const std::vector<int>& md) {
      if (is_simultaneous_core(sc_partition_from_md(md), ts)) ++total;
    });
  } else {
    enumerate_partitions_up_to(cap, [&](const Partition& p) {
      if (is_simultaneous_core(p, ts)) ++total;
    });
  }
  return total;
}

Count anderson_size_cap(int s, int t) {
  if (s < 1 || t < 1 || std::gcd(s, t) != 1)
    throw std::invalid_argument("cap undefined for non-coprime pair");
  Count num = (Count(s) * s - 1) * (Count(t) * t - 1);
  return num / 24;
}

}  // namespace simcores
