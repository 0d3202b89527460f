#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "simcores/count.hpp"

namespace simcores {

// An integer partition in canonical form: parts weakly decreasing, all
// strictly positive. The empty partition is the default value.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int rows() const { return static_cast<int>(parts_.size()); }
  long long weight() const;
  bool empty() const { return parts_.empty(); }

  // 1-based row access.
  int part(int i) const { return parts_[static_cast<size_t>(i - 1)]; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
};

enum class HookKind { FirstColumn, MainDiagonal };

// A set of distinct hook lengths, stored in descending order.
struct HookSet {
  HookKind kind = HookKind::FirstColumn;
  std::vector<int> values;

  friend bool operator==(const HookSet&, const HookSet&) = default;
};

Partition conjugate(const Partition& p);

// Hook length of box (i, j), both 1-based. Throws if the box is outside
// the diagram.
int hook_length(const Partition& p, int i, int j);

bool is_t_core(const Partition& p, int t);
bool is_simultaneous_core(const Partition& p, const std::vector<int>& ts);
bool is_self_conjugate(const Partition& p);

HookSet main_diagonal_hooks(const Partition& p);

// Inverse of main_diagonal_hooks on self-conjugate partitions. The input
// must be a set of distinct odd positive integers.
Partition sc_partition_from_md(const std::vector<int>& md);

HookSet first_column_hooks(const Partition& p);

// Inverse of first_column_hooks. The input must be a set of distinct
// positive integers.
Partition partition_from_first_column_hooks(const std::vector<int>& hooks);

// Visits every self-conjugate partition of weight <= cap exactly once,
// generated as subsets of distinct odd diagonal hooks with sum <= cap
// (odds considered in increasing order, include-branch first).
void enumerate_self_conjugate(long long cap,
                              const std::function<void(const Partition&)>& visit);

// Visits every partition of weight <= cap exactly once (test oracle
// substrate; parts chosen greedily from the largest, so the order is
// deterministic).
void enumerate_partitions_up_to(long long cap,
                                const std::function<void(const Partition&)>& visit);

// Independent counting oracle: partitions of weight <= cap that are
// simultaneous ts-cores, optionally restricted to self-conjugate ones.
Count brute_force_core_count(const std::vector<int>& ts, long long cap,
                             bool self_conjugate_only);

// Largest possible size of an (s,t)-core for coprime s, t:
// (s^2-1)(t^2-1)/24. Caps every (s,...,s+k)-core family with k >= 1.
Count anderson_size_cap(int s, int t);

}  // namespace simcores
