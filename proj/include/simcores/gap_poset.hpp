#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "simcores/count.hpp"
#include "simcores/partition.hpp"

namespace simcores {

// Poset of numerical-semigroup gaps. The ground set is the finite set of
// positive integers not generated by S; a covers b iff a - b is a
// generator. The partial order is "b - a is a nonzero combination of S".
struct GapPoset {
  std::vector<int> generators;                  // sorted, deduplicated
  std::vector<int> ground;                      // gaps, ascending
  std::vector<std::pair<int, int>> cover_edges; // (a, b): a covers b

  // Membership table for "n is generated", 0..table limit.
  std::vector<char> generated;

  bool is_generated_value(long long n) const {
    return n >= 0 && n < static_cast<long long>(generated.size()) &&
           generated[static_cast<size_t>(n)];
  }
  bool is_gap(int n) const {
    return n >= 1 && n < static_cast<int>(generated.size()) &&
           !generated[static_cast<size_t>(n)];
  }
  // Strict order: a <_P b.
  bool below(int a, int b) const {
    return a != b && is_gap(a) && is_gap(b) && is_generated_value(b - a);
  }
};

bool is_generated(long long n, const std::vector<int>& generators);

// Gaps of the semigroup generated by S. Throws "infinite gap set" when
// gcd(S) != 1. Sieves upward and stops after min(S) consecutive
// generated values.
std::vector<int> semigroup_gaps(const std::vector<int>& generators);

GapPoset build_poset(const std::vector<int>& generators);

// Visits every lower ideal exactly once. Elements are considered in
// increasing numeric order, include-branch before exclude-branch; each
// ideal is reported as its ascending element list.
void lower_ideals(const GapPoset& poset,
                  const std::function<void(const std::vector<int>&)>& visit);

Count count_lower_ideals(const GapPoset& poset);

// Anderson's bijection: maps each lower ideal of P_S through
// partition_from_first_column_hooks, yielding each S-core exactly once.
void cores_from_ideals(const std::vector<int>& generators,
                       const std::function<void(const Partition&)>& visit);

}  // namespace simcores
