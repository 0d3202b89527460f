#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "simcores/count.hpp"
#include "simcores/gap_poset.hpp"
#include "simcores/partition.hpp"

namespace simcores {

// Odd-element induced subposet of P_{{2s,...,2s+4}} whose lower ideals,
// constrained by the forbidden pairs, are exactly the main-diagonal hook
// sets of self-conjugate (s,s+1,s+2)-cores.
struct TildePoset {
  int s = 0;
  std::vector<int> ambient_generators;           // {2s,...,2s+4}
  std::vector<int> ground;                       // ascending odds
  std::vector<std::pair<int, int>> forbidden;    // h1 <= h2, h1+h2 in {2s,2s+2,2s+4}
  std::vector<char> generated;                   // ambient membership table

  bool is_generated_value(long long n) const {
    return n >= 0 && n < static_cast<long long>(generated.size()) &&
           generated[static_cast<size_t>(n)];
  }
  // Strict order inherited from the ambient poset.
  bool below(int a, int b) const {
    return a != b && is_generated_value(b - a);
  }
  bool in_ground(int h) const;
  bool pair_forbidden(int h1, int h2) const;

  // Hasse edges of the induced order on the ground set, (a, b) with a
  // covering b.
  std::vector<std::pair<int, int>> cover_edges() const;
};

TildePoset build_tilde_poset(int s);

std::vector<std::pair<int, int>> forbidden_pairs(int s);

// True iff md is contained in the ground set, down-closed under the
// tilde order, and contains no forbidden pair.
bool is_valid_md(const std::vector<int>& md, const TildePoset& tp);
bool is_valid_md(const std::vector<int>& md, int s);

// Ford-Mai-Sze conditions for a self-conjugate partition with diagonal
// hook set md to be a t-core:
//   (a) h in md, h > 2t  implies  h - 2t in md
//   (b) no h1, h2 in md (h1 = h2 allowed) with h1 + h2 = 0 mod 2t
bool fms_conditions(const std::vector<int>& md, int t);

struct ScCoreWitness {
  std::vector<int> md;        // descending, = ideal elements
  Partition partition;        // reconstructed self-conjugate core

  std::vector<int> ideal() const {  // ascending view
    return std::vector<int>(md.rbegin(), md.rend());
  }
};

// One witness per self-conjugate (s,s+1,s+2)-core, in the deterministic
// constrained-ideal DFS order (elements ascending, include-first).
void enumerate_sc_cores(int s,
                        const std::function<void(const ScCoreWitness&)>& visit);

// Number of self-conjugate (s,s+1,s+2)-cores; s = 0 counts the empty
// partition only.
Count count_sc_cores(int s);

// Rewrite map of the recurrence bijection. The parameter is the even
// core parameter; the input must be a valid constrained ideal of the
// tilde poset for that parameter containing parameter-1. Both rewrite
// rules are evaluated against the original input.
std::vector<int> phi(const std::vector<int>& ideal, int two_s);

// Valid constrained ideals containing two_s - 1, ascending elements.
void phi_domain(int two_s,
                const std::function<void(const std::vector<int>&)>& visit);

// Enumerates the down-closed subsets of the tilde order ignoring
// forbidden pairs (the characterization harness sweeps these).
void tilde_down_closed_subsets(
    const TildePoset& tp,
    const std::function<void(const std::vector<int>&)>& visit);

}  // namespace simcores
