#pragma once

#include <string>
#include <utility>
#include <vector>

#include "simcores/count.hpp"

namespace simcores {

// Outcome of one mechanical verification. left and right hold the
// independently computed route values (decimal strings, or serialized
// lists); the claim passes iff they are equal element by element.
struct VerificationReport {
  std::string claim_id;
  std::vector<std::pair<std::string, long long>> parameters;
  std::vector<std::string> left;
  std::vector<std::string> right;
  bool passed = false;
  long long elapsed_ms = 0;
};

// Fixed registry of claim ids.
const std::vector<std::string>& claim_registry();

// (s,t)-core count: lower ideals of P_{{s,t}} vs C(s+t,s)/(s+t); the
// brute-force partition count is cross-checked when s + t <= 9.
// cap_override < 0 means "use anderson_size_cap".
VerificationReport verify_anderson(int s, int t, long long cap_override = -1);

// Self-conjugate (s,t)-core count vs C(floor(s/2)+floor(t/2), floor(s/2)).
VerificationReport verify_fms(int s, int t, long long cap_override = -1);

// (s,...,s+k)-cores: generalized Dyck paths vs lower ideals, with the
// brute-force partition count as a third route when s <= 7.
VerificationReport verify_al(int s, int k, long long cap_override = -1);

// k = 2 instance plus the Motzkin-number identity.
VerificationReport verify_motzkin_cor(int s);

// Three-way characterization of valid diagonal hook sets over every
// down-closed subset of the tilde ground set.
VerificationReport verify_sc_characterization(int s);

// Self-conjugate (2s,2s+1,2s+2)-core count equals the (2s+1,2s+2,2s+3) one.
VerificationReport verify_even_odd(int s);

// Domain size and injectivity of phi; at parameter 8 the thirteen
// published pairs are checked one by one.
VerificationReport verify_phi(int two_s);

// Filtered witness counts against a_{2k-2} * M_{s-k} and M_s.
VerificationReport verify_prop33a(int s, int k);
VerificationReport verify_prop33b(int s);

// Self-conjugate (s,s+1,s+2)-cores vs symmetric Motzkin paths, with the
// filtered path enumeration as a third route when s <= 10.
VerificationReport verify_main(int s);

// Self-conjugate (s,...,s+k)-cores vs symmetric generalized Dyck paths.
// Proven for k in {1,2}; informational beyond.
VerificationReport test_conjecture(int s, int k, long long cap_override = -1);

// Whether a conjecture report at this k participates in suite pass/fail.
bool conjecture_asserted(int k);

}  // namespace simcores
