#pragma once

#include <functional>
#include <string>
#include <vector>

#include "simcores/count.hpp"

namespace simcores {

// Motzkin path as its step string over 'U', 'D', 'F'.
struct MotzkinPath {
  std::string steps;

  friend bool operator==(const MotzkinPath&, const MotzkinPath&) = default;
};

// Prefix condition #U >= #D and endpoint #U == #D, checked directly.
bool is_valid_motzkin(const MotzkinPath& p);

// Lexicographic step order D < F < U.
void enumerate_motzkin(int n,
                       const std::function<void(const MotzkinPath&)>& visit);

// Sum over i of C(n, 2i) * Catalan(i), exact.
Count motzkin_number(int n);

bool is_symmetric_motzkin(const MotzkinPath& p);

// Sum over i of C(floor(n/2), i) * C(i, floor(i/2)), exact.
Count symmetric_motzkin_count(int n);

// S_{2n} = M_n + sum_{k=0}^{n-1} S_{2n-2k-2} M_k, evaluated for the even
// length given. Throws on odd lengths.
Count symmetric_motzkin_by_recurrence(int n);

// Generalized Dyck path from (0,0) to (s,s) over steps N_k = (0,k),
// E_k = (k,0) and D_i = (i,i), staying weakly above the diagonal.
// Steps are coded as ints: 1..k-1 = D_i, k = E_k, k+1 = N_k, so numeric
// order is the enumeration order D_1 < ... < D_{k-1} < E_k < N_k.
struct GenDyckPath {
  int s = 0;
  int k = 1;
  std::vector<int> steps;

  friend bool operator==(const GenDyckPath&, const GenDyckPath&) = default;
};

std::string to_string(const GenDyckPath& p);  // e.g. "N E D1"

bool is_valid_gen_dyck(const GenDyckPath& p);

void enumerate_gen_dyck(int s, int k,
                        const std::function<void(const GenDyckPath&)>& visit);

bool is_symmetric_gen_dyck(const GenDyckPath& p);

// Filtered-enumeration count of symmetric (s,k)-generalized Dyck paths.
Count symmetric_gen_dyck_count(int s, int k);

// The k = 2 step correspondence N_2 <-> U, D_1 <-> F, E_2 <-> D.
MotzkinPath motzkin_from_gen_dyck(const GenDyckPath& p);
GenDyckPath gen_dyck_from_motzkin(const MotzkinPath& p);

// Parsers for the serialized forms ("UDFF" / "N E D1"); JSON array input
// is handled by the io layer.
MotzkinPath parse_motzkin(const std::string& s);
GenDyckPath parse_gen_dyck(const std::string& s, int k);

}  // namespace simcores
