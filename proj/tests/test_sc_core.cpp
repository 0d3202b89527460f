#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "simcores/partition.hpp"
#include "simcores/sc_core.hpp"

using namespace simcores;

namespace {

std::vector<ScCoreWitness> collect_witnesses(int s) {
  std::vector<ScCoreWitness> out;
  enumerate_sc_cores(s, [&](const ScCoreWitness& w) { out.push_back(w); });
  return out;
}

std::vector<std::vector<int>> collect_domain(int two_s) {
  std::vector<std::vector<int>> out;
  phi_domain(two_s, [&](const std::vector<int>& ideal) { out.push_back(ideal); });
  return out;
}

}  // namespace

TEST_CASE("tilde ground sets match the published diagrams") {
  CHECK(build_tilde_poset(8).ground ==
        std::vector<int>{1, 3, 5, 7, 11, 13, 15, 21, 23, 31});
  CHECK(build_tilde_poset(9).ground ==
        std::vector<int>{1, 3, 5, 7, 13, 15, 17, 23, 25, 35});
}

TEST_CASE("tilde ground sets at tiny parameters") {
  // The parameters s, s+1, s+2 themselves never qualify (each would give
  // a forbidden self-pair), so the smallest families have tiny grounds.
  CHECK(build_tilde_poset(1).ground.empty());
  CHECK(build_tilde_poset(2).ground == std::vector<int>{1});
  CHECK(build_tilde_poset(3).ground == std::vector<int>{1});
  CHECK(build_tilde_poset(4).ground == std::vector<int>{1, 3, 7});
}

TEST_CASE("ground elements are odd and avoid s, s+1, s+2 upward") {
  for (int s = 1; s <= 20; ++s) {
    TildePoset tp = build_tilde_poset(s);
    for (int h : tp.ground) {
      CHECK(h % 2 == 1);
      CHECK(h != s);
      CHECK(h != s + 1);
      CHECK(h != s + 2);
      for (int x = s; x <= s + 2; ++x) CHECK_FALSE(tp.below(x, h));
    }
  }
}

TEST_CASE("forbidden pairs for s = 8 match the dotted edges") {
  std::vector<std::pair<int, int>> expected = {
      {1, 15}, {3, 13}, {3, 15}, {5, 11}, {5, 13},
      {5, 15}, {7, 11}, {7, 13}};
  auto pairs = forbidden_pairs(8);
  std::sort(pairs.begin(), pairs.end());
  std::sort(expected.begin(), expected.end());
  CHECK(pairs == expected);
}

TEST_CASE("forbidden pairs for s = 9") {
  std::vector<std::pair<int, int>> expected = {
      {1, 17}, {3, 15}, {3, 17}, {5, 13}, {5, 15},
      {5, 17}, {7, 13}, {7, 15}};
  auto pairs = forbidden_pairs(9);
  std::sort(pairs.begin(), pairs.end());
  std::sort(expected.begin(), expected.end());
  CHECK(pairs == expected);
}

TEST_CASE("tilde cover edges match the modified diagrams") {
  std::vector<std::pair<int, int>> expected8 = {
      {21, 1}, {21, 3}, {21, 5}, {23, 3}, {23, 5},
      {23, 7}, {31, 11}, {31, 13}, {31, 15}};
  std::sort(expected8.begin(), expected8.end());
  CHECK(build_tilde_poset(8).cover_edges() == expected8);

  std::vector<std::pair<int, int>> expected9 = {
      {23, 1}, {23, 3}, {23, 5}, {25, 3}, {25, 5},
      {25, 7}, {35, 13}, {35, 15}, {35, 17}};
  std::sort(expected9.begin(), expected9.end());
  CHECK(build_tilde_poset(9).cover_edges() == expected9);
}

TEST_CASE("Q and R order components") {
  // Components split into Q (minimal elements below s) and R (minimal
  // elements strictly between s+2 and 2s).
  TildePoset tp = build_tilde_poset(8);
  auto in_component = [&](int x, const std::vector<int>& members) {
    return std::find(members.begin(), members.end(), x) != members.end();
  };
  std::vector<int> q = {1, 3, 5, 7, 21, 23};
  std::vector<int> r = {11, 13, 15, 31};
  for (int a : q)
    for (int b : r) {
      CHECK_FALSE(tp.below(a, b));
      CHECK_FALSE(tp.below(b, a));
    }
  // Every ground element lands in exactly one of the two lists.
  for (int h : tp.ground)
    CHECK((in_component(h, q) != in_component(h, r)));
}

TEST_CASE("is_valid_md examples") {
  CHECK(is_valid_md({11, 3, 1}, 8));
  CHECK(is_valid_md({}, 8));
  CHECK(is_valid_md({}, 3));
  CHECK(is_valid_md({7, 15}, 8));
  CHECK_FALSE(is_valid_md({13, 3}, 8));   // forbidden pair 3 + 13 = 16
  CHECK_FALSE(is_valid_md({21}, 8));      // not down-closed
  CHECK_FALSE(is_valid_md({9}, 8));       // not in the ground set
}

TEST_CASE("FMS conditions") {
  CHECK(fms_conditions({11, 3, 1}, 8));
  CHECK(fms_conditions({}, 5));
  CHECK_FALSE(fms_conditions({3, 13}, 8));  // 3 + 13 = 16
  CHECK_FALSE(fms_conditions({9}, 9));      // self-pair 9 + 9 = 18
  CHECK_FALSE(fms_conditions({19}, 8));     // 19 > 16 but 3 missing
  CHECK(fms_conditions({19, 3}, 8));
}

TEST_CASE("witness counts at small parameters") {
  CHECK(collect_witnesses(1).size() == 1);
  CHECK(collect_witnesses(2).size() == 2);
  CHECK(collect_witnesses(3).size() == 2);
  CHECK(collect_witnesses(4).size() == 5);
  CHECK(count_sc_cores(0) == 1);
  CHECK(count_sc_cores(8) == 35);
  CHECK(count_sc_cores(9) == 35);
}

TEST_CASE("s = 1 has exactly the empty witness") {
  auto witnesses = collect_witnesses(1);
  REQUIRE(witnesses.size() == 1);
  CHECK(witnesses[0].md.empty());
  CHECK(witnesses[0].partition.empty());
}

TEST_CASE("witnesses at s = 8: all verified, 13 contain 7") {
  auto witnesses = collect_witnesses(8);
  CHECK(witnesses.size() == 35);
  int with7 = 0;
  std::set<std::vector<int>> seen;
  for (const auto& w : witnesses) {
    CHECK(seen.insert(w.md).second);
    CHECK(is_self_conjugate(w.partition));
    CHECK(is_simultaneous_core(w.partition, {8, 9, 10}));
    CHECK(main_diagonal_hooks(w.partition).values == w.md);
    CHECK(is_valid_md(w.md, 8));
    if (std::find(w.md.begin(), w.md.end(), 7) != w.md.end()) ++with7;
  }
  CHECK(with7 == 13);
}

TEST_CASE("witness enumeration agrees with count for s <= 12") {
  for (int s = 1; s <= 12; ++s)
    CHECK(Count(static_cast<long>(collect_witnesses(s).size())) ==
          count_sc_cores(s));
}

TEST_CASE("count_sc_cores equals the even/odd partner") {
  for (int s = 1; s <= 7; ++s)
    CHECK(count_sc_cores(2 * s) == count_sc_cores(2 * s + 1));
}

TEST_CASE("completeness against the brute-force oracle for s <= 6") {
  for (int s = 1; s <= 6; ++s) {
    std::set<Partition> via_ideals;
    enumerate_sc_cores(s, [&](const ScCoreWitness& w) {
      via_ideals.insert(w.partition);
    });
    std::set<Partition> via_brute;
    const long long cap = anderson_size_cap(s, s + 1).get_si();
    enumerate_self_conjugate(cap, [&](const Partition& p) {
      if (is_simultaneous_core(p, {s, s + 1, s + 2})) via_brute.insert(p);
    });
    CHECK(via_ideals == via_brute);
  }
}

TEST_CASE("characterization equivalence over down-closed subsets, s <= 8") {
  for (int s = 1; s <= 8; ++s) {
    TildePoset tp = build_tilde_poset(s);
    const std::vector<int> moduli = {s, s + 1, s + 2};
    Count valid = 0;
    tilde_down_closed_subsets(tp, [&](const std::vector<int>& subset) {
      const bool by_ideal = is_valid_md(subset, tp);
      bool by_fms = true;
      for (int t : moduli)
        if (!fms_conditions(subset, t)) by_fms = false;
      const bool by_hooks =
          is_simultaneous_core(sc_partition_from_md(subset), moduli);
      CHECK(by_ideal == by_fms);
      CHECK(by_fms == by_hooks);
      if (by_ideal) ++valid;
    });
    CHECK(valid == count_sc_cores(s));
  }
}

TEST_CASE("phi on the thirteen published pairs") {
  const std::vector<std::pair<std::vector<int>, std::vector<int>>> pairs = {
      {{7}, {}},
      {{1, 7}, {1}},
      {{3, 7}, {3}},
      {{5, 7}, {5}},
      {{1, 3, 7}, {1, 3}},
      {{1, 5, 7}, {1, 5}},
      {{3, 5, 7}, {3, 5}},
      {{1, 3, 5, 7}, {1, 3, 5}},
      {{1, 3, 5, 7, 21}, {21}},
      {{1, 3, 5, 7, 21, 23}, {21, 23}},
      {{3, 5, 7, 23}, {23}},
      {{1, 3, 5, 7, 23}, {1, 23}},
      {{7, 15}, {1, 3, 5, 15}},
  };
  auto domain = collect_domain(8);
  CHECK(domain.size() == 13);
  std::set<std::vector<int>> domain_set(domain.begin(), domain.end());
  for (const auto& [input, image] : pairs) {
    CHECK(domain_set.count(input) == 1);
    CHECK(phi(input, 8) == image);
  }
}

TEST_CASE("phi domain errors") {
  CHECK_THROWS_WITH_AS(phi({7}, 7), "phi defined for even parameter",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(phi({1}, 8), "not in phi domain", std::invalid_argument);
  CHECK_THROWS_WITH_AS(phi({3, 13}, 8), "not in phi domain",
                       std::invalid_argument);
  CHECK_THROWS_AS(phi_domain(9, [](const std::vector<int>&) {}),
                  std::invalid_argument);
}

TEST_CASE("phi domain sizes and injectivity for even parameters 4..12") {
  for (int p = 4; p <= 12; p += 2) {
    auto domain = collect_domain(p);
    CHECK(Count(static_cast<long>(domain.size())) == count_sc_cores(p - 2));
    std::set<std::vector<int>> images;
    for (const auto& ideal : domain) images.insert(phi(ideal, p));
    CHECK(images.size() == domain.size());
  }
}

TEST_CASE("phi at parameter 4") {
  auto domain = collect_domain(4);
  std::set<std::vector<int>> domain_set(domain.begin(), domain.end());
  CHECK(domain_set == std::set<std::vector<int>>{{3}, {1, 3}});
  CHECK(phi({3}, 4) == std::vector<int>{});
  CHECK(phi({1, 3}, 4) == std::vector<int>{1});
}
