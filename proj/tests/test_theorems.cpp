#include "doctest.h"

#include <set>
#include <vector>

#include "simcores/io.hpp"
#include "simcores/theorems.hpp"

using namespace simcores;

TEST_CASE("registry content") {
  const std::vector<std::string> expected = {
      "anderson",        "fms",      "al",   "motzkin-cor",
      "sc-characterization", "even-odd", "phi",  "prop33a",
      "prop33b",         "main",     "conjecture"};
  CHECK(claim_registry() == expected);
}

TEST_CASE("anderson reports") {
  auto r = verify_anderson(3, 4);
  CHECK(r.passed);
  CHECK(r.left[0] == "5");
  CHECK(r.left.size() == 2);  // brute cross-check fires for s + t <= 9

  CHECK(verify_anderson(2, 3).left[0] == "2");
  auto big = verify_anderson(4, 9);
  CHECK(big.passed);
  CHECK(big.right[0] == "55");
  CHECK_THROWS_AS(verify_anderson(2, 4), std::invalid_argument);
}

TEST_CASE("fms reports") {
  auto r34 = verify_fms(3, 4);
  CHECK(r34.passed);
  CHECK(r34.right[0] == "3");
  CHECK(verify_fms(2, 3).right[0] == "2");
  auto r56 = verify_fms(5, 6);
  CHECK(r56.passed);
  CHECK(r56.right[0] == "10");
  CHECK_THROWS_AS(verify_fms(2, 6), std::invalid_argument);
}

TEST_CASE("al reports") {
  auto r42 = verify_al(4, 2);
  CHECK(r42.passed);
  CHECK(r42.right[0] == "9");
  auto r31 = verify_al(3, 1);
  CHECK(r31.passed);
  CHECK(r31.right[0] == "5");
  auto r53 = verify_al(5, 3);
  CHECK(r53.passed);
  CHECK(r53.left[0] == r53.left[1]);  // paths == brute, both equal ideals
}

TEST_CASE("motzkin corollary reports") {
  auto r = verify_motzkin_cor(8);
  CHECK(r.passed);
  CHECK(r.right[0] == "323");
}

TEST_CASE("characterization reports") {
  auto r8 = verify_sc_characterization(8);
  CHECK(r8.passed);
  CHECK(r8.left[0] == "35");
  auto r1 = verify_sc_characterization(1);
  CHECK(r1.passed);
  CHECK(r1.left[0] == "1");
  auto r9 = verify_sc_characterization(9);
  CHECK(r9.passed);
  CHECK(r9.left[0] == "35");
}

TEST_CASE("even-odd reports") {
  for (int s : {1, 2, 4}) {
    auto r = verify_even_odd(s);
    CHECK(r.passed);
  }
  CHECK(verify_even_odd(1).left[0] == "2");
  CHECK(verify_even_odd(2).left[0] == "5");
  CHECK(verify_even_odd(4).left[0] == "35");
}

TEST_CASE("phi reports") {
  auto r8 = verify_phi(8);
  CHECK(r8.passed);
  CHECK(r8.left[0] == "13");
  CHECK(r8.left.size() == 3);  // pair table checked at parameter 8
  CHECK(r8.left[2] == "13");

  auto r4 = verify_phi(4);
  CHECK(r4.passed);
  CHECK(r4.left[0] == "2");

  auto r12 = verify_phi(12);
  CHECK(r12.passed);
  CHECK(r12.right[0] == "96");  // a_10

  CHECK_THROWS_AS(verify_phi(7), std::invalid_argument);
}

TEST_CASE("prop 3.3 reports") {
  auto a44 = verify_prop33a(4, 4);
  CHECK(a44.passed);
  CHECK(a44.left[0] == "13");
  auto a41 = verify_prop33a(4, 1);
  CHECK(a41.passed);
  CHECK(a41.right[0] == "4");
  auto b3 = verify_prop33b(3);
  CHECK(b3.passed);
  CHECK(b3.right[0] == "4");
  CHECK_THROWS_AS(verify_prop33a(3, 4), std::invalid_argument);
}

TEST_CASE("main theorem reports") {
  auto r4 = verify_main(4);
  CHECK(r4.passed);
  CHECK(r4.right[0] == "5");
  CHECK(r4.left.size() == 2);
  auto r3 = verify_main(3);
  CHECK(r3.passed);
  CHECK(r3.right[0] == "2");
  auto r8 = verify_main(8);
  CHECK(r8.passed);
  CHECK(r8.right[0] == "35");
  auto r12 = verify_main(12);
  CHECK(r12.passed);
  CHECK(r12.left.size() == 1);  // enumeration leg gated at s <= 10
}

TEST_CASE("conjecture reports") {
  auto r42 = test_conjecture(4, 2);
  CHECK(r42.passed);
  CHECK(r42.right[0] == "5");
  auto r41 = test_conjecture(4, 1);
  CHECK(r41.passed);
  CHECK(r41.right[0] == "6");
  auto r43 = test_conjecture(4, 3);
  CHECK(r43.passed);
  CHECK(conjecture_asserted(1));
  CHECK(conjecture_asserted(2));
  CHECK_FALSE(conjecture_asserted(3));
}

TEST_CASE("passed is recomputable from left and right") {
  std::vector<VerificationReport> reports = {
      verify_anderson(3, 4), verify_fms(5, 6),    verify_al(4, 2),
      verify_motzkin_cor(5), verify_even_odd(3),  verify_phi(8),
      verify_prop33a(4, 2),  verify_prop33b(4),   verify_main(6),
      test_conjecture(3, 2), verify_sc_characterization(5)};
  for (const auto& r : reports) CHECK(r.passed == (r.left == r.right));
}

TEST_CASE("reports are deterministic without timing") {
  auto once = report_to_json(verify_phi(8), false);
  auto twice = report_to_json(verify_phi(8), false);
  CHECK(once == twice);
  CHECK(once.find("\"elapsed_ms\":0") != std::string::npos);

  auto csv_once = report_to_csv(verify_main(4), false);
  auto csv_twice = report_to_csv(verify_main(4), false);
  CHECK(csv_once == csv_twice);
}
