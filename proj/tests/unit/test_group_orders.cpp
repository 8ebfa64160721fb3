// Copyright 2026 The coprimemax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <map>
#include <string>

#include "coprimemax/group_orders.hpp"

using namespace coprimemax;

namespace {

BigInt P(std::uint64_t q, unsigned long e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), q, e);
  return r;
}

BigInt G(const BigInt& a, std::uint64_t b) {
  BigInt g;
  mpz_gcd_ui(g.get_mpz_t(), a.get_mpz_t(), b);
  return g;
}

// Textbook order formulas, written out directly in GMP.
BigInt psl(unsigned n, std::uint64_t q) {
  BigInt r = P(q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i)
    r *= P(q, i) - 1;
  return r / G(BigInt(q - 1), n);
}

BigInt psu(unsigned n, std::uint64_t q) {
  BigInt r = P(q, n * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i)
    r *= (i % 2 == 0) ? BigInt(P(q, i) - 1) : BigInt(P(q, i) + 1);
  return r / G(BigInt(q + 1), n);
}

BigInt psp(unsigned m, std::uint64_t q) {  // PSp_{2m}(q)
  BigInt r = P(q, m * m);
  for (unsigned i = 1; i <= m; ++i)
    r *= P(q, 2 * i) - 1;
  return r / G(BigInt(q - 1), 2);
}

BigInt pomega_even(int eps, unsigned m, std::uint64_t q) {
  BigInt top = eps > 0 ? BigInt(P(q, m) - 1) : BigInt(P(q, m) + 1);
  BigInt r = P(q, m * (m - 1)) * top;
  for (unsigned i = 1; i < m; ++i)
    r *= P(q, 2 * i) - 1;
  BigInt g;
  mpz_gcd_ui(g.get_mpz_t(), top.get_mpz_t(), 4);
  return r / g;
}

BigInt fact(unsigned n) {
  BigInt r = 1;
  for (unsigned i = 2; i <= n; ++i)
    r *= i;
  return r;
}

}  // namespace

TEST_CASE("classical orders match the textbook formulas") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 49, 64, 81, 121, 128, 169}) {
    for (unsigned n = 2; n <= 9; ++n) {
      CAPTURE(q);
      CAPTURE(n);
      REQUIRE(order_psl(n, q).value() == psl(n, q));
      if (n >= 3)
        REQUIRE(order_psu(n, q).value() == psu(n, q));
      if (n >= 2)
        REQUIRE(order_psp(2 * n, q).value() == psp(n, q));
      if (n >= 4) {
        REQUIRE(order_pomega(OrthogonalKind::Plus, 2 * n, q).value() == pomega_even(1, n, q));
        REQUIRE(order_pomega(OrthogonalKind::Minus, 2 * n, q).value() == pomega_even(-1, n, q));
      }
      if (n >= 3 && q % 2 == 1)
        REQUIRE(order_pomega(OrthogonalKind::Circ, 2 * n + 1, q).value() == psp(n, q));
    }
  }
}

TEST_CASE("known orders") {
  auto o = [](const char* s) { return order_simple(parse_group_spec(s)).decimal(); };
  CHECK(o("A5") == "60");
  CHECK(o("PSL(2,7)") == "168");
  CHECK(o("PSL(3,4)") == "20160");
  CHECK(o("PSU(3,3)") == "6048");
  CHECK(o("PSU(4,2)") == "25920");
  CHECK(o("PSp(4,3)") == "25920");
  CHECK(o("PSp(6,2)") == "1451520");
  CHECK(o("POmega(+,8,2)") == "174182400");
  CHECK(o("POmega(-,8,2)") == "197406720");
  CHECK(o("POmega(o,7,3)") == "4585351680");
  CHECK(o("G2(3)") == "4245696");
  CHECK(o("G2(4)") == "251596800");
  CHECK(o("F4(2)") == "3311126603366400");
  CHECK(o("E6(2)") == "214841575522005575270400");
  CHECK(o("2E6(2)") == "76532479683774853939200");
  CHECK(o("3D4(2)") == "211341312");
  CHECK(o("2B2(8)") == "29120");
  CHECK(o("2B2(32)") == "32537600");
  CHECK(o("2G2(27)") == "10073444472");
  CHECK(order_exceptional(ExceptionalKind::F4Ree, 2).decimal() == "35942400");
  CHECK(o("M") == "808017424794512875886459904961710757005754368000000000");
  CHECK(o("B") == "4154781481226426191177580544000000");
  CHECK(o("M23") == "10200960");
  CHECK(o("Th") == "90745943887872000");
}

TEST_CASE("E7 and E8 against their product formulas") {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    BigInt e8 = P(q, 120);
    for (unsigned d : {2, 8, 12, 14, 18, 20, 24, 30})
      e8 *= P(q, d) - 1;
    CHECK(order_exceptional(ExceptionalKind::E8, q).value() == e8);
    BigInt e7 = P(q, 63);
    for (unsigned d : {2, 6, 8, 10, 12, 14, 18})
      e7 *= P(q, d) - 1;
    e7 /= G(BigInt(q - 1), 2);
    CHECK(order_exceptional(ExceptionalKind::E7, q).value() == e7);
  }
}

TEST_CASE("sporadic orders are consistent") {
  std::map<std::string, std::string> atlas = {
      {"M11", "7920"},
      {"M12", "95040"},
      {"M22", "443520"},
      {"M24", "244823040"},
      {"J1", "175560"},
      {"J2", "604800"},
      {"J3", "50232960"},
      {"J4", "86775571046077562880"},
      {"HS", "44352000"},
      {"McL", "898128000"},
      {"He", "4030387200"},
      {"Ru", "145926144000"},
      {"Suz", "448345497600"},
      {"O'N", "460815505920"},
      {"Co3", "495766656000"},
      {"Co2", "42305421312000"},
      {"Co1", "4157776806543360000"},
      {"Fi22", "64561751654400"},
      {"Fi23", "4089470473293004800"},
      {"Fi24'", "1255205709190661721292800"},
      {"HN", "273030912000000"},
      {"Ly", "51765179004000000"},
  };
  for (const auto& [name, dec] : atlas) {
    CAPTURE(name);
    auto s = sporadic_from_name(name);
    REQUIRE(s);
    CHECK(order_sporadic(*s).decimal() == dec);
    CHECK(sporadic_name(*s) == name);
  }
  CHECK(sporadic_from_name("F1") == SporadicName::M);
  CHECK(sporadic_from_name("BM") == SporadicName::B);
  CHECK_FALSE(sporadic_from_name("M21"));
}

TEST_CASE("alternating and symmetric orders") {
  for (unsigned n = 2; n <= 60; ++n) {
    CHECK(order_symmetric(n).value() == fact(n));
    CHECK(order_alternating(n).value() * 2 == fact(n));
  }
}

TEST_CASE("gaussian binomials satisfy the q-Pascal rule") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 9})
    for (unsigned n = 2; n <= 14; ++n)
      for (unsigned m = 1; m < n; ++m) {
        BigInt lhs = gaussian_binomial(n, m, q).value();
        BigInt a = m == n - 1 ? BigInt(1) : gaussian_binomial(n - 1, m, q).value();
        BigInt b = gaussian_binomial(n - 1, m - 1, q).value();
        if (m - 1 == 0)
          b = 1;
        REQUIRE(lhs == b + P(q, m) * a);
      }
  CHECK(gaussian_binomial(4, 2, 2).decimal() == "35");
}

TEST_CASE("subspace stabilizer times Gaussian binomial is the group order") {
  for (unsigned n : {3, 5, 7, 11, 13})
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9})
      for (unsigned m = 1; m < n; ++m)
        REQUIRE(fi_mul(order_psl_subspace_stab(n, q, m), gaussian_binomial(n, m, q)) ==
                order_psl(n, q));
}

TEST_CASE("unitary stabilizers divide the group order") {
  for (unsigned n : {3, 5, 7, 11})
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11})
      for (unsigned m = 1; 2 * m < n; ++m) {
        CAPTURE(n);
        CAPTURE(q);
        CAPTURE(m);
        REQUIRE(fi_divides(order_psu_nondeg_stab(n, q, m), order_psu(n, q)));
        REQUIRE(fi_divides(order_psu_totsing_stab(n, q, m), order_psu(n, q)));
      }
  CHECK(order_psu_totsing_stab(3, 11, 1).decimal() == "53240");
}

TEST_CASE("torus normalizers") {
  CHECK(order_torus_normalizer(5, 2, Sign::Plus).decimal() == "155");
  CHECK(order_torus_normalizer(3, 11, Sign::Minus).decimal() == "111");
  CHECK(order_torus_normalizer(7, 2, Sign::Minus).decimal() == "301");
  CHECK(order_psl2_parabolic(23).decimal() == "253");
  for (unsigned n : {3, 5, 7, 11, 13})
    for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16}) {
      if (!(n == 3 && q == 4))
        CHECK(order_torus_normalizer(n, q, Sign::Plus).is_odd());
      CHECK(fi_divides(order_torus_normalizer(n, q, Sign::Plus), order_psl(n, q)));
      if (!(n == 3 && q == 2))
        CHECK(fi_divides(order_torus_normalizer(n, q, Sign::Minus), order_psu(n, q)));
    }
}

TEST_CASE("simplicity validation") {
  auto nonsimple = [](const char* s) {
    CAPTURE(s);
    CHECK_THROWS_AS(validate_simple(parse_group_spec(s)), NonSimpleGroup);
  };
  for (const char* s : {"A4", "PSL(2,2)", "PSL(2,3)", "PSL(2,6)", "PSU(3,2)", "PSU(2,5)",
                        "PSp(4,2)", "PSp(5,3)", "POmega(o,5,3)", "POmega(o,7,4)",
                        "POmega(+,6,3)", "G2(2)", "2B2(2)", "2B2(4)", "2G2(3)", "2G2(9)",
                        "2F4(2)", "PSL(1,7)"})
    nonsimple(s);
  for (const char* s : {"A5", "PSL(2,4)", "PSU(3,3)", "PSp(4,3)", "POmega(o,7,3)",
                        "POmega(-,8,2)", "G2(3)", "2B2(8)", "2G2(27)", "2F4(8)", "M"})
    CHECK_NOTHROW(validate_simple(parse_group_spec(s)));
}

TEST_CASE("spec grammar") {
  for (const char* s : {"A13", "M23", "Fi24'", "O'N", "PSL(5,2)", "PSU(19,2)", "PSp(8,2)",
                        "POmega(+,8,3)", "POmega(-,10,2)", "POmega(o,9,5)", "E8(2)", "2E6(2)",
                        "3D4(3)", "2B2(8)", "2G2(27)", "2F4(8)", "G2(5)", "F4(3)", "E7(2)",
                        "E6(4)"}) {
    CAPTURE(s);
    CHECK(canonical_name(parse_group_spec(s)) == s);
  }
  CHECK(canonical_name(parse_group_spec(" PSL( 2 , 23 ) ")) == "PSL(2,23)");
  CHECK(canonical_name(parse_group_spec("F1")) == "M");
  for (const char* s : {"", "PSL(2)", "PSL(2,23", "PSL(a,3)", "psl(2,7)", "M25", "A", "A-5",
                        "POmega(x,8,3)", "E9(2)", "PSL(2,99999999999999)", "Foo"}) {
    CAPTURE(s);
    CHECK_THROWS_AS(parse_group_spec(s), SpecSyntaxError);
  }
}

TEST_CASE("small group orders") {
  CHECK(small_group_order("D8").decimal() == "8");
  CHECK(small_group_order("Q8").decimal() == "8");
  CHECK(small_group_order("S4").decimal() == "24");
  CHECK(small_group_order("A5").decimal() == "60");
  CHECK(small_group_order("C7").decimal() == "7");
  CHECK(small_group_order("HS").decimal() == "44352000");
}
