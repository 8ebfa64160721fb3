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

#include <random>
#include <vector>

#include "coprimemax/arith.hpp"

using namespace coprimemax;

namespace {

// smallest prime factor for every n <= limit
std::vector<std::uint32_t> spf_sieve(std::uint32_t limit) {
  std::vector<std::uint32_t> spf(limit + 1, 0);
  for (std::uint32_t i = 2; i <= limit; ++i)
    if (spf[i] == 0)
      for (std::uint64_t j = i; j <= limit; j += i)
        if (spf[j] == 0)
          spf[j] = i;
  return spf;
}

BigInt pow_big(std::uint64_t b, unsigned e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), b, e);
  return r;
}

BigInt gcd_big(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace

TEST_CASE("is_prime and factorize agree with a sieve up to 10^6") {
  const std::uint32_t limit = 1000000;
  auto spf = spf_sieve(limit);
  for (std::uint32_t n = 2; n <= limit; ++n) {
    REQUIRE(is_prime(static_cast<std::uint64_t>(n)) == (spf[n] == n));
    FactoredInt::Map expect;
    for (std::uint32_t m = n; m > 1; m /= spf[m])
      ++expect[spf[m]];
    FactoredInt f = factorize(n);
    REQUIRE(f.factors() == expect);
  }
  CHECK(factorize(1).is_one());
  CHECK_THROWS_AS(factorize(0), std::invalid_argument);
}

TEST_CASE("factorize: large composites") {
  // 2^67 - 1 (Cole), F6 and F7
  CHECK(factorize(pow_big(2, 67) - 1).to_string() == "193707721 * 761838257287");
  CHECK(factorize(pow_big(2, 64) + 1).to_string() == "274177 * 67280421310721");
  CHECK(factorize(pow_big(2, 128) + 1).to_string() ==
        "59649589127497217 * 5704689200685129054721");

  BigInt p, q;
  mpz_nextprime(p.get_mpz_t(), BigInt("1000000000000000").get_mpz_t());
  mpz_nextprime(q.get_mpz_t(), BigInt("300000000000000000000").get_mpz_t());
  FactoredInt f = factorize(p * p * q);
  CHECK(f.factors().size() == 2);
  CHECK(f.exponent_of(p) == 2);
  CHECK(f.exponent_of(q) == 1);
  CHECK(f.value() == p * p * q);

  CHECK(factorize(pow_big(3, 40)).to_string() == "3^40");
}

TEST_CASE("is_prime on big values") {
  CHECK(is_prime(pow_big(2, 127) - 1));
  CHECK_FALSE(is_prime(pow_big(2, 128) + 1));
  // strong pseudoprime to bases 2..37 (Jaeschke)
  CHECK_FALSE(is_prime(BigInt("318665857834031151167461")));
  CHECK_FALSE(is_prime(BigInt("3317044064679887385961981")));
}

TEST_CASE("FactoredInt arithmetic matches GMP on random values") {
  std::mt19937_64 rng(20240917);
  std::uniform_int_distribution<std::uint64_t> dist(1, 1000000000000ULL);
  for (int i = 0; i < 300; ++i) {
    std::uint64_t a = dist(rng), b = dist(rng);
    FactoredInt fa = FactoredInt::of(a), fb = FactoredInt::of(b);
    BigInt A = a, B = b;
    REQUIRE(fa.value() == A);
    REQUIRE(fi_mul(fa, fb).value() == A * B);
    REQUIRE(fi_gcd(fa, fb).value() == gcd_big(A, B));
    REQUIRE(fi_coprime(fa, fb) == (gcd_big(A, B) == 1));
    REQUIRE(fi_divides(fa, fi_mul(fa, fb)));
    REQUIRE(fi_div(fi_mul(fa, fb), fb) == fa);
    REQUIRE(fi_divides(fa, fb) == (B % A == 0));
    REQUIRE(fi_pow(fa, 3).value() == A * A * A);
  }
}

TEST_CASE("FactoredInt validation and formatting") {
  CHECK_THROWS_AS(FactoredInt(FactoredInt::Map{{BigInt(4), 1}}), std::invalid_argument);
  CHECK_THROWS_AS(FactoredInt(FactoredInt::Map{{BigInt(1), 1}}), std::invalid_argument);
  FactoredInt f(FactoredInt::Map{{BigInt(2), 10}, {BigInt(3), 2}, {BigInt(7), 1}, {BigInt(5), 0}});
  CHECK(f.to_string() == "2^10 * 3^2 * 7");
  CHECK(f.decimal() == "64512");
  CHECK(f.total_exponent() == 13);
  CHECK_FALSE(f.is_odd());
  CHECK(FactoredInt().to_string() == "1");
  CHECK(FactoredInt().is_odd());
  CHECK_THROWS_AS(fi_div(FactoredInt::of(6), FactoredInt::of(4)), std::domain_error);
}

TEST_CASE("PrimePower and p_part against brute force") {
  for (std::uint64_t v = 1; v <= 5000; ++v) {
    auto ps = prime_divisors(v);
    bool pp = ps.size() == 1;
    REQUIRE(PrimePower::is_prime_power(v) == pp);
    if (pp) {
      PrimePower x = PrimePower::of(v);
      REQUIRE(x.p == ps[0]);
      REQUIRE(ipow(x.p, x.e) == BigInt(v));
    } else {
      REQUIRE_THROWS_AS(PrimePower::of(v), std::invalid_argument);
    }
    for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL}) {
      std::uint64_t part = 1;
      while (v % (part * p) == 0)
        part *= p;
      REQUIRE(p_part(v, p).value == part);
    }
  }
  CHECK(p_part(12, 3).e == 1);
  CHECK(p_part(10, 3).e == 0);
  CHECK(p_part(10, 3).value == 1);
}

TEST_CASE("mult_order against brute force") {
  for (std::uint64_t n = 2; n <= 600; ++n)
    for (std::int64_t a = -20; a <= 60; ++a) {
      std::int64_t r = ((a % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n)) %
                       static_cast<std::int64_t>(n);
      if (gcd_u64(static_cast<std::uint64_t>(r), n) != 1)
        continue;
      std::uint64_t k = 1, x = static_cast<std::uint64_t>(r) % n;
      while (x != 1 % n) {
        x = x * static_cast<std::uint64_t>(r) % n;
        ++k;
      }
      REQUIRE(mult_order(a, n) == k);
    }
  CHECK(mult_order(2, 13) == 12);
  CHECK(mult_order(2, 19) == 18);
  CHECK(mult_order(2, 7) == 3);
  CHECK(mult_order(3, 5) == 4);
}

TEST_CASE("factor_q_power expands to q^k +- 1") {
  for (std::uint64_t q = 2; q <= 60; ++q)
    for (unsigned k = 1; k <= 12; ++k) {
      BigInt v = pow_big(q, k);
      REQUIRE(factor_q_power(q, k, Sign::Minus).value() == v - 1);
      REQUIRE(factor_q_power(q, k, Sign::Plus).value() == v + 1);
    }
  CHECK(factor_q_power(2, 1, Sign::Minus).is_one());
}

TEST_CASE("gcd_q_powers closed form equals the expanded gcd") {
  for (std::uint64_t q = 2; q <= 12; ++q)
    for (unsigned k = 1; k <= 14; ++k)
      for (unsigned m = 1; m <= 14; ++m)
        for (Sign sk : {Sign::Minus, Sign::Plus})
          for (Sign sm : {Sign::Minus, Sign::Plus}) {
            BigInt a = pow_big(q, k) + sign_value(sk);
            BigInt b = pow_big(q, m) + sign_value(sm);
            REQUIRE(gcd_q_powers(q, k, sk, m, sm).value() == gcd_big(a, b));
          }
  CHECK(gcd_q_powers(3, 3, Sign::Plus, 5, Sign::Plus).value() == 4);
}

TEST_CASE("factorization cache is reused") {
  factor_cache::clear();
  factor_q_power(7, 12, Sign::Minus);
  std::size_t n = factor_cache::size();
  CHECK(n > 0);
  factor_q_power(7, 12, Sign::Minus);
  factor_q_power(49, 6, Sign::Minus);  // same cyclotomic pieces of 7
  CHECK(factor_cache::size() == n);
}
