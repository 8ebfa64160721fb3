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

// Exact factored-integer arithmetic and the number theory the classifier
// runs on: factorization, gcds of q^k +- 1, p-parts, multiplicative orders.

#ifndef COPRIMEMAX_ARITH_HPP_
#define COPRIMEMAX_ARITH_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace coprimemax {

using BigInt = mpz_class;

/// Positive integer held as its prime factorization. The empty map is 1.
class FactoredInt {
public:
  using Map = std::map<BigInt, unsigned>;

  FactoredInt() = default;

  /// Validates every key (prime, strictly increasing by construction of
  /// std::map) and drops zero exponents. Throws std::invalid_argument.
  explicit FactoredInt(Map factors);

  /// Skips primality checks; for keys that are already known primes.
  struct Unchecked {};
  FactoredInt(Map factors, Unchecked) : factors_(std::move(factors)) {}

  static FactoredInt prime_power(const BigInt& p, unsigned e);
  static FactoredInt of(std::uint64_t v);  // shorthand for factorize()

  const Map& factors() const { return factors_; }
  BigInt value() const;
  std::string decimal() const { return value().get_str(); }
  /// "2^10 * 3^2 * 7"; "1" for the empty product.
  std::string to_string() const;

  bool is_one() const { return factors_.empty(); }
  bool is_odd() const;
  unsigned exponent_of(const BigInt& p) const;
  bool divisible_by(const BigInt& p) const { return exponent_of(p) > 0; }
  /// Sum of exponents (Omega).
  unsigned long total_exponent() const;

  friend bool operator==(const FactoredInt&, const FactoredInt&) = default;

private:
  Map factors_;
};

FactoredInt fi_mul(const FactoredInt& a, const FactoredInt& b);
FactoredInt fi_gcd(const FactoredInt& a, const FactoredInt& b);
/// True when a divides b.
bool fi_divides(const FactoredInt& a, const FactoredInt& b);
/// a / b; throws std::domain_error unless b divides a.
FactoredInt fi_div(const FactoredInt& a, const FactoredInt& b);
FactoredInt fi_pow(const FactoredInt& a, unsigned k);
bool fi_coprime(const FactoredInt& a, const FactoredInt& b);

/// Miller-Rabin with the first thirteen prime bases below 3.3e24 (exact
/// there); BPSW plus fixed-seed Miller-Rabin rounds above it.
bool is_prime(const BigInt& n);
bool is_prime(std::uint64_t n);

/// Full factorization: trial division to 10^6, Brent's rho, then ECM.
/// Throws std::invalid_argument for v < 1.
FactoredInt factorize(const BigInt& v);

struct PrimePower {
  std::uint64_t p = 0;
  unsigned e = 0;
  std::uint64_t value = 1;

  /// Decomposes v as p^e with e >= 1; throws std::invalid_argument when v is
  /// not a prime power.
  static PrimePower of(std::uint64_t v);
  static bool is_prime_power(std::uint64_t v);
};

/// Largest power of the prime p dividing k. The exponent is 0 (value 1) when
/// p does not divide k.
PrimePower p_part(std::uint64_t k, std::uint64_t p);

/// Least k >= 1 with a^k = 1 (mod n). Requires n >= 2 and gcd(a, n) = 1.
std::uint64_t mult_order(std::int64_t a, std::uint64_t n);

enum class Sign { Minus, Plus };

inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }

/// q^k - 1 or q^k + 1, factored. Built from cached factorizations of the
/// cyclotomic values Phi_d(p) where q = p^e, so no value is factored twice.
FactoredInt factor_q_power(std::uint64_t q, unsigned k, Sign s);

/// gcd(q^k -+ 1, q^m -+ 1) by the closed-form rules
///   (q^k-1, q^m-1) = q^(k,m) - 1
///   (q^k+1, q^m+1) = q^(k,m) + 1 if k_2 = m_2, else (2, q+1)
///   (q^k-1, q^m+1) = q^(k,m) + 1 if k_2 > m_2, else (2, q+1)
/// q^k is never expanded.
FactoredInt gcd_q_powers(std::uint64_t q, unsigned k, Sign sk, unsigned m,
                         Sign sm);

BigInt ipow(std::uint64_t base, unsigned long e);
std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

/// Factorization cache shared by every thread. Entries are keyed by (p, d)
/// for Phi_d(p). save/load use a flat text file so a CLI can persist it.
namespace factor_cache {
std::size_t size();
void clear();
bool load(const std::string& path);
bool save(const std::string& path);
}  // namespace factor_cache

}  // namespace coprimemax

#endif  // COPRIMEMAX_ARITH_HPP_
