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

#include "coprimemax/arith.hpp"

#include <algorithm>
#include <fstream>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>

namespace coprimemax {

FactoredInt::FactoredInt(Map factors) {
  for (auto& [p, e] : factors) {
    if (e == 0)
      continue;
    if (p < 2 || !is_prime(p))
      throw std::invalid_argument("FactoredInt: non-prime key " + p.get_str());
    factors_.emplace(p, e);
  }
}

FactoredInt FactoredInt::prime_power(const BigInt& p, unsigned e) {
  return FactoredInt(Map{{p, e}});
}

FactoredInt FactoredInt::of(std::uint64_t v) {
  return factorize(BigInt(static_cast<unsigned long>(v)));
}

BigInt FactoredInt::value() const {
  BigInt r = 1;
  for (const auto& [p, e] : factors_) {
    BigInt t;
    mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), e);
    r *= t;
  }
  return r;
}

std::string FactoredInt::to_string() const {
  if (factors_.empty())
    return "1";
  std::string out;
  for (const auto& [p, e] : factors_) {
    if (!out.empty())
      out += " * ";
    out += p.get_str();
    if (e > 1)
      out += "^" + std::to_string(e);
  }
  return out;
}

bool FactoredInt::is_odd() const { return exponent_of(2) == 0; }

unsigned FactoredInt::exponent_of(const BigInt& p) const {
  auto it = factors_.find(p);
  return it == factors_.end() ? 0 : it->second;
}

unsigned long FactoredInt::total_exponent() const {
  unsigned long s = 0;
  for (const auto& kv : factors_)
    s += kv.second;
  return s;
}

FactoredInt fi_mul(const FactoredInt& a, const FactoredInt& b) {
  FactoredInt::Map m = a.factors();
  for (const auto& [p, e] : b.factors())
    m[p] += e;
  return FactoredInt(std::move(m), FactoredInt::Unchecked{});
}

FactoredInt fi_gcd(const FactoredInt& a, const FactoredInt& b) {
  FactoredInt::Map m;
  for (const auto& [p, e] : a.factors()) {
    unsigned f = b.exponent_of(p);
    if (f > 0)
      m.emplace(p, std::min(e, f));
  }
  return FactoredInt(std::move(m), FactoredInt::Unchecked{});
}

bool fi_divides(const FactoredInt& a, const FactoredInt& b) {
  for (const auto& [p, e] : a.factors())
    if (b.exponent_of(p) < e)
      return false;
  return true;
}

FactoredInt fi_div(const FactoredInt& a, const FactoredInt& b) {
  FactoredInt::Map m = a.factors();
  for (const auto& [p, e] : b.factors()) {
    auto it = m.find(p);
    if (it == m.end() || it->second < e)
      throw std::domain_error("fi_div: " + b.to_string() + " does not divide " +
                              a.to_string());
    it->second -= e;
    if (it->second == 0)
      m.erase(it);
  }
  return FactoredInt(std::move(m), FactoredInt::Unchecked{});
}

FactoredInt fi_pow(const FactoredInt& a, unsigned k) {
  FactoredInt::Map m;
  if (k > 0)
    for (const auto& [p, e] : a.factors())
      m.emplace(p, e * k);
  return FactoredInt(std::move(m), FactoredInt::Unchecked{});
}

bool fi_coprime(const FactoredInt& a, const FactoredInt& b) {
  // both maps are sorted: walk them in step
  auto i = a.factors().begin(), j = b.factors().begin();
  while (i != a.factors().end() && j != b.factors().end()) {
    int c = cmp(i->first, j->first);
    if (c == 0)
      return false;
    if (c < 0)
      ++i;
    else
      ++j;
  }
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t n) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % n);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t n) {
  std::uint64_t r = 1 % n;
  a %= n;
  while (e) {
    if (e & 1)
      r = mulmod(r, a, n);
    a = mulmod(a, a, n);
    e >>= 1;
  }
  return r;
}

// Bases 2..41 decide primality for every n < 3317044064679887385961981.
constexpr unsigned kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin(const BigInt& n) {
  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigInt nm1 = n - 1, x;
  for (unsigned a : kWitnesses) {
    if (n == a)
      return true;
    BigInt base = a;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == nm1)
      continue;
    bool composite = true;
    for (unsigned long r = 1; r < s; ++r) {
      mpz_powm_ui(x.get_mpz_t(), x.get_mpz_t(), 2, n.get_mpz_t());
      if (x == nm1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

const BigInt& mr_exact_limit() {
  static const BigInt limit("3317044064679887385961981");
  return limit;
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2)
    return false;
  for (unsigned p : kWitnesses) {
    if (n == p)
      return true;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p))
      return false;
  }
  if (n < mr_exact_limit())
    return miller_rabin(n);
  // GMP runs Baillie-PSW followed by Miller-Rabin rounds drawn from a fixed
  // seed, so the answer is reproducible.
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0)
      return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : kWitnesses) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  if (n < 2)
    return out;
  if (n >= (std::uint64_t{1} << 40)) {
    for (const auto& [p, e] : factorize(BigInt(static_cast<unsigned long>(n))).factors())
      out.push_back(p.get_ui());
    return out;
  }
  for (std::uint64_t d = 2; d * d <= n; d += (d == 2 ? 1 : 2)) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0)
        n /= d;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

BigInt ipow(std::uint64_t base, unsigned long e) {
  BigInt r;
  BigInt b = static_cast<unsigned long>(base);
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

PrimePower PrimePower::of(std::uint64_t v) {
  if (v < 2)
    throw std::invalid_argument("not a prime power: " + std::to_string(v));
  auto ps = prime_divisors(v);
  if (ps.size() != 1)
    throw std::invalid_argument("not a prime power: " + std::to_string(v));
  PrimePower pp;
  pp.p = ps.front();
  pp.value = v;
  while (v > 1) {
    v /= pp.p;
    ++pp.e;
  }
  return pp;
}

bool PrimePower::is_prime_power(std::uint64_t v) {
  return v >= 2 && prime_divisors(v).size() == 1;
}

PrimePower p_part(std::uint64_t k, std::uint64_t p) {
  if (!is_prime(p))
    throw std::invalid_argument("p_part: " + std::to_string(p) + " is not prime");
  if (k == 0)
    throw std::invalid_argument("p_part: k must be positive");
  PrimePower pp;
  pp.p = p;
  while (k % p == 0) {
    k /= p;
    pp.value *= p;
    ++pp.e;
  }
  return pp;
}

std::uint64_t mult_order(std::int64_t a, std::uint64_t n) {
  if (n < 2)
    throw std::invalid_argument("mult_order: modulus must be at least 2");
  std::int64_t sn = static_cast<std::int64_t>(n);
  std::uint64_t r = static_cast<std::uint64_t>(((a % sn) + sn) % sn);
  if (std::gcd(r, n) != 1)
    throw std::invalid_argument("mult_order: " + std::to_string(a) +
                                " is not a unit modulo " + std::to_string(n));
  // Euler's phi bounds the order; strip primes while the power stays 1.
  std::uint64_t phi = n;
  for (std::uint64_t p : prime_divisors(n))
    phi = phi / p * (p - 1);
  std::uint64_t ord = phi;
  for (std::uint64_t p : prime_divisors(phi))
    while (ord % p == 0 && powmod(r, ord / p, n) == 1)
      ord /= p;
  return ord;
}

// ---------------------------------------------------------------------------
// Cyclotomic cache

namespace {

struct CyclotomicKey {
  std::uint64_t base;
  unsigned d;
  auto operator<=>(const CyclotomicKey&) const = default;
};

struct Cache {
  std::shared_mutex mu;
  std::map<CyclotomicKey, FactoredInt> entries;
};

Cache& cache() {
  static Cache c;
  return c;
}

int mobius(unsigned n) {
  int mu = 1;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0)
        return 0;
      mu = -mu;
    }
  }
  if (n > 1)
    mu = -mu;
  return mu;
}

std::vector<unsigned> divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n)
        out.push_back(n / d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

BigInt cyclotomic_value(std::uint64_t x, unsigned d) {
  BigInt num = 1, den = 1;
  for (unsigned e : divisors(d)) {
    int mu = mobius(d / e);
    if (mu == 0)
      continue;
    BigInt t = ipow(x, e) - 1;
    (mu > 0 ? num : den) *= t;
  }
  return num / den;
}

FactoredInt cyclotomic_factored(std::uint64_t base, unsigned d) {
  CyclotomicKey key{base, d};
  {
    std::shared_lock lock(cache().mu);
    auto it = cache().entries.find(key);
    if (it != cache().entries.end())
      return it->second;
  }
  FactoredInt f = factorize(cyclotomic_value(base, d));
  std::unique_lock lock(cache().mu);
  return cache().entries.emplace(key, std::move(f)).first->second;
}

// Writes q = r^e with r not a perfect power.
std::pair<std::uint64_t, unsigned> primitive_base(std::uint64_t q) {
  for (unsigned e = 63; e >= 2; --e) {
    BigInt r;
    BigInt bq = static_cast<unsigned long>(q);
    if (mpz_root(r.get_mpz_t(), bq.get_mpz_t(), e) != 0 && r >= 2)
      return {r.get_ui(), e};
  }
  return {q, 1};
}

}  // namespace

FactoredInt factor_q_power(std::uint64_t q, unsigned k, Sign s) {
  if (q < 2 || k == 0)
    throw std::invalid_argument("factor_q_power: need q >= 2, k >= 1");
  auto [r, e] = primitive_base(q);
  unsigned ek = e * k;
  FactoredInt out;
  if (s == Sign::Minus) {
    for (unsigned d : divisors(ek))
      out = fi_mul(out, cyclotomic_factored(r, d));
  } else {
    // q^k + 1 = (q^2k - 1) / (q^k - 1)
    for (unsigned d : divisors(2 * ek))
      if (ek % d != 0)
        out = fi_mul(out, cyclotomic_factored(r, d));
  }
  return out;
}

FactoredInt gcd_q_powers(std::uint64_t q, unsigned k, Sign sk, unsigned m,
                         Sign sm) {
  if (q < 2 || k == 0 || m == 0)
    throw std::invalid_argument("gcd_q_powers: need q >= 2, k, m >= 1");
  unsigned g = std::gcd(k, m);
  unsigned k2 = static_cast<unsigned>(__builtin_ctz(k));
  unsigned m2 = static_cast<unsigned>(__builtin_ctz(m));
  // (2, q+1)
  FactoredInt two_or_one = (q % 2 == 1) ? FactoredInt::prime_power(2, 1) : FactoredInt();
  if (sk == Sign::Minus && sm == Sign::Minus)
    return factor_q_power(q, g, Sign::Minus);
  if (sk == Sign::Plus && sm == Sign::Plus)
    return k2 == m2 ? factor_q_power(q, g, Sign::Plus) : two_or_one;
  if (sk == Sign::Plus)  // (q^k+1, q^m-1): same rule with roles swapped
    std::swap(k2, m2);
  return k2 > m2 ? factor_q_power(q, g, Sign::Plus) : two_or_one;
}

namespace factor_cache {

std::size_t size() {
  std::shared_lock lock(cache().mu);
  return cache().entries.size();
}

void clear() {
  std::unique_lock lock(cache().mu);
  cache().entries.clear();
}

// Format: one entry per line, "base d p1^e1 p2^e2 ...".
bool load(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    return false;
  std::map<CyclotomicKey, FactoredInt> loaded;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    CyclotomicKey key{};
    if (!(ls >> key.base >> key.d))
      continue;
    if (key.base < 2 || key.d == 0 || key.d > 4096)
      return false;
    FactoredInt f;
    try {
      FactoredInt::Map m;
      std::string tok;
      while (ls >> tok) {
        auto caret = tok.find('^');
        if (caret == std::string::npos)
          return false;
        BigInt p(tok.substr(0, caret));
        m[p] = static_cast<unsigned>(std::stoul(tok.substr(caret + 1)));
      }
      f = FactoredInt(std::move(m));  // re-validates primality
    } catch (const std::invalid_argument&) {
      return false;
    } catch (const std::out_of_range&) {
      return false;
    }
    if (f.value() != cyclotomic_value(key.base, key.d))
      return false;
    loaded.emplace(key, std::move(f));
  }
  std::unique_lock lock(cache().mu);
  for (auto& kv : loaded)
    cache().entries.insert(std::move(kv));
  return true;
}

bool save(const std::string& path) {
  std::ofstream out(path);
  if (!out)
    return false;
  std::shared_lock lock(cache().mu);
  for (const auto& [key, f] : cache().entries) {
    out << key.base << ' ' << key.d;
    for (const auto& [p, e] : f.factors())
      out << ' ' << p.get_str() << '^' << e;
    out << '\n';
  }
  return static_cast<bool>(out);
}

}  // namespace factor_cache

}  // namespace coprimemax
