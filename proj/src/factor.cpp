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

// Integer factorization: trial division, Brent's variant of Pollard rho and
// the elliptic curve method on Montgomery curves (Suyama parametrization).
// Every random choice is a fixed sequence so results are reproducible.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "coprimemax/arith.hpp"

namespace coprimemax {
namespace {

constexpr std::uint32_t kTrialBound = 1000000;

std::vector<std::uint32_t> sieve_primes(std::uint32_t bound) {
  std::vector<bool> composite(bound + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= bound; ++i) {
    if (composite[i])
      continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t{i} * i; j <= bound; j += i)
      composite[j] = true;
  }
  return primes;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = sieve_primes(kTrialBound);
  return primes;
}

void add_factor(FactoredInt::Map& out, const BigInt& p, unsigned e) {
  out[p] += e;
}

// --- Pollard rho (Brent) ----------------------------------------------------

BigInt rho_brent(const BigInt& n, unsigned long c, unsigned long max_steps) {
  BigInt y = 2, x, ys, q = 1, g = 1, t;
  unsigned long r = 1, steps = 0;
  constexpr unsigned long kBatch = 128;
  auto f = [&](BigInt& v) {
    v *= v;
    v += c;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
  };
  while (g == 1) {
    x = y;
    for (unsigned long i = 0; i < r; ++i)
      f(y);
    unsigned long k = 0;
    while (k < r && g == 1) {
      ys = y;
      unsigned long lim = std::min(kBatch, r - k);
      for (unsigned long i = 0; i < lim; ++i) {
        f(y);
        t = x - y;
        q *= t;
        mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += lim;
      steps += lim;
    }
    r *= 2;
    if (steps > max_steps && g == 1)
      return 1;
  }
  if (g == n) {
    // batch overshot; replay one step at a time
    do {
      f(ys);
      t = x - ys;
      mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

// --- ECM ----------------------------------------------------------------------

struct XZ {
  BigInt x, z;
};

class Curve {
public:
  Curve(const BigInt& n, const BigInt& a24) : n_(n), a24_(a24) {}

  void reduce(BigInt& v) const { mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n_.get_mpz_t()); }

  XZ dbl(const XZ& p) const {
    BigInt s = p.x + p.z, d = p.x - p.z;
    s *= s;
    reduce(s);
    d *= d;
    reduce(d);
    BigInt t = s - d;  // 4xz
    XZ r;
    r.x = s * d;
    reduce(r.x);
    BigInt w = a24_ * t;
    w += d;
    reduce(w);
    r.z = t * w;
    reduce(r.z);
    return r;
  }

  // p + q given diff = p - q
  XZ add(const XZ& p, const XZ& q, const XZ& diff) const {
    BigInt u = (p.x - p.z) * (q.x + q.z);
    reduce(u);
    BigInt v = (p.x + p.z) * (q.x - q.z);
    reduce(v);
    BigInt s = u + v, d = u - v;
    s *= s;
    reduce(s);
    d *= d;
    reduce(d);
    XZ r;
    r.x = diff.z * s;
    reduce(r.x);
    r.z = diff.x * d;
    reduce(r.z);
    return r;
  }

  XZ mul(const BigInt& k, const XZ& p) const {
    if (k == 1)
      return p;
    XZ r0 = p, r1 = dbl(p);
    for (long bit = static_cast<long>(mpz_sizeinbase(k.get_mpz_t(), 2)) - 2; bit >= 0; --bit) {
      if (mpz_tstbit(k.get_mpz_t(), static_cast<mp_bitcnt_t>(bit))) {
        r0 = add(r1, r0, p);
        r1 = dbl(r1);
      } else {
        r1 = add(r0, r1, p);
        r0 = dbl(r0);
      }
    }
    return r0;
  }

private:
  const BigInt& n_;
  BigInt a24_;
};

const std::vector<bool>& prime_bitmap(std::uint64_t bound) {
  thread_local std::vector<bool> bitmap;
  if (bitmap.size() <= bound) {
    std::uint64_t size = bound + 1;
    bitmap.assign(size, true);
    bitmap[0] = false;
    if (size > 1)
      bitmap[1] = false;
    for (std::uint64_t i = 2; i * i < size; ++i)
      if (bitmap[i])
        for (std::uint64_t j = i * i; j < size; j += i)
          bitmap[j] = false;
  }
  return bitmap;
}

// One curve; returns a factor in (1, n) or 1 on failure.
BigInt ecm_curve(const BigInt& n, unsigned long sigma, std::uint64_t b1, std::uint64_t b2) {
  BigInt s = static_cast<unsigned long>(sigma);
  BigInt u = s * s - 5, v = 4 * s;
  BigInt u3 = u * u * u, v3 = v * v * v;
  BigInt vmu = v - u;
  BigInt num = vmu * vmu * vmu * (3 * u + v);
  BigInt den = 16 * u3 * v;
  mpz_mod(num.get_mpz_t(), num.get_mpz_t(), n.get_mpz_t());
  mpz_mod(den.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
  BigInt inv, g;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t()) == 0) {
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
    return (g > 1 && g < n) ? g : BigInt(1);
  }
  BigInt a24 = num * inv;
  mpz_mod(a24.get_mpz_t(), a24.get_mpz_t(), n.get_mpz_t());
  Curve curve(n, a24);
  XZ q{u3 % n, v3 % n};

  // stage 1
  const auto& primes = small_primes();
  for (std::uint32_t p : primes) {
    if (p > b1)
      break;
    std::uint64_t pe = p;
    while (pe * p <= b1)
      pe *= p;
    q = curve.mul(BigInt(static_cast<unsigned long>(pe)), q);
  }
  mpz_gcd(g.get_mpz_t(), q.z.get_mpz_t(), n.get_mpz_t());
  if (g > 1)
    return g < n ? g : BigInt(1);

  // stage 2: baby steps j*Q (j odd, coprime to D), giant steps k*D*Q
  constexpr unsigned kD = 2310;
  std::vector<BigInt> baby_x;  // normalized to z = 1
  std::vector<unsigned> baby_j;
  {
    XZ q2 = curve.dbl(q);
    XZ prev = q, cur = curve.add(q2, q, q);  // Q, 3Q
    std::vector<XZ> pts{prev};
    for (unsigned j = 5; j < kD / 2; j += 2) {
      XZ next = curve.add(cur, q2, prev);
      prev = cur;
      cur = next;
      pts.push_back(prev);
    }
    pts.push_back(cur);
    for (unsigned idx = 0; idx < pts.size(); ++idx) {
      unsigned j = 2 * idx + 1;
      if (std::gcd(j, kD) != 1)
        continue;
      BigInt zi;
      if (mpz_invert(zi.get_mpz_t(), pts[idx].z.get_mpz_t(), n.get_mpz_t()) == 0) {
        mpz_gcd(g.get_mpz_t(), pts[idx].z.get_mpz_t(), n.get_mpz_t());
        return (g > 1 && g < n) ? g : BigInt(1);
      }
      BigInt x = pts[idx].x * zi;
      mpz_mod(x.get_mpz_t(), x.get_mpz_t(), n.get_mpz_t());
      baby_x.push_back(x);
      baby_j.push_back(j);
    }
  }
  const auto& isprime = prime_bitmap(b2 + kD);
  std::uint64_t k0 = std::max<std::uint64_t>(1, b1 / kD);
  std::uint64_t k1 = b2 / kD + 1;
  XZ step = curve.mul(BigInt(static_cast<unsigned long>(kD)), q);
  XZ r_prev = curve.mul(BigInt(static_cast<unsigned long>((k0 - 1) * kD)), q);
  XZ r = curve.mul(BigInt(static_cast<unsigned long>(k0 * kD)), q);
  if (k0 == 1)
    r_prev = XZ{0, 0};  // unused: r_prev only feeds add() from k0 + 1 on
  BigInt acc = 1, t;
  for (std::uint64_t k = k0; k <= k1; ++k) {
    std::uint64_t base = k * kD;
    for (std::size_t i = 0; i < baby_j.size(); ++i) {
      std::uint64_t lo = base - baby_j[i], hi = base + baby_j[i];
      bool use = (lo > b1 && lo <= b2 && isprime[lo]) || (hi > b1 && hi <= b2 && isprime[hi]);
      if (!use)
        continue;
      t = baby_x[i] * r.z;
      t = r.x - t;
      acc *= t;
      mpz_mod(acc.get_mpz_t(), acc.get_mpz_t(), n.get_mpz_t());
    }
    XZ next = (k == k0 && k0 == 1) ? curve.dbl(r) : curve.add(r, step, r_prev);
    r_prev = r;
    r = next;
  }
  mpz_gcd(g.get_mpz_t(), acc.get_mpz_t(), n.get_mpz_t());
  return (g > 1 && g < n) ? g : BigInt(1);
}

struct EcmLevel {
  std::uint64_t b1;
  unsigned curves;
};

// Roughly the optimal parameters for factors of 15, 20, 25, 30, 35 digits.
constexpr EcmLevel kLevels[] = {
    {2000, 25}, {11000, 90}, {50000, 300}, {250000, 700}, {1000000, 1800}};

BigInt find_factor(const BigInt& n) {
  if (mpz_even_p(n.get_mpz_t()))
    return 2;
  for (unsigned long c = 1; c <= 3; ++c) {
    BigInt d = rho_brent(n, c, 1ul << 16);
    if (d > 1 && d < n)
      return d;
  }
  unsigned long sigma = 6;
  for (const EcmLevel& level : kLevels) {
    for (unsigned i = 0; i < level.curves; ++i) {
      BigInt d = ecm_curve(n, sigma++, level.b1, 100 * level.b1);
      if (d > 1)
        return d;
    }
  }
  // Out of budget; a long rho run is the last resort.
  for (unsigned long c = 5;; ++c) {
    BigInt d = rho_brent(n, c, ~0ul);
    if (d > 1 && d < n)
      return d;
  }
}

void factor_composite(const BigInt& n, unsigned mult, FactoredInt::Map& out) {
  if (n == 1)
    return;
  if (is_prime(n)) {
    add_factor(out, n, mult);
    return;
  }
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long e = mpz_sizeinbase(n.get_mpz_t(), 2); e >= 2; --e) {
      BigInt r;
      if (mpz_root(r.get_mpz_t(), n.get_mpz_t(), e) != 0) {
        factor_composite(r, mult * static_cast<unsigned>(e), out);
        return;
      }
    }
  }
  BigInt d = find_factor(n);
  BigInt rest = n / d;
  FactoredInt::Map local;
  factor_composite(d, 1, local);
  factor_composite(rest, 1, local);
  for (const auto& [p, e] : local)
    add_factor(out, p, e * mult);
}

}  // namespace

FactoredInt factorize(const BigInt& v) {
  if (v < 1)
    throw std::invalid_argument("factorize: value must be positive");
  FactoredInt::Map out;
  BigInt n = v;
  for (std::uint32_t p : small_primes()) {
    if (mpz_cmp_ui(n.get_mpz_t(), static_cast<unsigned long>(p) * p) < 0)
      break;
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      unsigned e = 0;
      do {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
        ++e;
      } while (mpz_divisible_ui_p(n.get_mpz_t(), p));
      add_factor(out, p, e);
    }
  }
  factor_composite(n, 1, out);
  return FactoredInt(std::move(out), FactoredInt::Unchecked{});
}

}  // namespace coprimemax
