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

#include "coprimemax/group_orders.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace coprimemax {

namespace {

FactoredInt u64(std::uint64_t v) { return FactoredInt::of(v); }

FactoredInt q_pow(std::uint64_t q, unsigned long a) {
  return fi_pow(u64(q), static_cast<unsigned>(a));
}

// q^i - (-1)^i
FactoredInt unitary_term(std::uint64_t q, unsigned i) {
  return factor_q_power(q, i, i % 2 == 0 ? Sign::Minus : Sign::Plus);
}

FactoredInt factorial(unsigned n) {
  FactoredInt::Map m;
  for (unsigned p = 2; p <= n; ++p) {
    if (!is_prime(std::uint64_t{p}))
      continue;
    unsigned e = 0;
    for (unsigned long pk = p; pk <= n; pk *= p)
      e += static_cast<unsigned>(n / pk);
    m.emplace(p, e);
  }
  return FactoredInt(std::move(m), FactoredInt::Unchecked{});
}

void require_prime_power(std::uint64_t q, const char* who) {
  if (!PrimePower::is_prime_power(q))
    throw std::invalid_argument(std::string(who) + ": q = " + std::to_string(q) +
                                " is not a prime power");
}

bool is_odd_power_of(std::uint64_t q, std::uint64_t p) {
  if (!PrimePower::is_prime_power(q))
    return false;
  PrimePower pp = PrimePower::of(q);
  return pp.p == p && pp.e % 2 == 1;
}

std::string u(std::uint64_t v) { return std::to_string(v); }

}  // namespace

// ---------------------------------------------------------------------------
// Raw order formulas

FactoredInt order_alternating(unsigned n) {
  if (n < 2)
    throw std::invalid_argument("order_alternating: degree must be at least 2");
  return fi_div(factorial(n), u64(2));
}

FactoredInt order_symmetric(unsigned n) { return factorial(n); }

FactoredInt order_psl(unsigned n, std::uint64_t q) {
  require_prime_power(q, "order_psl");
  if (n < 2)
    throw std::invalid_argument("order_psl: n must be at least 2");
  FactoredInt r = q_pow(q, std::uint64_t{n} * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i)
    r = fi_mul(r, factor_q_power(q, i, Sign::Minus));
  return fi_div(r, u64(gcd_u64(n, q - 1)));
}

FactoredInt order_psu(unsigned n, std::uint64_t q) {
  require_prime_power(q, "order_psu");
  if (n < 2)
    throw std::invalid_argument("order_psu: n must be at least 2");
  FactoredInt r = q_pow(q, std::uint64_t{n} * (n - 1) / 2);
  for (unsigned i = 2; i <= n; ++i)
    r = fi_mul(r, unitary_term(q, i));
  return fi_div(r, u64(gcd_u64(n, q + 1)));
}

FactoredInt order_psp(unsigned dim, std::uint64_t q) {
  require_prime_power(q, "order_psp");
  if (dim < 2 || dim % 2 != 0)
    throw std::invalid_argument("order_psp: dimension must be even");
  unsigned m = dim / 2;
  FactoredInt r = q_pow(q, std::uint64_t{m} * m);
  for (unsigned i = 1; i <= m; ++i)
    r = fi_mul(r, factor_q_power(q, 2 * i, Sign::Minus));
  return fi_div(r, u64(gcd_u64(2, q - 1)));
}

FactoredInt order_pomega(OrthogonalKind kind, unsigned dim, std::uint64_t q) {
  require_prime_power(q, "order_pomega");
  if (kind == OrthogonalKind::Circ) {
    if (dim < 3 || dim % 2 == 0)
      throw std::invalid_argument("order_pomega: odd dimension required");
    return order_psp(dim - 1, q);  // same order formula as PSp_{dim-1}(q)
  }
  if (dim < 2 || dim % 2 != 0)
    throw std::invalid_argument("order_pomega: even dimension required");
  unsigned m = dim / 2;
  Sign s = kind == OrthogonalKind::Plus ? Sign::Minus : Sign::Plus;
  FactoredInt r = fi_mul(q_pow(q, std::uint64_t{m} * (m - 1)), factor_q_power(q, m, s));
  for (unsigned i = 1; i < m; ++i)
    r = fi_mul(r, factor_q_power(q, 2 * i, Sign::Minus));
  // (4, q^m -+ 1)
  std::uint64_t qm4 = 1;
  for (unsigned i = 0; i < m; ++i)
    qm4 = qm4 * (q % 4) % 4;
  std::uint64_t v = (kind == OrthogonalKind::Plus ? qm4 + 3 : qm4 + 1) % 4;
  return fi_div(r, u64(gcd_u64(4, v)));
}

FactoredInt order_exceptional(ExceptionalKind kind, std::uint64_t q) {
  require_prime_power(q, "order_exceptional");
  auto minus = [q](unsigned i) { return factor_q_power(q, i, Sign::Minus); };
  auto plus = [q](unsigned i) { return factor_q_power(q, i, Sign::Plus); };
  auto prod = [](std::initializer_list<FactoredInt> xs) {
    FactoredInt r;
    for (const auto& x : xs)
      r = fi_mul(r, x);
    return r;
  };
  switch (kind) {
    case ExceptionalKind::G2:
      return prod({q_pow(q, 6), minus(6), minus(2)});
    case ExceptionalKind::F4:
      return prod({q_pow(q, 24), minus(12), minus(8), minus(6), minus(2)});
    case ExceptionalKind::E6:
      return fi_div(prod({q_pow(q, 36), minus(12), minus(9), minus(8), minus(6), minus(5), minus(2)}),
                    u64(gcd_u64(3, q - 1)));
    case ExceptionalKind::E6Twisted:
      return fi_div(prod({q_pow(q, 36), minus(12), plus(9), minus(8), minus(6), plus(5), minus(2)}),
                    u64(gcd_u64(3, q + 1)));
    case ExceptionalKind::E7:
      return fi_div(prod({q_pow(q, 63), minus(18), minus(14), minus(12), minus(10), minus(8),
                          minus(6), minus(2)}),
                    u64(gcd_u64(2, q - 1)));
    case ExceptionalKind::E8:
      return prod({q_pow(q, 120), minus(30), minus(24), minus(20), minus(18), minus(14), minus(12),
                   minus(8), minus(2)});
    case ExceptionalKind::D4Triality:
      // q^8 + q^4 + 1 = (q^12 - 1) / (q^4 - 1)
      return prod({q_pow(q, 12), fi_div(minus(12), minus(4)), minus(6), minus(2)});
    case ExceptionalKind::B2Suzuki:
      return prod({q_pow(q, 2), plus(2), minus(1)});
    case ExceptionalKind::G2Ree:
      return prod({q_pow(q, 3), plus(3), minus(1)});
    case ExceptionalKind::F4Ree:
      return prod({q_pow(q, 12), plus(6), minus(4), plus(3), minus(1)});
  }
  throw std::logic_error("order_exceptional: unknown family");
}

namespace {

FactoredInt raw_order(const GroupSpec& g) {
  return std::visit(
      [](const auto& x) -> FactoredInt {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Alternating>)
          return order_alternating(x.degree);
        else if constexpr (std::is_same_v<T, Sporadic>)
          return order_sporadic(x.name);
        else if constexpr (std::is_same_v<T, Linear>)
          return order_psl(x.n, x.q);
        else if constexpr (std::is_same_v<T, Unitary>)
          return order_psu(x.n, x.q);
        else if constexpr (std::is_same_v<T, Symplectic>)
          return order_psp(x.dim, x.q);
        else if constexpr (std::is_same_v<T, Orthogonal>)
          return order_pomega(x.kind, x.dim, x.q);
        else
          return order_exceptional(x.kind, x.q);
      },
      g);
}

}  // namespace

// ---------------------------------------------------------------------------
// Simplicity

void validate_simple(const GroupSpec& g) {
  auto fail = [&](const std::string& why) {
    throw NonSimpleGroup(canonical_name(g) + ": " + why);
  };
  auto need_pp = [&](std::uint64_t q) {
    if (!PrimePower::is_prime_power(q))
      fail("q = " + u(q) + " is not a prime power");
  };
  std::visit(
      [&](const auto& x) {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Alternating>) {
          if (x.degree < 5)
            fail("alternating groups of degree below 5 are not simple");
        } else if constexpr (std::is_same_v<T, Sporadic>) {
        } else if constexpr (std::is_same_v<T, Linear>) {
          need_pp(x.q);
          if (x.n < 2)
            fail("n must be at least 2");
          if (x.n == 2 && x.q <= 3)
            fail("PSL_2(2) and PSL_2(3) are solvable");
        } else if constexpr (std::is_same_v<T, Unitary>) {
          need_pp(x.q);
          if (x.n < 3)
            fail("unitary groups need n >= 3 (PSU_2(q) is PSL_2(q))");
          if (x.n == 3 && x.q == 2)
            fail("PSU_3(2) is solvable");
        } else if constexpr (std::is_same_v<T, Symplectic>) {
          need_pp(x.q);
          if (x.dim < 4 || x.dim % 2 != 0)
            fail("symplectic dimension must be even and at least 4");
          if (x.dim == 4 && x.q == 2)
            fail("PSp_4(2) is isomorphic to S_6");
        } else if constexpr (std::is_same_v<T, Orthogonal>) {
          need_pp(x.q);
          if (x.kind == OrthogonalKind::Circ) {
            if (x.dim < 7 || x.dim % 2 == 0)
              fail("odd-dimensional orthogonal groups need dimension >= 7");
            if (x.q % 2 == 0)
              fail("odd-dimensional orthogonal groups need q odd (use PSp)");
          } else if (x.dim < 8 || x.dim % 2 != 0) {
            fail("even-dimensional orthogonal groups need dimension >= 8");
          }
        } else {
          need_pp(x.q);
          switch (x.kind) {
            case ExceptionalKind::G2:
              if (x.q == 2)
                fail("G_2(2) is not simple");
              break;
            case ExceptionalKind::B2Suzuki:
              if (!is_odd_power_of(x.q, 2) || x.q < 8)
                fail("Suzuki groups need q = 2^(2k+1) >= 8");
              break;
            case ExceptionalKind::G2Ree:
              if (!is_odd_power_of(x.q, 3) || x.q < 27)
                fail("Ree groups 2G2 need q = 3^(2k+1) >= 27");
              break;
            case ExceptionalKind::F4Ree:
              if (!is_odd_power_of(x.q, 2) || x.q < 8)
                fail("Ree groups 2F4 need q = 2^(2k+1) >= 8 (2F4(2) is not simple)");
              break;
            default:
              break;
          }
        }
      },
      g);
}

bool is_simple(const GroupSpec& g) {
  try {
    validate_simple(g);
    return true;
  } catch (const NonSimpleGroup&) {
    return false;
  }
}

FactoredInt order_simple(const GroupSpec& g) {
  validate_simple(g);
  return raw_order(g);
}

// ---------------------------------------------------------------------------
// Names

namespace {

constexpr std::pair<ExceptionalKind, std::string_view> kExceptionalNames[] = {
    {ExceptionalKind::G2, "G2"},          {ExceptionalKind::F4, "F4"},
    {ExceptionalKind::E6, "E6"},          {ExceptionalKind::E7, "E7"},
    {ExceptionalKind::E8, "E8"},          {ExceptionalKind::E6Twisted, "2E6"},
    {ExceptionalKind::D4Triality, "3D4"}, {ExceptionalKind::B2Suzuki, "2B2"},
    {ExceptionalKind::G2Ree, "2G2"},      {ExceptionalKind::F4Ree, "2F4"},
};

char orth_char(OrthogonalKind k) {
  switch (k) {
    case OrthogonalKind::Plus:
      return '+';
    case OrthogonalKind::Minus:
      return '-';
    default:
      return 'o';
  }
}

}  // namespace

std::string_view exceptional_name(ExceptionalKind k) {
  for (const auto& [kind, name] : kExceptionalNames)
    if (kind == k)
      return name;
  return "?";
}

std::string canonical_name(const GroupSpec& g) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Alternating>)
          return "A" + std::to_string(x.degree);
        else if constexpr (std::is_same_v<T, Sporadic>)
          return std::string(sporadic_name(x.name));
        else if constexpr (std::is_same_v<T, Linear>)
          return "PSL(" + std::to_string(x.n) + "," + u(x.q) + ")";
        else if constexpr (std::is_same_v<T, Unitary>)
          return "PSU(" + std::to_string(x.n) + "," + u(x.q) + ")";
        else if constexpr (std::is_same_v<T, Symplectic>)
          return "PSp(" + std::to_string(x.dim) + "," + u(x.q) + ")";
        else if constexpr (std::is_same_v<T, Orthogonal>)
          return std::string("POmega(") + orth_char(x.kind) + "," + std::to_string(x.dim) + "," +
                 u(x.q) + ")";
        else
          return std::string(exceptional_name(x.kind)) + "(" + u(x.q) + ")";
      },
      g);
}

namespace {

constexpr std::uint64_t kMaxQ = std::uint64_t{1} << 32;
constexpr unsigned kMaxDim = 1000;

std::uint64_t parse_number(std::string_view s, std::string_view whole, std::uint64_t limit) {
  if (s.empty() || (s.size() > 1 && s.front() == '0'))
    throw SpecSyntaxError("bad number '" + std::string(s) + "' in '" + std::string(whole) + "'");
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw SpecSyntaxError("bad number '" + std::string(s) + "' in '" + std::string(whole) + "'");
  if (v > limit)
    throw SpecSyntaxError("number " + std::string(s) + " out of range in '" + std::string(whole) +
                          "'");
  return v;
}

// Splits "NAME(a,b,c)" into NAME and its arguments; false if no parentheses.
bool split_call(std::string_view s, std::string_view& head, std::vector<std::string_view>& args) {
  auto open = s.find('(');
  if (open == std::string_view::npos)
    return false;
  if (s.back() != ')')
    throw SpecSyntaxError("expected ')' at end of '" + std::string(s) + "'");
  head = s.substr(0, open);
  std::string_view inner = s.substr(open + 1, s.size() - open - 2);
  args.clear();
  std::size_t start = 0;
  for (std::size_t i = 0; i <= inner.size(); ++i) {
    if (i == inner.size() || inner[i] == ',') {
      args.push_back(inner.substr(start, i - start));
      start = i + 1;
    }
  }
  return true;
}

}  // namespace

GroupSpec parse_group_spec(std::string_view text) {
  std::string compact;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      compact += c;
  std::string_view s = compact;
  if (s.empty())
    throw SpecSyntaxError("empty group spec");

  if (auto sp = sporadic_from_name(s))
    return Sporadic{*sp};

  std::string_view head;
  std::vector<std::string_view> args;
  if (!split_call(s, head, args)) {
    if (s.size() >= 2 && s[0] == 'A' && std::isdigit(static_cast<unsigned char>(s[1])))
      return Alternating{static_cast<unsigned>(parse_number(s.substr(1), text, kMaxDim))};
    throw SpecSyntaxError("unknown group '" + std::string(text) + "'");
  }
  auto arity = [&](std::size_t k) {
    if (args.size() != k)
      throw SpecSyntaxError("'" + std::string(head) + "' takes " + std::to_string(k) +
                            " arguments in '" + std::string(text) + "'");
  };
  auto dim = [&](std::size_t i) {
    return static_cast<unsigned>(parse_number(args[i], text, kMaxDim));
  };
  auto q = [&](std::size_t i) { return parse_number(args[i], text, kMaxQ); };

  if (head == "PSL") {
    arity(2);
    return Linear{dim(0), q(1)};
  }
  if (head == "PSU") {
    arity(2);
    return Unitary{dim(0), q(1)};
  }
  if (head == "PSp") {
    arity(2);
    return Symplectic{dim(0), q(1)};
  }
  if (head == "POmega") {
    arity(3);
    OrthogonalKind k;
    if (args[0] == "+")
      k = OrthogonalKind::Plus;
    else if (args[0] == "-")
      k = OrthogonalKind::Minus;
    else if (args[0] == "o")
      k = OrthogonalKind::Circ;
    else
      throw SpecSyntaxError("POmega type must be +, - or o in '" + std::string(text) + "'");
    return Orthogonal{k, dim(1), q(2)};
  }
  for (const auto& [kind, name] : kExceptionalNames) {
    if (head == name) {
      arity(1);
      return Exceptional{kind, q(0)};
    }
  }
  throw SpecSyntaxError("unknown group family '" + std::string(head) + "' in '" +
                        std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Subgroup orders

FactoredInt order_torus_normalizer(unsigned n, std::uint64_t q, Sign eps) {
  if (n < 3 || !is_prime(std::uint64_t{n}))
    throw std::invalid_argument("order_torus_normalizer: n = " + std::to_string(n) +
                                " is not an odd prime");
  require_prime_power(q, "order_torus_normalizer");
  // eps = + : (q^n - 1)/(q - 1);  eps = - : (q^n + 1)/(q + 1)
  Sign s = eps == Sign::Plus ? Sign::Minus : Sign::Plus;
  FactoredInt r = fi_div(factor_q_power(q, n, s), factor_q_power(q, 1, s));
  std::uint64_t q_minus_eps = eps == Sign::Plus ? q - 1 : q + 1;
  if (q_minus_eps % n == 0)
    r = fi_div(r, u64(n));
  r = fi_mul(r, u64(n));
  if (!r.is_odd())
    throw std::logic_error("order_torus_normalizer: even order");
  return r;
}

FactoredInt order_psl2_parabolic(std::uint64_t q) {
  require_prime_power(q, "order_psl2_parabolic");
  if (q % 2 == 0 || q < 5)
    throw std::invalid_argument("order_psl2_parabolic: q must be odd and at least 5");
  return fi_mul(u64(q), u64((q - 1) / 2));
}

FactoredInt gaussian_binomial(unsigned n, unsigned m, std::uint64_t q) {
  if (m > n)
    throw std::invalid_argument("gaussian_binomial: m > n");
  if (q < 2)
    throw std::invalid_argument("gaussian_binomial: q must be at least 2");
  FactoredInt num, den;
  for (unsigned i = n - m + 1; i <= n; ++i)
    num = fi_mul(num, factor_q_power(q, i, Sign::Minus));
  for (unsigned i = 1; i <= m; ++i)
    den = fi_mul(den, factor_q_power(q, i, Sign::Minus));
  return fi_div(num, den);
}

FactoredInt order_psl_subspace_stab(unsigned n, std::uint64_t q, unsigned m) {
  require_prime_power(q, "order_psl_subspace_stab");
  if (n < 2 || m < 1 || m > n - 1)
    throw std::out_of_range("order_psl_subspace_stab: need 1 <= m <= n-1, got m = " +
                            std::to_string(m) + ", n = " + std::to_string(n));
  FactoredInt r = fi_div(fi_mul(q_pow(q, std::uint64_t{n} * (n - 1) / 2), u64(q - 1)),
                         u64(gcd_u64(q - 1, n)));
  for (unsigned i = 2; i <= m; ++i)
    r = fi_mul(r, factor_q_power(q, i, Sign::Minus));
  for (unsigned i = 2; i <= n - m; ++i)
    r = fi_mul(r, factor_q_power(q, i, Sign::Minus));
  if (fi_mul(r, gaussian_binomial(n, m, q)) != order_psl(n, q))
    throw std::logic_error("order_psl_subspace_stab: orbit-stabilizer identity failed");
  return r;
}

namespace {
void check_unitary_m(const char* who, unsigned n, unsigned m) {
  if (n < 3 || m < 1 || 2 * m > n - 1)
    throw std::out_of_range(std::string(who) + ": need 1 <= m <= (n-1)/2, got m = " +
                            std::to_string(m) + ", n = " + std::to_string(n));
}
}  // namespace

FactoredInt order_psu_nondeg_stab(unsigned n, std::uint64_t q, unsigned m) {
  require_prime_power(q, "order_psu_nondeg_stab");
  check_unitary_m("order_psu_nondeg_stab", n, m);
  std::uint64_t e = (std::uint64_t{m} * m + std::uint64_t{n - m} * (n - m) - n) / 2;
  FactoredInt r = fi_div(fi_mul(q_pow(q, e), u64(q + 1)), u64(gcd_u64(q + 1, n)));
  for (unsigned i = 2; i <= m; ++i)
    r = fi_mul(r, unitary_term(q, i));
  for (unsigned i = 2; i <= n - m; ++i)
    r = fi_mul(r, unitary_term(q, i));
  return r;
}

FactoredInt order_psu_totsing_stab(unsigned n, std::uint64_t q, unsigned m) {
  require_prime_power(q, "order_psu_totsing_stab");
  check_unitary_m("order_psu_totsing_stab", n, m);
  FactoredInt r = fi_div(fi_mul(q_pow(q, std::uint64_t{n} * (n - 1) / 2),
                                factor_q_power(q, 2, Sign::Minus)),
                         u64(gcd_u64(q + 1, n)));
  for (unsigned i = 2; i <= m; ++i)
    r = fi_mul(r, factor_q_power(q, 2 * i, Sign::Minus));
  for (unsigned i = 2; i <= n - 2 * m; ++i)
    r = fi_mul(r, unitary_term(q, i));
  return r;
}

FactoredInt small_group_order(std::string_view name) {
  auto numeric_tail = [&](std::string_view tail) -> std::optional<unsigned> {
    if (tail.empty())
      return std::nullopt;
    for (char c : tail)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        return std::nullopt;
    return static_cast<unsigned>(parse_number(tail, name, kMaxDim));
  };
  if (auto sp = sporadic_from_name(name))
    return order_sporadic(*sp);
  if (name == "Q8")
    return u64(8);
  if (name.size() >= 2) {
    auto n = numeric_tail(name.substr(1));
    if (n) {
      switch (name[0]) {
        case 'A':
          return order_alternating(*n);
        case 'S':
          return order_symmetric(*n);
        case 'D':
          if (*n < 2 || *n % 2 != 0)
            throw std::invalid_argument("dihedral order must be even: " + std::string(name));
          return u64(*n);
        case 'C':
          if (*n < 1)
            break;
          return u64(*n);
        default:
          break;
      }
    }
  }
  try {
    return raw_order(parse_group_spec(name));
  } catch (const SpecSyntaxError&) {
    throw std::invalid_argument("unknown group name '" + std::string(name) + "'");
  }
}

}  // namespace coprimemax
