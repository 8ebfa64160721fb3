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

// Finite simple group descriptors and exact order formulas for the groups
// and subgroup shapes the classifier works with.

#ifndef COPRIMEMAX_GROUP_ORDERS_HPP_
#define COPRIMEMAX_GROUP_ORDERS_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "coprimemax/arith.hpp"

namespace coprimemax {

enum class SporadicName {
  M11, M12, M22, M23, M24, J1, J2, J3, J4, HS, McL, He, Ru, Suz, ON,
  Co3, Co2, Co1, Fi22, Fi23, Fi24p, HN, Ly, Th, B, M,
};

enum class OrthogonalKind { Circ, Plus, Minus };

enum class ExceptionalKind { G2, F4, E6, E7, E8, E6Twisted, D4Triality, B2Suzuki, G2Ree, F4Ree };

struct Alternating {
  unsigned degree;
};
struct Sporadic {
  SporadicName name;
};
struct Linear {
  unsigned n;
  std::uint64_t q;
};
struct Unitary {
  unsigned n;
  std::uint64_t q;
};
struct Symplectic {
  unsigned dim;
  std::uint64_t q;
};
struct Orthogonal {
  OrthogonalKind kind;
  unsigned dim;
  std::uint64_t q;
};
struct Exceptional {
  ExceptionalKind kind;
  std::uint64_t q;
};

using GroupSpec =
    std::variant<Alternating, Sporadic, Linear, Unitary, Symplectic, Orthogonal, Exceptional>;

/// Parameters that do not describe a nonabelian simple group (or lie outside
/// the standard ranges, e.g. PSp_2 or POmega_6).
class NonSimpleGroup : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed group spec text.
class SpecSyntaxError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

void validate_simple(const GroupSpec& g);
bool is_simple(const GroupSpec& g);

/// Spec text in the CLI grammar: "A13", "M23", "PSL(5,2)", "POmega(+,8,3)",
/// "2E6(2)". Parses strictly; does not check simplicity.
GroupSpec parse_group_spec(std::string_view text);
std::string canonical_name(const GroupSpec& g);

std::string_view sporadic_name(SporadicName s);
std::optional<SporadicName> sporadic_from_name(std::string_view s);
std::string_view exceptional_name(ExceptionalKind k);

/// |g|; validates simplicity first (throws NonSimpleGroup).
FactoredInt order_simple(const GroupSpec& g);

// Raw order formulas. These do not check simplicity, so they also serve the
// structure-string parser (S_n, 2F4(2), PSL_3(2), ...).
FactoredInt order_alternating(unsigned n);  // n!/2, n >= 2
FactoredInt order_symmetric(unsigned n);    // n!
FactoredInt order_sporadic(SporadicName s);
FactoredInt order_psl(unsigned n, std::uint64_t q);
FactoredInt order_psu(unsigned n, std::uint64_t q);
FactoredInt order_psp(unsigned dim, std::uint64_t q);
FactoredInt order_pomega(OrthogonalKind kind, unsigned dim, std::uint64_t q);
FactoredInt order_exceptional(ExceptionalKind kind, std::uint64_t q);

/// (q^n - e) / ((q - e)(q - e, n)) . n with e = +1 for PSL_n(q), -1 for
/// PSU_n(q). n must be an odd prime; the result is asserted odd.
FactoredInt order_torus_normalizer(unsigned n, std::uint64_t q, Sign eps);

/// q(q-1)/2, the Borel subgroup E_q:(q-1)/2 of PSL_2(q), q odd.
FactoredInt order_psl2_parabolic(std::uint64_t q);

/// Number of m-dimensional subspaces of F_q^n.
FactoredInt gaussian_binomial(unsigned n, unsigned m, std::uint64_t q);

/// Stabilizer of an m-subspace in PSL_n(q), 1 <= m <= n-1:
///   q^(n(n-1)/2) (q-1)/(q-1,n) prod_{i=2}^{m}(q^i-1) prod_{i=2}^{n-m}(q^i-1)
/// and checked against |PSL_n(q)| / [n choose m]_q. The q-exponent is
/// n(n-1)/2.
FactoredInt order_psl_subspace_stab(unsigned n, std::uint64_t q, unsigned m);

/// Stabilizer of a non-degenerate m-subspace in PSU_n(q), 1 <= m <= (n-1)/2.
FactoredInt order_psu_nondeg_stab(unsigned n, std::uint64_t q, unsigned m);

/// Stabilizer of a totally singular m-subspace in PSU_n(q), 1 <= m <= (n-1)/2.
FactoredInt order_psu_totsing_stab(unsigned n, std::uint64_t q, unsigned m);

/// Orders of the small named groups: "A4", "S4", "A5", "A<n>", "S<n>",
/// "D<n>" (dihedral of order n), "Q8", and sporadic names ("M22", "HS").
/// Throws std::invalid_argument for unknown names.
FactoredInt small_group_order(std::string_view name);

}  // namespace coprimemax

#endif  // COPRIMEMAX_GROUP_ORDERS_HPP_
