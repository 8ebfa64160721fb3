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

// Parser for ATLAS-style structure strings such as "2^{9+16}.PSp_8(2)" or
// "(S_6 × PSL_3(4):2).2", and exact orders of the groups they describe.
//
// Grammar, loosest binding first:
//
//   product    := extension ( ("×" | "\times") extension )*
//   extension  := prefixed ( ("." | ":" | "^.") prefixed )*      left-assoc
//   prefixed   := INT "^." prefixed          cover prefix, e.g. 3^.A_6
//               | INT primary                cover prefix, e.g. 2S_4
//               | primary
//   primary    := "(" product ")" | "{" product "}" | "[" order "]"
//               | INT "^" exponents | INT ("_" label)? | NAME
//
// Only orders are modelled. "." and ":" and "^." are kept apart in the tree
// but all three multiply orders. D_n is the dihedral group of order n.

#ifndef COPRIMEMAX_ATLAS_HPP_
#define COPRIMEMAX_ATLAS_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "coprimemax/arith.hpp"

namespace coprimemax {

class StructureParseError : public std::runtime_error {
public:
  StructureParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

struct StructureExpr {
  enum class Kind { Named, Integer, PrimePowerBlock, BracketOrder, Product, Extension, CoverPrefix };
  enum class Op { Dot, Colon, RaisedDot };

  Kind kind = Kind::Integer;

  // Named: canonical text such as "PSL_3(4)", "M_{22}", "^2E_6(2)".
  std::string name;
  // Integer value, cover multiplier, or prime-power base.
  std::uint64_t value = 0;
  // Integer: outer-automorphism class label ("2" in 2_2), empty if none.
  std::string label;
  // PrimePowerBlock: the exponent list of p^{a+b+...}.
  std::vector<unsigned> exponents;
  // Extension operator.
  Op op = Op::Dot;
  // CoverPrefix written as "k^.G" rather than "kG".
  bool raised = false;
  // Product: factors; Extension: {top, bottom}; CoverPrefix and
  // BracketOrder: one child.
  std::vector<StructureExpr> children;

  friend bool operator==(const StructureExpr&, const StructureExpr&) = default;
};

StructureExpr parse_structure(std::string_view text);
/// Canonical text; parse_structure(render(e)) == e.
std::string render(const StructureExpr& e);
FactoredInt structure_order(const StructureExpr& e);
/// Order of a named leaf in canonical form ("PSL_3(4)", "Th", "D_8").
FactoredInt named_group_order(std::string_view canonical_name);

}  // namespace coprimemax

#endif  // COPRIMEMAX_ATLAS_HPP_
