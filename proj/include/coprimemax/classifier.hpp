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

// Decision procedure for pairs of maximal subgroups of coprime orders in a
// finite nonabelian simple group.

#ifndef COPRIMEMAX_CLASSIFIER_HPP_
#define COPRIMEMAX_CLASSIFIER_HPP_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "coprimemax/arith.hpp"
#include "coprimemax/group_orders.hpp"

namespace coprimemax {

struct MaxSubgroupDescriptor {
  // "parabolic", "torus-normalizer", "dihedral", "S4", "A4", "A5",
  // "subspace-stabilizer", "nondegenerate-stabilizer",
  // "totally-singular-stabilizer", "sporadic-maximal", "frobenius"
  std::string kind;
  std::string structure;
  // Alternative notation for the same subgroup, empty if none.
  std::string alt_structure;
  FactoredInt order;
  std::optional<unsigned> m;
  bool maximal = true;
  std::string note;

  friend bool operator==(const MaxSubgroupDescriptor&, const MaxSubgroupDescriptor&) = default;
};

struct Condition {
  std::string predicate;
  std::string witness;

  friend bool operator==(const Condition&, const Condition&) = default;
};

/// A pair (H, M) of maximal subgroups with |H| odd and gcd(|H|, |M|) = 1.
/// Construction throws std::logic_error if either property fails.
class CoprimePairReport {
public:
  CoprimePairReport(MaxSubgroupDescriptor h, MaxSubgroupDescriptor m, std::string clause,
                    std::vector<Condition> conditions = {});

  const MaxSubgroupDescriptor& H() const { return h_; }
  const MaxSubgroupDescriptor& M() const { return m_; }
  /// "(i)(1)", "(iii)(6b)", ...
  const std::string& clause() const { return clause_; }
  const std::vector<Condition>& conditions() const { return conditions_; }

  friend bool operator==(const CoprimePairReport&, const CoprimePairReport&) = default;

private:
  MaxSubgroupDescriptor h_;
  MaxSubgroupDescriptor m_;
  std::string clause_;
  std::vector<Condition> conditions_;
};

enum class VerdictStatus { Negative, Complete, CompleteForAschbacherClasses };

std::string_view status_name(VerdictStatus s);

struct ClassifierVerdict {
  std::string group;
  VerdictStatus status = VerdictStatus::Negative;
  std::vector<CoprimePairReport> pairs;
  std::vector<std::string> notes;

  friend bool operator==(const ClassifierVerdict&, const ClassifierVerdict&) = default;
};

/// Throws NonSimpleGroup for parameters outside the simple range.
ClassifierVerdict classify(const GroupSpec& g);

ClassifierVerdict classify_psl2(std::uint64_t q);
ClassifierVerdict classify_psl(unsigned n, std::uint64_t q);
ClassifierVerdict classify_psu(unsigned n, std::uint64_t q);
ClassifierVerdict classify_sporadic(SporadicName s);

/// Maximal subgroups of odd order that can occur in g, with the known
/// exceptions removed. Entries with maximal == false occur as subgroups but
/// are never maximal.
std::vector<MaxSubgroupDescriptor> odd_maximal_candidates(const GroupSpec& g);

/// Structure strings of the maximal subgroups M paired with 23:11 in M23 and
/// with 47:23 in the Baby Monster, in ATLAS notation.
const std::vector<std::string>& m23_partner_structures();
const std::vector<std::string>& baby_monster_partner_structures();

}  // namespace coprimemax

#endif  // COPRIMEMAX_CLASSIFIER_HPP_
