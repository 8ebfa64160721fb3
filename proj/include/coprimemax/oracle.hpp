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

// Brute-force PSL_2(q), q prime, as a permutation group on the projective
// line: full subgroup lattice, maximal subgroups, coprime pairs.
// Shares no logic with the classifier; cross_check compares the two.

#ifndef COPRIMEMAX_ORACLE_HPP_
#define COPRIMEMAX_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coprimemax::oracle {

/// A permutation of the q+1 points of PG(1,q); points 0..q-1 are field
/// elements and point q is infinity.
struct Perm {
  std::vector<std::uint8_t> img;

  std::size_t degree() const { return img.size(); }
  /// (a * b)(x) = a(b(x))
  friend Perm operator*(const Perm& a, const Perm& b);
  Perm inverse() const;
  bool is_identity() const;
  static Perm identity(std::size_t degree);

  friend bool operator==(const Perm&, const Perm&) = default;
  friend auto operator<=>(const Perm&, const Perm&) = default;
};

class OracleRangeError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Fixed-size bit set over the elements of a group.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1U; }
  std::size_t count() const;
  bool subset_of(const ElementSet& o) const;
  std::vector<std::uint32_t> members() const;
  std::size_t hash() const;
  std::size_t universe() const { return n_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;
  friend auto operator<=>(const ElementSet&, const ElementSet&) = default;

private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

class Psl2Group {
public:
  unsigned q() const { return q_; }
  std::size_t order() const { return n_; }
  std::uint32_t identity() const { return 0; }
  const std::vector<std::uint32_t>& generators() const { return gens_; }

  Perm element(std::uint32_t i) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }
  std::uint32_t element_order(std::uint32_t a) const { return ord_[a]; }
  /// Index of a permutation in the group; throws if it is not an element.
  std::uint32_t index_of(const Perm& p) const;

private:
  friend Psl2Group build_psl2(unsigned q);
  std::uint32_t key(std::uint8_t inf, std::uint8_t zero, std::uint8_t one) const;

  unsigned q_ = 0;
  std::size_t n_ = 0;
  std::vector<std::uint8_t> img_;  // n_ rows of q_+1 images
  std::vector<std::int32_t> by_key_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::uint32_t> ord_;
  std::vector<std::uint32_t> gens_;
};

/// The group generated by z -> z+1 and z -> -1/z; q prime, 5 <= q <= 23.
Psl2Group build_psl2(unsigned q);

struct SubgroupRecord {
  ElementSet elements;
  std::size_t order = 0;
  std::vector<std::uint32_t> generators;
  bool is_maximal = false;
  std::size_t class_id = 0;
};

struct SubgroupClass {
  std::size_t representative = 0;  // index into SubgroupLattice::subgroups
  std::size_t size = 0;            // number of conjugates
  std::size_t order = 0;
  bool is_maximal = false;
  /// element order -> count; with the order this identifies the
  /// isomorphism type for every subgroup of PSL_2(q)
  std::map<std::uint32_t, std::size_t> signature;
};

struct SubgroupLattice {
  std::vector<SubgroupRecord> subgroups;  // sorted by order, then elements
  std::vector<SubgroupClass> classes;     // sorted by order, then representative
  std::size_t join_rounds = 0;
};

std::size_t max_oracle_group_order();

/// Every subgroup of g: cyclic subgroups, then joins with representatives of
/// each conjugacy class, closed under conjugation, until a round adds nothing.
SubgroupLattice subgroup_lattice(const Psl2Group& g);

/// Number of new subgroups one more unrestricted join round over all pairs
/// (A, B) with A a class representative would add. Zero on a complete lattice.
std::size_t extra_join_round(const Psl2Group& g, const SubgroupLattice& lat);

std::vector<SubgroupRecord> maximal_subgroups(const SubgroupLattice& lat);
std::vector<SubgroupClass> maximal_classes(const SubgroupLattice& lat);

/// Unordered pairs of maximal classes with coprime orders, one pair per
/// pair of isomorphism types, normalized to (odd order, other order) and
/// sorted.
std::vector<std::pair<std::uint64_t, std::uint64_t>> coprime_pairs_bruteforce(
    const std::vector<SubgroupClass>& maximals);

struct CrossCheckReport {
  unsigned q = 0;
  std::size_t group_order = 0;
  std::size_t subgroup_count = 0;
  std::size_t class_count = 0;
  std::vector<std::size_t> maximal_class_orders;  // one per conjugacy class, sorted
  std::vector<std::pair<std::uint64_t, std::uint64_t>> oracle_pairs;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> classifier_pairs;
  bool agree = false;
};

CrossCheckReport cross_check(unsigned q);

}  // namespace coprimemax::oracle

#endif  // COPRIMEMAX_ORACLE_HPP_
