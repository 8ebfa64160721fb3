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
#include <random>
#include <vector>

#include "coprimemax/oracle.hpp"

using namespace coprimemax::oracle;

namespace {

using Pairs = std::vector<std::pair<std::uint64_t, std::uint64_t>>;

}  // namespace

TEST_CASE("PSL_2(q) has the right order and multiplication") {
  for (unsigned q : {5u, 7u, 11u, 13u}) {
    auto g = build_psl2(q);
    CAPTURE(q);
    CHECK(g.order() == q * (q * q - 1) / 2);
    std::mt19937 rng(q);
    std::uniform_int_distribution<std::uint32_t> pick(0, g.order() - 1);
    for (int i = 0; i < 500; ++i) {
      auto a = pick(rng), b = pick(rng), c = pick(rng);
      CHECK(g.mul(g.mul(a, b), c) == g.mul(a, g.mul(b, c)));
      CHECK(g.element(g.mul(a, b)) == g.element(a) * g.element(b));
      CHECK(g.mul(a, g.inv(a)) == g.identity());
      CHECK(g.index_of(g.element(a)) == a);
    }
    std::map<std::uint32_t, std::size_t> orders;
    for (std::uint32_t x = 0; x < g.order(); ++x)
      ++orders[g.element_order(x)];
    CHECK(orders[q] == q * q - 1);  // unipotent elements
    CHECK(orders[1] == 1);
  }
  CHECK(build_psl2(5).element(0).is_identity());
}

TEST_CASE("Perm basics") {
  Perm a{{1, 2, 0}}, b{{0, 2, 1}};
  CHECK((a * b).img == std::vector<std::uint8_t>{1, 0, 2});
  CHECK((a * a.inverse()).is_identity());
  CHECK(Perm::identity(3).is_identity());
  CHECK_FALSE(a.is_identity());
}

TEST_CASE("ElementSet operations") {
  ElementSet a(130), b(130);
  a.set(0);
  a.set(129);
  b.set(0);
  b.set(64);
  b.set(129);
  CHECK(a.count() == 2);
  CHECK(a.subset_of(b));
  CHECK_FALSE(b.subset_of(a));
  CHECK(b.members() == std::vector<std::uint32_t>{0, 64, 129});
  CHECK(a.test(129));
  CHECK_FALSE(a.test(64));
}

TEST_CASE("range checks") {
  CHECK_THROWS_AS(build_psl2(29), OracleRangeError);
  CHECK_THROWS_AS(build_psl2(3), OracleRangeError);
  CHECK_THROWS(build_psl2(9));
  CHECK_THROWS(build_psl2(15));
  CHECK(max_oracle_group_order() >= 6072);
}

TEST_CASE("subgroup lattices of small PSL_2(q)") {
  // total subgroup counts for A_5, PSL_2(7), PSL_2(11), PSL_2(13)
  const std::map<unsigned, std::size_t> total{{5, 59}, {7, 179}, {11, 620}, {13, 942}};
  for (auto [q, expected] : total) {
    CAPTURE(q);
    auto g = build_psl2(q);
    auto lat = subgroup_lattice(g);
    CHECK(lat.subgroups.size() == expected);
    CHECK(extra_join_round(g, lat) == 0);

    std::size_t sylow = 0, conj_total = 0;
    for (const auto& s : lat.subgroups) {
      CHECK(g.order() % s.order == 0);
      CHECK(s.elements.count() == s.order);
      auto m = s.elements.members();
      for (std::size_t i = 0; i < m.size(); i += 1 + m.size() / 7)
        for (std::size_t j = 0; j < m.size(); j += 1 + m.size() / 5)
          CHECK(s.elements.test(g.mul(m[i], g.inv(m[j]))));
      sylow += s.order == q;
    }
    CHECK(sylow == q + 1);
    for (const auto& c : lat.classes)
      conj_total += c.size;
    CHECK(conj_total == lat.subgroups.size());

    auto maxs = maximal_subgroups(lat);
    for (const auto& m : maxs) {
      for (const auto& s : lat.subgroups)
        if (s.order > m.order && s.order < g.order())
          CHECK_FALSE(m.elements.subset_of(s.elements));
    }
  }
}

TEST_CASE("maximal classes and coprime pairs") {
  const std::map<unsigned, std::vector<std::size_t>> maximal{
      {5, {6, 10, 12}},         {7, {21, 24, 24}},
      {11, {12, 55, 60, 60}},   {13, {12, 12, 14, 78}},
      {17, {16, 18, 24, 24, 136}}};
  const std::map<unsigned, Pairs> pairs{
      {5, {}}, {7, {}}, {11, {{55, 12}}}, {13, {}}, {17, {}}};
  for (auto [q, orders] : maximal) {
    CAPTURE(q);
    auto r = cross_check(q);
    CHECK(r.group_order == q * (q * q - 1) / 2);
    CHECK(r.maximal_class_orders == orders);
    CHECK(r.oracle_pairs == pairs.at(q));
    CHECK(r.agree);
  }
}
