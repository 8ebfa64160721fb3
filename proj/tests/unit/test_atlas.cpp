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
#include <string>
#include <vector>

#include "coprimemax/atlas.hpp"
#include "coprimemax/classifier.hpp"
#include "coprimemax/group_orders.hpp"

using namespace coprimemax;

namespace {

BigInt order_of(const char* text) { return structure_order(parse_structure(text)).value(); }

using K = StructureExpr::Kind;

StructureExpr leaf(std::mt19937& rng) {
  static const char* names[] = {"A_5",      "S_6",  "D_8",      "PSL_2(7)", "M_{11}",
                                "^2F_4(2)", "Th",   "Fi_{24}'", "O'N",      "POmega_8^+(3)",
                                "PSU_4(3)", "HN",   "^3D_4(2)", "PSp_4(3)", "Q_8"};
  StructureExpr e;
  switch (rng() % 4) {
    case 0:
      e.kind = K::Named;
      e.name = names[rng() % std::size(names)];
      break;
    case 1:
      e.kind = K::Integer;
      e.value = 1 + rng() % 60;
      if (rng() % 4 == 0)
        e.label = std::to_string(1 + rng() % 12);
      break;
    case 2: {
      static const unsigned primes[] = {2, 3, 5, 7, 11};
      e.kind = K::PrimePowerBlock;
      e.value = primes[rng() % 5];
      unsigned parts = 1 + rng() % 3;
      for (unsigned i = 0; i < parts; ++i)
        e.exponents.push_back(1 + rng() % 14);
      break;
    }
    default: {
      e.kind = K::BracketOrder;
      StructureExpr c;
      c.kind = K::PrimePowerBlock;
      c.value = 2;
      c.exponents = {1 + static_cast<unsigned>(rng() % 40)};
      e.children.push_back(c);
      break;
    }
  }
  return e;
}

StructureExpr tree(std::mt19937& rng, int depth, bool in_product = false) {
  if (depth == 0 || rng() % 3 == 0)
    return leaf(rng);
  StructureExpr e;
  unsigned pick = rng() % 3;
  if (pick == 0 && in_product)
    pick = 1;
  if (pick == 0) {
    e.kind = K::Product;
    unsigned n = 2 + rng() % 2;
    for (unsigned i = 0; i < n; ++i)
      e.children.push_back(tree(rng, depth - 1, true));
  } else if (pick == 1) {
    e.kind = K::Extension;
    e.op = static_cast<StructureExpr::Op>(rng() % 3);
    e.children.push_back(tree(rng, depth - 1));
    e.children.push_back(tree(rng, depth - 1));
  } else {
    e.kind = K::CoverPrefix;
    e.value = 2 + rng() % 5;
    e.raised = rng() % 2;
    e.children.push_back(tree(rng, depth - 1));
  }
  return e;
}

}  // namespace

TEST_CASE("M23 partner structures") {
  std::vector<std::string> got;
  for (const auto& s : m23_partner_structures())
    got.push_back(structure_order(parse_structure(s)).decimal());
  CHECK(got == std::vector<std::string>{"40320", "40320", "20160", "5760"});
  CHECK(order_of("23:11") == 253);
  CHECK(order_of("47:23") == 1081);
}

TEST_CASE("Baby Monster partner structures are coprime to 47:23") {
  const auto& v = baby_monster_partner_structures();
  CHECK(v.size() == 27);
  FactoredInt h = structure_order(parse_structure("47:23"));
  for (const auto& s : v) {
    CAPTURE(s);
    FactoredInt o = structure_order(parse_structure(s));
    CHECK(fi_coprime(o, h));
  }
  CHECK(order_of("[2^{35}].(S_5 \\times PSL_3(2))") == BigInt("34359738368") * 120 * 168);
  CHECK(order_of("HN:2") == order_sporadic(SporadicName::HN).value() * 2);
  CHECK(order_of("Th") == order_sporadic(SporadicName::Th).value());
  CHECK(order_of("2^{9+16}.PSp_8(2)") == BigInt(1 << 25) * order_psp(8, 2).value());
  CHECK(order_of("5:4 \\times HS:2") == order_sporadic(SporadicName::HS).value() * 40);
}

TEST_CASE("LaTeX spellings parse to the same tree") {
  auto same = [](const char* a, const char* b) {
    CAPTURE(a);
    CAPTURE(b);
    CHECK(parse_structure(a) == parse_structure(b));
  };
  same("{}^2E_6(2)", "^2E_6(2)");
  same("{^2}E_6(2)", "^2E_6(2)");
  same("S_3 \\times A_5", "S_3 \xC3\x97 A_5");
  same("S_3\\times A_5", "S_3 \xC3\x97 A_5");
  same("P\\Omega_8^+(3)", "POmega_8^+(3)");
  same("P\xCE\xA9_8^+(3)", "POmega_8^{+}(3)");
  same("M_{22}", "M_22");
  same("{2^{1+6}}", "2^{1+6}");
  same("2^{4}", "2^4");
}

TEST_CASE("node shapes") {
  StructureExpr e = parse_structure("3^.A_6");
  CHECK(e.kind == K::CoverPrefix);
  CHECK(e.raised);
  CHECK(e.value == 3);
  e = parse_structure("4S_4");
  CHECK(e.kind == K::CoverPrefix);
  CHECK_FALSE(e.raised);
  e = parse_structure("PSL_2(49)^.2");
  CHECK(e.kind == K::Extension);
  CHECK(e.op == StructureExpr::Op::RaisedDot);
  e = parse_structure("PSL_3(4):2_2");
  REQUIRE(e.kind == K::Extension);
  CHECK(e.children[1].label == "2");
  e = parse_structure("5^{1+4}:2^{1+4}.A_5.4");
  CHECK(e.kind == K::Extension);
  CHECK(e.children[1].kind == K::Integer);  // left associative
  e = parse_structure("2^{2+10+20}");
  CHECK(e.exponents == std::vector<unsigned>{2, 10, 20});
  CHECK(parse_structure("3 \\times A_5").kind == K::Product);
}

TEST_CASE("parse errors carry a byte offset") {
  auto offset = [](const char* text) -> long {
    try {
      parse_structure(text);
    } catch (const StructureParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset("2^{3") == 4);
  CHECK(offset("") == 0);
  CHECK(offset("(A_5") == 4);
  CHECK(offset("A_5)") == 3);
  CHECK(offset("6^2") == 0);
  CHECK(offset("PSL_3") == 0);
  CHECK(offset("A_5 \\times Foo_3") == 11);
  CHECK(offset("PSL_2(6)") == 0);
  CHECK(offset("Fi_{24}") == 0);
  CHECK(offset("0") == 0);
  CHECK(offset("2^{0}") == 0);
  CHECK(offset("A_5 : ") == 6);
}

TEST_CASE("render is canonical and round-trips the corpus") {
  std::vector<std::string> corpus = m23_partner_structures();
  for (const auto& s : baby_monster_partner_structures())
    corpus.push_back(s);
  for (const auto& s : corpus) {
    CAPTURE(s);
    StructureExpr e = parse_structure(s);
    std::string r = render(e);
    CHECK(parse_structure(r) == e);
    CHECK(render(parse_structure(r)) == r);
  }
  CHECK(render(parse_structure("2^.({}^2E_6(2)):2")) == "2^.(^2E_6(2)):2");
  CHECK(render(parse_structure("(S_6 \\times S_6).4")) == "(S_6 \xC3\x97 S_6).4");
  CHECK(render(parse_structure("((A_5))")) == "A_5");
  CHECK(render(parse_structure("(2)^.A_5")) == "(2)^.A_5");
  CHECK(parse_structure("(2)^.A_5") != parse_structure("2^.A_5"));
}

TEST_CASE("random trees survive render then parse") {
  std::mt19937 rng(7);
  for (int i = 0; i < 3000; ++i) {
    StructureExpr e = tree(rng, 4);
    std::string text = render(e);
    CAPTURE(text);
    StructureExpr back = parse_structure(text);
    REQUIRE(back == e);
    REQUIRE(structure_order(back) == structure_order(e));
  }
}

TEST_CASE("named leaf orders") {
  CHECK(named_group_order("D_8").value() == 8);
  CHECK(named_group_order("Q_8").value() == 8);
  CHECK(named_group_order("S_4").value() == 24);
  CHECK(named_group_order("O'N") == order_sporadic(SporadicName::ON));
  CHECK(named_group_order("^2F_4(2)") == order_exceptional(ExceptionalKind::F4Ree, 2));
  CHECK_THROWS_AS(named_group_order("Foo"), std::invalid_argument);
  StructureExpr bad;
  bad.kind = K::Named;
  bad.name = "PSL_2";
  CHECK_THROWS_AS(structure_order(bad), std::invalid_argument);
}
