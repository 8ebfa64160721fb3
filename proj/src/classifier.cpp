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

#include "coprimemax/classifier.hpp"

#include <stdexcept>
#include <type_traits>

#include "coprimemax/atlas.hpp"

namespace coprimemax {
namespace {

constexpr const char* kAschbacherCaveat =
    "n >= 13: pairs with an almost simple M are not determined; the list is complete "
    "for M in the Aschbacher classes";

std::string u(std::uint64_t v) { return std::to_string(v); }

std::string prime_power_text(const PrimePower& pp) {
  if (pp.e == 1)
    return u(pp.p);
  std::string e = std::to_string(pp.e);
  return u(pp.p) + "^" + (e.size() > 1 ? "{" + e + "}" : e);
}

std::string brace_sub(std::uint64_t v) {
  std::string s = u(v);
  return s.size() > 1 ? "{" + s + "}" : s;
}

MaxSubgroupDescriptor psl2_parabolic(std::uint64_t q) {
  MaxSubgroupDescriptor d;
  d.kind = "parabolic";
  d.structure = prime_power_text(PrimePower::of(q)) + ":" + u((q - 1) / 2);
  d.alt_structure = "E_" + brace_sub(q) + ":" + u((q - 1) / 2);
  d.order = order_psl2_parabolic(q);
  return d;
}

MaxSubgroupDescriptor torus_normalizer(unsigned n, std::uint64_t q, Sign eps) {
  MaxSubgroupDescriptor d;
  d.kind = "torus-normalizer";
  d.order = order_torus_normalizer(n, q, eps);
  BigInt cyc = d.order.value() / n;
  d.structure = cyc.get_str() + ":" + std::to_string(n);
  // eps = Plus is the linear case q^n - 1, Minus the unitary case q^n + 1
  const char* e = eps == Sign::Plus ? "-" : "+";
  d.alt_structure = std::string("(q^n") + e + "1)/((q" + e + "1)(q" + e + "1,n)):n";
  return d;
}

MaxSubgroupDescriptor from_structure(std::string kind, std::string_view text) {
  MaxSubgroupDescriptor d;
  d.kind = std::move(kind);
  StructureExpr e = parse_structure(text);
  d.structure = render(e);
  if (d.structure != text)
    d.alt_structure = std::string(text);
  d.order = structure_order(e);
  return d;
}

std::vector<std::string> alias_notes(const GroupSpec& g) {
  std::vector<std::string> notes;
  auto add = [&](const char* s) { notes.emplace_back(std::string("isomorphic to ") + s); };
  if (auto* l = std::get_if<Linear>(&g)) {
    if (l->n == 2 && (l->q == 4 || l->q == 5))
      add("A5, PSL(2,4) and PSL(2,5)");
    if (l->n == 2 && l->q == 7)
      add("PSL(3,2)");
    if (l->n == 3 && l->q == 2)
      add("PSL(2,7)");
    if (l->n == 2 && l->q == 9)
      add("A6");
    if (l->n == 4 && l->q == 2)
      add("A8");
  } else if (auto* a = std::get_if<Alternating>(&g)) {
    if (a->degree == 5)
      add("PSL(2,4) and PSL(2,5)");
    if (a->degree == 6)
      add("PSL(2,9)");
    if (a->degree == 8)
      add("PSL(4,2)");
  } else if (auto* un = std::get_if<Unitary>(&g)) {
    if (un->n == 4 && un->q == 2)
      add("PSp(4,3)");
  } else if (auto* sp = std::get_if<Symplectic>(&g)) {
    if (sp->dim == 4 && sp->q == 3)
      add("PSU(4,2)");
  }
  return notes;
}

bool is_odd_prime(unsigned n) { return n >= 3 && is_prime(static_cast<std::uint64_t>(n)); }

void finish(ClassifierVerdict& v, bool caveat) {
  if (caveat) {
    v.status = VerdictStatus::CompleteForAschbacherClasses;
    v.notes.emplace_back(kAschbacherCaveat);
  } else {
    v.status = v.pairs.empty() ? VerdictStatus::Negative : VerdictStatus::Complete;
  }
}

ClassifierVerdict negative(const GroupSpec& g, std::string note) {
  ClassifierVerdict v;
  v.group = canonical_name(g);
  v.notes = alias_notes(g);
  if (!note.empty())
    v.notes.push_back(std::move(note));
  return v;
}

}  // namespace

CoprimePairReport::CoprimePairReport(MaxSubgroupDescriptor h, MaxSubgroupDescriptor m,
                                     std::string clause, std::vector<Condition> conditions)
    : h_(std::move(h)), m_(std::move(m)), clause_(std::move(clause)),
      conditions_(std::move(conditions)) {
  if (!h_.order.is_odd())
    throw std::logic_error("coprime pair " + clause_ + ": |H| = " + h_.order.to_string() +
                           " is even");
  if (!fi_coprime(h_.order, m_.order))
    throw std::logic_error("coprime pair " + clause_ + ": gcd(" + h_.order.to_string() + ", " +
                           m_.order.to_string() + ") != 1");
}

std::string_view status_name(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Negative:
      return "Negative";
    case VerdictStatus::Complete:
      return "Complete";
    case VerdictStatus::CompleteForAschbacherClasses:
      return "CompleteForAschbacherClasses";
  }
  return "?";
}

ClassifierVerdict classify_psl2(std::uint64_t q) {
  GroupSpec g = Linear{2, q};
  validate_simple(g);
  ClassifierVerdict v;
  v.group = canonical_name(g);
  v.notes = alias_notes(g);
  if (q % 4 != 3) {
    v.notes.emplace_back("q = " + u(q % 4) + " (mod 4): no maximal subgroup of odd order");
    finish(v, false);
    return v;
  }
  MaxSubgroupDescriptor h = psl2_parabolic(q);
  bool q_prime = is_prime(q);
  Condition c4{"q mod 4", u(q % 4)};

  if (q > 7) {
    MaxSubgroupDescriptor m;
    m.kind = "dihedral";
    m.structure = "D_" + brace_sub(q + 1);
    m.alt_structure = "D_{2(" + u(q) + "+1)}";
    m.order = FactoredInt::of(q + 1);
    m.note = "dihedral of order q+1, the normalizer of a nonsplit torus";
    v.pairs.emplace_back(h, m, "(iii)(1)", std::vector<Condition>{c4, {"q > 7", u(q)}});
  }
  if (q_prime && q % 24 == 23) {
    MaxSubgroupDescriptor m{"S4", "S_4", "", FactoredInt::of(24), std::nullopt, true, ""};
    v.pairs.emplace_back(h, m, "(iii)(2)",
                         std::vector<Condition>{{"q prime", u(q)}, {"q mod 24", u(q % 24)}});
  }
  if (q_prime && (q % 120 == 83 || q % 120 == 107)) {
    MaxSubgroupDescriptor m{"A4", "A_4", "", FactoredInt::of(12), std::nullopt, true, ""};
    v.pairs.emplace_back(h, m, "(iii)(3)",
                         std::vector<Condition>{{"q prime", u(q)}, {"q mod 120", u(q % 120)}});
  }
  if (q_prime && q % 60 == 59) {
    MaxSubgroupDescriptor m{"A5", "A_5", "", FactoredInt::of(60), std::nullopt, true, ""};
    v.pairs.emplace_back(h, m, "(iii)(4)",
                         std::vector<Condition>{{"q prime", u(q)}, {"q mod 60", u(q % 60)}});
  }
  finish(v, false);
  return v;
}

ClassifierVerdict classify_psl(unsigned n, std::uint64_t q) {
  if (n == 2)
    return classify_psl2(q);
  GroupSpec g = Linear{n, q};
  validate_simple(g);
  if (!is_odd_prime(n))
    return negative(g, "n is not an odd prime: no maximal subgroup of odd order");
  if (n == 3 && q == 4)
    return negative(g, "PSL(3,4) has no maximal subgroup of odd order");
  ClassifierVerdict v;
  v.group = canonical_name(g);
  v.notes = alias_notes(g);
  MaxSubgroupDescriptor h = torus_normalizer(n, q, Sign::Plus);
  PrimePower pp = PrimePower::of(q);
  if (pp.p != n) {
    std::uint64_t ord = mult_order(static_cast<std::int64_t>(q % n), n);
    if (ord == n - 1) {
      for (unsigned m = 2; m + 2 <= n; ++m) {
        MaxSubgroupDescriptor s;
        s.kind = "subspace-stabilizer";
        s.structure = "P_" + brace_sub(m);
        s.order = order_psl_subspace_stab(n, q, m);
        s.m = m;
        s.note = "stabilizer of a " + std::to_string(m) + "-subspace";
        v.pairs.emplace_back(h, s, "(iii)(5)",
                             std::vector<Condition>{{"q not a power of n", u(pp.p)},
                                                    {"ord_n(q)", u(ord)}});
      }
    }
  }
  finish(v, n >= 13);
  return v;
}

ClassifierVerdict classify_psu(unsigned n, std::uint64_t q) {
  GroupSpec g = Unitary{n, q};
  validate_simple(g);
  if (!is_odd_prime(n))
    return negative(g, "n is not an odd prime: no maximal subgroup of odd order");
  if ((n == 3 && (q == 3 || q == 5)) || (n == 5 && q == 2))
    return negative(g, canonical_name(g) + " has no maximal subgroup of odd order");
  ClassifierVerdict v;
  v.group = canonical_name(g);
  v.notes = alias_notes(g);
  MaxSubgroupDescriptor h = torus_normalizer(n, q, Sign::Minus);
  PrimePower pp = PrimePower::of(q);
  bool not_power = pp.p != n;
  std::uint64_t ord = not_power ? mult_order(static_cast<std::int64_t>(q % n), n) : 0;
  bool n1 = n % 4 == 1, n3 = n % 4 == 3;
  bool full = not_power && ord == n - 1;
  bool half = not_power && ord == (n - 1) / 2;
  bool sq_half = full || (n3 && half);  // ord_n(q^2) = (n-1)/2
  std::vector<Condition> base{{"q not a power of n", u(pp.p)}, {"ord_n(q)", u(ord)},
                              {"n mod 4", u(n % 4)}};

  auto nondeg = [&](unsigned m) {
    MaxSubgroupDescriptor s;
    s.kind = "nondegenerate-stabilizer";
    s.structure = "N_" + brace_sub(m);
    s.order = order_psu_nondeg_stab(n, q, m);
    s.m = m;
    s.note = "stabilizer of a non-degenerate " + std::to_string(m) + "-subspace";
    return s;
  };
  auto totsing = [&](unsigned m) {
    MaxSubgroupDescriptor s;
    s.kind = "totally-singular-stabilizer";
    s.structure = "P_" + brace_sub(m);
    s.order = order_psu_totsing_stab(n, q, m);
    s.m = m;
    s.note = "stabilizer of a totally singular " + std::to_string(m) + "-subspace";
    return s;
  };

  const char* nd_clause = (n1 && full) ? "(iii)(6a)" : (n3 && half) ? "(iii)(6b)" : nullptr;
  if (nd_clause)
    for (unsigned m = 2; m <= (n - 1) / 2; ++m)
      v.pairs.emplace_back(h, nondeg(m), nd_clause, base);

  if (n == 3 && q != 5 && p_part(q + 1, 3).value == 3)
    v.pairs.emplace_back(h, totsing(1), "(iii)(7)",
                         std::vector<Condition>{{"q != 5", u(q)}, {"(q+1)_3", "3"}});

  if (n >= 5) {
    for (unsigned m = 1; 2 * m < n; ++m) {
      const char* clause = nullptr;
      bool below_third = 3 * m < n;
      if (n1 && full && below_third)
        clause = "(iii)(8a)";
      else if (n3 && half && below_third)
        clause = "(iii)(8b)";
      else if (sq_half && !below_third && 2 * m + 1 < n)
        clause = "(iii)(8c)";
      else if (n3 && full && below_third && 4 * m > n + 1)
        clause = "(iii)(8d)";
      if (!clause)
        continue;
      std::vector<Condition> c = base;
      if (std::string_view(clause) == "(iii)(8c)")
        c.push_back({"ord_n(q^2)", u((n - 1) / 2)});
      v.pairs.emplace_back(h, totsing(m), clause, c);
    }
  }
  finish(v, n >= 13);
  return v;
}

const std::vector<std::string>& m23_partner_structures() {
  static const std::vector<std::string> v{"PSL_3(4):2_2", "2^4:A_7", "A_8", "2^4:(3\\times A_5):2"};
  return v;
}

const std::vector<std::string>& baby_monster_partner_structures() {
  static const std::vector<std::string> v{
      "2^.({}^2E_6(2)):2",
      "2^{9+16}.PSp_8(2)",
      "Th",
      "(2^2 \\times F_4(2)):2",
      "2^{2+10+20}.(M_{22}:2 \\times S_3)",
      "2^{5+5+10+10}.PSL_5(2)",
      "S_3 \\times Fi_{22}:2",
      "[2^{35}].(S_5 \\times PSL_3(2))",
      "HN:2",
      "P\\Omega_8^+(3):S_4",
      "3^{1+8}:{2^{1+6}}^.PSU_4(2).2",
      "5:4 \\times HS:2",
      "(3^2:D_8 \\times PSU_4(3).2^2).2",
      "S_4 \\times {^2}F_4(2)",
      "3^{2+3+6}.(S_4 \\times 2S_4)",
      "S_5 \\times M_{22}:2",
      "{5^3}^.PSL_3(5)",
      "(S_6 \\times PSL_3(4):2).2",
      "5^{1+4}:2^{1+4}.A_5.4",
      "(S_6 \\times S_6).4",
      "5^2:4S_4 \\times S_5",
      "PSL_2(49)^.2",
      "M_{11}",
      "PSL_2(31)",
      "PSL_3(3)",
      "PSL_2(17):2",
      "PSL_2(11):2",
  };
  return v;
}

ClassifierVerdict classify_sporadic(SporadicName s) {
  GroupSpec g = Sporadic{s};
  ClassifierVerdict v;
  v.group = canonical_name(g);
  const std::vector<std::string>* partners = nullptr;
  const char* h_text = nullptr;
  const char* clause = nullptr;
  if (s == SporadicName::M23) {
    partners = &m23_partner_structures();
    h_text = "23:11";
    clause = "(i)(1)";
  } else if (s == SporadicName::B) {
    partners = &baby_monster_partner_structures();
    h_text = "47:23";
    clause = "(i)(2)";
  }
  if (partners) {
    MaxSubgroupDescriptor h = from_structure("frobenius", h_text);
    for (const auto& text : *partners)
      v.pairs.emplace_back(h, from_structure("sporadic-maximal", text), clause);
  } else if (s == SporadicName::Th) {
    v.notes.emplace_back("31:15 is the only odd-order maximal subgroup; every other maximal "
                         "subgroup has order divisible by 3 or 5");
  } else if (s == SporadicName::M) {
    v.notes.emplace_back("59:29 and 71:35 lie in PSL(2,59) and PSL(2,71) and are not maximal");
  } else {
    v.notes.emplace_back("no maximal subgroup of odd order");
  }
  finish(v, false);
  return v;
}

ClassifierVerdict classify(const GroupSpec& g) {
  validate_simple(g);
  return std::visit(
      [&](const auto& x) -> ClassifierVerdict {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, Linear>)
          return classify_psl(x.n, x.q);
        else if constexpr (std::is_same_v<T, Unitary>)
          return classify_psu(x.n, x.q);
        else if constexpr (std::is_same_v<T, Sporadic>)
          return classify_sporadic(x.name);
        else if constexpr (std::is_same_v<T, Alternating>)
          return negative(g, "alternating groups have no pair of coprime maximal subgroups");
        else if constexpr (std::is_same_v<T, Exceptional>)
          return negative(g, "no maximal subgroup of odd order");
        else
          return negative(g, "no maximal subgroup of odd order");
      },
      g);
}

std::vector<MaxSubgroupDescriptor> odd_maximal_candidates(const GroupSpec& g) {
  validate_simple(g);
  std::vector<MaxSubgroupDescriptor> out;
  if (auto* a = std::get_if<Alternating>(&g)) {
    unsigned p = a->degree;
    if (is_prime(static_cast<std::uint64_t>(p)) && p % 4 == 3 && p != 7 && p != 11 && p != 23) {
      MaxSubgroupDescriptor d;
      d.kind = "frobenius";
      d.structure = std::to_string(p) + ":" + std::to_string((p - 1) / 2);
      d.order = FactoredInt::of(static_cast<std::uint64_t>(p) * ((p - 1) / 2));
      out.push_back(std::move(d));
    }
  } else if (auto* l = std::get_if<Linear>(&g)) {
    if (l->n == 2 && l->q % 4 == 3)
      out.push_back(psl2_parabolic(l->q));
    else if (is_odd_prime(l->n) && !(l->n == 3 && l->q == 4))
      out.push_back(torus_normalizer(l->n, l->q, Sign::Plus));
  } else if (auto* un = std::get_if<Unitary>(&g)) {
    bool excluded = (un->n == 3 && (un->q == 3 || un->q == 5)) || (un->n == 5 && un->q == 2);
    if (is_odd_prime(un->n) && !excluded)
      out.push_back(torus_normalizer(un->n, un->q, Sign::Minus));
  } else if (auto* s = std::get_if<Sporadic>(&g)) {
    switch (s->name) {
      case SporadicName::M23:
        out.push_back(from_structure("frobenius", "23:11"));
        break;
      case SporadicName::Th:
        out.push_back(from_structure("frobenius", "31:15"));
        break;
      case SporadicName::B:
        out.push_back(from_structure("frobenius", "47:23"));
        break;
      case SporadicName::M:
        for (const char* t : {"59:29", "71:35"}) {
          MaxSubgroupDescriptor d = from_structure("frobenius", t);
          d.maximal = false;
          d.note = "contained in a maximal PSL(2,p)";
          out.push_back(std::move(d));
        }
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace coprimemax
