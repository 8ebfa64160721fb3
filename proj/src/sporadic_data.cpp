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

// Orders of the 26 sporadic simple groups, transcribed from the ATLAS.

#include <array>
#include <initializer_list>
#include <utility>

#include "coprimemax/group_orders.hpp"

namespace coprimemax {
namespace {

struct SporadicEntry {
  SporadicName id;
  std::string_view name;
  std::initializer_list<std::pair<unsigned, unsigned>> order;
};

const std::array<SporadicEntry, 26>& sporadic_table() {
  static const std::array<SporadicEntry, 26> table{{
      {SporadicName::M11, "M11", {{2, 4}, {3, 2}, {5, 1}, {11, 1}}},
      {SporadicName::M12, "M12", {{2, 6}, {3, 3}, {5, 1}, {11, 1}}},
      {SporadicName::M22, "M22", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}}},
      {SporadicName::M23, "M23", {{2, 7}, {3, 2}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {SporadicName::M24, "M24", {{2, 10}, {3, 3}, {5, 1}, {7, 1}, {11, 1}, {23, 1}}},
      {SporadicName::J1, "J1", {{2, 3}, {3, 1}, {5, 1}, {7, 1}, {11, 1}, {19, 1}}},
      {SporadicName::J2, "J2", {{2, 7}, {3, 3}, {5, 2}, {7, 1}}},
      {SporadicName::J3, "J3", {{2, 7}, {3, 5}, {5, 1}, {17, 1}, {19, 1}}},
      {SporadicName::J4, "J4",
       {{2, 21}, {3, 3}, {5, 1}, {7, 1}, {11, 3}, {23, 1}, {29, 1}, {31, 1}, {37, 1}, {43, 1}}},
      {SporadicName::HS, "HS", {{2, 9}, {3, 2}, {5, 3}, {7, 1}, {11, 1}}},
      {SporadicName::McL, "McL", {{2, 7}, {3, 6}, {5, 3}, {7, 1}, {11, 1}}},
      {SporadicName::He, "He", {{2, 10}, {3, 3}, {5, 2}, {7, 3}, {17, 1}}},
      {SporadicName::Ru, "Ru", {{2, 14}, {3, 3}, {5, 3}, {7, 1}, {13, 1}, {29, 1}}},
      {SporadicName::Suz, "Suz", {{2, 13}, {3, 7}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
      {SporadicName::ON, "O'N", {{2, 9}, {3, 4}, {5, 1}, {7, 3}, {11, 1}, {19, 1}, {31, 1}}},
      {SporadicName::Co3, "Co3", {{2, 10}, {3, 7}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
      {SporadicName::Co2, "Co2", {{2, 18}, {3, 6}, {5, 3}, {7, 1}, {11, 1}, {23, 1}}},
      {SporadicName::Co1, "Co1", {{2, 21}, {3, 9}, {5, 4}, {7, 2}, {11, 1}, {13, 1}, {23, 1}}},
      {SporadicName::Fi22, "Fi22", {{2, 17}, {3, 9}, {5, 2}, {7, 1}, {11, 1}, {13, 1}}},
      {SporadicName::Fi23, "Fi23",
       {{2, 18}, {3, 13}, {5, 2}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {23, 1}}},
      {SporadicName::Fi24p, "Fi24'",
       {{2, 21}, {3, 16}, {5, 2}, {7, 3}, {11, 1}, {13, 1}, {17, 1}, {23, 1}, {29, 1}}},
      {SporadicName::HN, "HN", {{2, 14}, {3, 6}, {5, 6}, {7, 1}, {11, 1}, {19, 1}}},
      {SporadicName::Ly, "Ly",
       {{2, 8}, {3, 7}, {5, 6}, {7, 1}, {11, 1}, {31, 1}, {37, 1}, {67, 1}}},
      {SporadicName::Th, "Th", {{2, 15}, {3, 10}, {5, 3}, {7, 2}, {13, 1}, {19, 1}, {31, 1}}},
      {SporadicName::B, "B",
       {{2, 41}, {3, 13}, {5, 6}, {7, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1}, {31, 1},
        {47, 1}}},
      {SporadicName::M, "M",
       {{2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1}, {23, 1}, {29, 1},
        {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}}},
  }};
  return table;
}

// Alternative spellings accepted on input; output always uses the table name.
constexpr std::pair<std::string_view, SporadicName> kAliases[] = {
    {"ON", SporadicName::ON},     {"Fi24", SporadicName::Fi24p}, {"F3+", SporadicName::Fi24p},
    {"F2", SporadicName::B},      {"BM", SporadicName::B},       {"F1", SporadicName::M},
    {"F3", SporadicName::Th},     {"F5", SporadicName::HN},
};

}  // namespace

std::string_view sporadic_name(SporadicName s) {
  return sporadic_table()[static_cast<std::size_t>(s)].name;
}

std::optional<SporadicName> sporadic_from_name(std::string_view s) {
  for (const auto& e : sporadic_table())
    if (e.name == s)
      return e.id;
  for (const auto& [alias, id] : kAliases)
    if (alias == s)
      return id;
  return std::nullopt;
}

FactoredInt order_sporadic(SporadicName s) {
  FactoredInt::Map m;
  for (auto [p, e] : sporadic_table()[static_cast<std::size_t>(s)].order)
    m.emplace(p, e);
  return FactoredInt(std::move(m));
}

}  // namespace coprimemax
