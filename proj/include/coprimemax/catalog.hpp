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

// Parameter scans over group families and their JSON / CSV serialization.

#ifndef COPRIMEMAX_CATALOG_HPP_
#define COPRIMEMAX_CATALOG_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coprimemax/classifier.hpp"
#include "coprimemax/oracle.hpp"

namespace coprimemax {

enum class ScanFamily { Psl2, Psl, Psu, Sporadic, Alternating, All };

ScanFamily scan_family_from_name(const std::string& s);

struct ScanOptions {
  ScanFamily family = ScanFamily::All;
  std::uint64_t q_max = 200;
  unsigned n_max = 23;
  unsigned alternating_max = 50;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct CatalogRow {
  std::string group;
  std::string family;  // psl2, psl, psu, sporadic
  unsigned n = 0;
  std::uint64_t q = 0;
  std::string clause;
  std::optional<unsigned> m;
  std::string h_structure;
  FactoredInt h_order;
  std::string m_structure;
  FactoredInt m_order;
  std::string status;

  friend bool operator==(const CatalogRow&, const CatalogRow&) = default;
};

struct ScanResult {
  std::vector<CatalogRow> rows;
  std::map<std::string, std::size_t> clause_counts;
  std::map<std::string, std::size_t> status_counts;  // per group scanned
  std::size_t groups_scanned = 0;
};

/// Specs of every group on the grid, in catalog order.
std::vector<GroupSpec> scan_grid(const ScanOptions& opt);
ScanResult run_scan(const ScanOptions& opt);

nlohmann::ordered_json order_json(const FactoredInt& v);
nlohmann::ordered_json verdict_json(const ClassifierVerdict& v);
nlohmann::ordered_json scan_json(const ScanResult& r);
nlohmann::ordered_json cross_check_json(const oracle::CrossCheckReport& r);
std::string scan_csv(const ScanResult& r);

}  // namespace coprimemax

#endif  // COPRIMEMAX_CATALOG_HPP_
