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

#include "coprimemax/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

namespace coprimemax {
namespace {

using nlohmann::ordered_json;

int family_rank(const std::string& f) {
  if (f == "psl2")
    return 0;
  if (f == "psl")
    return 1;
  if (f == "psu")
    return 2;
  if (f == "sporadic")
    return 3;
  return 4;
}

std::vector<std::uint64_t> prime_powers(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = lo; q <= hi; ++q)
    if (PrimePower::is_prime_power(q))
      out.push_back(q);
  return out;
}

std::vector<unsigned> odd_primes(unsigned hi) {
  std::vector<unsigned> out;
  for (unsigned n = 3; n <= hi; ++n)
    if (is_prime(static_cast<std::uint64_t>(n)))
      out.push_back(n);
  return out;
}

bool wants(ScanFamily chosen, ScanFamily f) { return chosen == ScanFamily::All || chosen == f; }

std::vector<CatalogRow> rows_for(const GroupSpec& g, const ClassifierVerdict& v) {
  std::vector<CatalogRow> rows;
  std::string family = "sporadic";
  unsigned n = 0;
  std::uint64_t q = 0;
  if (auto* l = std::get_if<Linear>(&g)) {
    family = l->n == 2 ? "psl2" : "psl";
    n = l->n;
    q = l->q;
  } else if (auto* u = std::get_if<Unitary>(&g)) {
    family = "psu";
    n = u->n;
    q = u->q;
  } else if (auto* s = std::get_if<Sporadic>(&g)) {
    n = static_cast<unsigned>(s->name);
  } else if (auto* a = std::get_if<Alternating>(&g)) {
    family = "alternating";
    n = a->degree;
  }
  for (const auto& p : v.pairs) {
    CatalogRow r;
    r.group = v.group;
    r.family = family;
    r.n = n;
    r.q = q;
    r.clause = p.clause();
    r.m = p.M().m;
    r.h_structure = p.H().structure;
    r.h_order = p.H().order;
    r.m_structure = p.M().structure;
    r.m_order = p.M().order;
    r.status = std::string(status_name(v.status));
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos)
    return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"')
      out += '"';
    out += c;
  }
  return out + "\"";
}

ordered_json descriptor_json(const MaxSubgroupDescriptor& d) {
  ordered_json j;
  j["kind"] = d.kind;
  j["structure"] = d.structure;
  j["alt_structure"] = d.alt_structure.empty() ? ordered_json(nullptr) : ordered_json(d.alt_structure);
  j["order"] = order_json(d.order);
  j["m"] = d.m ? ordered_json(*d.m) : ordered_json(nullptr);
  j["maximal"] = d.maximal;
  j["note"] = d.note.empty() ? ordered_json(nullptr) : ordered_json(d.note);
  return j;
}

}  // namespace

ScanFamily scan_family_from_name(const std::string& s) {
  if (s == "psl2")
    return ScanFamily::Psl2;
  if (s == "psl")
    return ScanFamily::Psl;
  if (s == "psu")
    return ScanFamily::Psu;
  if (s == "sporadic")
    return ScanFamily::Sporadic;
  if (s == "alternating")
    return ScanFamily::Alternating;
  if (s == "all")
    return ScanFamily::All;
  throw std::invalid_argument("unknown family '" + s + "'");
}

std::vector<GroupSpec> scan_grid(const ScanOptions& opt) {
  std::vector<GroupSpec> grid;
  bool q_needed = wants(opt.family, ScanFamily::Psl2) || wants(opt.family, ScanFamily::Psl) ||
                  wants(opt.family, ScanFamily::Psu);
  if (q_needed && opt.q_max < 2)
    throw std::invalid_argument("--q-max must be at least 2");
  if ((wants(opt.family, ScanFamily::Psl) || wants(opt.family, ScanFamily::Psu)) && opt.n_max < 3)
    throw std::invalid_argument("--n-max must be at least 3");
  if (opt.family == ScanFamily::Psl2 && opt.q_max < 4)
    throw std::invalid_argument("--q-max must be at least 4 for psl2");
  if (wants(opt.family, ScanFamily::Psl2))
    for (auto q : prime_powers(4, opt.q_max))
      grid.emplace_back(Linear{2, q});
  if (wants(opt.family, ScanFamily::Psl))
    for (auto n : odd_primes(opt.n_max))
      for (auto q : prime_powers(2, opt.q_max))
        grid.emplace_back(Linear{n, q});
  if (wants(opt.family, ScanFamily::Psu))
    for (auto n : odd_primes(opt.n_max))
      for (auto q : prime_powers(2, opt.q_max))
        if (is_simple(Unitary{n, q}))
          grid.emplace_back(Unitary{n, q});
  if (wants(opt.family, ScanFamily::Sporadic))
    for (int s = 0; s <= static_cast<int>(SporadicName::M); ++s)
      grid.emplace_back(Sporadic{static_cast<SporadicName>(s)});
  if (wants(opt.family, ScanFamily::Alternating)) {
    if (opt.alternating_max < 5)
      throw std::invalid_argument("alternating degree bound must be at least 5");
    for (unsigned d = 5; d <= opt.alternating_max; ++d)
      grid.emplace_back(Alternating{d});
  }
  return grid;
}

ScanResult run_scan(const ScanOptions& opt) {
  std::vector<GroupSpec> grid = scan_grid(opt);
  std::vector<ClassifierVerdict> verdicts(grid.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < grid.size();) {
      try {
        verdicts[i] = classify(grid[i]);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure)
          failure = std::current_exception();
      }
    }
  };
  unsigned threads = opt.threads ? opt.threads : std::max(1U, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& t : pool)
    t.join();
  if (failure)
    std::rethrow_exception(failure);

  ScanResult r;
  r.groups_scanned = grid.size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    ++r.status_counts[std::string(status_name(verdicts[i].status))];
    for (auto& row : rows_for(grid[i], verdicts[i]))
      r.rows.push_back(std::move(row));
  }
  std::stable_sort(r.rows.begin(), r.rows.end(), [](const CatalogRow& a, const CatalogRow& b) {
    return std::make_tuple(family_rank(a.family), a.n, a.q, a.clause, a.m.value_or(0)) <
           std::make_tuple(family_rank(b.family), b.n, b.q, b.clause, b.m.value_or(0));
  });
  for (const auto& row : r.rows)
    ++r.clause_counts[row.clause];
  return r;
}

ordered_json order_json(const FactoredInt& v) {
  return ordered_json{{"decimal", v.decimal()}, {"factored", v.to_string()}};
}

ordered_json verdict_json(const ClassifierVerdict& v) {
  ordered_json j;
  j["group"] = v.group;
  j["status"] = std::string(status_name(v.status));
  j["pairs"] = ordered_json::array();
  for (const auto& p : v.pairs) {
    ordered_json pj;
    pj["clause"] = p.clause();
    pj["H"] = descriptor_json(p.H());
    pj["M"] = descriptor_json(p.M());
    pj["conditions"] = ordered_json::array();
    for (const auto& c : p.conditions())
      pj["conditions"].push_back({{"predicate", c.predicate}, {"witness", c.witness}});
    j["pairs"].push_back(std::move(pj));
  }
  j["notes"] = v.notes;
  return j;
}

ordered_json scan_json(const ScanResult& r) {
  ordered_json j;
  j["rows"] = ordered_json::array();
  for (const auto& row : r.rows) {
    ordered_json rj;
    rj["group"] = row.group;
    rj["family"] = row.family;
    rj["n"] = row.n;
    rj["q"] = row.q;
    rj["clause"] = row.clause;
    rj["m"] = row.m ? ordered_json(*row.m) : ordered_json(nullptr);
    rj["H"] = {{"structure", row.h_structure}, {"order", order_json(row.h_order)}};
    rj["M"] = {{"structure", row.m_structure}, {"order", order_json(row.m_order)}};
    rj["status"] = row.status;
    j["rows"].push_back(std::move(rj));
  }
  ordered_json summary;
  summary["groups_scanned"] = r.groups_scanned;
  summary["row_count"] = r.rows.size();
  summary["clause_counts"] = ordered_json::object();
  for (const auto& [k, c] : r.clause_counts)
    summary["clause_counts"][k] = c;
  summary["status_counts"] = ordered_json::object();
  for (const auto& [k, c] : r.status_counts)
    summary["status_counts"][k] = c;
  j["summary"] = std::move(summary);
  return j;
}

std::string scan_csv(const ScanResult& r) {
  std::ostringstream os;
  os << "group,family,n,q,clause,m,H_structure,H_order,H_order_factored,M_structure,M_order,"
        "M_order_factored,status\n";
  for (const auto& row : r.rows) {
    os << csv_field(row.group) << ',' << row.family << ',' << row.n << ',' << row.q << ','
       << csv_field(row.clause) << ',' << (row.m ? std::to_string(*row.m) : "") << ','
       << csv_field(row.h_structure) << ',' << row.h_order.decimal() << ','
       << csv_field(row.h_order.to_string()) << ',' << csv_field(row.m_structure) << ','
       << row.m_order.decimal() << ',' << csv_field(row.m_order.to_string()) << ','
       << row.status << '\n';
  }
  os << "# groups_scanned," << r.groups_scanned << '\n';
  os << "# row_count," << r.rows.size() << '\n';
  for (const auto& [k, c] : r.clause_counts)
    os << "# clause " << k << ',' << c << '\n';
  for (const auto& [k, c] : r.status_counts)
    os << "# status " << k << ',' << c << '\n';
  return os.str();
}

ordered_json cross_check_json(const oracle::CrossCheckReport& r) {
  auto pairs = [](const auto& v) {
    ordered_json a = ordered_json::array();
    for (const auto& [h, m] : v)
      a.push_back({h, m});
    return a;
  };
  ordered_json j;
  j["group"] = "PSL(2," + std::to_string(r.q) + ")";
  j["q"] = r.q;
  j["group_order"] = r.group_order;
  j["subgroup_count"] = r.subgroup_count;
  j["conjugacy_class_count"] = r.class_count;
  j["maximal_class_orders"] = r.maximal_class_orders;
  j["oracle_pairs"] = pairs(r.oracle_pairs);
  j["classifier_pairs"] = pairs(r.classifier_pairs);
  j["agree"] = r.agree;
  return j;
}

}  // namespace coprimemax
