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

// coprimemax: classify simple groups by coprime maximal-subgroup pairs.
//
//   coprimemax classify "PSU(7,2)"
//   coprimemax scan --family psl2 --q-max 120 --format csv --out psl2.csv
//   coprimemax oracle psl2 23
//   coprimemax parse-structure "2^{9+16}.PSp_8(2)"
//
// Exit codes: 0 ok, 1 internal error, 2 parse or usage error,
// 3 non-simple parameters, 4 oracle disagreement.
// COPRIMEMAX_CACHE_DIR names a directory for the persistent factor cache.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "coprimemax/atlas.hpp"
#include "coprimemax/catalog.hpp"
#include "coprimemax/classifier.hpp"
#include "coprimemax/group_orders.hpp"
#include "coprimemax/oracle.hpp"

namespace {

using namespace coprimemax;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kParse = 2;
constexpr int kNonSimple = 3;
constexpr int kDisagree = 4;

class FactorCacheFile {
public:
  FactorCacheFile() {
    const char* dir = std::getenv("COPRIMEMAX_CACHE_DIR");
    if (!dir || !*dir)
      return;
    path_ = (std::filesystem::path(dir) / "factor_cache.txt").string();
    if (std::filesystem::exists(path_) && !factor_cache::load(path_))
      std::cerr << "warning: ignoring unreadable factor cache " << path_ << "\n";
    loaded_ = factor_cache::size();
  }
  ~FactorCacheFile() {
    if (path_.empty() || factor_cache::size() == loaded_)
      return;
    std::error_code ec;
    std::filesystem::create_directories(std::filesystem::path(path_).parent_path(), ec);
    if (!factor_cache::save(path_))
      std::cerr << "warning: could not write factor cache " << path_ << "\n";
  }

private:
  std::string path_;
  std::size_t loaded_ = 0;
};

int emit(const ordered_json& j, const std::string& out) {
  std::string text = j.dump(2) + "\n";
  if (out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << out << "\n";
    return kInternal;
  }
  f << text;
  return kOk;
}

int cmd_classify(const std::string& text) {
  GroupSpec g = parse_group_spec(text);
  return emit(verdict_json(classify(g)), "");
}

int cmd_candidates(const std::string& text) {
  GroupSpec g = parse_group_spec(text);
  ordered_json j;
  j["group"] = canonical_name(g);
  j["candidates"] = ordered_json::array();
  for (const auto& d : odd_maximal_candidates(g))
    j["candidates"].push_back({{"kind", d.kind},
                               {"structure", d.structure},
                               {"order", order_json(d.order)},
                               {"maximal", d.maximal}});
  return emit(j, "");
}

int cmd_scan(const ScanOptions& opt, const std::string& format, const std::string& out) {
  ScanResult r = run_scan(opt);
  if (format == "json")
    return emit(scan_json(r), out);
  std::string text = scan_csv(r);
  if (out.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot write " << out << "\n";
    return kInternal;
  }
  f << text;
  return kOk;
}

int cmd_oracle(unsigned q) {
  oracle::CrossCheckReport r = oracle::cross_check(q);
  int rc = emit(cross_check_json(r), "");
  if (!r.agree) {
    std::cerr << "error: oracle and classifier disagree for PSL(2," << q << ")\n";
    return kDisagree;
  }
  return rc;
}

int cmd_parse(const std::string& text) {
  StructureExpr e = parse_structure(text);
  ordered_json j;
  j["input"] = text;
  j["canonical"] = render(e);
  j["order"] = order_json(structure_order(e));
  return emit(j, "");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coprime maximal subgroup pairs in finite simple groups"};
  app.require_subcommand(1);

  std::string spec_text;
  auto* classify_cmd = app.add_subcommand("classify", "Classify one simple group");
  classify_cmd->add_option("group", spec_text, "e.g. M23, A13, PSL(2,23), PSU(7,2), E8(2)")
      ->required();

  auto* cand_cmd =
      app.add_subcommand("candidates", "List the maximal subgroups of odd order a group can have");
  cand_cmd->add_option("group", spec_text, "group spec")->required();

  ScanOptions opt;
  std::string family = "all", format = "json", out;
  auto* scan_cmd = app.add_subcommand("scan", "Scan a parameter grid into a catalog");
  scan_cmd->add_option("--family", family, "psl2|psl|psu|sporadic|alternating|all")
      ->check(CLI::IsMember({"psl2", "psl", "psu", "sporadic", "alternating", "all"}));
  scan_cmd->add_option("--q-max", opt.q_max, "largest field size")->capture_default_str();
  scan_cmd->add_option("--n-max", opt.n_max, "largest dimension")->capture_default_str();
  scan_cmd->add_option("--alt-max", opt.alternating_max, "largest alternating degree")
      ->capture_default_str();
  scan_cmd->add_option("--format", format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  scan_cmd->add_option("--out", out, "output file (default stdout)");
  scan_cmd->add_option("--threads", opt.threads, "worker threads, 0 for all cores");

  unsigned q = 0;
  std::string oracle_family;
  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force cross-check for PSL(2,q), q prime");
  oracle_cmd->add_option("family", oracle_family, "psl2")
      ->required()
      ->check(CLI::IsMember({"psl2"}));
  oracle_cmd->add_option("q", q, "prime 5..23")->required();

  std::string structure;
  auto* parse_cmd = app.add_subcommand("parse-structure", "Parse an ATLAS structure string");
  parse_cmd->add_option("text", structure, "e.g. 2^{9+16}.PSp_8(2)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  FactorCacheFile cache;
  try {
    if (*classify_cmd)
      return cmd_classify(spec_text);
    if (*cand_cmd)
      return cmd_candidates(spec_text);
    if (*scan_cmd) {
      opt.family = scan_family_from_name(family);
      return cmd_scan(opt, format, out);
    }
    if (*oracle_cmd)
      return cmd_oracle(q);
    if (*parse_cmd)
      return cmd_parse(structure);
  } catch (const NonSimpleGroup& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNonSimple;
  } catch (const SpecSyntaxError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const StructureParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const oracle::OracleRangeError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInternal;
}
