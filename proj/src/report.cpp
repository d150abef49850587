#include "foldedchar/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace foldedchar {

CaseSpec parse_case_spec(const std::string& text) {
  auto first = text.find(',');
  if (first == std::string::npos) throw std::invalid_argument("malformed case spec: " + text);
  auto second = text.find(',', first + 1);
  if (second == std::string::npos) throw std::invalid_argument("malformed case spec: " + text);
  CaseSpec spec;
  spec.type = text.substr(0, first);
  spec.sigma = text.substr(first + 1, second - first - 1);
  spec.lambda = text.substr(second + 1);
  if (spec.type.empty() || spec.lambda.empty())
    throw std::invalid_argument("malformed case spec: " + text);
  return spec;
}

Weight parse_weight(const std::string& text, int rank) {
  std::vector<long long> c;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      c.push_back(std::stoll(item, &used));
      while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used]))) ++used;
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed weight coordinate: " + item);
    }
  }
  if (static_cast<int>(c.size()) != rank)
    throw std::invalid_argument("weight has " + std::to_string(c.size()) +
                                " coordinates, expected " + std::to_string(rank));
  return Weight(std::move(c));
}

std::vector<CaseSpec> default_catalog() {
  std::vector<CaseSpec> cat;
  // A2: all sigma-invariant dominant weights with dim <= 200.
  RootDatum a2 = make_datum("A2");
  for (long long k = 1;; ++k) {
    Weight lambda(std::vector<long long>{k, k});
    if (weyl_dimension(a2, lambda) > 200) break;
    cat.push_back({"A2", "(1 2)", std::to_string(k) + "," + std::to_string(k)});
  }
  cat.push_back({"A3", "(1 3)", "1,0,1"});
  cat.push_back({"A3", "(1 3)", "0,1,0"});
  cat.push_back({"A3", "(1 3)", "1,1,1"});
  cat.push_back({"A4", "(1 4)(2 3)", "1,0,0,1"});
  cat.push_back({"A4", "(1 4)(2 3)", "0,1,1,0"});
  cat.push_back({"A5", "(1 5)(2 4)", "0,0,1,0,0"});
  cat.push_back({"D4", "(3 4)", "1,0,0,0"});
  cat.push_back({"D4", "(3 4)", "0,1,0,0"});
  cat.push_back({"D4", "(1 3 4)", "0,1,0,0"});
  cat.push_back({"D4", "(1 3 4)", "0,2,0,0"});
  cat.push_back({"D5", "(4 5)", "1,0,0,0,0"});
  cat.push_back({"E6", "(1 6)(3 5)", "0,1,0,0,0,0"});
  return cat;
}

Json weight_json(const Weight& mu) {
  Json arr = Json::array();
  for (long long x : mu.c) arr.push_back(x);
  return arr;
}

Json case_report_json(const CaseSpec& spec, const VerifiedCase& result) {
  Json j;
  j["case"] = {{"type", spec.type}, {"sigma", spec.sigma}, {"lambda", spec.lambda}};
  Json orbits = Json::array();
  for (std::size_t o = 0; o < result.folded.orbits.size(); ++o) {
    Json nodes = Json::array();
    for (int i : result.folded.orbits[o]) nodes.push_back(i + 1);
    orbits.push_back({{"nodes", nodes},
                      {"h", result.folded.h_values[o]},
                      {"alpha", weight_json(result.folded.alpha_orbit[o])}});
  }
  j["orbits"] = orbits;
  j["folded_type"] = result.folded.folded.type_label();
  Json entries = Json::array();
  for (const JantzenRow& row : result.jantzen.rows) {
    entries.push_back({{"mu", weight_json(row.mu)},
                       {"trace", row.trace.convert_to<long long>()},
                       {"folded_dim", row.folded_dim.convert_to<long long>()},
                       {"ok", row.ok}});
  }
  j["entries"] = entries;
  Json samples = Json::array();
  for (const CorollarySample& s : result.corollary.samples)
    samples.push_back({{"error", s.error}, {"ok", s.ok}});
  j["corollary"] = {{"tol", result.corollary.tol},
                    {"samples", samples},
                    {"ok", result.corollary.ok}};
  j["ok"] = result.ok();
  return j;
}

Json catalog_report_json(const std::vector<std::pair<CaseSpec, VerifiedCase>>& results) {
  Json j;
  Json cases = Json::array();
  bool ok = true;
  for (const auto& [spec, result] : results) {
    cases.push_back(case_report_json(spec, result));
    ok = ok && result.ok();
  }
  j["cases"] = cases;
  j["ok"] = ok;
  return j;
}

std::string case_report_table(const CaseSpec& spec, const VerifiedCase& result) {
  std::ostringstream out;
  out << "# " << spec.display() << "\tfolded=" << result.folded.folded.type_label() << "\n";
  out << "mu\ttrace\tfolded_dim\tok\n";
  for (const JantzenRow& row : result.jantzen.rows) {
    for (std::size_t i = 0; i < row.mu.c.size(); ++i)
      out << (i ? "," : "") << row.mu.c[i];
    out << "\t" << row.trace << "\t" << row.folded_dim << "\t" << (row.ok ? "ok" : "FAIL") << "\n";
  }
  out << "corollary\tmax_error=";
  double worst = 0.0;
  for (const CorollarySample& s : result.corollary.samples) worst = std::max(worst, s.error);
  out << worst << "\t" << (result.corollary.ok ? "ok" : "FAIL") << "\n";
  return out.str();
}

}  // namespace foldedchar
