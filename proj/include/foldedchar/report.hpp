#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "foldedchar/twining.hpp"

namespace foldedchar {

using Json = nlohmann::ordered_json;

/// One verification case as it appears on the command line: a type label, a
/// diagram automorphism in cycle notation, and a highest weight as
/// comma-separated fundamental coordinates.
struct CaseSpec {
  std::string type;
  std::string sigma;
  std::string lambda;

  std::string display() const { return type + "/" + sigma + "/" + lambda; }
};

/// Parses "A3,(1 3),1,0,1": the first two commas separate type and sigma, the
/// rest is the weight. Throws std::invalid_argument on malformed input.
CaseSpec parse_case_spec(const std::string& text);

Weight parse_weight(const std::string& text, int rank);

/// The embedded verification catalog: every supported folding with the
/// highest weights exercised by `verify --catalog default`. For A2 all
/// sigma-invariant dominant weights of dimension at most 200 are included.
std::vector<CaseSpec> default_catalog();

Json weight_json(const Weight& mu);

/// Full per-case report: {case, orbits, folded_type, entries, corollary, ok}.
/// Entries run from lambda downward and list every sigma-invariant mu even on
/// pass.
Json case_report_json(const CaseSpec& spec, const VerifiedCase& result);

/// Batch report for a catalog run: {cases: [...], ok}.
Json catalog_report_json(const std::vector<std::pair<CaseSpec, VerifiedCase>>& results);

/// Tab-separated rendering of a case report for --format table.
std::string case_report_table(const CaseSpec& spec, const VerifiedCase& result);

}  // namespace foldedchar
