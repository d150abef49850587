// Command-line surface for root-datum folding, weight multiplicities, and
// twining-character verification.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "foldedchar/report.hpp"

namespace fc = foldedchar;

namespace {

long long default_cap() {
  if (const char* env = std::getenv("FOLDEDCHAR_MAX_DIM")) {
    try {
      return std::stoll(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("FOLDEDCHAR_MAX_DIM is not an integer");
    }
  }
  return fc::kDefaultDimCap;
}

void print_matrix_rows(std::ostream& out, const std::vector<std::vector<long long>>& m) {
  for (const auto& row : m) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "\t" : "") << row[j];
    out << "\n";
  }
}

int cmd_fold(const std::string& type, const std::string& sigma_text, const std::string& format) {
  fc::RootDatum d = fc::make_datum(type);
  fc::DiagramAutomorphism sigma = fc::parse_cycles(sigma_text, d.rank());
  fc::FoldedDatum f = fc::fold(d, sigma);
  if (format == "json") {
    fc::Json j;
    j["type"] = type;
    j["sigma"] = sigma_text;
    fc::Json orbits = fc::Json::array();
    for (std::size_t o = 0; o < f.orbits.size(); ++o) {
      fc::Json nodes = fc::Json::array();
      for (int i : f.orbits[o]) nodes.push_back(i + 1);
      orbits.push_back({{"nodes", nodes},
                        {"h", f.h_values[o]},
                        {"alpha", fc::weight_json(f.alpha_orbit[o])}});
    }
    j["orbits"] = orbits;
    j["cartan"] = f.folded.cartan_matrix();
    j["label"] = f.folded.type_label();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "source\t" << type << "\tsigma\t" << sigma_text << "\n";
    for (std::size_t o = 0; o < f.orbits.size(); ++o) {
      std::cout << "orbit";
      for (int i : f.orbits[o]) std::cout << " " << i + 1;
      std::cout << "\th=" << f.h_values[o] << "\talpha_O=";
      for (std::size_t i = 0; i < f.alpha_orbit[o].c.size(); ++i)
        std::cout << (i ? "," : "") << f.alpha_orbit[o].c[i];
      std::cout << "\n";
    }
    std::cout << "folded Cartan:\n";
    print_matrix_rows(std::cout, f.folded.cartan_matrix());
    std::cout << "label\t" << f.folded.type_label() << "\n";
  }
  return 0;
}

int cmd_char(const std::string& type, const std::string& weight_text, const std::string& format,
             long long cap) {
  fc::RootDatum d = fc::make_datum(type);
  fc::Weight lambda = fc::parse_weight(weight_text, d.rank());
  fc::Character ch = fc::freudenthal(d, lambda, cap);
  auto rows = fc::sorted_support(d, ch);
  if (format == "json") {
    fc::Json j;
    j["type"] = type;
    j["weight"] = fc::weight_json(lambda);
    fc::Json entries = fc::Json::array();
    for (const fc::Weight& mu : rows)
      entries.push_back(
          {{"mu", fc::weight_json(mu)}, {"mult", ch.mults.at(mu).convert_to<long long>()}});
    j["entries"] = entries;
    j["total"] = ch.total.convert_to<long long>();
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "mu\tmult\n";
    for (const fc::Weight& mu : rows) {
      for (std::size_t i = 0; i < mu.c.size(); ++i) std::cout << (i ? "," : "") << mu.c[i];
      std::cout << "\t" << ch.mults.at(mu) << "\n";
    }
    std::cout << "total\t" << ch.total << "\n";
  }
  return 0;
}

int cmd_twine(const std::string& type, const std::string& sigma_text,
              const std::string& weight_text, const std::string& format, long long cap,
              int torus_samples, double tol, unsigned long long seed) {
  fc::RootDatum d = fc::make_datum(type);
  fc::DiagramAutomorphism sigma = fc::parse_cycles(sigma_text, d.rank());
  fc::Weight lambda = fc::parse_weight(weight_text, d.rank());
  fc::VerifiedCase result = fc::verify_case(d, sigma, lambda, cap, torus_samples, tol, seed);
  fc::CaseSpec spec{type, sigma_text, weight_text};
  if (format == "json")
    std::cout << fc::case_report_json(spec, result).dump(2) << "\n";
  else
    std::cout << fc::case_report_table(spec, result);
  return result.ok() ? 0 : 1;
}

int cmd_verify(const std::string& catalog, const std::string& case_text, const std::string& format,
               long long cap, int torus_samples, double tol, unsigned long long seed) {
  std::vector<fc::CaseSpec> specs;
  if (!case_text.empty())
    specs.push_back(fc::parse_case_spec(case_text));
  else if (catalog == "default")
    specs = fc::default_catalog();
  else
    throw std::invalid_argument("unknown catalog: " + catalog);

  std::vector<std::pair<fc::CaseSpec, fc::VerifiedCase>> results;
  for (const fc::CaseSpec& spec : specs) {
    fc::RootDatum d = fc::make_datum(spec.type);
    fc::DiagramAutomorphism sigma = fc::parse_cycles(spec.sigma, d.rank());
    fc::Weight lambda = fc::parse_weight(spec.lambda, d.rank());
    results.emplace_back(spec, fc::verify_case(d, sigma, lambda, cap, torus_samples, tol, seed));
  }
  fc::Json report = fc::catalog_report_json(results);
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& [spec, result] : results) std::cout << fc::case_report_table(spec, result);
    std::cout << "summary\t" << (report["ok"].get<bool>() ? "ok" : "FAIL") << "\n";
  }
  return report["ok"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact folding of simply-laced root data and twining-character verification"};
  app.require_subcommand(1);

  std::string type, sigma_text, weight_text, case_text;
  std::string catalog = "default";
  std::string format = "table";
  long long cap = 0;
  int torus_samples = 10;
  double tol = 1e-8;
  unsigned long long seed = 0;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"table", "json"}));
  };

  CLI::App* fold_cmd = app.add_subcommand("fold", "Fold a simply-laced datum along sigma");
  fold_cmd->add_option("--type", type, "Cartan type label")->required();
  fold_cmd->add_option("--auto", sigma_text, "Diagram automorphism in cycle notation")->required();
  add_format(fold_cmd);

  CLI::App* char_cmd = app.add_subcommand("char", "Weight multiplicities of V(lambda)");
  char_cmd->add_option("--type", type, "Cartan type label")->required();
  char_cmd->add_option("--weight", weight_text, "Highest weight, comma-separated")->required();
  char_cmd->add_option("--max-dim", cap, "Dimension cap");
  add_format(char_cmd);

  CLI::App* twine_cmd = app.add_subcommand("twine", "Twining character with folded comparison");
  twine_cmd->add_option("--type", type, "Cartan type label")->required();
  twine_cmd->add_option("--auto", sigma_text, "Diagram automorphism in cycle notation")->required();
  twine_cmd->add_option("--weight", weight_text, "Highest weight, comma-separated")->required();
  twine_cmd->add_option("--max-dim", cap, "Dimension cap");
  twine_cmd->add_option("--torus-samples", torus_samples, "Corollary sample count");
  twine_cmd->add_option("--tol", tol, "Corollary tolerance");
  twine_cmd->add_option("--seed", seed, "Torus-element RNG seed");
  add_format(twine_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "Batch verification of the theorem");
  verify_cmd->add_option("--catalog", catalog, "Embedded catalog name");
  verify_cmd->add_option("--case", case_text, "Single case: TYPE,SIGMA,W1,W2,...");
  verify_cmd->add_option("--max-dim", cap, "Dimension cap");
  verify_cmd->add_option("--torus-samples", torus_samples, "Corollary sample count");
  verify_cmd->add_option("--tol", tol, "Corollary tolerance");
  verify_cmd->add_option("--seed", seed, "Torus-element RNG seed");
  add_format(verify_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cap == 0) cap = default_cap();
    if (fold_cmd->parsed()) return cmd_fold(type, sigma_text, format);
    if (char_cmd->parsed()) return cmd_char(type, weight_text, format, cap);
    if (twine_cmd->parsed())
      return cmd_twine(type, sigma_text, weight_text, format, cap, torus_samples, tol, seed);
    return cmd_verify(catalog, case_text, format, cap, torus_samples, tol, seed);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
