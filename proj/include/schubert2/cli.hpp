#pragma once

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "schubert2/euler_chow.hpp"
#include "schubert2/json_io.hpp"
#include "schubert2/matroid.hpp"
#include "schubert2/orbit.hpp"
#include "schubert2/partition.hpp"
#include "schubert2/schubert.hpp"

namespace schubert2::cli {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 2;
constexpr int kExitUsage = 64;
constexpr int kExitInternal = 70;

namespace detail {

inline SchubertIndex parse_index(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos)
    throw validation_error("index must be of the form a1,a2");
  try {
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
  } catch (const std::exception&) {
    throw validation_error("index must be two integers a1,a2");
  }
}

inline std::string csv_quote(const std::string& field) {
  if (field.find(',') == std::string::npos && field.find('"') == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string partition_csv(const Partition& pi) {
  std::string s;
  for (std::size_t i = 0; i < pi.parts().size(); ++i) {
    if (i) s += ",";
    s += std::to_string(pi.parts()[static_cast<std::size_t>(i)]);
  }
  return s;
}

inline std::string fixed_locus_csv(int n, const std::vector<FixedLocusRow>& rows) {
  std::ostringstream os;
  os << "pi,e,torus_dim,base,cell_dim,count,class\n";
  for (const auto& row : rows) {
    std::string base = row.geometry.base_kind == BaseKind::Point
                           ? "point"
                           : "M0_" + std::to_string(row.geometry.moduli_marks);
    os << csv_quote(partition_csv(row.pi)) << "," << row.e << "," << row.geometry.torus_dim << ","
       << base << "," << row.geometry.cell_dim << "," << orbit_count(n, row.pi).str() << ",";
    if (row.class_if_orbit) os << csv_quote(row.class_if_orbit->to_string());
    os << "\n";
  }
  return os.str();
}

inline std::optional<TreeModel> parse_model(const std::string& spec, const Partition& pi) {
  if (spec.empty() || spec == "caterpillar") return std::nullopt;
  if (spec.rfind("index:", 0) == 0) {
    int k = -1;
    try {
      k = std::stoi(spec.substr(6));
    } catch (const std::exception&) {
      throw validation_error("bad model index");
    }
    auto models = enumerate_models(pi);
    if (k < 0 || k >= static_cast<int>(models.size()))
      throw validation_error("model index out of range (0.." +
                             std::to_string(models.size() - 1) + ")");
    return models[static_cast<std::size_t>(k)];
  }
  throw validation_error("--model must be 'caterpillar' or 'index:<k>'");
}

}  // namespace detail

/// Runs one subcommand; the emitted document goes to `out` (or the file named
/// by --out). Returns a process exit code: 0 ok, 2 precondition violation,
/// 64 usage error, 70 internal invariant breach.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariants of torus-invariant subvarieties of G(2,n)"};
  app.require_subcommand(1);

  int n = 0, p = 0, max_degree = 10;
  std::string pi_text, a_text, b_text, model_text, out_path = "-";
  bool want_json = false, want_csv = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_flag("--json", want_json, "JSON output");
    cmd->add_flag("--csv", want_csv, "CSV output");
    cmd->add_option("--out", out_path, "output path, '-' for stdout");
  };

  auto* c_partitions = app.add_subcommand("partitions", "list Pi_n");
  c_partitions->add_option("--n", n)->required();
  add_common(c_partitions);

  auto* c_tau = app.add_subcommand("tau", "orbit count tau_n(pi)");
  c_tau->add_option("--n", n)->required();
  c_tau->add_option("--pi", pi_text)->required();
  add_common(c_tau);

  auto* c_matroid = app.add_subcommand("matroid", "canonical rank-2 matroid M_pi");
  c_matroid->add_option("--n", n)->required();
  c_matroid->add_option("--pi", pi_text)->required();
  add_common(c_matroid);

  auto* c_gamma = app.add_subcommand("gamma", "thin Schubert class of pi");
  c_gamma->add_option("--n", n)->required();
  c_gamma->add_option("--pi", pi_text)->required();
  add_common(c_gamma);

  auto* c_product = app.add_subcommand("product", "Schubert class product");
  c_product->add_option("--n", n)->required();
  c_product->add_option("--a", a_text)->required();
  c_product->add_option("--b", b_text)->required();
  add_common(c_product);

  auto* c_orbit = app.add_subcommand("orbit-class", "torus orbit cohomology class");
  c_orbit->add_option("--n", n)->required();
  c_orbit->add_option("--pi", pi_text)->required();
  c_orbit->add_option("--model", model_text);
  add_common(c_orbit);

  auto* c_verify = app.add_subcommand("verify-models", "orbit class over all tree models");
  c_verify->add_option("--n", n)->required();
  c_verify->add_option("--pi", pi_text)->required();
  add_common(c_verify);

  auto* c_fixed = app.add_subcommand("fixed-locus", "T-invariant p-cycle table");
  c_fixed->add_option("--n", n)->required();
  c_fixed->add_option("--p", p)->required();
  add_common(c_fixed);

  auto* c_euler = app.add_subcommand("euler-chow", "Euler-Chow series coefficients");
  c_euler->add_option("--n", n)->required();
  c_euler->add_option("--p", p)->required();
  c_euler->add_option("--max-degree", max_degree);
  add_common(c_euler);

  auto* c_beta = app.add_subcommand("beta-check", "hook coefficient vs beta invariant");
  c_beta->add_option("--pi", pi_text)->required();
  add_common(c_beta);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ExtrasError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const CLI::ParseError& e) {
    if (e.get_name() == "CallForHelp" || e.get_name() == "CallForAllHelp") {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }

  // worker cap; enumeration here is single-threaded, the cap is validated only
  if (const char* threads = std::getenv("SCHUBERT2_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(threads, &end, 10);
    if (end == threads || *end != '\0' || v < 1) {
      err << "error: SCHUBERT2_THREADS must be a positive integer\n";
      return kExitValidation;
    }
  }

  try {
    std::string document;
    if (c_partitions->parsed()) {
      json arr = json::array();
      for (const Partition& pi : enumerate_partial_partitions(n)) arr.push_back(to_json(pi));
      document = arr.dump() + "\n";
    } else if (c_tau->parsed()) {
      document = orbit_count(n, parse_partition(pi_text)).str() + "\n";
    } else if (c_matroid->parsed()) {
      document = to_json(rank2_from_partition(n, parse_partition(pi_text))).dump() + "\n";
    } else if (c_gamma->parsed()) {
      document = to_json(gamma(n, parse_partition(pi_text))).dump() + "\n";
    } else if (c_product->parsed()) {
      auto a = detail::parse_index(a_text);
      auto b = detail::parse_index(b_text);
      ClassVector prod = multiply(ClassVector::single(n, Grading::Cohomology, a),
                                  ClassVector::single(n, Grading::Cohomology, b));
      document = json{{"terms", terms_to_json(prod)}}.dump() + "\n";
    } else if (c_orbit->parsed()) {
      Partition pi = parse_partition(pi_text);
      document = to_json(orbit_class(n, pi, detail::parse_model(model_text, pi))).dump() + "\n";
    } else if (c_verify->parsed()) {
      document = to_json(verify_model_independence(n, parse_partition(pi_text))).dump() + "\n";
    } else if (c_fixed->parsed()) {
      auto rows = fixed_locus_table(n, p);
      if (want_json) {
        json arr = json::array();
        for (const auto& row : rows) {
          json r{{"pi", to_json(row.pi)},
                 {"e", row.e},
                 {"torus_dim", row.geometry.torus_dim},
                 {"base", row.geometry.base_kind == BaseKind::Point
                              ? "point"
                              : "M0_" + std::to_string(row.geometry.moduli_marks)},
                 {"cell_dim", row.geometry.cell_dim},
                 {"count", bigint_to_json(orbit_count(n, row.pi))}};
          if (row.class_if_orbit) r["class"] = to_json(*row.class_if_orbit);
          arr.push_back(r);
        }
        document = arr.dump() + "\n";
      } else {
        document = detail::fixed_locus_csv(n, rows);
      }
    } else if (c_euler->parsed()) {
      SeriesCoefficients s = (n == 4 && p == 3) ? g24_threecycle_coefficients(max_degree)
                                                : isolated_series(n, p, max_degree);
      document = series_to_json(s).dump() + "\n";
    } else if (c_beta->parsed()) {
      auto [hook, beta] = hook_beta_check(parse_partition(pi_text));
      document = json{{"hook_coeff", hook}, {"beta", beta}, {"equal", hook == beta}}.dump() + "\n";
    }

    if (out_path == "-") {
      out << document;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw validation_error("cannot open output file: " + out_path);
      f << document;
    }
    return kExitOk;
  } catch (const invariant_error& e) {
    err << "internal invariant breach: " << e.what() << "\n";
    return kExitInternal;
  } catch (const validation_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace schubert2::cli
