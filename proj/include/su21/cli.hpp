#pragma once

// Command-line front end. run() returns the process exit code:
// 0 on success, 1 when a verification fails, 2 on usage errors.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "su21/classifier.hpp"
#include "su21/module.hpp"
#include "su21/render.hpp"
#include "su21/sl2.hpp"
#include "su21/unitarity.hpp"
#include "su21/verifier.hpp"

namespace su21::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kUsage = 2;

namespace detail {

struct PointOptions {
  std::optional<std::string> c;
  std::optional<long> t;
  std::optional<long> r;
  std::optional<long> s;
  std::optional<std::string> family;

  void attach(CLI::App* app, bool allow_family) {
    app->add_option("--c", c, "Parameter c, e.g. -1/2 or 1/2+3/4*i");
    app->add_option("--t", t, "Parameter t (the module is V(c, 2t))");
    app->add_option("--r", r, "Vertex parameter r of W(r,s)");
    app->add_option("--s", s, "Vertex parameter s of W(r,s)");
    if (allow_family) app->add_option("--family", family, "Family label, e.g. U(2) or W(4,3)");
  }

  struct Resolved {
    ModuleParams params;
    std::optional<SupportRegion> region;
  };

  [[nodiscard]] Resolved resolve(bool allow_family) const {
    const bool cone = c || t;
    const bool vertex = r || s;
    const int given = int(cone) + int(vertex) + int(allow_family && family.has_value());
    if (given != 1) {
      throw InvalidParameter(allow_family ? "give exactly one of --c/--t, --r/--s or --family"
                                          : "give exactly one of --c/--t or --r/--s");
    }
    if (family) {
      FamilyLabel label = FamilyLabel::parse(*family);
      return {representative_params(label), support_of_label(label)};
    }
    if (cone) {
      if (!c || !t) throw InvalidParameter("--c and --t must be given together");
      return {ModuleParams::cone(GaussianRational::parse(*c), *t), std::nullopt};
    }
    if (!r || !s) throw InvalidParameter("--r and --s must be given together");
    return {ModuleParams::vertex(*r, *s), std::nullopt};
  }
};

inline void check_max_n(long max_n) {
  if (max_n < 1) throw InvalidParameter("--max-n must be >= 1");
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("'" + path + "' is not valid JSON: " + e.what());
  }
}

/// Full verification of a stored module: commutators, coefficient relations,
/// agreement of the stored action with a fresh build, and the adjoint condition
/// when norms are present.
inline VerificationReport verify_module_json(const nlohmann::json& j) {
  TruncatedModule mod = module_from_json(j);
  VerificationReport report = check_commutators(mod);
  report.merge(check_coefficient_relations(mod.params(), mod.support(), mod.max_n()));

  const TruncatedModule fresh = build(mod.params(), mod.support(), mod.max_n());
  for (Generator g : kAllGenerators) {
    for (const BasisIndex& v : mod.basis()) {
      ++report.checked;
      Vector diff = mod.row(g, v) - fresh.row(g, v);
      if (!diff.empty()) report.failures.push_back({"stored_action_" + std::string(to_string(g)), v, diff});
    }
  }
  if (j.contains("norms")) {
    NormTable norms = j.at("norms").get<NormTable>();
    report.merge(check_adjoint(mod, norms));
  }
  return report;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact (g,K)-modules of SU(2,1): classification, construction and verification", "su21"};
  app.require_subcommand(1);

  detail::PointOptions classify_opts;
  CLI::App* classify_cmd = app.add_subcommand("classify", "Classify a parameter point");
  classify_opts.attach(classify_cmd, false);

  detail::PointOptions build_opts;
  long build_max_n = 0;
  std::optional<std::string> build_out;
  bool build_norms_flag = false;
  CLI::App* build_cmd = app.add_subcommand("build", "Build a truncated module and write it as JSON");
  build_opts.attach(build_cmd, true);
  build_cmd->add_option("--max-n", build_max_n, "Largest K-type dimension n")->required();
  build_cmd->add_option("--out", build_out, "Output path (default: stdout)");
  build_cmd->add_flag("--norms", build_norms_flag, "Attach the invariant Hermitian form");

  std::string verify_path;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Verify a module JSON file");
  verify_cmd->add_option("path", verify_path, "Module JSON file")->required();

  detail::PointOptions unitary_opts;
  long unitary_max_n = 0;
  CLI::App* unitary_cmd = app.add_subcommand("unitary", "Decide unitarity of a module");
  unitary_opts.attach(unitary_cmd, true);
  unitary_cmd->add_option("--max-n", unitary_max_n, "Explicit scan depth")->required();

  std::string spectrum_family;
  long spectrum_max_n = 0;
  std::string spectrum_format = "json";
  CLI::App* spectrum_cmd = app.add_subcommand("spectrum", "List or draw the K-types of a family member");
  spectrum_cmd->add_option("--family", spectrum_family, "Family label")->required();
  spectrum_cmd->add_option("--max-n", spectrum_max_n, "Largest K-type dimension n")->required();
  spectrum_cmd->add_option("--format", spectrum_format, "json, text or svg")
      ->check(CLI::IsMember({"json", "text", "svg"}));

  long t_max = 0;
  long r_max = 0;
  CLI::App* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate the unitary dual within bounds");
  enumerate_cmd->add_option("--t-max", t_max, "Largest |t|")->required()->check(CLI::NonNegativeNumber);
  enumerate_cmd->add_option("--r-max", r_max, "Largest r")->required()->check(CLI::NonNegativeNumber);

  CLI::App* sl2_cmd = app.add_subcommand("sl2", "SL(2,R) baseline");
  sl2_cmd->require_subcommand(1);
  std::string sl2_lambda;
  std::string sl2_parity;
  CLI::App* sl2_classify_cmd = sl2_cmd->add_subcommand("classify", "Classify (lambda, parity)");
  sl2_classify_cmd->add_option("--lambda", sl2_lambda, "lambda, e.g. 1/2 or 3/2*i")->required();
  sl2_classify_cmd->add_option("--parity", sl2_parity, "even or odd")->required();

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("su21");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) {
      auto point = classify_opts.resolve(false);
      out << nlohmann::json(classify(point.params)).dump(2) << "\n";
      return kOk;
    }
    if (*build_cmd) {
      detail::check_max_n(build_max_n);
      auto point = build_opts.resolve(true);
      const SupportRegion region = point.region ? *point.region : default_support(point.params);
      TruncatedModule mod = build(point.params, region, build_max_n);
      nlohmann::json j = module_to_json(mod);
      if (build_norms_flag) j["norms"] = build_norms(mod);
      if (build_out) {
        std::ofstream file(*build_out);
        if (!file) throw ParseError("cannot write '" + *build_out + "'");
        file << j.dump(2) << "\n";
      } else {
        out << j.dump(2) << "\n";
      }
      return kOk;
    }
    if (*verify_cmd) {
      VerificationReport report = detail::verify_module_json(detail::read_json_file(verify_path));
      out << nlohmann::json(report).dump(2) << "\n";
      return report.verified() ? kOk : kVerificationFailed;
    }
    if (*unitary_cmd) {
      detail::check_max_n(unitary_max_n);
      auto point = unitary_opts.resolve(true);
      const SupportRegion region = point.region ? *point.region : default_support(point.params);
      nlohmann::json j = is_unitary(point.params, region, unitary_max_n);
      j["params"] = point.params;
      j["support"] = region;
      out << j.dump(2) << "\n";
      return kOk;
    }
    if (*spectrum_cmd) {
      detail::check_max_n(spectrum_max_n);
      nlohmann::json spectrum = spectrum_json(FamilyLabel::parse(spectrum_family), spectrum_max_n);
      if (spectrum_format == "json") out << spectrum.dump(2) << "\n";
      else if (spectrum_format == "text") out << render_text(spectrum);
      else out << render_svg(spectrum);
      return kOk;
    }
    if (*enumerate_cmd) {
      out << nlohmann::json(enumerate(t_max, r_max)).dump(2) << "\n";
      return kOk;
    }
    if (*sl2_classify_cmd) {
      Sl2Params params{GaussianRational::parse(sl2_lambda), parity_from_string(sl2_parity)};
      nlohmann::json j = sl2_classify(params);
      j["lambda"] = params.lambda;
      j["parity"] = to_string(params.parity);
      out << j.dump(2) << "\n";
      return kOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  err << app.help();
  return kUsage;
}

}  // namespace su21::cli
