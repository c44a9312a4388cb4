#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "framegeo/analysis.hpp"
#include "framegeo/catalog.hpp"
#include "framegeo/errors.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitInputError = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw framegeo::SpecError("document", "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw framegeo::SpecError("out", "cannot write file: " + out_path);
  out << content;
}

struct CommonArgs {
  std::string path;
  std::string out_path;
  std::string format = "text";
  bool force = false;
};

std::string render(const framegeo::AnalysisResult& result, const std::string& format,
                   bool analyze) {
  if (format == "structured") {
    const nlohmann::json j =
        analyze ? framegeo::analyze_report_json(result) : framegeo::verify_report_json(result);
    return j.dump(2) + "\n";
  }
  return analyze ? framegeo::analyze_report_text(result) : framegeo::verify_report_text(result);
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact tensor calculus for frame-homogeneous almost contact metric manifolds"};
  app.require_subcommand(1);

  CommonArgs verify_args;
  auto* verify = app.add_subcommand(
      "verify", "check the almost contact, Kenmotsu and derived identities of a manifold");
  verify->add_option("path", verify_args.path, "manifold document (JSON)")->required();
  verify->add_option("--out", verify_args.out_path, "write the report to a file");
  verify->add_option("--format", verify_args.format, "text (default) or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  verify->add_flag("--force", verify_args.force,
                   "evaluate the derived identities even when the spec is not Kenmotsu");

  CommonArgs analyze_args;
  std::string p_flag;
  std::string variant_flag = "conformal-eta-einstein";
  auto* analyze = app.add_subcommand(
      "analyze", "solve the soliton equation exactly and classify the Ricci structure");
  analyze->add_option("path", analyze_args.path, "manifold document (JSON)")->required();
  analyze->add_option("--p", p_flag, "conformal scalar p (rational; overrides the document)");
  analyze->add_option("--variant", variant_flag,
                      "conformal-eta-einstein (default), eta-einstein, conformal-einstein or "
                      "einstein");
  analyze->add_option("--out", analyze_args.out_path, "write the report to a file");
  analyze->add_option("--format", analyze_args.format, "text (default) or structured")
      ->check(CLI::IsMember({"text", "structured"}));
  analyze->add_flag("--force", analyze_args.force,
                    "evaluate the derived identities even when the spec is not Kenmotsu");

  std::string example_name;
  auto* example = app.add_subcommand("example", "print a built-in manifold document");
  example->add_option("name", example_name, "catalog entry name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (example->parsed()) {
      const auto doc = framegeo::catalog_document(example_name);
      if (!doc) {
        std::cerr << "unknown example \"" << example_name << "\"; catalog:";
        for (const auto& entry : framegeo::builtin_catalog()) std::cerr << " " << entry.name;
        std::cerr << "\n";
        return kExitInputError;
      }
      std::cout << *doc;
      return kExitPass;
    }

    if (verify->parsed()) {
      const auto spec = framegeo::parse_spec_text(read_file(verify_args.path));
      framegeo::AnalyzeOptions options;
      options.run_soliton = false;
      options.force = verify_args.force;
      const auto result = framegeo::run_pipeline(spec, options);
      emit(render(result, verify_args.format, false), verify_args.out_path);
      return framegeo::verify_exit_code(result) == 0 ? kExitPass : kExitMathFailure;
    }

    // analyze
    const auto spec = framegeo::parse_spec_text(read_file(analyze_args.path));
    framegeo::AnalyzeOptions options;
    options.force = analyze_args.force;
    const auto variant = framegeo::variant_from_name(variant_flag);
    if (!variant) {
      std::cerr << "variant: unknown value \"" << variant_flag << "\"\n";
      return kExitInputError;
    }
    options.variant = *variant;
    if (!p_flag.empty()) {
      if (!framegeo::Rational::is_valid_literal(p_flag)) {
        std::cerr << "p: not a rational literal: \"" << p_flag << "\"\n";
        return kExitInputError;
      }
      options.p_override = framegeo::Rational::parse(p_flag);
    }
    const auto result = framegeo::run_pipeline(spec, options);
    emit(render(result, analyze_args.format, true), analyze_args.out_path);
    return framegeo::analyze_exit_code(result) == 0 ? kExitPass : kExitMathFailure;
  } catch (const framegeo::SpecError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const framegeo::EngineError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 70;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}
