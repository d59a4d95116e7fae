// lefschetz_cli: signature and Betti numbers of planar Lefschetz fibrations.
//
//   lefschetz_cli compute [--format json|table] [--force] [FILE|-]
//   lefschetz_cli examples --family y1|y2 --r N [--format json|table]
//   lefschetz_cli fuzz --seed S --count N --max-r R --max-m M [--serial]
//
// Exit codes: 0 ok, 1 fuzz property violation, 2 usage/parse/validation
// error, 3 non-allowable cycle without --force, 4 internal disagreement.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "lefschetz/batch.hpp"
#include "lefschetz/document.hpp"

#ifndef LEFSCHETZ_VERSION
#define LEFSCHETZ_VERSION "dev"
#endif

namespace {

using namespace lefschetz;

enum ExitCode : int {
  kOk = 0,
  kPropertyViolation = 1,
  kInvalidInput = 2,
  kNotAllowable = 3,
  kInternal = 4,
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError(path + ": cannot open file");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void emit_report(const PlanarFibration& f, const FullReport& full, const std::string& format) {
  if (format == "table")
    std::cout << report_to_table(f, full);
  else
    std::cout << report_to_json(f, full).dump(2) << '\n';
}

int run_compute(const std::string& path, const std::string& format, bool force) {
  try {
    const auto doc = parse_fibration_text(read_input(path), force);
    const auto full = compute_full_report(doc.fibration);
    emit_report(doc.fibration, full, format);
    if (!full.report.oracle_agrees) {
      std::cerr << "error: Wall oracle signature " << full.report.oracle_sigma
                << " disagrees with formula signature " << full.report.sigma << '\n';
      return kInternal;
    }
    return kOk;
  } catch (const DocumentError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const NotAllowableError& e) {
    std::cerr << "error: " << e.what() << " (use --force to compute anyway)\n";
    return kNotAllowable;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

int run_examples(const std::string& family, int r, const std::string& format) {
  if (r < 2) {
    std::cerr << "error: --r must be at least 2\n";
    return kInvalidInput;
  }
  try {
    const bool y1 = family == "y1";
    const PlanarFibration f = y1 ? example_y1(r) : example_y2(r);
    const long expected = y1 ? y1_signature_closed_form(r) : y2_signature_closed_form(r);
    const auto full = compute_full_report(f);

    if (format == "table") {
      std::cout << "document: " << fibration_to_json(f).dump() << '\n';
      std::cout << report_to_table(f, full);
      std::cout << "closed-form signature      " << expected << '\n';
    } else {
      Json out = Json::object();
      out["family"] = family;
      out["r"] = r;
      out["closed_form_sigma"] = expected;
      out["document"] = fibration_to_json(f);
      out["report"] = report_to_json(f, full);
      std::cout << out.dump(2) << '\n';
    }

    if (!full.report.oracle_agrees || full.report.sigma != expected) {
      std::cerr << "error: computed signature " << full.report.sigma << " (oracle "
                << full.report.oracle_sigma << ") does not match closed form " << expected
                << '\n';
      return kInternal;
    }
    return kOk;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

int run_fuzz(std::uint64_t seed, std::size_t count, int max_r, int max_m, bool serial) {
  if (max_r < 1 || max_m < 1) {
    std::cerr << "error: --max-r and --max-m must be positive\n";
    return kInvalidInput;
  }
  const FuzzConfig config{seed, count, max_r, max_m};
  const auto batch = random_fibrations(config);
  const auto summary = serial ? check_serial(batch) : check_parallel(batch);

  std::cout << "fuzz seed=" << seed << " count=" << count << " max_r=" << max_r
            << " max_m=" << max_m << '\n'
            << "passed " << summary.passed << " / " << summary.total << '\n'
            << "failed " << summary.failures.size() << '\n';
  for (const auto& failure : summary.failures) {
    std::cout << "instance " << failure.index << ':';
    for (const auto& v : failure.violations) std::cout << ' ' << v;
    std::cout << "\n  document: " << fibration_to_json(batch[failure.index]).dump() << '\n';
  }
  return summary.failures.empty() ? kOk : kPropertyViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact signature and Betti numbers of Lefschetz fibrations over the disk "
               "with planar fiber"};
  app.set_version_flag("--version", std::string("lefschetz_cli ") + LEFSCHETZ_VERSION);
  app.require_subcommand(1);

  std::string format = "json";
  bool force = false;
  std::string input = "-";
  auto* compute = app.add_subcommand("compute", "Compute invariants of a fibration document");
  compute->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));
  compute->add_flag("--force", force, "Accept null-homologous vanishing cycles");
  compute->add_option("file", input, "Input document, or - for stdin");

  std::string family;
  int r = 0;
  auto* examples = app.add_subcommand("examples", "Generate and evaluate an example family");
  examples->add_option("--family", family, "Example family")
      ->required()
      ->check(CLI::IsMember({"y1", "y2"}));
  examples->add_option("--r", r, "Family parameter (>= 2)")->required();
  examples->add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"json", "table"}));

  std::uint64_t seed = 1;
  std::size_t count = 100;
  int max_r = 4;
  int max_m = 10;
  bool serial = false;
  auto* fuzz = app.add_subcommand("fuzz", "Check invariants on seeded random fibrations");
  fuzz->add_option("--seed", seed, "Random seed")->required();
  fuzz->add_option("--count", count, "Number of instances")->required();
  fuzz->add_option("--max-r", max_r, "Largest r")->required();
  fuzz->add_option("--max-m", max_m, "Largest cycle count")->required();
  fuzz->add_flag("--serial", serial, "Use the single-threaded reference path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInvalidInput;
  }

  if (*compute) return run_compute(input, format, force);
  if (*examples) return run_examples(family, r, format);
  return run_fuzz(seed, count, max_r, max_m, serial);
}
