// semireg: regularity and decomposition of simplicial affine semigroup rings.

#include <cstdint>
#include <iostream>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "semireg/corpus.hpp"
#include "semireg/decompose.hpp"
#include "semireg/errors.hpp"
#include "semireg/report.hpp"
#include "semireg/verify.hpp"
#include "semireg/veronese.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitCap = 3;
constexpr int kExitVerify = 4;

struct CommonFlags {
  bool json = false;
  std::uint64_t characteristic = 0;
  semireg::EnumerationCaps caps;
};

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_flag("--json", flags.json, "Emit the JSON report");
  cmd->add_option("--char", flags.characteristic, "Compute homology over F_p (0 = rationals)");
  cmd->add_option("--max-degree", flags.caps.max_degree, "Largest degree the enumeration may reach")
      ->check(CLI::NonNegativeNumber);
  cmd->add_option("--max-layer", flags.caps.max_layer, "Largest number of elements held in one degree")
      ->check(CLI::PositiveNumber);
}

semireg::HomologyOptions homology(const CommonFlags& flags) {
  semireg::HomologyOptions options;
  options.field.characteristic = flags.characteristic;
  if (flags.characteristic != 0 && !semireg::is_prime(flags.characteristic))
    throw semireg::ValidationError(semireg::ValidationRule::BadParameters,
                                   "--char " + std::to_string(flags.characteristic) + " is not a prime");
  return options;
}

enum class FileCommand { Decompose, Regularity, Properties };

int run_file_command(FileCommand which, const std::string& path, const CommonFlags& flags) {
  const auto raw = semireg::read_input_file(path);
  const auto presentation = semireg::validate(raw);
  const auto options = homology(flags);
  const auto dec = semireg::decompose(presentation, flags.caps);
  const auto report = semireg::regularity_of_semigroup(dec, options);
  if (flags.json) {
    std::cout << semireg::report_json(raw, dec, report).dump(2) << "\n";
    return kExitOk;
  }
  switch (which) {
    case FileCommand::Decompose: std::cout << semireg::render_decomposition(dec, report); break;
    case FileCommand::Regularity: std::cout << semireg::render_regularity(report); break;
    case FileCommand::Properties: std::cout << semireg::render_properties(report); break;
  }
  return kExitOk;
}

int run_veronese(semireg::VeroneseParams params, bool pipeline, const CommonFlags& flags) {
  if (params.d < 1 || params.alpha < 1)
    throw semireg::ValidationError(semireg::ValidationRule::BadParameters, "d and alpha must be positive");
  if (flags.json) {
    auto j = semireg::veronese_json(params);
    if (pipeline) {
      const auto report =
          semireg::regularity_of_semigroup(semireg::veronese_presentation(params), flags.caps, homology(flags));
      j["pipeline"] = {{"regularity", report.reg}, {"f", report.f}};
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << semireg::render_veronese(params);
  }
  if (!pipeline) return kExitOk;

  const auto report =
      semireg::regularity_of_semigroup(semireg::veronese_presentation(params), flags.caps, homology(flags));
  const auto expected_f = semireg::veronese_deg_codim(params).degree;
  const bool match = report.reg == semireg::veronese_regularity(params) &&
                     semireg::BigInt(static_cast<unsigned long>(report.f)) == expected_f;
  if (!flags.json)
    std::cout << "pipeline reg=" << report.reg << " f=" << report.f << " match=" << (match ? "yes" : "no") << "\n";
  return match ? kExitOk : kExitVerify;
}

int run_verify(const std::string& path, bool seeded, std::uint64_t seed, std::size_t count,
               const CommonFlags& flags) {
  bool all = true;
  auto emit = [&](const std::string& subject, const semireg::CheckOutcome& c) {
    all = all && c.passed;
    std::cout << (c.passed ? "ok   " : "FAIL ") << subject << c.name << " (" << c.detail << ")\n";
  };
  if (!path.empty()) {
    const auto presentation = semireg::validate(semireg::read_input_file(path));
    for (const auto& c : semireg::verify_presentation(presentation, flags.caps)) emit("", c);
  }
  if (seeded) {
    std::mt19937_64 rng(seed);
    for (std::size_t k = 0; k < count; ++k) {
      const auto presentation = semireg::random_presentation(rng);
      const std::string subject = "random#" + std::to_string(k + 1) + " ";
      for (const auto& c : semireg::verify_presentation(presentation, flags.caps)) emit(subject, c);
    }
    for (std::size_t k = 0; k < 4 * count; ++k)
      emit("random-ideal#" + std::to_string(k + 1) + " ", semireg::verify_betti(semireg::random_monomial_ideal(rng)));
  }
  std::cout << (all ? "all checks passed" : "verification FAILED") << "\n";
  return all ? kExitOk : kExitVerify;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Castelnuovo-Mumford regularity of simplicial affine semigroup rings"};
  app.require_subcommand(1);

  CommonFlags flags;
  std::string path;

  auto* decompose_cmd = app.add_subcommand("decompose", "Classes, shifts and monomial ideals of K[B]");
  auto* regularity_cmd = app.add_subcommand("regularity", "Regularity and reduction number");
  auto* properties_cmd = app.add_subcommand("properties", "Seminormal/normal/Cohen-Macaulay flags and bounds");
  for (auto* cmd : {decompose_cmd, regularity_cmd, properties_cmd}) {
    cmd->add_option("file", path, "Generator file")->required();
    add_common(cmd, flags);
  }

  semireg::VeroneseParams params;
  bool pipeline = false;
  auto* veronese_cmd = app.add_subcommand("veronese", "Closed forms for the full Veronese semigroup B_{d,alpha}");
  veronese_cmd->add_option("d", params.d, "Dimension")->required();
  veronese_cmd->add_option("alpha", params.alpha, "Degree")->required();
  veronese_cmd->add_flag("--pipeline", pipeline, "Cross-check against the full decomposition");
  add_common(veronese_cmd, flags);

  std::uint64_t seed = 0;
  std::size_t count = 50;
  auto* verify_cmd = app.add_subcommand("verify", "Compare every computation with its brute-force oracle");
  verify_cmd->add_option("file", path, "Generator file");
  auto* seed_opt = verify_cmd->add_option("--seed", seed, "Also check a random corpus drawn with this seed");
  verify_cmd->add_option("--count", count, "Random presentations in the seeded corpus");
  add_common(verify_cmd, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  try {
    if (decompose_cmd->parsed()) return run_file_command(FileCommand::Decompose, path, flags);
    if (regularity_cmd->parsed()) return run_file_command(FileCommand::Regularity, path, flags);
    if (properties_cmd->parsed()) return run_file_command(FileCommand::Properties, path, flags);
    if (veronese_cmd->parsed()) return run_veronese(params, pipeline, flags);
    if (verify_cmd->parsed()) {
      if (path.empty() && seed_opt->count() == 0) {
        std::cerr << "verify: give a file, --seed, or both\n";
        return kExitInvalid;
      }
      return run_verify(path, seed_opt->count() > 0, seed, count, flags);
    }
  } catch (const semireg::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const semireg::CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitInternal;
}
