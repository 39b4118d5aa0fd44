// Command-line driver: dissociation-curve scans, format conversion and exact
// diagonalization of bundled or user-supplied Hamiltonians.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "varqa/errors.hpp"
#include "varqa/scan.hpp"
#include "varqa/units.hpp"

namespace {

varqa::ExcitedRule parse_excited_rule(const std::string& text, double alpha_shift) {
  // "0.475:5,0.75:3,1" -> k=5 below 0.475, k=3 below 0.75, else k=1.
  varqa::ExcitedRule rule;
  rule.alpha_shift = alpha_shift;
  std::stringstream ss(text);
  std::string entry;
  bool have_default = false;
  while (std::getline(ss, entry, ',')) {
    if (entry.empty()) continue;
    const auto colon = entry.find(':');
    if (colon == std::string::npos) {
      rule.default_k = std::stoi(entry);
      have_default = true;
    } else {
      rule.below.emplace_back(std::stod(entry.substr(0, colon)),
                              std::stoi(entry.substr(colon + 1)));
    }
  }
  if (!have_default && !rule.below.empty()) rule.default_k = rule.below.back().second;
  return rule;
}

std::vector<std::size_t> parse_coordinates(const std::string& text) {
  std::vector<std::size_t> coords;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) coords.push_back(static_cast<std::size_t>(std::stoul(tok)));
  return coords;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"VarQA: annealing-sampled variational search for electronic ground "
               "and excited states"};
  app.require_subcommand(1);

  // --- scan ---------------------------------------------------------------
  auto* scan_cmd = app.add_subcommand(
      "scan", "run the variational search over one or more Hamiltonian files");
  std::vector<std::string> files;
  std::string digitizer = "d2", mode = "exhaustive", backend = "gibbs";
  std::string ordering = "blocked", output, report_path, excited_spec, ft_coords;
  std::uint64_t trials = 100000, samples = 1000, seed = 1, sweeps = 1000;
  double beta = 1.0, alpha_shift = 2.0, beta_start = 0.1, beta_end = 10.0;
  double support_floor = 0.0;
  bool do_fine_tune = false, timing = false, infinite_shots = false;
  int threads = 1;
  scan_cmd->add_option("files", files, "FCIDUMP or Pauli text inputs")->required();
  scan_cmd->add_option("--digitizer", digitizer, "d1 or d2")->check(CLI::IsMember({"d1", "d2"}));
  scan_cmd->add_option("--mode", mode, "exhaustive or random")
      ->check(CLI::IsMember({"exhaustive", "random"}));
  scan_cmd->add_option("--trials,-T", trials, "random-mode trial count");
  scan_cmd->add_option("--samples,-S", samples, "anneals per trial");
  scan_cmd->add_option("--backend", backend, "gibbs or sa")
      ->check(CLI::IsMember({"gibbs", "sa"}));
  scan_cmd->add_option("--beta", beta, "exact-Gibbs inverse temperature");
  scan_cmd->add_flag("--infinite-shots", infinite_shots,
                     "exact-Gibbs: use exact probabilities instead of S counts");
  scan_cmd->add_option("--support-floor", support_floor,
                       "drop outcomes below this probability before the sign search");
  scan_cmd->add_option("--sweeps", sweeps, "SA sweeps per anneal");
  scan_cmd->add_option("--beta-start", beta_start, "SA schedule start");
  scan_cmd->add_option("--beta-end", beta_end, "SA schedule end");
  scan_cmd->add_option("--seed", seed, "master seed");
  scan_cmd->add_flag("--fine-tune", do_fine_tune, "coordinate descent from the optimum");
  scan_cmd->add_option("--fine-tune-coords", ft_coords,
                       "comma-separated flat parameter indices to tune");
  scan_cmd->add_option("--excited-k", excited_spec,
                       "eigenstate index rule, e.g. '0.475:5,0.75:3,1'");
  scan_cmd->add_option("--alpha-shift", alpha_shift, "deflation shift in Hartree");
  scan_cmd->add_option("--ordering", ordering, "blocked or interleaved")
      ->check(CLI::IsMember({"blocked", "interleaved"}));
  scan_cmd->add_option("--output,-o", output, "CSV output path");
  scan_cmd->add_option("--report", report_path, "plain-text run report path");
  scan_cmd->add_option("--threads", threads, "worker threads per search (0 = auto)");
  scan_cmd->add_flag("--timing", timing, "emit real wall times in the CSV");

  // --- convert ------------------------------------------------------------
  auto* convert_cmd = app.add_subcommand("convert", "convert FCIDUMP to Pauli text");
  std::string conv_in, conv_out, conv_from, conv_to, conv_ordering = "blocked";
  convert_cmd->add_option("input", conv_in)->required();
  convert_cmd->add_option("output", conv_out)->required();
  convert_cmd->add_option("--from", conv_from, "fcidump or pauli_text");
  convert_cmd->add_option("--to", conv_to, "pauli_text");
  convert_cmd->add_option("--ordering", conv_ordering, "blocked or interleaved")
      ->check(CLI::IsMember({"blocked", "interleaved"}));

  // --- ed -----------------------------------------------------------------
  auto* ed_cmd = app.add_subcommand("ed", "exact diagonalization of one input");
  std::string ed_file, ed_ordering = "blocked";
  int ed_count = 8, ed_sector = -1;
  ed_cmd->add_option("file", ed_file)->required();
  ed_cmd->add_option("--lowest,-k", ed_count, "number of eigenvalues to print");
  ed_cmd->add_option("--sector", ed_sector, "restrict to a particle-number sector");
  ed_cmd->add_option("--ordering", ed_ordering, "blocked or interleaved")
      ->check(CLI::IsMember({"blocked", "interleaved"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*scan_cmd) {
      varqa::ScanConfig config;
      for (const auto& f : files)
        config.sources.push_back(
            {varqa::label_from_path(f), f, varqa::format_from_path(f)});
      config.digitizer =
          digitizer == "d1" ? varqa::DigitizerKind::d1 : varqa::DigitizerKind::d2;
      config.exhaustive = mode == "exhaustive";
      config.random_trials = trials;
      config.sampler.backend = backend == "gibbs" ? varqa::SamplerBackend::exact_gibbs
                                                  : varqa::SamplerBackend::simulated_annealing;
      config.sampler.beta = beta;
      config.sampler.samples = samples;
      config.sampler.infinite_shots = infinite_shots;
      config.sampler.schedule.sweeps = static_cast<int>(sweeps);
      config.sampler.schedule.beta_start = beta_start;
      config.sampler.schedule.beta_end = beta_end;
      config.support_floor = support_floor;
      if (!excited_spec.empty()) config.excited = parse_excited_rule(excited_spec, alpha_shift);
      config.fine_tune = do_fine_tune;
      config.fine_tune_coordinates = parse_coordinates(ft_coords);
      config.ordering = varqa::ordering_from_string(ordering);
      config.master_seed = seed;
      config.threads = threads;
      config.report_timing = timing;

      const std::vector<varqa::ScanRow> rows = varqa::run_scan(config);
      const std::string csv = varqa::scan_csv(rows, timing);
      if (output.empty())
        std::cout << csv;
      else
        varqa::write_scan_csv(output, rows, timing);
      if (!report_path.empty()) {
        std::ofstream rep(report_path);
        rep << varqa::scan_report(config, rows);
      } else if (!output.empty()) {
        std::cerr << varqa::scan_report(config, rows);
      }
      for (const auto& row : rows)
        if (row.failed()) return 1;
      return 0;
    }

    if (*convert_cmd) {
      const varqa::SourceFormat from =
          conv_from.empty() ? varqa::format_from_path(conv_in)
                            : (conv_from == "fcidump" ? varqa::SourceFormat::fcidump
                                                      : varqa::SourceFormat::pauli_text);
      const varqa::SourceFormat to =
          conv_to.empty() ? varqa::format_from_path(conv_out)
                          : (conv_to == "fcidump" ? varqa::SourceFormat::fcidump
                                                  : varqa::SourceFormat::pauli_text);
      varqa::convert(conv_in, from, conv_out, to, varqa::ordering_from_string(conv_ordering));
      return 0;
    }

    if (*ed_cmd) {
      const varqa::PauliHamiltonian h = varqa::load_hamiltonian(
          {varqa::label_from_path(ed_file), ed_file, varqa::format_from_path(ed_file)},
          varqa::ordering_from_string(ed_ordering));
      varqa::EdOptions opts;
      opts.max_eigenpairs = ed_count;
      opts.ordering = varqa::ordering_from_string(ed_ordering);
      if (ed_sector >= 0)
        opts.particle_sector = ed_sector;
      else if (h.n_qubits() > 14 && h.electrons)
        opts.particle_sector = *h.electrons;
      const varqa::Spectrum spec = varqa::exact_diagonalize(h, opts);
      std::printf("# %d qubits, %zu term(s)\n", h.n_qubits(), h.terms().size());
      for (std::size_t k = 0; k < spec.eigenvalues.size(); ++k) {
        std::printf("%3zu  %.12f Ha", k, spec.eigenvalues[k]);
        if (spec.sector_labels[k])
          std::printf("   (N=%d, 2Sz=%d)", spec.sector_labels[k]->first,
                      spec.sector_labels[k]->second);
        std::printf("\n");
      }
      return 0;
    }
  } catch (const varqa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
