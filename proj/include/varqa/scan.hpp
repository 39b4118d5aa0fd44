#pragma once

#include <optional>
#include <string>
#include <vector>

#include "varqa/search.hpp"
#include "varqa/spin_orbitals.hpp"

namespace varqa {

enum class SourceFormat { fcidump, pauli_text };

struct HamiltonianSource {
  std::string label;  // typically the interatomic distance in Angstrom
  std::string path;
  SourceFormat format = SourceFormat::fcidump;
};

// Piecewise-constant eigenstate-index rule over the scan label read as a
// distance: entries (threshold, k) apply below each threshold in order, the
// default k above all of them.
struct ExcitedRule {
  std::vector<std::pair<double, int>> below;  // thresholds strictly increasing
  int default_k = 1;
  double alpha_shift = 2.0;  // Hartree

  int k_for(double distance) const;
};

struct ScanConfig {
  std::vector<HamiltonianSource> sources;
  DigitizerKind digitizer = DigitizerKind::d2;
  bool exhaustive = true;
  std::uint64_t random_trials = 100000;
  SamplerConfig sampler;
  double support_floor = 0.0;  // drop outcomes below this probability
  std::optional<ExcitedRule> excited;
  bool fine_tune = false;
  std::vector<std::size_t> fine_tune_coordinates;
  Ordering ordering = Ordering::blocked;
  std::uint64_t master_seed = 1;
  int threads = 1;
  bool report_timing = false;  // wall time breaks byte-level reproducibility
};

struct ScanRow {
  std::string label;
  double varqa_energy = 0.0;      // Hartree
  double ed_energy = 0.0;         // Hartree (ground state, or target e_k)
  double error_kcal = 0.0;
  std::uint64_t trials = 0;
  std::size_t support_size = 0;
  double seconds = 0.0;
  std::string error_message;      // empty on success
  std::optional<VarqaResult> detail;

  bool failed() const { return !error_message.empty(); }
};

std::vector<ScanRow> run_scan(const ScanConfig& config);

std::string scan_csv(const std::vector<ScanRow>& rows, bool report_timing);
void write_scan_csv(const std::string& path, const std::vector<ScanRow>& rows,
                    bool report_timing);
std::string scan_report(const ScanConfig& config, const std::vector<ScanRow>& rows);

// fcidump -> pauli_text (or pauli_text canonicalization). The reverse
// direction is unsupported.
void convert(const std::string& input_path, SourceFormat input_format,
             const std::string& output_path, SourceFormat output_format,
             Ordering ordering = Ordering::blocked);

PauliHamiltonian load_hamiltonian(const HamiltonianSource& source, Ordering ordering);
SourceFormat format_from_path(const std::string& path);
std::string label_from_path(const std::string& path);

}  // namespace varqa
