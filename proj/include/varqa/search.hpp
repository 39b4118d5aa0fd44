#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "varqa/digitizer.hpp"
#include "varqa/exact.hpp"
#include "varqa/sampler.hpp"
#include "varqa/trial.hpp"

namespace varqa {

struct VarqaResult {
  IsingAnsatz best_theta;
  SignPattern best_signs;
  TrialState best_state;
  double best_energy = 0.0;
  std::uint64_t trials_evaluated = 0;
  std::uint64_t trials_failed = 0;
  // (trial index, best-so-far energy) recorded at every improvement.
  std::vector<std::pair<std::uint64_t, double>> energy_trace;
};

struct SearchOptions {
  SamplerConfig sampler;
  SignSearchOptions signs;
  std::uint64_t master_seed = 0;
  int threads = 1;           // <=0: hardware concurrency
  bool keep_trace = true;
};

// One trial of Algorithm 1: sample the ansatz, optimize signs, evaluate.
std::pair<SignPattern, double> evaluate_trial(const IsingAnsatz& theta,
                                              const DeflatedHamiltonian& h,
                                              const SearchOptions& opts, std::uint64_t seed);

VarqaResult varqa_search(const DeflatedHamiltonian& h, const DigitizerSpec& spec,
                         const SearchOptions& opts);
VarqaResult varqa_search(const PauliHamiltonian& h, const DigitizerSpec& spec,
                         const SearchOptions& opts);

struct FineTuneOptions {
  double initial_step = 0.25;
  double min_step = 1e-3;
  int max_cycles = 20;
  std::vector<std::size_t> coordinates;  // flat parameter indices; empty: all
};

struct FineTuneResult {
  IsingAnsatz theta;
  double energy = 0.0;
  std::vector<double> energy_sequence;  // non-increasing by construction
};

FineTuneResult fine_tune(const IsingAnsatz& theta0, const DeflatedHamiltonian& h,
                         const SearchOptions& opts, const FineTuneOptions& ft = {});
FineTuneResult fine_tune(const IsingAnsatz& theta0, const PauliHamiltonian& h,
                         const SearchOptions& opts, const FineTuneOptions& ft = {});

// Ensemble-averaged distribution over alpha ansatz settings followed by the
// usual sign optimization.
std::pair<TrialState, double> alpha_varqa(const std::vector<IsingAnsatz>& thetas,
                                          const DeflatedHamiltonian& h,
                                          const SearchOptions& opts);
std::pair<TrialState, double> alpha_varqa(const std::vector<IsingAnsatz>& thetas,
                                          const PauliHamiltonian& h, const SearchOptions& opts);

// Deflates the lowest k exact eigenstates with a uniform shift, then runs the
// search on the deflated operator.
VarqaResult excited_state_search(const PauliHamiltonian& h, int k, double alpha_shift,
                                 const DigitizerSpec& spec, const SearchOptions& opts);

}  // namespace varqa
