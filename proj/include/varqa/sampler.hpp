#pragma once

#include <cstdint>
#include <vector>

#include "varqa/ising.hpp"

namespace varqa {

// Empirical bit-string statistics from S anneals, or exact probabilities in
// the infinite-shot limit. Entries are sorted by basis state and positive;
// weights are raw counts summing to total_samples, or probabilities summing
// to 1 when exact_probabilities is set.
struct SampleDistribution {
  int n_qubits = 0;
  bool exact_probabilities = false;
  double total_samples = 0.0;
  std::vector<std::pair<BasisState, double>> counts;

  double probability(BasisState s) const;
  bool empty() const { return counts.empty(); }
};

struct AnnealSchedule {
  enum class Interpolation { geometric, linear };
  int sweeps = 1000;
  double beta_start = 0.1;
  double beta_end = 10.0;
  Interpolation interpolation = Interpolation::geometric;

  double beta_at(int sweep) const;
  void validate() const;
};

enum class SamplerBackend { exact_gibbs, simulated_annealing };

struct SamplerConfig {
  SamplerBackend backend = SamplerBackend::exact_gibbs;
  double beta = 1.0;           // exact-Gibbs inverse temperature, ansatz units
  AnnealSchedule schedule;     // simulated-annealing ramp
  std::uint64_t samples = 1000;
  bool infinite_shots = false;  // exact-Gibbs only: return probabilities
};

// Exact Boltzmann weights over all 2^M configurations (M <= 24).
std::vector<double> gibbs_probabilities(const IsingAnsatz& theta, double beta);
SampleDistribution gibbs_distribution(const IsingAnsatz& theta, double beta);

SampleDistribution simulated_anneal(const IsingAnsatz& theta, std::uint64_t samples,
                                    const AnnealSchedule& schedule, std::uint64_t seed);

SampleDistribution sample(const IsingAnsatz& theta, const SamplerConfig& config,
                          std::uint64_t seed);

double total_variation_distance(const SampleDistribution& a, const SampleDistribution& b);

}  // namespace varqa
