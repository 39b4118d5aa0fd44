#include "varqa/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <random>

#include "varqa/errors.hpp"

namespace varqa {

double SampleDistribution::probability(BasisState s) const {
  auto it = std::lower_bound(counts.begin(), counts.end(), s,
                             [](const auto& kv, BasisState v) { return kv.first < v; });
  if (it == counts.end() || it->first != s) return 0.0;
  return exact_probabilities ? it->second : it->second / total_samples;
}

double AnnealSchedule::beta_at(int sweep) const {
  if (sweeps <= 1) return beta_end;
  const double f = static_cast<double>(sweep) / (sweeps - 1);
  if (interpolation == Interpolation::linear) return beta_start + f * (beta_end - beta_start);
  return beta_start * std::pow(beta_end / beta_start, f);
}

void AnnealSchedule::validate() const {
  if (sweeps < 1) throw ShapeError("schedule needs at least one sweep");
  if (!(beta_start > 0.0) || beta_end < beta_start)
    throw ShapeError("schedule requires beta_end >= beta_start > 0");
}

std::vector<double> gibbs_probabilities(const IsingAnsatz& theta, double beta) {
  const int M = theta.n_qubits;
  if (M > 24) throw DimensionTooLarge("exact Gibbs enumeration limited to 24 qubits");
  const std::size_t dim = std::size_t{1} << M;
  std::vector<double> energy(dim);
  double emin = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s < dim; ++s) {
    energy[s] = ising_energy(theta, static_cast<BasisState>(s));
    emin = std::min(emin, energy[s]);
  }
  double z = 0.0;
  for (std::size_t s = 0; s < dim; ++s) {
    energy[s] = std::exp(-beta * (energy[s] - emin));
    z += energy[s];
  }
  for (auto& p : energy) p /= z;
  return energy;
}

SampleDistribution gibbs_distribution(const IsingAnsatz& theta, double beta) {
  const std::vector<double> p = gibbs_probabilities(theta, beta);
  SampleDistribution d;
  d.n_qubits = theta.n_qubits;
  d.exact_probabilities = true;
  d.total_samples = 1.0;
  d.counts.reserve(p.size());
  for (std::size_t s = 0; s < p.size(); ++s)
    if (p[s] > 0.0) d.counts.emplace_back(static_cast<BasisState>(s), p[s]);
  return d;
}

namespace {

// Largest-remainder rounding of probabilities to integer counts summing to S.
// Remainder ties resolve toward the lower basis state.
SampleDistribution round_to_counts(const std::vector<double>& p, int M, std::uint64_t S) {
  const std::size_t dim = p.size();
  std::vector<std::uint64_t> counts(dim, 0);
  std::vector<std::pair<double, std::size_t>> remainder;
  remainder.reserve(dim);
  std::uint64_t assigned = 0;
  for (std::size_t s = 0; s < dim; ++s) {
    const double exactc = p[s] * static_cast<double>(S);
    counts[s] = static_cast<std::uint64_t>(std::floor(exactc));
    assigned += counts[s];
    remainder.emplace_back(exactc - std::floor(exactc), s);
  }
  std::sort(remainder.begin(), remainder.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  for (std::uint64_t i = 0; assigned < S; ++i, ++assigned) counts[remainder[i % dim].second]++;

  SampleDistribution d;
  d.n_qubits = M;
  d.total_samples = static_cast<double>(S);
  for (std::size_t s = 0; s < dim; ++s)
    if (counts[s] > 0) d.counts.emplace_back(static_cast<BasisState>(s), static_cast<double>(counts[s]));
  return d;
}

}  // namespace

SampleDistribution simulated_anneal(const IsingAnsatz& theta, std::uint64_t samples,
                                    const AnnealSchedule& schedule, std::uint64_t seed) {
  schedule.validate();
  if (samples < 1) throw ShapeError("at least one sample is required");
  const int M = theta.n_qubits;
  const std::size_t m = static_cast<std::size_t>(M);
  std::map<BasisState, std::uint64_t> hist;

  // Dense symmetric coupling matrix and precomputed ramp for the hot loop.
  std::vector<double> J(m * m, 0.0);
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j)
      J[static_cast<std::size_t>(i) * m + j] = J[static_cast<std::size_t>(j) * m + i] =
          theta.coupling(i, j);
  std::vector<double> betas(static_cast<std::size_t>(schedule.sweeps));
  for (int sweep = 0; sweep < schedule.sweeps; ++sweep)
    betas[static_cast<std::size_t>(sweep)] = schedule.beta_at(sweep);

  std::vector<double> spin(m);
  for (std::uint64_t run = 0; run < samples; ++run) {
    std::mt19937_64 rng(mix_seed(seed, run));
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    for (auto& s : spin) s = (uni(rng) < 0.5) ? 1.0 : -1.0;

    for (const double beta : betas) {
      for (std::size_t i = 0; i < m; ++i) {
        double field = theta.fields[i];
        const double* row = &J[i * m];
        for (std::size_t j = 0; j < m; ++j) field += row[j] * spin[j];
        const double delta = -2.0 * spin[i] * field;
        // Zero-cost moves are accepted at probability 1/2: a sequential scan
        // that always takes them circulates deterministically around
        // degenerate plateaus instead of mixing.
        const bool accept = delta < 0.0 ? true
                            : delta == 0.0 ? (uni(rng) < 0.5)
                                           : (uni(rng) < std::exp(-beta * delta));
        if (accept) spin[i] = -spin[i];
      }
    }
    BasisState state = 0;
    for (int i = 0; i < M; ++i)
      if (spin[static_cast<std::size_t>(i)] < 0.0) state |= BasisState{1} << (M - 1 - i);
    hist[state]++;
  }

  SampleDistribution d;
  d.n_qubits = M;
  d.total_samples = static_cast<double>(samples);
  d.counts.assign(hist.begin(), hist.end());
  for (auto& kv : d.counts) kv.second = static_cast<double>(kv.second);
  return d;
}

SampleDistribution sample(const IsingAnsatz& theta, const SamplerConfig& config,
                          std::uint64_t seed) {
  if (config.backend == SamplerBackend::simulated_annealing)
    return simulated_anneal(theta, config.samples, config.schedule, seed);
  if (config.infinite_shots) return gibbs_distribution(theta, config.beta);
  if (config.samples < 1) throw ShapeError("at least one sample is required");
  return round_to_counts(gibbs_probabilities(theta, config.beta), theta.n_qubits,
                         config.samples);
}

double total_variation_distance(const SampleDistribution& a, const SampleDistribution& b) {
  if (a.n_qubits != b.n_qubits) throw ShapeError("distributions differ in qubit count");
  double tv = 0.0;
  std::size_t i = 0, j = 0;
  while (i < a.counts.size() || j < b.counts.size()) {
    BasisState sa = i < a.counts.size() ? a.counts[i].first : ~BasisState{0};
    BasisState sb = j < b.counts.size() ? b.counts[j].first : ~BasisState{0};
    if (sa == sb) {
      tv += std::abs(a.probability(sa) - b.probability(sb));
      ++i, ++j;
    } else if (sa < sb) {
      tv += a.probability(sa);
      ++i;
    } else {
      tv += b.probability(sb);
      ++j;
    }
  }
  return 0.5 * tv;
}

}  // namespace varqa
