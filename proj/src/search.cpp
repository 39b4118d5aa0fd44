#include "varqa/search.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <thread>

#include "varqa/errors.hpp"

namespace varqa {
namespace {

DeflatedHamiltonian wrap(const PauliHamiltonian& h) { return DeflatedHamiltonian{h, {}}; }

bool theta_less(const IsingAnsatz& a, const IsingAnsatz& b) {
  const auto fa = a.pack(), fb = b.pack();
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end());
}

struct ChunkBest {
  bool valid = false;
  double energy = 0.0;
  std::uint64_t trial = 0;
  IsingAnsatz theta;
  SignPattern signs;
  std::uint64_t evaluated = 0;
  std::uint64_t failed = 0;
  std::vector<std::pair<std::uint64_t, double>> trace;
};

ChunkBest run_chunk(const DeflatedHamiltonian& h, const DigitizerSpec& spec,
                    const SearchOptions& opts, std::uint64_t begin, std::uint64_t end) {
  ChunkBest best;
  for (std::uint64_t t = begin; t < end; ++t) {
    const IsingAnsatz theta = spec.trial(t);
    ++best.evaluated;
    try {
      const SampleDistribution dist =
          sample(theta, opts.sampler, mix_seed(opts.master_seed, t));
      const double cutoff =
          best.valid ? best.energy : std::numeric_limits<double>::infinity();
      auto outcome = optimize_signs_bounded(dist, h, opts.signs, cutoff);
      if (!outcome) continue;  // provably above the chunk's best energy
      auto& [signs, energy] = *outcome;
      const bool strictly_better = !best.valid || energy < best.energy;
      if (strictly_better ||
          (energy == best.energy && theta_less(theta, best.theta))) {
        best.valid = true;
        best.energy = energy;
        best.trial = t;
        best.theta = theta;
        best.signs = std::move(signs);
        if (opts.keep_trace && strictly_better) best.trace.emplace_back(t, energy);
      }
    } catch (const Error&) {
      ++best.failed;
    }
  }
  return best;
}

}  // namespace

std::pair<SignPattern, double> evaluate_trial(const IsingAnsatz& theta,
                                              const DeflatedHamiltonian& h,
                                              const SearchOptions& opts, std::uint64_t seed) {
  const SampleDistribution dist = sample(theta, opts.sampler, seed);
  return optimize_signs(dist, h, opts.signs);
}

VarqaResult varqa_search(const DeflatedHamiltonian& h, const DigitizerSpec& spec,
                         const SearchOptions& opts) {
  if (spec.n_qubits != h.n_qubits())
    throw ShapeError("digitizer is sized for " + std::to_string(spec.n_qubits) +
                     " qubits but the Hamiltonian has " + std::to_string(h.n_qubits()));
  const std::uint64_t total = spec.trial_count();

  int n_threads = opts.threads;
  if (n_threads <= 0) n_threads = static_cast<int>(std::thread::hardware_concurrency());
  n_threads = std::max(1, std::min<int>(n_threads, 64));
  if (static_cast<std::uint64_t>(n_threads) > total)
    n_threads = static_cast<int>(std::max<std::uint64_t>(1, total));

  std::vector<ChunkBest> chunks(static_cast<std::size_t>(n_threads));
  if (n_threads == 1) {
    chunks[0] = run_chunk(h, spec, opts, 0, total);
  } else {
    std::vector<std::thread> workers;
    const std::uint64_t per = (total + n_threads - 1) / n_threads;
    for (int w = 0; w < n_threads; ++w) {
      const std::uint64_t begin = per * static_cast<std::uint64_t>(w);
      const std::uint64_t end = std::min(total, begin + per);
      workers.emplace_back([&, w, begin, end] {
        chunks[static_cast<std::size_t>(w)] = run_chunk(h, spec, opts, begin, end);
      });
    }
    for (auto& th : workers) th.join();
  }

  // Deterministic reduction in trial order. The merged trace equals the
  // serial best-so-far sequence because chunk-local strict improvements are
  // a superset of the global ones.
  VarqaResult result;
  bool have = false;
  double running = 0.0;
  for (const auto& c : chunks) {
    result.trials_evaluated += c.evaluated;
    result.trials_failed += c.failed;
    for (const auto& [t, e] : c.trace) {
      if (!have || e < running) {
        have = true;
        running = e;
        if (opts.keep_trace) result.energy_trace.emplace_back(t, e);
      }
    }
  }

  // Winner: minimum energy, ties by lexicographically smallest theta.
  const ChunkBest* winner = nullptr;
  for (const auto& c : chunks) {
    if (!c.valid) continue;
    if (!winner || c.energy < winner->energy ||
        (c.energy == winner->energy && theta_less(c.theta, winner->theta)))
      winner = &c;
  }
  if (!winner) throw EmptyDistribution("every digitizer trial failed");

  result.best_theta = winner->theta;
  result.best_signs = winner->signs;
  const SampleDistribution dist =
      sample(winner->theta, opts.sampler, mix_seed(opts.master_seed, winner->trial));
  result.best_state = build_trial_state(dist, winner->signs, opts.signs.support_floor);
  result.best_energy = expected_energy(result.best_state, h);
  return result;
}

VarqaResult varqa_search(const PauliHamiltonian& h, const DigitizerSpec& spec,
                         const SearchOptions& opts) {
  return varqa_search(wrap(h), spec, opts);
}

FineTuneResult fine_tune(const IsingAnsatz& theta0, const DeflatedHamiltonian& h,
                         const SearchOptions& opts, const FineTuneOptions& ft) {
  std::vector<std::size_t> coords = ft.coordinates;
  if (coords.empty()) {
    coords.resize(theta0.nu());
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = i;
  }
  for (std::size_t c : coords)
    if (c >= theta0.nu())
      throw ShapeError("fine-tune coordinate " + std::to_string(c) + " out of range");

  const std::uint64_t eval_seed = mix_seed(opts.master_seed, 0x66746e65ull);
  auto energy_at = [&](const std::vector<double>& flat) {
    const IsingAnsatz theta = IsingAnsatz::unpack(theta0.n_qubits, flat);
    return evaluate_trial(theta, h, opts, eval_seed).second;
  };

  std::vector<double> flat = theta0.pack();
  FineTuneResult out;
  double energy = energy_at(flat);
  out.energy_sequence.push_back(energy);

  double step = ft.initial_step;
  for (int cycle = 0; cycle < ft.max_cycles && step >= ft.min_step; ++cycle) {
    bool moved = false;
    for (std::size_t c : coords) {
      while (true) {
        bool improved = false;
        for (const double dir : {+1.0, -1.0}) {
          std::vector<double> cand = flat;
          cand[c] += dir * step;
          const double e = energy_at(cand);
          if (e < energy) {
            energy = e;
            flat = std::move(cand);
            out.energy_sequence.push_back(energy);
            improved = true;
            moved = true;
            break;
          }
        }
        if (!improved) break;
      }
    }
    if (!moved) step *= 0.5;
  }

  out.theta = IsingAnsatz::unpack(theta0.n_qubits, flat);
  out.energy = energy;
  return out;
}

FineTuneResult fine_tune(const IsingAnsatz& theta0, const PauliHamiltonian& h,
                         const SearchOptions& opts, const FineTuneOptions& ft) {
  return fine_tune(theta0, wrap(h), opts, ft);
}

std::pair<TrialState, double> alpha_varqa(const std::vector<IsingAnsatz>& thetas,
                                          const DeflatedHamiltonian& h,
                                          const SearchOptions& opts) {
  if (thetas.empty()) throw ShapeError("alpha-VarQA needs at least one ansatz");
  const int M = thetas.front().n_qubits;
  for (const auto& t : thetas)
    if (t.n_qubits != M) throw ShapeError("alpha-VarQA ansatz sets differ in qubit count");

  std::map<BasisState, double> averaged;
  const double alpha = static_cast<double>(thetas.size());
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    const SampleDistribution dist =
        sample(thetas[k], opts.sampler, mix_seed(opts.master_seed, k));
    for (const auto& [state, w] : dist.counts) {
      const double p = dist.exact_probabilities ? w : w / dist.total_samples;
      averaged[state] += p / alpha;
    }
  }
  SampleDistribution mix;
  mix.n_qubits = M;
  mix.exact_probabilities = true;
  mix.total_samples = 1.0;
  mix.counts.assign(averaged.begin(), averaged.end());

  auto [signs, energy] = optimize_signs(mix, h, opts.signs);
  TrialState psi = build_trial_state(mix, signs, opts.signs.support_floor);
  return {std::move(psi), energy};
}

std::pair<TrialState, double> alpha_varqa(const std::vector<IsingAnsatz>& thetas,
                                          const PauliHamiltonian& h,
                                          const SearchOptions& opts) {
  return alpha_varqa(thetas, wrap(h), opts);
}

VarqaResult excited_state_search(const PauliHamiltonian& h, int k, double alpha_shift,
                                 const DigitizerSpec& spec, const SearchOptions& opts) {
  if (k < 0) throw ShapeError("eigenstate index must be non-negative");
  if (k == 0) return varqa_search(h, spec, opts);
  EdOptions ed;
  ed.max_eigenpairs = k;
  const Spectrum low = exact_diagonalize(h, ed);
  std::vector<std::vector<double>> states(low.eigenvectors.begin(), low.eigenvectors.end());
  const std::vector<double> alphas(static_cast<std::size_t>(k), alpha_shift);
  return varqa_search(deflate(h, states, alphas), spec, opts);
}

}  // namespace varqa
