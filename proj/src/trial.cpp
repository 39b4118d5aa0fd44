#include "varqa/trial.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>
#include <type_traits>

#include "varqa/errors.hpp"

namespace varqa {
namespace {

constexpr double kResidueTol = 1e-10;

const std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

std::complex<double> element_terms(BasisState m, BasisState n, const PauliHamiltonian& h) {
  std::complex<double> acc = 0.0;
  const BasisState flip = m ^ n;
  for (const auto& t : h.compiled()) {
    if (t.x_mask != flip) continue;
    const double parity = (popcount(t.zy_mask & n) % 2) ? -1.0 : 1.0;
    acc += t.coefficient * parity * kIPow[t.y_count % 4];
  }
  return acc;
}

double element_shifts(BasisState m, BasisState n, const std::vector<DeflationShift>& shifts) {
  double acc = 0.0;
  for (const auto& sh : shifts) acc += sh.alpha * sh.state[m] * sh.state[n];
  return acc;
}

double check_real(std::complex<double> v, const char* what) {
  if (std::abs(v.imag()) >= kResidueTol)
    throw ImaginaryResidue(std::string(what) + " has imaginary part " +
                           std::to_string(v.imag()));
  return v.real();
}

// Signed amplitudes for the support of `dist`, all signs +.
std::vector<std::pair<BasisState, double>> amplitudes_of(const SampleDistribution& dist,
                                                         double support_floor) {
  if (dist.empty()) throw EmptyDistribution("sample distribution has no outcomes");
  std::vector<std::pair<BasisState, double>> amps;
  double kept = 0.0;
  for (const auto& [state, w] : dist.counts) {
    const double p = dist.exact_probabilities ? w : w / dist.total_samples;
    if (p <= support_floor || p <= 0.0) continue;
    amps.emplace_back(state, p);
    kept += p;
  }
  if (amps.empty()) throw EmptyDistribution("support floor removed every outcome");
  for (auto& [state, p] : amps) p = std::sqrt(p / kept);
  return amps;
}

std::size_t anchor_index(const std::vector<std::pair<BasisState, double>>& amps) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < amps.size(); ++i)
    if (std::abs(amps[i].second) > std::abs(amps[best].second)) best = i;
  return best;
}

// Pairwise weight matrix W_ij = a_i a_j <m_i|H|m_j> over the support.
// Flip-mask grouping keeps the cost at O(k * groups * log k).
template <typename Shifts>
std::vector<double> weight_matrix(const std::vector<std::pair<BasisState, double>>& amps,
                                  const PauliHamiltonian& h, const Shifts& shifts) {
  const std::size_t k = amps.size();
  std::vector<std::complex<double>> acc(k * k, 0.0);
  std::vector<BasisState> states(k);
  for (std::size_t i = 0; i < k; ++i) states[i] = amps[i].first;

  for (const auto& group : h.flip_groups()) {
    for (std::size_t j = 0; j < k; ++j) {
      const BasisState n = states[j];
      const BasisState m = n ^ group.mask;
      if (m < n) continue;  // visit each unordered pair once
      const auto it = std::lower_bound(states.begin(), states.end(), m);
      if (it == states.end() || *it != m) continue;
      const std::size_t i = static_cast<std::size_t>(it - states.begin());
      std::complex<double> v = 0.0;
      for (std::size_t g = group.begin; g < group.end; ++g) {
        const auto& t = h.compiled()[h.flip_order()[g]];
        const double parity = (popcount(t.zy_mask & n) % 2) ? -1.0 : 1.0;
        v += t.coefficient * parity * kIPow[t.y_count % 4];
      }
      acc[i * k + j] += v;
      if (i != j) acc[j * k + i] += std::conj(v);
    }
  }
  std::vector<double> w(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      double v = check_real(acc[i * k + j], "transition element");
      if constexpr (!std::is_same_v<Shifts, std::nullptr_t>)
        v += element_shifts(states[i], states[j], *shifts);
      w[i * k + j] = v * amps[i].second * amps[j].second;
    }
  return w;
}

double pattern_energy(const std::vector<double>& w, const std::vector<int>& eps) {
  const std::size_t k = eps.size();
  double e = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    e += w[i * k + i];
    for (std::size_t j = i + 1; j < k; ++j) e += 2.0 * eps[i] * eps[j] * w[i * k + j];
  }
  return e;
}

// Exhaustive Gray-code walk over the 2^(k-1) sign patterns with the anchor
// fixed. Ties resolve to the pattern whose sign sequence is lexicographically
// smallest (+ before -).
std::pair<std::vector<int>, double> exhaustive_signs(const std::vector<double>& w,
                                                     std::size_t k, std::size_t anchor) {
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < k; ++i)
    if (i != anchor) free.push_back(i);

  std::vector<int> eps(k, 1);
  std::vector<double> coupling(k, 0.0);  // g_r = sum_{j != r} eps_j W_rj
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < k; ++j)
      if (j != r) coupling[r] += eps[j] * w[r * k + j];
  double energy = pattern_energy(w, eps);

  auto better = [&](double e, const std::vector<int>& p, double be,
                    const std::vector<int>& bp) {
    if (e != be) return e < be;
    return std::lexicographical_compare(p.begin(), p.end(), bp.begin(), bp.end(),
                                        [](int a, int b) { return a > b; });  // + first
  };

  std::vector<int> best_eps = eps;
  double best_energy = energy;
  const std::uint64_t patterns = std::uint64_t{1} << free.size();
  std::uint64_t gray = 0;
  for (std::uint64_t g = 1; g < patterns; ++g) {
    const std::uint64_t next_gray = g ^ (g >> 1);
    const int bit = std::countr_zero(gray ^ next_gray);
    gray = next_gray;
    const std::size_t r = free[static_cast<std::size_t>(bit)];
    energy += -4.0 * eps[r] * coupling[r];
    eps[r] = -eps[r];
    for (std::size_t j = 0; j < k; ++j)
      if (j != r) coupling[j] += 2.0 * eps[r] * w[j * k + r];
    if (better(energy, eps, best_energy, best_eps)) {
      best_energy = energy;
      best_eps = eps;
    }
  }
  return {best_eps, best_energy};
}

std::pair<std::vector<int>, double> greedy_signs(const std::vector<double>& w, std::size_t k,
                                                 std::size_t anchor, int restarts) {
  auto descend = [&](std::vector<int> eps) {
    std::vector<double> coupling(k, 0.0);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t j = 0; j < k; ++j)
        if (j != r) coupling[r] += eps[j] * w[r * k + j];
    double energy = pattern_energy(w, eps);
    while (true) {
      double best_delta = -1e-15;
      std::size_t best_r = k;
      for (std::size_t r = 0; r < k; ++r) {
        if (r == anchor) continue;
        const double delta = -4.0 * eps[r] * coupling[r];
        if (delta < best_delta) {
          best_delta = delta;
          best_r = r;
        }
      }
      if (best_r == k) break;
      energy += best_delta;
      eps[best_r] = -eps[best_r];
      for (std::size_t j = 0; j < k; ++j)
        if (j != best_r) coupling[j] += 2.0 * eps[best_r] * w[j * k + best_r];
    }
    return std::make_pair(eps, energy);
  };

  auto [best_eps, best_energy] = descend(std::vector<int>(k, 1));
  std::mt19937_64 rng(0x5eed5eedULL + k);
  for (int t = 0; t < restarts; ++t) {
    std::vector<int> eps(k);
    for (auto& e : eps) e = (rng() & 1) ? 1 : -1;
    eps[anchor] = 1;
    auto [cand, energy] = descend(std::move(eps));
    if (energy < best_energy ||
        (energy == best_energy &&
         std::lexicographical_compare(cand.begin(), cand.end(), best_eps.begin(),
                                      best_eps.end(), [](int a, int b) { return a > b; }))) {
      best_energy = energy;
      best_eps = cand;
    }
  }
  return {best_eps, best_energy};
}

template <typename Shifts>
std::optional<std::pair<SignPattern, double>> optimize_impl(const SampleDistribution& dist,
                                                            const PauliHamiltonian& h,
                                                            const Shifts& shifts,
                                                            const SignSearchOptions& opts,
                                                            double cutoff) {
  auto amps = amplitudes_of(dist, opts.support_floor);
  const std::size_t k = amps.size();
  const std::size_t anchor = anchor_index(amps);
  const std::vector<double> w = weight_matrix(amps, h, shifts);

  if (cutoff < std::numeric_limits<double>::infinity()) {
    // E(eps) >= sum_i W_ii - 2 sum_{i<j} |W_ij| for every sign assignment.
    double bound = 0.0;
    for (std::size_t i = 0; i < k; ++i) {
      bound += w[i * k + i];
      for (std::size_t j = i + 1; j < k; ++j) bound -= 2.0 * std::abs(w[i * k + j]);
    }
    if (bound > cutoff) return std::nullopt;
  }

  auto [eps, energy] = (k <= opts.exhaustive_limit)
                           ? exhaustive_signs(w, k, anchor)
                           : greedy_signs(w, k, anchor, opts.greedy_restarts);
  SignPattern pattern;
  pattern.signs.reserve(k);
  for (std::size_t i = 0; i < k; ++i) pattern.signs.emplace_back(amps[i].first, eps[i]);
  return {{std::move(pattern), energy}};
}

template <typename Shifts>
double energy_impl(const TrialState& psi, const PauliHamiltonian& h, const Shifts& shifts) {
  std::vector<std::pair<BasisState, double>> amps = psi.support;
  const std::size_t k = amps.size();
  std::vector<int> eps(k, 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (amps[i].second < 0.0) {
      eps[i] = -1;
      amps[i].second = -amps[i].second;
    }
  }
  const std::vector<double> w = weight_matrix(amps, h, shifts);
  return pattern_energy(w, eps);
}

}  // namespace

double TrialState::amplitude(BasisState s) const {
  auto it = std::lower_bound(support.begin(), support.end(), s,
                             [](const auto& kv, BasisState v) { return kv.first < v; });
  return (it != support.end() && it->first == s) ? it->second : 0.0;
}

int SignPattern::sign_of(BasisState s) const {
  auto it = std::lower_bound(signs.begin(), signs.end(), s,
                             [](const auto& kv, BasisState v) { return kv.first < v; });
  return (it != signs.end() && it->first == s) ? it->second : 0;
}

TrialState build_trial_state(const SampleDistribution& dist, const SignPattern& signs,
                             double support_floor) {
  auto amps = amplitudes_of(dist, support_floor);
  TrialState psi;
  psi.n_qubits = dist.n_qubits;
  psi.support.reserve(amps.size());
  for (auto& [state, a] : amps) {
    const int sign = signs.signs.empty() ? 1 : signs.sign_of(state);
    if (sign == 0)
      throw ShapeError("sign pattern is missing outcome " + to_bits(state, dist.n_qubits));
    psi.support.emplace_back(state, (sign < 0 ? -a : a));
  }
  // Canonical global phase: largest-magnitude amplitude positive.
  const std::size_t anchor = anchor_index(psi.support);
  if (psi.support[anchor].second < 0.0)
    for (auto& [state, a] : psi.support) a = -a;
  return psi;
}

void write_trial_state(std::ostream& out, const TrialState& psi) {
  char buf[64];
  for (const auto& [state, a] : psi.support) {
    std::snprintf(buf, sizeof buf, "%.17g", a);
    out << to_bits(state, psi.n_qubits) << " " << buf << "\n";
  }
}

TrialState read_trial_state(std::istream& in) {
  TrialState psi;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string bits;
    double a = 0.0;
    if (!(ls >> bits >> a)) continue;
    if (psi.n_qubits == 0) psi.n_qubits = static_cast<int>(bits.size());
    psi.support.emplace_back(from_bits(bits), a);
  }
  std::sort(psi.support.begin(), psi.support.end());
  return psi;
}

double transition_element(BasisState m, BasisState n, const PauliHamiltonian& h) {
  return check_real(element_terms(m, n, h), "transition element");
}

double transition_element(BasisState m, BasisState n, const DeflatedHamiltonian& h) {
  return check_real(element_terms(m, n, h.base), "transition element") +
         element_shifts(m, n, h.shifts);
}

double transition_element(const std::string& m, const std::string& n,
                          const PauliHamiltonian& h) {
  if (static_cast<int>(m.size()) != h.n_qubits() || static_cast<int>(n.size()) != h.n_qubits())
    throw ShapeError("bit-string length does not match qubit count");
  return transition_element(from_bits(m), from_bits(n), h);
}

double expected_energy(const TrialState& psi, const PauliHamiltonian& h) {
  return energy_impl(psi, h, nullptr);
}

double expected_energy(const TrialState& psi, const DeflatedHamiltonian& h) {
  return energy_impl(psi, h.base, &h.shifts);
}

std::pair<SignPattern, double> optimize_signs(const SampleDistribution& dist,
                                              const PauliHamiltonian& h,
                                              const SignSearchOptions& opts) {
  return *optimize_impl(dist, h, nullptr, opts, std::numeric_limits<double>::infinity());
}

std::pair<SignPattern, double> optimize_signs(const SampleDistribution& dist,
                                              const DeflatedHamiltonian& h,
                                              const SignSearchOptions& opts) {
  return *optimize_impl(dist, h.base, &h.shifts, opts,
                        std::numeric_limits<double>::infinity());
}

std::optional<std::pair<SignPattern, double>> optimize_signs_bounded(
    const SampleDistribution& dist, const DeflatedHamiltonian& h,
    const SignSearchOptions& opts, double cutoff) {
  return optimize_impl(dist, h.base, &h.shifts, opts, cutoff);
}

}  // namespace varqa
