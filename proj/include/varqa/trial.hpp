#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "varqa/exact.hpp"
#include "varqa/pauli.hpp"
#include "varqa/sampler.hpp"

namespace varqa {

// Signed-amplitude superposition over a sparse support. Amplitudes are
// nonzero, the squared amplitudes sum to one, and the largest-magnitude
// amplitude carries a + sign.
struct TrialState {
  int n_qubits = 0;
  std::vector<std::pair<BasisState, double>> support;  // sorted by state

  double amplitude(BasisState s) const;
};

struct SignPattern {
  std::vector<std::pair<BasisState, int>> signs;  // sorted by state, +1/-1

  int sign_of(BasisState s) const;
};

// amplitude(m) = sign(m) * sqrt(p(m)); outcomes below support_floor (as a
// probability) are dropped and the rest renormalized.
TrialState build_trial_state(const SampleDistribution& dist, const SignPattern& signs,
                             double support_floor = 0.0);

void write_trial_state(std::ostream& out, const TrialState& psi);
TrialState read_trial_state(std::istream& in);

// <m|H|n> evaluated per Pauli term in O(M). Throws ImaginaryResidue when the
// accumulated element has imaginary part >= 1e-10.
double transition_element(BasisState m, BasisState n, const PauliHamiltonian& h);
double transition_element(BasisState m, BasisState n, const DeflatedHamiltonian& h);
double transition_element(const std::string& m, const std::string& n,
                          const PauliHamiltonian& h);

double expected_energy(const TrialState& psi, const PauliHamiltonian& h);
double expected_energy(const TrialState& psi, const DeflatedHamiltonian& h);

struct SignSearchOptions {
  std::size_t exhaustive_limit = 21;  // support size above which greedy kicks in
  int greedy_restarts = 8;
  double support_floor = 0.0;
};

std::pair<SignPattern, double> optimize_signs(const SampleDistribution& dist,
                                              const PauliHamiltonian& h,
                                              const SignSearchOptions& opts = {});
std::pair<SignPattern, double> optimize_signs(const SampleDistribution& dist,
                                              const DeflatedHamiltonian& h,
                                              const SignSearchOptions& opts = {});

// Search fast path: returns nothing when a cheap bound proves no sign pattern
// can reach below `cutoff`, sparing the exhaustive enumeration. Trials pruned
// this way can never be the argmin, so search results are unchanged.
std::optional<std::pair<SignPattern, double>> optimize_signs_bounded(
    const SampleDistribution& dist, const DeflatedHamiltonian& h,
    const SignSearchOptions& opts, double cutoff);

}  // namespace varqa
