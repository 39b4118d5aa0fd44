#pragma once

#include <cstdint>
#include <vector>

#include "varqa/ising.hpp"

namespace varqa {

enum class DigitizerKind { d1, d2 };  // {-1,1}^nu and {-1,0,1}^nu

struct DigitizerSpec {
  DigitizerKind kind = DigitizerKind::d2;
  int n_qubits = 0;  // fixes nu = M(M+1)/2 + 1
  bool exhaustive = true;
  std::uint64_t random_trials = 0;  // used when !exhaustive
  std::uint64_t seed = 0;

  static constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 22;

  std::size_t nu() const { return IsingAnsatz::parameter_count(n_qubits); }
  // Trials in the stream; throws BudgetExceeded for oversized exhaustive sets.
  std::uint64_t trial_count() const;
  // Ansatz for trial t. Exhaustive mode walks odometer order (first
  // coordinate most significant, values ordered -1 < 0 < 1); random mode
  // draws i.i.d. uniformly with a per-trial derived generator.
  IsingAnsatz trial(std::uint64_t t) const;
};

std::vector<IsingAnsatz> enumerate_digitizer(const DigitizerSpec& spec);

}  // namespace varqa
