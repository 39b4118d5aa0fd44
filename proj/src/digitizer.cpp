#include "varqa/digitizer.hpp"

#include <cmath>
#include <random>

#include "varqa/errors.hpp"

namespace varqa {

std::uint64_t DigitizerSpec::trial_count() const {
  if (!exhaustive) return random_trials;
  const int base = kind == DigitizerKind::d1 ? 2 : 3;
  long double total = 1.0L;
  for (std::size_t i = 0; i < nu(); ++i) {
    total *= base;
    if (total > static_cast<long double>(kEnumerationBudget))
      throw BudgetExceeded("exhaustive digitizer would enumerate " +
                           std::to_string(static_cast<double>(total)) +
                           " trials; budget is 2^22");
  }
  return static_cast<std::uint64_t>(total);
}

IsingAnsatz DigitizerSpec::trial(std::uint64_t t) const {
  const std::size_t n = nu();
  std::vector<double> flat(n, 0.0);
  if (exhaustive) {
    const std::uint64_t base = kind == DigitizerKind::d1 ? 2 : 3;
    for (std::size_t i = n; i-- > 0;) {
      const std::uint64_t digit = t % base;
      t /= base;
      flat[i] = kind == DigitizerKind::d1 ? (digit == 0 ? -1.0 : 1.0)
                                          : (static_cast<double>(digit) - 1.0);
    }
  } else {
    std::mt19937_64 rng(mix_seed(seed, t));
    const std::uint64_t base = kind == DigitizerKind::d1 ? 2 : 3;
    std::uniform_int_distribution<std::uint64_t> pick(0, base - 1);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint64_t digit = pick(rng);
      flat[i] = kind == DigitizerKind::d1 ? (digit == 0 ? -1.0 : 1.0)
                                          : (static_cast<double>(digit) - 1.0);
    }
  }
  return IsingAnsatz::unpack(n_qubits, flat);
}

std::vector<IsingAnsatz> enumerate_digitizer(const DigitizerSpec& spec) {
  const std::uint64_t total = spec.trial_count();
  std::vector<IsingAnsatz> out;
  out.reserve(total);
  for (std::uint64_t t = 0; t < total; ++t) out.push_back(spec.trial(t));
  return out;
}

}  // namespace varqa
