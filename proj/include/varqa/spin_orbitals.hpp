#pragma once

#include <string>
#include <vector>

#include "varqa/integrals.hpp"

namespace varqa {

enum class Ordering { blocked, interleaved };

Ordering ordering_from_string(const std::string& name);
std::string to_string(Ordering o);

// Integrals expanded over M = 2n spin orbitals, with the two-body tensor in
// the a+p a+q ar as index convention (g[p][q][r][s] multiplies that product).
struct SpinOrbitalIntegrals {
  int n_orbitals = 0;  // M
  double core_energy = 0.0;
  Ordering ordering = Ordering::blocked;
  std::vector<double> h;  // M x M
  std::vector<double> g;  // M^4

  double one(int p, int q) const {
    return h[static_cast<std::size_t>(p) * n_orbitals + q];
  }
  double two(int p, int q, int r, int s) const {
    const std::size_t m = static_cast<std::size_t>(n_orbitals);
    return g[((static_cast<std::size_t>(p) * m + q) * m + r) * m + s];
  }
  // spatial orbital / spin (0 = alpha, 1 = beta) of spin orbital p
  int spatial(int p) const {
    return ordering == Ordering::blocked ? p % (n_orbitals / 2) : p / 2;
  }
  int spin(int p) const {
    return ordering == Ordering::blocked ? (p >= n_orbitals / 2 ? 1 : 0) : p % 2;
  }
};

SpinOrbitalIntegrals to_spin_orbitals(const MolecularIntegrals& mi,
                                      Ordering ordering = Ordering::blocked);

}  // namespace varqa
