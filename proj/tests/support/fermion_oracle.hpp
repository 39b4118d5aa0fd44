#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <random>

#include "varqa/integrals.hpp"
#include "varqa/spin_orbitals.hpp"

namespace varqa::test {

// Dense second-quantized Hamiltonian assembled directly from ladder-operator
// matrices in the occupation basis (sign = parity of occupied lower
// orbitals). Independent of the Pauli-algebra pipeline it cross-checks.
Eigen::MatrixXd fermionic_matrix(const SpinOrbitalIntegrals& so);

// Random integrals with full 8-fold two-body symmetry.
MolecularIntegrals random_integrals(int n_spatial, std::mt19937_64& rng);

}  // namespace varqa::test
