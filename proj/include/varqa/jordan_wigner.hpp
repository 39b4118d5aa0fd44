#pragma once

#include "varqa/pauli.hpp"
#include "varqa/spin_orbitals.hpp"

namespace varqa {

// Maps the second-quantized Hamiltonian defined by spin-orbital integrals to
// a qubit operator with ladder operators substituted by Pauli strings with
// Z-parity tails over lower spin orbitals. The scalar part absorbs the core
// energy. Throws ImaginaryResidue if merged coefficients fail to be real.
PauliHamiltonian jordan_wigner(const SpinOrbitalIntegrals& so,
                               double prune = PauliHamiltonian::kDefaultPrune);

}  // namespace varqa
