#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "varqa/pauli.hpp"
#include "varqa/spin_orbitals.hpp"

namespace varqa {

// Rank-one energy shift alpha * |state><state| on the 2^M space.
struct DeflationShift {
  double alpha = 0.0;
  std::vector<double> state;
};

struct DeflatedHamiltonian {
  PauliHamiltonian base;
  std::vector<DeflationShift> shifts;

  int n_qubits() const { return base.n_qubits(); }
};

DeflatedHamiltonian deflate(const PauliHamiltonian& h,
                            const std::vector<std::vector<double>>& states,
                            const std::vector<double>& alphas);

struct Spectrum {
  std::vector<double> eigenvalues;           // ascending
  std::vector<std::vector<double>> eigenvectors;  // unit vectors, dim 2^M
  // (particle number, 2*Sz) when sharp in the eigenvector, one per value.
  std::vector<std::optional<std::pair<int, int>>> sector_labels;
};

struct EdOptions {
  // Restrict to a fixed particle-number sector; mandatory above 14 qubits,
  // valid only for particle-conserving operators.
  std::optional<int> particle_sector;
  int max_eigenpairs = -1;  // -1: all
  Ordering ordering = Ordering::blocked;  // for Sz sector labels
};

Spectrum exact_diagonalize(const PauliHamiltonian& h, const EdOptions& opts = {});
Spectrum exact_diagonalize(const DeflatedHamiltonian& h, const EdOptions& opts = {});

}  // namespace varqa
