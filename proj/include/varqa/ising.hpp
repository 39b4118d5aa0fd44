#pragma once

#include <string>
#include <vector>

#include "varqa/bits.hpp"

namespace varqa {

// Diagonal Ising ansatz: sum_i theta_i s_i + sum_{j>i} theta_ij s_i s_j +
// theta_0, with spins s_i = +1 for bit 0 and -1 for bit 1. The flattened
// parameter order is (theta_1..theta_M, theta_12, theta_13, ...,
// theta_{M-1,M}, theta_0).
struct IsingAnsatz {
  int n_qubits = 0;
  std::vector<double> fields;     // length M
  std::vector<double> couplings;  // upper triangle, row-major, length M(M-1)/2
  double offset = 0.0;

  IsingAnsatz() = default;
  explicit IsingAnsatz(int M)
      : n_qubits(M),
        fields(static_cast<std::size_t>(M), 0.0),
        couplings(static_cast<std::size_t>(M) * (M - 1) / 2, 0.0) {}

  static std::size_t parameter_count(int M) {
    return static_cast<std::size_t>(M) * (M + 1) / 2 + 1;
  }
  std::size_t nu() const { return parameter_count(n_qubits); }

  double& coupling(int i, int j);  // i < j, zero-based
  double coupling(int i, int j) const;

  std::vector<double> pack() const;
  static IsingAnsatz unpack(int M, const std::vector<double>& flat);
};

double ising_energy(const IsingAnsatz& theta, BasisState state);
double ising_energy(const IsingAnsatz& theta, const std::string& bits);

}  // namespace varqa
