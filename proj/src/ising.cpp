#include "varqa/ising.hpp"

#include "varqa/errors.hpp"

namespace varqa {
namespace {

std::size_t triangle_index(int i, int j, int M) {
  // row-major upper triangle: (0,1),(0,2),...,(0,M-1),(1,2),...
  return static_cast<std::size_t>(i) * M - static_cast<std::size_t>(i) * (i + 1) / 2 +
         static_cast<std::size_t>(j - i - 1);
}

}  // namespace

double& IsingAnsatz::coupling(int i, int j) {
  if (i >= j) throw ShapeError("coupling requires i < j");
  return couplings[triangle_index(i, j, n_qubits)];
}

double IsingAnsatz::coupling(int i, int j) const {
  if (i >= j) throw ShapeError("coupling requires i < j");
  return couplings[triangle_index(i, j, n_qubits)];
}

std::vector<double> IsingAnsatz::pack() const {
  std::vector<double> flat;
  flat.reserve(nu());
  flat.insert(flat.end(), fields.begin(), fields.end());
  flat.insert(flat.end(), couplings.begin(), couplings.end());
  flat.push_back(offset);
  return flat;
}

IsingAnsatz IsingAnsatz::unpack(int M, const std::vector<double>& flat) {
  if (flat.size() != parameter_count(M))
    throw ShapeError("parameter vector has length " + std::to_string(flat.size()) +
                     ", expected " + std::to_string(parameter_count(M)));
  IsingAnsatz t(M);
  std::size_t at = 0;
  for (int i = 0; i < M; ++i) t.fields[static_cast<std::size_t>(i)] = flat[at++];
  for (auto& c : t.couplings) c = flat[at++];
  t.offset = flat[at];
  return t;
}

double ising_energy(const IsingAnsatz& theta, BasisState state) {
  const int M = theta.n_qubits;
  double e = theta.offset;
  std::size_t c = 0;
  for (int i = 0; i < M; ++i) {
    const double si = ((state >> (M - 1 - i)) & 1u) ? -1.0 : 1.0;
    e += theta.fields[static_cast<std::size_t>(i)] * si;
    for (int j = i + 1; j < M; ++j, ++c) {
      const double sj = ((state >> (M - 1 - j)) & 1u) ? -1.0 : 1.0;
      e += theta.couplings[c] * si * sj;
    }
  }
  return e;
}

double ising_energy(const IsingAnsatz& theta, const std::string& bits) {
  if (static_cast<int>(bits.size()) != theta.n_qubits)
    throw ShapeError("bit-string length " + std::to_string(bits.size()) +
                     " does not match " + std::to_string(theta.n_qubits) + " qubits");
  return ising_energy(theta, from_bits(bits));
}

}  // namespace varqa
