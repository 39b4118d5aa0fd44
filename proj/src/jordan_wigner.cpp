#include "varqa/jordan_wigner.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "varqa/errors.hpp"

namespace varqa {
namespace {

using cplx = std::complex<double>;

// Symplectic Pauli representation: coeff * prod_j X^{x_j} Z^{z_j}, one X/Z
// pair per qubit, X left of Z.
struct SymTerm {
  cplx coeff;
  BasisState x = 0;
  BasisState z = 0;
};

SymTerm mul(const SymTerm& a, const SymTerm& b) {
  // Commuting b's X past a's Z picks up one sign per overlapping qubit.
  const int swaps = popcount(a.z & b.x);
  SymTerm r;
  r.coeff = a.coeff * b.coeff * ((swaps % 2) ? -1.0 : 1.0);
  r.x = a.x ^ b.x;
  r.z = a.z ^ b.z;
  return r;
}

// a_j   = 1/2 (X_j + iY_j) Z_{<j},  a'_j = 1/2 (X_j - iY_j) Z_{<j}
// with iY_j = -X_j Z_j in symplectic normal form.
std::array<SymTerm, 2> ladder(int j, bool dagger) {
  const BasisState bit = BasisState{1} << j;
  const BasisState tail = bit - 1;
  const double s = dagger ? 1.0 : -1.0;
  return {SymTerm{0.5, bit, tail}, SymTerm{0.5 * s, bit, tail ^ bit}};
}

struct Key {
  BasisState x, z;
  bool operator==(const Key&) const = default;
};
struct KeyHash {
  std::size_t operator()(const Key& k) const {
    return std::hash<std::uint64_t>{}((std::uint64_t{k.x} << 32) | k.z);
  }
};

}  // namespace

PauliHamiltonian jordan_wigner(const SpinOrbitalIntegrals& so, double prune) {
  const int M = so.n_orbitals;
  if (M > 31) throw DimensionTooLarge("Jordan-Wigner mapping limited to 31 qubits");
  std::unordered_map<Key, cplx, KeyHash> acc;
  acc[{0, 0}] = so.core_energy;

  auto add_product = [&](double weight, const std::vector<std::pair<int, bool>>& ops) {
    std::vector<SymTerm> current{SymTerm{weight, 0, 0}};
    for (const auto& [orb, dag] : ops) {
      std::vector<SymTerm> next;
      next.reserve(current.size() * 2);
      const auto parts = ladder(orb, dag);
      for (const auto& t : current)
        for (const auto& p : parts) next.push_back(mul(t, p));
      current = std::move(next);
    }
    for (const auto& t : current) acc[{t.x, t.z}] += t.coeff;
  };

  for (int p = 0; p < M; ++p)
    for (int q = 0; q < M; ++q) {
      const double v = so.one(p, q);
      if (v != 0.0) add_product(v, {{p, true}, {q, false}});
    }
  for (int p = 0; p < M; ++p)
    for (int q = 0; q < M; ++q)
      for (int r = 0; r < M; ++r)
        for (int s = 0; s < M; ++s) {
          const double v = so.two(p, q, r, s);
          if (v != 0.0)
            add_product(0.5 * v, {{p, true}, {q, true}, {r, false}, {s, false}});
        }

  // Normal form (c, x, z) -> coefficient * axes word: Y = iXZ, so each Y
  // carries a factor (-i) out of the symplectic coefficient.
  static const cplx minus_i_pow[4] = {{1, 0}, {0, -1}, {-1, 0}, {0, 1}};
  std::vector<PauliTerm> terms;
  terms.reserve(acc.size());
  for (const auto& [key, c] : acc) {
    const int y_count = popcount(key.x & key.z);
    const cplx coeff = c * minus_i_pow[y_count % 4];
    if (std::abs(coeff) < prune) continue;
    if (std::abs(coeff.imag()) > 1e-10)
      throw ImaginaryResidue("Jordan-Wigner coefficient has imaginary part " +
                             std::to_string(coeff.imag()) +
                             " (integral tensor lacks the required symmetry)");
    std::string axes(static_cast<std::size_t>(M), 'I');
    for (int j = 0; j < M; ++j) {
      const BasisState bit = BasisState{1} << j;
      const bool xb = key.x & bit, zb = key.z & bit;
      if (xb || zb) axes[static_cast<std::size_t>(M - 1 - j)] = xb ? (zb ? 'Y' : 'X') : 'Z';
    }
    terms.push_back({coeff.real(), std::move(axes)});
  }
  return PauliHamiltonian(M, std::move(terms), prune);
}

}  // namespace varqa
