#include "support/fermion_oracle.hpp"

#include <bit>
#include <vector>

namespace varqa::test {
namespace {

Eigen::MatrixXd annihilator(int orbital, int n_orbitals) {
  const Eigen::Index dim = Eigen::Index{1} << n_orbitals;
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
  for (Eigen::Index ket = 0; ket < dim; ++ket) {
    if (!((ket >> orbital) & 1)) continue;
    const auto below = static_cast<std::uint32_t>(ket) & ((std::uint32_t{1} << orbital) - 1);
    const double sign = (std::popcount(below) % 2) ? -1.0 : 1.0;
    a(ket ^ (Eigen::Index{1} << orbital), ket) = sign;
  }
  return a;
}

}  // namespace

Eigen::MatrixXd fermionic_matrix(const SpinOrbitalIntegrals& so) {
  const int M = so.n_orbitals;
  const Eigen::Index dim = Eigen::Index{1} << M;
  std::vector<Eigen::MatrixXd> a, ad;
  for (int o = 0; o < M; ++o) {
    a.push_back(annihilator(o, M));
    ad.push_back(a.back().transpose());
  }
  Eigen::MatrixXd H = so.core_energy * Eigen::MatrixXd::Identity(dim, dim);
  for (int p = 0; p < M; ++p)
    for (int q = 0; q < M; ++q)
      if (so.one(p, q) != 0.0) H += so.one(p, q) * ad[p] * a[q];
  for (int p = 0; p < M; ++p)
    for (int q = 0; q < M; ++q)
      for (int r = 0; r < M; ++r)
        for (int s = 0; s < M; ++s)
          if (so.two(p, q, r, s) != 0.0)
            H += 0.5 * so.two(p, q, r, s) * ad[p] * ad[q] * a[r] * a[s];
  return H;
}

MolecularIntegrals random_integrals(int n_spatial, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  MolecularIntegrals mi;
  mi.n_spatial_orbitals = n_spatial;
  mi.n_electrons = n_spatial;
  mi.core_energy = uni(rng);
  const std::size_t n = static_cast<std::size_t>(n_spatial);
  mi.one_body.assign(n * n, 0.0);
  mi.two_body.assign(n * n * n * n, 0.0);
  for (int i = 0; i < n_spatial; ++i)
    for (int j = 0; j <= i; ++j) {
      const double v = uni(rng);
      mi.one_body[static_cast<std::size_t>(i) * n + j] = v;
      mi.one_body[static_cast<std::size_t>(j) * n + i] = v;
    }
  auto set = [&](int i, int j, int k, int l, double v) {
    mi.two_body[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l] = v;
  };
  for (int i = 0; i < n_spatial; ++i)
    for (int j = 0; j <= i; ++j)
      for (int k = 0; k <= i; ++k)
        for (int l = 0; l <= k; ++l) {
          if (i * (i + 1) / 2 + j < k * (k + 1) / 2 + l) continue;
          const double v = uni(rng);
          set(i, j, k, l, v);
          set(j, i, k, l, v);
          set(i, j, l, k, v);
          set(j, i, l, k, v);
          set(k, l, i, j, v);
          set(l, k, i, j, v);
          set(k, l, j, i, v);
          set(l, k, j, i, v);
        }
  return mi;
}

}  // namespace varqa::test
