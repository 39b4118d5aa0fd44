#include "varqa/exact.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstdint>
#include <numeric>

#include "varqa/errors.hpp"

namespace varqa {
namespace {

constexpr int kDenseLimit = 14;
constexpr int kSectorLimit = 20;

Eigen::MatrixXd dense_full(const PauliHamiltonian& h) {
  const int M = h.n_qubits();
  const std::size_t dim = std::size_t{1} << M;
  const std::vector<double> flat = dense_matrix(h);
  Eigen::MatrixXd mat(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c)
      mat(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = flat[r * dim + c];
  return mat;
}

// Basis-state spin labels depend on which orbitals carry alpha vs beta spin.
int state_sz2(BasisState s, int M, Ordering ordering) {
  int sz2 = 0;
  for (int o = 0; o < M; ++o) {
    if (!((s >> o) & 1u)) continue;
    const bool beta = (ordering == Ordering::blocked) ? (o >= M / 2) : (o % 2 == 1);
    sz2 += beta ? -1 : 1;
  }
  return sz2;
}

std::optional<std::pair<int, int>> label_of(const std::vector<double>& vec, int M,
                                            Ordering ordering) {
  double n_mean = 0.0, n_sq = 0.0, sz_mean = 0.0, sz_sq = 0.0;
  for (std::size_t i = 0; i < vec.size(); ++i) {
    const double w = vec[i] * vec[i];
    if (w == 0.0) continue;
    const double n = popcount(static_cast<BasisState>(i));
    const double sz = state_sz2(static_cast<BasisState>(i), M, ordering);
    n_mean += w * n;
    n_sq += w * n * n;
    sz_mean += w * sz;
    sz_sq += w * sz * sz;
  }
  if (n_sq - n_mean * n_mean > 1e-8 || sz_sq - sz_mean * sz_mean > 1e-8) return std::nullopt;
  return std::make_pair(static_cast<int>(std::lround(n_mean)),
                        static_cast<int>(std::lround(sz_mean)));
}

// Rotates eigenvectors inside (numerically) degenerate eigenvalue blocks so
// they also diagonalize the given basis-diagonal operator. This pins the
// solver's arbitrary basis choice to one with sharp sector labels whenever
// the operator commutes with the Hamiltonian.
void rotate_degenerate_blocks(const Eigen::VectorXd& evals, Eigen::MatrixXd& vecs,
                              const std::vector<double>& diag_op) {
  const Eigen::Index n = evals.size();
  Eigen::Index i = 0;
  while (i < n) {
    Eigen::Index j = i + 1;
    while (j < n &&
           std::abs(evals(j) - evals(j - 1)) < 1e-9 * std::max(1.0, std::abs(evals(j))))
      ++j;
    if (j - i > 1) {
      const Eigen::Index d = j - i;
      Eigen::MatrixXd block = vecs.middleCols(i, d);
      Eigen::MatrixXd scaled = block;
      for (Eigen::Index r = 0; r < vecs.rows(); ++r)
        scaled.row(r) *= diag_op[static_cast<std::size_t>(r)];
      const Eigen::MatrixXd projected = block.transpose() * scaled;
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(projected);
      vecs.middleCols(i, d) = block * es.eigenvectors();
    }
    i = j;
  }
}

Spectrum build_spectrum(const Eigen::VectorXd& evals, const Eigen::MatrixXd& vecs,
                        const std::vector<BasisState>* sector_states, int M,
                        const EdOptions& opts) {
  const std::size_t full_dim = std::size_t{1} << M;
  const Eigen::Index dim = evals.size();
  Eigen::Index count = dim;
  if (opts.max_eigenpairs >= 0 && opts.max_eigenpairs < count) count = opts.max_eigenpairs;

  Spectrum spec;
  spec.eigenvalues.reserve(static_cast<std::size_t>(count));
  for (Eigen::Index k = 0; k < count; ++k) {
    spec.eigenvalues.push_back(evals(k));
    std::vector<double> vec(full_dim, 0.0);
    for (Eigen::Index r = 0; r < dim; ++r) {
      const std::size_t row =
          sector_states ? static_cast<std::size_t>((*sector_states)[static_cast<std::size_t>(r)])
                        : static_cast<std::size_t>(r);
      vec[row] = vecs(r, k);
    }
    spec.sector_labels.push_back(label_of(vec, M, opts.ordering));
    spec.eigenvectors.push_back(std::move(vec));
  }
  return spec;
}

Spectrum solve_and_label(const Eigen::MatrixXd& mat, const std::vector<BasisState>* sector_states,
                         int M, const EdOptions& opts) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(mat);
  const Eigen::VectorXd evals = solver.eigenvalues();
  Eigen::MatrixXd vecs = solver.eigenvectors();
  // Combined N and Sz label operator; the packing keeps distinct (N, 2Sz)
  // pairs at distinct values for M < 64.
  std::vector<double> combo(static_cast<std::size_t>(vecs.rows()));
  for (Eigen::Index r = 0; r < vecs.rows(); ++r) {
    const BasisState s = sector_states ? (*sector_states)[static_cast<std::size_t>(r)]
                                       : static_cast<BasisState>(r);
    combo[static_cast<std::size_t>(r)] =
        64.0 * popcount(s) + static_cast<double>(state_sz2(s, M, opts.ordering));
  }
  rotate_degenerate_blocks(evals, vecs, combo);
  return build_spectrum(evals, vecs, sector_states, M, opts);
}

void add_shifts(Eigen::MatrixXd& mat, const std::vector<DeflationShift>& shifts,
                const std::vector<BasisState>* sector_states) {
  for (const auto& sh : shifts) {
    if (sector_states) {
      const Eigen::Index d = static_cast<Eigen::Index>(sector_states->size());
      Eigen::VectorXd v(d);
      for (Eigen::Index r = 0; r < d; ++r)
        v(r) = sh.state[(*sector_states)[static_cast<std::size_t>(r)]];
      mat += sh.alpha * v * v.transpose();
    } else {
      Eigen::Map<const Eigen::VectorXd> v(sh.state.data(),
                                          static_cast<Eigen::Index>(sh.state.size()));
      mat += sh.alpha * v * v.transpose();
    }
  }
}

Spectrum diagonalize(const PauliHamiltonian& h, const std::vector<DeflationShift>& shifts,
                     const EdOptions& opts) {
  const int M = h.n_qubits();
  if (M > kSectorLimit)
    throw DimensionTooLarge("exact diagonalization limited to " +
                            std::to_string(kSectorLimit) + " qubits");
  if (M > kDenseLimit && !opts.particle_sector)
    throw DimensionTooLarge("above " + std::to_string(kDenseLimit) +
                            " qubits a particle-number sector is required");

  if (!opts.particle_sector) {
    Eigen::MatrixXd mat = dense_full(h);
    add_shifts(mat, shifts, nullptr);
    return solve_and_label(mat, nullptr, M, opts);
  }

  // Sector-restricted build straight from the compiled terms; the operator
  // must commute with the total particle number for this to be exact.
  const int n_elec = *opts.particle_sector;
  if (n_elec < 0 || n_elec > M) throw ShapeError("particle sector outside [0, M]");
  std::vector<BasisState> states;
  const std::size_t full_dim = std::size_t{1} << M;
  for (std::size_t s = 0; s < full_dim; ++s)
    if (popcount(static_cast<BasisState>(s)) == n_elec)
      states.push_back(static_cast<BasisState>(s));
  std::vector<std::int64_t> pos(full_dim, -1);
  for (std::size_t i = 0; i < states.size(); ++i) pos[states[i]] = static_cast<std::int64_t>(i);

  const Eigen::Index dim = static_cast<Eigen::Index>(states.size());
  Eigen::MatrixXd mat = Eigen::MatrixXd::Zero(dim, dim);
  double odd_y_weight = 0.0;
  for (const auto& t : h.compiled()) {
    if (t.y_count % 2 != 0) {
      odd_y_weight += std::abs(t.coefficient);
      continue;
    }
    const double sign_y = (t.y_count % 4 == 0) ? 1.0 : -1.0;
    for (Eigen::Index c = 0; c < dim; ++c) {
      const BasisState n = states[static_cast<std::size_t>(c)];
      const BasisState m = n ^ t.x_mask;
      const std::int64_t r = pos[m];
      if (r < 0) continue;
      const double parity = (popcount(t.zy_mask & n) % 2) ? -1.0 : 1.0;
      mat(static_cast<Eigen::Index>(r), c) += t.coefficient * sign_y * parity;
    }
  }
  if (odd_y_weight > 1e-10)
    throw ImaginaryResidue("operator has imaginary part of weight " +
                           std::to_string(odd_y_weight));
  add_shifts(mat, shifts, &states);
  return solve_and_label(mat, &states, M, opts);
}

}  // namespace

DeflatedHamiltonian deflate(const PauliHamiltonian& h,
                            const std::vector<std::vector<double>>& states,
                            const std::vector<double>& alphas) {
  if (states.size() != alphas.size())
    throw ShapeError("deflate: states and alphas differ in length");
  const std::size_t dim = std::size_t{1} << h.n_qubits();
  DeflatedHamiltonian out{h, {}};
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].size() != dim)
      throw ShapeError("deflate: state " + std::to_string(i) + " has wrong dimension");
    const double norm2 = std::inner_product(states[i].begin(), states[i].end(),
                                            states[i].begin(), 0.0);
    if (std::abs(std::sqrt(norm2) - 1.0) > 1e-8)
      throw NonUnitState("deflate: state " + std::to_string(i) + " has norm " +
                         std::to_string(std::sqrt(norm2)));
    if (!(alphas[i] > 0.0))
      throw ShapeError("deflate: shift " + std::to_string(i) + " must be positive");
    out.shifts.push_back({alphas[i], states[i]});
  }
  return out;
}

Spectrum exact_diagonalize(const PauliHamiltonian& h, const EdOptions& opts) {
  return diagonalize(h, {}, opts);
}

Spectrum exact_diagonalize(const DeflatedHamiltonian& h, const EdOptions& opts) {
  return diagonalize(h.base, h.shifts, opts);
}

}  // namespace varqa
