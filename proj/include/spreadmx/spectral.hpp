#pragma once

#include <array>
#include <cmath>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "spreadmx/error.hpp"
#include "spreadmx/network.hpp"

namespace spreadmx {

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Combinatorial Laplacian D − A of one layer over the full node registry.
template <typename Scalar = double>
DenseMatrix<Scalar> laplacian(const MultiplexNetwork& net, Index layer, bool weighted = false) {
  const Layer& l = net.layer(layer);
  DenseMatrix<Scalar> lap = DenseMatrix<Scalar>::Zero(net.num_nodes(), net.num_nodes());
  for (Index u = 0; u < net.num_nodes(); ++u) {
    for (const auto& nb : l.neighbors(u)) {
      const Scalar w = weighted ? static_cast<Scalar>(nb.weight) : Scalar(1);
      lap(u, nb.node) -= w;
      lap(u, u) += w;
    }
  }
  return lap;
}

template <typename Scalar = double>
DenseMatrix<Scalar> laplacian(const MultiplexNetwork& net, std::string_view layer,
                              bool weighted = false) {
  return laplacian<Scalar>(net, net.layer_index(layer), weighted);
}

/// Diffusion rates of the two layers inside the supra-Laplacian.
struct LayerRates {
  double first = 1.0;
  double second = 1.0;
};

/// Two-layer supra-Laplacian
///   [ p1·L1 + Dx·I      −Dx·I     ]
///   [    −Dx·I       p2·L2 + Dx·I ]
/// over 2N replica coordinates (layer-major).
template <typename Scalar = double>
DenseMatrix<Scalar> supra_laplacian(const MultiplexNetwork& net, double coupling,
                                    LayerRates rates = {}) {
  if (net.num_layers() != 2) throw InvalidArgument("supra_laplacian requires exactly two layers");
  if (!(std::isfinite(coupling) && coupling > 0.0)) throw InvalidArgument("coupling must be positive");
  const Index n = net.num_nodes();
  const Scalar dx = static_cast<Scalar>(coupling);
  DenseMatrix<Scalar> supra(2 * n, 2 * n);
  const auto id = DenseMatrix<Scalar>::Identity(n, n);
  supra.topLeftCorner(n, n) = static_cast<Scalar>(rates.first) * laplacian<Scalar>(net, Index{0}) + dx * id;
  supra.bottomRightCorner(n, n) =
      static_cast<Scalar>(rates.second) * laplacian<Scalar>(net, Index{1}) + dx * id;
  supra.topRightCorner(n, n) = -dx * id;
  supra.bottomLeftCorner(n, n) = -dx * id;
  return supra;
}

/// Superposition (p1·L1 + p2·L2) / 2, the infinite-coupling limit.
template <typename Scalar = double>
DenseMatrix<Scalar> superposition_laplacian(const MultiplexNetwork& net, LayerRates rates = {}) {
  if (net.num_layers() != 2) throw InvalidArgument("superposition requires exactly two layers");
  return (static_cast<Scalar>(rates.first) * laplacian<Scalar>(net, Index{0}) +
          static_cast<Scalar>(rates.second) * laplacian<Scalar>(net, Index{1})) /
         Scalar(2);
}

/// Ascending eigenvalues of a symmetric matrix. Throws when the relative
/// asymmetry exceeds 1e-12.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> symmetric_eigenvalues(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Plain = DenseMatrix<Scalar>;
  if (m.rows() != m.cols()) throw InvalidArgument("matrix is not square");
  const Plain a = m;
  if (a.size() > 0) {
    const Scalar scale = a.cwiseAbs().maxCoeff();
    const Scalar asym = (a - a.transpose()).cwiseAbs().maxCoeff();
    if (scale > Scalar(0) && asym > Scalar(1e-12) * scale) {
      throw InvalidArgument("matrix is not symmetric");
    }
  }
  Eigen::SelfAdjointEigenSolver<Plain> solver(a, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw Error("eigensolver did not converge");
  return solver.eigenvalues();
}

/// Second-smallest eigenvalue (index 1 of the ascending spectrum, so 0 on a
/// disconnected graph).
template <typename Derived>
typename Derived::Scalar lambda2(const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() < 2) throw InvalidArgument("lambda2 needs a matrix of size at least 2");
  return symmetric_eigenvalues(m)(1);
}

enum class DiffusionRegime { kSubMultiplex, kMultiplex, kSuperdiffusion };

std::string_view to_string(DiffusionRegime regime);

inline constexpr double kRegimeSlack = 1e-9;

/// Places λ2 of the supra-Laplacian relative to the two layer values.
DiffusionRegime classify(double lambda2_first, double lambda2_second, double lambda2_supra,
                         double slack = kRegimeSlack);

struct SpectralReport {
  std::vector<std::string> layer_names;
  std::vector<double> lambda2_per_layer;  ///< λ2 of p_ℓ·L_ℓ
  double lambda2_supra = 0.0;
  double lambda2_superposition = 0.0;
  double coupling = 0.0;
  DiffusionRegime regime = DiffusionRegime::kSubMultiplex;
};

SpectralReport classify_regime(const MultiplexNetwork& net, double coupling, LayerRates rates = {});

/// One report per coupling value; the grid must be positive and ascending.
std::vector<SpectralReport> dx_sweep(const MultiplexNetwork& net, std::span<const double> grid,
                                     LayerRates rates = {});

/// `count` log-spaced points from `lo` to `hi` inclusive.
std::vector<double> log_grid(double lo, double hi, int count);

}  // namespace spreadmx
