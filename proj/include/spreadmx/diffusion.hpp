#pragma once

#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "spreadmx/error.hpp"
#include "spreadmx/network.hpp"

namespace spreadmx {

/// Initial activation placed on one replica, or on every replica when `layer`
/// is empty.
struct Seed {
  std::string label;
  std::optional<std::string> layer;
  double amount = 1.0;
};

/// Free parameters of a spreading-activation run.
struct SimulationConfig {
  double retention = 0.5;  ///< fraction kept by a node each step, in [0, 1]
  double coupling = 1.0;   ///< inter-layer coupling, > 0 (multiplex only)
  double decay = 0.0;      ///< per-step multiplicative loss, in [0, 1]
  double suppress = 0.0;   ///< entries below this are zeroed after decay
  int horizon = 1;         ///< number of steps, >= 1
  std::vector<Seed> seeds;
  bool weighted_split = false;  ///< split by edge weight instead of neighbour count
  bool seed_split = false;      ///< divide an all-layer seed across replicas

  /// Throws InvalidArgument (bad parameter) or LookupError (unknown seed).
  void validate(const MultiplexNetwork& net) const;

  double intra_share() const { return 1.0 / (1.0 + coupling); }
  double inter_share() const { return coupling / (1.0 + coupling); }
};

/// Replica energies: rows are nodes, columns are layers.
template <typename Scalar>
using EnergyMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar = double>
struct ActivationState {
  EnergyMatrix<Scalar> energy;
  int time = 0;

  Scalar total() const { return energy.sum(); }
};

/// Energy frames for the recorded nodes, t = 0..horizon.
template <typename Scalar = double>
struct Trajectory {
  std::vector<Index> nodes;
  std::vector<EnergyMatrix<Scalar>> frames;

  int horizon() const { return static_cast<int>(frames.size()) - 1; }
};

namespace detail {

// Sends `amount` from a replica across its layer. Returns false when the
// replica has nowhere to send (no neighbours, or zero strength when weighted).
template <typename Scalar>
bool spread(const Layer& layer, Index u, Index column, Scalar amount, bool weighted,
            EnergyMatrix<Scalar>& next) {
  const auto nbs = layer.neighbors(u);
  if (nbs.empty()) return false;
  if (weighted) {
    const Scalar strength = static_cast<Scalar>(layer.strength(u));
    if (!(strength > Scalar(0))) return false;
    for (const auto& nb : nbs) {
      next(nb.node, column) += amount * static_cast<Scalar>(nb.weight) / strength;
    }
  } else {
    const Scalar degree = static_cast<Scalar>(nbs.size());
    for (const auto& nb : nbs) next(nb.node, column) += amount / degree;
  }
  return true;
}

template <typename Scalar>
void decay_and_suppress(EnergyMatrix<Scalar>& energy, const SimulationConfig& config) {
  if (config.decay != 0.0) energy *= static_cast<Scalar>(1.0 - config.decay);
  if (config.suppress > 0.0) {
    const Scalar threshold = static_cast<Scalar>(config.suppress);
    energy = (energy.array() < threshold).select(Scalar(0), energy);
  }
}

}  // namespace detail

/// State at t = 0 with every seed amount placed on its replica(s).
template <typename Scalar = double>
ActivationState<Scalar> seed(const MultiplexNetwork& net, const SimulationConfig& config) {
  ActivationState<Scalar> state;
  state.energy = EnergyMatrix<Scalar>::Zero(net.num_nodes(), net.num_layers());
  for (const Seed& s : config.seeds) {
    const Index u = net.node(s.label).index;
    if (s.layer) {
      state.energy(u, net.layer_index(*s.layer)) += static_cast<Scalar>(s.amount);
    } else {
      const double per_replica =
          config.seed_split ? s.amount / static_cast<double>(net.num_layers()) : s.amount;
      state.energy.row(u).array() += static_cast<Scalar>(per_replica);
    }
  }
  return state;
}

/// One synchronous step on a single-layer network. A node keeps R·e and splits
/// (1 − R)·e over its neighbours; a node without neighbours keeps everything.
template <typename Scalar>
ActivationState<Scalar> step_single_layer(const MultiplexNetwork& net,
                                          const ActivationState<Scalar>& state,
                                          const SimulationConfig& config) {
  if (net.num_layers() != 1) throw InvalidArgument("step_single_layer requires one layer");
  const Layer& layer = net.layer(Index{0});
  const Scalar retention = static_cast<Scalar>(config.retention);
  const Scalar released = Scalar(1) - retention;

  ActivationState<Scalar> next{EnergyMatrix<Scalar>::Zero(state.energy.rows(), 1),
                               state.time + 1};
  for (Index u = 0; u < net.num_nodes(); ++u) {
    const Scalar e = state.energy(u, 0);
    if (e == Scalar(0)) continue;
    if (layer.degree(u) == 0) {
      next.energy(u, 0) += e;
      continue;
    }
    next.energy(u, 0) += retention * e;
    detail::spread(layer, u, 0, e * released, config.weighted_split, next.energy);
  }
  detail::decay_and_suppress(next.energy, config);
  return next;
}

/// One synchronous step on a multiplex network.
///
/// A replica keeps R·e. Of the released (1 − R)·e, the intra share p∥ spreads
/// over the replica's own layer and the inter share p⊥ is divided evenly among
/// the node's other replicas, each of which forwards it over its layer within
/// the same step. Shares that meet an empty neighbourhood stay on the replica
/// they reached. Senders are visited by ascending node, then layer.
template <typename Scalar>
ActivationState<Scalar> step_multiplex(const MultiplexNetwork& net,
                                       const ActivationState<Scalar>& state,
                                       const SimulationConfig& config) {
  const Index layers = net.num_layers();
  if (layers < 2) throw InvalidArgument("step_multiplex requires at least two layers");
  const Scalar retention = static_cast<Scalar>(config.retention);
  const Scalar released = Scalar(1) - retention;
  const Scalar intra = static_cast<Scalar>(config.intra_share());
  const Scalar inter = static_cast<Scalar>(config.inter_share());
  const Scalar other_layers = static_cast<Scalar>(layers - 1);

  ActivationState<Scalar> next{EnergyMatrix<Scalar>::Zero(state.energy.rows(), layers),
                               state.time + 1};
  for (Index u = 0; u < net.num_nodes(); ++u) {
    for (Index l = 0; l < layers; ++l) {
      const Scalar e = state.energy(u, l);
      if (e == Scalar(0)) continue;
      const Layer& own = net.layer(l);
      if (own.degree(u) == 0 || (config.weighted_split && !(own.strength(u) > 0.0))) {
        next.energy(u, l) += retention * e + e * released * intra;
      } else {
        next.energy(u, l) += retention * e;
        // Same association as e·(1−R)/|Γ|·p∥ in the unweighted case.
        const auto nbs = own.neighbors(u);
        if (config.weighted_split) {
          const Scalar strength = static_cast<Scalar>(own.strength(u));
          for (const auto& nb : nbs) {
            next.energy(nb.node, l) += e * released * static_cast<Scalar>(nb.weight) / strength * intra;
          }
        } else {
          const Scalar degree = static_cast<Scalar>(nbs.size());
          for (const auto& nb : nbs) next.energy(nb.node, l) += e * released / degree * intra;
        }
      }
      const Scalar routed = e * released * inter / other_layers;
      for (Index m = 0; m < layers; ++m) {
        if (m == l) continue;
        if (!detail::spread(net.layer(m), u, m, routed, config.weighted_split, next.energy)) {
          next.energy(u, m) += routed;
        }
      }
    }
  }
  detail::decay_and_suppress(next.energy, config);
  return next;
}

template <typename Scalar>
ActivationState<Scalar> step(const MultiplexNetwork& net, const ActivationState<Scalar>& state,
                             const SimulationConfig& config) {
  return net.num_layers() == 1 ? step_single_layer(net, state, config)
                               : step_multiplex(net, state, config);
}

/// Seeds and iterates `config.horizon` steps, recording `nodes` (all nodes when
/// empty) at every step including t = 0. Deterministic for identical inputs.
template <typename Scalar = double>
Trajectory<Scalar> run(const MultiplexNetwork& net, const SimulationConfig& config,
                       std::span<const Index> nodes = {}) {
  config.validate(net);
  Trajectory<Scalar> out;
  if (nodes.empty()) {
    out.nodes.resize(net.num_nodes());
    for (Index i = 0; i < net.num_nodes(); ++i) out.nodes[i] = i;
  } else {
    for (Index u : nodes) {
      if (u < 0 || u >= net.num_nodes()) throw InvalidArgument("recorded node out of range");
    }
    out.nodes.assign(nodes.begin(), nodes.end());
  }
  out.frames.reserve(config.horizon + 1);

  auto record = [&](const ActivationState<Scalar>& s) {
    EnergyMatrix<Scalar> frame(static_cast<Index>(out.nodes.size()), net.num_layers());
    for (Index i = 0; i < frame.rows(); ++i) frame.row(i) = s.energy.row(out.nodes[i]);
    out.frames.push_back(std::move(frame));
  };

  ActivationState<Scalar> state = seed<Scalar>(net, config);
  record(state);
  for (int t = 0; t < config.horizon; ++t) {
    state = step(net, state, config);
    record(state);
  }
  return out;
}

}  // namespace spreadmx
