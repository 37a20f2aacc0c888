#include "spreadmx/diffusion.hpp"

namespace spreadmx {

void SimulationConfig::validate(const MultiplexNetwork& net) const {
  auto in_unit = [](double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; };
  if (!in_unit(retention)) throw InvalidArgument("retention must lie in [0, 1]");
  if (net.num_layers() > 1 && !(std::isfinite(coupling) && coupling > 0.0)) {
    throw InvalidArgument("coupling must be positive");
  }
  if (!in_unit(decay)) throw InvalidArgument("decay must lie in [0, 1]");
  if (!(std::isfinite(suppress) && suppress >= 0.0)) {
    throw InvalidArgument("suppress must be non-negative");
  }
  if (horizon < 1) throw InvalidArgument("horizon must be at least 1");
  if (net.num_layers() < 1) throw InvalidArgument("network has no layers");
  for (const Seed& s : seeds) {
    if (!(std::isfinite(s.amount) && s.amount > 0.0)) {
      throw InvalidArgument("seed amount must be positive");
    }
    net.node(s.label);
    if (s.layer) net.layer_index(*s.layer);
  }
}

}  // namespace spreadmx
