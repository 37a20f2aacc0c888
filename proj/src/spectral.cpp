#include "spreadmx/spectral.hpp"

namespace spreadmx {

std::string_view to_string(DiffusionRegime regime) {
  switch (regime) {
    case DiffusionRegime::kSubMultiplex:
      return "SUB_MULTIPLEX";
    case DiffusionRegime::kMultiplex:
      return "MULTIPLEX";
    case DiffusionRegime::kSuperdiffusion:
      return "SUPERDIFFUSION";
  }
  return "SUB_MULTIPLEX";
}

DiffusionRegime classify(double lambda2_first, double lambda2_second, double lambda2_supra,
                         double slack) {
  const double lo = std::min(lambda2_first, lambda2_second);
  const double hi = std::max(lambda2_first, lambda2_second);
  if (lambda2_supra > hi + slack) return DiffusionRegime::kSuperdiffusion;
  if (lambda2_supra > lo + slack) return DiffusionRegime::kMultiplex;
  return DiffusionRegime::kSubMultiplex;
}

namespace {

struct LayerSpectra {
  std::vector<std::string> names;
  std::vector<double> lambda2;
  double superposition = 0.0;
};

LayerSpectra layer_spectra(const MultiplexNetwork& net, LayerRates rates) {
  if (net.num_layers() != 2) throw InvalidArgument("regime analysis requires exactly two layers");
  LayerSpectra s;
  const double r[2] = {rates.first, rates.second};
  for (Index l = 0; l < 2; ++l) {
    s.names.push_back(net.layer(l).name());
    s.lambda2.push_back(lambda2(r[l] * laplacian<double>(net, l)));
  }
  s.superposition = lambda2(superposition_laplacian<double>(net, rates));
  return s;
}

SpectralReport report_at(const MultiplexNetwork& net, const LayerSpectra& s, double coupling,
                         LayerRates rates) {
  SpectralReport r;
  r.layer_names = s.names;
  r.lambda2_per_layer = s.lambda2;
  r.lambda2_superposition = s.superposition;
  r.coupling = coupling;
  r.lambda2_supra = lambda2(supra_laplacian<double>(net, coupling, rates));
  r.regime = classify(s.lambda2[0], s.lambda2[1], r.lambda2_supra);
  return r;
}

}  // namespace

SpectralReport classify_regime(const MultiplexNetwork& net, double coupling, LayerRates rates) {
  return report_at(net, layer_spectra(net, rates), coupling, rates);
}

std::vector<SpectralReport> dx_sweep(const MultiplexNetwork& net, std::span<const double> grid,
                                     LayerRates rates) {
  if (grid.empty()) throw InvalidArgument("coupling grid is empty");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (!(grid[i] > 0.0)) throw InvalidArgument("coupling values must be positive");
    if (i > 0 && !(grid[i] > grid[i - 1])) throw InvalidArgument("coupling grid must ascend");
  }
  const LayerSpectra s = layer_spectra(net, rates);
  std::vector<SpectralReport> out;
  out.reserve(grid.size());
  for (double dx : grid) out.push_back(report_at(net, s, dx, rates));
  return out;
}

std::vector<double> log_grid(double lo, double hi, int count) {
  if (!(lo > 0.0 && hi >= lo) || count < 1) throw InvalidArgument("invalid log grid");
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (int i = 0; i < count; ++i) {
    out[i] = std::pow(10.0, a + (b - a) * i / (count - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace spreadmx
