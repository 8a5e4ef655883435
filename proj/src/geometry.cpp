#include "warpiso/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "warpiso/errors.hpp"
#include "warpiso/kernels.hpp"

namespace warpiso {

namespace {

// 4-point Gauss-Legendre rule mapped to [0, 1].
constexpr std::array<double, 4> kGaussNodes = {
    0.5 - 0.5 * 0.861136311594052575223946488892809,
    0.5 - 0.5 * 0.339981043584856264802665759103245,
    0.5 + 0.5 * 0.339981043584856264802665759103245,
    0.5 + 0.5 * 0.861136311594052575223946488892809,
};
constexpr std::array<double, 4> kGaussWeights = {
    0.5 * 0.347854845137453857373063949221999,
    0.5 * 0.652145154862546142626936050778001,
    0.5 * 0.652145154862546142626936050778001,
    0.5 * 0.347854845137453857373063949221999,
};

void require_positive(double value, const char* what) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(std::string(what) + " must be positive and finite");
  }
}

}  // namespace

Floor Floor::interval(double length, std::size_t resolution, double base, double fiber_scale) {
  require_positive(length, "interval length");
  require_positive(fiber_scale, "fiber scale");
  if (resolution == 0) throw std::invalid_argument("resolution must be at least 1");
  Floor f;
  f.kind_ = FloorKind::interval;
  f.dimension_ = 1;
  f.base_ = base;
  f.resolution_ = {resolution, 1};
  f.spacing_ = {length / static_cast<double>(resolution), 0.0};
  f.weights_.assign(resolution, f.spacing_[0] * fiber_scale);
  return f;
}

Floor Floor::circle(double circumference, std::size_t resolution, double base,
                    double fiber_scale) {
  Floor f = interval(circumference, resolution, base, fiber_scale);
  f.kind_ = FloorKind::circle;
  return f;
}

Floor Floor::rectangle(double length_x, double length_y, std::size_t nx, std::size_t ny,
                       double base, double fiber_scale) {
  require_positive(length_x, "rectangle side");
  require_positive(length_y, "rectangle side");
  require_positive(fiber_scale, "fiber scale");
  if (nx == 0 || ny == 0) throw std::invalid_argument("resolution must be at least 1");
  Floor f;
  f.kind_ = FloorKind::rectangle;
  f.dimension_ = 2;
  f.base_ = base;
  f.resolution_ = {nx, ny};
  f.spacing_ = {length_x / static_cast<double>(nx), length_y / static_cast<double>(ny)};
  f.weights_.assign(nx * ny, f.spacing_[0] * f.spacing_[1] * fiber_scale);
  return f;
}

Floor Floor::weighted_cells(std::vector<double> weights, int dimension, double base,
                            std::vector<std::string> ids) {
  if (weights.empty()) throw std::invalid_argument("weighted floor needs at least one cell");
  if (dimension < 1) throw std::invalid_argument("floor dimension must be at least 1");
  for (double w : weights) require_positive(w, "cell weight");
  if (!ids.empty() && ids.size() != weights.size()) {
    throw std::invalid_argument("cell id count does not match weight count");
  }
  Floor f;
  f.kind_ = FloorKind::weighted_cells;
  f.dimension_ = dimension;
  f.base_ = base;
  f.weights_ = std::move(weights);
  f.ids_ = std::move(ids);
  return f;
}

std::size_t Floor::vertex_count() const {
  switch (kind_) {
    case FloorKind::interval: return resolution_[0] + 1;
    case FloorKind::circle: return resolution_[0];
    case FloorKind::rectangle: return (resolution_[0] + 1) * (resolution_[1] + 1);
    case FloorKind::weighted_cells: return 0;
  }
  return 0;
}

Floor Floor::scaled(double factor) const {
  require_positive(factor, "scale factor");
  Floor f = *this;
  for (double& w : f.weights_) w *= factor;
  return f;
}

double floor_volume(const Floor& floor) { return kernels::sum(floor.weights()); }

Ceiling Ceiling::step(const Floor& floor, std::vector<double> heights) {
  Ceiling c(Interpolation::step, std::move(heights));
  c.check_matches(floor);
  return c;
}

Ceiling Ceiling::linear(const Floor& floor, std::vector<double> vertex_heights) {
  if (!floor.is_grid()) {
    throw UnsupportedModeError("linear ceilings need a grid floor");
  }
  Ceiling c(Interpolation::linear, std::move(vertex_heights));
  c.check_matches(floor);
  return c;
}

Ceiling Ceiling::constant(const Floor& floor, double height) {
  return step(floor, std::vector<double>(floor.cell_count(), height));
}

void Ceiling::check_matches(const Floor& floor) const {
  const std::size_t expected =
      interpolation_ == Interpolation::step ? floor.cell_count() : floor.vertex_count();
  if (heights_.size() != expected) {
    throw std::invalid_argument("ceiling has " + std::to_string(heights_.size()) +
                                " heights, floor needs " + std::to_string(expected));
  }
  for (double h : heights_) {
    if (!(h >= 0.0) || !std::isfinite(h)) {
      throw std::invalid_argument("ceiling heights must be finite and non-negative");
    }
  }
}

double Ceiling::max_height() const { return *std::max_element(heights_.begin(), heights_.end()); }

std::vector<HeightSample> Ceiling::samples(const Floor& floor) const {
  check_matches(floor);
  const auto weights = floor.weights();
  std::vector<HeightSample> out;

  if (interpolation_ == Interpolation::step) {
    out.reserve(heights_.size());
    for (std::size_t i = 0; i < heights_.size(); ++i) out.push_back({weights[i], heights_[i], 0.0});
    return out;
  }

  const auto [nx, ny] = floor.resolution();
  const auto [dx, dy] = floor.spacing();

  if (floor.kind() != FloorKind::rectangle) {
    out.reserve(nx * kGaussNodes.size());
    for (std::size_t i = 0; i < nx; ++i) {
      const double a = heights_[i];
      const double b = heights_[floor.kind() == FloorKind::circle ? (i + 1) % nx : i + 1];
      const double slope = (b - a) / dx;
      for (std::size_t g = 0; g < kGaussNodes.size(); ++g) {
        const double u = kGaussNodes[g];
        out.push_back({weights[i] * kGaussWeights[g], (1.0 - u) * a + u * b, slope * slope});
      }
    }
    return out;
  }

  const std::size_t row = nx + 1;
  out.reserve(nx * ny * kGaussNodes.size() * kGaussNodes.size());
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      const double h00 = heights_[j * row + i];
      const double h10 = heights_[j * row + i + 1];
      const double h01 = heights_[(j + 1) * row + i];
      const double h11 = heights_[(j + 1) * row + i + 1];
      const double w = weights[j * nx + i];
      for (std::size_t gv = 0; gv < kGaussNodes.size(); ++gv) {
        const double v = kGaussNodes[gv];
        for (std::size_t gu = 0; gu < kGaussNodes.size(); ++gu) {
          const double u = kGaussNodes[gu];
          const double height = (1.0 - u) * (1.0 - v) * h00 + u * (1.0 - v) * h10 +
                                (1.0 - u) * v * h01 + u * v * h11;
          const double gx = ((1.0 - v) * (h10 - h00) + v * (h11 - h01)) / dx;
          const double gy = ((1.0 - u) * (h01 - h00) + u * (h11 - h10)) / dy;
          out.push_back({w * kGaussWeights[gu] * kGaussWeights[gv], height, gx * gx + gy * gy});
        }
      }
    }
  }
  return out;
}

double room_volume(const Floor& floor, const Ceiling& ceiling, const MuIntegral& m) {
  const auto samples = ceiling.samples(floor);
  std::vector<double> w(samples.size()), vol(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    w[i] = samples[i].weight;
    vol[i] = m.I(samples[i].height);
  }
  return kernels::dot(w, vol);
}

double ceiling_area(const Floor& floor, const Ceiling& ceiling, const MuIntegral& m,
                    AreaMode mode) {
  if (mode == AreaMode::full && !floor.is_grid()) {
    throw UnsupportedModeError("full-mode area needs a grid floor with flat fiber coordinates");
  }
  const auto samples = ceiling.samples(floor);
  const std::size_t n = samples.size();
  std::vector<double> w(n), density(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = samples[i].weight;
    density[i] = m.mu(samples[i].height);
  }
  if (mode == AreaMode::full && ceiling.interpolation() == Interpolation::linear) {
    std::vector<double> warp(n), grad_sq(n);
    for (std::size_t i = 0; i < n; ++i) {
      warp[i] = m.warp(samples[i].height).v;
      grad_sq[i] = samples[i].grad_sq;
    }
    std::vector<double> vertical = density;
    kernels::area_density(vertical, warp, grad_sq, density);
  }
  return kernels::dot(w, density);
}

}  // namespace warpiso
