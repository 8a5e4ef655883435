#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "warpiso/mu_integral.hpp"

namespace warpiso {

enum class FloorKind { interval, rectangle, circle, weighted_cells };

/// A k-dimensional floor region F in the vertical fiber {b} x N, split into
/// cells. Cell weights are the fiber measure at height b, i.e. the flat
/// measure in N coordinates times f(b)^k.
class Floor {
 public:
  static Floor interval(double length, std::size_t resolution, double base = 0.0,
                        double fiber_scale = 1.0);
  static Floor rectangle(double length_x, double length_y, std::size_t nx, std::size_t ny,
                         double base = 0.0, double fiber_scale = 1.0);
  /// Periodic flat circle of the given circumference.
  static Floor circle(double circumference, std::size_t resolution, double base = 0.0,
                      double fiber_scale = 1.0);
  /// Abstract cells (e.g. a curved fiber discretized elsewhere). Weights are
  /// taken as given and must be strictly positive.
  static Floor weighted_cells(std::vector<double> weights, int dimension, double base = 0.0,
                              std::vector<std::string> ids = {});

  FloorKind kind() const { return kind_; }
  int dimension() const { return dimension_; }
  double base() const { return base_; }
  bool is_grid() const { return kind_ != FloorKind::weighted_cells; }

  std::size_t cell_count() const { return weights_.size(); }
  std::span<const double> weights() const { return weights_; }
  const std::vector<std::string>& ids() const { return ids_; }

  /// Grid only: cells per axis (second entry 1 for one-dimensional kinds).
  std::array<std::size_t, 2> resolution() const { return resolution_; }
  /// Grid only: cell edge lengths in N coordinates.
  std::array<double, 2> spacing() const { return spacing_; }
  /// Vertices carrying heights of a linear ceiling.
  std::size_t vertex_count() const;

  /// The same floor with every weight multiplied by factor.
  Floor scaled(double factor) const;

 private:
  Floor() = default;

  FloorKind kind_ = FloorKind::interval;
  int dimension_ = 1;
  double base_ = 0.0;
  std::array<std::size_t, 2> resolution_{0, 0};
  std::array<double, 2> spacing_{0.0, 0.0};
  std::vector<double> weights_;
  std::vector<std::string> ids_;
};

/// Vol_k(F), the sum of the cell weights.
double floor_volume(const Floor& floor);

enum class Interpolation { step, linear };

/// One point of the discrete measure a ceiling induces on its floor: the
/// floor weight it stands for, the height above the floor, and |grad l|^2 in
/// N coordinates (zero for step ceilings).
struct HeightSample {
  double weight;
  double height;
  double grad_sq;
};

/// Height field l >= 0 over a floor. Step ceilings carry one height per
/// cell; linear ceilings carry one height per grid vertex and interpolate
/// (bi)linearly inside cells.
class Ceiling {
 public:
  static Ceiling step(const Floor& floor, std::vector<double> heights);
  static Ceiling linear(const Floor& floor, std::vector<double> vertex_heights);
  static Ceiling constant(const Floor& floor, double height);

  Interpolation interpolation() const { return interpolation_; }
  std::span<const double> heights() const { return heights_; }
  double max_height() const;

  /// Step ceilings: one sample per cell. Linear ceilings: a fixed 4-point
  /// Gauss-Legendre product rule per cell, with the exact gradient of the
  /// interpolant at each node.
  std::vector<HeightSample> samples(const Floor& floor) const;

 private:
  Ceiling(Interpolation interpolation, std::vector<double> heights)
      : interpolation_(interpolation), heights_(std::move(heights)) {}

  void check_matches(const Floor& floor) const;

  Interpolation interpolation_;
  std::vector<double> heights_;
};

/// Vol_{k+1}(R) = int_F I(l(q)) dV. Throws RangeError if a height exceeds the
/// working interval.
double room_volume(const Floor& floor, const Ceiling& ceiling, const MuIntegral& m);

enum class AreaMode { vertical, full };

/// Vertical mode: int_F mu(l) dV, the gradient-free part of the graph area.
/// Full mode: int_F mu(l) sqrt(1 + |grad l|^2 / f(b + l)^2) dV, the area of
/// the graph in the induced metric; needs a grid floor (UnsupportedModeError
/// otherwise). Step ceilings have zero gradient almost everywhere, and their
/// jump walls are not part of the graph, so both modes agree for them.
double ceiling_area(const Floor& floor, const Ceiling& ceiling, const MuIntegral& m,
                    AreaMode mode);

}  // namespace warpiso
