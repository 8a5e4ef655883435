#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "warpiso/errors.hpp"
#include "warpiso/geometry.hpp"

namespace warpiso {

/// Thrown for malformed configuration text, bad overrides and unreadable
/// files. Maps to exit code 1.
class ConfigError : public Error {
 public:
  using Error::Error;
};

struct FloorSpec {
  std::string kind = "interval";  // interval | rectangle | circle | weighted_cells
  double length = 1.0;            // interval length, circle circumference, rectangle x side
  double width = 1.0;             // rectangle y side
  std::size_t resolution_x = 1;
  std::size_t resolution_y = 1;
  double base = 0.0;
  std::vector<double> weights;  // weighted_cells
  std::vector<std::string> ids;
  int dimension = 0;  // weighted_cells; 0 = unset
};

struct CeilingSpec {
  enum class Source { inline_heights, csv, constant, random };
  Source source = Source::constant;
  std::vector<double> heights;
  std::string csv_path;
  double constant = 0.0;
  Interpolation interpolation = Interpolation::step;
};

/// Run configuration. Text form is an INI file with the sections
/// [warping], [floor], [ceiling] and [run]; any key can be overridden as
/// "section.key=value".
struct RunConfig {
  std::string warping;
  double domain_max = 10.0;
  std::optional<double> declared_limit;

  int k = 0;  // fiber dimension; 0 = take it from the floor
  FloorSpec floor;
  CeilingSpec ceiling;

  std::uint64_t seed = 0;
  std::size_t grid_points = 4096;
  double tol_quad = 1e-10;
  double tol_verify = 1e-8;

  double h_min = 0.0;  // 0 = default window
  double h_max = 0.0;
  std::size_t samples = 256;
  std::optional<double> area;

  std::string csv_path;  // verify: append a CSV row here
  std::string output;    // profile/omega: write CSV here instead of stdout
};

/// Parses configuration text. Overrides are applied after the text.
RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides = {});

/// Reads path (empty = no file) and applies overrides. Relative ceiling CSV
/// paths resolve against the config file's directory.
RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides = {});

/// Reads a "cell_index,height" CSV; every index in [0, count) must appear once.
std::vector<double> read_height_csv(const std::string& path, std::size_t count);

}  // namespace warpiso
