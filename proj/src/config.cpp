#include "warpiso/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace warpiso {

namespace pt = boost::property_tree;

namespace {

const std::set<std::string> kKnownKeys = {
    "warping.expr",       "warping.domain_max",  "warping.declared_limit",
    "floor.kind",         "floor.length",        "floor.width",
    "floor.resolution",   "floor.base",          "floor.weights",
    "floor.ids",          "floor.dimension",     "ceiling.heights",
    "ceiling.csv",        "ceiling.interpolation", "run.k",
    "run.seed",           "run.grid_points",     "run.tol_quad",
    "run.tol_verify",     "run.h_min",           "run.h_max",
    "run.samples",        "run.area",            "run.csv",
    "run.output",
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  std::string token;
  for (char c : s) {
    if (c == ' ' || c == '\t' || c == ',') {
      if (!token.empty()) out.push_back(std::move(token));
      token.clear();
    } else {
      token.push_back(c);
    }
  }
  if (!token.empty()) out.push_back(std::move(token));
  return out;
}

double to_double(const std::string& key, std::string_view text) {
  const std::string s = trim(text);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ConfigError("'" + key + "': expected a number, got '" + s + "'");
  }
  return v;
}

template <class Int>
Int to_integer(const std::string& key, std::string_view text) {
  const std::string s = trim(text);
  Int v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw ConfigError("'" + key + "': expected an integer, got '" + s + "'");
  }
  return v;
}

std::vector<double> to_doubles(const std::string& key, std::string_view text) {
  std::vector<double> out;
  for (const auto& token : split_list(text)) out.push_back(to_double(key, token));
  if (out.empty()) throw ConfigError("'" + key + "': expected at least one number");
  return out;
}

void apply(RunConfig& c, const std::string& key, const std::string& raw) {
  const std::string value = trim(raw);
  if (!kKnownKeys.count(key)) throw ConfigError("unknown configuration key '" + key + "'");

  if (key == "warping.expr") {
    c.warping = value;
  } else if (key == "warping.domain_max") {
    c.domain_max = to_double(key, value);
  } else if (key == "warping.declared_limit") {
    if (value.empty() || value == "none") {
      c.declared_limit.reset();
    } else {
      c.declared_limit = to_double(key, value);
    }
  } else if (key == "floor.kind") {
    if (value != "interval" && value != "rectangle" && value != "circle" &&
        value != "weighted_cells") {
      throw ConfigError("'floor.kind': unknown floor kind '" + value + "'");
    }
    c.floor.kind = value;
  } else if (key == "floor.length") {
    c.floor.length = to_double(key, value);
  } else if (key == "floor.width") {
    c.floor.width = to_double(key, value);
  } else if (key == "floor.resolution") {
    const auto parts = split_list(value);
    if (parts.empty() || parts.size() > 2) {
      throw ConfigError("'floor.resolution': expected one or two counts");
    }
    c.floor.resolution_x = to_integer<std::size_t>(key, parts[0]);
    c.floor.resolution_y = parts.size() == 2 ? to_integer<std::size_t>(key, parts[1]) : 1;
  } else if (key == "floor.base") {
    c.floor.base = to_double(key, value);
  } else if (key == "floor.weights") {
    c.floor.weights = to_doubles(key, value);
  } else if (key == "floor.ids") {
    c.floor.ids = split_list(value);
  } else if (key == "floor.dimension") {
    c.floor.dimension = to_integer<int>(key, value);
  } else if (key == "ceiling.heights") {
    const auto parts = split_list(value);
    if (parts.size() == 2 && parts[0] == "constant") {
      c.ceiling.source = CeilingSpec::Source::constant;
      c.ceiling.constant = to_double(key, parts[1]);
    } else if (parts.size() == 1 && parts[0] == "random") {
      c.ceiling.source = CeilingSpec::Source::random;
    } else {
      c.ceiling.source = CeilingSpec::Source::inline_heights;
      c.ceiling.heights = to_doubles(key, value);
    }
  } else if (key == "ceiling.csv") {
    c.ceiling.source = CeilingSpec::Source::csv;
    c.ceiling.csv_path = value;
  } else if (key == "ceiling.interpolation") {
    if (value == "step") {
      c.ceiling.interpolation = Interpolation::step;
    } else if (value == "linear") {
      c.ceiling.interpolation = Interpolation::linear;
    } else {
      throw ConfigError("'ceiling.interpolation': expected step or linear");
    }
  } else if (key == "run.k") {
    c.k = to_integer<int>(key, value);
  } else if (key == "run.seed") {
    c.seed = to_integer<std::uint64_t>(key, value);
  } else if (key == "run.grid_points") {
    c.grid_points = to_integer<std::size_t>(key, value);
  } else if (key == "run.tol_quad") {
    c.tol_quad = to_double(key, value);
  } else if (key == "run.tol_verify") {
    c.tol_verify = to_double(key, value);
  } else if (key == "run.h_min") {
    c.h_min = to_double(key, value);
  } else if (key == "run.h_max") {
    c.h_max = to_double(key, value);
  } else if (key == "run.samples") {
    c.samples = to_integer<std::size_t>(key, value);
  } else if (key == "run.area") {
    c.area = to_double(key, value);
  } else if (key == "run.csv") {
    c.csv_path = value;
  } else if (key == "run.output") {
    c.output = value;
  }
}

RunConfig from_tree(const pt::ptree& tree, const std::vector<std::string>& overrides) {
  RunConfig c;
  // File order; a later ceiling source replaces an earlier one.
  for (const auto& [section, body] : tree) {
    if (body.empty() && !body.data().empty()) {
      throw ConfigError("key '" + section + "' must appear inside a [section]");
    }
    for (const auto& [key, value] : body) {
      const std::string& text = value.data();
      apply(c, section + "." + key, text.substr(0, text.find_first_of(";#")));
    }
  }
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw ConfigError("override '" + o + "' is not key=value");
    apply(c, trim(std::string_view(o).substr(0, eq)), o.substr(eq + 1));
  }
  return c;
}

}  // namespace

RunConfig parse_config(std::string_view text, const std::vector<std::string>& overrides) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("config: ") + e.message() + " (line " +
                      std::to_string(e.line()) + ")");
  }
  return from_tree(tree, overrides);
}

RunConfig load_config(const std::string& path, const std::vector<std::string>& overrides) {
  if (path.empty()) return parse_config("", overrides);
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  RunConfig c = parse_config(text.str(), overrides);
  if (!c.ceiling.csv_path.empty() && std::filesystem::path(c.ceiling.csv_path).is_relative()) {
    const auto dir = std::filesystem::path(path).parent_path();
    if (!dir.empty() && !std::filesystem::exists(c.ceiling.csv_path)) {
      c.ceiling.csv_path = (dir / c.ceiling.csv_path).string();
    }
  }
  return c;
}

std::vector<double> read_height_csv(const std::string& path, std::size_t count) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open ceiling CSV '" + path + "'");
  std::vector<double> heights(count, 0.0);
  std::vector<bool> seen(count, false);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string row = trim(line);
    if (row.empty()) continue;
    if (line_no == 1 && row == "cell_index,height") continue;
    const auto comma = row.find(',');
    if (comma == std::string::npos) {
      throw ConfigError(path + ":" + std::to_string(line_no) + ": expected cell_index,height");
    }
    const std::string where = path + ":" + std::to_string(line_no);
    const auto index = to_integer<std::size_t>(where, std::string_view(row).substr(0, comma));
    const double h = to_double(where, std::string_view(row).substr(comma + 1));
    if (index >= count) {
      throw ConfigError(where + ": cell index " + std::to_string(index) + " out of range");
    }
    if (seen[index]) throw ConfigError(where + ": duplicate cell index " + std::to_string(index));
    seen[index] = true;
    heights[index] = h;
  }
  const auto missing = std::find(seen.begin(), seen.end(), false);
  if (missing != seen.end()) {
    throw ConfigError(path + ": no height for cell " +
                      std::to_string(std::distance(seen.begin(), missing)));
  }
  return heights;
}

}  // namespace warpiso
