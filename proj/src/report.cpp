#include "warpiso/report.hpp"

#include <charconv>

namespace warpiso {

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

KeyValueWriter& KeyValueWriter::add(std::string_view key, std::string_view value) {
  text_.append(key);
  text_.push_back('=');
  text_.append(value);
  text_.push_back('\n');
  return *this;
}

KeyValueWriter& KeyValueWriter::add(std::string_view key, double value) {
  return add(key, std::string_view(format_number(value)));
}

KeyValueWriter& KeyValueWriter::add(std::string_view key, bool value) {
  return add(key, std::string_view(value ? "true" : "false"));
}

KeyValueWriter& KeyValueWriter::add(std::string_view key, std::size_t value) {
  return add(key, std::string_view(std::to_string(value)));
}

KeyValueWriter& KeyValueWriter::add(std::string_view key, int value) {
  return add(key, std::string_view(std::to_string(value)));
}

void append(KeyValueWriter& w, const CertificationReport& c) {
  w.add("cert_lo", c.lo)
      .add("cert_hi", c.hi)
      .add("cert_grid_points", c.grid_points)
      .add("min_f", c.min_f)
      .add("argmin_f", c.argmin_f)
      .add("min_log_curvature", c.min_log_curvature)
      .add("argmin_log_curvature", c.argmin_log_curvature)
      .add("positive", c.positive)
      .add("log_convex", c.log_convex)
      .add("strictly_log_convex", c.strictly_log_convex);
  if (c.failure) w.add("failure", *c.failure);
}

void append(KeyValueWriter& w, const IsoperimetricReport& r) {
  w.add("vol_floor", r.vol_floor)
      .add("vol_room", r.vol_room)
      .add("H", r.H)
      .add("vol_S", r.vol_S)
      .add("vol_C_vertical", r.vol_C_vertical);
  if (r.vol_C_full) w.add("vol_C_full", *r.vol_C_full);
  w.add("margin", r.margin)
      .add("tol_verify", r.tol_verify)
      .add("log_convex", r.log_convex)
      .add("strict_f", r.strict_f)
      .add("equality", to_string(r.equality))
      .add("inequality", !r.asserted() ? "not_asserted" : (r.violated() ? "violated" : "holds"));
  if (r.seed) w.add("seed", std::string_view(std::to_string(*r.seed)));
  for (const auto& warning : r.warnings) w.add("warning", warning);
}

void append(KeyValueWriter& w, const CalibrationResult& c) {
  w.add("div_B", c.div_B)
      .add("flux_B", c.flux_B)
      .add("gap_B", c.gap_B)
      .add("div_R", c.div_R)
      .add("flux_R", c.flux_R)
      .add("gap_R", c.gap_R)
      .add("chain_holds", c.chain_holds);
}

void append(KeyValueWriter& w, const OmegaResult& o) {
  w.add("omega", o.omega)
      .add("omega_source", to_string(o.source))
      .add("omega_estimate", o.estimate)
      .add("critical_point_count", o.critical_points.size())
      .add("plateau_nf_over_f", o.plateau)
      .add("min_sampled_profile", o.min_sampled_profile)
      .add("unbounded_f", o.growth.unbounded)
      .add("min_growth_last_decile", o.growth.min_growth_last_decile)
      .add("f_ratio", o.growth.f_ratio);
}

std::string verify_csv_header() {
  return "seed,warping,k,vol_floor,vol_room,H,vol_S,vol_C_vertical,vol_C_full,margin,equality,"
         "strict_f,log_convex\n";
}

std::string verify_csv_row(const IsoperimetricReport& r, std::string_view warping, int k) {
  std::string row;
  row += r.seed ? std::to_string(*r.seed) : "";
  row += ',';
  row += warping;
  row += ',' + std::to_string(k);
  for (double v : {r.vol_floor, r.vol_room, r.H, r.vol_S, r.vol_C_vertical}) {
    row += ',' + format_number(v);
  }
  row += ',';
  if (r.vol_C_full) row += format_number(*r.vol_C_full);
  row += ',' + format_number(r.margin);
  row += ',';
  row += to_string(r.equality);
  row += r.strict_f ? ",true" : ",false";
  row += r.log_convex ? ",true" : ",false";
  row += '\n';
  return row;
}

std::string profile_csv(std::span<const ProfileSample> samples) {
  std::string out = "h,Iprofile,nfprime_over_f\n";
  for (const auto& s : samples) {
    out += format_number(s.h) + ',' + format_number(s.profile) + ',' + format_number(s.growth) +
           '\n';
  }
  return out;
}

std::string critical_points_csv(std::span<const CriticalPoint> points) {
  std::string out = "h_star,crit_value\n";
  for (const auto& p : points) out += format_number(p.h) + ',' + format_number(p.value) + '\n';
  return out;
}

}  // namespace warpiso
