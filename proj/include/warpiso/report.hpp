#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "warpiso/dido.hpp"
#include "warpiso/isoperimetric.hpp"
#include "warpiso/warping.hpp"

namespace warpiso {

/// 17 significant digits, locale independent; round-trips every double.
std::string format_number(double x);

/// Flat "key=value" lines, LF terminated, in insertion order.
class KeyValueWriter {
 public:
  KeyValueWriter& add(std::string_view key, std::string_view value);
  KeyValueWriter& add(std::string_view key, const char* value) {
    return add(key, std::string_view(value));
  }
  KeyValueWriter& add(std::string_view key, const std::string& value) {
    return add(key, std::string_view(value));
  }
  KeyValueWriter& add(std::string_view key, double value);
  KeyValueWriter& add(std::string_view key, bool value);
  KeyValueWriter& add(std::string_view key, std::size_t value);
  KeyValueWriter& add(std::string_view key, int value);

  const std::string& str() const { return text_; }

 private:
  std::string text_;
};

void append(KeyValueWriter& w, const CertificationReport& c);
void append(KeyValueWriter& w, const IsoperimetricReport& r);
void append(KeyValueWriter& w, const CalibrationResult& c);
void append(KeyValueWriter& w, const OmegaResult& o);

std::string verify_csv_header();
std::string verify_csv_row(const IsoperimetricReport& r, std::string_view warping, int k);

/// Header "h,Iprofile,nfprime_over_f".
std::string profile_csv(std::span<const ProfileSample> samples);
/// Header "h_star,crit_value".
std::string critical_points_csv(std::span<const CriticalPoint> points);

}  // namespace warpiso
