#pragma once

#include <chrono>
#include <compare>
#include <string>
#include <string_view>

namespace eventlens {

/// Calendar date with day resolution. Thin value wrapper over sys_days so
/// that arithmetic and ordering are exact integer operations.
class Date {
 public:
  constexpr Date() = default;
  constexpr explicit Date(std::chrono::sys_days days) : days_(days) {}

  /// Throws Error(MalformedDate) when the triple is not a real calendar day.
  static Date from_ymd(int year, unsigned month, unsigned day);

  constexpr std::chrono::sys_days days() const { return days_; }
  std::chrono::year_month_day ymd() const { return std::chrono::year_month_day{days_}; }
  std::chrono::weekday weekday() const { return std::chrono::weekday{days_}; }
  bool is_weekend() const;

  /// Days since 1970-01-01; handy as a stable integer key.
  constexpr long serial() const { return days_.time_since_epoch().count(); }

  constexpr Date operator+(int n) const { return Date{days_ + std::chrono::days{n}}; }
  constexpr Date operator-(int n) const { return Date{days_ - std::chrono::days{n}}; }
  constexpr long operator-(Date other) const { return serial() - other.serial(); }

  constexpr auto operator<=>(const Date&) const = default;

 private:
  std::chrono::sys_days days_{};
};

/// Inclusive calendar interval.
struct DateRange {
  Date first;
  Date last;

  bool empty() const { return last < first; }
  bool contains(Date d) const { return first <= d && d <= last; }
  long size() const { return empty() ? 0 : (last - first) + 1; }
};

Date parse_iso_date(std::string_view text);  // YYYY-MM-DD
Date parse_dmy_date(std::string_view text);  // DD/MM/YYYY
/// Accepts either of the two formats above.
Date parse_date(std::string_view text);

std::string to_iso(Date d);

/// Number of Mon-Fri days d with a < d <= b (negative when b < a).
long weekdays_between(Date a, Date b);

}  // namespace eventlens
