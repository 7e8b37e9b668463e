#include "eventlens/date.hpp"

#include <charconv>
#include <cstdio>

#include "eventlens/error.hpp"

namespace eventlens {

namespace {

int parse_fixed_int(std::string_view text, std::string_view whole) {
  int value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::MalformedDate, "not a date: '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

}  // namespace

Date Date::from_ymd(int year, unsigned month, unsigned day) {
  std::chrono::year_month_day ymd{std::chrono::year{year}, std::chrono::month{month},
                                  std::chrono::day{day}};
  if (!ymd.ok()) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", year, month, day);
    throw Error(ErrorCode::MalformedDate, std::string("invalid calendar date ") + buf);
  }
  return Date{std::chrono::sys_days{ymd}};
}

bool Date::is_weekend() const {
  const auto wd = weekday();
  return wd == std::chrono::Saturday || wd == std::chrono::Sunday;
}

Date parse_iso_date(std::string_view text) {
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') {
    throw Error(ErrorCode::MalformedDate, "expected YYYY-MM-DD, got '" + std::string(text) + "'");
  }
  return Date::from_ymd(parse_fixed_int(text.substr(0, 4), text),
                        static_cast<unsigned>(parse_fixed_int(text.substr(5, 2), text)),
                        static_cast<unsigned>(parse_fixed_int(text.substr(8, 2), text)));
}

Date parse_dmy_date(std::string_view text) {
  if (text.size() != 10 || text[2] != '/' || text[5] != '/') {
    throw Error(ErrorCode::MalformedDate, "expected DD/MM/YYYY, got '" + std::string(text) + "'");
  }
  return Date::from_ymd(parse_fixed_int(text.substr(6, 4), text),
                        static_cast<unsigned>(parse_fixed_int(text.substr(3, 2), text)),
                        static_cast<unsigned>(parse_fixed_int(text.substr(0, 2), text)));
}

Date parse_date(std::string_view text) {
  if (text.size() == 10 && text[4] == '-') return parse_iso_date(text);
  return parse_dmy_date(text);
}

std::string to_iso(Date d) {
  const auto ymd = d.ymd();
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return buf;
}

long weekdays_between(Date a, Date b) {
  if (b < a) return -weekdays_between(b, a);
  // Whole weeks contribute five weekdays each; walk the remainder.
  const long span = b - a;
  long count = (span / 7) * 5;
  for (Date d = a + static_cast<int>((span / 7) * 7) + 1; d <= b; d = d + 1) {
    if (!d.is_weekend()) ++count;
  }
  return count;
}

}  // namespace eventlens
