#include "priorlens/common/date.hpp"

#include <array>
#include <cctype>
#include <cstdio>

namespace priorlens {

namespace {

bool is_leap(int y) { return (y % 4 == 0 && y % 100 != 0) || y % 400 == 0; }

int days_in_month(int y, int m) {
    static constexpr std::array<int, 13> d = {0, 31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
    if (m == 2 && is_leap(y)) return 29;
    return d[static_cast<size_t>(m)];
}

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

} // namespace

bool Date::valid() const {
    return year >= 1 && month >= 1 && month <= 12 && day >= 1 && day <= days_in_month(year, month);
}

std::string Date::to_string() const {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%04d-%02d-%02d", year, month, day);
    return buf;
}

std::optional<Date> Date::parse(const std::string& text) {
    if (all_digits(text) && text.size() == 4) {
        Date d{std::stoi(text), 1, 1};
        return d.valid() ? std::optional<Date>(d) : std::nullopt;
    }
    if (text.size() == 10 && text[4] == '-' && text[7] == '-') {
        std::string y = text.substr(0, 4), m = text.substr(5, 2), dd = text.substr(8, 2);
        if (!all_digits(y) || !all_digits(m) || !all_digits(dd)) return std::nullopt;
        Date d{std::stoi(y), std::stoi(m), std::stoi(dd)};
        return d.valid() ? std::optional<Date>(d) : std::nullopt;
    }
    return std::nullopt;
}

} // namespace priorlens
