#pragma once

#include <compare>
#include <optional>
#include <string>

namespace priorlens {

// Calendar date. Metadata APIs return either full dates or bare years; a
// year-only value is stored as January 1 of that year.
struct Date {
    int year = 0;
    int month = 1;
    int day = 1;

    auto operator<=>(const Date&) const = default;

    bool valid() const;
    std::string to_string() const; // YYYY-MM-DD

    // Parses "YYYY-MM-DD" or "YYYY"; returns nullopt on anything else.
    static std::optional<Date> parse(const std::string& text);
};

} // namespace priorlens
