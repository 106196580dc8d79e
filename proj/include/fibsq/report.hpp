#pragma once

// Count reports and tables, with text, JSON and CSV renderings.
// JSON numbers are decimal strings so arbitrarily large counts survive.

#include "fibsq/integer.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fibsq {

enum class Format { text, json, csv };
Format parse_format(std::string_view s);

/// The four prefix counts, in display order.
enum class CountFunction { A = 0, B = 1, C = 2, D = 3 };
constexpr std::array<CountFunction, 4> all_functions{CountFunction::A, CountFunction::B,
                                                     CountFunction::C, CountFunction::D};
char function_name(CountFunction f);
/// Parses "A,B,D"-style lists; order and duplicates are normalized away.
std::vector<CountFunction> parse_which(std::string_view list);

enum class PathTag { closed_form, block_sum, oracle };
std::string_view to_string(PathTag tag);
PathTag parse_path_tag(std::string_view s);

struct CountEntry {
    Integer value;
    PathTag path = PathTag::closed_form;
    friend bool operator==(const CountEntry&, const CountEntry&) = default;
};

struct CountReport {
    Integer n;
    std::array<std::optional<CountEntry>, 4> entries;  // indexed by CountFunction

    const std::optional<CountEntry>& operator[](CountFunction f) const {
        return entries[static_cast<int>(f)];
    }
    friend bool operator==(const CountReport&, const CountReport&) = default;
};

/// Requested counts at n via the fast paths. n >= 1.
CountReport make_count_report(const Integer& n, const std::vector<CountFunction>& which);

std::string render(const CountReport& report, Format format);
CountReport parse_report_json(std::string_view text);
CountReport parse_report_csv(std::string_view text);

struct TableRow {
    Integer n;
    std::uint32_t a = 0, b = 0, c = 0, d = 0;
    Integer A, B, C, D;
    friend bool operator==(const TableRow&, const TableRow&) = default;
};

inline constexpr std::string_view table_csv_header = "n,a,b,c,d,A,B,C,D";

/// Rows from..to inclusive. Needs 1 <= from <= to; per-position columns
/// materialize blocks, so `to` is bounded by materialize_limit().
std::vector<TableRow> make_table(const Integer& from, const Integer& to);

std::string render(const std::vector<TableRow>& rows, Format format);
std::vector<TableRow> parse_table_json(std::string_view text);
std::vector<TableRow> parse_table_csv(std::string_view text);

}  // namespace fibsq
