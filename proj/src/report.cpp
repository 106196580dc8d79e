#include "fibsq/report.hpp"

#include "fibsq/cubes.hpp"
#include "fibsq/errors.hpp"
#include "fibsq/fibword.hpp"
#include "fibsq/squares.hpp"

#include <json.hpp>

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace fibsq {

namespace {

using nlohmann::json;

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.emplace_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

std::vector<std::string> lines_of(std::string_view text) {
    std::vector<std::string> out;
    for (auto& line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) out.push_back(std::move(line));
    }
    return out;
}

CountFunction function_from(std::string_view s) {
    if (s.size() == 1) {
        switch (s[0]) {
            case 'A': return CountFunction::A;
            case 'B': return CountFunction::B;
            case 'C': return CountFunction::C;
            case 'D': return CountFunction::D;
        }
    }
    throw DomainError("unknown count function '" + std::string(s) + "' (expected A, B, C or D)");
}

Integer json_integer(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_string()) {
        throw DomainError(std::string("missing decimal string field '") + key + "'");
    }
    return parse_integer(j.at(key).get<std::string>());
}

std::uint32_t small(const Integer& v) { return static_cast<std::uint32_t>(to_size(v)); }

}  // namespace

Format parse_format(std::string_view s) {
    if (s == "text") return Format::text;
    if (s == "json") return Format::json;
    if (s == "csv") return Format::csv;
    throw DomainError("unknown format '" + std::string(s) + "'");
}

char function_name(CountFunction f) { return "ABCD"[static_cast<int>(f)]; }

std::vector<CountFunction> parse_which(std::string_view list) {
    std::vector<CountFunction> out;
    for (const auto& item : split(list, ',')) {
        const auto f = function_from(item);
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string_view to_string(PathTag tag) {
    switch (tag) {
        case PathTag::closed_form: return "closed-form";
        case PathTag::block_sum: return "block-sum";
        case PathTag::oracle: return "oracle";
    }
    return "?";
}

PathTag parse_path_tag(std::string_view s) {
    for (auto tag : {PathTag::closed_form, PathTag::block_sum, PathTag::oracle}) {
        if (to_string(tag) == s) return tag;
    }
    throw DomainError("unknown path tag '" + std::string(s) + "'");
}

CountReport make_count_report(const Integer& n, const std::vector<CountFunction>& which) {
    if (n < 1) throw DomainError("n must be >= 1, got " + n.str());
    CountReport r{n, {}};
    for (auto f : which) {
        Integer v;
        switch (f) {
            case CountFunction::A: v = count_distinct_squares(n); break;
            case CountFunction::B: v = count_square_occurrences(n); break;
            case CountFunction::C: v = count_distinct_cubes(n); break;
            case CountFunction::D: v = count_cube_occurrences(n); break;
        }
        r.entries[static_cast<int>(f)] = CountEntry{v, PathTag::closed_form};
    }
    return r;
}

std::string render(const CountReport& report, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::text: {
            os << "n=" << report.n << '\n';
            for (auto f : all_functions) {
                if (const auto& e = report[f]) {
                    os << function_name(f) << '=' << e->value << "  (" << to_string(e->path) << ")\n";
                }
            }
            break;
        }
        case Format::json: {
            json j;
            j["n"] = report.n.str();
            json paths = json::object();
            for (auto f : all_functions) {
                if (const auto& e = report[f]) {
                    const std::string key(1, function_name(f));
                    j[key] = e->value.str();
                    paths[key] = std::string(to_string(e->path));
                }
            }
            j["path"] = paths;
            os << j.dump() << '\n';
            break;
        }
        case Format::csv: {
            std::string header = "n", row = report.n.str(), path;
            for (auto f : all_functions) {
                if (const auto& e = report[f]) {
                    header += ',';
                    header += function_name(f);
                    row += ',' + e->value.str();
                    if (!path.empty()) path += ';';
                    path += to_string(e->path);
                }
            }
            os << header << ",path\n" << row << ',' << path << '\n';
            break;
        }
    }
    return os.str();
}

CountReport parse_report_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("malformed report JSON: ") + e.what());
    }
    CountReport r{json_integer(j, "n"), {}};
    const json paths = j.value("path", json::object());
    for (auto f : all_functions) {
        const std::string key(1, function_name(f));
        if (!j.contains(key)) continue;
        if (!paths.contains(key)) throw DomainError("no path recorded for " + key);
        r.entries[static_cast<int>(f)] =
            CountEntry{json_integer(j, key.c_str()), parse_path_tag(paths.at(key).get<std::string>())};
    }
    return r;
}

CountReport parse_report_csv(std::string_view text) {
    const auto lines = lines_of(text);
    if (lines.size() != 2) throw DomainError("report CSV needs a header and one row");
    const auto header = split(lines[0], ',');
    const auto row = split(lines[1], ',');
    if (header.size() != row.size() || header.size() < 2 || header.front() != "n" ||
        header.back() != "path") {
        throw DomainError("malformed report CSV header '" + lines[0] + "'");
    }
    const auto paths = split(row.back(), ';');
    if (paths.size() != header.size() - 2) throw DomainError("path column does not match header");
    CountReport r{parse_integer(row.front()), {}};
    for (std::size_t i = 1; i + 1 < header.size(); ++i) {
        r.entries[static_cast<int>(function_from(header[i]))] =
            CountEntry{parse_integer(row[i]), parse_path_tag(paths[i - 1])};
    }
    return r;
}

std::vector<TableRow> make_table(const Integer& from, const Integer& to) {
    if (from < 1) throw DomainError("table start must be >= 1, got " + from.str());
    if (to < from) throw DomainError("table range [" + from.str() + "," + to.str() + "] is empty");
    if (to > materialize_limit()) {
        throw CapacityError("table end " + to.str() + " exceeds the materialization limit " +
                            std::to_string(materialize_limit()));
    }
    std::vector<TableRow> rows;
    for (Integer n = from; n <= to; ++n) {
        rows.push_back({n,
                        static_cast<std::uint32_t>(a_indicator(n)),
                        b_at(n),
                        static_cast<std::uint32_t>(c_indicator(n)),
                        d_at(n),
                        count_distinct_squares(n),
                        count_square_occurrences(n),
                        count_distinct_cubes(n),
                        count_cube_occurrences(n)});
    }
    return rows;
}

std::string render(const std::vector<TableRow>& rows, Format format) {
    std::ostringstream os;
    switch (format) {
        case Format::text: {
            const auto w = [&](const Integer& last) {
                return std::max<int>(3, static_cast<int>(last.str().size()) + 1);
            };
            const int wn = rows.empty() ? 4 : w(rows.back().n);
            const int wc = rows.empty() ? 4 : w(rows.back().B);
            os << std::setw(wn) << "n";
            for (const char* h : {"a", "b", "c", "d"}) os << std::setw(3) << h;
            for (const char* h : {"A", "B", "C", "D"}) os << std::setw(wc) << h;
            os << '\n';
            for (const auto& r : rows) {
                os << std::setw(wn) << r.n;
                for (auto v : {r.a, r.b, r.c, r.d}) os << std::setw(3) << v;
                for (const auto* v : {&r.A, &r.B, &r.C, &r.D}) os << std::setw(wc) << *v;
                os << '\n';
            }
            break;
        }
        case Format::json: {
            json arr = json::array();
            for (const auto& r : rows) {
                arr.push_back({{"n", r.n.str()},
                               {"a", std::to_string(r.a)},
                               {"b", std::to_string(r.b)},
                               {"c", std::to_string(r.c)},
                               {"d", std::to_string(r.d)},
                               {"A", r.A.str()},
                               {"B", r.B.str()},
                               {"C", r.C.str()},
                               {"D", r.D.str()}});
            }
            os << arr.dump() << '\n';
            break;
        }
        case Format::csv: {
            os << table_csv_header << '\n';
            for (const auto& r : rows) {
                os << r.n << ',' << r.a << ',' << r.b << ',' << r.c << ',' << r.d << ',' << r.A
                   << ',' << r.B << ',' << r.C << ',' << r.D << '\n';
            }
            break;
        }
    }
    return os.str();
}

std::vector<TableRow> parse_table_json(std::string_view text) {
    json arr;
    try {
        arr = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DomainError(std::string("malformed table JSON: ") + e.what());
    }
    if (!arr.is_array()) throw DomainError("table JSON must be an array");
    std::vector<TableRow> rows;
    for (const auto& j : arr) {
        rows.push_back({json_integer(j, "n"), small(json_integer(j, "a")),
                        small(json_integer(j, "b")), small(json_integer(j, "c")),
                        small(json_integer(j, "d")), json_integer(j, "A"), json_integer(j, "B"),
                        json_integer(j, "C"), json_integer(j, "D")});
    }
    return rows;
}

std::vector<TableRow> parse_table_csv(std::string_view text) {
    const auto lines = lines_of(text);
    if (lines.empty() || lines[0] != table_csv_header) {
        throw DomainError("table CSV must start with '" + std::string(table_csv_header) + "'");
    }
    std::vector<TableRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto c = split(lines[i], ',');
        if (c.size() != 9) throw DomainError("table CSV row " + std::to_string(i) + " has " +
                                             std::to_string(c.size()) + " cells");
        rows.push_back({parse_integer(c[0]), small(parse_integer(c[1])), small(parse_integer(c[2])),
                        small(parse_integer(c[3])), small(parse_integer(c[4])),
                        parse_integer(c[5]), parse_integer(c[6]), parse_integer(c[7]),
                        parse_integer(c[8])});
    }
    return rows;
}

}  // namespace fibsq
