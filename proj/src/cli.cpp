#include "fibsq/cli.hpp"

#include "fibsq/cubes.hpp"
#include "fibsq/errors.hpp"
#include "fibsq/fibword.hpp"
#include "fibsq/oracle.hpp"
#include "fibsq/report.hpp"
#include "fibsq/squares.hpp"
#include "fibsq/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <optional>

namespace fibsq {

namespace {

constexpr int max_tree_order = 25;

struct Options {
    std::string n, from, to, which = "A,B,C,D", format = "text";
    std::vector<std::string> bench_n;
    std::size_t max_n = 500;
    std::string inject_fault;
    std::string kind;
    int m = 0;
    std::optional<int> case_id;
};

Integer require_positive(const std::string& text, const char* flag) {
    const Integer v = parse_integer(text);
    if (v < 1) throw DomainError(std::string(flag) + " must be >= 1, got " + text);
    return v;
}

int cmd_count(const Options& o, std::ostream& out) {
    const auto report = make_count_report(require_positive(o.n, "--n"), parse_which(o.which));
    out << render(report, parse_format(o.format));
    return exit_ok;
}

int cmd_table(const Options& o, std::ostream& out) {
    const Integer from = require_positive(o.from, "--from");
    const Integer to = require_positive(o.to, "--to");
    if (to < from) throw DomainError("--to must not be below --from");
    out << render(make_table(from, to), parse_format(o.format));
    return exit_ok;
}

FastPaths with_fault(FastPaths paths, const std::string& which, std::size_t max_n) {
    const Integer from = std::min<std::size_t>(100, max_n);
    const auto shift = [from](std::function<Integer(const Integer&)> f) {
        return [f, from](const Integer& n) { return n >= from ? Integer(f(n) + 1) : f(n); };
    };
    if (which == "A") paths.A = shift(paths.A);
    else if (which == "B") paths.B = shift(paths.B);
    else if (which == "C") paths.C = shift(paths.C);
    else if (which == "D") paths.D = shift(paths.D);
    else throw DomainError("--inject-fault expects A, B, C or D");
    return paths;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
    if (o.max_n < 1) throw DomainError("--max-n must be >= 1");
    auto paths = FastPaths::standard();
    if (!o.inject_fault.empty()) paths = with_fault(paths, o.inject_fault, o.max_n);
    const auto t0 = std::chrono::steady_clock::now();
    const auto result = oracle_sweep(o.max_n, paths);
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - t0;
    if (!result.ok()) {
        err << describe(*result.first_divergence) << '\n';
        return exit_divergence;
    }
    out << "ok: 1 <= n <= " << o.max_n << ", " << result.positions_checked
        << " oracle comparisons, " << result.invariants_checked << " invariant checks, "
        << std::fixed << std::setprecision(2) << elapsed.count() << " s\n";
    return exit_ok;
}

int cmd_tree(const Options& o, std::ostream& out) {
    if (o.m > max_tree_order) {
        throw DomainError("--m above " + std::to_string(max_tree_order) + " is not supported");
    }
    if (o.kind == "cubes") {
        if (o.case_id) throw DomainError("--case applies to square trees only");
        dump_tree(out, cube_tree(o.m));
    } else {
        dump_tree(out, square_tree(o.case_id.value_or(1), o.m));
    }
    return exit_ok;
}

struct BenchLine {
    char function;
    std::string path;
    std::optional<Integer> value;
    double ms = 0;
};

template <class F>
BenchLine timed(char function, std::string path, F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    Integer v = f();
    const std::chrono::duration<double, std::milli> dt = std::chrono::steady_clock::now() - t0;
    return {function, std::move(path), std::move(v), dt.count()};
}

template <class F>
BenchLine timed_or_skip(char function, std::string path, F&& f) {
    try {
        return timed(function, path, std::forward<F>(f));
    } catch (const CapacityError&) {
        return {function, std::move(path), std::nullopt, 0};
    }
}

int cmd_bench(const Options& o, std::ostream& out, std::ostream& err) {
    std::vector<Integer> ns;
    for (const auto& s : o.bench_n) ns.push_back(require_positive(s, "--n"));
    int status = exit_ok;
    out << std::left << std::setw(4) << "fn" << std::setw(13) << "path" << std::setw(12) << "ms"
        << "n / value\n";
    for (const auto& n : ns) {
        const bool naive_ok = n <= oracle::oracle_limit();
        const std::size_t small_n = naive_ok ? to_size(n) : 0;
        std::vector<BenchLine> lines;
        const auto naive = [&](char fn, auto&& f) {
            if (naive_ok) lines.push_back(timed(fn, "oracle", f));
            else lines.push_back({fn, "oracle", std::nullopt, 0});
        };
        lines.push_back(timed('A', "closed-form", [&] { return count_distinct_squares(n); }));
        naive('A', [&] { return Integer(oracle::distinct_powers(small_n, 2).size()); });
        lines.push_back(timed('B', "closed-form", [&] { return count_square_occurrences(n); }));
        lines.push_back(timed_or_skip('B', "block-sum", [&] { return count_square_occurrences_by_blocks(n); }));
        naive('B', [&] { return Integer(oracle::enumerate_powers(small_n, 2).size()); });
        lines.push_back(timed('C', "closed-form", [&] { return count_distinct_cubes(n); }));
        naive('C', [&] { return Integer(oracle::distinct_powers(small_n, 3).size()); });
        lines.push_back(timed('D', "closed-form", [&] { return count_cube_occurrences(n); }));
        lines.push_back(timed_or_skip('D', "block-sum", [&] { return count_cube_occurrences_by_blocks(n); }));
        naive('D', [&] { return Integer(oracle::enumerate_powers(small_n, 3).size()); });

        const BenchLine* fast = nullptr;
        for (const auto& l : lines) {
            out << std::left << std::setw(4) << l.function << std::setw(13) << l.path;
            if (!l.value) {
                out << std::setw(12) << "skipped" << n << '\n';
                continue;
            }
            std::ostringstream ms;
            ms << std::fixed << std::setprecision(3) << l.ms;
            out << std::setw(12) << ms.str() << n << " / " << *l.value << '\n';
            if (l.path == "closed-form") {
                fast = &l;
            } else if (fast && *fast->value != *l.value) {
                err << l.function << "(" << n << "): " << l.path << " gives " << *l.value
                    << " but closed-form gives " << *fast->value << '\n';
                status = exit_divergence;
            }
        }
    }
    return status;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Squares and cubes in prefixes of the Fibonacci word", "fibsq"};
    app.require_subcommand(1);
    Options o;
    const auto formats = CLI::IsMember({"text", "json", "csv"});

    auto* count = app.add_subcommand("count", "A(n), B(n), C(n), D(n) at a single n");
    count->add_option("--n", o.n, "prefix length (decimal, any size)")->required();
    count->add_option("--which", o.which, "comma-separated subset of A,B,C,D")->capture_default_str();
    count->add_option("--format", o.format)->check(formats)->capture_default_str();

    auto* table = app.add_subcommand("table", "per-position and cumulative counts over a range");
    table->add_option("--from", o.from)->required();
    table->add_option("--to", o.to)->required();
    table->add_option("--format", o.format)->check(formats)->capture_default_str();

    auto* verify = app.add_subcommand("verify", "compare every path with brute force up to --max-n");
    verify->add_option("--max-n", o.max_n)->capture_default_str();
    verify->add_option("--inject-fault", o.inject_fault)->group("");

    auto* tree = app.add_subcommand("tree", "dump a square or cube family tree");
    tree->add_option("kind", o.kind)->required()->check(CLI::IsMember({"squares", "cubes"}));
    tree->add_option("--m", o.m, "order of the root kernel")->required();
    tree->add_option("--case", o.case_id, "square case, 1 or 2")->check(CLI::Range(1, 2));

    auto* bench = app.add_subcommand("bench", "time closed-form, block and brute-force paths");
    bench->add_option("--n", o.bench_n, "prefix length; repeatable")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*count) return cmd_count(o, out);
        if (*table) return cmd_table(o, out);
        if (*verify) return cmd_verify(o, out, err);
        if (*tree) return cmd_tree(o, out);
        if (*bench) return cmd_bench(o, out, err);
    } catch (const CapacityError& e) {
        err << "capacity: " << e.what() << '\n';
        return exit_capacity;
    } catch (const DomainError& e) {
        err << "usage: " << e.what() << '\n';
        return exit_usage;
    } catch (const InvariantError& e) {
        err << "invariant violated: " << e.what() << '\n';
        return exit_divergence;
    }
    return exit_usage;
}

}  // namespace fibsq
