#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ffred/int_ring.hpp"
#include "ffred/matmul.hpp"
#include "ffred/matrix.hpp"
#include "ffred/metrics.hpp"
#include "ffred/poly_ring.hpp"
#include "ffred/problem_io.hpp"
#include "ffred/solver.hpp"

using namespace ffred;

namespace {

// Options shared by every subcommand; sweep ignores the input-selection part.
struct Options {
    std::string path;
    std::string strategy = "dichotomous";
    std::string mul = "classical";
    std::size_t cutoff = 8;
    bool permute = false;
    bool with_count = false;
    std::string domain;
    std::vector<std::size_t> random_shape;  // --random n m
    std::uint64_t seed = 1;
};

void add_common_options(CLI::App* cmd, Options& opt, bool takes_input) {
    if (takes_input) {
        cmd->add_option("path", opt.path, "problem file");
        cmd->add_option("--random", opt.random_shape,
                        "generate a random integer system of this shape "
                        "instead of reading a file")
            ->expected(2)
            ->type_name("N M");
        cmd->add_option("--seed", opt.seed, "seed for --random");
        cmd->add_option("--domain", opt.domain,
                        "assert the problem's domain (int or poly)")
            ->check(CLI::IsMember({"int", "poly"}));
        cmd->add_flag("--permute", opt.permute,
                      "precondition with a row permutation when a corner "
                      "minor vanishes");
        cmd->add_flag("--count", opt.with_count,
                      "also print the operation tally");
    }
    cmd->add_option("--strategy", opt.strategy,
                    "partition strategy: dichotomous, onepass, forward or "
                    "fixed=<order>");
    cmd->add_option("--mul", opt.mul, "multiplication backend")
        ->check(CLI::IsMember({"classical", "strassen"}));
    cmd->add_option("--cutoff", opt.cutoff,
                    "dimension at or below which strassen falls back to the "
                    "classical kernel");
}

PartitionStrategy parse_strategy(const std::string& text) {
    if (text == "dichotomous") {
        return PartitionStrategy::dichotomous();
    }
    if (text == "onepass") {
        return PartitionStrategy::one_pass();
    }
    if (text == "forward") {
        return PartitionStrategy::forward_backup();
    }
    if (text.rfind("fixed=", 0) == 0) {
        const Int order = parse_int(text.substr(6));
        if (sgn(order) < 0) {
            throw ParseError("fixed=<order> needs a nonnegative order", 0);
        }
        return PartitionStrategy::fixed(static_cast<std::size_t>(order.get_ui()));
    }
    throw ParseError("unknown strategy '" + text +
                         "', expected dichotomous, onepass, forward or "
                         "fixed=<order>",
                     0);
}

MulBackend parse_backend(const Options& opt) {
    if (opt.cutoff == 0) {
        throw ParseError("--cutoff must be at least 1", 0);
    }
    return opt.mul == "classical" ? MulBackend::classical()
                                  : MulBackend::strassen(opt.cutoff);
}

ProblemFile acquire_problem(const Options& opt) {
    if (!opt.random_shape.empty()) {
        if (!opt.path.empty()) {
            throw ParseError("give either a problem file or --random, not both",
                             0);
        }
        if (opt.domain == "poly") {
            throw ParseError("--random generates integer systems only", 0);
        }
        std::mt19937_64 rng(opt.seed);
        return ProblemFile{
            DomainKind::Int,
            random_int_system(opt.random_shape[0], opt.random_shape[1], rng)};
    }
    if (opt.path.empty()) {
        throw ParseError("need a problem file or --random N M", 0);
    }
    ProblemFile pf = load_problem(opt.path);
    if (!opt.domain.empty()) {
        const DomainKind want =
            opt.domain == "int" ? DomainKind::Int : DomainKind::Poly;
        if (pf.domain != want) {
            throw ParseError("problem file domain does not match --domain " +
                                 opt.domain,
                             0);
        }
    }
    return pf;
}

void print_count_line(const OpCounts& counts, std::size_t n, std::size_t m,
                      const PartitionStrategy& strategy,
                      const MulBackend& backend) {
    const OpCounts predicted = predict_tree(n, m, strategy, backend);
    std::cout << "adds=" << counts.adds << " muls=" << counts.muls
              << " divs=" << counts.divs << " (predicted " << predicted.adds
              << "/" << predicted.muls << "/" << predicted.divs << ")\n";
}

// x_i = (minors(i, last) - sum over free columns of minors(i,.) * x_p) / delta.
// Integer coefficients fold their sign into the +/- separator; polynomial
// ones stay bracketed.
std::string parametric_line(const Matrix<Int>& minors, std::size_t i,
                            std::size_t n, std::size_t m) {
    std::string out = "(" + format(minors(i, m - n - 1));
    for (std::size_t p = n; p + 1 < m; ++p) {
        const Int& c = minors(i, p - n);
        if (is_zero(c)) {
            continue;
        }
        const std::string var = "x" + std::to_string(p + 1);
        out += sgn(c) > 0 ? " - " + format(c) : " + " + format(Int(-c));
        out += "*" + var;
    }
    return out + ")";
}

std::string parametric_line(const Matrix<Poly>& minors, std::size_t i,
                            std::size_t n, std::size_t m) {
    std::string out = "(" + format(minors(i, m - n - 1));
    for (std::size_t p = n; p + 1 < m; ++p) {
        const Poly& c = minors(i, p - n);
        if (is_zero(c)) {
            continue;
        }
        out += " - " + format(c) + "*x" + std::to_string(p + 1);
    }
    return out + ")";
}

// Reduced p/q with positive denominator; GMP's canonical form already prints
// "p" when q is one.
std::string rational_text(const Int& num, const Int& den) {
    mpq_class q(num, den);
    q.canonicalize();
    return q.get_str();
}

void print_solution(const ParametricSolution<Int>& sol) {
    std::cout << "delta = " << format(sol.delta_n) << "\n";
    std::cout << "minors:\n" << format(sol.minors);
    if (sol.m == sol.n + 1) {
        std::string xs;
        for (std::size_t i = 0; i < sol.n; ++i) {
            xs += (i ? ", " : "") + rational_text(sol.minors(i, 0), sol.delta_n);
        }
        std::cout << "x = (" << xs << ")\n";
    } else {
        for (std::size_t i = 0; i < sol.n; ++i) {
            std::cout << "x" << i + 1 << " = "
                      << parametric_line(sol.minors, i, sol.n, sol.m) << " / "
                      << format(sol.delta_n) << "\n";
        }
        std::string free;
        for (std::size_t p = sol.n; p + 1 < sol.m; ++p) {
            free += (free.empty() ? "" : ", ") + ("x" + std::to_string(p + 1));
        }
        std::cout << "free: " << free << "\n";
    }
}

void print_solution(const ParametricSolution<Poly>& sol) {
    std::cout << "delta = " << format(sol.delta_n) << "\n";
    std::cout << "minors:\n" << format(sol.minors);
    if (sol.m == sol.n + 1) {
        for (std::size_t i = 0; i < sol.n; ++i) {
            std::cout << "x" << i + 1 << " = " << format(sol.minors(i, 0))
                      << " / delta\n";
        }
    } else {
        for (std::size_t i = 0; i < sol.n; ++i) {
            std::cout << "x" << i + 1 << " = "
                      << parametric_line(sol.minors, i, sol.n, sol.m)
                      << " / delta\n";
        }
        std::string free;
        for (std::size_t p = sol.n; p + 1 < sol.m; ++p) {
            free += (free.empty() ? "" : ", ") + ("x" + std::to_string(p + 1));
        }
        std::cout << "free: " << free << "\n";
    }
}

template <IntegralDomain T>
int solve_one(const Matrix<T>& a, const Options& opt) {
    const PartitionStrategy strategy = parse_strategy(opt.strategy);
    const MulBackend backend = parse_backend(opt);
    OpCounts counts;
    const ParametricSolution<T> sol =
        solve(a, strategy, backend, counts, opt.permute);
    print_solution(sol);
    if (opt.with_count) {
        print_count_line(counts, a.rows(), a.cols(), strategy, backend);
    }
    return 0;
}

template <IntegralDomain T>
int det_one(const Matrix<T>& a, const Options& opt) {
    const PartitionStrategy strategy = parse_strategy(opt.strategy);
    const MulBackend backend = parse_backend(opt);
    OpCounts counts;
    const T det = determinant(a, strategy, backend, counts, opt.permute);
    std::cout << "det = " << format(det) << "\n";
    if (opt.with_count) {
        print_count_line(counts, a.rows(), a.cols(), strategy, backend);
    }
    return 0;
}

template <IntegralDomain T>
int adj_one(const Matrix<T>& a, const Options& opt) {
    const PartitionStrategy strategy = parse_strategy(opt.strategy);
    const MulBackend backend = parse_backend(opt);
    OpCounts counts;
    const Matrix<T> adj = adjugate(a, strategy, backend, counts, opt.permute);
    std::cout << format(adj);
    if (opt.with_count) {
        print_count_line(counts, a.rows(), 2 * a.cols(), strategy, backend);
    }
    return 0;
}

template <IntegralDomain T>
int count_one(const Matrix<T>& a, const Options& opt) {
    const PartitionStrategy strategy = parse_strategy(opt.strategy);
    const MulBackend backend = parse_backend(opt);
    OpCounts counts;
    if (a.cols() > a.rows()) {
        solve(a, strategy, backend, counts, opt.permute);
    } else {
        determinant(a, strategy, backend, counts, opt.permute);
    }
    print_count_line(counts, a.rows(), a.cols(), strategy, backend);
    return 0;
}

template <typename Fn>
int dispatch(const Options& opt, Fn fn) {
    const ProblemFile pf = acquire_problem(opt);
    if (pf.domain == DomainKind::Int) {
        return fn(pf.as_int());
    }
    return fn(pf.as_poly());
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
    std::vector<std::size_t> sizes;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty()) {
            continue;
        }
        sizes.push_back(
            static_cast<std::size_t>(parse_int(token).get_ui()));
    }
    return sizes;
}

int run_sweep(const Options& opt, const std::string& sizes_text,
              const std::string& out_path) {
    const PartitionStrategy strategy = parse_strategy(opt.strategy);
    const MulBackend backend = parse_backend(opt);
    const std::vector<SweepRow> rows =
        sweep(parse_sizes(sizes_text), strategy, backend, opt.seed);
    if (out_path.empty()) {
        write_sweep_csv(std::cout, rows);
    } else {
        std::ofstream out(out_path);
        if (!out) {
            throw Error("cannot open output file: " + out_path);
        }
        write_sweep_csv(out, rows);
        for (const GrowthPoint& g : growth_exponents(rows)) {
            std::cout << "growth n=" << g.from_n << " -> n=" << g.to_n
                      << ": matmul-mul exponent " << g.mm_mul_exponent
                      << ", mul exponent " << g.mul_exponent
                      << ", add exponent " << g.add_exponent << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact linear algebra over integral domains"};
    app.require_subcommand(1);

    Options opt;
    std::string sizes_text = "2,4,8,16,32";
    std::string out_path;

    CLI::App* solve_cmd =
        app.add_subcommand("solve", "solve the extended system A|b");
    add_common_options(solve_cmd, opt, true);
    CLI::App* det_cmd =
        app.add_subcommand("det", "determinant of a square matrix");
    add_common_options(det_cmd, opt, true);
    CLI::App* adj_cmd =
        app.add_subcommand("adj", "adjugate of a square matrix");
    add_common_options(adj_cmd, opt, true);
    CLI::App* count_cmd = app.add_subcommand(
        "count", "instrumented vs predicted operation counts");
    add_common_options(count_cmd, opt, true);
    CLI::App* sweep_cmd = app.add_subcommand(
        "sweep", "instrumented counts over a range of sizes, as CSV");
    add_common_options(sweep_cmd, opt, false);
    sweep_cmd->add_option("--sizes", sizes_text,
                          "comma-separated list of system sizes");
    sweep_cmd->add_option("--seed", opt.seed, "seed for the random systems");
    sweep_cmd->add_option("--out", out_path,
                          "CSV file path; default is standard output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);  // --help
        }
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (solve_cmd->parsed()) {
            return dispatch(opt, [&](const auto& a) { return solve_one(a, opt); });
        }
        if (det_cmd->parsed()) {
            return dispatch(opt, [&](const auto& a) { return det_one(a, opt); });
        }
        if (adj_cmd->parsed()) {
            return dispatch(opt, [&](const auto& a) { return adj_one(a, opt); });
        }
        if (count_cmd->parsed()) {
            return dispatch(opt, [&](const auto& a) { return count_one(a, opt); });
        }
        return run_sweep(opt, sizes_text, out_path);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const SingularMinor& e) {
        std::cerr << "error: " << e.what();
        if (!opt.permute) {
            std::cerr << "; a row permutation may avoid this (try --permute)";
        }
        std::cerr << "\n";
        return 3;
    } catch (const StructurallySingular& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
