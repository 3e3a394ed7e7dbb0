// Command line front end: exact determinants (condensation, Bareiss,
// Leibniz), mechanized verification of the Desnanot-Jacobi identity, chain
// maps on pairings, class enumeration, and a method benchmark.
//
// Exit codes: 0 success, 1 verification failure, 2 bad input or guard
// violation, 3 domain error (inverse off its image, involution on a good
// member).

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "dodgson/bijection.hpp"
#include "dodgson/det.hpp"
#include "dodgson/gen.hpp"
#include "dodgson/json_io.hpp"
#include "dodgson/verify.hpp"

namespace {

using namespace dodgson;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::ofstream out(path);
    if (!out) throw ParseError("cannot open '" + path + "' for writing");
    out << content;
}

std::string chomp(std::string s) {
    while (!s.empty() && s.back() == '\n') s.pop_back();
    return s;
}

std::string weight_str(const FormalWeight& w) {
    return (w.sign < 0 ? "-" : "+") + w.cells.str();
}

std::string layer_str(const Permutation& p) {
    std::string out;
    for (const auto& [man, woman] : p.pairs()) {
        if (!out.empty()) out += ' ';
        out += std::to_string(man) + ":" + std::to_string(woman);
    }
    return out.empty() ? "-" : out;
}

struct DetArgs {
    std::string matrix_path;
    std::string method = "condensation";
    std::string trace_path;
    int retries = 10;
    std::uint64_t seed = 0;
    int threads = 0;
};

int run_det(const DetArgs& args) {
    Matrix m = parse_matrix(read_input(args.matrix_path));
    DetMethod method = method_from_name(args.method);
    if (!args.trace_path.empty() && method != DetMethod::Condensation)
        throw ParseError("--trace requires --method condensation");
    if (!m.square()) throw DimensionError("determinant requires a square matrix");

    Scalar value;
    switch (method) {
        case DetMethod::Condensation: {
            CondensationConfig cfg;
            cfg.max_retries = args.retries;
            cfg.seed = args.seed;
            cfg.threads = args.threads;
            cfg.record_layers = !args.trace_path.empty();
            CondensationResult result = condensation_det(m, cfg);
            value = result.value;
            if (!args.trace_path.empty())
                write_output(args.trace_path,
                             condensation_trace_to_json(result.trace, result.value));
            break;
        }
        case DetMethod::Bareiss:
            value = bareiss_det(m, args.threads);
            break;
        case DetMethod::Leibniz:
            value = leibniz_det(m);
            break;
    }
    std::cout << value.str() << "\n";
    return 0;
}

struct VerifyArgs {
    int n = 0;
    bool formal = false;
    int random_trials = -1;
    long bound = 9;
    std::uint64_t seed = 42;
    int threads = 0;
};

int run_verify(const VerifyArgs& args) {
    if (args.formal == (args.random_trials >= 0))
        throw ParseError("choose exactly one of --formal and --random");

    VerifyOptions opts;
    opts.threads = args.threads;

    if (args.formal) {
        FormalReport r = verify_identity_formal(args.n, opts);
        std::cout << "n=" << r.n << " |A|=" << r.count_a << " |B|=" << r.count_b
                  << " |C|=" << r.count_c << " bad=" << r.bad_b << "+" << r.bad_c
                  << " lhs_terms=" << r.lhs_terms << " rhs_terms=" << r.rhs_terms << "\n"
                  << (r.pass ? "PASS" : "FAIL") << "\n";
        return r.pass ? 0 : 1;
    }

    if (args.random_trials < 1) throw ParseError("--random needs at least one trial");
    if (args.bound < 1) throw ParseError("--bound must be positive");
    bool all_pass = true;
    for (int t = 0; t < args.random_trials; ++t) {
        IntMatrix m = gen_matrix(MatrixKind::Random, args.n, args.bound,
                                 args.seed + static_cast<std::uint64_t>(t));
        NumericReport r = verify_identity_numeric(to_scalar_matrix(m), opts);
        if (!r.pass) {
            all_pass = false;
            std::cerr << "trial " << t << ": lhs=" << r.lhs.str() << " rhs=" << r.rhs.str()
                      << "\n";
        }
    }
    std::cout << "n=" << args.n << " trials=" << args.random_trials << " bound=" << args.bound
              << " seed=" << args.seed << "\n"
              << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass ? 0 : 1;
}

struct MapArgs {
    std::string op;
    std::string input_path = "-";
};

int run_map(const MapArgs& args) {
    Pairing input = pairing_from_json_or_trace(read_input(args.input_path));
    MapResult result;
    if (args.op == "T")
        result = map_T(input);
    else if (args.op == "Tinv")
        result = map_T_inverse(input);
    else if (args.op == "S")
        result = map_S(input);
    else
        throw ParseError("unknown op '" + args.op + "' (expected T, Tinv, or S)");

    std::cout << trace_to_json(input, result.chain, result.pairing, pairing_weight(input),
                               pairing_weight(result.pairing));
    return 0;
}

struct EnumArgs {
    int n = 0;
    std::string cls;
    std::string format = "table";
    bool only_bad = false;
};

int run_enumerate(const EnumArgs& args) {
    PairingClass cls = class_from_letter(args.cls);
    const int bound = default_formal_bound();
    if (args.n > bound)
        throw SizeGuardError("n = " + std::to_string(args.n) +
                             " exceeds the enumeration bound " + std::to_string(bound));
    if (args.format != "table" && args.format != "json")
        throw ParseError("--format must be table or json");
    if (args.only_bad && cls == PairingClass::A)
        throw ParseError("--only-bad needs class B or C; class A members are not classified");

    ClassEnumerator e(args.n, cls);
    const bool classified = cls != PairingClass::A;

    if (args.format == "json") {
        for (std::uint64_t i = 0; i < e.size(); ++i) {
            Pairing p = e.at(i);
            bool good = classified && classify(p).good;
            if (args.only_bad && good) continue;
            std::cout << "{\"index\":" << i << ",\"pairing\":" << chomp(pairing_to_json(p))
                      << ",\"weight\":" << chomp(weight_to_json(pairing_weight(p)));
            if (classified) std::cout << ",\"tag\":\"" << (good ? "good" : "bad") << "\"";
            std::cout << "}\n";
        }
        return 0;
    }

    std::vector<std::array<std::string, 5>> rows;
    for (std::uint64_t i = 0; i < e.size(); ++i) {
        Pairing p = e.at(i);
        bool good = classified && classify(p).good;
        if (args.only_bad && good) continue;
        rows.push_back({std::to_string(i), layer_str(p.marriages), layer_str(p.affairs),
                        weight_str(pairing_weight(p)),
                        classified ? (good ? "good" : "bad") : "-"});
    }
    std::array<std::string, 5> head = {"index", "marriages", "affairs", "weight", "tag"};
    std::array<std::size_t, 5> width{};
    for (std::size_t c = 0; c < 5; ++c) width[c] = head[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < 5; ++c) width[c] = std::max(width[c], row[c].size());
    auto print_row = [&](const std::array<std::string, 5>& row) {
        for (std::size_t c = 0; c < 5; ++c) {
            std::cout << row[c];
            if (c + 1 < 5) std::cout << std::string(width[c] - row[c].size() + 2, ' ');
        }
        std::cout << "\n";
    };
    print_row(head);
    for (const auto& row : rows) print_row(row);
    return 0;
}

struct BenchArgs {
    std::vector<int> sizes;
    std::vector<std::string> methods;
    int entry_bits = 16;
    std::uint64_t seed = 42;
    std::string kind = "random";
    int threads = 0;
    std::string out_path = "-";
};

int run_bench(const BenchArgs& args) {
    MatrixKind kind = kind_from_name(args.kind);
    if (args.entry_bits < 1) throw ParseError("--entry-bits must be positive");
    std::vector<DetMethod> methods;
    methods.reserve(args.methods.size());
    for (const auto& name : args.methods) methods.push_back(method_from_name(name));
    // Validate every (n, method) combination before emitting any row, so a
    // guard violation never leaves a partial CSV behind.
    for (int n : args.sizes) {
        if (n < 1) throw DimensionError("bench sizes must be >= 1");
        for (DetMethod m : methods)
            if (m == DetMethod::Leibniz && n > 9)
                throw SizeGuardError("leibniz guard: n = " + std::to_string(n) + " exceeds 9");
    }

    std::ostringstream csv;
    csv << "n,method,wall_ms,repairs,fallbacks,digest\n";
    for (int n : args.sizes) {
        const std::uint64_t seed = args.seed + static_cast<std::uint64_t>(n);
        IntMatrix m = (kind == MatrixKind::Random)
                          ? gen_matrix_bits(n, args.entry_bits, seed)
                          : gen_matrix(kind, n, (1L << std::min(args.entry_bits, 30)), seed);
        for (DetMethod method : methods) {
            std::size_t repairs = 0, fallbacks = 0;
            auto start = std::chrono::steady_clock::now();
            Scalar value;
            switch (method) {
                case DetMethod::Condensation: {
                    CondensationConfig cfg;
                    cfg.seed = seed;
                    cfg.threads = args.threads;
                    cfg.record_layers = false;
                    CondensationResult result = condensation_det(m, cfg);
                    value = result.value;
                    repairs = result.trace.repairs.size();
                    fallbacks = result.trace.fallback_used ? 1 : 0;
                    break;
                }
                case DetMethod::Bareiss:
                    value = Scalar(bareiss_det(m, args.threads));
                    break;
                case DetMethod::Leibniz:
                    value = Scalar(leibniz_det(m));
                    break;
            }
            std::chrono::duration<double, std::milli> wall =
                std::chrono::steady_clock::now() - start;
            char wall_text[32];
            std::snprintf(wall_text, sizeof wall_text, "%.3f", wall.count());
            csv << n << "," << method_name(method) << "," << wall_text << "," << repairs << ","
                << fallbacks << "," << value.str() << "\n";
        }
    }
    write_output(args.out_path, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact determinants via Dodgson condensation, with a mechanized bijective"
                 " verification of the Desnanot-Jacobi identity"};
    app.require_subcommand(1);
    int rc = 0;

    DetArgs det_args;
    auto* det_cmd = app.add_subcommand("det", "determinant of an exact matrix");
    det_cmd->add_option("matrix", det_args.matrix_path, "matrix file, or - for stdin")
        ->required();
    det_cmd->add_option("--method", det_args.method, "condensation | bareiss | leibniz");
    det_cmd->add_option("--retries", det_args.retries, "condensation repair retries");
    det_cmd->add_option("--seed", det_args.seed, "repair generator seed");
    det_cmd->add_option("--threads", det_args.threads, "0 = all available, 1 = serial");
    det_cmd->add_option("--trace", det_args.trace_path, "write condensation trace JSON here");
    det_cmd->callback([&] { rc = run_det(det_args); });

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "check the determinant identity");
    verify_cmd->add_option("--n", verify_args.n, "matrix order")->required();
    verify_cmd->add_flag("--formal", verify_args.formal, "exhaustive symbolic verification");
    verify_cmd->add_option("--random", verify_args.random_trials,
                           "numeric verification on this many random matrices");
    verify_cmd->add_option("--bound", verify_args.bound, "entry bound for --random");
    verify_cmd->add_option("--seed", verify_args.seed, "matrix generator seed");
    verify_cmd->add_option("--threads", verify_args.threads, "0 = all available, 1 = serial");
    verify_cmd->callback([&] { rc = run_verify(verify_args); });

    MapArgs map_args;
    auto* map_cmd = app.add_subcommand("map", "apply a chain map to a pairing");
    map_cmd->add_option("--op", map_args.op, "T | Tinv | S")->required();
    map_cmd->add_option("--input", map_args.input_path,
                        "pairing JSON (or a trace whose output to reuse); - for stdin");
    map_cmd->callback([&] { rc = run_map(map_args); });

    EnumArgs enum_args;
    auto* enum_cmd = app.add_subcommand("enumerate", "list a pairing class");
    enum_cmd->add_option("--n", enum_args.n, "matrix order")->required();
    enum_cmd->add_option("--class", enum_args.cls, "A | B | C")->required();
    enum_cmd->add_option("--format", enum_args.format, "table | json");
    enum_cmd->add_flag("--only-bad", enum_args.only_bad, "keep only bad members (B/C)");
    enum_cmd->callback([&] { rc = run_enumerate(enum_args); });

    BenchArgs bench_args;
    auto* bench_cmd = app.add_subcommand("bench", "compare determinant methods, CSV output");
    bench_cmd->add_option("--sizes", bench_args.sizes, "matrix orders")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--methods", bench_args.methods, "determinant methods")
        ->required()
        ->delimiter(',');
    bench_cmd->add_option("--entry-bits", bench_args.entry_bits, "entry size in bits");
    bench_cmd->add_option("--seed", bench_args.seed, "matrix generator seed");
    bench_cmd->add_option("--kind", bench_args.kind, "random | vandermonde | singular-interior");
    bench_cmd->add_option("--threads", bench_args.threads, "0 = all available, 1 = serial");
    bench_cmd->add_option("--out", bench_args.out_path, "CSV path, - for stdout");
    bench_cmd->callback([&] { rc = run_bench(bench_args); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const dodgson::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const dodgson::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
