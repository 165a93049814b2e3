#include "cli.hpp"

#include "thag/closed_forms.hpp"
#include "thag/json_io.hpp"
#include "thag/lattice.hpp"
#include "thag/oracle.hpp"
#include "thag/positivity.hpp"
#include "thag/render.hpp"
#include "thag/thagomizer.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace thag {

namespace {

// Errors of usage rather than mathematics; mapped to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void require_usage(bool cond, const std::string& msg) {
    if (!cond) throw UsageError(msg);
}

// Guard rails for the recursion oracles and explicit lattices; the
// THAG_MAX_N environment variable widens them (never narrows).
struct Guards {
    int thag = 10;
    int cycle = 14;
    int flats = 8;
};

Guards read_guards() {
    Guards g;
    if (const char* e = std::getenv("THAG_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(e, &end, 10);
        if (end != e && *end == '\0' && v > 0) {
            int w = (int)std::min<long>(v, 64);
            g.thag = std::max(g.thag, w);
            g.cycle = std::max(g.cycle, w + 4);
            g.flats = std::max(g.flats, w);
        }
    }
    return g;
}

std::string render_graded_out(const GradedBiSchur& g, const std::string& fmt) {
    if (fmt == "text") return to_text(g) + "\n";
    if (fmt == "latex") return to_latex(g) + "\n";
    return graded_to_json(g).dump(2) + "\n";
}

std::string render_poly_out(const IntPoly& p, const std::string& fmt) {
    if (fmt == "text") return to_text(p) + "\n";
    if (fmt == "latex") return to_latex(p) + "\n";
    return intpoly_to_json(p).dump(2) + "\n";
}

GradedBiSchur compute_family(const std::string& family, int n, bool oracle, const Guards& g) {
    if (family == "p-thag") {
        require_usage(n >= 0, "p-thag: n must be >= 0");
        return oracle ? p_thagomizer_oracle(n, g.thag) : p_thagomizer(n);
    }
    if (family == "q-thag") {
        require_usage(n >= 0, "q-thag: n must be >= 0");
        return oracle ? q_thagomizer_oracle(n, g.thag) : q_thagomizer(n);
    }
    if (family == "z-thag") {
        require_usage(n >= 0, "z-thag: n must be >= 0");
        if (oracle)
            return z_thagomizer(n, [&](int m) { return p_thagomizer_oracle(m, g.thag); });
        return z_thagomizer(n);
    }
    if (family == "char-thag") {
        require_usage(n >= 0, "char-thag: n must be >= 0");
        require_usage(!oracle, "char-thag has no recursion-oracle path");
        return char_poly_thagomizer(n);
    }
    if (family == "p-cycle") {
        if (oracle) {
            require_usage(n >= 2, "p-cycle --oracle: k must be >= 2");
            return p_cycle_oracle(n, g.cycle);
        }
        require_usage(n >= 0, "p-cycle: k must be >= 0");
        return c_cycle(n);
    }
    if (family == "p-type-a") {
        require_usage(n >= 0, "p-type-a: n must be >= 0");
        require_usage(!oracle, "p-type-a has no recursion-oracle path");
        return p_type_a(n);
    }
    throw UsageError("unknown family '" + family +
                     "' (expected p-thag, q-thag, z-thag, char-thag, p-cycle, p-type-a)");
}

// First coefficient where the two sides differ, for mismatch reports.
std::string diff_graded(const GradedBiSchur& a, const GradedBiSchur& b) {
    const int top = std::max(a.degree(), b.degree());
    for (int t = 0; t <= top; ++t) {
        const BiSchurPoly& pa = a.coefficient(t);
        const BiSchurPoly& pb = b.coefficient(t);
        if (pa == pb) continue;
        BiSchurPoly d = pa;
        d -= pb;
        const auto& m = d.terms();
        const Bipartition& shape = m.rbegin()->first;
        auto coeff_of = [&](const BiSchurPoly& p) {
            auto it = p.terms().find(shape);
            return it == p.terms().end() ? 0LL : it->second;
        };
        return "t^" + std::to_string(t) + " " + to_string(shape) + ": " +
               std::to_string(coeff_of(pa)) + " vs " + std::to_string(coeff_of(pb));
    }
    return "(equal)";
}

std::string diff_poly(const IntPoly& a, const IntPoly& b) {
    return to_string(a) + " vs " + to_string(b);
}

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::string detail; // set on failure
};

// The verification battery behind `verify all`: every closed form against its
// independent recursion, the brute-force lattice, and the structural
// invariants, ranges scaled by --max-n.
std::vector<SuiteResult> run_verify_all(int N, const Guards& g) {
    const int A = std::min(N, g.thag);      // thagomizer families
    const int B = std::min(N + 4, 12);      // cycle families
    const int L = std::min(N, 5);           // explicit lattices
    const int C = std::min(N, 8);           // characteristic polynomial
    const int D = std::min(N, 6);           // type-A comparison
    const int S = std::max(2, std::min(N + 1, 9)); // series order

    using Suite = std::function<std::optional<std::string>()>;
    std::vector<std::pair<std::string, Suite>> suites;

    suites.emplace_back("p-closed-vs-recursion", [&]() -> std::optional<std::string> {
        for (int n = 0; n <= A; ++n) {
            GradedBiSchur c = p_thagomizer(n), o = p_thagomizer_oracle(n, g.thag);
            if (!(c == o)) return "n=" + std::to_string(n) + " " + diff_graded(c, o);
        }
        return std::nullopt;
    });
    suites.emplace_back("cycle-closed-vs-recursion", [&]() -> std::optional<std::string> {
        for (int k = 2; k <= B; ++k) {
            GradedBiSchur c = c_cycle(k), o = p_cycle_oracle(k, g.cycle);
            if (!(c == o)) return "k=" + std::to_string(k) + " " + diff_graded(c, o);
        }
        return std::nullopt;
    });
    suites.emplace_back("q-closed-vs-convolution-vs-recursion", [&]() -> std::optional<std::string> {
        for (int n = 0; n <= A; ++n) {
            GradedBiSchur c = q_thagomizer(n);
            GradedBiSchur f = q_from_p(n);
            GradedBiSchur o = q_thagomizer_oracle(n, g.thag);
            if (!(c == f)) return "n=" + std::to_string(n) + " closed vs convolution " + diff_graded(c, f);
            if (!(c == o)) return "n=" + std::to_string(n) + " closed vs recursion " + diff_graded(c, o);
        }
        return std::nullopt;
    });
    suites.emplace_back("lattice-dimensions", [&]() -> std::optional<std::string> {
        for (int n = 0; n <= L; ++n) {
            FlatLattice lat = flats_of_thagomizer(n, g.flats);
            auto [P, Z] = kl_and_z(lat);
            IntPoly Q = inverse_kl(lat);
            IntPoly chi = characteristic_polynomial(lat);
            const std::string tag = "n=" + std::to_string(n) + " ";
            if (IntPoly d = dimension_poly(p_thagomizer(n)); d != P)
                return tag + "P " + diff_poly(d, P);
            if (IntPoly d = dimension_poly(z_thagomizer(n)); d != Z)
                return tag + "Z " + diff_poly(d, Z);
            if (IntPoly d = dimension_poly(q_thagomizer(n)); d != Q)
                return tag + "Q " + diff_poly(d, Q);
            if (IntPoly d = dimension_poly(char_poly_thagomizer(n)); d != chi)
                return tag + "chi " + diff_poly(d, chi);
        }
        return std::nullopt;
    });
    suites.emplace_back("multiplicity-free", [&]() -> std::optional<std::string> {
        for (int n = 0; n <= A; ++n) {
            if (auto w = multiplicity_witness(p_thagomizer(n)))
                return "P n=" + std::to_string(n) + " coeff " + std::to_string(w->coeff) +
                       " at t^" + std::to_string(w->t_degree) + " " + to_string(w->shape);
            if (auto w = multiplicity_witness(q_thagomizer(n)))
                return "Q n=" + std::to_string(n) + " coeff " + std::to_string(w->coeff) +
                       " at t^" + std::to_string(w->t_degree) + " " + to_string(w->shape);
        }
        return std::nullopt;
    });
    suites.emplace_back("palindromic-z", [&]() -> std::optional<std::string> {
        for (int n = 0; n <= A; ++n)
            if (!is_palindromic(z_thagomizer(n), n + 1))
                return "thagomizer n=" + std::to_string(n);
        for (int k = 2; k <= B; ++k)
            if (!is_palindromic(z_cycle(k), k - 1)) return "cycle k=" + std::to_string(k);
        return std::nullopt;
    });
    suites.emplace_back("pieri-alternating-collapse", [&]() -> std::optional<std::string> {
        for (int m = 0; m <= std::min(N, 8); ++m) {
            for (int k = 1; k <= 5; ++k) {
                std::vector<int> parts(k, 2);
                parts.insert(parts.end(), m, 1);
                if (!(pieri_alternating_lhs(m, k) == SchurPoly::term(Partition(parts))))
                    return "m=" + std::to_string(m) + " k=" + std::to_string(k);
            }
        }
        return std::nullopt;
    });
    suites.emplace_back("series-identities", [&]() -> std::optional<std::string> {
        SeriesReport r = verify_series_identities(S);
        std::string bad;
        for (const SeriesCheck& c : r.checks)
            if (!c.pass) bad += (bad.empty() ? "" : ", ") + c.name;
        if (!bad.empty()) return "order " + std::to_string(S) + ": " + bad;
        return std::nullopt;
    });
    suites.emplace_back("characteristic-product-form", [&]() -> std::optional<std::string> {
        for (int n = 0; n <= C; ++n) {
            IntPoly d = dimension_poly(char_poly_thagomizer(n));
            IntPoly expect{-1, 1};
            for (int i = 0; i < n; ++i) expect = expect * IntPoly{-2, 1};
            if (d != expect) return "n=" + std::to_string(n) + " " + diff_poly(d, expect);
            if (n <= std::min(N, 3)) {
                IntPoly chi = characteristic_polynomial(flats_of_thagomizer(n, g.flats));
                if (d != chi)
                    return "n=" + std::to_string(n) + " vs mobius " + diff_poly(d, chi);
            }
        }
        return std::nullopt;
    });
    suites.emplace_back("type-a-dimensions", [&]() -> std::optional<std::string> {
        for (int n = 0; n <= D; ++n) {
            IntPoly a = dimension_poly(p_type_a(n));
            IntPoly b = dimension_poly(p_thagomizer(n));
            if (a != b) return "n=" + std::to_string(n) + " " + diff_poly(a, b);
        }
        return std::nullopt;
    });
    suites.emplace_back("linear-coefficient", [&]() -> std::optional<std::string> {
        for (int n = 2; n <= C; ++n) {
            long long got = dimension_poly(p_thagomizer(n)).coeff(1);
            long long expect = (1LL << n) - n - 1;
            if (got != expect)
                return "n=" + std::to_string(n) + " " + std::to_string(got) + " vs " +
                       std::to_string(expect);
        }
        return std::nullopt;
    });

    std::vector<SuiteResult> results;
    for (auto& [name, fn] : suites) {
        SuiteResult r;
        r.name = name;
        try {
            if (auto detail = fn()) {
                r.pass = false;
                r.detail = *detail;
            }
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = std::string("exception: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

std::string witness_text(const PositivityWitness& w) {
    return "coeff " + std::to_string(w.coeff) + " at t^" + std::to_string(w.t_degree) + " " +
           to_string(w.shape);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact equivariant Kazhdan-Lusztig, Z and characteristic polynomials of "
                 "thagomizer and cycle matroids"};
    app.fallthrough();
    app.require_subcommand(1);

    std::string format = "json";
    bool oracle = false;
    std::string out_path;
    app.add_option("--format", format, "output format (default json)")
        ->check(CLI::IsMember({"json", "text", "latex"}));
    app.add_flag("--oracle", oracle,
                 "compute via the palindromicity recursion instead of the closed form");
    app.add_option("--out", out_path, "write the result to this file instead of stdout");

    int arg_n = 0;
    std::string dims_family;
    const std::vector<std::pair<std::string, std::string>> compute_cmds = {
        {"p-thag", "equivariant Kazhdan-Lusztig polynomial of the thagomizer matroid T_n"},
        {"q-thag", "equivariant inverse Kazhdan-Lusztig polynomial of T_n"},
        {"z-thag", "equivariant Z-polynomial of T_n"},
        {"char-thag", "equivariant characteristic polynomial of T_n"},
        {"p-cycle", "equivariant Kazhdan-Lusztig polynomial of the cycle matroid C_k"},
    };
    for (const auto& [name, desc] : compute_cmds) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->fallthrough();
        c->add_option(name == "p-cycle" ? "k" : "n", arg_n, "matroid index")->required();
    }
    CLI::App* cmd_dims = app.add_subcommand("dims", "dimension specialization of a family");
    cmd_dims->fallthrough();
    cmd_dims->add_option("family", dims_family,
                         "p-thag | q-thag | z-thag | char-thag | p-cycle | p-type-a")
        ->required();
    cmd_dims->add_option("n", arg_n, "matroid index")->required();

    CLI::App* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->fallthrough();
    cmd_verify->require_subcommand(1);
    int verify_max_n = 5;
    CLI::App* cmd_verify_all = cmd_verify->add_subcommand(
        "all", "closed forms against recursion oracles, lattices and invariants");
    cmd_verify_all->fallthrough();
    cmd_verify_all->add_option("--max-n", verify_max_n, "largest thagomizer index (default 5)");
    int series_order = 9;
    CLI::App* cmd_verify_series =
        cmd_verify->add_subcommand("series", "generating-series identities");
    cmd_verify_series->fallthrough();
    cmd_verify_series->add_option("--order", series_order,
                                  "u-adic truncation order, 2..12 (default 9)");

    CLI::App* cmd_ilc = app.add_subcommand("ilc", "induced log-concavity sweep");
    cmd_ilc->fallthrough();
    int ilc_max_n = 6;
    std::string ilc_variant = "p";
    bool ilc_strong = false;
    cmd_ilc->add_option("--max-n", ilc_max_n, "largest index (default 6, at most 10)");
    cmd_ilc->add_option("--variant", ilc_variant, "p or q (default p)")
        ->check(CLI::IsMember({"p", "q"}));
    cmd_ilc->add_flag("--strong", ilc_strong, "sweep all 1 <= i <= j (default: i == j only)");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("thag");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        std::ostringstream help_out, help_err;
        const int rc = app.exit(e, help_out, help_err);
        out << help_out.str();
        err << help_err.str();
        return rc == 0 ? 0 : 2;
    }

    const Guards guards = read_guards();
    std::string payload;
    int code = 0;
    try {
        bool handled = false;
        for (const auto& [name, desc] : compute_cmds) {
            (void)desc;
            if (app.got_subcommand(name)) {
                payload = render_graded_out(compute_family(name, arg_n, oracle, guards), format);
                handled = true;
                break;
            }
        }
        if (!handled && app.got_subcommand("dims")) {
            payload = render_poly_out(
                dimension_poly(compute_family(dims_family, arg_n, oracle, guards)), format);
            handled = true;
        }
        if (!handled && app.got_subcommand("verify")) {
            if (cmd_verify->got_subcommand("all")) {
                require_usage(verify_max_n >= 0, "verify all: --max-n must be >= 0");
                require_usage(verify_max_n <= 64, "verify all: --max-n must be <= 64");
                std::vector<SuiteResult> results = run_verify_all(verify_max_n, guards);
                bool all_pass = true;
                for (const SuiteResult& r : results) all_pass = all_pass && r.pass;
                if (format == "json") {
                    nlohmann::ordered_json j;
                    j["max_n"] = verify_max_n;
                    auto suites = nlohmann::ordered_json::array();
                    for (const SuiteResult& r : results) {
                        nlohmann::ordered_json row;
                        row["suite"] = r.name;
                        row["pass"] = r.pass;
                        if (!r.pass) row["detail"] = r.detail;
                        suites.push_back(std::move(row));
                    }
                    j["suites"] = std::move(suites);
                    j["all_pass"] = all_pass;
                    payload = j.dump(2) + "\n";
                } else {
                    std::ostringstream os;
                    int failed = 0;
                    for (const SuiteResult& r : results) {
                        if (r.pass) {
                            os << "PASS " << r.name << "\n";
                        } else {
                            ++failed;
                            os << "FAIL " << r.name << ": " << r.detail << "\n";
                        }
                    }
                    if (failed == 0)
                        os << "all " << results.size() << " suites passed (max n = "
                           << verify_max_n << ")\n";
                    else
                        os << failed << " of " << results.size() << " suites failed\n";
                    payload = os.str();
                }
                code = all_pass ? 0 : 1;
            } else {
                require_usage(series_order >= 2 && series_order <= 12,
                              "verify series: --order must be in [2, 12]");
                SeriesReport r = verify_series_identities(series_order);
                if (format == "json") {
                    payload = series_report_to_json(r).dump(2) + "\n";
                } else {
                    std::ostringstream os;
                    int passed = 0;
                    for (const SeriesCheck& c : r.checks) {
                        os << (c.pass ? "PASS " : "FAIL ") << c.name << "\n";
                        if (c.pass) ++passed;
                    }
                    os << "order " << r.order << ": " << passed << "/" << r.checks.size()
                       << " checks passed\n";
                    payload = os.str();
                }
                code = r.all_pass() ? 0 : 1;
            }
            handled = true;
        }
        if (!handled && app.got_subcommand("ilc")) {
            require_usage(ilc_max_n >= 0 && ilc_max_n <= 10, "ilc: --max-n must be in [0, 10]");
            IlcVariant variant = ilc_variant == "q" ? IlcVariant::Q : IlcVariant::P;
            IlcReport report = verify_ilc(ilc_max_n, variant, ilc_strong);
            if (format == "json") {
                payload = ilc_report_to_json(report).dump(2) + "\n";
            } else {
                std::ostringstream os;
                for (const IlcEntry& e : report.entries) {
                    if (e.positive) continue;
                    os << "FAIL n=" << e.n << " i=" << e.i << " j=" << e.j << ": "
                       << (e.witness ? witness_text(*e.witness) : std::string("no witness"))
                       << " (" << e.classification << ")\n";
                }
                os << report.entries.size() << " cases (variant " << ilc_variant
                   << (ilc_strong ? ", strong" : ", diagonal") << ", n <= " << ilc_max_n
                   << "): " << report.failures << " failures\n";
                payload = os.str();
            }
            code = report.failures == 0 ? 0 : 1;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "error: cannot open output file '" << out_path << "'\n";
            return 2;
        }
        f << payload;
        if (!f.good()) {
            err << "error: failed writing output file '" << out_path << "'\n";
            return 2;
        }
    } else {
        out << payload;
    }
    return code;
}

} // namespace thag
