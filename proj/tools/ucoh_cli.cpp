#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ucoh/circuit.hpp"
#include "ucoh/errors.hpp"
#include "ucoh/fock.hpp"
#include "ucoh/json_io.hpp"
#include "ucoh/representation.hpp"
#include "ucoh/verify.hpp"

namespace {

using namespace ucoh;

enum ExitCode { kOk = 0, kVerifyFailed = 1, kInputError = 2 };

struct Globals {
    double tol = 1e-9;
    std::uint64_t seed = 42;
    std::string format = "json";
    bool text() const { return format == "text"; }
};

std::string complex_text(cplx z) {
    std::ostringstream os;
    os << std::setprecision(17) << z.real() << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
    return os.str();
}

void print_matrix(std::ostream& os, const char* label, const ComplexMatrix& m) {
    os << label << " =\n" << std::setprecision(12) << m << "\n";
}

void print_state(const UltracoherentState& x, const Globals& g) {
    if (!g.text()) {
        std::cout << state_to_json(x).dump(2) << "\n";
        return;
    }
    print_matrix(std::cout, "Z", x.Z());
    print_matrix(std::cout, "f", x.f);
    std::cout << "log_amp = " << complex_text(x.log_amp.log()) << "\n";
}

void print_element(const SymplecticElement& r, const Globals& g) {
    if (!g.text()) {
        std::cout << symplectic_to_json(r).dump(2) << "\n";
        return;
    }
    print_matrix(std::cout, "U", r.U());
    print_matrix(std::cout, "V", r.V());
}

std::string read_text(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int cmd_overlap(const Globals& g, const std::string& a_path, const std::string& b_path, bool oracle,
                std::optional<int> cutoff) {
    const auto x = state_from_json(read_json_file(a_path));
    const auto y = state_from_json(read_json_file(b_path));
    const cplx lo = log_overlap(x, y);
    const cplx ov = std::exp(lo);
    json out{{"overlap", complex_to_json(ov)}, {"log_overlap", complex_to_json(lo)}};
    int code = kOk;
    if (oracle) {
        int n = cutoff.value_or(-1);
        if (n < 0) {
            n = std::max(choose_cutoff(x, 1e-8), choose_cutoff(y, 1e-8));
            while (n < 170 && std::sqrt(tail_bound(x, n) * tail_bound(y, n)) > 1e-8 * std::abs(ov)) ++n;
        }
        const cplx ref = inner(represent_state(x, n), represent_state(y, n));
        const double rel = std::abs(ref - ov) / std::abs(ov);
        const bool agrees = rel <= 1e-6;
        out["oracle"] = {{"cutoff", n},
                         {"value", complex_to_json(ref)},
                         {"relative_error", rel},
                         {"tail_bound_a", tail_bound(x, n)},
                         {"tail_bound_b", tail_bound(y, n)},
                         {"agrees", agrees}};
        if (!agrees) code = kVerifyFailed;
    }
    if (!g.text()) {
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "overlap = " << complex_text(ov) << "\n";
        if (oracle)
            std::cout << "oracle (cutoff " << out["oracle"]["cutoff"] << ") = "
                      << complex_text(complex_from_json(out["oracle"]["value"])) << ", relative error "
                      << out["oracle"]["relative_error"].get<double>() << "\n";
    }
    return code;
}

int cmd_verify(const Globals& g, const std::string& suite, std::optional<int> trials, bool tol_given) {
    VerifyOptions opts;
    opts.seed = g.seed;
    opts.trials = trials;
    if (tol_given) opts.tol = g.tol;
    const auto results = run_suite(suite, opts);
    bool ok = true;
    json arr = json::array();
    for (const auto& r : results) {
        ok = ok && r.passed;
        arr.push_back({{"suite", r.suite},
                       {"check", r.name},
                       {"passed", r.passed},
                       {"worst", r.worst},
                       {"threshold", r.threshold},
                       {"trials", r.trials},
                       {"detail", r.detail}});
    }
    if (!g.text()) {
        std::cout << json{{"seed", g.seed}, {"passed", ok}, {"checks", arr}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS " : "FAIL ") << std::left << std::setw(15) << r.suite << std::setw(42)
                      << r.name << " worst " << std::scientific << std::setprecision(3) << r.worst << " <= "
                      << r.threshold << std::defaultfloat << "  (" << r.trials << " trials)";
            if (!r.detail.empty()) std::cout << "  " << r.detail;
            std::cout << "\n";
        }
        std::cout << (ok ? "all checks passed" : "some checks FAILED") << "\n";
    }
    return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ultracoherent-state calculus: symplectic group, Siegel disc, overlaps, Fock-space oracle"};
    app.require_subcommand(1);
    app.fallthrough();

    Globals g;
    app.add_option("--tol", g.tol, "Tolerance for validation and checks")->capture_default_str();
    app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
    app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "text"}))->capture_default_str();

    std::string state_a, state_b;
    bool oracle = false;
    std::optional<int> cutoff;
    auto* ov = app.add_subcommand("overlap", "Closed-form overlap (x|y), optionally checked in truncated Fock space");
    ov->add_option("--state-a", state_a, "Bra state JSON")->required();
    ov->add_option("--state-b", state_b, "Ket state JSON")->required();
    ov->add_flag("--oracle", oracle, "Also evaluate the truncated-Fock inner product");
    ov->add_option("--cutoff", cutoff, "Oracle cutoff (default: chosen from the tail bound)");

    std::string symp_path, state_path;
    auto* ap = app.add_subcommand("apply", "Apply T(R) to a state");
    ap->add_option("--symplectic", symp_path, "Symplectic element JSON")->required();
    ap->add_option("--state", state_path, "State JSON")->required();

    std::string a_path, b_path;
    auto* co = app.add_subcommand("compose", "Product R2 R1 (R1 = --a acts first) and the multiplier chi(R2, R1)");
    co->add_option("--a", a_path, "R1 JSON")->required();
    co->add_option("--b", b_path, "R2 JSON")->required();

    std::string circuit_path;
    int dim = 0;
    bool normal_form = false;
    auto* rn = app.add_subcommand("run", "Run a gate circuit on the vacuum");
    rn->add_option("--circuit", circuit_path, "Circuit text file")->required();
    rn->add_option("--dim", dim, "Number of modes")->required()->check(CLI::PositiveNumber);
    rn->add_flag("--normal-form", normal_form, "Also print h, R and the accumulated phase");

    std::string suite = "all";
    std::optional<int> trials;
    auto* ve = app.add_subcommand("verify", "Run seeded property checks");
    ve->add_option("--suite", suite, "Suite")
        ->check(CLI::IsMember({"all", "symplectic", "siegel", "overlap", "representation", "oracle", "dsl"}))
        ->capture_default_str();
    ve->add_option("--trials", trials, "Trials per check (default: per-check counts)")->check(CLI::PositiveNumber);

    std::string matrix_path;
    auto* tk = app.add_subcommand("takagi", "Takagi factorization A = F diag(alphas) F^T");
    tk->add_option("--matrix", matrix_path, "Complex symmetric matrix JSON")->required();

    std::string spectrum_path;
    double t = 0.0;
    auto* demo = app.add_subcommand("demo", "Demonstrations");
    demo->require_subcommand(1);
    auto* ff = demo->add_subcommand("free-field", "R1 exp(-i diag(m) t) R1^{-1} from its closed form");
    ff->add_option("--symplectic", symp_path, "R1 JSON")->required();
    ff->add_option("--spectrum", spectrum_path, "Nonnegative spectrum m")->required();
    ff->add_option("--t", t, "Time")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*ov) return cmd_overlap(g, state_a, state_b, oracle, cutoff);
        if (*ap) {
            const auto r = symplectic_from_json(read_json_file(symp_path), g.tol);
            print_state(act(r, state_from_json(read_json_file(state_path))), g);
            return kOk;
        }
        if (*co) {
            const auto r1 = symplectic_from_json(read_json_file(a_path), g.tol);
            const auto r2 = symplectic_from_json(read_json_file(b_path), g.tol);
            const auto r3 = compose(r2, r1, g.tol);
            const Multiplier chi = multiplier(r2, r1);
            if (g.text()) {
                print_element(r3, g);
                std::cout << "multiplier = " << complex_text(chi.value) << "\n";
            } else {
                std::cout << json{{"product", symplectic_to_json(r3)}, {"multiplier", complex_to_json(chi.value)}}.dump(2)
                          << "\n";
            }
            return kOk;
        }
        if (*rn) {
            const auto gates = parse(read_text(circuit_path), dim);
            const auto base = std::filesystem::path(circuit_path).parent_path();
            const auto c = compile(gates, dim, base);
            const auto x = run(c);
            if (normal_form && !g.text()) {
                std::cout << json{{"state", state_to_json(x)},
                                  {"normal_form",
                                   {{"h", vector_to_json(c.h)},
                                    {"R", symplectic_to_json(c.R)},
                                    {"log_phase", json::array({c.log_phase.re, c.log_phase.im})}}}}
                                 .dump(2)
                          << "\n";
            } else {
                print_state(x, g);
                if (normal_form) {
                    print_matrix(std::cout, "h", c.h);
                    print_element(c.R, g);
                    std::cout << "log_phase = " << complex_text(c.log_phase.log()) << "\n";
                }
            }
            return kOk;
        }
        if (*ve) return cmd_verify(g, suite, trials, app.get_option("--tol")->count() > 0);
        if (*tk) {
            const TakagiFactors f = takagi(matrix_from_json(read_json_file(matrix_path)), g.tol);
            if (g.text()) {
                print_matrix(std::cout, "F", f.F);
                print_matrix(std::cout, "alphas", f.alphas.cast<cplx>());
            } else {
                std::cout << takagi_to_json(f).dump(2) << "\n";
            }
            return kOk;
        }
        if (*ff) {
            const auto r1 = symplectic_from_json(read_json_file(symp_path), g.tol);
            const RealVector m = spectrum_from_json(read_json_file(spectrum_path));
            print_element(conjugated_free_field(r1, m, t, g.tol), g);
            return kOk;
        }
    } catch (const InternalInconsistency& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}
