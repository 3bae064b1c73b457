#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "heis/analysis.hpp"
#include "heis/flow.hpp"
#include "heis/selftest.hpp"
#include "heis/sweep.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;

std::optional<nlohmann::json> load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        return std::nullopt;
    }
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& ex) {
        std::cerr << "error: " << path << ": " << ex.what() << "\n";
        return std::nullopt;
    }
}

int run_analyze(const std::string& spec_path, const std::string& out_path) {
    const auto doc = load_json(spec_path);
    if (!doc) return kExitParse;
    try {
        const heis::ProblemSpec spec = heis::problem_spec_from_json(*doc);
        if (!spec.has_homomorphism) {
            std::cerr << "error: analyze requires a homomorphism descriptor\n";
            return kExitValidation;
        }
        const heis::Report report = heis::analyze(spec);
        heis::print_report(std::cout, report);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return kExitValidation;
            }
            out << heis::to_json(report).dump(2) << "\n";
        }
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitValidation;
    }
}

int run_flow(const std::string& spec_path, double t, const std::string& point_arg,
             int steps_flag, bool steps_given) {
    const auto doc = load_json(spec_path);
    if (!doc) return kExitParse;
    try {
        const heis::ProblemSpec spec = heis::problem_spec_from_json(*doc);
        heis::GroupElement g;
        {
            std::istringstream in(point_arg);
            char c1 = 0, c2 = 0;
            if (!(in >> g.x >> c1 >> g.y >> c2 >> g.z) || c1 != ',' || c2 != ',' ||
                !(in >> std::ws).eof())
                throw std::invalid_argument("--point expects x,y,z");
        }
        if (!g.is_finite() || !std::isfinite(t))
            throw std::invalid_argument("point and time must be finite");
        const int steps = steps_given ? steps_flag : spec.options.steps;
        if (steps < 1) throw std::invalid_argument("steps must be >= 1");

        const heis::FlowSample closed{t, heis::flow(spec.derivation, t, g)};
        const heis::FlowSample stepped{t, heis::rk4_flow(spec.derivation, t, g, steps)};
        const double diff =
            (closed.point.vec() - stepped.point.vec()).cwiseAbs().maxCoeff();

        std::cout << std::setprecision(6);
        std::cout << "t = " << t << ", start = (" << g.x << ", " << g.y << ", " << g.z << ")\n";
        std::cout << "closed form: (" << closed.point.x << ", " << closed.point.y << ", "
                  << closed.point.z << ")\n";
        std::cout << "rk4 (" << steps << " steps): (" << stepped.point.x << ", "
                  << stepped.point.y << ", " << stepped.point.z << ")\n";
        std::cout << "max componentwise difference: " << std::setprecision(3)
                  << std::scientific << diff << "\n";
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitValidation;
    }
}

int run_sweep(const std::string& spec_path, const std::string& out_path) {
    const auto doc = load_json(spec_path);
    if (!doc) return kExitParse;
    try {
        const heis::SweepSpec spec = heis::sweep_spec_from_json(*doc);
        const heis::SweepResult result = heis::run_sweep(spec);
        if (!out_path.empty()) {
            std::ofstream out(out_path);
            if (!out) {
                std::cerr << "error: cannot write " << out_path << "\n";
                return kExitValidation;
            }
            heis::write_sweep_csv(out, spec, result);
            heis::print_sweep_summary(std::cout, result);
        } else {
            heis::write_sweep_csv(std::cout, spec, result);
            heis::print_sweep_summary(std::cerr, result);
        }
        return 0;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitValidation;
    }
}

heis::GroupElement broken_product(const heis::GroupElement& g, const heis::GroupElement& h) {
    // Deliberately wrong twist sign; reachable only through the hidden flag.
    return {g.x + h.x - g.y * h.z, g.y + h.y, g.z + h.z};
}

int run_selftest(std::uint64_t seed, bool inject_fault) {
    heis::SelftestOptions opts;
    opts.seed = seed;
    if (inject_fault) opts.product = &broken_product;
    const heis::SelftestResult result = heis::run_selftest(opts);
    for (const std::string& line : result.lines) std::cout << line << "\n";
    std::cout << result.suites_passed << " passed, " << result.suites_failed << " failed\n";
    return result.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"observability of linear pairs on the 3-dimensional Heisenberg group"};
    app.require_subcommand(1);

    std::string spec_path, out_path, point_arg;
    double t = 0.0;
    int steps = 0;
    std::uint64_t seed = 0;
    bool inject_fault = false;

    CLI::App* analyze = app.add_subcommand("analyze", "full observability analysis of a spec");
    analyze->add_option("spec", spec_path, "problem spec (JSON)")->required();
    analyze->add_option("--out", out_path, "write the machine-readable report here");

    CLI::App* flow = app.add_subcommand("flow", "evaluate the flow by closed form and RK4");
    flow->add_option("spec", spec_path, "problem spec (JSON)")->required();
    flow->add_option("--t", t, "time")->required();
    flow->add_option("--point", point_arg, "initial point x,y,z")->required();
    CLI::Option* steps_opt =
        flow->add_option("--steps", steps, "RK4 step count (default: options.steps)");

    CLI::App* sweep = app.add_subcommand("sweep", "grid sweep with CSV output");
    sweep->add_option("spec", spec_path, "sweep spec (JSON)")->required();
    sweep->add_option("--out", out_path, "write the CSV table here");

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in invariant suites");
    selftest->add_option("--seed", seed, "RNG seed (default 0)");
    selftest->add_flag("--inject-fault", inject_fault)->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (*analyze) return run_analyze(spec_path, out_path);
    if (*flow) return run_flow(spec_path, t, point_arg, steps, steps_opt->count() > 0);
    if (*sweep) return run_sweep(spec_path, out_path);
    if (*selftest) return run_selftest(seed, inject_fault);
    return 0;
}
