// tropcalc: exact calculator for max-plus piecewise-linear functions,
// a symbolic solver for linear ultra-discrete difference equations, and
// the value-distribution experiment runners.
//
// Exit codes: 0 success / verified / Complete family, 1 failed verification,
// 2 parse error, 3 domain error, 4 Open family, 5 PartialKnown family.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "trop/serialize.hpp"

namespace {

using namespace trop;

PLFunction load_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    return function_from_json(doc);
}

std::pair<Rational, Rational> parse_window(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) throw ParseError("window must be LO:HI");
    Rational lo = parse_rational(text.substr(0, colon));
    Rational hi = parse_rational(text.substr(colon + 1));
    if (!(lo < hi)) throw ParseError("window must satisfy LO < HI");
    return {lo, hi};
}

std::vector<Rational> parse_coeffs(const std::vector<std::string>& raw) {
    std::vector<Rational> out;
    for (const auto& s : raw) out.push_back(parse_rational(s));
    return out;
}

int cmd_eval(const std::string& spec, const std::string& at) {
    PLFunction f = load_function(spec);
    std::cout << f.eval(parse_rational(at)).str() << "\n";
    return 0;
}

int cmd_plot(const std::string& spec, const std::string& window, const std::string& step_text) {
    PLFunction f = load_function(spec);
    auto [lo, hi] = parse_window(window);
    Rational step = parse_rational(step_text);
    if (step <= 0) throw ParseError("step must be positive");

    std::vector<Rational> xs;
    for (Rational x = lo; x <= hi; x += step) xs.push_back(x);
    if (xs.empty() || xs.back() != hi) xs.push_back(hi);
    bool bottom = f.is_bottom();
    std::vector<BreakpointEvent> events;
    if (!bottom) {
        for (const Rational& b : f.breakpoints_in(lo, hi)) xs.push_back(b);
        events = f.events_in(lo, hi);
    }
    detail::sort_unique(xs);

    std::size_t next_event = 0;
    for (const Rational& x : xs) {
        while (next_event < events.size() && events[next_event].location <= x) {
            const auto& e = events[next_event];
            if (e.location == x)
                std::cout << "# event x=" << format_rational(e.location)
                          << " omega=" << format_rational(e.omega)
                          << " kind=" << (e.kind == BreakpointEvent::Kind::Root ? "root" : "pole")
                          << " multiplicity=" << format_rational(e.multiplicity) << "\n";
            ++next_event;
        }
        if (bottom) {
            std::cout << format_rational(x) << "\t-inf\t0\t0\n";
        } else {
            std::cout << format_rational(x) << "\t" << f.eval(x).str() << "\t"
                      << format_rational(f.slope_left(x)) << "\t"
                      << format_rational(f.slope_right(x)) << "\n";
        }
    }
    return 0;
}

int family_exit_code(const SolutionFamily& fam) {
    switch (fam.status) {
        case FamilyStatus::Complete:
            return 0;
        case FamilyStatus::Open:
            return 4;
        default:
            return 5;
    }
}

int cmd_solve(const std::vector<std::string>& coeffs, const std::string& rhs) {
    EquationSpec eq;
    eq.coeffs = parse_coeffs(coeffs);
    eq.rhs_const = parse_rational(rhs);
    SolutionFamily fam = solve(eq);
    std::cout << family_to_json(fam).dump(2) << "\n";
    return family_exit_code(fam);
}

int cmd_verify(const std::string& solution, const std::vector<std::string>& coeffs,
               const std::string& rhs, std::size_t grid_points, unsigned long seed,
               const std::string& window) {
    PLFunction f = load_function(solution);
    EquationSpec eq;
    eq.coeffs = parse_coeffs(coeffs);
    eq.rhs_const = parse_rational(rhs);
    long span = 8;
    if (!window.empty()) {
        auto [lo, hi] = parse_window(window);
        Rational widest = abs(lo) > abs(hi) ? abs(lo) : abs(hi);
        span = static_cast<long>(floor_int(widest));
        if (span < 1) span = 1;
    }
    auto grid = verification_grid(grid_points, span, seed);
    Rational residual = residual_max(f, eq, grid);
    json out;
    out["residual"] = format_rational(residual);
    out["pass"] = residual == 0;
    out["grid_points"] = grid.size();
    out["seed"] = seed;
    std::cout << out.dump(2) << "\n";
    return residual == 0 ? 0 : 1;
}

int cmd_nevanlinna(const std::string& spec, const std::string& radii) {
    PLFunction f = load_function(spec);
    auto colon = radii.find(':');
    if (colon == std::string::npos) throw ParseError("radii must be KMIN:KMAX (powers of two)");
    int kmin = 0, kmax = 0;
    try {
        kmin = std::stoi(radii.substr(0, colon));
        kmax = std::stoi(radii.substr(colon + 1));
    } catch (const std::exception&) {
        throw ParseError("radii must be KMIN:KMAX (powers of two)");
    }
    auto rep = nevanlinna_report(f, geometric_radii(kmin, kmax));
    std::cout << nevanlinna_to_json(rep).dump(2) << "\n";
    return 0;
}

int cmd_roots(const std::string& spec, const std::string& window) {
    PLFunction f = load_function(spec);
    auto [lo, hi] = parse_window(window);
    auto events = f.events_in(lo, hi);
    json out;
    out["window"] = json::array({format_rational(lo), format_rational(hi)});
    std::size_t roots = 0, poles = 0;
    Rational root_mult(0), pole_mult(0);
    for (const auto& e : events) {
        if (e.kind == BreakpointEvent::Kind::Root) {
            ++roots;
            root_mult += e.multiplicity;
        } else {
            ++poles;
            pole_mult += e.multiplicity;
        }
    }
    out["root_count"] = roots;
    out["pole_count"] = poles;
    out["root_multiplicity"] = format_rational(root_mult);
    out["pole_multiplicity"] = format_rational(pole_mult);
    out["entire_on_window"] = poles == 0;
    out["events"] = events_to_json(events);
    std::cout << out.dump(2) << "\n";
    return 0;
}

int cmd_experiment_fermat(const std::vector<std::string>& inputs,
                          const std::vector<std::string>& alphas, const std::string& window,
                          const std::string& cap) {
    std::vector<PLFunction> fs;
    for (const auto& path : inputs) fs.push_back(load_function(path));
    std::vector<Rational> as = parse_coeffs(alphas);
    if (as.empty()) as.assign(fs.size(), Rational(1));
    auto [lo, hi] = parse_window(window);
    auto verdict = fermat_sum_check(fs, as, lo, hi, parse_rational(cap));
    std::cout << fermat_to_json(verdict).dump(2) << "\n";
    return 0;
}

int cmd_experiment_hayman(const std::string& spec, const std::string& alpha,
                          const std::string& shift_by, const std::string& window,
                          const std::string& check) {
    PLFunction f = load_function(spec);
    Rational a = parse_rational(alpha), c = parse_rational(shift_by);
    auto [lo, hi] = parse_window(window);
    if (check == "census") {
        std::cout << census_to_json(hayman_census(f, a, c, lo, hi)).dump(2) << "\n";
        return 0;
    }
    if (check == "linearity") {
        std::cout << linearity_to_json(hayman_linearity_check(f, a, c, lo, hi)).dump(2) << "\n";
        return 0;
    }
    throw ParseError("experiment hayman: --check must be census or linearity");
}

int cmd_experiment_bruck(const std::string& spec, const std::string& value,
                         const std::string& window, const std::string& tails) {
    PLFunction f = load_function(spec);
    auto [lo, hi] = parse_window(window);
    auto [tlo, thi] = parse_window(tails);
    auto rep = bruck_check(f, parse_rational(value), lo, hi, tlo, thi);
    std::cout << bruck_to_json(rep).dump(2) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact max-plus piecewise-linear calculator and difference-equation solver"};
    app.require_subcommand(1);

    std::string spec, at, window = "-8:8", step = "1/4", rhs = "1", radii = "3:13";
    std::string solution, check = "census", value = "0", tails = "20:40", cap = "1024";
    std::vector<std::string> coeffs, inputs, alphas;
    std::size_t grid_points = 64;
    unsigned long seed = 1;

    auto* eval = app.add_subcommand("eval", "evaluate a function spec at a point");
    eval->add_option("spec", spec, "function spec (JSON file)")->required();
    eval->add_option("x", at, "evaluation point, as p/q")->required();

    auto* plot = app.add_subcommand("plot", "emit x/value/slopes rows as TSV");
    plot->add_option("spec", spec)->required();
    plot->add_option("--window", window, "plot window LO:HI");
    plot->add_option("--step", step, "grid step p/q");

    auto* solve_cmd = app.add_subcommand("solve", "solve sum n_j y(x+j) = c symbolically");
    solve_cmd->add_option("coeffs", coeffs, "coefficients n0 n1 [n2 n3]")->required();
    solve_cmd->add_option("--rhs", rhs, "right-hand side constant");

    auto* verify = app.add_subcommand("verify", "check a candidate solution by exact residual");
    verify->add_option("solution", solution, "solution spec (JSON file)")->required();
    verify->add_option("coeffs", coeffs, "coefficients n0 n1 [n2 n3]")->required();
    verify->add_option("--rhs", rhs, "right-hand side constant");
    verify->add_option("--grid", grid_points, "number of grid points");
    verify->add_option("--seed", seed, "seed for the non-lattice grid points");
    verify->add_option("--window", window, "grid span window LO:HI");

    auto* nev = app.add_subcommand("nevanlinna", "proximity/counting/characteristic report");
    nev->add_option("spec", spec)->required();
    nev->add_option("--radii", radii, "radius exponents KMIN:KMAX for r = 2^k");

    auto* roots = app.add_subcommand("roots", "root and pole census on a window");
    roots->add_option("spec", spec)->required();
    roots->add_option("--window", window, "census window LO:HI");

    auto* exp_cmd = app.add_subcommand("experiment", "value-distribution experiment runners");
    exp_cmd->require_subcommand(1);
    auto* fermat = exp_cmd->add_subcommand("fermat", "certify a max-combination identity");
    fermat->add_option("--input", inputs, "function spec files")->required();
    fermat->add_option("--alpha", alphas, "exponents, one per input");
    fermat->add_option("--window", window, "initial window LO:HI");
    fermat->add_option("--cap", cap, "half-width cap for window doubling");
    auto* hay = exp_cmd->add_subcommand("hayman", "census or linearity of alpha f(x) + f(x+c)");
    hay->add_option("spec", spec)->required();
    hay->add_option("--alpha", at, "exponent alpha")->required();
    hay->add_option("--shift", value, "argument shift c")->required();
    hay->add_option("--window", window);
    hay->add_option("--check", check, "census | linearity");
    auto* bruck = exp_cmd->add_subcommand("bruck", "shared-root growth classification");
    bruck->add_option("spec", spec)->required();
    bruck->add_option("--value", value, "shared threshold a")->required();
    bruck->add_option("--window", window);
    bruck->add_option("--tails", tails, "tail interval T1:T2 (mirrored)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (eval->parsed()) return cmd_eval(spec, at);
        if (plot->parsed()) return cmd_plot(spec, window, step);
        if (solve_cmd->parsed()) return cmd_solve(coeffs, rhs);
        if (verify->parsed())
            return cmd_verify(solution, coeffs, rhs, grid_points, seed,
                              verify->count("--window") ? window : "");
        if (nev->parsed()) return cmd_nevanlinna(spec, radii);
        if (roots->parsed()) return cmd_roots(spec, window);
        if (exp_cmd->parsed()) {
            if (fermat->parsed()) return cmd_experiment_fermat(inputs, alphas, window, cap);
            if (hay->parsed()) return cmd_experiment_hayman(spec, at, value, window, check);
            if (bruck->parsed()) return cmd_experiment_bruck(spec, value, window, tails);
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
