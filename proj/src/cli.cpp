#include "bkm/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

#include <CLI11.hpp>

#include "bkm/errors.hpp"
#include "bkm/finite_difference.hpp"
#include "bkm/kernels.hpp"
#include "bkm/problems.hpp"
#include "bkm/solver.hpp"

namespace bkm::cli {

namespace {

std::string format_number(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

std::string csv_number(double v) { return format_number("%.12g", v); }

std::vector<Point> table_points(const ProblemSpec& p) {
    std::vector<Point> out;
    for (const auto& t : p.table_points) {
        out.push_back(t.at);
    }
    return out;
}

double relative_error_pct(double exact, double computed) {
    if (std::abs(exact) < 1e-12) {
        return std::nan("");
    }
    return 100.0 * (exact - computed) / std::abs(exact);
}

SolveResult solve(const ProblemSpec& problem, std::size_t n_boundary, std::size_t n_interior) {
    if (n_interior == 0) {
        return solve_boundary_only(problem, n_boundary);
    }
    const auto knots = ellipse_knots(problem.ellipse, n_boundary);
    const auto interior = interior_knots(problem.ellipse, n_interior);
    return solve_mixed_linear(problem, knots, dirichlet_conditions(problem, knots), interior);
}

void print_diagnostics(std::ostream& os, const Diagnostics& d) {
    os << "diagnostics: cond_interp = " << format_number("%.3e", d.cond_interp)
       << "  cond_bkm = " << format_number("%.3e", d.cond_bkm)
       << "  boundary_residual = " << format_number("%.3e", d.residual_inf) << '\n';
}

// Kernel report: value(r), deriv(r) and an operator residual at a point.
struct KernelReport {
    std::string description;
    std::string operator_text;
    std::function<double(double)> value;
    std::function<double(double)> deriv;
    std::function<double(double)> second_value; // second component, may be empty
    std::function<double(Point)> residual;      // scaled residual at a 2D sample point
};

double scaled(double residual, double value) { return std::abs(residual) / (1.0 + std::abs(value)); }

fd::Point3 lift(Point p, double z) { return {p.x, p.y, z}; }

KernelReport make_report(const KernelConfig& c) {
    const double l = c.lambda;
    const double l2 = l * l;
    auto radial2 = [](const RadialKernel& k) {
        return fd::Field2([k](Point p) { return k.eval(std::hypot(p.x, p.y)); });
    };
    auto radial3 = [](const RadialKernel& k) {
        return fd::Field3([k](const fd::Point3& p) { return k.eval(std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2])); });
    };
    const std::string lam = "lambda = " + format_number("%g", l);

    if (c.name == "j0" || c.name == "i0") {
        const bool modified = c.name == "i0";
        const auto k = modified ? kernels::modified_helmholtz2d(l) : kernels::helmholtz2d(l);
        const double sign = modified ? -1.0 : 1.0;
        return {c.name + " (" + lam + ")", modified ? "laplacian - lambda^2" : "laplacian + lambda^2",
                [k](double r) { return k.eval(r); }, [k](double r) { return k.deriv(r); }, {},
                [k, f = radial2(k), sign, l2](Point p) {
                    const double v = f(p);
                    return scaled(fd::laplacian(f, p) + sign * l2 * v, v);
                }};
    }
    if (c.name == "sinc3d" || c.name == "sinhc3d") {
        const bool modified = c.name == "sinhc3d";
        const auto k = modified ? kernels::modified_helmholtz3d(l) : kernels::helmholtz3d(l);
        const double sign = modified ? -1.0 : 1.0;
        return {c.name + " (" + lam + ")", modified ? "laplacian3d - lambda^2" : "laplacian3d + lambda^2",
                [k](double r) { return k.eval(r); }, [k](double r) { return k.deriv(r); }, {},
                [f = radial3(k), sign, l2](Point p) {
                    const auto q = lift(p, 0.3 * p.x);
                    const double v = f(q);
                    return scaled(fd::laplacian(f, q) + sign * l2 * v, v);
                }};
    }
    if (c.name == "biharm2d" || c.name == "biharm3d") {
        const bool three = c.name == "biharm3d";
        const auto [a, b] = three ? kernels::biharmonic3d(l) : kernels::biharmonic2d(l);
        const double l4 = l2 * l2;
        std::function<double(Point)> residual;
        if (three) {
            residual = [fa = radial3(a), fb = radial3(b), l4](Point p) {
                const auto q = lift(p, 0.3 * p.x);
                const double va = fa(q);
                const double vb = fb(q);
                return std::max(scaled(fd::bilaplacian(fa, q) - l4 * va, va),
                                scaled(fd::bilaplacian(fb, q) - l4 * vb, vb));
            };
        } else {
            residual = [fa = radial2(a), fb = radial2(b), l4](Point p) {
                const double va = fa(p);
                const double vb = fb(p);
                return std::max(scaled(fd::bilaplacian(fa, p) - l4 * va, va),
                                scaled(fd::bilaplacian(fb, p) - l4 * vb, vb));
            };
        }
        return {c.name + " (" + lam + ")", "laplacian^2 - lambda^4 (both components)",
                [a](double r) { return a.eval(r); }, [a](double r) { return a.deriv(r); },
                [b](double r) { return b.eval(r); }, residual};
    }
    if (c.name == "convdiff") {
        const auto k = kernels::convection_diffusion2d(c.diffusivity, {c.vx, c.vy}, c.reaction);
        const fd::Field2 f = [k](Point p) { return k.eval(Vec2{p.x, p.y}); };
        const double d = c.diffusivity;
        const double vx = c.vx;
        const double vy = c.vy;
        const double kr = c.reaction;
        return {"convdiff (D = " + format_number("%g", d) + ", v = (" + format_number("%g", vx) + ", " +
                    format_number("%g", vy) + "), k = " + format_number("%g", kr) +
                    ", mu = " + format_number("%g", k.params().at("mu")) + ")",
                "D laplacian + v . grad + k",
                [f](double r) { return f({r, 0.0}); },
                [f](double r) { return fd::d_dx(f, {r, 0.0}); },
                {},
                [f, d, vx, vy, kr](Point p) {
                    const double v = f(p);
                    const double res = d * fd::laplacian(f, p) + vx * fd::d_dx(f, p) + vy * fd::d_dy(f, p) + kr * v;
                    return scaled(res, v);
                }};
    }
    if (c.name == "mq") {
        const auto pair = kernels::mq_pair(c.shape_c, l);
        return {"mq (c = " + format_number("%g", c.shape_c) + ", " + lam + ")",
                "(laplacian + lambda^2) phi_hat - phi",
                [pair](double r) { return pair.phi_hat.eval(r); },
                [pair](double r) { return pair.phi_hat.deriv(r); },
                [pair](double r) { return pair.phi.eval(r); },
                [pair, f = radial2(pair.phi_hat), l2](Point p) {
                    const double target = pair.phi.eval(std::hypot(p.x, p.y));
                    return scaled(fd::laplacian(f, p, 1e-3) + l2 * f(p) - target, target);
                }};
    }
    if (c.name == "log1" || c.name == "mtps") {
        const auto [lg, mt] = kernels::biharmonic_mfs_pair();
        const bool biharm = c.name == "mtps";
        const auto k = biharm ? mt : lg;
        return {c.name, biharm ? "laplacian^2" : "laplacian",
                [k](double r) { return k.eval(r); }, [k](double r) { return k.deriv(r); }, {},
                [f = radial2(k), biharm](Point p) {
                    const double v = f(p);
                    const double step = 0.01 * std::hypot(p.x, p.y);
                    return scaled(biharm ? fd::bilaplacian(f, p, step) : fd::laplacian(f, p), v);
                }};
    }
    throw std::invalid_argument("unknown kernel '" + c.name + "'");
}

} // namespace

std::vector<std::string> kernel_names() {
    return {"j0", "i0", "sinc3d", "sinhc3d", "biharm2d", "biharm3d", "convdiff", "mq", "log1", "mtps"};
}

std::vector<Point> interior_knots(const Ellipse& ellipse, std::size_t count) {
    if (count == 0) {
        return {};
    }
    double spacing = ellipse.semi_minor();
    std::vector<Point> grid = interior_grid(ellipse, spacing);
    while (grid.size() < count) {
        spacing *= 0.8;
        grid = interior_grid(ellipse, spacing);
    }
    std::vector<std::size_t> order(grid.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return ellipse.level(grid[a]) < ellipse.level(grid[b]);
    });
    std::vector<Point> out;
    for (std::size_t i = 0; i < count; ++i) {
        out.push_back(grid[order[i]]);
    }
    return out;
}

int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err) {
    ProblemSpec problem = problems::by_name(config.problem);
    if (config.n_boundary == 0) {
        err << "error: --n must be at least 1\n";
        return kExitUsage;
    }
    if (config.shape_c) {
        if (!(*config.shape_c > 0.0)) {
            err << "error: --c must be positive\n";
            return kExitUsage;
        }
        problem.mq_shape_c = *config.shape_c;
    }

    const SolveResult result = solve(problem, config.n_boundary, config.n_interior);

    const auto points = table_points(problem);
    const auto computed = evaluate(result.solution, points);
    bool finite = std::all_of(computed.begin(), computed.end(), [](double v) { return std::isfinite(v); });

    if (config.format == OutputFormat::csv) {
        out << "x,y,exact,computed,rel_err_pct\n";
        for (std::size_t i = 0; i < points.size(); ++i) {
            const double exact = problem.exact ? problem.exact(points[i]) : std::nan("");
            out << csv_number(points[i].x) << ',' << csv_number(points[i].y) << ',' << csv_number(exact) << ','
                << csv_number(computed[i]) << ',' << csv_number(relative_error_pct(exact, computed[i])) << '\n';
        }
        print_diagnostics(err, result.diagnostics);
    } else {
        out << "problem: " << problem.name << "  (N = " << config.n_boundary << " boundary knots, L = "
            << config.n_interior << " interior, c = " << format_number("%g", problem.mq_shape_c) << ")\n";
        const std::string bkm_col = "BKM(" + std::to_string(config.n_boundary) + ")";
        char line[160];
        std::snprintf(line, sizeof(line), "%8s %8s %10s %10s %9s\n", "x", "y", "Exact", bkm_col.c_str(), "error%");
        out << line;
        for (std::size_t i = 0; i < points.size(); ++i) {
            const double exact = problem.exact ? problem.exact(points[i]) : std::nan("");
            std::snprintf(line, sizeof(line), "%8.2f %8.2f %10.4f %10.4f %9.3f\n", points[i].x, points[i].y, exact,
                          computed[i], relative_error_pct(exact, computed[i]));
            out << line;
        }
        bool header = false;
        for (std::size_t i = 0; i < problem.table_points.size(); ++i) {
            if (!problem.table_points[i].note.empty()) {
                if (!header) {
                    out << "notes:\n";
                    header = true;
                }
                out << "  row " << i + 1 << ": " << problem.table_points[i].note << '\n';
            }
        }
        print_diagnostics(out, result.diagnostics);
    }
    if (!finite) {
        err << "error: non-finite solution values\n";
        return kExitNumerical;
    }
    return kExitOk;
}

int cmd_convergence(const ConvergenceConfig& config, std::ostream& out, std::ostream& err) {
    const ProblemSpec base = problems::by_name(config.problem);
    if (config.n_list.empty()) {
        err << "error: --n needs at least one knot count\n";
        return kExitUsage;
    }
    std::vector<double> c_list = config.c_list;
    if (c_list.empty()) {
        c_list.push_back(base.mq_shape_c);
    }
    for (std::size_t n : config.n_list) {
        if (n == 0) {
            err << "error: knot counts must be at least 1\n";
            return kExitUsage;
        }
    }
    for (double c : c_list) {
        if (!(c > 0.0)) {
            err << "error: shape parameters must be positive\n";
            return kExitUsage;
        }
    }

    const auto points = table_points(base);
    bool ok = true;
    char line[160];
    if (config.format == OutputFormat::csv) {
        out << "n,c,max_err,cond_bkm\n";
    } else {
        std::snprintf(line, sizeof(line), "%6s %10s %14s %14s\n", "n", "c", "max_err", "cond_bkm");
        out << line;
    }
    for (std::size_t n : config.n_list) {
        for (double c : c_list) {
            ProblemSpec problem = base;
            problem.mq_shape_c = c;
            double max_err = std::nan("");
            double cond = std::numeric_limits<double>::infinity();
            try {
                const auto result = solve_boundary_only(problem, n);
                const auto computed = evaluate(result.solution, points);
                max_err = 0.0;
                for (std::size_t i = 0; i < points.size(); ++i) {
                    max_err = std::max(max_err, std::abs(computed[i] - problem.exact(points[i])));
                }
                cond = result.diagnostics.cond_bkm;
            } catch (const SolveError& e) {
                err << "n = " << n << ", c = " << c << ": " << e.what() << '\n';
            }
            if (!std::isfinite(max_err)) {
                ok = false;
            }
            if (config.format == OutputFormat::csv) {
                out << n << ',' << csv_number(c) << ',' << csv_number(max_err) << ',' << csv_number(cond) << '\n';
            } else {
                std::snprintf(line, sizeof(line), "%6zu %10g %14.6e %14.6e\n", n, c, max_err, cond);
                out << line;
            }
        }
    }
    return ok ? kExitOk : kExitNumerical;
}

int cmd_kernels(const KernelConfig& config, std::ostream& out, std::ostream& err) {
    const KernelReport report = make_report(config);
    out << "kernel: " << report.description << '\n';
    out << "operator: " << report.operator_text << '\n';

    bool finite = true;
    char line[160];
    auto row = [&](double r) {
        const double v = report.value(r);
        const double d = report.deriv(r);
        finite = finite && std::isfinite(v) && std::isfinite(d);
        if (report.second_value) {
            const double v2 = report.second_value(r);
            finite = finite && std::isfinite(v2);
            std::snprintf(line, sizeof(line), "%8.3f %20.12g %20.12g %20.12g\n", r, v, d, v2);
        } else {
            std::snprintf(line, sizeof(line), "%8.3f %20.12g %20.12g\n", r, v, d);
        }
        out << line;
    };
    if (report.second_value) {
        std::snprintf(line, sizeof(line), "%8s %20s %20s %20s\n", "r", "value", "deriv", "second");
    } else {
        std::snprintf(line, sizeof(line), "%8s %20s %20s\n", "r", "value", "deriv");
    }
    if (config.r) {
        if (!(*config.r >= 0.0)) {
            err << "error: --r must be non-negative\n";
            return kExitUsage;
        }
        out << line;
        row(*config.r);
        out << "value = " << csv_number(report.value(*config.r)) << '\n';
    } else {
        out << line;
        for (int i = config.name == "log1" || config.name == "mtps" ? 1 : 0; i <= 10; ++i) {
            row(0.5 * i);
        }
    }

    std::mt19937_64 rng(20240531);
    const bool log_singular = config.name == "log1" || config.name == "mtps";
    std::uniform_real_distribution<double> radius(log_singular ? 0.5 : 0.1, 5.0);
    std::uniform_real_distribution<double> angle(0.0, 6.283185307179586);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double r = radius(rng);
        const double t = angle(rng);
        worst = std::max(worst, report.residual({r * std::cos(t), r * std::sin(t)}));
    }
    constexpr double kTolerance = 1e-5;
    const bool pass = worst <= kTolerance;
    out << "max_residual = " << format_number("%.3e", worst) << (pass ? " < " : " > ") << "1e-05 ("
        << (pass ? "pass" : "FAIL") << ", 50 sample points, scaled by 1+|value|)\n";
    if (!finite || !std::isfinite(worst)) {
        err << "error: non-finite kernel values\n";
        return kExitNumerical;
    }
    return pass ? kExitOk : kExitNumerical;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Boundary knot method solver"};
    app.require_subcommand(1);

    std::map<std::string, OutputFormat> formats{{"table", OutputFormat::table}, {"csv", OutputFormat::csv}};
    std::string out_path;

    RunConfig solve_cfg;
    auto* solve_cmd = app.add_subcommand("solve", "Solve a benchmark problem and print the table points");
    solve_cmd->add_option("--problem", solve_cfg.problem, "laplace | helmholtz | burger")->required();
    solve_cmd->add_option("--n", solve_cfg.n_boundary, "number of boundary knots");
    solve_cmd->add_option("--interior", solve_cfg.n_interior, "number of interior knots");
    solve_cmd->add_option("--c", solve_cfg.shape_c, "MQ shape parameter (default: problem's)");
    solve_cmd->add_option("--format", solve_cfg.format, "table | csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    solve_cmd->add_option("--out", out_path, "write output to a file");

    ConvergenceConfig conv_cfg;
    auto* conv_cmd = app.add_subcommand("convergence", "Sweep knot counts and shape parameters");
    conv_cmd->add_option("--problem", conv_cfg.problem, "laplace | helmholtz | burger")->required();
    conv_cmd->add_option("--n", conv_cfg.n_list, "comma-separated knot counts")->delimiter(',')->required();
    conv_cmd->add_option("--c", conv_cfg.c_list, "comma-separated shape parameters")->delimiter(',');
    conv_cmd->add_option("--format", conv_cfg.format, "table | csv")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    conv_cmd->add_option("--out", out_path, "write output to a file");

    KernelConfig kern_cfg;
    auto* kern_cmd = app.add_subcommand("kernels", "Evaluate a kernel and check its governing operator");
    kern_cmd->add_option("name", kern_cfg.name, "kernel name")->required();
    kern_cmd->add_option("--lambda", kern_cfg.lambda, "wavenumber");
    kern_cmd->add_option("--r", kern_cfg.r, "single radius to evaluate");
    kern_cmd->add_option("--c", kern_cfg.shape_c, "MQ shape parameter (mq only)");
    kern_cmd->add_option("--D", kern_cfg.diffusivity, "diffusivity (convdiff)");
    kern_cmd->add_option("--vx", kern_cfg.vx, "velocity x (convdiff)");
    kern_cmd->add_option("--vy", kern_cfg.vy, "velocity y (convdiff)");
    kern_cmd->add_option("--k", kern_cfg.reaction, "reaction coefficient (convdiff)");
    kern_cmd->add_option("--out", out_path, "write output to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) {
            err << "error: cannot open '" << out_path << "' for writing\n";
            return kExitUsage;
        }
        sink = &file;
    }

    try {
        if (solve_cmd->parsed()) {
            return cmd_solve(solve_cfg, *sink, err);
        }
        if (conv_cmd->parsed()) {
            return cmd_convergence(conv_cfg, *sink, err);
        }
        return cmd_kernels(kern_cfg, *sink, err);
    } catch (const SolveError& e) {
        err << "error: " << e.what() << '\n';
        print_diagnostics(err, e.diagnostics());
        return kExitNumerical;
    } catch (const UnsupportedConfigurationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitNumerical;
    }
}

} // namespace bkm::cli
