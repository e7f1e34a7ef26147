#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "bkm/geometry.hpp"

namespace bkm::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNumerical = 1;
inline constexpr int kExitUsage = 2;

enum class OutputFormat { table, csv };

struct RunConfig {
    std::string problem;
    std::size_t n_boundary = 5;
    std::size_t n_interior = 0;
    std::optional<double> shape_c;
    OutputFormat format = OutputFormat::table;
};

struct ConvergenceConfig {
    std::string problem;
    std::vector<std::size_t> n_list;
    std::vector<double> c_list; // empty: the problem's default shape parameter
    OutputFormat format = OutputFormat::csv;
};

struct KernelConfig {
    std::string name;
    double lambda = 1.0;
    std::optional<double> r;
    double shape_c = 1.0; // mq only
    double diffusivity = 1.0;
    double vx = 0.0;
    double vy = 0.0;
    double reaction = 1.0;
};

/// Solve one problem and print x, y, exact, computed, error% per table point
/// plus a diagnostics footer (on stderr in CSV mode).
int cmd_solve(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Max absolute error at the table points for every (n, c); columns
/// n,c,max_err,cond_bkm.
int cmd_convergence(const ConvergenceConfig& config, std::ostream& out, std::ostream& err);

/// Kernel values on a radius grid (or at one radius) and the finite-difference
/// residual of the kernel's governing operator.
int cmd_kernels(const KernelConfig& config, std::ostream& out, std::ostream& err);

std::vector<std::string> kernel_names();

/// The `count` lattice points closest to the ellipse centre; the lattice is
/// refined until enough points are strictly inside.
std::vector<Point> interior_knots(const Ellipse& ellipse, std::size_t count);

/// Command-line entry point: parses argv and dispatches. `--out` redirects
/// the primary output to a file.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bkm::cli
