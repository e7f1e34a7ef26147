#include "bkm/kernels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "bkm/specfun.hpp"

namespace bkm {

RadialKernel::RadialKernel(std::string label, std::map<std::string, double> params,
                           RadialFunction value, RadialFunction deriv, RadialFunction second)
    : label_(std::move(label)),
      params_(std::move(params)),
      value_(std::move(value)),
      deriv_(std::move(deriv)),
      second_(std::move(second)) {
    if (!value_ || !deriv_) {
        throw std::invalid_argument("RadialKernel: value and derivative are required");
    }
}

double RadialKernel::second(double r) const {
    if (!second_) {
        throw std::logic_error("RadialKernel '" + label_ + "' has no second derivative");
    }
    return second_(r);
}

DisplacementKernel::DisplacementKernel(std::string label, std::map<std::string, double> params,
                                       std::function<double(Vec2)> value)
    : label_(std::move(label)), params_(std::move(params)), value_(std::move(value)) {}

SourceKernel::SourceKernel(std::string label, std::function<double(Point, double)> value)
    : label_(std::move(label)), value_(std::move(value)) {}

namespace kernels {

namespace {

using specfun::bessel_i0;
using specfun::bessel_i1;
using specfun::bessel_j0;
using specfun::bessel_j1;

void require_wavenumber(double lambda, const char* who) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument(std::string(who) + ": wavenumber must be positive");
    }
}

// J1(z)/z and I1(z)/z with their z -> 0 limit of 1/2.
double j1_over_z(double z) { return std::abs(z) < 1e-8 ? 0.5 : bessel_j1(z) / z; }
double i1_over_z(double z) { return std::abs(z) < 1e-8 ? 0.5 : bessel_i1(z) / z; }

// f(z) = sin(z)/z (sign = -1) or sinh(z)/z (sign = +1) and its first two
// derivatives. Power series near the removable singularity.
struct SincValues {
    double f;
    double df;
    double d2f;
};

SincValues sinc_family(double z, double sign) {
    if (std::abs(z) < 0.5) {
        SincValues out{1.0, 0.0, 0.0};
        double coeff = 1.0; // sign^k / (2k+1)!
        double zpow = 1.0;  // z^(2k-2)
        for (int k = 1; k <= 15; ++k) {
            coeff *= sign / ((2.0 * k) * (2.0 * k + 1.0));
            const double zk2 = zpow;         // z^(2k-2)
            const double zk1 = zk2 * z;      // z^(2k-1)
            const double zk = zk1 * z;       // z^(2k)
            out.f += coeff * zk;
            out.df += coeff * 2.0 * k * zk1;
            out.d2f += coeff * 2.0 * k * (2.0 * k - 1.0) * zk2;
            zpow = zk;
        }
        return out;
    }
    const double s = sign < 0.0 ? std::sin(z) : std::sinh(z);
    const double c = sign < 0.0 ? std::cos(z) : std::cosh(z);
    const double z2 = z * z;
    return {s / z, (z * c - s) / z2, sign * s / z - 2.0 * c / z2 + 2.0 * s / (z2 * z)};
}

RadialKernel sinc_kernel(const char* label, double lambda, double sign) {
    return RadialKernel(
        label, {{"lambda", lambda}},
        [lambda, sign](double r) { return sinc_family(lambda * r, sign).f; },
        [lambda, sign](double r) { return lambda * sinc_family(lambda * r, sign).df; },
        [lambda, sign](double r) { return lambda * lambda * sinc_family(lambda * r, sign).d2f; });
}

double ipow(double x, int n) {
    double out = 1.0;
    for (int i = 0; i < n; ++i) {
        out *= x;
    }
    return out;
}

void require_log_domain(double r) {
    if (!(r > 0.0)) {
        throw std::domain_error("logarithmic kernel evaluated at r <= 0");
    }
}

} // namespace

RadialKernel helmholtz2d(double lambda) {
    require_wavenumber(lambda, "helmholtz2d");
    return RadialKernel(
        "j0", {{"lambda", lambda}},
        [lambda](double r) { return bessel_j0(lambda * r); },
        [lambda](double r) { return -lambda * bessel_j1(lambda * r); },
        [lambda](double r) {
            const double z = lambda * r;
            return -lambda * lambda * (bessel_j0(z) - j1_over_z(z));
        });
}

RadialKernel modified_helmholtz2d(double lambda) {
    require_wavenumber(lambda, "modified_helmholtz2d");
    return RadialKernel(
        "i0", {{"lambda", lambda}},
        [lambda](double r) { return bessel_i0(lambda * r); },
        [lambda](double r) { return lambda * bessel_i1(lambda * r); },
        [lambda](double r) {
            const double z = lambda * r;
            return lambda * lambda * (bessel_i0(z) - i1_over_z(z));
        });
}

RadialKernel helmholtz3d(double lambda) {
    require_wavenumber(lambda, "helmholtz3d");
    return sinc_kernel("sinc3d", lambda, -1.0);
}

RadialKernel modified_helmholtz3d(double lambda) {
    require_wavenumber(lambda, "modified_helmholtz3d");
    return sinc_kernel("sinhc3d", lambda, 1.0);
}

std::pair<RadialKernel, RadialKernel> biharmonic2d(double lambda) {
    return {helmholtz2d(lambda), modified_helmholtz2d(lambda)};
}

std::pair<RadialKernel, RadialKernel> biharmonic3d(double lambda) {
    return {helmholtz3d(lambda), modified_helmholtz3d(lambda)};
}

DisplacementKernel convection_diffusion2d(double diffusivity, Vec2 velocity, double reaction) {
    if (!(diffusivity > 0.0)) {
        throw std::invalid_argument("convection_diffusion2d: diffusivity must be positive");
    }
    const double drift = norm(velocity) / (2.0 * diffusivity);
    const double mu2 = reaction / diffusivity - drift * drift;
    if (mu2 < 0.0) {
        throw std::invalid_argument("convection_diffusion2d: imaginary wavenumber (k/D < (|v|/2D)^2)");
    }
    const double mu = std::sqrt(mu2);
    return DisplacementKernel(
        "convdiff",
        {{"D", diffusivity}, {"vx", velocity.x}, {"vy", velocity.y}, {"k", reaction}, {"mu", mu}},
        [=](Vec2 d) { return std::exp(-dot(velocity, d) / (2.0 * diffusivity)) * bessel_j0(mu * norm(d)); });
}

KernelPair mq_pair(double c, double wavenumber) {
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw std::invalid_argument("mq_pair: shape parameter must be positive");
    }
    require_wavenumber(wavenumber, "mq_pair");
    const double c2 = c * c;
    const double k2 = wavenumber * wavenumber;

    RadialKernel phi_hat(
        "mq3", {{"c", c}},
        [c2](double r) {
            const double s = std::sqrt(r * r + c2);
            return s * s * s;
        },
        [c2](double r) { return 3.0 * r * std::sqrt(r * r + c2); },
        [c2](double r) {
            const double s = std::sqrt(r * r + c2);
            return 3.0 * s + 3.0 * r * r / s;
        });

    RadialKernel phi(
        "mq3_image", {{"c", c}, {"lambda", wavenumber}},
        [c2, k2](double r) {
            const double r2 = r * r;
            const double s = std::sqrt(r2 + c2);
            return 6.0 * s + 3.0 * r2 / s + k2 * s * s * s;
        },
        [c2, k2](double r) {
            const double r2 = r * r;
            const double s = std::sqrt(r2 + c2);
            const double s3 = s * s * s;
            return 12.0 * r / s - 3.0 * r2 * r / s3 + 3.0 * k2 * r * s;
        },
        [c2, k2](double r) {
            const double r2 = r * r;
            const double s = std::sqrt(r2 + c2);
            const double s3 = s * s * s;
            const double s5 = s3 * s * s;
            return 12.0 / s - 21.0 * r2 / s3 + 9.0 * r2 * r2 / s5 + 3.0 * k2 * (s + r2 / s);
        });

    return {std::move(phi_hat), std::move(phi)};
}

RadialKernel gsr_kernel(const RadialKernel& g, int m, std::optional<double> prewavelet_c) {
    if (m < 0) {
        throw std::invalid_argument("gsr_kernel: m must be non-negative");
    }
    if (prewavelet_c && !(*prewavelet_c > 0.0)) {
        throw std::invalid_argument("gsr_kernel: pre-wavelet dilation must be positive");
    }
    if (m == 0 && !prewavelet_c) {
        return g;
    }

    std::ostringstream label;
    label << "gsr(m=" << m;
    if (prewavelet_c) {
        label << ",c=" << *prewavelet_c;
    }
    label << ")[" << g.label() << "]";
    auto params = g.params();
    params["m"] = m;
    if (prewavelet_c) {
        params["prewavelet_c"] = *prewavelet_c;
    }

    const double c2 = prewavelet_c ? *prewavelet_c * *prewavelet_c : 0.0;
    const bool dilated = prewavelet_c.has_value();
    // s(r), ds/dr, d2s/dr2
    auto arg = [c2, dilated](double r) { return dilated ? std::sqrt(r * r + c2) : r; };
    auto darg = [c2, dilated](double r) { return dilated ? r / std::sqrt(r * r + c2) : 1.0; };
    auto d2arg = [c2, dilated](double r) {
        if (!dilated) {
            return 0.0;
        }
        const double s = std::sqrt(r * r + c2);
        return c2 / (s * s * s);
    };
    const int p = 2 * m;

    RadialFunction value = [g, p, arg](double r) {
        if (p > 0 && r == 0.0) {
            return 0.0;
        }
        return ipow(r, p) * g.eval(arg(r));
    };
    RadialFunction deriv = [g, p, arg, darg](double r) {
        if (p == 0) {
            return g.deriv(arg(r)) * darg(r);
        }
        if (r == 0.0) {
            return 0.0;
        }
        const double s = arg(r);
        return p * ipow(r, p - 1) * g.eval(s) + ipow(r, p) * g.deriv(s) * darg(r);
    };
    RadialFunction second;
    if (g.has_second()) {
        second = [g, p, arg, darg, d2arg](double r) {
            const double s = arg(r);
            const double ds = darg(r);
            const double inner = g.second(s) * ds * ds + g.deriv(s) * d2arg(r);
            if (p == 0) {
                return inner;
            }
            if (r == 0.0) {
                return p == 2 ? 2.0 * g.eval(s) : 0.0;
            }
            double out = p * (p - 1) * ipow(r, p - 2) * g.eval(s);
            out += 2.0 * p * ipow(r, p - 1) * g.deriv(s) * ds;
            out += ipow(r, p) * inner;
            return out;
        };
    }
    return RadialKernel(label.str(), std::move(params), std::move(value), std::move(deriv),
                        std::move(second));
}

SourceKernel gsr_weighted_kernel(const RadialKernel& g, GsrWeighting mode,
                                 std::function<double(Point)> weight, int m,
                                 std::optional<double> prewavelet_c, RadialFunction rho_term) {
    if (!weight) {
        throw std::invalid_argument("gsr_weighted_kernel: weight function is required");
    }
    const RadialKernel base = gsr_kernel(g, m, prewavelet_c);
    const double c2 = prewavelet_c ? *prewavelet_c * *prewavelet_c : 0.0;
    const bool dilated = prewavelet_c.has_value();
    auto arg = [c2, dilated](double r) { return dilated ? std::sqrt(r * r + c2) : r; };

    switch (mode) {
    case GsrWeighting::forcing:
        return SourceKernel("gsr_forcing:" + base.label(),
                            [base, weight, rho_term, arg](Point src, double r) {
                                const double rho = rho_term ? rho_term(arg(r)) : 0.0;
                                return (weight(src) + rho) * base.eval(r);
                            });
    case GsrWeighting::neumann:
        return SourceKernel("gsr_neumann:" + base.label(),
                            [base, weight](Point src, double r) { return weight(src) * base.eval(r); });
    case GsrWeighting::dirichlet:
        return SourceKernel("gsr_dirichlet:" + base.label(),
                            [g, weight, m, arg](Point src, double r) {
                                if (m > 0 && r == 0.0) {
                                    return 0.0;
                                }
                                return weight(src) * ipow(r, 2 * m) * g.deriv(arg(r));
                            });
    }
    throw std::invalid_argument("gsr_weighted_kernel: unknown mode");
}

std::pair<RadialKernel, RadialKernel> biharmonic_mfs_pair() {
    RadialKernel log_kernel(
        "log1", {},
        [](double r) {
            require_log_domain(r);
            return std::log(r) + 1.0;
        },
        [](double r) {
            require_log_domain(r);
            return 1.0 / r;
        },
        [](double r) {
            require_log_domain(r);
            return -1.0 / (r * r);
        });
    RadialKernel mtps(
        "mtps", {},
        [](double r) {
            require_log_domain(r);
            return r * r * (std::log(r) + 1.0);
        },
        [](double r) {
            require_log_domain(r);
            return 2.0 * r * std::log(r) + 3.0 * r;
        },
        [](double r) {
            require_log_domain(r);
            return 2.0 * std::log(r) + 5.0;
        });
    return {std::move(log_kernel), std::move(mtps)};
}

double normal_derivative(const RadialKernel& k, Point source, Point response, Vec2 n) {
    const Vec2 d = response - source;
    const double r = norm(d);
    if (r == 0.0) {
        return 0.0;
    }
    return k.deriv(r) * dot(d, n) / r;
}

} // namespace kernels
} // namespace bkm
