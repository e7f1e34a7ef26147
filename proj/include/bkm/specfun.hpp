#pragma once

// Bessel functions of the first kind (J) and modified first kind (I),
// orders 0 and 1, for real arguments.

namespace bkm::specfun {

/// J0(x). Absolute error below 1e-12 for |x| <= 50.
/// Throws std::domain_error for non-finite x.
double bessel_j0(double x);

/// J1(x); odd in x. Same accuracy and errors as bessel_j0.
double bessel_j1(double x);

/// Largest |x| accepted by the modified Bessel functions.
inline constexpr double kModifiedBesselMaxArg = 100.0;

/// I0(x). Relative error below 1e-12.
/// Throws std::domain_error for non-finite x and std::range_error for
/// |x| > kModifiedBesselMaxArg.
double bessel_i0(double x);

/// I1(x); odd in x. Same accuracy and errors as bessel_i0.
double bessel_i1(double x);

} // namespace bkm::specfun
