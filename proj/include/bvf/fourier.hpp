#pragma once

#include <complex>
#include <span>
#include <vector>

#include "bvf/grid.hpp"
#include "bvf/report.hpp"

namespace bvf {

/// Samples of g^(t) = int g(x) exp(-i t x) dx on a symmetric frequency grid.
struct TransformResult {
    Grid freq_grid;
    std::vector<std::complex<double>> values;
    double cutoff;
    double source_a;
    double source_b;
};

/// Trapezoid quadrature of the oscillatory integral at m frequencies
/// spaced uniformly on [-cutoff, cutoff], evaluated by chirp-z. For real
/// input the output is made exactly conjugate-symmetric.
TransformResult fourier_transform(const SampledFunction& f, double cutoff, std::size_t m);

/// Nyquist-consistent defaults: cutoff pi/h and spacing <= pi/(b-a).
double default_cutoff(const Grid& grid);
double default_frequency_spacing(const Grid& grid);
/// Odd node count (t = 0 included) with spacing <= `spacing` on [-cutoff, cutoff].
std::size_t frequency_count(double cutoff, double spacing);

/// int_{-T}^{T} |f^(t)| dt for each T in `cutoffs` (ascending), from one
/// transform on the largest cutoff, which may not exceed pi/h.
/// Nondecreasing by construction.
std::vector<double> l1_norm_ft(const SampledFunction& f, std::span<const double> cutoffs);

struct H1Report {
    double l1_norm = 0.0;
    double hilbert_l1_norm = 0.0;
    double h1_norm = 0.0;
    double cancellation_residual = 0.0;
};

H1Report h1_report(const SampledFunction& g);

struct HardyMeasurement {
    double lhs = 0.0;                 // int |g^(x)|/|x| dx, one spacing around 0 excised
    double rhs = 0.0;                 // ||g||_{H^1}
    double empirical_constant = 0.0;  // lhs / rhs
    double frequency_spacing = 0.0;
    H1Report h1;
};

/// Throws std::invalid_argument when |int g| > 1e-6 ||g||_1: without the
/// cancellation the integrand is singular at 0.
HardyMeasurement hardy_measure(const SampledFunction& g, double cutoff);

/// Passes iff lhs <= constant * rhs * (1 + tol).
VerificationReport hardy_check(const SampledFunction& g, double cutoff, double constant = 1.0,
                               double tol = 1e-2);

/// max_t |FT(f')(t) - i t FT(f)(t)| / (1 + |t FT(f)(t)|) over |t| <= cutoff.
double derivative_ft_identity(const SampledFunction& f, double cutoff = 20.0, std::size_t m = 0);

/// c_k = (1/2pi) int_{-pi}^{pi} f(x) exp(-i k x) dx for |k| <= kmax, by trapezoid.
struct CoefficientSeries {
    int kmax = 0;
    std::vector<std::complex<double>> coeffs;  // index k + kmax
    std::vector<double> abs_partial_sums;      // [K] = sum_{|k| <= K} |c_k|

    std::complex<double> at(int k) const { return coeffs.at(static_cast<std::size_t>(k + kmax)); }
};

CoefficientSeries fourier_coefficients(const SampledFunction& f, int kmax);

/// max_{1 <= |k| <= kmax} | |c~_k| - |c_k| | with c~ the coefficients of periodic_conjugate(f).
double conjugate_coefficient_check(const SampledFunction& f, int kmax);

namespace detail {
/// O(n m) direct trapezoid reference for fourier_transform.
TransformResult fourier_transform_direct(const SampledFunction& f, double cutoff, std::size_t m);
}  // namespace detail

}  // namespace bvf
