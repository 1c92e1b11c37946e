#pragma once

#include <optional>

#include "bvf/grid.hpp"

namespace bvf {

/// Principal-value configuration.
///
/// symmetric_difference pairs f(x-u) - f(x+u) at u = (j+1/2)h and drops the
/// pairs with u < delta_min (default h/2, which drops none).
/// singularity_subtraction integrates (f(t) - f(x))/(x-t) by trapezoid with
/// the diagonal term -f'(x) and adds f(x) pv int dt/(x-t) in closed form; it
/// takes no delta_min. An unset pairing means the operator's default.
struct PvConfig {
    enum class Pairing { symmetric_difference, singularity_subtraction };

    std::optional<double> delta_min;
    std::optional<Pairing> pairing;

    double resolve_delta(const Grid& grid) const;
};

/// The multiplier of the frequency-domain Hilbert transform is
/// kHilbertMultiplierSign * i * sign(xi) for transforms with kernel
/// exp(-i t x). Pinned by the Poisson / conjugate-Poisson pair.
inline constexpr int kHilbertMultiplierSign = -1;

/// (1/pi) int_0^inf {f(x-u) - f(x+u)} du/u with u = (j+1/2)h and f at the
/// half-offset points taken as the mean of the neighbouring samples.
/// Samples beyond the grid are zero. Evaluated as one FFT convolution.
/// Default pairing: symmetric_difference.
SampledFunction hilbert_pv(const SampledFunction& f, const PvConfig& cfg = {});

/// Zero-padded DFT, multiplication by the sign multiplier, inverse DFT,
/// then a smooth correction that turns the cotangent kernel of the padded
/// period back into 1/(pi x).
SampledFunction hilbert_multiplier(const SampledFunction& f);

/// Hilbert transform with the kernel 1/(x-t) + t/(1+t^2), for bounded f.
///
/// Computed in subtracted form,
///   int (f(t) - f(x))/(x-t) dt + f(x) * pv int dt/(x-t) + int f(t) t/(1+t^2) dt,
/// by trapezoid on the grid nodes (the diagonal term is -f'(x)). Outside the
/// window f is continued by its boundary values and the tail integrals of the
/// augmented kernel are added in closed form; they converge because the
/// kernel decays like x/t^2. That is the default pairing; with
/// symmetric_difference the result is hilbert_pv(f) plus the augmentation
/// constant, which needs f to vanish at both grid ends.
SampledFunction modified_hilbert(const SampledFunction& f, const PvConfig& cfg = {});

/// Conjugate function (1/2pi) pv int_{-pi}^{pi} f(t) cot((x-t)/2) dt on a grid
/// spanning [-pi, pi]. Circulant PV rule on the N = n-1 distinct samples;
/// for even N only odd offsets contribute (half-offset nodes of the 2h lattice).
SampledFunction periodic_conjugate(const SampledFunction& f);

/// Same operator through the coefficient multiplier -i sign(k).
SampledFunction periodic_conjugate_spectral(const SampledFunction& f);

struct KernelDifference {
    double partial_sum;
    double closed_form;
    bool near_pole;  // |t -+ 2pi| < 1e-3
};

/// (1/2)cot(t/2) - 1/t against its series sum_{k != 0} t/(2k pi (t - 2k pi)),
/// the symmetric partial sum over 1 <= |k| <= terms.
KernelDifference kernel_difference(double t, long terms);

/// Closed form alone, with the removable value 0 at t = 0. Exactly odd.
double kernel_difference_closed(double t);

/// A priori bound on |H(f restricted outside the window)| at the interior
/// point x, assuming |f| decays like 1/t^2 beyond the window. Zero for
/// compact support; infinite for bounded or periodic inputs.
double hilbert_truncation_tail(const SampledFunction& f, double x);

namespace detail {
/// O(n^2) reference for the symmetric_difference rule (same sum, no FFT).
SampledFunction hilbert_pv_direct(const SampledFunction& f, const PvConfig& cfg = {});
/// O(n^2) reference for modified_hilbert.
SampledFunction modified_hilbert_direct(const SampledFunction& f);
}  // namespace detail

}  // namespace bvf
