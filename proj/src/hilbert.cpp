#include "bvf/hilbert.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bvf/detail/fft.hpp"
#include "bvf/grid_ops.hpp"

namespace bvf {
namespace {

using std::numbers::pi;
using detail::cplx;

void require_decaying(const SampledFunction& f, const char* op) {
    require_real(f, op);
    switch (f.decay_class()) {
        case DecayClass::compact_support:
        case DecayClass::vanishing_at_infinity:
            return;
        case DecayClass::periodic:
            throw std::invalid_argument(std::string(op) + ": periodic input, use periodic_conjugate");
        case DecayClass::bounded:
            throw std::invalid_argument(std::string(op) + ": bounded input, use modified_hilbert");
    }
}

void require_periodic_window(const SampledFunction& f, const char* op) {
    require_real(f, op);
    if (f.decay_class() != DecayClass::periodic) {
        throw std::invalid_argument(std::string(op) + " requires a periodic function");
    }
    const Grid& g = f.grid();
    if (std::abs(g.a() + pi) > 1e-12 || std::abs(g.b() - pi) > 1e-12) {
        throw std::invalid_argument(std::string(op) + " requires a grid spanning [-pi, pi]");
    }
    if (g.n() < 3) throw std::invalid_argument(std::string(op) + " needs at least 2 distinct samples");
}

using Pairing = PvConfig::Pairing;

// Number of pairs j with (j+1/2)h < delta.
std::size_t excluded_pairs(double delta, double h) {
    return static_cast<std::size_t>(std::max(0.0, std::ceil(delta / h - 0.5 - 1e-9)));
}

// Offsets m in [-(n-1), n-1] of the half-offset rule. Sample m enters through
// pairs j = m-1 and j = m with half weight each, so with nothing dropped
// c_m = m/(pi (m^2 - 1/4)).
std::vector<double> half_offset_kernel(std::size_t n, std::size_t skip) {
    const std::size_t K = n - 1;
    std::vector<double> kern(2 * K + 1, 0.0);
    for (std::size_t m = 1; m <= K; ++m) {
        const double dm = static_cast<double>(m);
        double c = 0.0;
        if (m - 1 >= skip) c += 0.5 / (dm - 0.5);
        if (m >= skip) c += 0.5 / (dm + 0.5);
        kern[K + m] = c / pi;
        kern[K - m] = -c / pi;
    }
    return kern;
}

std::vector<double> central_slopes(std::span<const double> v, double h) {
    const std::size_t n = v.size();
    std::vector<double> d(n);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    d.front() = (v[1] - v[0]) / h;
    d.back() = (v[n - 1] - v[n - 2]) / h;
    return d;
}

double xlogy(double x, double y) { return x == 0.0 ? 0.0 : x * std::log(y); }

// The x-dependent closed-form part of the subtracted modified transform:
// f(x) ln((x-a)/(b-x)) plus the constant-extension tails, regrouped so the
// endpoint logarithms cancel.
double boundary_terms(double fx, double x, double fa, double fb, double a, double b) {
    return xlogy(fx - fa, x - a) + xlogy(fb - fx, b - x) + 0.5 * fa * std::log1p(a * a) -
           0.5 * fb * std::log1p(b * b);
}

void require_modified_input(const SampledFunction& f) {
    require_real(f, "modified_hilbert");
    if (f.decay_class() == DecayClass::periodic) {
        throw std::invalid_argument("modified_hilbert: periodic input, use periodic_conjugate");
    }
    if (f.size() < 3) throw std::invalid_argument("modified_hilbert needs at least 3 samples");
}

double augmentation(const SampledFunction& f) {
    const Grid& g = f.grid();
    std::vector<double> y(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double t = g[i];
        y[i] = f[i] * t / (1.0 + t * t);
    }
    return trapezoid(g, y);
}

Pairing resolve_pairing(const PvConfig& cfg, Pairing fallback, const Grid& grid) {
    const Pairing p = cfg.pairing.value_or(fallback);
    if (p == Pairing::singularity_subtraction && cfg.delta_min) {
        throw std::invalid_argument("delta_min applies to the symmetric_difference rule only");
    }
    cfg.resolve_delta(grid);
    return p;
}

std::vector<double> half_offset_rule(const SampledFunction& f, const PvConfig& cfg) {
    const Grid& g = f.grid();
    const std::size_t skip = excluded_pairs(cfg.resolve_delta(g), g.h());
    return detail::convolve_centered(f.values(), half_offset_kernel(f.size(), skip));
}

// Subtracted form on the nodes. With `modified` set the augmentation and the
// flat-extension tails are included; otherwise f is zero outside the window
// and the jump to zero at an end node is placed half a cell out.
std::vector<double> subtraction_rule(const SampledFunction& f, bool modified) {
    const Grid& g = f.grid();
    const std::size_t n = f.size();
    const double h = g.h();
    const auto v = f.values();
    const auto w = trapezoid_weights(g);

    // Off-diagonal sums S1_i = sum_{j != i} w_j f_j/(x_i-x_j), S0_i = sum_{j != i} w_j/(x_i-x_j).
    const std::size_t K = n - 1;
    std::vector<double> kern(2 * K + 1, 0.0);
    for (std::size_t m = 1; m <= K; ++m) {
        kern[K + m] = 1.0 / (static_cast<double>(m) * h);
        kern[K - m] = -kern[K + m];
    }
    std::vector<double> wf(n);
    for (std::size_t i = 0; i < n; ++i) wf[i] = w[i] * v[i];
    const auto s1 = detail::convolve_centered(wf, kern);
    const auto s0 = detail::convolve_centered(w, kern);
    const auto slope = central_slopes(v, h);
    const double aug = modified ? augmentation(f) : 0.0;
    const double fa = modified ? v.front() : 0.0;
    const double fb = modified ? v.back() : 0.0;

    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double body = s1[i] - v[i] * s0[i] - w[i] * slope[i];
        const double edge = modified ? boundary_terms(v[i], g[i], fa, fb, g.a(), g.b())
                                     : xlogy(v[i], std::max(g[i] - g.a(), 0.5 * h)) -
                                           xlogy(v[i], std::max(g.b() - g[i], 0.5 * h));
        out[i] = (body + aug + edge) / pi;
    }
    return out;
}

}  // namespace

double PvConfig::resolve_delta(const Grid& grid) const {
    const double d = delta_min.value_or(0.5 * grid.h());
    if (!(d > 0.0) || d > grid.h() * (1.0 + 1e-12)) {
        throw std::invalid_argument("delta_min must lie in (0, h]");
    }
    return d;
}

SampledFunction hilbert_pv(const SampledFunction& f, const PvConfig& cfg) {
    require_decaying(f, "hilbert_pv");
    const Grid& g = f.grid();
    std::vector<double> out;
    if (resolve_pairing(cfg, Pairing::symmetric_difference, g) == Pairing::singularity_subtraction) {
        if (f.size() < 3) throw std::invalid_argument("hilbert_pv: subtraction rule needs at least 3 samples");
        out = subtraction_rule(f, false);
    } else {
        out = half_offset_rule(f, cfg);
    }
    return SampledFunction(g, std::move(out), DecayClass::vanishing_at_infinity);
}

SampledFunction detail::hilbert_pv_direct(const SampledFunction& f, const PvConfig& cfg) {
    require_decaying(f, "hilbert_pv");
    const std::size_t n = f.size();
    const auto v = f.values();
    const auto skip = static_cast<long>(excluded_pairs(cfg.resolve_delta(f.grid()), f.grid().h()));
    auto at = [&](long i) { return i < 0 || i >= static_cast<long>(n) ? 0.0 : v[i]; };
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const long li = static_cast<long>(i);
        double acc = 0.0;
        for (long j = static_cast<long>(n); j >= skip; --j) {
            const double left = 0.5 * (at(li - j - 1) + at(li - j));
            const double right = 0.5 * (at(li + j) + at(li + j + 1));
            acc += (left - right) / (static_cast<double>(j) + 0.5);
        }
        out[i] = acc / pi;
    }
    return SampledFunction(f.grid(), std::move(out), DecayClass::vanishing_at_infinity);
}

SampledFunction hilbert_multiplier(const SampledFunction& f) {
    require_decaying(f, "hilbert_multiplier");
    const Grid& g = f.grid();
    const std::size_t n = f.size();
    const double h = g.h();
    const std::size_t N = detail::next_pow2(2 * n);

    std::vector<cplx> buf(N, cplx(0.0));
    for (std::size_t i = 0; i < n; ++i) buf[i] = f[i];
    auto spec = detail::dft(buf);
    for (std::size_t k = 0; k < N; ++k) {
        // Signed frequency index; the Nyquist bin of an even-length DFT is dropped.
        const long kk = k <= N / 2 ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(N);
        double sgn = kk > 0 ? 1.0 : (kk < 0 ? -1.0 : 0.0);
        if (2 * k == N) sgn = 0.0;
        spec[k] *= cplx(0.0, kHilbertMultiplierSign * sgn);
    }
    const auto back = detail::dft(spec, true);

    std::vector<double> out(n);
    double max_re = 0.0, max_im = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = back[i].real() / static_cast<double>(N);
        max_re = std::max(max_re, std::abs(out[i]));
        max_im = std::max(max_im, std::abs(back[i].imag()) / static_cast<double>(N));
    }
    if (max_im > 1e-8 * std::max(max_re, std::numeric_limits<double>::min())) {
        throw std::runtime_error("hilbert_multiplier: imaginary residue above 1e-8 relative");
    }

    // Periodic kernel (1/Lp) cot(pi d/Lp) -> 1/(pi d): add the smooth difference.
    const double period = static_cast<double>(N) * h;
    const std::size_t K = n - 1;
    std::vector<double> corr(2 * K + 1);
    for (std::size_t m = 0; m <= 2 * K; ++m) {
        const double d = (static_cast<double>(m) - static_cast<double>(K)) * h;
        corr[m] = -(2.0 / period) * kernel_difference_closed(2.0 * pi * d / period);
    }
    const auto w = trapezoid_weights(g);
    std::vector<double> wf(n);
    for (std::size_t i = 0; i < n; ++i) wf[i] = w[i] * f[i];
    const auto c = detail::convolve_centered(wf, corr);
    for (std::size_t i = 0; i < n; ++i) out[i] += c[i];
    return SampledFunction(g, std::move(out), DecayClass::vanishing_at_infinity);
}

SampledFunction modified_hilbert(const SampledFunction& f, const PvConfig& cfg) {
    require_modified_input(f);
    const Grid& g = f.grid();
    if (resolve_pairing(cfg, Pairing::singularity_subtraction, g) == Pairing::singularity_subtraction) {
        return SampledFunction(g, subtraction_rule(f, true), DecayClass::bounded);
    }
    const auto v = f.values();
    double scale = 1.0;
    for (double y : v) scale = std::max(scale, std::abs(y));
    if (std::abs(v.front()) > 1e-12 * scale || std::abs(v.back()) > 1e-12 * scale) {
        throw std::invalid_argument("modified_hilbert: the half-offset rule needs zero endpoint values");
    }
    auto out = half_offset_rule(f, cfg);
    const double aug = augmentation(f) / pi;
    for (double& y : out) y += aug;
    return SampledFunction(g, std::move(out), DecayClass::bounded);
}

SampledFunction detail::modified_hilbert_direct(const SampledFunction& f) {
    require_modified_input(f);
    const Grid& g = f.grid();
    const std::size_t n = f.size();
    const auto v = f.values();
    const auto w = trapezoid_weights(g);
    const auto slope = central_slopes(v, g.h());
    const double aug = augmentation(f);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        double body = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            body += j == i ? -w[i] * slope[i] : w[j] * (v[j] - v[i]) / (g[i] - g[j]);
        }
        out[i] = (body + aug + boundary_terms(v[i], g[i], v.front(), v.back(), g.a(), g.b())) / pi;
    }
    return SampledFunction(g, std::move(out), DecayClass::bounded);
}

SampledFunction periodic_conjugate(const SampledFunction& f) {
    require_periodic_window(f, "periodic_conjugate");
    const std::size_t N = f.size() - 1;
    const auto v = f.values();
    const double dn = static_cast<double>(N);

    std::vector<double> c(N, 0.0);
    for (std::size_t m = 1; m < N; ++m) {
        const double x = pi * static_cast<double>(m) / dn;
        if (N % 2 == 0) {
            c[m] = m % 2 == 1 ? 2.0 / (dn * std::tan(x)) : 0.0;
        } else {
            const double alt = m % 2 == 1 ? -1.0 : 1.0;
            c[m] = (1.0 / std::tan(x) - alt / std::sin(x)) / dn;
        }
    }
    std::vector<double> out(N + 1);
    for (std::size_t i = 0; i < N; ++i) {
        double acc = 0.0;
        for (std::size_t m = 1; m < N; ++m) acc += c[m] * v[(i + N - m) % N];
        out[i] = acc;
    }
    out[N] = out[0];
    return SampledFunction(f.grid(), std::move(out), DecayClass::periodic);
}

SampledFunction periodic_conjugate_spectral(const SampledFunction& f) {
    require_periodic_window(f, "periodic_conjugate_spectral");
    const std::size_t N = f.size() - 1;
    std::vector<cplx> buf(N);
    for (std::size_t i = 0; i < N; ++i) buf[i] = f[i];
    auto spec = detail::dft(buf);
    for (std::size_t k = 0; k < N; ++k) {
        const long kk = 2 * k <= N ? static_cast<long>(k) : static_cast<long>(k) - static_cast<long>(N);
        double sgn = kk > 0 ? 1.0 : (kk < 0 ? -1.0 : 0.0);
        if (2 * k == N) sgn = 0.0;
        spec[k] *= cplx(0.0, kHilbertMultiplierSign * sgn);
    }
    const auto back = detail::dft(spec, true);
    std::vector<double> out(N + 1);
    for (std::size_t i = 0; i < N; ++i) out[i] = back[i].real() / static_cast<double>(N);
    out[N] = out[0];
    return SampledFunction(f.grid(), std::move(out), DecayClass::periodic);
}

double kernel_difference_closed(double t) {
    const double a = std::abs(t);
    double v;
    if (a == 0.0) {
        return 0.0;
    } else if (a < 1e-2) {
        const double a2 = a * a;
        v = -a / 12.0 - a * a2 / 720.0 - a * a2 * a2 / 30240.0;
    } else {
        v = 0.5 / std::tan(0.5 * a) - 1.0 / a;
    }
    return t < 0 ? -v : v;
}

KernelDifference kernel_difference(double t, long terms) {
    if (!std::isfinite(t) || std::abs(t) >= 2.0 * pi) {
        throw std::invalid_argument("kernel_difference requires |t| < 2 pi");
    }
    if (terms < 1) throw std::invalid_argument("kernel_difference needs at least one term");
    // Pairs k, -k combine to 2t/(t^2 - 4 k^2 pi^2); summed from the small end up.
    double sum = 0.0;
    for (long k = terms; k >= 1; --k) {
        const double kp = 2.0 * pi * static_cast<double>(k);
        sum += 2.0 * t / (t * t - kp * kp);
    }
    const bool near = std::abs(std::abs(t) - 2.0 * pi) < 1e-3;
    return {sum, kernel_difference_closed(t), near};
}

double hilbert_truncation_tail(const SampledFunction& f, double x) {
    const Grid& g = f.grid();
    switch (f.decay_class()) {
        case DecayClass::compact_support:
            return 0.0;
        case DecayClass::vanishing_at_infinity: {
            if (!(x > g.a() && x < g.b())) return std::numeric_limits<double>::infinity();
            // Mass beyond the window under a 1/t^2 model, over the distance to the edge.
            const double mass = std::abs(f.values().front()) * std::abs(g.a()) +
                                std::abs(f.values().back()) * std::abs(g.b());
            const double dist = std::min(x - g.a(), g.b() - x);
            return mass / (pi * dist);
        }
        default:
            return std::numeric_limits<double>::infinity();
    }
}

}  // namespace bvf
