#include "bvf/fourier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bvf/detail/fft.hpp"
#include "bvf/grid_ops.hpp"
#include "bvf/hilbert.hpp"

namespace bvf {
namespace {

using std::numbers::pi;
using detail::cplx;

void check_transform_args(double cutoff, std::size_t m) {
    if (!(cutoff > 0.0) || !std::isfinite(cutoff)) throw std::invalid_argument("cutoff must be > 0");
    if (m < 2) throw std::invalid_argument("need at least 2 frequency samples");
}

std::vector<cplx> weighted_samples(const SampledFunction& f) {
    const auto w = trapezoid_weights(f.grid());
    std::vector<cplx> x(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) x[i] = w[i] * f.complex_at(i);
    return x;
}

void symmetrize(std::vector<cplx>& v) {
    const std::size_t m = v.size();
    for (std::size_t k = 0; k < (m + 1) / 2; ++k) {
        const std::size_t r = m - 1 - k;
        const cplx s = 0.5 * (v[k] + std::conj(v[r]));
        v[k] = s;
        v[r] = std::conj(s);
    }
}

void require_periodic(const SampledFunction& f, const char* op) {
    require_real(f, op);
    if (f.decay_class() != DecayClass::periodic) {
        throw std::invalid_argument(std::string(op) + " requires a periodic function");
    }
}

}  // namespace

TransformResult fourier_transform(const SampledFunction& f, double cutoff, std::size_t m) {
    check_transform_args(cutoff, m);
    const Grid freq = Grid::uniform(-cutoff, cutoff, m);
    const Grid& g = f.grid();
    auto values = detail::chirp_z(weighted_samples(f), g.a(), g.h(), -cutoff, freq.h(), m);
    if (f.is_real()) symmetrize(values);
    return {freq, std::move(values), cutoff, g.a(), g.b()};
}

TransformResult detail::fourier_transform_direct(const SampledFunction& f, double cutoff,
                                                 std::size_t m) {
    check_transform_args(cutoff, m);
    const Grid freq = Grid::uniform(-cutoff, cutoff, m);
    const Grid& g = f.grid();
    const auto x = weighted_samples(f);
    std::vector<cplx> values(m);
    for (std::size_t k = 0; k < m; ++k) {
        const double t = freq[k];
        cplx acc = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j) acc += x[j] * std::polar(1.0, -t * g[j]);
        values[k] = acc;
    }
    return {freq, std::move(values), cutoff, g.a(), g.b()};
}

double default_cutoff(const Grid& grid) { return pi / grid.h(); }

double default_frequency_spacing(const Grid& grid) { return pi / grid.length(); }

std::size_t frequency_count(double cutoff, double spacing) {
    if (!(spacing > 0.0)) throw std::invalid_argument("frequency spacing must be > 0");
    const auto half = static_cast<std::size_t>(std::ceil(cutoff / spacing - 1e-9));
    return 2 * std::max<std::size_t>(half, 1) + 1;
}

std::vector<double> l1_norm_ft(const SampledFunction& f, std::span<const double> cutoffs) {
    if (cutoffs.empty()) throw std::invalid_argument("l1_norm_ft needs at least one cutoff");
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        if (!(cutoffs[i] > 0.0)) throw std::invalid_argument("cutoffs must be positive");
        if (i > 0 && cutoffs[i] < cutoffs[i - 1]) throw std::invalid_argument("cutoffs must be ascending");
    }
    const double tmax = cutoffs.back();
    if (tmax > default_cutoff(f.grid()) * (1.0 + 1e-12)) {
        throw std::invalid_argument("l1_norm_ft: cutoff above the Nyquist frequency pi/h");
    }
    const std::size_t m = std::max<std::size_t>(frequency_count(tmax, default_frequency_spacing(f.grid())), 129);
    const auto ft = fourier_transform(f, tmax, m);
    const std::size_t M = (m - 1) / 2;
    const double dt = tmax / static_cast<double>(M);

    // |F| on each half-line, index q = distance from t = 0 in spacings.
    std::vector<double> pos(M + 1), neg(M + 1);
    for (std::size_t q = 0; q <= M; ++q) {
        pos[q] = std::abs(ft.values[M + q]);
        neg[q] = std::abs(ft.values[M - q]);
    }
    auto half_integral = [&](const std::vector<double>& y, double T) {
        const double s = std::min(T / dt, static_cast<double>(M));
        const auto full = std::min(static_cast<std::size_t>(s), M);
        double acc = 0.0;
        for (std::size_t q = 0; q < full; ++q) acc += 0.5 * dt * (y[q] + y[q + 1]);
        if (full < M) {
            const double frac = s - static_cast<double>(full);
            const double yT = y[full] + frac * (y[full + 1] - y[full]);
            acc += 0.5 * frac * dt * (y[full] + yT);
        }
        return acc;
    };
    std::vector<double> out(cutoffs.size());
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        out[i] = half_integral(pos, cutoffs[i]) + half_integral(neg, cutoffs[i]);
        if (i > 0) out[i] = std::max(out[i], out[i - 1]);
    }
    return out;
}

H1Report h1_report(const SampledFunction& g) {
    require_real(g, "h1_report");
    H1Report r;
    r.l1_norm = l1_norm(g);
    r.hilbert_l1_norm = l1_norm(hilbert_multiplier(g));
    r.h1_norm = r.l1_norm + r.hilbert_l1_norm;
    r.cancellation_residual = std::abs(integral(g));
    return r;
}

HardyMeasurement hardy_measure(const SampledFunction& g, double cutoff) {
    HardyMeasurement out;
    out.h1 = h1_report(g);
    if (out.h1.cancellation_residual > 1e-6 * out.h1.l1_norm) {
        std::ostringstream msg;
        msg << "hardy_check: |int g| = " << out.h1.cancellation_residual
            << " violates the cancellation precondition";
        throw std::invalid_argument(msg.str());
    }
    const std::size_t m = frequency_count(cutoff, default_frequency_spacing(g.grid()));
    const auto ft = fourier_transform(g, cutoff, m);
    const std::size_t M = (m - 1) / 2;
    const double dt = cutoff / static_cast<double>(M);
    out.frequency_spacing = dt;

    double lhs = 0.0;
    if (M >= 2) {
        for (std::size_t q = 1; q <= M; ++q) {
            const double t = dt * static_cast<double>(q);
            const double w = (q == 1 || q == M) ? 0.5 * dt : dt;
            lhs += w * (std::abs(ft.values[M + q]) + std::abs(ft.values[M - q])) / t;
        }
    }
    out.lhs = lhs;
    out.rhs = out.h1.h1_norm;
    out.empirical_constant = out.rhs > 0.0 ? out.lhs / out.rhs : 0.0;
    return out;
}

VerificationReport hardy_check(const SampledFunction& g, double cutoff, double constant, double tol) {
    const auto hm = hardy_measure(g, cutoff);
    std::ostringstream notes;
    notes << "rhs=" << hm.rhs << " ratio=" << hm.empirical_constant << " constant=" << constant;
    return VerificationReport::make("hardy_inequality", hm.lhs, constant * hm.rhs * (1.0 + tol),
                                    g.size(), notes.str());
}

double derivative_ft_identity(const SampledFunction& f, double cutoff, std::size_t m) {
    require_real(f, "derivative_ft_identity");
    if (f.decay_class() != DecayClass::compact_support) {
        throw std::invalid_argument("derivative_ft_identity requires compact support");
    }
    if (m == 0) m = frequency_count(cutoff, default_frequency_spacing(f.grid()));
    const auto ff = fourier_transform(f, cutoff, m);
    const auto fd = fourier_transform(derivative(f), cutoff, m);
    double worst = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
        const double t = ff.freq_grid[k];
        const cplx expected = cplx(0.0, t) * ff.values[k];
        worst = std::max(worst, std::abs(fd.values[k] - expected) / (1.0 + std::abs(t * ff.values[k])));
    }
    return worst;
}

CoefficientSeries fourier_coefficients(const SampledFunction& f, int kmax) {
    require_periodic(f, "fourier_coefficients");
    const std::size_t N = f.size() - 1;
    if (kmax < 1) throw std::invalid_argument("kmax must be positive");
    if (2 * static_cast<std::size_t>(kmax) >= N) {
        throw std::invalid_argument("kmax must be below N/2 to avoid aliasing");
    }
    std::vector<cplx> buf(N);
    for (std::size_t i = 0; i < N; ++i) buf[i] = f[i];
    const auto spec = detail::dft(buf);

    CoefficientSeries s;
    s.kmax = kmax;
    s.coeffs.resize(2 * static_cast<std::size_t>(kmax) + 1);
    const double a = f.grid().a();
    for (int k = -kmax; k <= kmax; ++k) {
        const std::size_t idx = k >= 0 ? static_cast<std::size_t>(k) : N - static_cast<std::size_t>(-k);
        // Shift the DFT origin from x_0 = a to x = 0.
        s.coeffs[static_cast<std::size_t>(k + kmax)] =
            spec[idx] * std::polar(1.0, -static_cast<double>(k) * a) / static_cast<double>(N);
    }
    s.abs_partial_sums.resize(static_cast<std::size_t>(kmax) + 1);
    double acc = std::abs(s.at(0));
    s.abs_partial_sums[0] = acc;
    for (int k = 1; k <= kmax; ++k) {
        acc += std::abs(s.at(k)) + std::abs(s.at(-k));
        s.abs_partial_sums[static_cast<std::size_t>(k)] = acc;
    }
    return s;
}

double conjugate_coefficient_check(const SampledFunction& f, int kmax) {
    const auto c = fourier_coefficients(f, kmax);
    const auto ct = fourier_coefficients(periodic_conjugate(f), kmax);
    double worst = 0.0;
    for (int k = 1; k <= kmax; ++k) {
        worst = std::max(worst, std::abs(std::abs(ct.at(k)) - std::abs(c.at(k))));
        worst = std::max(worst, std::abs(std::abs(ct.at(-k)) - std::abs(c.at(-k))));
    }
    return worst;
}

}  // namespace bvf
