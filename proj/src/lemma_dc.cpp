#include "bvf/lemma_dc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bvf/fourier.hpp"
#include "bvf/grid_ops.hpp"
#include "bvf/hilbert.hpp"

namespace bvf {
namespace {

using std::numbers::pi;

constexpr std::size_t kMedianWindow = 16;
constexpr double kJumpFactor = 10.0;
constexpr double kJumpFloor = 1e-3;
constexpr std::size_t kExclusion = 5;

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    return *mid;
}

}  // namespace

std::vector<std::size_t> detect_derivative_jumps(std::span<const double> fprime) {
    if (fprime.size() < 2) return {};
    std::vector<double> diff(fprime.size() - 1);
    for (std::size_t i = 0; i + 1 < fprime.size(); ++i) diff[i] = std::abs(fprime[i + 1] - fprime[i]);
    const double largest = *std::max_element(diff.begin(), diff.end());
    if (largest == 0.0) return {};

    std::vector<std::size_t> jumps;
    std::vector<double> window;
    for (std::size_t i = 0; i < diff.size(); ++i) {
        if (diff[i] <= kJumpFloor * largest) continue;
        window.clear();
        const std::size_t lo = i >= kMedianWindow ? i - kMedianWindow : 0;
        const std::size_t hi = std::min(diff.size() - 1, i + kMedianWindow);
        for (std::size_t j = lo; j <= hi; ++j) {
            if (j != i) window.push_back(diff[j]);
        }
        if (diff[i] > kJumpFactor * median(window)) jumps.push_back(i);
    }
    return jumps;
}

std::vector<std::size_t> lebesgue_nodes(const SampledFunction& fprime) {
    const std::size_t n = fprime.size();
    std::vector<bool> keep(n, false);
    const auto lo = static_cast<std::size_t>(std::ceil(0.1 * static_cast<double>(n - 1)));
    const auto hi = static_cast<std::size_t>(std::floor(0.9 * static_cast<double>(n - 1)));
    for (std::size_t i = lo; i <= hi && i < n; ++i) keep[i] = true;
    for (std::size_t j : detect_derivative_jumps(fprime.values())) {
        // Jump sits between nodes j and j+1.
        const std::size_t from = j >= kExclusion ? j - kExclusion : 0;
        const std::size_t to = std::min(n - 1, j + 1 + kExclusion);
        for (std::size_t k = from; k <= to; ++k) keep[k] = false;
    }
    std::vector<std::size_t> nodes;
    for (std::size_t i = 0; i < n; ++i) {
        if (keep[i]) nodes.push_back(i);
    }
    return nodes;
}

VerificationReport conjugate_derivative_defect(const SampledFunction& f, double bound) {
    require_real(f, "conjugate_derivative_defect");
    if (f.decay_class() != DecayClass::compact_support &&
        f.decay_class() != DecayClass::vanishing_at_infinity) {
        throw std::invalid_argument("conjugate_derivative_defect requires f vanishing at infinity");
    }
    const auto fprime = derivative(f);
    const auto nodes = lebesgue_nodes(fprime);
    if (nodes.empty()) {
        throw std::invalid_argument("conjugate_derivative_defect: no node away from jumps of f'");
    }
    const auto lhs = derivative(modified_hilbert(f));
    const auto rhs = hilbert_pv(fprime);
    double worst = 0.0;
    for (std::size_t i : nodes) worst = std::max(worst, std::abs(lhs[i] - rhs[i]));

    std::ostringstream notes;
    notes << "nodes=" << nodes.size();
    return VerificationReport::make("lemma_dc", worst, bound, f.size(), notes.str());
}

std::vector<double> ibp_consistency(const SampledFunction& f, double x,
                                    std::span<const double> deltas) {
    require_real(f, "ibp_consistency");
    const Grid& g = f.grid();
    const double h = g.h();
    const double pos = (x - g.a()) / h;
    const double ipos = std::round(pos);
    if (std::abs(pos - ipos) > 1e-9 || ipos <= 0.0 || ipos >= static_cast<double>(g.n() - 1)) {
        throw std::invalid_argument("ibp_consistency: x must be an interior grid node");
    }
    const auto i = static_cast<std::size_t>(ipos);
    const std::size_t n = g.n();
    const std::size_t J = std::min(i, n - 1 - i);  // symmetric half-width in nodes
    const double U = static_cast<double>(J) * h;
    const auto v = f.values();
    const double fx = v[i];

    for (std::size_t k = 0; k < deltas.size(); ++k) {
        if (!(deltas[k] >= h * (1.0 - 1e-12))) {
            throw std::invalid_argument("ibp_consistency: delta below grid resolution");
        }
        if (deltas[k] > U) throw std::invalid_argument("ibp_consistency: delta exceeds the window");
        if (k > 0 && !(deltas[k] < deltas[k - 1])) {
            throw std::invalid_argument("ibp_consistency: deltas must be strictly descending");
        }
    }

    // S_j = f(x - jh) + f(x + jh) - 2 f(x), smooth of order u^2 at 0.
    std::vector<double> S(J + 1);
    for (std::size_t j = 0; j <= J; ++j) S[j] = v[i - j] + v[i + j] - 2.0 * fx;
    auto s_at = [&](double u) {
        const double q = std::min(u / h, static_cast<double>(J));
        const auto j = std::min(static_cast<std::size_t>(q), J - 1);
        const double w = q - static_cast<double>(j);
        return (1.0 - w) * S[j] + w * S[j + 1];
    };

    // One-sided remainder beyond the symmetric window (f = 0 off the grid).
    double outer = 0.0;
    {
        std::vector<double> y;
        const bool right = (n - 1 - i) > i;
        const std::size_t from = right ? i + J : 0;
        const std::size_t to = right ? n - 1 : i - J;
        for (std::size_t t = from; t <= to; ++t) {
            const double d = g[t] - x;
            y.push_back(v[t] / (d * d));
        }
        for (std::size_t q = 0; q + 1 < y.size(); ++q) outer += 0.5 * h * (y[q] + y[q + 1]);
    }

    std::vector<double> out;
    out.reserve(deltas.size());
    for (double delta : deltas) {
        // int_delta^U S(u)/u^2 du: partial first panel, then whole panels.
        const double q = delta / h;
        auto first = static_cast<std::size_t>(std::ceil(q - 1e-12));
        first = std::min(first, J);
        double acc = 0.0;
        const double s_delta = s_at(delta);
        const double start = static_cast<double>(first) * h;
        if (start > delta) {
            const double y0 = s_delta / (delta * delta);
            const double y1 = S[first] / (start * start);
            acc += 0.5 * (start - delta) * (y0 + y1);
        }
        for (std::size_t j = first; j < J; ++j) {
            const double u0 = static_cast<double>(j) * h;
            const double u1 = u0 + h;
            acc += 0.5 * h * (S[j] / (u0 * u0) + S[j + 1] / (u1 * u1));
        }
        const double bracket = s_delta / delta - acc + 2.0 * fx / U - outer;
        out.push_back(bracket / pi);
    }
    return out;
}

std::string_view to_string(GrowthClass c) noexcept {
    switch (c) {
        case GrowthClass::integrable_plateau: return "integrable-plateau";
        case GrowthClass::log_divergent: return "log-divergent";
        case GrowthClass::inconclusive: return "inconclusive";
    }
    return "unknown";
}

LogFit fit_log_slope(std::span<const double> cutoffs, std::span<const double> values) {
    if (cutoffs.size() != values.size() || cutoffs.size() < 2) {
        throw std::invalid_argument("fit_log_slope needs matching series of length >= 2");
    }
    const double n = static_cast<double>(cutoffs.size());
    double sx = 0, sy = 0;
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        sx += std::log(cutoffs[i]);
        sy += values[i];
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0, syy = 0;
    for (std::size_t i = 0; i < cutoffs.size(); ++i) {
        const double dx = std::log(cutoffs[i]) - mx;
        const double dy = values[i] - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    LogFit fit;
    fit.slope = sxx > 0 ? sxy / sxx : 0.0;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = (sxx > 0 && syy > 0) ? (sxy * sxy) / (sxx * syy) : 0.0;
    return fit;
}

HardyLittlewoodVerdict hardy_littlewood_verdict(const SampledFunction& f,
                                                std::span<const double> cutoffs) {
    require_real(f, "hardy_littlewood_verdict");
    if (cutoffs.size() < 4) {
        throw std::invalid_argument("hardy_littlewood_verdict needs at least 4 cutoffs");
    }
    if (f.decay_class() != DecayClass::compact_support &&
        f.decay_class() != DecayClass::vanishing_at_infinity) {
        throw std::invalid_argument("hardy_littlewood_verdict requires f vanishing at infinity");
    }
    HardyLittlewoodVerdict v;
    v.cutoffs.assign(cutoffs.begin(), cutoffs.end());
    v.tv_f = total_variation(f);
    v.tv_conjugate = total_variation(modified_hilbert(f));
    v.l1 = l1_norm_ft(f, cutoffs);

    const double prev = v.l1[v.l1.size() - 2];
    const double last = v.l1.back();
    v.final_growth = prev > 0.0 ? (last - prev) / prev : (last > 0.0 ? 1.0 : 0.0);
    v.fit = fit_log_slope(cutoffs, v.l1);
    v.half_line_slope = 0.5 * v.fit.slope;
    if (v.final_growth <= 0.01) {
        v.classification = GrowthClass::integrable_plateau;
    } else if (v.fit.r_squared >= 0.99) {
        v.classification = GrowthClass::log_divergent;
    }

    std::ostringstream notes;
    notes << "class=" << to_string(v.classification) << " tv_f=" << v.tv_f
          << " tv_conjugate=" << v.tv_conjugate << " slope=" << v.fit.slope
          << " r2=" << v.fit.r_squared;
    v.report = VerificationReport::make("hardy_littlewood", v.final_growth, 0.01, f.size(), notes.str());
    return v;
}

}  // namespace bvf
