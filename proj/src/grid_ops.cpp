#include "bvf/grid_ops.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bvf {

double total_variation(const SampledFunction& f) {
    double tv = 0.0;
    for (std::size_t i = 0; i + 1 < f.size(); ++i) {
        tv += std::abs(f.complex_at(i + 1) - f.complex_at(i));
    }
    return tv;
}

SampledFunction derivative(const SampledFunction& f) {
    require_real(f, "derivative");
    const std::size_t n = f.size();
    if (n < 3) throw std::invalid_argument("derivative needs at least 3 samples");
    const double h = f.grid().h();
    const auto v = f.values();
    std::vector<double> d(n);
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    d.front() = (v[1] - v[0]) / h;
    d.back() = (v[n - 1] - v[n - 2]) / h;

    DecayClass decay = f.decay_class();
    if (decay == DecayClass::periodic) {
        // Wrap-around central difference keeps the closure invariant.
        const double wrapped = (v[1] - v[n - 2]) / (2.0 * h);
        d.front() = d.back() = wrapped;
    } else if (decay == DecayClass::compact_support) {
        // One-sided differences at the ends need not vanish on coarse grids.
        if (d.front() != 0.0 || d.back() != 0.0) decay = DecayClass::vanishing_at_infinity;
    }
    return SampledFunction(f.grid(), std::move(d), decay);
}

double lebesgue_point_defect(const SampledFunction& f, double x, double t) {
    require_real(f, "lebesgue_point_defect");
    const Grid& g = f.grid();
    if (t == 0.0 || !std::isfinite(t)) throw std::invalid_argument("window length must be nonzero");
    if (!g.contains(x) || !g.contains(x + t)) {
        throw std::out_of_range("lebesgue_point_defect window leaves the grid");
    }
    const double lo = std::max(g.a(), std::min(x, x + t));
    const double hi = std::min(g.b(), std::max(x, x + t));
    const double fx = f.interpolate(x);

    // Nodes strictly inside (lo, hi), bracketed by the interpolated ends.
    std::vector<double> us{lo};
    const double h = g.h();
    auto first = static_cast<std::size_t>(std::max(0.0, std::floor((lo - g.a()) / h) + 1));
    for (std::size_t i = first; i < g.n() && g[i] < hi; ++i) {
        if (g[i] > lo) us.push_back(g[i]);
    }
    us.push_back(hi);

    double acc = 0.0;
    double prev = std::abs(f.interpolate(us[0]) - fx);
    for (std::size_t k = 1; k < us.size(); ++k) {
        const double cur = std::abs(f.interpolate(us[k]) - fx);
        acc += 0.5 * (us[k] - us[k - 1]) * (prev + cur);
        prev = cur;
    }
    return acc / std::abs(t);
}

std::vector<double> trapezoid_weights(const Grid& grid) {
    std::vector<double> w(grid.n(), grid.h());
    w.front() = w.back() = 0.5 * grid.h();
    return w;
}

double trapezoid(const Grid& grid, std::span<const double> values) {
    if (values.size() != grid.n()) throw std::invalid_argument("trapezoid: size mismatch");
    double acc = 0.0;
    for (std::size_t i = 1; i + 1 < values.size(); ++i) acc += values[i];
    acc += 0.5 * (values.front() + values.back());
    return acc * grid.h();
}

double integral(const SampledFunction& f) {
    require_real(f, "integral");
    return trapezoid(f.grid(), f.values());
}

double l1_norm(const SampledFunction& f) {
    std::vector<double> a(f.size());
    for (std::size_t i = 0; i < f.size(); ++i) a[i] = std::abs(f.complex_at(i));
    return trapezoid(f.grid(), a);
}

}  // namespace bvf
