#include "bvf/radial.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "bvf/grid_ops.hpp"

namespace bvf {
namespace {

using std::numbers::pi;

constexpr std::array<double, 4> kGlNodes = {0.1834346424956498, 0.5255324099163290,
                                            0.7966664774136267, 0.9602898564975363};
constexpr std::array<double, 4> kGlWeights = {0.3626837833783620, 0.3137066458778873,
                                              0.2223810344533745, 0.1012285362903763};

constexpr int kPanels = 128;
constexpr int kMaxDerivative = 8;
constexpr double kIbpRadiusFloor = 0.1;
constexpr double kBoundaryTol = 1e-6;

void require_radii(std::span<const double> radii) {
    if (radii.empty()) throw std::invalid_argument("radial transform needs at least one radius");
    for (double r : radii) {
        if (!(r >= 0.0) || !std::isfinite(r)) {
            throw std::invalid_argument("radii must be finite and nonnegative");
        }
    }
}

double trapezoid_cos(const Grid& g, std::span<const double> v, double r, double phase = 0.0) {
    const auto w = trapezoid_weights(g);
    double acc = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) acc += w[i] * v[i] * std::cos(phase - r * g[i]);
    return acc;
}

// Central differences on the even extension of v about t = 0, one-sided at R.
std::vector<double> even_derivative(std::span<const double> v, double h) {
    const std::size_t n = v.size();
    std::vector<double> d(n);
    if (n < 3) throw std::invalid_argument("profile grid too small");
    for (std::size_t i = 1; i + 1 < n; ++i) d[i] = (v[i + 1] - v[i - 1]) / (2.0 * h);
    d[0] = 0.0;  // placeholder, fixed by parity below
    d[n - 1] = (v[n - 1] - v[n - 2]) / h;
    return d;
}

struct Derivatives {
    std::vector<std::vector<double>> d;  // d[k] = I^(k)
};

// Iterated derivatives of the even function I. Odd orders are odd functions
// and vanish at 0 on the extension; even orders reuse the reflected stencil.
Derivatives iterate(std::span<const double> I, double h, int order) {
    Derivatives out;
    out.d.emplace_back(I.begin(), I.end());
    for (int k = 1; k <= order; ++k) {
        const auto& prev = out.d.back();
        auto next = even_derivative(prev, h);
        if (k % 2 == 1) {
            next[0] = 0.0;
        } else {
            // prev is odd: prev(-h) = -prev(h).
            next[0] = prev[1] / h;
        }
        out.d.push_back(std::move(next));
    }
    return out;
}

double max_abs(std::span<const double> v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

int available_order(std::span<const double> I, double h) {
    const double floor0 = 1e-13 * std::max(max_abs(I), 1e-300);
    const auto ders = iterate(I, h, kMaxDerivative);
    int avail = 0;
    for (int k = 1; k <= kMaxDerivative; ++k) {
        const double noise = floor0 * std::pow(1.0 / h, k);
        const double scale = max_abs(ders.d[static_cast<std::size_t>(k)]);
        if (scale == 0.0 || noise > 0.01 * scale) break;
        avail = k;
    }
    if (max_abs(I) == 0.0) avail = kMaxDerivative;
    return avail;
}

// Second-order one-sided estimate of d/dt of v at t = 0.
double one_sided_at_zero(std::span<const double> v, double h) {
    return (-3.0 * v[0] + 4.0 * v[1] - v[2]) / (2.0 * h);
}

}  // namespace

RadialProfile::RadialProfile(SampledFunction f0, int dim) : f0_(std::move(f0)), dim_(dim) {
    if (dim_ < 1) throw std::invalid_argument("radial profile dimension must be >= 1");
    if (f0_.grid().a() != 0.0) throw std::invalid_argument("radial profile grid must start at 0");
    require_real(f0_, "RadialProfile");
}

RadialProfile RadialProfile::from_family(const FamilySpec& spec, const Grid& grid, int dim) {
    std::vector<double> v(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) v[i] = spec(grid[i]);
    RadialProfile p(SampledFunction(grid, std::move(v), DecayClass::vanishing_at_infinity), dim);
    p.exact_ = [spec](double s) { return spec(s); };
    for (double c : spec.breakpoints()) {
        if (c > 0.0 && c < grid.b()) p.breaks_.push_back(c);
    }
    std::sort(p.breaks_.begin(), p.breaks_.end());
    p.breaks_.erase(std::unique(p.breaks_.begin(), p.breaks_.end()), p.breaks_.end());
    return p;
}

double RadialProfile::value(double s) const {
    if (s > radius()) return 0.0;
    if (exact_) return exact_(s);
    return f0_.interpolate(std::max(s, 0.0));
}

double unit_sphere_area(int n) {
    return 2.0 * std::pow(pi, 0.5 * n) / std::tgamma(0.5 * n);
}

double cosa_condition(const RadialProfile& p) {
    const Grid& g = p.grid();
    const double e = 0.5 * (p.dim() - 1);
    std::vector<double> y(g.n());
    for (std::size_t i = 0; i < g.n(); ++i) {
        const double t = g[i];
        y[i] = std::abs(p.f0()[i]) * std::pow(t, p.dim() - 1) / std::pow(1.0 + t, e);
    }
    return trapezoid(g, y);
}

double detail::gauss_legendre(const std::function<double(double)>& g, double a, double b,
                              std::span<const double> splits, int panels) {
    if (!(b > a)) return 0.0;
    std::vector<double> cuts{a};
    for (double c : splits) {
        if (c > a && c < b) cuts.push_back(c);
    }
    cuts.push_back(b);
    const double total = b - a;
    double acc = 0.0;
    for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
        const double lo = cuts[s], hi = cuts[s + 1];
        const int m = std::max(4, static_cast<int>(std::ceil(panels * (hi - lo) / total)));
        const double w = (hi - lo) / m;
        for (int q = 0; q < m; ++q) {
            const double mid = lo + (q + 0.5) * w;
            const double half = 0.5 * w;
            double panel = 0.0;
            for (std::size_t k = 0; k < kGlNodes.size(); ++k) {
                panel += kGlWeights[k] * (g(mid - half * kGlNodes[k]) + g(mid + half * kGlNodes[k]));
            }
            acc += half * panel;
        }
    }
    return acc;
}

FractionalIntegral fractional_integral(const RadialProfile& p) {
    const int n = p.dim();
    if (n < 2) throw std::invalid_argument("fractional_integral requires dim >= 2");
    const Grid& g = p.grid();
    const double R = p.radius();
    const double c = 2.0 / std::tgamma(0.5 * (n - 1));

    std::vector<double> I(g.n(), 0.0);
    std::vector<double> usplits;
    for (std::size_t i = 0; i < g.n(); ++i) {
        const double t = g[i];
        const double umax = std::sqrt(std::max(R * R - t * t, 0.0));
        if (umax == 0.0) continue;
        usplits.clear();
        for (double s : p.breakpoints()) {
            if (s > t) usplits.push_back(std::sqrt(s * s - t * t));
        }
        const double t2 = t * t;
        auto integrand = [&](double u) {
            return std::pow(u, n - 2) * p.value(std::sqrt(t2 + u * u));
        };
        I[i] = c * detail::gauss_legendre(integrand, 0.0, umax, usplits, kPanels);
    }
    // Exact zero past the support, whatever the quadrature rounding.
    const auto& f0 = p.f0().values();
    std::size_t last = f0.size();
    while (last > 0 && f0[last - 1] == 0.0) --last;
    if (last < f0.size()) {
        const double support = last == 0 ? 0.0 : g[last];
        for (std::size_t i = 0; i < g.n(); ++i) {
            if (g[i] >= support) I[i] = 0.0;
        }
    }
    const int avail = available_order(I, g.h());
    return {SampledFunction(g, std::move(I), DecayClass::vanishing_at_infinity), n, avail};
}

std::vector<double> radial_ft_leray(const RadialProfile& p, std::span<const double> radii) {
    require_radii(radii);
    std::vector<double> out;
    out.reserve(radii.size());
    if (p.dim() == 1) {
        for (double r : radii) out.push_back(2.0 * trapezoid_cos(p.grid(), p.f0().values(), r));
        return out;
    }
    const auto I = fractional_integral(p);
    const double pref = 2.0 * std::pow(pi, 0.5 * (p.dim() - 1));
    for (double r : radii) out.push_back(pref * trapezoid_cos(p.grid(), I.samples.values(), r));
    return out;
}

std::vector<double> radial_ft_ibp(const RadialProfile& p, std::span<const double> radii) {
    require_radii(radii);
    const int n = p.dim();
    if (n == 1) return radial_ft_leray(p, radii);

    const auto I = fractional_integral(p);
    if (I.derivative_order_available < n - 1) {
        std::ostringstream msg;
        msg << "radial_ft_ibp: only " << I.derivative_order_available
            << " numerical derivatives of I are reliable, need " << n - 1;
        throw std::invalid_argument(msg.str());
    }
    const double h = p.grid().h();
    const auto ders = iterate(I.samples.values(), h, n - 1);
    for (int k = 0; k < n - 1; ++k) {
        const auto& dk = ders.d[static_cast<std::size_t>(k)];
        const double scale = std::max(max_abs(ders.d[static_cast<std::size_t>(k + 1)]) * p.radius(),
                                      max_abs(dk));
        if (k % 2 == 1) {
            const double at0 = one_sided_at_zero(ders.d[static_cast<std::size_t>(k - 1)], h);
            if (std::abs(at0) > kBoundaryTol * scale) {
                std::ostringstream msg;
                msg << "radial_ft_ibp: I^(" << k << ")(0) = " << at0 << " does not vanish";
                throw std::invalid_argument(msg.str());
            }
        }
        if (std::abs(dk.back()) > kBoundaryTol * scale) {
            std::ostringstream msg;
            msg << "radial_ft_ibp: I^(" << k << ")(R) = " << dk.back() << " does not vanish";
            throw std::invalid_argument(msg.str());
        }
    }

    const auto& top = ders.d.back();
    const double pref = 2.0 * std::pow(pi, 0.5 * (n - 1)) * ((n - 1) % 2 == 0 ? 1.0 : -1.0);
    const double phase = 0.5 * pi * (n - 1);
    std::vector<double> out;
    out.reserve(radii.size());
    for (double r : radii) {
        if (r < kIbpRadiusFloor) {
            const double one[1] = {r};
            out.push_back(radial_ft_leray(p, one).front());
            continue;
        }
        out.push_back(pref * std::pow(r, 1 - n) * trapezoid_cos(p.grid(), top, r, phase));
    }
    return out;
}

std::vector<double> radial_ft_oracle(const RadialProfile& p, std::span<const double> radii) {
    require_radii(radii);
    const int n = p.dim();
    const double nu = 0.5 * n - 1.0;
    const double R = p.radius();
    std::vector<double> out;
    out.reserve(radii.size());
    for (double r : radii) {
        if (r == 0.0) {
            auto g = [&](double s) { return p.value(s) * std::pow(s, n - 1); };
            out.push_back(unit_sphere_area(n) *
                          detail::gauss_legendre(g, 0.0, R, p.breakpoints(), kPanels));
            continue;
        }
        auto bessel = [&](double x) {
            if (nu < 0.0) return std::sqrt(2.0 / (pi * x)) * std::cos(x);  // J_(-1/2)
            return std::cyl_bessel_j(nu, x);
        };
        auto g = [&](double s) {
            if (s == 0.0) return 0.0;
            return p.value(s) * bessel(s * r) * std::pow(s, 0.5 * n);
        };
        const int panels = std::max(kPanels, static_cast<int>(std::ceil(2.0 * r * R)));
        const double integral = detail::gauss_legendre(g, 0.0, R, p.breakpoints(), panels);
        out.push_back(std::pow(2.0 * pi, 0.5 * n) * std::pow(r, 1.0 - 0.5 * n) * integral);
    }
    return out;
}

}  // namespace bvf
