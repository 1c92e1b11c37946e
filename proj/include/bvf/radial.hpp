#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bvf/families.hpp"
#include "bvf/grid.hpp"

namespace bvf {

/// Profile f0 of a radial function f(x) = f0(|x|) in dimension dim, sampled
/// on [0, R]. f0 is taken to vanish beyond R.
///
/// A profile built from a family keeps the closed form, which the
/// quadratures use in place of the linear interpolant of the samples.
class RadialProfile {
public:
    RadialProfile(SampledFunction f0, int dim);
    static RadialProfile from_family(const FamilySpec& spec, const Grid& grid, int dim);

    const SampledFunction& f0() const noexcept { return f0_; }
    const Grid& grid() const noexcept { return f0_.grid(); }
    int dim() const noexcept { return dim_; }
    double radius() const noexcept { return f0_.grid().b(); }

    /// f0(s): closed form when known, linear interpolant otherwise, 0 past R.
    double value(double s) const;

    /// Points in (0, R) where f0 is not smooth.
    const std::vector<double>& breakpoints() const noexcept { return breaks_; }

private:
    SampledFunction f0_;
    int dim_;
    std::function<double(double)> exact_;
    std::vector<double> breaks_;
};

/// I(t) on the profile grid, with the number of numerical derivatives whose
/// estimated noise stays below 1% of their size.
struct FractionalIntegral {
    SampledFunction samples;
    int dim;
    int derivative_order_available;
};

/// int_0^R |f0(t)| t^(n-1) / (1+t)^((n-1)/2) dt by the trapezoid rule.
double cosa_condition(const RadialProfile& p);

/// I(t) = 2/Gamma((n-1)/2) int_t^R s f0(s) (s^2-t^2)^((n-3)/2) ds, computed
/// as 2/Gamma((n-1)/2) int_0^sqrt(R^2-t^2) u^(n-2) f0(sqrt(t^2+u^2)) du with
/// composite Gauss-Legendre panels split at the profile breakpoints.
/// Requires dim >= 2.
FractionalIntegral fractional_integral(const RadialProfile& p);

/// f^(r) = 2 pi^((n-1)/2) int_0^R I(t) cos(r t) dt by the trapezoid rule;
/// for dim 1, 2 int_0^R f0(t) cos(r t) dt. r = 0 is allowed.
std::vector<double> radial_ft_leray(const RadialProfile& p, std::span<const double> radii);

/// The (n-1)-fold integrated-by-parts form
///   2 pi^((n-1)/2) (-1)^(n-1) r^(1-n) int_0^R I^(n-1)(t) cos(pi(n-1)/2 - r t) dt.
/// Throws if an integrated term would not vanish: I^(k)(0) for odd k, or
/// I^(k)(R) for any k, exceeding 1e-6 of the size of I^(k), k < n-1.
/// Radii below 0.1 fall back to radial_ft_leray.
std::vector<double> radial_ft_ibp(const RadialProfile& p, std::span<const double> radii);

/// Bessel route: (2 pi)^(n/2) r^(1-n/2) int_0^R f0(s) J_(n/2-1)(s r) s^(n/2) ds.
std::vector<double> radial_ft_oracle(const RadialProfile& p, std::span<const double> radii);

/// Surface area of the unit sphere in R^n.
double unit_sphere_area(int n);

namespace detail {

/// Composite 8-point Gauss-Legendre over [a, b], split at the given points,
/// with about `panels` panels in total.
double gauss_legendre(const std::function<double(double)>& g, double a, double b,
                      std::span<const double> splits, int panels);

}  // namespace detail

}  // namespace bvf
