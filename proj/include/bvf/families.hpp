#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bvf/grid.hpp"

namespace bvf {

/// Built-in analytic test families.
enum class Family {
    box,                     // height on |x-center| <= width/2 (closed), 0 elsewhere
    triangle,                // height*(1-|x-center|/(width/2))_+
    gaussian,                // exp(-(x-center)^2/(2 sigma^2)), peak 1
    poisson_kernel,          // scale/(pi(scale^2+x^2))
    conjugate_poisson,       // x/(pi(scale^2+x^2))
    raised_cosine,           // height*(1+cos(pi(x-center)/(width/2)))/2 on the support
    triangle_wave_periodic,  // height*(1-4|y|/period), y = x wrapped to [-period/2, period/2]
    smoothed_box,            // flat top of full width `width`, cosine ramps of length `ramp`
    smooth_step,             // tanh(x/scale)
    cosine,                  // cos(k*2*pi*x/period)
};

std::string_view to_string(Family f) noexcept;
Family parse_family(std::string_view name);

/// A family plus its named parameters. Missing parameters take defaults;
/// unknown names and non-positive scale parameters are rejected.
class FamilySpec {
public:
    explicit FamilySpec(Family family, std::map<std::string, double> params = {});

    Family family() const noexcept { return family_; }
    double param(const std::string& name) const;
    const std::map<std::string, double>& params() const noexcept { return params_; }

    double operator()(double x) const;

    /// Closed-form derivative where the family is differentiable at x.
    std::optional<double> derivative(double x) const;

    DecayClass decay_class() const noexcept;

    /// Points where the closed form or one of its first two derivatives jumps.
    std::vector<double> breakpoints() const;

    /// Largest |x - center| with nonzero value, for compactly supported families.
    std::optional<double> support_radius() const;

private:
    Family family_;
    std::map<std::string, double> params_;
};

/// Evaluates the family at every grid node and tags the decay class.
SampledFunction sample(const FamilySpec& spec, const Grid& grid);

}  // namespace bvf
