#include "bvf/families.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bvf {
namespace {

using std::numbers::pi;

struct ParamDefault {
    const char* name;
    double value;
    bool strictly_positive;
};

std::vector<ParamDefault> defaults_for(Family f) {
    switch (f) {
        case Family::box:
        case Family::triangle:
        case Family::raised_cosine:
            return {{"width", 2.0, true}, {"center", 0.0, false}, {"height", 1.0, false}};
        case Family::gaussian:
            return {{"sigma", 1.0, true}, {"center", 0.0, false}};
        case Family::poisson_kernel:
        case Family::conjugate_poisson:
            return {{"scale", 1.0, true}};
        case Family::triangle_wave_periodic:
            return {{"period", 2.0 * pi, true}, {"height", 1.0, false}};
        case Family::smoothed_box:
            return {{"width", 2.0, true}, {"ramp", 1.0, true}, {"center", 0.0, false}};
        case Family::smooth_step:
            return {{"scale", 1.0, true}};
        case Family::cosine:
            return {{"k", 1.0, false}, {"period", 2.0 * pi, true}};
    }
    return {};
}

double wrap(double x, double period) {
    double y = std::fmod(x, period);
    if (y > period / 2) y -= period;
    if (y < -period / 2) y += period;
    return y;
}

}  // namespace

std::string_view to_string(Family f) noexcept {
    switch (f) {
        case Family::box: return "box";
        case Family::triangle: return "triangle";
        case Family::gaussian: return "gaussian";
        case Family::poisson_kernel: return "poisson_kernel";
        case Family::conjugate_poisson: return "conjugate_poisson";
        case Family::raised_cosine: return "raised_cosine";
        case Family::triangle_wave_periodic: return "triangle_wave_periodic";
        case Family::smoothed_box: return "smoothed_box";
        case Family::smooth_step: return "smooth_step";
        case Family::cosine: return "cosine";
    }
    return "unknown";
}

Family parse_family(std::string_view name) {
    if (name == "box") return Family::box;
    if (name == "triangle") return Family::triangle;
    if (name == "gaussian") return Family::gaussian;
    if (name == "poisson_kernel" || name == "poisson") return Family::poisson_kernel;
    if (name == "conjugate_poisson") return Family::conjugate_poisson;
    if (name == "raised_cosine") return Family::raised_cosine;
    if (name == "triangle_wave_periodic" || name == "triangle_wave") return Family::triangle_wave_periodic;
    if (name == "smoothed_box") return Family::smoothed_box;
    if (name == "smooth_step") return Family::smooth_step;
    if (name == "cosine") return Family::cosine;
    throw std::invalid_argument("unknown family: " + std::string(name));
}

FamilySpec::FamilySpec(Family family, std::map<std::string, double> params) : family_(family) {
    const auto defs = defaults_for(family);
    for (const auto& [name, value] : params) {
        bool known = false;
        for (const auto& d : defs) known = known || name == d.name;
        if (!known) {
            throw std::invalid_argument("family " + std::string(to_string(family)) +
                                        " has no parameter '" + name + "'");
        }
        if (!std::isfinite(value)) {
            throw std::invalid_argument("parameter '" + name + "' must be finite");
        }
    }
    for (const auto& d : defs) {
        auto it = params.find(d.name);
        const double v = it == params.end() ? d.value : it->second;
        if (d.strictly_positive && !(v > 0.0)) {
            throw std::invalid_argument("parameter '" + std::string(d.name) + "' must be > 0");
        }
        params_[d.name] = v;
    }
    if (family == Family::cosine && std::round(params_["k"]) != params_["k"]) {
        throw std::invalid_argument("cosine frequency k must be an integer");
    }
}

double FamilySpec::param(const std::string& name) const {
    auto it = params_.find(name);
    if (it == params_.end()) throw std::invalid_argument("no parameter '" + name + "'");
    return it->second;
}

double FamilySpec::operator()(double x) const {
    const auto p = [this](const char* n) { return params_.at(n); };
    switch (family_) {
        case Family::box: {
            return std::abs(x - p("center")) <= p("width") / 2 ? p("height") : 0.0;
        }
        case Family::triangle: {
            const double r = 1.0 - std::abs(x - p("center")) / (p("width") / 2);
            return r > 0.0 ? p("height") * r : 0.0;
        }
        case Family::gaussian: {
            const double y = (x - p("center")) / p("sigma");
            return std::exp(-0.5 * y * y);
        }
        case Family::poisson_kernel: {
            const double a = p("scale");
            return a / (pi * (a * a + x * x));
        }
        case Family::conjugate_poisson: {
            const double a = p("scale");
            return x / (pi * (a * a + x * x));
        }
        case Family::raised_cosine: {
            const double hw = p("width") / 2;
            const double y = x - p("center");
            return std::abs(y) <= hw ? p("height") * 0.5 * (1.0 + std::cos(pi * y / hw)) : 0.0;
        }
        case Family::triangle_wave_periodic: {
            const double period = p("period");
            return p("height") * (1.0 - 4.0 * std::abs(wrap(x, period)) / period);
        }
        case Family::smoothed_box: {
            const double half = p("width") / 2;
            const double ramp = p("ramp");
            const double y = std::abs(x - p("center"));
            if (y <= half) return 1.0;
            if (y >= half + ramp) return 0.0;
            return 0.5 * (1.0 + std::cos(pi * (y - half) / ramp));
        }
        case Family::smooth_step:
            return std::tanh(x / p("scale"));
        case Family::cosine:
            return std::cos(p("k") * 2.0 * pi * x / p("period"));
    }
    return 0.0;
}

std::optional<double> FamilySpec::derivative(double x) const {
    const auto p = [this](const char* n) { return params_.at(n); };
    switch (family_) {
        case Family::gaussian: {
            const double s = p("sigma");
            const double y = x - p("center");
            return -y / (s * s) * std::exp(-0.5 * y * y / (s * s));
        }
        case Family::poisson_kernel: {
            const double a = p("scale");
            const double d = a * a + x * x;
            return -2.0 * a * x / (pi * d * d);
        }
        case Family::conjugate_poisson: {
            const double a = p("scale");
            const double d = a * a + x * x;
            return (a * a - x * x) / (pi * d * d);
        }
        case Family::raised_cosine: {
            const double hw = p("width") / 2;
            const double y = x - p("center");
            if (std::abs(y) >= hw) return 0.0;
            return -p("height") * 0.5 * (pi / hw) * std::sin(pi * y / hw);
        }
        case Family::smoothed_box: {
            const double half = p("width") / 2;
            const double ramp = p("ramp");
            const double y = x - p("center");
            const double ay = std::abs(y);
            if (ay <= half || ay >= half + ramp) return 0.0;
            const double sgn = y > 0 ? 1.0 : -1.0;
            return -sgn * 0.5 * (pi / ramp) * std::sin(pi * (ay - half) / ramp);
        }
        case Family::smooth_step: {
            const double s = p("scale");
            const double c = std::cosh(x / s);
            return 1.0 / (s * c * c);
        }
        case Family::cosine: {
            const double w = p("k") * 2.0 * pi / p("period");
            return -w * std::sin(w * x);
        }
        case Family::triangle: {
            const double hw = p("width") / 2;
            const double y = x - p("center");
            if (y == 0.0 || std::abs(y) == hw) return std::nullopt;
            if (std::abs(y) > hw) return 0.0;
            return y > 0 ? -p("height") / hw : p("height") / hw;
        }
        case Family::box: {
            const double hw = p("width") / 2;
            if (std::abs(std::abs(x - p("center")) - hw) == 0.0) return std::nullopt;
            return 0.0;
        }
        case Family::triangle_wave_periodic: {
            const double period = p("period");
            const double y = wrap(x, period);
            if (y == 0.0 || std::abs(y) == period / 2) return std::nullopt;
            return (y > 0 ? -4.0 : 4.0) * p("height") / period;
        }
    }
    return std::nullopt;
}

DecayClass FamilySpec::decay_class() const noexcept {
    switch (family_) {
        case Family::box:
        case Family::triangle:
        case Family::raised_cosine:
        case Family::smoothed_box:
            return DecayClass::compact_support;
        case Family::gaussian:
        case Family::poisson_kernel:
        case Family::conjugate_poisson:
            return DecayClass::vanishing_at_infinity;
        case Family::smooth_step:
            return DecayClass::bounded;
        case Family::triangle_wave_periodic:
        case Family::cosine:
            return DecayClass::periodic;
    }
    return DecayClass::bounded;
}

std::vector<double> FamilySpec::breakpoints() const {
    const auto p = [this](const char* n) { return params_.at(n); };
    switch (family_) {
        case Family::box:
        case Family::raised_cosine: {
            const double c = p("center"), hw = p("width") / 2;
            return {c - hw, c + hw};
        }
        case Family::triangle: {
            const double c = p("center"), hw = p("width") / 2;
            return {c - hw, c, c + hw};
        }
        case Family::smoothed_box: {
            const double c = p("center"), half = p("width") / 2, r = p("ramp");
            return {c - half - r, c - half, c + half, c + half + r};
        }
        default:
            return {};
    }
}

std::optional<double> FamilySpec::support_radius() const {
    switch (family_) {
        case Family::box:
        case Family::triangle:
        case Family::raised_cosine:
            return std::abs(params_.at("center")) + params_.at("width") / 2;
        case Family::smoothed_box:
            return std::abs(params_.at("center")) + params_.at("width") / 2 + params_.at("ramp");
        default:
            return std::nullopt;
    }
}

SampledFunction sample(const FamilySpec& spec, const Grid& grid) {
    const DecayClass decay = spec.decay_class();
    std::vector<double> v(grid.n());
    for (std::size_t i = 0; i < grid.n(); ++i) v[i] = spec(grid[i]);
    if (decay == DecayClass::periodic) {
        const double period = spec.param("period");
        if (std::abs(grid.length() - period) > 1e-12 * period) {
            throw std::invalid_argument("periodic family requires the grid to span one period");
        }
        v.back() = v.front();
    }
    return SampledFunction(grid, std::move(v), decay);
}

}  // namespace bvf
