#include "bvf/grid.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace bvf {

Grid::Grid(double a, double b, std::size_t n)
    : a_(a), b_(b), n_(n), h_((b - a) / static_cast<double>(n - 1)) {}

Grid Grid::uniform(double a, double b, std::size_t n) {
    if (!std::isfinite(a) || !std::isfinite(b)) {
        throw std::invalid_argument("grid endpoints must be finite");
    }
    if (!(a < b)) {
        throw std::invalid_argument("grid requires a < b");
    }
    if (n < 2) {
        throw std::invalid_argument("grid requires at least 2 nodes");
    }
    return Grid(a, b, n);
}

Grid make_uniform_grid(double a, double b, std::size_t n) { return Grid::uniform(a, b, n); }

std::vector<double> Grid::points() const {
    std::vector<double> x(n_);
    for (std::size_t i = 0; i < n_; ++i) x[i] = (*this)[i];
    return x;
}

bool Grid::contains(double x) const noexcept {
    const double slack = 8.0 * std::numeric_limits<double>::epsilon() *
                         std::max({1.0, std::abs(a_), std::abs(b_)});
    return x >= a_ - slack && x <= b_ + slack;
}

std::string_view to_string(DecayClass d) noexcept {
    switch (d) {
        case DecayClass::compact_support: return "compact_support";
        case DecayClass::vanishing_at_infinity: return "vanishing_at_infinity";
        case DecayClass::bounded: return "bounded";
        case DecayClass::periodic: return "periodic";
    }
    return "unknown";
}

DecayClass parse_decay_class(std::string_view s) {
    if (s == "compact_support" || s == "compact") return DecayClass::compact_support;
    if (s == "vanishing_at_infinity" || s == "vanishing") return DecayClass::vanishing_at_infinity;
    if (s == "bounded") return DecayClass::bounded;
    if (s == "periodic") return DecayClass::periodic;
    throw std::invalid_argument("unknown decay class: " + std::string(s));
}

SampledFunction::SampledFunction(Grid grid, std::vector<double> values, DecayClass decay)
    : grid_(grid), re_(std::move(values)), decay_(decay) {
    validate();
}

SampledFunction::SampledFunction(Grid grid, std::vector<double> re, std::vector<double> im,
                                 DecayClass decay)
    : grid_(grid), re_(std::move(re)), im_(std::move(im)), decay_(decay) {
    if (im_.size() != re_.size()) {
        throw std::invalid_argument("real and imaginary parts differ in length");
    }
    validate();
}

void SampledFunction::validate() const {
    if (re_.size() != grid_.n()) {
        throw std::invalid_argument("sample count " + std::to_string(re_.size()) +
                                    " does not match grid size " + std::to_string(grid_.n()));
    }
    double scale = 1.0;
    auto check = [&](const std::vector<double>& v) {
        for (double y : v) {
            if (!std::isfinite(y)) throw std::invalid_argument("non-finite sample value");
            scale = std::max(scale, std::abs(y));
        }
    };
    check(re_);
    check(im_);

    const double tol = 1e-12 * scale;
    auto at = [&](std::size_t i) { return std::abs(complex_at(i)); };
    const std::size_t last = re_.size() - 1;
    if (decay_ == DecayClass::compact_support && (at(0) > tol || at(last) > tol)) {
        throw std::invalid_argument("compact_support function must vanish at both grid endpoints");
    }
    if (decay_ == DecayClass::periodic && std::abs(complex_at(0) - complex_at(last)) > tol) {
        throw std::invalid_argument("periodic function must have equal first and last samples");
    }
}

double SampledFunction::interpolate(double x) const {
    if (!grid_.contains(x)) {
        throw std::out_of_range("interpolation point outside the grid");
    }
    const double pos = (x - grid_.a()) / grid_.h();
    const std::size_t last = re_.size() - 1;
    if (pos <= 0.0) return re_.front();
    if (pos >= static_cast<double>(last)) return re_.back();
    const auto i = static_cast<std::size_t>(pos);
    const double w = pos - static_cast<double>(i);
    return (1.0 - w) * re_[i] + w * re_[i + 1];
}

SampledFunction SampledFunction::with_values(std::vector<double> values) const {
    return SampledFunction(grid_, std::move(values), decay_);
}

SampledFunction SampledFunction::with_values(std::vector<double> values, DecayClass decay) const {
    return SampledFunction(grid_, std::move(values), decay);
}

void require_real(const SampledFunction& f, std::string_view op) {
    if (!f.is_real()) {
        throw std::invalid_argument(std::string(op) + " requires a real-valued function");
    }
}

}  // namespace bvf
