#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace bvf {

/// Uniform partition of a closed interval [a, b] with n >= 2 nodes.
///
/// Nodes are x_i = a + i*h with h = (b-a)/(n-1); the last node is stored
/// as b exactly so that endpoint tests do not depend on rounding.
class Grid {
public:
    static Grid uniform(double a, double b, std::size_t n);

    double a() const noexcept { return a_; }
    double b() const noexcept { return b_; }
    std::size_t n() const noexcept { return n_; }
    double h() const noexcept { return h_; }
    double length() const noexcept { return b_ - a_; }

    double operator[](std::size_t i) const noexcept {
        return i + 1 == n_ ? b_ : a_ + static_cast<double>(i) * h_;
    }

    std::vector<double> points() const;

    // Tolerant membership: x may exceed the endpoints by a few ulps.
    bool contains(double x) const noexcept;

    bool operator==(const Grid&) const = default;

private:
    Grid(double a, double b, std::size_t n);

    double a_;
    double b_;
    std::size_t n_;
    double h_;
};

Grid make_uniform_grid(double a, double b, std::size_t n);

/// Caller-declared decay hypothesis of a sampled function.
enum class DecayClass { compact_support, vanishing_at_infinity, bounded, periodic };

std::string_view to_string(DecayClass d) noexcept;
DecayClass parse_decay_class(std::string_view s);

/// Real- or complex-valued samples on a uniform grid.
///
/// Immutable after construction. The constructor enforces the invariants
/// that can be checked from the samples: length, finiteness, zero endpoints
/// for compact_support and closure for periodic.
class SampledFunction {
public:
    SampledFunction(Grid grid, std::vector<double> values, DecayClass decay);
    SampledFunction(Grid grid, std::vector<double> re, std::vector<double> im, DecayClass decay);

    const Grid& grid() const noexcept { return grid_; }
    DecayClass decay_class() const noexcept { return decay_; }
    std::size_t size() const noexcept { return re_.size(); }
    bool is_real() const noexcept { return im_.empty(); }

    std::span<const double> values() const noexcept { return re_; }
    std::span<const double> imag() const noexcept { return im_; }

    double operator[](std::size_t i) const noexcept { return re_[i]; }
    std::complex<double> complex_at(std::size_t i) const noexcept {
        return {re_[i], im_.empty() ? 0.0 : im_[i]};
    }

    /// Piecewise-linear interpolant of the real part. x must lie in the grid.
    double interpolate(double x) const;

    /// Same grid, new real values; the decay class may be overridden.
    SampledFunction with_values(std::vector<double> values) const;
    SampledFunction with_values(std::vector<double> values, DecayClass decay) const;

private:
    void validate() const;

    Grid grid_;
    std::vector<double> re_;
    std::vector<double> im_;
    DecayClass decay_;
};

/// Throws std::invalid_argument unless f carries real samples.
void require_real(const SampledFunction& f, std::string_view op);

}  // namespace bvf
