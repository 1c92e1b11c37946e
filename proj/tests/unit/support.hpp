#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "bvf/families.hpp"
#include "bvf/grid.hpp"

namespace bvf::test {

inline Grid rig(std::size_t n = 1u << 14) { return Grid::uniform(-50.0, 50.0, n); }

inline SampledFunction fam(Family f, const Grid& g, std::map<std::string, double> p = {}) {
    return sample(FamilySpec(f, std::move(p)), g);
}

inline double max_abs_diff(const SampledFunction& a, const SampledFunction& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
    return worst;
}

// Sum of a few raised-cosine bumps with random centres, widths and heights,
// all inside [lo, hi]. Compactly supported on any grid containing [lo, hi].
inline SampledFunction random_bumps(std::mt19937& rng, const Grid& g, double lo, double hi, int count = 3) {
    std::uniform_real_distribution<double> width(0.5, 3.0), height(-2.0, 2.0), unit(0.0, 1.0);
    std::vector<double> v(g.n(), 0.0);
    for (int k = 0; k < count; ++k) {
        const double w = width(rng);
        const double c = lo + 0.5 * w + unit(rng) * (hi - lo - w);
        const FamilySpec bump(Family::raised_cosine, {{"center", c}, {"width", w}, {"height", std::abs(height(rng)) + 0.1}});
        const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
        for (std::size_t i = 0; i < g.n(); ++i) v[i] += sign * bump(g[i]);
    }
    return SampledFunction(g, std::move(v), DecayClass::compact_support);
}

// White noise in the interior, zero at both ends.
inline SampledFunction random_compact_noise(std::mt19937& rng, const Grid& g) {
    std::normal_distribution<double> z;
    std::vector<double> v(g.n());
    for (auto& x : v) x = z(rng);
    v.front() = v.back() = 0.0;
    return SampledFunction(g, std::move(v), DecayClass::compact_support);
}

}  // namespace bvf::test
