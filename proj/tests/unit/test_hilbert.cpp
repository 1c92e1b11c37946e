#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "bvf/families.hpp"
#include "bvf/fourier.hpp"
#include "bvf/grid_ops.hpp"
#include "bvf/hilbert.hpp"
#include "support.hpp"

using namespace bvf;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;
using std::numbers::pi;

namespace {

double sup_interior(const SampledFunction& got, const FamilySpec& exact, double half_width) {
    double worst = 0.0;
    for (std::size_t i = 0; i < got.size(); ++i) {
        const double x = got.grid()[i];
        if (std::abs(x) <= half_width) worst = std::max(worst, std::abs(got[i] - exact(x)));
    }
    return worst;
}

}  // namespace

TEST_CASE("zero input") {
    const Grid g = Grid::uniform(-1.0, 1.0, 65);
    const SampledFunction z(g, std::vector<double>(65, 0.0), DecayClass::compact_support);
    for (const auto& out : {hilbert_pv(z), hilbert_multiplier(z), modified_hilbert(z)}) {
        for (double v : out.values()) CHECK(v == 0.0);
    }
}

TEST_CASE("poisson pair through the principal value") {
    const auto f = test::fam(Family::poisson_kernel, test::rig());
    const FamilySpec conj(Family::conjugate_poisson);
    const auto pv = hilbert_pv(f);
    CHECK(sup_interior(pv, conj, 40.0) < 1e-3);
    // Away from the window edges the error is the truncation tail alone.
    CHECK(sup_interior(pv, conj, 10.0) < 2e-5);
}

TEST_CASE("multiplier sign is pinned by the poisson pair") {
    const auto f = test::fam(Family::poisson_kernel, test::rig());
    const FamilySpec conj(Family::conjugate_poisson);
    const auto h = hilbert_multiplier(f);
    CHECK(sup_interior(h, conj, 10.0) < 2e-5);
    CHECK(h.interpolate(1.0) > 0.1);
    CHECK(kHilbertMultiplierSign == -1);
}

TEST_CASE("multiplier error is truncation of the window") {
    const auto f = test::fam(Family::poisson_kernel, test::rig());
    const FamilySpec conj(Family::conjugate_poisson);
    const auto h = hilbert_multiplier(f);
    for (std::size_t i = 0; i < f.size(); i += 97) {
        const double x = f.grid()[i];
        if (std::abs(x) > 40.0) continue;
        CHECK(std::abs(h[i] - conj(x)) <= 1e-6 + hilbert_truncation_tail(f, x));
    }
    CHECK(hilbert_truncation_tail(test::fam(Family::box, test::rig()), 0.0) == 0.0);
    CHECK(std::isinf(hilbert_truncation_tail(test::fam(Family::smooth_step, test::rig()), 0.0)));
}

TEST_CASE("pv and multiplier converge to each other") {
    const auto d14 = test::max_abs_diff(hilbert_pv(test::fam(Family::gaussian, test::rig(1u << 14))),
                                        hilbert_multiplier(test::fam(Family::gaussian, test::rig(1u << 14))));
    const auto d15 = test::max_abs_diff(hilbert_pv(test::fam(Family::gaussian, test::rig(1u << 15))),
                                        hilbert_multiplier(test::fam(Family::gaussian, test::rig(1u << 15))));
    CHECK(d14 < 1e-3);
    CHECK(d14 / d15 >= 2.0);
}

TEST_CASE("fft paths agree with direct sums on random input") {
    std::mt19937 rng(3);
    for (std::size_t n : {17u, 64u, 301u, 1024u}) {
        const Grid g = Grid::uniform(-3.0, 4.0, n);
        const auto f = test::random_compact_noise(rng, g);
        INFO("n = " << n);
        CHECK(test::max_abs_diff(hilbert_pv(f), detail::hilbert_pv_direct(f)) < 1e-11);
        CHECK(test::max_abs_diff(modified_hilbert(f), detail::modified_hilbert_direct(f)) < 1e-11);
    }
}

TEST_CASE("linearity") {
    std::mt19937 rng(5);
    const Grid g = Grid::uniform(-20.0, 20.0, 2048);
    for (int trial = 0; trial < 5; ++trial) {
        const auto f = test::random_bumps(rng, g, -15.0, 15.0);
        const auto k = test::random_bumps(rng, g, -15.0, 15.0);
        std::vector<double> sum(g.n());
        for (std::size_t i = 0; i < g.n(); ++i) sum[i] = 2.0 * f[i] - 3.0 * k[i];
        const auto s = f.with_values(sum);
        for (auto op : {+[](const SampledFunction& x) { return hilbert_pv(x); },
                        +[](const SampledFunction& x) { return hilbert_multiplier(x); },
                        +[](const SampledFunction& x) { return modified_hilbert(x); }}) {
            const auto hf = op(f), hk = op(k), hs = op(s);
            double worst = 0.0;
            for (std::size_t i = 0; i < g.n(); ++i) worst = std::max(worst, std::abs(hs[i] - 2.0 * hf[i] + 3.0 * hk[i]));
            CHECK(worst < 1e-11);
        }
    }
}

TEST_CASE("translation equivariance on a shifted grid") {
    std::mt19937 rng(9);
    const Grid g = Grid::uniform(-20.0, 20.0, 1001);
    const double shift = 7.0 * g.h() * 13;
    const Grid gs = Grid::uniform(g.a() + shift, g.b() + shift, g.n());
    const auto f = test::random_bumps(rng, g, -15.0, 15.0);
    const SampledFunction fs(gs, std::vector<double>(f.values().begin(), f.values().end()), DecayClass::compact_support);
    CHECK(test::max_abs_diff(hilbert_pv(f), hilbert_pv(fs)) < 1e-12);
    CHECK(test::max_abs_diff(hilbert_multiplier(f), hilbert_multiplier(fs)) < 1e-12);
}

TEST_CASE("odd and even symmetry") {
    const auto f = test::fam(Family::gaussian, test::rig(4097));
    const auto h = hilbert_pv(f);
    for (std::size_t i = 0; i < 2048; i += 31) CHECK_THAT(h[i], WithinAbs(-h[4096 - i], 1e-14));
}

TEST_CASE("modified transform differs from the plain one by a constant on integrable input") {
    const auto f = test::fam(Family::gaussian, test::rig(1u << 13));
    const auto plain = hilbert_pv(f);
    const auto mod = modified_hilbert(f);
    // c = (1/pi) int f(t) t/(1+t^2) dt = 0 for even f.
    double worst = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (std::abs(f.grid()[i]) < 30.0) worst = std::max(worst, std::abs(mod[i] - plain[i]));
    }
    CHECK(worst < 1e-3);

    const auto shifted = test::fam(Family::gaussian, test::rig(1u << 13), {{"center", 2.0}});
    const auto ps = hilbert_pv(shifted), ms = modified_hilbert(shifted);
    std::vector<double> w(shifted.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
        const double t = shifted.grid()[i];
        w[i] = shifted[i] * t / (1.0 + t * t);
    }
    const double c = trapezoid(shifted.grid(), w) / pi;
    CHECK(c > 0.1);
    for (double x : {-5.0, 0.0, 1.0, 7.0}) {
        CHECK_THAT(ms.interpolate(x) - ps.interpolate(x), WithinAbs(c, 2e-3));
    }
}

TEST_CASE("modified transform of bounded input") {
    const Grid g = test::rig(1u << 13);
    const SampledFunction one(g, std::vector<double>(g.n(), 1.0), DecayClass::bounded);
    const auto h = modified_hilbert(one);
    for (std::size_t i = 0; i < g.n(); i += 101) CHECK(std::abs(h[i]) < 1e-10);

    const auto step = modified_hilbert(test::fam(Family::smooth_step, g));
    CHECK(step.decay_class() == DecayClass::bounded);
    for (double v : step.values()) CHECK(std::isfinite(v));
    // tanh is odd, so its conjugate is even up to the kernel's t/(1+t^2) term.
    CHECK_THAT(step.interpolate(3.0), WithinAbs(step.interpolate(-3.0), 1e-8));
}

TEST_CASE("input class preconditions") {
    const Grid g = test::rig(1024);
    CHECK_THROWS_AS(hilbert_pv(test::fam(Family::smooth_step, g)), std::invalid_argument);
    CHECK_THROWS_AS(hilbert_multiplier(test::fam(Family::smooth_step, g)), std::invalid_argument);
    const auto c = sample(FamilySpec(Family::cosine), Grid::uniform(-pi, pi, 129));
    CHECK_THROWS_AS(hilbert_pv(c), std::invalid_argument);
    CHECK_THROWS_AS(periodic_conjugate(test::fam(Family::gaussian, g)), std::invalid_argument);
    PvConfig cfg;
    cfg.delta_min = 2.0 * g.h();
    CHECK_THROWS_AS(hilbert_pv(test::fam(Family::gaussian, g), cfg), std::invalid_argument);
    cfg.delta_min = 0.0;
    CHECK_THROWS_AS(hilbert_pv(test::fam(Family::gaussian, g), cfg), std::invalid_argument);
    cfg.delta_min = g.h();
    cfg.pairing = PvConfig::Pairing::singularity_subtraction;
    CHECK_THROWS_AS(modified_hilbert(test::fam(Family::gaussian, g), cfg), std::invalid_argument);
    PvConfig half;
    half.pairing = PvConfig::Pairing::symmetric_difference;
    CHECK_THROWS_AS(modified_hilbert(test::fam(Family::smooth_step, g), half), std::invalid_argument);
}

TEST_CASE("exclusion radius") {
    std::mt19937 rng(17);
    const Grid g = Grid::uniform(-4.0, 4.0, 513);
    const auto f = test::random_compact_noise(rng, g);
    PvConfig cfg;
    cfg.delta_min = 0.5 * g.h();
    CHECK(test::max_abs_diff(hilbert_pv(f, cfg), hilbert_pv(f)) == 0.0);
    cfg.delta_min = g.h();
    const auto trimmed = hilbert_pv(f, cfg);
    CHECK(test::max_abs_diff(trimmed, detail::hilbert_pv_direct(f, cfg)) < 1e-11);
    // Dropping the innermost pair removes (f_{i-1} - f_{i+1})/pi at each node.
    const auto full = hilbert_pv(f);
    for (std::size_t i = 1; i + 1 < g.n(); i += 37) {
        CHECK_THAT(full[i] - trimmed[i], WithinAbs((f[i - 1] - f[i + 1]) / pi, 1e-11));
    }
}

TEST_CASE("both pairings approximate the same transform") {
    const auto f = test::fam(Family::poisson_kernel, test::rig());
    PvConfig sub;
    sub.pairing = PvConfig::Pairing::singularity_subtraction;
    const auto a = hilbert_pv(f), b = hilbert_pv(f, sub);
    const FamilySpec conj(Family::conjugate_poisson);
    for (std::size_t i = 0; i < f.size(); i += 97) {
        const double x = f.grid()[i];
        if (std::abs(x) > 40.0) continue;
        CHECK(std::abs(b[i] - conj(x)) <= 1e-5 + hilbert_truncation_tail(f, x));
        CHECK(std::abs(a[i] - b[i]) <= 1e-5);
    }
}

TEST_CASE("modified minus plain is constant under one pairing rule") {
    for (std::size_t n : {1u << 13, 1u << 14}) {
        const auto f = test::fam(Family::triangle, test::rig(n), {{"center", 0.7}});
        for (auto rule : {PvConfig::Pairing::symmetric_difference, PvConfig::Pairing::singularity_subtraction}) {
            PvConfig cfg;
            cfg.pairing = rule;
            const auto plain = hilbert_pv(f, cfg), mod = modified_hilbert(f, cfg);
            double mean = 0.0;
            for (std::size_t i = 0; i < n; ++i) mean += mod[i] - plain[i];
            mean /= static_cast<double>(n);
            double var = 0.0;
            for (std::size_t i = 0; i < n; ++i) var += (mod[i] - plain[i] - mean) * (mod[i] - plain[i] - mean);
            INFO("n = " << n << ", rule = " << static_cast<int>(rule));
            CHECK(std::sqrt(var / static_cast<double>(n)) <= 1e-6);
        }
    }
}

TEST_CASE("smooth step conjugate is stable under window doubling") {
    // The conjugate of tanh grows like (2/pi) log|x|, so compare on a fixed range.
    std::vector<double> sups;
    for (double L : {50.0, 100.0, 200.0}) {
        const Grid g = Grid::uniform(-L, L, static_cast<std::size_t>(L * 160.0) + 1);
        const auto h = modified_hilbert(test::fam(Family::smooth_step, g));
        double sup = 0.0;
        for (std::size_t i = 0; i < g.n(); ++i) {
            if (std::abs(g[i]) <= 25.0) sup = std::max(sup, std::abs(h[i]));
        }
        sups.push_back(sup);
    }
    CHECK_THAT(sups[1], WithinRel(sups[0], 5e-2));
    CHECK_THAT(sups[2], WithinRel(sups[1], 5e-2));
}

TEST_CASE("periodic conjugate") {
    for (std::size_t n : {128u, 129u, 4096u}) {
        const Grid g = Grid::uniform(-pi, pi, n);
        for (double k : {1.0, 3.0, 10.0}) {
            const auto c = periodic_conjugate(sample(FamilySpec(Family::cosine, {{"k", k}}), g));
            double worst = 0.0;
            for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(c[i] - std::sin(k * g[i])));
            INFO("n = " << n << ", k = " << k);
            CHECK(worst < 1e-11);
        }
        const SampledFunction one(g, std::vector<double>(n, 1.0), DecayClass::periodic);
        const auto conj_one = periodic_conjugate(one);
        for (double v : conj_one.values()) CHECK(std::abs(v) < 1e-12);
        const auto tw = sample(FamilySpec(Family::triangle_wave_periodic), g);
        CHECK(test::max_abs_diff(periodic_conjugate(tw), periodic_conjugate_spectral(tw)) < 1e-11);
    }
}

TEST_CASE("periodic conjugate twice is minus the identity on mean-zero input") {
    const Grid g = Grid::uniform(-pi, pi, 1025);
    std::mt19937 rng(29);
    std::normal_distribution<double> z;
    for (int trial = 0; trial < 5; ++trial) {
        std::vector<double> v(g.n(), 0.0);
        for (int k = 1; k <= 12; ++k) {
            const double a = z(rng), b = z(rng);
            for (std::size_t i = 0; i < g.n(); ++i) v[i] += a * std::cos(k * g[i]) + b * std::sin(k * g[i]);
        }
        v.back() = v.front();
        const SampledFunction f(g, v, DecayClass::periodic);
        const auto twice = periodic_conjugate(periodic_conjugate(f));
        double worst = 0.0;
        for (std::size_t i = 0; i < g.n(); ++i) worst = std::max(worst, std::abs(twice[i] + f[i]));
        CHECK(worst <= 1e-8);
    }
}

TEST_CASE("conjugate coefficients follow the sign multiplier") {
    const Grid g = Grid::uniform(-pi, pi, 1u << 12);
    const auto tw = sample(FamilySpec(Family::triangle_wave_periodic), g);
    const auto c = fourier_coefficients(tw, 64);
    const auto ct = fourier_coefficients(periodic_conjugate(tw), 64);
    for (int k = -64; k <= 64; ++k) {
        const double sgn = k > 0 ? 1.0 : (k < 0 ? -1.0 : 0.0);
        CHECK(std::abs(ct.at(k) - std::complex<double>(0.0, -sgn) * c.at(k)) <= 1e-10);
    }
}

TEST_CASE("kernel difference") {
    const auto k = kernel_difference(1.0, 10000);
    CHECK(std::abs(k.partial_sum - k.closed_form) < 1e-4);
    CHECK_THAT(k.closed_form, WithinRel(0.5 / std::tan(0.5) - 1.0, 1e-14));
    CHECK_FALSE(k.near_pole);
    CHECK(std::abs(kernel_difference_closed(pi) + 1.0 / pi) <= 1e-15);
    CHECK(kernel_difference_closed(0.0) == 0.0);
    CHECK_THAT(kernel_difference_closed(1e-5), WithinAbs(-1e-5 / 12.0, 1e-17));
    for (double t : {1e-8, 1e-3, 0.009, 0.011, 0.5, 2.0, pi, 6.0}) {
        CHECK(kernel_difference_closed(-t) == -kernel_difference_closed(t));
        CHECK(kernel_difference(-t, 50).partial_sum == -kernel_difference(t, 50).partial_sum);
    }
    // Tail of the series decays like 1/terms.
    const double e100 = std::abs(kernel_difference(2.0, 100).partial_sum - kernel_difference_closed(2.0));
    const double e1000 = std::abs(kernel_difference(2.0, 1000).partial_sum - kernel_difference_closed(2.0));
    CHECK(e100 / e1000 > 8.0);
    CHECK(kernel_difference(2.0 * pi - 1e-4, 10).near_pole);
    CHECK_THROWS_AS(kernel_difference(7.0, 10), std::invalid_argument);
    CHECK_THROWS_AS(kernel_difference(1.0, 0), std::invalid_argument);
}
