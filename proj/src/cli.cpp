#include "bvf/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <CLI11.hpp>

#include "bvf/csv.hpp"
#include "bvf/families.hpp"
#include "bvf/fourier.hpp"
#include "bvf/grid_ops.hpp"
#include "bvf/hilbert.hpp"
#include "bvf/lemma_dc.hpp"
#include "bvf/radial.hpp"

namespace bvf {
namespace {

using std::numbers::pi;

// ---------------------------------------------------------------- checks

struct Check {
    std::function<std::vector<VerificationReport>()> run;
    std::vector<std::string> names;  // used to label failures
};

struct Profile {
    std::size_t n;
    std::vector<double> cutoffs;  // l1_norm_ft growth study, below pi/h
    double derivative_ft_bound;
    double slope_bound;  // relative deviation of the box log-slope from 4/pi
};

Profile profile_settings(std::string_view name) {
    if (name == "fast") return {1u << 12, {12.5, 25.0, 50.0, 100.0}, 1e-3, 0.1};
    if (name == "default") return {1u << 14, {25.0, 50.0, 100.0, 200.0}, 1e-4, 0.05};
    if (name == "strict") return {1u << 15, {25.0, 50.0, 100.0, 200.0}, 1e-4, 0.05};
    throw std::invalid_argument("unknown profile '" + std::string(name) + "'");
}

Grid rig(std::size_t n) { return Grid::uniform(-50.0, 50.0, n); }

SampledFunction fam(Family f, const Grid& g, std::map<std::string, double> p = {}) {
    return sample(FamilySpec(f, std::move(p)), g);
}

std::string note(const char* format, auto... args) {
    char buf[256];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

double max_abs_diff(const SampledFunction& x, const SampledFunction& y) {
    double worst = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) worst = std::max(worst, std::abs(x[i] - y[i]));
    return worst;
}

bool interior80(const Grid& g, std::size_t i) {
    return std::abs(g[i] - 0.5 * (g.a() + g.b())) <= 0.4 * g.length();
}

std::vector<Check> hardy_suite(const Profile& prof) {
    const std::size_t n = prof.n;
    std::vector<Check> checks;
    checks.push_back({[n] {
        const Grid g = rig(n);
        const auto f = fam(Family::poisson_kernel, g);
        const FamilySpec conj(Family::conjugate_poisson);
        const auto pv = hilbert_pv(f);
        const auto mult = hilbert_multiplier(f);
        double pv_err = 0.0, mult_excess = -1.0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!interior80(g, i)) continue;
            const double exact = conj(g[i]);
            pv_err = std::max(pv_err, std::abs(pv[i] - exact));
            mult_excess = std::max(mult_excess,
                                   std::abs(mult[i] - exact) - hilbert_truncation_tail(f, g[i]));
        }
        return std::vector{
            VerificationReport::make("hilbert_pv_poisson", pv_err, 1e-3, n),
            VerificationReport::make("hilbert_multiplier_poisson", std::max(mult_excess, 0.0), 1e-6, n,
                                     "error beyond the a priori truncation tail"),
        };
    }, {"hilbert_pv_poisson", "hilbert_multiplier_poisson"}});

    checks.push_back({[n] {
        const auto f = fam(Family::gaussian, rig(n));
        return std::vector{VerificationReport::make("hilbert_pv_vs_multiplier_gaussian",
                                                    max_abs_diff(hilbert_pv(f), hilbert_multiplier(f)),
                                                    1e-3, n)};
    }, {"hilbert_pv_vs_multiplier_gaussian"}});

    checks.push_back({[] {
        const auto k = kernel_difference(1.0, 10000);
        return std::vector{VerificationReport::make("kernel_difference_series",
                                                    std::abs(k.partial_sum - k.closed_form), 1e-4, 0)};
    }, {"kernel_difference_series"}});

    checks.push_back({[n, bound = prof.derivative_ft_bound] {
        const auto f = fam(Family::raised_cosine, rig(n));
        return std::vector{VerificationReport::make("derivative_ft_identity",
                                                    derivative_ft_identity(f), bound, n)};
    }, {"derivative_ft_identity"}});

    const std::vector<std::pair<std::string, FamilySpec>> members = {
        {"triangle", FamilySpec(Family::triangle)},
        {"raised_cosine", FamilySpec(Family::raised_cosine)},
        {"smoothed_box", FamilySpec(Family::smoothed_box, {{"width", 2.0}, {"ramp", 0.5}})},
    };
    for (const auto& [label, spec] : members) {
        checks.push_back({[n, label = label, spec = spec] {
            const auto g = derivative(sample(spec, rig(n)));
            const auto m = hardy_measure(g, default_cutoff(g.grid()));
            auto hardy = hardy_check(g, default_cutoff(g.grid()), pi);
            hardy.name = "hardy_" + label + "_derivative";
            return std::vector{
                hardy,
                VerificationReport::make("h1_cancellation_" + label, m.h1.cancellation_residual, 1e-8, n),
            };
        }, {"hardy_" + label + "_derivative", "h1_cancellation_" + label}});
    }
    return checks;
}

std::vector<Check> lemma_suite(std::size_t n) {
    std::vector<Check> checks;
    checks.push_back({[n] {
        auto r = conjugate_derivative_defect(fam(Family::raised_cosine, rig(n)));
        r.name = "lemma_dc_raised_cosine";
        return std::vector{r};
    }, {"lemma_dc_raised_cosine"}});
    checks.push_back({[n] {
        auto r = conjugate_derivative_defect(fam(Family::gaussian, rig(n)));
        r.name = "lemma_dc_gaussian";
        return std::vector{r};
    }, {"lemma_dc_gaussian"}});
    checks.push_back({[n] {
        const auto f = fam(Family::gaussian, rig(n));
        const Grid& g = f.grid();
        const std::size_t i = (n - 1) / 2 + static_cast<std::size_t>(std::lround(1.0 / g.h()));
        std::vector<double> deltas;
        for (double d = 0.5; d >= 4.0 * g.h(); d *= 0.5) deltas.push_back(d);
        deltas.push_back(4.0 * g.h());
        const auto seq = ibp_consistency(f, g[i], deltas);
        const double target = hilbert_pv(derivative(f))[i];
        return std::vector{VerificationReport::make("ibp_consistency_gaussian",
                                                    std::abs(seq.back() - target), 1e-2, n,
                                                    note("x=%.6f", g[i]))};
    }, {"ibp_consistency_gaussian"}});
    return checks;
}

std::vector<Check> growth_suite(const Profile& prof) {
    const std::size_t n = prof.n;
    std::vector<Check> checks;
    checks.push_back({[n, cutoffs = prof.cutoffs] {
        const auto v = hardy_littlewood_verdict(fam(Family::triangle, rig(n)), cutoffs);
        auto r = v.report;
        r.name = "harlit_triangle_plateau";
        if (v.classification != GrowthClass::integrable_plateau) r.passed = false;
        return std::vector{r};
    }, {"harlit_triangle_plateau"}});
    checks.push_back({[n, cutoffs = prof.cutoffs, bound = prof.slope_bound] {
        const auto v = hardy_littlewood_verdict(fam(Family::box, rig(n)), cutoffs);
        const double dev = v.classification == GrowthClass::log_divergent
                               ? std::abs(v.half_line_slope / (4.0 / pi) - 1.0)
                               : std::numeric_limits<double>::infinity();
        return std::vector{VerificationReport::make(
            "harlit_box_log_slope", dev, bound, n,
            note("class=%s half_line_slope=%.6f", std::string(to_string(v.classification)).c_str(),
                 v.half_line_slope))};
    }, {"harlit_box_log_slope"}});
    checks.push_back({[n] {
        const double coarse = total_variation(modified_hilbert(fam(Family::box, rig(n / 2))));
        const double fine = total_variation(modified_hilbert(fam(Family::box, rig(n))));
        return std::vector{VerificationReport::make_at_least("tv_conjugate_box_growth", fine - coarse, 0.1, n)};
    }, {"tv_conjugate_box_growth"}});
    checks.push_back({[n] {
        const double coarse = total_variation(modified_hilbert(fam(Family::triangle, rig(n / 2))));
        const double fine = total_variation(modified_hilbert(fam(Family::triangle, rig(n))));
        return std::vector{VerificationReport::make("tv_conjugate_triangle_change", std::abs(fine - coarse), 1e-3, n)};
    }, {"tv_conjugate_triangle_change"}});
    return checks;
}

std::vector<Check> periodic_suite() {
    constexpr std::size_t n = 1u << 12;
    std::vector<Check> checks;
    checks.push_back({[] {
        const auto f = fam(Family::triangle_wave_periodic, Grid::uniform(-pi, pi, n));
        const auto s = fourier_coefficients(f, 512);
        return std::vector{
            VerificationReport::make("periodic_conjugate_coefficients", conjugate_coefficient_check(f, 512), 1e-8, n),
            VerificationReport::make("periodic_partial_sum_growth",
                                     s.abs_partial_sums[512] / s.abs_partial_sums[256] - 1.0, 5e-3, n),
            VerificationReport::make("periodic_rule_vs_spectral",
                                     max_abs_diff(periodic_conjugate(f), periodic_conjugate_spectral(f)), 1e-10, n),
        };
    }, {"periodic_conjugate_coefficients", "periodic_partial_sum_growth", "periodic_rule_vs_spectral"}});
    checks.push_back({[] {
        const Grid g = Grid::uniform(-pi, pi, n);
        const auto c = periodic_conjugate(fam(Family::cosine, g, {{"k", 3.0}}));
        double worst = 0.0;
        for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(c[i] - std::sin(3.0 * g[i])));
        return std::vector{VerificationReport::make("periodic_cosine_pair", worst, 1e-10, n)};
    }, {"periodic_cosine_pair"}});
    return checks;
}

std::vector<double> radius_range(double lo, double hi, double step) {
    std::vector<double> r;
    for (int k = 0; lo + k * step <= hi + 1e-9; ++k) r.push_back(lo + k * step);
    return r;
}

double relative_error(const std::vector<double>& got, const std::vector<double>& ref) {
    double scale = 0.0;
    for (double v : ref) scale = std::max(scale, std::abs(v));
    double worst = 0.0;
    for (std::size_t i = 0; i < ref.size(); ++i) {
        worst = std::max(worst, std::abs(got[i] - ref[i]) / std::max(std::abs(ref[i]), 1e-3 * scale));
    }
    return worst;
}

std::vector<Check> radial_suite() {
    std::vector<Check> checks;
    checks.push_back({[] {
        const Grid g = Grid::uniform(0.0, 2.0, (1u << 14) + 1);
        const auto p = RadialProfile::from_family(FamilySpec(Family::box), g, 3);
        const auto r = radius_range(0.1, 10.0, 0.1);
        std::vector<double> ref;
        for (double x : r) ref.push_back(4.0 * pi * (std::sin(x) - x * std::cos(x)) / (x * x * x));
        const double zero[1] = {0.0};
        return std::vector{
            VerificationReport::make("radial_unit_ball_n3", relative_error(radial_ft_leray(p, r), ref), 1e-4, g.n()),
            VerificationReport::make("radial_unit_ball_volume",
                                     std::abs(radial_ft_leray(p, zero).front() - 4.0 * pi / 3.0), 1e-4, g.n()),
        };
    }, {"radial_unit_ball_n3", "radial_unit_ball_volume"}});
    for (int dim : {2, 3}) {
        checks.push_back({[dim] {
            const Grid g = Grid::uniform(0.0, 4.0, 4001);
            const auto p = RadialProfile::from_family(
                FamilySpec(Family::raised_cosine, {{"center", 1.5}, {"width", 2.0}}), g, dim);
            const auto r = radius_range(0.5, 10.0, 0.1);
            const auto oracle = radial_ft_oracle(p, r);
            const std::string tag = "radial_bump_n" + std::to_string(dim);
            return std::vector{
                VerificationReport::make(tag + "_leray", relative_error(radial_ft_leray(p, r), oracle), 1e-3, g.n()),
                VerificationReport::make(tag + "_ibp", relative_error(radial_ft_ibp(p, r), oracle), 1e-3, g.n()),
            };
        }, {"radial_bump_n" + std::to_string(dim) + "_leray", "radial_bump_n" + std::to_string(dim) + "_ibp"}});
    }
    checks.push_back({[] {
        const Grid g = Grid::uniform(0.0, 2.0, 2001);
        const auto I = fractional_integral(RadialProfile::from_family(FamilySpec(Family::box), g, 2));
        double worst = 0.0;
        for (std::size_t i = 0; i < g.n(); ++i) {
            const double t = g[i];
            const double exact = t <= 1.0 ? 2.0 / std::sqrt(pi) * std::sqrt(1.0 - t * t) : 0.0;
            worst = std::max(worst, std::abs(I.samples[i] - exact));
        }
        return std::vector{VerificationReport::make("radial_fractional_integral_n2", worst, 1e-6, g.n())};
    }, {"radial_fractional_integral_n2"}});
    checks.push_back({[] {
        const Grid g = Grid::uniform(0.0, 10.0, 2001);
        const auto p = RadialProfile::from_family(FamilySpec(Family::gaussian), g, 1);
        const auto r = radius_range(0.0, 5.0, 0.25);
        const auto got = radial_ft_leray(p, r);
        double worst = 0.0;
        for (std::size_t i = 0; i < r.size(); ++i) {
            worst = std::max(worst, std::abs(got[i] - std::sqrt(2.0 * pi) * std::exp(-0.5 * r[i] * r[i])));
        }
        return std::vector{VerificationReport::make("radial_even_extension_n1", worst, 1e-6, g.n())};
    }, {"radial_even_extension_n1"}});
    return checks;
}

std::vector<Check> suite_checks(std::string_view suite, const Profile& prof) {
    if (suite == "hardy") return hardy_suite(prof);
    if (suite == "lemma-dc") return lemma_suite(prof.n);
    if (suite == "hardy-littlewood") return growth_suite(prof);
    if (suite == "periodic") return periodic_suite();
    if (suite == "radial") return radial_suite();
    if (suite == "all") {
        std::vector<Check> all;
        for (std::string_view s : {"hardy", "lemma-dc", "hardy-littlewood", "periodic", "radial"}) {
            auto part = suite_checks(s, prof);
            std::move(part.begin(), part.end(), std::back_inserter(all));
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + std::string(suite) + "'");
}

std::vector<VerificationReport> run_check(const Check& c, std::size_t n) {
    try {
        return c.run();
    } catch (const std::exception& e) {
        std::vector<VerificationReport> failed;
        for (const auto& name : c.names) {
            failed.push_back({name, std::numeric_limits<double>::quiet_NaN(), 0.0, false, n,
                              std::string("error: ") + e.what()});
        }
        return failed;
    }
}

std::size_t thread_cap() {
    std::size_t cap = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("BVF_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1) cap = static_cast<std::size_t>(v);
    }
    return cap;
}

// ---------------------------------------------------------------- commands

std::string fmt_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v == 0.0 ? 0.0 : v);
    return buf;
}

struct Input {
    SampledFunction f;
    std::optional<FamilySpec> spec;
};

Input load_input(const RunConfig& c, std::string_view header, double default_a, double default_b,
                 std::size_t default_n) {
    if (c.family.has_value() == c.csv.has_value()) {
        throw std::invalid_argument("give exactly one of --family and --csv");
    }
    if (c.csv) {
        return {read_function_csv(*c.csv, parse_decay_class(c.decay), header), std::nullopt};
    }
    FamilySpec spec(parse_family(*c.family), c.family_params);
    double a = default_a, b = default_b;
    if (spec.decay_class() == DecayClass::periodic) {
        a = -0.5 * spec.param("period");
        b = 0.5 * spec.param("period");
    }
    const Grid g = Grid::uniform(c.a.value_or(a), c.b.value_or(b), c.n.value_or(default_n));
    return {sample(spec, g), spec};
}

void emit(const RunConfig& c, const std::string& text, std::ostream& out) {
    if (c.out) {
        write_file_atomically(*c.out, text);
    } else {
        out << text;
    }
}

int run_transform(const RunConfig& c, std::ostream& out) {
    const auto in = load_input(c, "x,value", -50.0, 50.0, 1u << 14);
    const Grid& g = in.f.grid();
    const double cutoff = c.cutoff.value_or(default_cutoff(g));
    const std::size_t m = c.m.value_or(frequency_count(cutoff, default_frequency_spacing(g)));
    const auto ft = fourier_transform(in.f, cutoff, m);
    std::string text = "t,re,im\n";
    const auto half = static_cast<double>(m / 2);
    for (std::size_t k = 0; k < ft.values.size(); ++k) {
        const double t = m % 2 == 1 ? (static_cast<double>(k) - half) * (cutoff / half) : ft.freq_grid[k];
        text += fmt_double(t) + "," + fmt_double(ft.values[k].real()) + "," +
                fmt_double(ft.values[k].imag()) + "\n";
    }
    emit(c, text, out);
    return exit_ok;
}

int run_hilbert(const RunConfig& c, std::ostream& out) {
    const auto in = load_input(c, "x,value", -50.0, 50.0, 1u << 14);
    std::string method = c.method;
    if (method == "auto") {
        switch (in.f.decay_class()) {
            case DecayClass::periodic: method = "periodic"; break;
            case DecayClass::bounded: method = "modified"; break;
            default: method = "pv"; break;
        }
    }
    auto result = [&] {
        if (method == "pv") return hilbert_pv(in.f);
        if (method == "multiplier") return hilbert_multiplier(in.f);
        if (method == "modified") return modified_hilbert(in.f);
        if (method == "periodic") return periodic_conjugate(in.f);
        if (method == "periodic-spectral") return periodic_conjugate_spectral(in.f);
        throw std::invalid_argument("unknown method '" + method + "'");
    }();
    std::string text = "x,value\n";
    for (std::size_t i = 0; i < result.size(); ++i) {
        text += fmt_double(result.grid()[i]) + "," + fmt_double(result[i]) + "\n";
    }
    emit(c, text, out);
    return exit_ok;
}

int run_radial(const RunConfig& c, std::ostream& out, std::ostream& err) {
    if (c.a && *c.a != 0.0) throw std::invalid_argument("radial profiles start at 0; drop --a");
    std::optional<RadialProfile> p;
    if (c.family.has_value() == c.csv.has_value()) {
        throw std::invalid_argument("give exactly one of --family and --csv");
    }
    if (c.csv) {
        p.emplace(read_function_csv(*c.csv, parse_decay_class(c.decay), "s,f0"), c.dim);
    } else {
        const Grid g = Grid::uniform(0.0, c.b.value_or(4.0), c.n.value_or(4001));
        p.emplace(RadialProfile::from_family(FamilySpec(parse_family(*c.family), c.family_params), g, c.dim));
    }
    const auto radii = c.radii.empty() ? radius_range(0.5, 10.0, 0.5) : c.radii;
    const auto leray = radial_ft_leray(*p, radii);
    const auto oracle = radial_ft_oracle(*p, radii);
    std::vector<double> ibp;
    try {
        ibp = radial_ft_ibp(*p, radii);
    } catch (const std::invalid_argument& e) {
        err << "warning: " << e.what() << "; ibp column left as nan\n";
        ibp.assign(radii.size(), std::numeric_limits<double>::quiet_NaN());
    }
    std::string text = "r,leray,ibp,oracle\n";
    for (std::size_t i = 0; i < radii.size(); ++i) {
        text += fmt_double(radii[i]) + "," + fmt_double(leray[i]) + "," + fmt_double(ibp[i]) + "," +
                fmt_double(oracle[i]) + "\n";
    }
    emit(c, text, out);
    return exit_ok;
}

std::filesystem::path csv_twin(const std::filesystem::path& p) {
    auto twin = p;
    if (twin.extension() == ".csv") return twin += ".csv";
    return twin.replace_extension(".csv");
}

int run_verify(const RunConfig& c, std::ostream& out) {
    const auto reports = run_suite(c.suite, c.profile);
    const auto text = format_report(reports);
    const auto path = c.out.value_or("bvf-report.txt");
    write_file_atomically(path, text);
    write_file_atomically(csv_twin(path), format_report_csv(reports));
    out << text;
    const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });
    return ok ? exit_ok : exit_check_failed;
}

void add_input_options(CLI::App* sub, RunConfig& c) {
    sub->add_option("--family", c.family, "built-in family name");
    sub->add_option("--csv", c.csv, "two-column CSV input");
    sub->add_option("--decay", c.decay, "decay class of CSV input")->capture_default_str();
    sub->add_option("--a", c.a, "left grid endpoint");
    sub->add_option("--b", c.b, "right grid endpoint");
    sub->add_option("--n", c.n, "grid nodes");
    for (const char* name : {"width", "sigma", "scale", "center", "height", "ramp", "period", "k"}) {
        sub->add_option_function<double>(std::string("--") + name,
                                         [&c, key = std::string(name)](double v) { c.family_params[key] = v; },
                                         std::string("family parameter ") + name);
    }
    sub->add_option_function<std::vector<std::string>>(
        "--param",
        [&c](const std::vector<std::string>& items) {
            for (const auto& item : items) {
                const auto eq = item.find('=');
                if (eq == std::string::npos) throw CLI::ValidationError("--param", "expected name=value");
                try {
                    c.family_params[item.substr(0, eq)] = std::stod(item.substr(eq + 1));
                } catch (const std::logic_error&) {
                    throw CLI::ValidationError("--param", "bad value in '" + item + "'");
                }
            }
        },
        "family parameter as name=value");
    sub->add_option("--out", c.out, "output file (stdout when absent)");
}

}  // namespace

std::size_t profile_grid_size(std::string_view profile) { return profile_settings(profile).n; }

std::vector<VerificationReport> run_suite(std::string_view suite, std::string_view profile) {
    const auto prof = profile_settings(profile);
    const std::size_t n = prof.n;
    const auto checks = suite_checks(suite, prof);
    std::vector<std::vector<VerificationReport>> results(checks.size());
    const std::size_t workers = std::min(thread_cap(), checks.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < checks.size(); ++i) results[i] = run_check(checks[i], n);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::jthread> pool;
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < checks.size(); i = next++) results[i] = run_check(checks[i], n);
            });
        }
    }
    std::vector<VerificationReport> flat;
    for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(flat));
    return flat;
}

std::string format_report(const std::vector<VerificationReport>& reports) {
    std::string text;
    char buf[256];
    bool ok = true;
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "%s %s %.6e %.6e %zu\n", r.name.c_str(), r.passed ? "PASS" : "FAIL",
                      r.measured, r.bound, r.grid_n);
        text += buf;
        ok = ok && r.passed;
    }
    text += ok ? "overall PASS\n" : "overall FAIL\n";
    return text;
}

std::string format_report_csv(const std::vector<VerificationReport>& reports) {
    std::string text = "check_name,status,measured,bound,grid_n,notes\n";
    char buf[256];
    for (const auto& r : reports) {
        std::string notes = r.notes;
        std::replace(notes.begin(), notes.end(), '"', '\'');
        std::snprintf(buf, sizeof buf, "%s,%s,%.17g,%.17g,%zu,", r.name.c_str(), r.passed ? "PASS" : "FAIL",
                      r.measured, r.bound, r.grid_n);
        text += buf;
        text += "\"" + notes + "\"\n";
    }
    return text;
}

std::string verify_report_text(std::string_view suite, std::string_view profile) {
    return format_report(run_suite(suite, profile));
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::transform: return run_transform(config, out);
            case Command::hilbert: return run_hilbert(config, out);
            case Command::radial: return run_radial(config, out, err);
            case Command::verify: return run_verify(config, out);
        }
    } catch (const DataError& e) {
        err << "data error: " << e.what() << "\n";
        return exit_data;
    } catch (const std::invalid_argument& e) {
        err << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_internal;
    }
    return exit_internal;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical checks for Fourier transforms of functions of bounded variation", "bvf"};
    app.require_subcommand(1);
    RunConfig c;

    auto* transform = app.add_subcommand("transform", "Fourier transform, writes t,re,im");
    add_input_options(transform, c);
    transform->add_option("--cutoff", c.cutoff, "frequency cutoff (default pi/h)");
    transform->add_option("--m", c.m, "number of frequencies");

    auto* hilbert = app.add_subcommand("hilbert", "conjugate function, writes x,value");
    add_input_options(hilbert, c);
    hilbert->add_option("--method", c.method, "auto, pv, multiplier, modified, periodic, periodic-spectral")
        ->capture_default_str();

    auto* radial = app.add_subcommand("radial", "radial Fourier transform, writes r,leray,ibp,oracle");
    add_input_options(radial, c);
    radial->add_option("--dim", c.dim, "dimension")->capture_default_str()->check(CLI::PositiveNumber);
    radial->add_option("--radii", c.radii, "comma-separated radii")->delimiter(',');

    auto* verify = app.add_subcommand("verify", "run a verification suite and write a report");
    verify->add_option("suite,--suite", c.suite, "hardy, lemma-dc, hardy-littlewood, radial, periodic or all")
        ->capture_default_str();
    verify->add_option("--profile", c.profile, "fast, default or strict")->capture_default_str();
    verify->add_option("--out", c.out, "report path (CSV twin written beside it)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }
    if (transform->parsed()) c.command = Command::transform;
    if (hilbert->parsed()) c.command = Command::hilbert;
    if (radial->parsed()) c.command = Command::radial;
    if (verify->parsed()) c.command = Command::verify;
    return run(c, out, err);
}

}  // namespace bvf
