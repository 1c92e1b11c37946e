#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "bvf/grid.hpp"
#include "bvf/report.hpp"

namespace bvf {

/// Indices i such that f' jumps between nodes i and i+1: the first
/// difference exceeds 10x the median over a +-16 neighbour window and
/// 1e-3 of the largest first difference.
std::vector<std::size_t> detect_derivative_jumps(std::span<const double> fprime);

/// Nodes used as stand-ins for Lebesgue points of f': the middle 80% of the
/// grid, minus everything within 5h of a detected jump.
std::vector<std::size_t> lebesgue_nodes(const SampledFunction& fprime);

/// sup |d/dx modified_hilbert(f) - hilbert_pv(f')| over lebesgue_nodes(f').
VerificationReport conjugate_derivative_defect(const SampledFunction& f, double bound = 1e-2);

/// For each delta, ([f(x-d)+f(x+d)]/d - int_{|x-t|>d} f(t)/(x-t)^2 dt) / pi,
/// which tends to hilbert_pv(f')(x) as d -> 0. x must be an interior node.
std::vector<double> ibp_consistency(const SampledFunction& f, double x,
                                    std::span<const double> deltas);

enum class GrowthClass { integrable_plateau, log_divergent, inconclusive };
std::string_view to_string(GrowthClass c) noexcept;

struct LogFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

/// Least-squares fit of values against ln(cutoffs).
LogFit fit_log_slope(std::span<const double> cutoffs, std::span<const double> values);

struct HardyLittlewoodVerdict {
    VerificationReport report;  // measured = final-interval relative growth, bound = 1%
    double tv_f = 0.0;
    double tv_conjugate = 0.0;
    std::vector<double> cutoffs;
    std::vector<double> l1;
    double final_growth = 0.0;
    LogFit fit;
    double half_line_slope = 0.0;  // fit.slope / 2: growth rate of int_0^T |f^|
    GrowthClass classification = GrowthClass::inconclusive;
};

/// TV(f), TV(modified_hilbert(f)) and the growth of l1_norm_ft(f) over the
/// cutoffs, classified as plateau (final growth <= 1%), log-divergent
/// (R^2 >= 0.99 against ln T) or inconclusive. Needs at least 4 cutoffs.
HardyLittlewoodVerdict hardy_littlewood_verdict(const SampledFunction& f,
                                                std::span<const double> cutoffs);

}  // namespace bvf
