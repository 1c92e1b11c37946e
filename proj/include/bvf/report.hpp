#pragma once

#include <cstddef>
#include <string>
#include <utility>

namespace bvf {

/// Outcome of one numerical check. passed is measured <= bound, except for
/// reports built with make_at_least, which require measured >= bound.
struct VerificationReport {
    std::string name;
    double measured = 0.0;
    double bound = 0.0;
    bool passed = false;
    std::size_t grid_n = 0;
    std::string notes;

    static VerificationReport make(std::string name, double measured, double bound,
                                   std::size_t grid_n, std::string notes = {}) {
        return {std::move(name), measured, bound, measured <= bound, grid_n, std::move(notes)};
    }

    static VerificationReport make_at_least(std::string name, double measured, double bound,
                                            std::size_t grid_n, std::string notes = {}) {
        return {std::move(name), measured, bound, measured >= bound, grid_n, std::move(notes)};
    }
};

}  // namespace bvf
