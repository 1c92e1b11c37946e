#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bvf/grid.hpp"

namespace bvf {

/// Malformed or inconsistent input data (as opposed to a bad call).
class DataError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads two columns with a header row, e.g. `x,value` or `s,f0`. The
/// abscissae must be strictly increasing and equispaced to 1e-9 relative.
/// When `expected_header` is non-empty the header must match it.
SampledFunction read_function_csv(std::istream& in, DecayClass decay,
                                  std::string_view expected_header = "x,value");
SampledFunction read_function_csv(const std::filesystem::path& path, DecayClass decay,
                                  std::string_view expected_header = "x,value");

/// Writes `content` to a sibling temporary file and renames it over `path`.
void write_file_atomically(const std::filesystem::path& path, std::string_view content);

}  // namespace bvf
