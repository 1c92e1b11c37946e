#include "bvf/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

namespace bvf {
namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

double parse_number(const std::string& field, std::size_t line_no) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
        throw DataError("line " + std::to_string(line_no) + ": bad number '" + field + "'");
    }
    return v;
}

}  // namespace

SampledFunction read_function_csv(std::istream& in, DecayClass decay,
                                  std::string_view expected_header) {
    std::string line;
    std::size_t line_no = 0;
    std::string header;
    while (std::getline(in, line)) {
        ++line_no;
        header = trim(line);
        if (!header.empty()) break;
    }
    if (header.empty()) throw DataError("empty CSV input");
    std::string compact;
    for (char c : header) {
        if (c != ' ' && c != '\t') compact.push_back(c);
    }
    if (!expected_header.empty() && compact != expected_header) {
        throw DataError("expected header '" + std::string(expected_header) + "', got '" + header + "'");
    }

    std::vector<double> xs, ys;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string t = trim(line);
        if (t.empty()) continue;
        const auto comma = t.find(',');
        if (comma == std::string::npos || t.find(',', comma + 1) != std::string::npos) {
            throw DataError("line " + std::to_string(line_no) + ": expected two columns");
        }
        xs.push_back(parse_number(trim(t.substr(0, comma)), line_no));
        ys.push_back(parse_number(trim(t.substr(comma + 1)), line_no));
    }
    if (xs.size() < 2) throw DataError("CSV needs at least two data rows");

    const double h = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    if (!(h > 0.0)) throw DataError("abscissae must be strictly increasing");
    for (std::size_t i = 1; i < xs.size(); ++i) {
        const double step = xs[i] - xs[i - 1];
        if (!(step > 0.0)) throw DataError("abscissae must be strictly increasing");
        if (std::abs(step - h) > 1e-9 * h) {
            throw DataError("abscissae are not equispaced near row " + std::to_string(i + 1));
        }
    }
    try {
        return SampledFunction(Grid::uniform(xs.front(), xs.back(), xs.size()), std::move(ys), decay);
    } catch (const std::invalid_argument& e) {
        throw DataError(e.what());
    }
}

SampledFunction read_function_csv(const std::filesystem::path& path, DecayClass decay,
                                  std::string_view expected_header) {
    std::ifstream in(path);
    if (!in) throw DataError("cannot open " + path.string());
    return read_function_csv(in, decay, expected_header);
}

void write_file_atomically(const std::filesystem::path& path, std::string_view content) {
    auto tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out) throw std::runtime_error("write failed for " + tmp.string());
    }
    std::filesystem::rename(tmp, path);
}

}  // namespace bvf
