#include "degcorr/degree_matrix.hpp"

#include <algorithm>

#include "degcorr/error.hpp"

namespace degcorr {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::invalid_parameter: return "invalid-parameter";
        case ErrorKind::empty_input: return "empty-input";
        case ErrorKind::incompatible_inputs: return "incompatible-inputs";
        case ErrorKind::unsupported_mode: return "unsupported-mode";
        case ErrorKind::invalid_state: return "invalid-state";
        case ErrorKind::parse_error: return "parse-error";
        case ErrorKind::io_error: return "io-error";
        case ErrorKind::usage: return "usage";
    }
    return "unknown";
}

std::string_view to_string(Mode mode) {
    return mode == Mode::directed ? "directed" : "undirected";
}

std::optional<Mode> parse_mode(std::string_view text) {
    if (text == "directed") return Mode::directed;
    if (text == "undirected") return Mode::undirected;
    return std::nullopt;
}

DegreeMatrix::DegreeMatrix(Mode mode, int max_degree)
    : mode_(mode), max_degree_(max_degree) {
    require(max_degree >= 0, ErrorKind::invalid_parameter, "max degree must be non-negative");
    cells_.assign(dim() * dim(), 0.0);
}

void DegreeMatrix::resize(int max_degree) {
    require(max_degree >= 0, ErrorKind::invalid_parameter, "max degree must be non-negative");
    DegreeMatrix grown(mode_, max_degree);
    const int keep = std::min(max_degree, max_degree_);
    for (int k1 = 0; k1 <= keep; ++k1)
        for (int k2 = 0; k2 <= keep; ++k2) grown(k1, k2) = (*this)(k1, k2);
    *this = std::move(grown);
}

double DegreeMatrix::total() const noexcept {
    CompensatedSum sum;
    for (double v : cells_) sum += v;
    return sum.value();
}

std::optional<int> DegreeMatrix::min_degree_present() const noexcept {
    std::optional<int> lo;
    for (int k1 = 0; k1 <= max_degree_; ++k1)
        for (int k2 = 0; k2 <= max_degree_; ++k2)
            if ((*this)(k1, k2) != 0.0) {
                const int k = std::min(k1, k2);
                if (!lo || k < *lo) lo = k;
            }
    return lo;
}

std::optional<int> DegreeMatrix::max_degree_present() const noexcept {
    std::optional<int> hi;
    for (int k1 = 0; k1 <= max_degree_; ++k1)
        for (int k2 = 0; k2 <= max_degree_; ++k2)
            if ((*this)(k1, k2) != 0.0) {
                const int k = std::max(k1, k2);
                if (!hi || k > *hi) hi = k;
            }
    return hi;
}

}  // namespace degcorr
