#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace degcorr {

/// Orientation convention of an edge-state table.
///
/// `directed` tables hold the full matrix indexed by (creator degree, target
/// degree). `undirected` tables hold unordered pairs in the upper triangle
/// only (k1 <= k2); cells below the diagonal are always zero.
enum class Mode { directed, undirected };

std::string_view to_string(Mode mode);
std::optional<Mode> parse_mode(std::string_view text);

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) noexcept {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x))
            carry_ += (sum_ - t) + x;
        else
            carry_ += (x - t) + sum_;
        sum_ = t;
    }
    CompensatedSum& operator+=(double x) noexcept {
        add(x);
        return *this;
    }
    double value() const noexcept { return sum_ + carry_; }

private:
    double sum_ = 0.0;
    double carry_ = 0.0;
};

/// Dense square table over degree pairs (k1, k2) with 0 <= k1, k2 <= max_degree.
class DegreeMatrix {
public:
    DegreeMatrix() = default;
    DegreeMatrix(Mode mode, int max_degree);

    Mode mode() const noexcept { return mode_; }
    int max_degree() const noexcept { return max_degree_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(max_degree_) + 1; }

    double operator()(int k1, int k2) const noexcept { return cells_[index(k1, k2)]; }
    double& operator()(int k1, int k2) noexcept { return cells_[index(k1, k2)]; }

    /// Value or zero for any integer pair, including out-of-window and negative degrees.
    double get(int k1, int k2) const noexcept {
        if (k1 < 0 || k2 < 0 || k1 > max_degree_ || k2 > max_degree_) return 0.0;
        return cells_[index(k1, k2)];
    }

    /// Stored value for the unordered pair {k1, k2} regardless of argument order.
    /// Directed tables return the ordered cell unchanged.
    double unordered(int k1, int k2) const noexcept {
        if (mode_ == Mode::undirected && k1 > k2) return get(k2, k1);
        return get(k1, k2);
    }

    /// Probability of the ordered pair (k1, k2) in the symmetrized ordered-pair
    /// ensemble. Undirected off-diagonal mass is split equally between the two
    /// orientations; directed tables are returned as stored.
    double ordered_pair(int k1, int k2) const noexcept {
        if (mode_ == Mode::directed) return get(k1, k2);
        if (k1 == k2) return get(k1, k1);
        return 0.5 * unordered(k1, k2);
    }

    /// Grow (or shrink) the window, keeping the overlapping cells.
    void resize(int max_degree);

    double total() const noexcept;
    /// Smallest degree that appears in any nonzero cell, or nullopt if empty.
    std::optional<int> min_degree_present() const noexcept;
    std::optional<int> max_degree_present() const noexcept;

    const std::vector<double>& cells() const noexcept { return cells_; }

    friend bool operator==(const DegreeMatrix&, const DegreeMatrix&) = default;

private:
    std::size_t index(int k1, int k2) const noexcept {
        return static_cast<std::size_t>(k1) * dim() + static_cast<std::size_t>(k2);
    }

    Mode mode_ = Mode::directed;
    int max_degree_ = 0;
    std::vector<double> cells_ = std::vector<double>(1, 0.0);
};

}  // namespace degcorr
