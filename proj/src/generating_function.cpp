#include <algorithm>
#include <cmath>
#include <string>

#include "degcorr/error.hpp"
#include "degcorr/theory.hpp"

namespace degcorr {

namespace {

using Series = std::vector<double>;

/// Power-series expansion of m / (2m + 1 - m x) up to x^max_k:
/// coefficient n is (m / (2m + 1))^(n + 1).
Series damping_series(int m, int max_k) {
    const double ratio = static_cast<double>(m) / (2.0 * m + 1.0);
    Series s(static_cast<std::size_t>(max_k) + 1);
    double term = ratio;
    for (auto& coeff : s) {
        coeff = term;
        term *= ratio;
    }
    return s;
}

/// Truncated Cauchy product; both inputs and the result have max_k + 1 terms.
Series multiply(const Series& a, const Series& b) {
    const std::size_t n = a.size();
    Series out(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0.0) continue;
        for (std::size_t j = 0; i + j < n; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

/// x^k monomial scaled by `value`, truncated.
Series monomial(double value, int k, int max_k) {
    Series s(static_cast<std::size_t>(max_k) + 1, 0.0);
    if (k >= 0 && k <= max_k) s[k] = value;
    return s;
}

void check_rows(int m, int max_k) {
    require(m >= 1, ErrorKind::invalid_parameter, "m must be at least 1");
    require(max_k > m + 1, ErrorKind::invalid_parameter, "max_k must exceed m + 1");
}

}  // namespace

double GFRow::value_at_one() const noexcept {
    CompensatedSum sum;
    for (double c : coefficients) sum += c;
    return sum.value();
}

std::vector<double> gf_first_row(int m, int max_k) {
    check_rows(m, max_k);
    const double md = m;
    const double a = md / (2.0 * md + 1.0);
    const double b = md / (md + 1.0);
    Series s(static_cast<std::size_t>(max_k) + 1, 0.0);
    // coefficient of x^k: (1/(m+1)) sum_{i=1}^{k-m} m^(k-m-1) / ((2m+1)^i (m+1)^(k-m-i)),
    // rewritten as (1/(m(m+1))) sum_i a^i b^(k-m-i) to stay in range for large k
    for (int k = m + 1; k <= max_k; ++k) {
        const int span = k - m;
        CompensatedSum inner;
        for (int i = 1; i <= span; ++i) inner += std::pow(a, i) * std::pow(b, span - i);
        s[k] = inner.value() / (md * (md + 1.0));
    }
    return s;
}

GFRow gf_row_directed(int m, int r, int max_k) {
    check_rows(m, max_k);
    require(r >= m, ErrorKind::invalid_parameter,
            "row " + std::to_string(r) + " is below m=" + std::to_string(m));
    const Series damp = damping_series(m, max_k);
    Series g = gf_first_row(m, max_k);
    for (int row = m + 1; row <= r; ++row) g = multiply(damp, g);
    return GFRow{r, m, std::move(g)};
}

std::vector<GFRow> gf_rows_directed(int m, int rows, int max_k) {
    check_rows(m, max_k);
    require(rows >= 1, ErrorKind::invalid_parameter, "need at least one row");
    const Series damp = damping_series(m, max_k);
    std::vector<GFRow> out;
    Series g = gf_first_row(m, max_k);
    for (int i = 0; i < rows; ++i) {
        if (i > 0) g = multiply(damp, g);
        out.push_back(GFRow{m + i, m, g});
    }
    return out;
}

// G_r = q G_{r-1} + sum_{k=m}^{r-1} [P(k,r) - q P(k,r-1)] x^k + q P(r,r) x^{r+1},
// with q = m / (2m + 1 - m x). Boundary values P(k, r) for k < r are the
// coefficients of x^r in the earlier rows; the diagonal P(r, r) equals
// m/(2m+1) times the x^r coefficient of G_{r-1}.
std::vector<GFRow> gf_rows_undirected(int m, int rows, int max_k) {
    check_rows(m, max_k);
    require(rows >= 1, ErrorKind::invalid_parameter, "need at least one row");
    const Series damp = damping_series(m, max_k);
    const double c = static_cast<double>(m) / (2.0 * m + 1.0);

    std::vector<GFRow> out;
    out.push_back(GFRow{m, m, gf_first_row(m, max_k)});
    auto earlier = [&](int row, int k) { return out[static_cast<std::size_t>(row - m)].coefficient(k); };

    for (int r = m + 1; r < m + rows; ++r) {
        Series g = multiply(damp, out.back().coefficients);
        Series lower(static_cast<std::size_t>(max_k) + 1, 0.0);
        for (int k = m; k <= std::min(r - 1, max_k); ++k) {
            g[k] += earlier(k, r);
            lower[k] = earlier(k, r - 1);
        }
        const Series damped_lower = multiply(damp, lower);
        const Series damped_diag = multiply(damp, monomial(c * earlier(r - 1, r), r + 1, max_k));
        for (std::size_t i = 0; i < g.size(); ++i) g[i] += damped_diag[i] - damped_lower[i];
        out.push_back(GFRow{r, m, std::move(g)});
    }
    return out;
}

}  // namespace degcorr
