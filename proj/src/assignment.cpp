#include "mtmc/assignment.hpp"

#include <algorithm>
#include <cmath>

namespace mtmc {

namespace {

struct Assignment {
    std::vector<std::size_t> row_to_col;
    // Potentials: cost(i, j) - row_potential[i] - col_potential[j] >= 0, with
    // equality on assigned cells.
    std::vector<double> row_potential;
    std::vector<double> col_potential;
};

// Minimum-cost perfect assignment on a square matrix (potentials form of the
// Hungarian method).
Assignment hungarian_min_cost(const std::vector<double>& cost, std::size_t n) {
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        p[0] = i;
        std::size_t j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            const std::size_t i0 = p[j0];
            double delta = kInf;
            std::size_t j1 = 0;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                const double cur = cost[(i0 - 1) * n + (j - 1)] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            const std::size_t j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }
    Assignment out;
    out.row_to_col.assign(n, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        if (p[j] != 0) out.row_to_col[p[j] - 1] = j - 1;
    }
    out.row_potential.assign(u.begin() + 1, u.end());
    out.col_potential.assign(v.begin() + 1, v.end());
    return out;
}

// Profit of an edge when unmatching is free: forbidden and negative edges are
// never better than leaving both endpoints unmatched.
double clipped(double w) { return std::isfinite(w) && w > 0.0 ? w : 0.0; }

struct Solved {
    double value = 0.0;
    Assignment assignment;
};

// Optimal total weight using only the given rows and columns.
Solved solve_restricted(const WeightMatrix& w, const std::vector<std::size_t>& rows,
                        const std::vector<std::size_t>& cols) {
    const std::size_t n = std::max(rows.size(), cols.size());
    if (rows.empty() || cols.empty()) return {};
    std::vector<double> cost(n * n, 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols.size(); ++j) {
            cost[i * n + j] = -clipped(w(rows[i], cols[j]));
        }
    }
    Solved out{0.0, hungarian_min_cost(cost, n)};
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const std::size_t j = out.assignment.row_to_col[i];
        if (j < cols.size()) out.value += clipped(w(rows[i], cols[j]));
    }
    return out;
}

}  // namespace

Matching solve_max_weight_matching(const WeightMatrix& w) {
    for (std::size_t r = 0; r < w.rows(); ++r) {
        for (std::size_t c = 0; c < w.cols(); ++c) {
            const double x = w(r, c);
            if (std::isnan(x) || x == kInf) {
                throw ValidationError("weight matrix entries must be finite or -inf");
            }
        }
    }

    std::vector<std::size_t> all_rows(w.rows()), all_cols(w.cols());
    for (std::size_t i = 0; i < all_rows.size(); ++i) all_rows[i] = i;
    for (std::size_t j = 0; j < all_cols.size(); ++j) all_cols[j] = j;
    const Solved full = solve_restricted(w, all_rows, all_cols);
    const double optimum = full.value;
    const double eps = 1e-9 * (1.0 + std::abs(optimum));

    // Complementary slackness: every edge of every optimal matching is tight
    // under the optimal potentials, so only tight edges need an exact check.
    double scale = 1.0;
    for (std::size_t r = 0; r < w.rows(); ++r) {
        for (std::size_t c = 0; c < w.cols(); ++c) scale = std::max(scale, clipped(w(r, c)));
    }
    auto tight = [&](std::size_t r, std::size_t c) {
        const double reduced =
            -clipped(w(r, c)) - full.assignment.row_potential[r] - full.assignment.col_potential[c];
        return std::abs(reduced) <= 1e-7 * scale * static_cast<double>(w.rows() + w.cols());
    };

    // Build the lexicographically smallest optimal pair list one pair at a
    // time: the next pair is the smallest one that still admits an optimal
    // completion using only later rows.
    Matching result;
    std::vector<char> col_used(w.cols(), 0);
    double fixed_sum = 0.0;
    std::size_t next_row = 0;
    while (fixed_sum < optimum - eps) {
        bool extended = false;
        for (std::size_t r = next_row; r < w.rows() && !extended; ++r) {
            std::vector<std::size_t> later_rows;
            for (std::size_t rr = r + 1; rr < w.rows(); ++rr) later_rows.push_back(rr);
            for (std::size_t c = 0; c < w.cols() && !extended; ++c) {
                const double x = w(r, c);
                if (col_used[c] || !std::isfinite(x) || x < 0.0 || !tight(r, c)) continue;
                std::vector<std::size_t> free_cols;
                for (std::size_t cc = 0; cc < w.cols(); ++cc) {
                    if (!col_used[cc] && cc != c) free_cols.push_back(cc);
                }
                const double rest = solve_restricted(w, later_rows, free_cols).value;
                if (fixed_sum + x + rest >= optimum - eps) {
                    result.emplace_back(r, c);
                    col_used[c] = 1;
                    fixed_sum += x;
                    next_row = r + 1;
                    extended = true;
                }
            }
        }
        if (!extended) {
            break;  // unreachable for consistent arithmetic
        }
    }
    return result;
}

double matching_weight(const WeightMatrix& weights, const Matching& matching) {
    double total = 0.0;
    for (const auto& [r, c] : matching) total += weights(r, c);
    return total;
}

}  // namespace mtmc
