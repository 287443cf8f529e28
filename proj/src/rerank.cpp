#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include "mtmc/mct.hpp"

namespace mtmc::mct {

namespace {

// k / 2 rounded half to even.
int half_of(int k) {
    if (k % 2 == 0) return k / 2;
    const int down = k / 2;
    return down % 2 == 0 ? down : down + 1;
}

struct NeighborIndex {
    std::vector<std::vector<std::size_t>> rank;  // rank[i][0] == i

    // The k + 1 nearest items of i, itself included.
    std::span<const std::size_t> nearest(std::size_t i, int k) const {
        const auto count = std::min(rank[i].size(), static_cast<std::size_t>(k) + 1);
        return std::span<const std::size_t>(rank[i].data(), count);
    }

    bool in_nearest(std::size_t i, std::size_t j, int k) const {
        const auto nn = nearest(i, k);
        return std::find(nn.begin(), nn.end(), j) != nn.end();
    }

    std::vector<std::size_t> reciprocal(std::size_t i, int k) const {
        std::vector<std::size_t> out;
        for (std::size_t j : nearest(i, k)) {
            if (in_nearest(j, i, k)) out.push_back(j);
        }
        std::sort(out.begin(), out.end());
        return out;
    }
};

}  // namespace

Matrix k_reciprocal_rerank(const Matrix& d, int k1, int k2, double lambda) {
    if (d.rows() != d.cols()) {
        throw ValidationError("re-ranking needs a square distance matrix");
    }
    const std::size_t n = d.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!(d(i, j) >= 0.0) || !std::isfinite(d(i, j))) {
                throw ValidationError("re-ranking needs finite non-negative distances");
            }
        }
    }
    if (n <= 1) {
        return Matrix(n, n, 0.0);
    }
    const int limit = static_cast<int>(n) - 1;
    k1 = std::clamp(k1, 1, limit);
    k2 = std::clamp(k2, 1, limit);

    Matrix norm(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double row_max = 0.0;
        for (std::size_t j = 0; j < n; ++j) row_max = std::max(row_max, d(i, j) * d(i, j));
        if (row_max > 0.0) {
            for (std::size_t j = 0; j < n; ++j) norm(i, j) = d(i, j) * d(i, j) / row_max;
        }
    }

    NeighborIndex index;
    index.rank.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        auto& r = index.rank[i];
        r.resize(n);
        std::iota(r.begin(), r.end(), std::size_t{0});
        std::sort(r.begin(), r.end(), [&](std::size_t a, std::size_t b) {
            if (norm(i, a) != norm(i, b)) return norm(i, a) < norm(i, b);
            if ((a == i) != (b == i)) return a == i;
            return a < b;
        });
    }

    // Encode each item as a weight vector over its expanded reciprocal set.
    const int half = half_of(k1);
    std::vector<std::vector<double>> v(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const auto base = index.reciprocal(i, k1);
        std::vector<std::size_t> expanded = base;
        for (std::size_t q : base) {
            const auto candidate = index.reciprocal(q, half);
            std::size_t shared = 0;
            for (std::size_t c : candidate) {
                shared += std::binary_search(base.begin(), base.end(), c) ? 1 : 0;
            }
            if (3 * shared >= 2 * candidate.size()) {
                expanded.insert(expanded.end(), candidate.begin(), candidate.end());
            }
        }
        std::sort(expanded.begin(), expanded.end());
        expanded.erase(std::unique(expanded.begin(), expanded.end()), expanded.end());

        double total = 0.0;
        for (std::size_t j : expanded) total += std::exp(-norm(i, j));
        for (std::size_t j : expanded) v[i][j] = std::exp(-norm(i, j)) / total;
    }

    // Local query expansion over the k2 nearest items (self included).
    if (k2 > 1) {
        std::vector<std::vector<double>> expanded(n, std::vector<double>(n, 0.0));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t m = 0; m < static_cast<std::size_t>(k2); ++m) {
                const auto& src = v[index.rank[i][m]];
                for (std::size_t j = 0; j < n; ++j) expanded[i][j] += src[j];
            }
            for (double& x : expanded[i]) x /= static_cast<double>(k2);
        }
        v = std::move(expanded);
    }

    Matrix blended(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double lo = 0.0, hi = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                lo += std::min(v[i][k], v[j][k]);
                hi += std::max(v[i][k], v[j][k]);
            }
            const double jaccard = 1.0 - lo / hi;
            blended(i, j) = lambda * d(i, j) + (1.0 - lambda) * jaccard;
        }
    }

    Matrix out(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) out(i, j) = 0.5 * (blended(i, j) + blended(j, i));
        }
    }
    return out;
}

}  // namespace mtmc::mct
