#pragma once

#include <cstdint>
#include <span>

#include "mtmc/types.hpp"

namespace mtmc::metrics {

struct IdMetricsReport {
    std::int64_t idtp = 0;
    std::int64_t idfp = 0;
    std::int64_t idfn = 0;
    double idf1 = 0.0;
    double idp = 0.0;
    double idr = 0.0;

    friend bool operator==(const IdMetricsReport&, const IdMetricsReport&) = default;
};

/// Builds a report from the three counts, using 0 for empty denominators.
IdMetricsReport make_report(std::int64_t idtp, std::int64_t idfp, std::int64_t idfn);

/// Per-frame correspondence: IoU >= 0.5.
bool frame_match(const BoundingBox& gt, const BoundingBox& hyp);

/// Identity precision/recall/F1 under the optimal one-to-one assignment of
/// true to computed identities over all (camera, frame) cells.
///
/// Throws ValidationError when a side reuses an identity label or an
/// identity has two boxes in one (camera, frame).
IdMetricsReport id_measures(std::span<const IdentityCluster> ground_truth,
                            std::span<const IdentityCluster> hypothesis);

}  // namespace mtmc::metrics
