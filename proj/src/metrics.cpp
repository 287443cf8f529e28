#include "mtmc/metrics.hpp"

#include <map>
#include <set>
#include <utility>

#include "mtmc/assignment.hpp"
#include "mtmc/geometry.hpp"

namespace mtmc::metrics {

namespace {

using Cell = std::pair<int, int>;  // (camera, frame)
using Coverage = std::map<Cell, BoundingBox>;

std::vector<Coverage> coverage_of(std::span<const IdentityCluster> side, const char* name) {
    std::set<int> labels;
    std::vector<Coverage> out;
    out.reserve(side.size());
    for (const auto& cluster : side) {
        if (!labels.insert(cluster.identity).second) {
            throw ValidationError(std::string(name) + " reuses identity label " +
                                  std::to_string(cluster.identity));
        }
        Coverage cov;
        for (const auto& member : cluster.members) {
            for (const auto& p : member.points()) {
                if (!cov.emplace(Cell{member.camera(), p.frame}, p.box).second) {
                    throw ValidationError(std::string(name) + " identity " + std::to_string(cluster.identity) +
                                          " has two boxes in camera " + std::to_string(member.camera()) +
                                          " frame " + std::to_string(p.frame));
                }
            }
        }
        out.push_back(std::move(cov));
    }
    return out;
}

std::int64_t agreement(const Coverage& gt, const Coverage& hyp) {
    std::int64_t count = 0;
    const Coverage& small = gt.size() <= hyp.size() ? gt : hyp;
    const Coverage& large = gt.size() <= hyp.size() ? hyp : gt;
    for (const auto& [cell, box] : small) {
        auto it = large.find(cell);
        if (it == large.end()) continue;
        const BoundingBox& g = (&small == &gt) ? box : it->second;
        const BoundingBox& h = (&small == &gt) ? it->second : box;
        count += frame_match(g, h) ? 1 : 0;
    }
    return count;
}

}  // namespace

IdMetricsReport make_report(std::int64_t idtp, std::int64_t idfp, std::int64_t idfn) {
    IdMetricsReport r;
    r.idtp = idtp;
    r.idfp = idfp;
    r.idfn = idfn;
    auto ratio = [](double num, double den) { return den > 0.0 ? num / den : 0.0; };
    const auto tp = static_cast<double>(idtp);
    r.idp = ratio(tp, tp + static_cast<double>(idfp));
    r.idr = ratio(tp, tp + static_cast<double>(idfn));
    r.idf1 = ratio(2.0 * tp, 2.0 * tp + static_cast<double>(idfp) + static_cast<double>(idfn));
    return r;
}

bool frame_match(const BoundingBox& gt, const BoundingBox& hyp) { return iou(gt, hyp) >= 0.5; }

IdMetricsReport id_measures(std::span<const IdentityCluster> ground_truth,
                            std::span<const IdentityCluster> hypothesis) {
    const auto gt = coverage_of(ground_truth, "ground truth");
    const auto hyp = coverage_of(hypothesis, "hypothesis");

    std::int64_t gt_total = 0, hyp_total = 0;
    for (const auto& c : gt) gt_total += static_cast<std::int64_t>(c.size());
    for (const auto& c : hyp) hyp_total += static_cast<std::int64_t>(c.size());

    // Minimizing disagreements with free unmatching is the same as maximizing
    // the matched agreement counts: cost = |T| + |C| - 2 * agree.
    WeightMatrix agree(gt.size(), hyp.size(), 0.0);
    for (std::size_t i = 0; i < gt.size(); ++i) {
        for (std::size_t j = 0; j < hyp.size(); ++j) {
            agree(i, j) = static_cast<double>(agreement(gt[i], hyp[j]));
        }
    }
    std::int64_t idtp = 0;
    for (const auto& [i, j] : solve_max_weight_matching(agree)) {
        idtp += static_cast<std::int64_t>(agree(i, j));
    }
    return make_report(idtp, hyp_total - idtp, gt_total - idtp);
}

}  // namespace mtmc::metrics
