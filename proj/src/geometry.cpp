#include "facecloak/geometry.hpp"

#include <algorithm>
#include <numeric>

namespace facecloak {

namespace {

void require_valid(const BoundingBox& b, const char* who) {
  if (!b.valid()) {
    throw std::invalid_argument(std::string(who) +
                                ": box must have positive width and height");
  }
}

}  // namespace

BoundingBox BoundingBox::clipped_to(double width, double height) const {
  const double x0 = std::max(x, 0.0);
  const double y0 = std::max(y, 0.0);
  const double x1 = std::min(x + w, width);
  const double y1 = std::min(y + h, height);
  if (x1 <= x0 || y1 <= y0) {
    throw std::invalid_argument("clipped_to: box lies outside the image");
  }
  return {x0, y0, x1 - x0, y1 - y0};
}

double iou(const BoundingBox& a, const BoundingBox& b) {
  require_valid(a, "iou");
  require_valid(b, "iou");
  const double dw =
      std::max(0.0, std::min(a.x + a.w, b.x + b.w) - std::max(a.x, b.x));
  const double dh =
      std::max(0.0, std::min(a.y + a.h, b.y + b.h) - std::max(a.y, b.y));
  const double inter = dw * dh;
  if (inter <= 0.0) return 0.0;
  return inter / (a.w * a.h + b.w * b.h - inter);
}

MatchResult match_detections(const std::vector<ScoredBox>& detections,
                             const std::vector<BoundingBox>& ground_truth,
                             double iou_min) {
  if (!(iou_min > 0.0 && iou_min <= 1.0)) {
    throw std::invalid_argument("match_detections: iou_min must be in (0,1]");
  }
  for (const auto& d : detections) {
    require_valid(d.box, "match_detections");
    if (d.confidence < 0.0 || d.confidence > 1.0) {
      throw std::invalid_argument(
          "match_detections: confidence must be in [0,1]");
    }
  }
  for (const auto& g : ground_truth) require_valid(g, "match_detections");

  std::vector<std::size_t> order(detections.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return detections[i].confidence > detections[j].confidence;
  });

  MatchResult result;
  std::vector<bool> gt_taken(ground_truth.size(), false);
  for (std::size_t di : order) {
    double best = 0.0;
    std::size_t best_gt = ground_truth.size();
    for (std::size_t gi = 0; gi < ground_truth.size(); ++gi) {
      if (gt_taken[gi]) continue;
      const double v = iou(detections[di].box, ground_truth[gi]);
      if (v > best) {
        best = v;
        best_gt = gi;
      }
    }
    if (best_gt < ground_truth.size() && best >= iou_min) {
      gt_taken[best_gt] = true;
      result.true_matches.emplace_back(di, best_gt);
    } else {
      result.false_detections.push_back(di);
    }
  }
  for (std::size_t gi = 0; gi < ground_truth.size(); ++gi) {
    if (!gt_taken[gi]) result.missed_ground_truth.push_back(gi);
  }
  return result;
}

std::vector<ScoredBox> non_max_suppression(std::vector<ScoredBox> boxes,
                                           double iou_thresh) {
  std::stable_sort(boxes.begin(), boxes.end(),
                   [](const ScoredBox& a, const ScoredBox& b) {
                     return a.confidence > b.confidence;
                   });
  std::vector<ScoredBox> kept;
  for (const auto& cand : boxes) {
    bool suppressed = false;
    for (const auto& k : kept) {
      if (iou(cand.box, k.box) > iou_thresh) {
        suppressed = true;
        break;
      }
    }
    if (!suppressed) kept.push_back(cand);
  }
  return kept;
}

}  // namespace facecloak
