#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace facecloak {

/// Axis-aligned box in continuous pixel coordinates. (x, y) is the top-left
/// corner, (w, h) the extent. Boxes are never clipped implicitly; call
/// clipped_to() when an image-bounded box is needed.
struct BoundingBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  bool valid() const { return w > 0.0 && h > 0.0; }
  double area() const { return w * h; }
  double cx() const { return x + 0.5 * w; }
  double cy() const { return y + 0.5 * h; }

  /// Intersects with [0, width] x [0, height]; throws if nothing remains.
  BoundingBox clipped_to(double width, double height) const;

  bool operator==(const BoundingBox&) const = default;
};

/// Intersection over union. Zero when the boxes share at most an edge.
double iou(const BoundingBox& a, const BoundingBox& b);

struct ScoredBox {
  BoundingBox box;
  double confidence = 0.0;
};

struct MatchResult {
  /// (detection index, ground truth index), in descending confidence order.
  std::vector<std::pair<std::size_t, std::size_t>> true_matches;
  std::vector<std::size_t> false_detections;
  std::vector<std::size_t> missed_ground_truth;
};

/// Greedy matching in descending confidence order: a detection is true iff
/// its best-IoU unmatched ground-truth box reaches iou_min; each ground-truth
/// box is consumed by at most one detection. Ties in confidence are broken by
/// detection index so the result is deterministic.
MatchResult match_detections(const std::vector<ScoredBox>& detections,
                             const std::vector<BoundingBox>& ground_truth,
                             double iou_min = 0.5);

/// Greedy non-maximum suppression; keeps boxes in descending confidence order
/// and drops any box with IoU > iou_thresh against an already kept one.
std::vector<ScoredBox> non_max_suppression(std::vector<ScoredBox> boxes,
                                           double iou_thresh);

}  // namespace facecloak
