#pragma once

#include <optional>
#include <vector>

#include "facecloak/geometry.hpp"
#include "facecloak/image.hpp"

namespace facecloak {

/// Per-image detection counts after matching against annotation ground truth.
struct ImageCounts {
  int true_detections = 0;
  int false_detections = 0;
  int ground_truth = 0;
};

ImageCounts count_matches(const std::vector<ScoredBox>& detections,
                          const std::vector<BoundingBox>& ground_truth,
                          double iou_min = 0.5);

/// Data utility quality: (sum true - sum false) / sum ground truth, with the
/// counts summed over all images. Throws when the aggregate ground truth is
/// empty; that is a reported error, not a silent zero.
double duq(const std::vector<ImageCounts>& per_image);

struct ApOptions {
  double iou_min = 0.5;
  /// When true, use the interpolated precision envelope; default is the raw
  /// step integration of the PR curve.
  bool interpolated = false;
};

struct ApResult {
  double ap = 0.0;
  bool no_detections = false;
};

/// Dataset-scale average precision: detections are pooled across images,
/// sorted by descending confidence and matched greedily per image.
/// `detections[i]` pairs with `ground_truth[i]`.
ApResult average_precision(
    const std::vector<std::vector<ScoredBox>>& detections,
    const std::vector<std::vector<BoundingBox>>& ground_truth,
    const ApOptions& options = {});

/// Structural similarity with the standard constants: K1=0.01, K2=0.03,
/// dynamic range 255, 11x11 Gaussian window with std 1.5. The map is computed
/// over the valid (fully covered) window positions per channel; the result is
/// the mean over windows and channels.
double ssim(const ImageTensor& a, const ImageTensor& b);

}  // namespace facecloak
