#include "facecloak/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace facecloak {

ImageCounts count_matches(const std::vector<ScoredBox>& detections,
                          const std::vector<BoundingBox>& ground_truth,
                          double iou_min) {
  const MatchResult m = match_detections(detections, ground_truth, iou_min);
  ImageCounts c;
  c.true_detections = static_cast<int>(m.true_matches.size());
  c.false_detections = static_cast<int>(m.false_detections.size());
  c.ground_truth = static_cast<int>(ground_truth.size());
  return c;
}

double duq(const std::vector<ImageCounts>& per_image) {
  long long t = 0, f = 0, g = 0;
  for (const auto& c : per_image) {
    t += c.true_detections;
    f += c.false_detections;
    g += c.ground_truth;
  }
  if (g <= 0) {
    throw std::invalid_argument("duq: aggregate ground truth is empty");
  }
  return static_cast<double>(t - f) / static_cast<double>(g);
}

ApResult average_precision(
    const std::vector<std::vector<ScoredBox>>& detections,
    const std::vector<std::vector<BoundingBox>>& ground_truth,
    const ApOptions& options) {
  if (detections.size() != ground_truth.size()) {
    throw std::invalid_argument("average_precision: image count mismatch");
  }
  std::size_t total_gt = 0;
  for (const auto& g : ground_truth) total_gt += g.size();
  if (total_gt == 0) {
    throw std::invalid_argument("average_precision: no ground truth");
  }

  // Pool detections with their image index, globally sorted by confidence.
  struct Det {
    double confidence;
    std::size_t image;
    std::size_t index;
  };
  std::vector<Det> pool;
  for (std::size_t i = 0; i < detections.size(); ++i) {
    for (std::size_t j = 0; j < detections[i].size(); ++j) {
      pool.push_back({detections[i][j].confidence, i, j});
    }
  }
  if (pool.empty()) return {0.0, true};
  std::stable_sort(pool.begin(), pool.end(), [](const Det& a, const Det& b) {
    return a.confidence > b.confidence;
  });

  // Greedy matching in global confidence order; greedy matches of a prefix do
  // not depend on later detections, so this equals thresholding at every
  // confidence level.
  std::vector<std::vector<bool>> gt_taken(ground_truth.size());
  for (std::size_t i = 0; i < ground_truth.size(); ++i) {
    gt_taken[i].assign(ground_truth[i].size(), false);
  }

  std::vector<bool> is_tp(pool.size(), false);
  for (std::size_t k = 0; k < pool.size(); ++k) {
    const auto& d = pool[k];
    const auto& box = detections[d.image][d.index].box;
    const auto& gts = ground_truth[d.image];
    double best = 0.0;
    std::size_t best_gt = gts.size();
    for (std::size_t gi = 0; gi < gts.size(); ++gi) {
      if (gt_taken[d.image][gi]) continue;
      const double v = iou(box, gts[gi]);
      if (v > best) {
        best = v;
        best_gt = gi;
      }
    }
    if (best_gt < gts.size() && best >= options.iou_min) {
      gt_taken[d.image][best_gt] = true;
      is_tp[k] = true;
    }
  }

  std::vector<double> precision(pool.size());
  std::vector<double> recall(pool.size());
  std::size_t tp = 0;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    if (is_tp[k]) ++tp;
    precision[k] = static_cast<double>(tp) / static_cast<double>(k + 1);
    recall[k] = static_cast<double>(tp) / static_cast<double>(total_gt);
  }

  if (options.interpolated) {
    for (std::size_t k = pool.size() - 1; k-- > 0;) {
      precision[k] = std::max(precision[k], precision[k + 1]);
    }
  }

  double ap = 0.0;
  double prev_recall = 0.0;
  for (std::size_t k = 0; k < pool.size(); ++k) {
    ap += (recall[k] - prev_recall) * precision[k];
    prev_recall = recall[k];
  }
  return {ap, false};
}

// ---------------------------------------------------------------------------
// SSIM
// ---------------------------------------------------------------------------

namespace {

constexpr int kWindow = 11;
constexpr double kWindowSigma = 1.5;
constexpr double kC1 = (0.01 * 255.0) * (0.01 * 255.0);
constexpr double kC2 = (0.03 * 255.0) * (0.03 * 255.0);

std::vector<double> gaussian_window_1d() {
  std::vector<double> w(kWindow);
  const int half = kWindow / 2;
  double sum = 0.0;
  for (int i = 0; i < kWindow; ++i) {
    const double d = static_cast<double>(i - half);
    w[i] = std::exp(-d * d / (2.0 * kWindowSigma * kWindowSigma));
    sum += w[i];
  }
  for (double& v : w) v /= sum;
  return w;
}

// Separable valid-region window filter for one channel laid out as h*w.
std::vector<double> window_filter(const std::vector<double>& plane, int h,
                                  int w, const std::vector<double>& win) {
  const int oh = h - kWindow + 1;
  const int ow = w - kWindow + 1;
  std::vector<double> tmp(static_cast<std::size_t>(h) * ow);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < kWindow; ++k) acc += win[k] * plane[y * w + x + k];
      tmp[y * ow + x] = acc;
    }
  }
  std::vector<double> out(static_cast<std::size_t>(oh) * ow);
  for (int y = 0; y < oh; ++y) {
    for (int x = 0; x < ow; ++x) {
      double acc = 0.0;
      for (int k = 0; k < kWindow; ++k) acc += win[k] * tmp[(y + k) * ow + x];
      out[y * ow + x] = acc;
    }
  }
  return out;
}

}  // namespace

double ssim(const ImageTensor& a, const ImageTensor& b) {
  if (!a.same_shape(b)) {
    throw std::invalid_argument("ssim: image dimensions differ");
  }
  if (a.height < kWindow || a.width < kWindow) {
    throw std::invalid_argument("ssim: image smaller than the 11x11 window");
  }
  const std::vector<double> win = gaussian_window_1d();
  const int h = a.height, w = a.width;
  const std::size_t plane_size = static_cast<std::size_t>(h) * w;

  double channel_sum = 0.0;
  std::vector<double> xa(plane_size), xb(plane_size), xaa(plane_size),
      xbb(plane_size), xab(plane_size);
  for (int c = 0; c < 3; ++c) {
    for (int y = 0; y < h; ++y) {
      for (int x = 0; x < w; ++x) {
        const double va = a.at(y, x, c);
        const double vb = b.at(y, x, c);
        const std::size_t i = static_cast<std::size_t>(y) * w + x;
        xa[i] = va;
        xb[i] = vb;
        xaa[i] = va * va;
        xbb[i] = vb * vb;
        xab[i] = va * vb;
      }
    }
    const auto mu_a = window_filter(xa, h, w, win);
    const auto mu_b = window_filter(xb, h, w, win);
    const auto m_aa = window_filter(xaa, h, w, win);
    const auto m_bb = window_filter(xbb, h, w, win);
    const auto m_ab = window_filter(xab, h, w, win);

    double acc = 0.0;
    for (std::size_t i = 0; i < mu_a.size(); ++i) {
      const double va = m_aa[i] - mu_a[i] * mu_a[i];
      const double vb = m_bb[i] - mu_b[i] * mu_b[i];
      const double cov = m_ab[i] - mu_a[i] * mu_b[i];
      const double num = (2.0 * mu_a[i] * mu_b[i] + kC1) * (2.0 * cov + kC2);
      const double den =
          (mu_a[i] * mu_a[i] + mu_b[i] * mu_b[i] + kC1) * (va + vb + kC2);
      acc += num / den;
    }
    channel_sum += acc / static_cast<double>(mu_a.size());
  }
  return channel_sum / 3.0;
}

}  // namespace facecloak
