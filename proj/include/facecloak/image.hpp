#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace facecloak {

/// RGB image with real-valued samples on the 0..255 scale, (row, col, channel)
/// contiguous. Values stay real throughout optimization; quantization to
/// 8-bit happens only at export / codec boundaries.
struct ImageTensor {
  int height = 0;
  int width = 0;
  std::vector<double> values;  // height * width * 3

  ImageTensor() = default;
  ImageTensor(int h, int w, double fill = 0.0)
      : height(h), width(w), values(static_cast<std::size_t>(h) * w * 3, fill) {}

  double& at(int y, int x, int c) {
    return values[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  double at(int y, int x, int c) const {
    return values[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  std::size_t size() const { return values.size(); }
  bool same_shape(const ImageTensor& o) const {
    return height == o.height && width == o.width;
  }
};

/// Round-to-nearest with clamping to [0, 255].
std::vector<std::uint8_t> quantize(const ImageTensor& image);
ImageTensor from_bytes(const std::vector<std::uint8_t>& rgb, int height,
                       int width);

/// Clamp all samples into [0, 255] in place (projection to the RGB range).
void clip_to_rgb_range(ImageTensor& image);

/// Mean of (values/255)^2 over all samples; the attack budget quantity.
double mean_square_normalized(const ImageTensor& image);

double l2_norm(const ImageTensor& image);

ImageTensor load_png(const std::filesystem::path& path);
void save_png(const std::filesystem::path& path, const ImageTensor& image);

/// Baseline JPEG round trip helpers (quantizes the input first).
std::vector<std::uint8_t> encode_jpeg(const ImageTensor& image, int quality);
ImageTensor decode_jpeg(const std::vector<std::uint8_t>& bytes);

/// Loads PNG or JPEG based on the file's magic bytes.
ImageTensor load_image(const std::filesystem::path& path);

}  // namespace facecloak
