#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qocr::imaging {

/// Row-major grayscale image, 0 = black, 1 = white.
class GrayImage {
 public:
  /// Constant-filled image.
  GrayImage(int width, int height, double fill = 1.0);
  /// Throws DomainError on size mismatch or values outside [0,1].
  GrayImage(int width, int height, std::vector<double> pixels);

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::size_t size() const noexcept { return pixels_.size(); }

  double at(int x, int y) const { return pixels_[index(x, y)]; }
  void set(int x, int y, double v);

  std::span<const double> pixels() const noexcept { return pixels_; }

  bool same_shape(const GrayImage& other) const noexcept {
    return width_ == other.width_ && height_ == other.height_;
  }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  std::size_t index(int x, int y) const {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<double> pixels_;
};

struct SegmentBox {
  int x0, x1;  // columns [x0, x1)
  int y0, y1;  // rows [y0, y1)

  friend bool operator==(const SegmentBox&, const SegmentBox&) = default;
};

/// Mean of each n x n block (camera averaging model).
GrayImage downsample_avg(const GrayImage& img, int n);

/// Each pixel becomes an n x n constant block.
GrayImage upscale_repeat(const GrayImage& img, int n);

/// pixel < t -> 0, pixel >= t -> 1.
GrayImage threshold(const GrayImage& img, double t);

/// Column-projection segmentation of dark glyphs on a light background.
/// A column is ink when any pixel in it is below `ink_threshold`; each
/// maximal run of ink columns becomes one box, tightened to the rows that
/// hold dark pixels. Boxes are ordered left to right.
std::vector<SegmentBox> segment_projection(const GrayImage& img, double ink_threshold);

/// Copy of the region inside `box`.
GrayImage crop(const GrayImage& img, const SegmentBox& box);

/// 1 - sum_i |x_i - y_i| / N
double match_percent(const GrayImage& x, const GrayImage& y);

/// Round-trip through 8-bit storage: round(v * 255) / 255.
GrayImage quantize(const GrayImage& img);

}  // namespace qocr::imaging
