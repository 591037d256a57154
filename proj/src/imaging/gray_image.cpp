#include "qocr/imaging/gray_image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qocr/error.hpp"
#include "qocr/imaging/pgm.hpp"
#include "qocr/simd/kernels.hpp"

namespace qocr::imaging {
namespace {

void check_dims(int width, int height) {
  if (width < 1 || height < 1) {
    throw DomainError("image dimensions must be positive, got " + std::to_string(width) + "x" +
                      std::to_string(height));
  }
}

void check_value(double v) {
  if (!(v >= 0.0 && v <= 1.0)) {
    throw DomainError("pixel value " + std::to_string(v) + " is outside [0,1]");
  }
}

void check_factor(int n) {
  if (n < 1) throw DomainError("scale factor must be at least 1, got " + std::to_string(n));
}

}  // namespace

GrayImage::GrayImage(int width, int height, double fill) : width_(width), height_(height) {
  check_dims(width, height);
  check_value(fill);
  pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
}

GrayImage::GrayImage(int width, int height, std::vector<double> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_dims(width, height);
  if (pixels_.size() != static_cast<std::size_t>(width) * static_cast<std::size_t>(height)) {
    throw DomainError("pixel count " + std::to_string(pixels_.size()) + " does not match " +
                      std::to_string(width) + "x" + std::to_string(height));
  }
  for (double v : pixels_) check_value(v);
}

void GrayImage::set(int x, int y, double v) {
  check_value(v);
  pixels_[index(x, y)] = v;
}

GrayImage downsample_avg(const GrayImage& img, int n) {
  check_factor(n);
  if (img.width() % n != 0 || img.height() % n != 0) {
    throw DomainError("image " + std::to_string(img.width()) + "x" + std::to_string(img.height()) +
                      " is not divisible by " + std::to_string(n));
  }
  const int w = img.width() / n;
  const int h = img.height() / n;
  const double cells = static_cast<double>(n) * n;
  std::vector<double> out(static_cast<std::size_t>(w) * h);
  for (int by = 0; by < h; ++by) {
    for (int bx = 0; bx < w; ++bx) {
      double sum = 0.0;
      for (int dy = 0; dy < n; ++dy) {
        for (int dx = 0; dx < n; ++dx) sum += img.at(bx * n + dx, by * n + dy);
      }
      out[static_cast<std::size_t>(by) * w + bx] = std::clamp(sum / cells, 0.0, 1.0);
    }
  }
  return GrayImage(w, h, std::move(out));
}

GrayImage upscale_repeat(const GrayImage& img, int n) {
  check_factor(n);
  const int w = img.width() * n;
  const int h = img.height() * n;
  std::vector<double> out(static_cast<std::size_t>(w) * h);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) out[static_cast<std::size_t>(y) * w + x] = img.at(x / n, y / n);
  }
  return GrayImage(w, h, std::move(out));
}

GrayImage threshold(const GrayImage& img, double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("threshold must lie in [0,1]");
  std::vector<double> out(img.pixels().begin(), img.pixels().end());
  for (auto& v : out) v = v < t ? 0.0 : 1.0;
  return GrayImage(img.width(), img.height(), std::move(out));
}

std::vector<SegmentBox> segment_projection(const GrayImage& img, double ink_threshold) {
  if (!(ink_threshold >= 0.0 && ink_threshold < 1.0)) {
    throw DomainError("ink threshold must lie in [0,1)");
  }
  auto column_has_ink = [&](int x) {
    for (int y = 0; y < img.height(); ++y) {
      if (img.at(x, y) < ink_threshold) return true;
    }
    return false;
  };

  std::vector<SegmentBox> boxes;
  int x = 0;
  while (x < img.width()) {
    if (!column_has_ink(x)) {
      ++x;
      continue;
    }
    const int x0 = x;
    while (x < img.width() && column_has_ink(x)) ++x;
    int y0 = img.height();
    int y1 = 0;
    for (int cx = x0; cx < x; ++cx) {
      for (int y = 0; y < img.height(); ++y) {
        if (img.at(cx, y) < ink_threshold) {
          y0 = std::min(y0, y);
          y1 = std::max(y1, y + 1);
        }
      }
    }
    boxes.push_back({x0, x, y0, y1});
  }
  return boxes;
}

GrayImage crop(const GrayImage& img, const SegmentBox& box) {
  if (box.x0 < 0 || box.x0 >= box.x1 || box.x1 > img.width() || box.y0 < 0 ||
      box.y0 >= box.y1 || box.y1 > img.height()) {
    throw DomainError("crop box outside image bounds");
  }
  GrayImage out(box.x1 - box.x0, box.y1 - box.y0);
  for (int y = box.y0; y < box.y1; ++y) {
    for (int x = box.x0; x < box.x1; ++x) out.set(x - box.x0, y - box.y0, img.at(x, y));
  }
  return out;
}

double match_percent(const GrayImage& x, const GrayImage& y) {
  if (!x.same_shape(y)) {
    throw DomainError("match_percent: image shapes differ (" + std::to_string(x.width()) + "x" +
                      std::to_string(x.height()) + " vs " + std::to_string(y.width()) + "x" +
                      std::to_string(y.height()) + ")");
  }
  const double l1 = simd::active().l1_distance(x.pixels().data(), y.pixels().data(), x.size());
  return std::clamp(1.0 - l1 / static_cast<double>(x.size()), 0.0, 1.0);
}

GrayImage quantize(const GrayImage& img) {
  std::vector<double> out(img.pixels().begin(), img.pixels().end());
  for (auto& v : out) v = quantize_value(v) / 255.0;
  return GrayImage(img.width(), img.height(), std::move(out));
}

}  // namespace qocr::imaging
