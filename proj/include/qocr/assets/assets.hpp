#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string_view>

#include "qocr/imaging/gray_image.hpp"

namespace qocr::assets {

using imaging::GrayImage;

/// 0-9 then A-Z, the order used for every table.
inline constexpr std::string_view kAlphabet = "0123456789ABCDEFGHIJKLMNOPQRSTUVWXYZ";

/// 8x8 bitmap, one byte per row, bit c set means column c is ink.
using GlyphBitmap = std::array<std::uint8_t, 8>;

class GlyphSet {
 public:
  /// Throws DomainError unless every character of kAlphabet is present
  /// exactly once and all bitmaps are pairwise distinct.
  explicit GlyphSet(std::map<char, GlyphBitmap> glyphs);

  /// Embedded fixed-width 8x8 dot-matrix face.
  static const GlyphSet& builtin();

  const GlyphBitmap& operator[](char c) const;
  const std::map<char, GlyphBitmap>& entries() const noexcept { return glyphs_; }

 private:
  std::map<char, GlyphBitmap> glyphs_;
};

/// High-resolution reference per character; all images share one shape.
class ReferenceSet {
 public:
  explicit ReferenceSet(std::map<char, GrayImage> images);

  const GrayImage& operator[](char c) const;
  bool contains(char c) const { return images_.contains(c); }
  const std::map<char, GrayImage>& entries() const noexcept { return images_; }
  std::size_t size() const noexcept { return images_.size(); }
  int width() const { return images_.begin()->second.width(); }
  int height() const { return images_.begin()->second.height(); }

  /// Throws DomainError naming the first character of kAlphabet that is missing.
  void require_complete() const;

 private:
  std::map<char, GrayImage> images_;
};

/// Renders `bitmap` (ink -> 0.0, paper -> 1.0) into an (8 * upscale)^2
/// canvas by nearest-neighbour scaling, shifted right and down by `phase`
/// canvas pixels. Columns and rows pushed past the edge are dropped.
GrayImage render_glyph(const GlyphBitmap& bitmap, int upscale, int phase);

/// phase = 1 places glyph edges mid-way through the 2x2 camera cells, so
/// pooling produces gray edge pixels instead of an exact copy.
inline constexpr int kDefaultPhase = 1;

ReferenceSet gen_reference(const GlyphSet& glyphs, int upscale, int phase = kDefaultPhase);

/// Camera model: average pooling by n.
std::map<char, GrayImage> gen_lowres(const ReferenceSet& refs, int n);

/// Writes ref/<c>.pgm and low/<c>.pgm (P5) under `dir`.
void write_asset_dir(const std::filesystem::path& dir, const ReferenceSet& refs,
                     const std::map<char, GrayImage>& lows);

/// Reads <dir>/<c>.pgm for every character of kAlphabet. A missing file
/// raises DomainError naming the character.
std::map<char, GrayImage> read_image_dir(const std::filesystem::path& dir);

std::filesystem::path image_path(const std::filesystem::path& dir, char c);

}  // namespace qocr::assets
