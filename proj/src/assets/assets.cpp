#include <set>
#include <string>
#include <system_error>

#include "qocr/assets/assets.hpp"
#include "qocr/error.hpp"
#include "qocr/imaging/pgm.hpp"

namespace qocr::assets {

GlyphSet::GlyphSet(std::map<char, GlyphBitmap> glyphs) : glyphs_(std::move(glyphs)) {
  if (glyphs_.size() != kAlphabet.size()) {
    throw DomainError("glyph set must hold exactly " + std::to_string(kAlphabet.size()) +
                      " characters, got " + std::to_string(glyphs_.size()));
  }
  for (char c : kAlphabet) {
    if (!glyphs_.contains(c)) throw DomainError(std::string("glyph set is missing '") + c + "'");
  }
  std::set<GlyphBitmap> seen;
  for (const auto& [c, bitmap] : glyphs_) {
    if (!seen.insert(bitmap).second) {
      throw DomainError(std::string("glyph for '") + c + "' duplicates another glyph");
    }
  }
}

const GlyphBitmap& GlyphSet::operator[](char c) const {
  auto it = glyphs_.find(c);
  if (it == glyphs_.end()) throw DomainError(std::string("no glyph for '") + c + "'");
  return it->second;
}

ReferenceSet::ReferenceSet(std::map<char, GrayImage> images) : images_(std::move(images)) {
  if (images_.empty()) throw DomainError("reference set is empty");
  const GrayImage& first = images_.begin()->second;
  for (const auto& [c, img] : images_) {
    if (!img.same_shape(first)) {
      throw DomainError(std::string("reference '") + c + "' has a different shape");
    }
  }
}

const GrayImage& ReferenceSet::operator[](char c) const {
  auto it = images_.find(c);
  if (it == images_.end()) throw DomainError(std::string("no reference for '") + c + "'");
  return it->second;
}

void ReferenceSet::require_complete() const {
  for (char c : kAlphabet) {
    if (!images_.contains(c)) {
      throw DomainError(std::string("reference set is missing character '") + c + "'");
    }
  }
}

GrayImage render_glyph(const GlyphBitmap& bitmap, int upscale, int phase) {
  if (upscale < 1) throw DomainError("glyph upscale must be positive");
  if (phase < 0 || phase >= upscale) {
    throw DomainError("glyph phase must lie in [0, upscale)");
  }
  const int side = 8 * upscale;
  GrayImage img(side, side, 1.0);
  for (int y = phase; y < side; ++y) {
    for (int x = phase; x < side; ++x) {
      const int row = (y - phase) / upscale;
      const int col = (x - phase) / upscale;
      if ((bitmap[static_cast<std::size_t>(row)] >> col) & 1U) img.set(x, y, 0.0);
    }
  }
  return img;
}

ReferenceSet gen_reference(const GlyphSet& glyphs, int upscale, int phase) {
  if (upscale < 2) throw DomainError("reference upscale must be at least 2");
  std::map<char, GrayImage> images;
  for (const auto& [c, bitmap] : glyphs.entries()) {
    images.emplace(c, render_glyph(bitmap, upscale, phase));
  }
  return ReferenceSet(std::move(images));
}

std::map<char, GrayImage> gen_lowres(const ReferenceSet& refs, int n) {
  std::map<char, GrayImage> lows;
  for (const auto& [c, img] : refs.entries()) lows.emplace(c, imaging::downsample_avg(img, n));
  return lows;
}

std::filesystem::path image_path(const std::filesystem::path& dir, char c) {
  return dir / (std::string(1, c) + ".pgm");
}

void write_asset_dir(const std::filesystem::path& dir, const ReferenceSet& refs,
                     const std::map<char, GrayImage>& lows) {
  for (const char* sub : {"ref", "low"}) {
    std::error_code ec;
    std::filesystem::create_directories(dir / sub, ec);
    if (ec) throw IoError("cannot create directory (" + ec.message() + ")", (dir / sub).string());
  }
  for (const auto& [c, img] : refs.entries()) {
    imaging::write_pgm_file(image_path(dir / "ref", c), img, imaging::PgmVariant::binary);
  }
  for (const auto& [c, img] : lows) {
    imaging::write_pgm_file(image_path(dir / "low", c), img, imaging::PgmVariant::binary);
  }
}

std::map<char, GrayImage> read_image_dir(const std::filesystem::path& dir) {
  std::map<char, GrayImage> images;
  for (char c : kAlphabet) {
    const auto path = image_path(dir, c);
    if (!std::filesystem::exists(path)) {
      throw DomainError(std::string("missing image for character '") + c + "': " + path.string());
    }
    images.emplace(c, imaging::read_pgm_file(path));
  }
  return images;
}

}  // namespace qocr::assets
