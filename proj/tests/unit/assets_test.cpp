#include <gtest/gtest.h>

#include <filesystem>
#include <set>

#include "qocr/assets/assets.hpp"
#include "qocr/error.hpp"
#include "qocr/imaging/pgm.hpp"

namespace qocr::assets {
namespace {

namespace fs = std::filesystem;

fs::path scratch_dir(const std::string& name) {
  const auto dir = fs::temp_directory_path() / name;
  fs::remove_all(dir);
  return dir;
}

TEST(GlyphSet, BuiltinCoversAlphabetWithDistinctBitmaps) {
  const auto& set = GlyphSet::builtin();
  EXPECT_EQ(set.entries().size(), 36U);
  std::set<GlyphBitmap> unique;
  for (char c : kAlphabet) unique.insert(set[c]);
  EXPECT_EQ(unique.size(), 36U);
}

TEST(GlyphSet, RejectsIncompleteOrDuplicateSets) {
  auto entries = GlyphSet::builtin().entries();
  auto missing = entries;
  missing.erase('Q');
  EXPECT_THROW(GlyphSet{missing}, DomainError);
  auto dup = entries;
  dup['Q'] = dup['O'];
  EXPECT_THROW(GlyphSet{dup}, DomainError);
}

TEST(RenderGlyph, BlankGlyphIsWhite) {
  const auto img = render_glyph(GlyphBitmap{}, 4, 1);
  EXPECT_EQ(img, GrayImage(32, 32, 1.0));
}

TEST(RenderGlyph, PhaseShiftsInk) {
  GlyphBitmap dot{};
  dot[0] = 0x01;  // top-left bit
  const auto at0 = render_glyph(dot, 4, 0);
  const auto at1 = render_glyph(dot, 4, 1);
  EXPECT_EQ(at0.at(0, 0), 0.0);
  EXPECT_EQ(at0.at(3, 3), 0.0);
  EXPECT_EQ(at0.at(4, 0), 1.0);
  EXPECT_EQ(at1.at(0, 0), 1.0);
  EXPECT_EQ(at1.at(1, 1), 0.0);
  EXPECT_EQ(at1.at(4, 4), 0.0);
  EXPECT_EQ(at1.at(5, 1), 1.0);
  EXPECT_THROW(render_glyph(dot, 4, 4), DomainError);
}

TEST(GenReference, GeometryAndPureValues) {
  const auto refs = gen_reference(GlyphSet::builtin(), 4);
  EXPECT_EQ(refs.size(), 36U);
  EXPECT_EQ(refs.width(), 32);
  EXPECT_EQ(refs.height(), 32);
  for (const auto& [c, img] : refs.entries()) {
    for (double v : img.pixels()) EXPECT_TRUE(v == 0.0 || v == 1.0);
  }
  EXPECT_THROW(gen_reference(GlyphSet::builtin(), 1), DomainError);
}

TEST(GenReference, Deterministic) {
  const auto a = gen_reference(GlyphSet::builtin(), 4);
  const auto b = gen_reference(GlyphSet::builtin(), 4);
  for (char c : kAlphabet) {
    EXPECT_EQ(imaging::save_pgm(a[c]), imaging::save_pgm(b[c]));
  }
}

TEST(GenLowres, PoolsByN) {
  const auto refs = gen_reference(GlyphSet::builtin(), 4);
  const auto lows = gen_lowres(refs, 2);
  EXPECT_EQ(lows.size(), 36U);
  for (const auto& [c, img] : lows) {
    EXPECT_EQ(img.width(), 16);
    EXPECT_EQ(img.height(), 16);
    EXPECT_EQ(img.size() * 4, refs[c].size());
  }
  EXPECT_THROW(gen_lowres(refs, 3), DomainError);
}

TEST(GenLowres, BlankAndCheckerboard) {
  std::map<char, GrayImage> images;
  images.emplace('0', GrayImage(8, 8, 1.0));
  GrayImage checker(8, 8, 1.0);
  for (int y = 0; y < 8; ++y)
    for (int x = 0; x < 8; ++x)
      if ((x + y) % 2 == 0) checker.set(x, y, 0.0);
  images.emplace('1', checker);
  const auto lows = gen_lowres(ReferenceSet(images), 2);
  EXPECT_EQ(lows.at('0'), GrayImage(4, 4, 1.0));
  EXPECT_EQ(lows.at('1'), GrayImage(4, 4, 0.5));
}

TEST(GenLowres, PhaseOneProducesGrayEdges) {
  const auto lows = gen_lowres(gen_reference(GlyphSet::builtin(), 4), 2);
  for (const auto& [c, img] : lows) {
    int grays = 0;
    for (double v : img.pixels()) grays += (v > 0.0 && v < 1.0);
    EXPECT_GT(grays, 0) << c;
  }
}

// Each glyph bit owns one pooling cell lying wholly inside its 4x4 area, so
// distinct glyphs can never pool to the same low-resolution image.
TEST(GenLowres, DistinctCharactersStayDistinguishable) {
  const auto lows = gen_lowres(gen_reference(GlyphSet::builtin(), 4), 2);
  for (char a : kAlphabet) {
    for (char b : kAlphabet) {
      if (a < b) EXPECT_LT(imaging::match_percent(lows.at(a), lows.at(b)), 1.0) << a << b;
    }
  }
}

TEST(GenLowres, InteriorCellsRecoverGlyphBits) {
  const auto& glyphs = GlyphSet::builtin();
  const auto lows = gen_lowres(gen_reference(glyphs, 4), 2);
  for (char c : kAlphabet) {
    for (int row = 0; row < 8; ++row) {
      for (int col = 0; col < 8; ++col) {
        const bool ink = (glyphs[c][static_cast<std::size_t>(row)] >> col) & 1U;
        // Canvas pixels 4*col+1 .. 4*col+4; the cell covering 4*col+2, +3 is interior.
        EXPECT_EQ(lows.at(c).at(2 * col + 1, 2 * row + 1), ink ? 0.0 : 1.0);
      }
    }
  }
}

TEST(AssetDir, WritesSeventyTwoFilesDeterministically) {
  const auto dir = scratch_dir("qocr_assets_test");
  const auto refs = gen_reference(GlyphSet::builtin(), 4);
  const auto lows = gen_lowres(refs, 2);
  write_asset_dir(dir, refs, lows);
  int files = 0;
  for (const auto& e : fs::recursive_directory_iterator(dir)) files += e.is_regular_file();
  EXPECT_EQ(files, 72);

  const auto first = imaging::read_file_bytes(dir / "low" / "Q.pgm");
  write_asset_dir(dir, refs, lows);
  EXPECT_EQ(imaging::read_file_bytes(dir / "low" / "Q.pgm"), first);

  EXPECT_EQ(imaging::read_pgm_file(dir / "ref" / "A.pgm"), imaging::quantize(refs['A']));
  const auto back = read_image_dir(dir / "low");
  EXPECT_EQ(back.at('7'), imaging::quantize(lows.at('7')));
  fs::remove_all(dir);
}

TEST(AssetDir, MissingCharacterIsNamed) {
  const auto dir = scratch_dir("qocr_assets_missing");
  const auto refs = gen_reference(GlyphSet::builtin(), 4);
  write_asset_dir(dir, refs, gen_lowres(refs, 2));
  fs::remove(dir / "ref" / "K.pgm");
  try {
    read_image_dir(dir / "ref");
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("'K'"), std::string::npos);
  }
  fs::remove_all(dir);
}

TEST(AssetDir, UnwritableTargetRaisesIoError) {
  const auto file = fs::temp_directory_path() / "qocr_assets_blocker";
  imaging::write_file_bytes(file, std::vector<std::uint8_t>{1});
  const auto refs = gen_reference(GlyphSet::builtin(), 4);
  EXPECT_THROW(write_asset_dir(file / "sub", refs, gen_lowres(refs, 2)), IoError);
  fs::remove(file);
}

}  // namespace
}  // namespace qocr::assets
