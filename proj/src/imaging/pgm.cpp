#include "qocr/imaging/pgm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <string>

#include "qocr/error.hpp"

namespace qocr::imaging {
namespace {

constexpr int kMaxval = 255;

bool is_space(std::uint8_t c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::size_t pos() const { return pos_; }
  std::size_t token_start() const { return token_start_; }
  bool at_end() const { return pos_ >= bytes_.size(); }
  std::uint8_t peek() const { return bytes_[pos_]; }
  void advance() { ++pos_; }

  // Skips whitespace and, when allowed, '#' comments that run to end of line.
  void skip_separators(bool allow_comments) {
    while (!at_end()) {
      if (is_space(peek())) {
        advance();
      } else if (allow_comments && peek() == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  int read_uint(const char* what, bool allow_comments) {
    skip_separators(allow_comments);
    if (at_end()) throw FormatError(std::string("truncated: expected ") + what, pos_);
    const std::size_t start = pos_;
    token_start_ = start;
    long value = 0;
    while (!at_end() && peek() >= '0' && peek() <= '9') {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000'000L) throw FormatError(std::string(what) + " is too large", start);
      advance();
    }
    if (pos_ == start) throw FormatError(std::string("expected ") + what, start);
    if (!at_end() && !is_space(peek()) && !(allow_comments && peek() == '#')) {
      throw FormatError(std::string("malformed ") + what, pos_);
    }
    return static_cast<int>(value);
  }

  std::span<const std::uint8_t> rest() const { return bytes_.subspan(pos_); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
  std::size_t token_start_ = 0;
};

}  // namespace

std::uint8_t quantize_value(double v) {
  const long raw = std::lround(v * kMaxval);
  return static_cast<std::uint8_t>(std::clamp(raw, 0L, static_cast<long>(kMaxval)));
}

GrayImage load_pgm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '2' && bytes[1] != '5')) {
    throw FormatError("bad magic: expected P2 or P5", 0);
  }
  const bool binary = bytes[1] == '5';
  Reader in(bytes);
  in.advance();
  in.advance();
  if (!in.at_end() && !is_space(in.peek()) && in.peek() != '#') {
    throw FormatError("bad magic: expected P2 or P5", 0);
  }

  const int width = in.read_uint("width", true);
  if (width < 1) throw FormatError("width must be positive", in.token_start());
  const int height = in.read_uint("height", true);
  if (height < 1) throw FormatError("height must be positive", in.token_start());
  const int maxval = in.read_uint("maxval", true);
  if (maxval != kMaxval) {
    throw FormatError("unsupported maxval " + std::to_string(maxval) + " (need 255)",
                      in.token_start());
  }

  const std::size_t count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  std::vector<double> pixels;
  pixels.reserve(count);
  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    if (in.at_end() || !is_space(in.peek())) {
      throw FormatError("truncated: missing raster separator", in.pos());
    }
    in.advance();
    const auto raster = in.rest();
    if (raster.size() < count) {
      throw FormatError("truncated raster: need " + std::to_string(count) + " bytes, have " +
                            std::to_string(raster.size()),
                        bytes.size());
    }
    for (std::size_t i = 0; i < count; ++i) pixels.push_back(raster[i] / 255.0);
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      const int raw = in.read_uint("pixel value", false);
      if (raw > kMaxval) throw FormatError("pixel value exceeds maxval", in.token_start());
      pixels.push_back(raw / 255.0);
    }
  }
  return GrayImage(width, height, std::move(pixels));
}

std::vector<std::uint8_t> save_pgm(const GrayImage& img, PgmVariant variant) {
  const bool binary = variant == PgmVariant::binary;
  std::string header = std::string(binary ? "P5" : "P2") + "\n" + std::to_string(img.width()) +
                       " " + std::to_string(img.height()) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  if (binary) {
    out.reserve(out.size() + img.size());
    for (double v : img.pixels()) out.push_back(quantize_value(v));
    return out;
  }
  std::string body;
  for (int y = 0; y < img.height(); ++y) {
    for (int x = 0; x < img.width(); ++x) {
      if (x > 0) body += ' ';
      body += std::to_string(quantize_value(img.at(x, y)));
    }
    body += '\n';
  }
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading", path.string());
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)),
                                  std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("read failed", path.string());
  return bytes;
}

void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open for writing", path.string());
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed", path.string());
}

GrayImage read_pgm_file(const std::filesystem::path& path) {
  return load_pgm(read_file_bytes(path));
}

void write_pgm_file(const std::filesystem::path& path, const GrayImage& img, PgmVariant variant) {
  write_file_bytes(path, save_pgm(img, variant));
}

}  // namespace qocr::imaging
