#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "qocr/imaging/gray_image.hpp"

namespace qocr::imaging {

enum class PgmVariant { ascii /* P2 */, binary /* P5 */ };

/// Parses P2 or P5 with maxval 255. `#` comments are accepted anywhere in
/// the header. Throws FormatError with the byte offset of the problem.
GrayImage load_pgm(std::span<const std::uint8_t> bytes);

/// Writes maxval 255; each value is stored as round(v * 255), ties away
/// from zero. P2 bodies hold one image row per line.
std::vector<std::uint8_t> save_pgm(const GrayImage& img, PgmVariant variant = PgmVariant::binary);

std::uint8_t quantize_value(double v);

// File helpers; failures raise IoError naming the path.
GrayImage read_pgm_file(const std::filesystem::path& path);
void write_pgm_file(const std::filesystem::path& path, const GrayImage& img,
                    PgmVariant variant = PgmVariant::binary);

std::vector<std::uint8_t> read_file_bytes(const std::filesystem::path& path);
void write_file_bytes(const std::filesystem::path& path, std::span<const std::uint8_t> bytes);

}  // namespace qocr::imaging
