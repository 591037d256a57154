#pragma once
// Assume-process-score loop: for every candidate character, pull the
// upscaled low-resolution image toward that character's reference with
// fixed-point search, score the result, and keep the best candidate.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "qocr/assets/assets.hpp"
#include "qocr/fixedpoint/fixed_point.hpp"
#include "qocr/imaging/gray_image.hpp"

namespace qocr::pipeline {

using assets::ReferenceSet;
using fixedpoint::FixedPointParams;
using imaging::GrayImage;

enum class Mode {
  single_qubit,  // one 1-qubit search per high-resolution pixel
  block,         // one n^2-qubit search per n x n block
};

struct EnhanceConfig {
  Mode mode = Mode::single_qubit;
  int scale_n = 2;
  int shots = 256;  // 0 reads exact probabilities
  std::uint64_t seed = 1;
  FixedPointParams params{};

  /// DomainError on bad values; CapacityError when block mode needs more
  /// than the simulator's qubit cap.
  void validate() const;
};

/// Similarity of an enhanced image to the reference of the assumed character.
using Scorer = std::function<double(const GrayImage& enhanced, const GrayImage& reference)>;

/// match_percent.
Scorer default_scorer();

struct ScoreRow {
  char character;
  double match_percent;
};

struct ScoreTable {
  std::vector<ScoreRow> rows;  // kAlphabet order
  double mean = 0.0;
  double mean_deviation = 0.0;  // mean of |row - mean|
  char best = '\0';             // argmax, ties to the lowest codepoint
};

/// `ref` must be exactly scale_n times `low` in each dimension.
GrayImage enhance(const GrayImage& low, const GrayImage& ref, const EnhanceConfig& cfg);

ScoreTable classify(const GrayImage& low, const ReferenceSet& refs, const EnhanceConfig& cfg,
                    const Scorer& scorer = default_scorer());

struct BatchRow {
  char character;
  double own_match;  // score against the character's own reference
  double mean;
  double mean_deviation;
};

struct BatchTable {
  std::vector<BatchRow> rows;
  // Column means over all rows.
  double grand_own_match = 0.0;
  double grand_mean = 0.0;
  double grand_mean_deviation = 0.0;
};

BatchTable score_table_batch(const std::map<char, GrayImage>& lows, const ReferenceSet& refs,
                             const EnhanceConfig& cfg, const Scorer& scorer = default_scorer());

/// Builds the table statistics (mean, mean deviation, argmax) from raw rows.
ScoreTable summarize(std::vector<ScoreRow> rows);

}  // namespace qocr::pipeline
