#include "qocr/pipeline/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "parallel.hpp"
#include "qocr/error.hpp"
#include "qocr/sim/rng.hpp"
#include "qocr/sim/state_vector.hpp"

namespace qocr::pipeline {

using fixedpoint::SearchProblem;
using sim::PixelPreparation;
using sim::StateVector;

namespace {

std::vector<double> read_out(const StateVector& state, const EnhanceConfig& cfg,
                             std::uint64_t task_index) {
  if (cfg.shots == 0) return sim::zero_marginals(state);
  return sim::sample_marginals(state, cfg.shots, sim::derive_seed(cfg.seed, task_index))
      .zero_frequencies;
}

GrayImage enhance_single(const GrayImage& up, const GrayImage& ref, const EnhanceConfig& cfg) {
  std::vector<double> out(up.size());
  const auto up_px = up.pixels();
  const auto ref_px = ref.pixels();
  for (std::size_t i = 0; i < out.size(); ++i) {
    SearchProblem problem(PixelPreparation({up_px[i]}),
                          sim::prepare_product(PixelPreparation({ref_px[i]})));
    const StateVector final_state = fixedpoint::fixed_point_evolve(problem, cfg.params);
    out[i] = read_out(final_state, cfg, i)[0];
  }
  return GrayImage(up.width(), up.height(), std::move(out));
}

GrayImage enhance_block(const GrayImage& up, const GrayImage& ref, const EnhanceConfig& cfg) {
  const int n = cfg.scale_n;
  const int blocks_x = up.width() / n;
  const int blocks_y = up.height() / n;
  GrayImage out(up.width(), up.height());
  std::vector<double> initial(static_cast<std::size_t>(n) * n);
  std::vector<double> target(initial.size());
  for (int by = 0; by < blocks_y; ++by) {
    for (int bx = 0; bx < blocks_x; ++bx) {
      // Qubit q is block pixel (q % n, q / n), row-major within the block.
      for (int q = 0; q < n * n; ++q) {
        const int x = bx * n + q % n;
        const int y = by * n + q / n;
        initial[static_cast<std::size_t>(q)] = up.at(x, y);
        target[static_cast<std::size_t>(q)] = ref.at(x, y);
      }
      SearchProblem problem{PixelPreparation(initial),
                            sim::prepare_product(PixelPreparation(target))};
      const StateVector final_state = fixedpoint::fixed_point_evolve(problem, cfg.params);
      const auto block_index = static_cast<std::uint64_t>(by) * blocks_x + bx;
      const auto values = read_out(final_state, cfg, block_index);
      for (int q = 0; q < n * n; ++q) {
        out.set(bx * n + q % n, by * n + q / n, values[static_cast<std::size_t>(q)]);
      }
    }
  }
  return out;
}

}  // namespace

void EnhanceConfig::validate() const {
  if (scale_n < 2) throw DomainError("scale factor must be at least 2");
  if (shots < 0) throw DomainError("shot count must be non-negative (0 = exact readout)");
  if (mode == Mode::block && scale_n * scale_n > sim::kMaxQubits) {
    throw CapacityError("block mode with scale " + std::to_string(scale_n) + " needs " +
                        std::to_string(scale_n * scale_n) + " qubits (cap " +
                        std::to_string(sim::kMaxQubits) + ")");
  }
  params.validate();
}

Scorer default_scorer() {
  return [](const GrayImage& enhanced, const GrayImage& reference) {
    return imaging::match_percent(enhanced, reference);
  };
}

GrayImage enhance(const GrayImage& low, const GrayImage& ref, const EnhanceConfig& cfg) {
  cfg.validate();
  if (ref.width() != low.width() * cfg.scale_n || ref.height() != low.height() * cfg.scale_n) {
    throw DomainError("reference " + std::to_string(ref.width()) + "x" +
                      std::to_string(ref.height()) + " is not " + std::to_string(cfg.scale_n) +
                      "x the low-resolution " + std::to_string(low.width()) + "x" +
                      std::to_string(low.height()));
  }
  const GrayImage up = imaging::upscale_repeat(low, cfg.scale_n);
  return cfg.mode == Mode::single_qubit ? enhance_single(up, ref, cfg)
                                        : enhance_block(up, ref, cfg);
}

ScoreTable summarize(std::vector<ScoreRow> rows) {
  ScoreTable table;
  table.rows = std::move(rows);
  if (table.rows.empty()) return table;
  double sum = 0.0;
  for (const auto& r : table.rows) sum += r.match_percent;
  table.mean = sum / static_cast<double>(table.rows.size());
  double dev = 0.0;
  for (const auto& r : table.rows) dev += std::fabs(r.match_percent - table.mean);
  table.mean_deviation = dev / static_cast<double>(table.rows.size());

  const ScoreRow* best = &table.rows.front();
  for (const auto& r : table.rows) {
    if (r.match_percent > best->match_percent ||
        (r.match_percent == best->match_percent && r.character < best->character)) {
      best = &r;
    }
  }
  table.best = best->character;
  return table;
}

ScoreTable classify(const GrayImage& low, const ReferenceSet& refs, const EnhanceConfig& cfg,
                    const Scorer& scorer) {
  refs.require_complete();
  cfg.validate();
  std::vector<ScoreRow> rows(assets::kAlphabet.size());
  detail::parallel_for(rows.size(), [&](std::size_t i) {
    const char c = assets::kAlphabet[i];
    const GrayImage& ref = refs[c];
    rows[i] = {c, scorer(enhance(low, ref, cfg), ref)};
  });
  return summarize(std::move(rows));
}

BatchTable score_table_batch(const std::map<char, GrayImage>& lows, const ReferenceSet& refs,
                             const EnhanceConfig& cfg, const Scorer& scorer) {
  for (char c : assets::kAlphabet) {
    if (!lows.contains(c)) {
      throw DomainError(std::string("low-resolution set is missing character '") + c + "'");
    }
  }
  BatchTable batch;
  double own = 0.0;
  double mean = 0.0;
  double dev = 0.0;
  for (char c : assets::kAlphabet) {
    const ScoreTable table = classify(lows.at(c), refs, cfg, scorer);
    const auto it = std::find_if(table.rows.begin(), table.rows.end(),
                                 [c](const ScoreRow& r) { return r.character == c; });
    batch.rows.push_back({c, it->match_percent, table.mean, table.mean_deviation});
    own += it->match_percent;
    mean += table.mean;
    dev += table.mean_deviation;
  }
  const auto count = static_cast<double>(batch.rows.size());
  batch.grand_own_match = own / count;
  batch.grand_mean = mean / count;
  batch.grand_mean_deviation = dev / count;
  return batch;
}

}  // namespace qocr::pipeline
