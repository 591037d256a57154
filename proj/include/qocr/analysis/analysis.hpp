#pragma once

#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "qocr/fixedpoint/fixed_point.hpp"
#include "qocr/pipeline/pipeline.hpp"

namespace qocr::analysis {

using fixedpoint::FixedPointParams;

enum class Algorithm { grover, fixed_point };

/// cells[row][col] = |P0(final) - P0(target)| with P0(target) = row / (res-1)
/// and P0(initial) = col / (res-1). Endpoints 0 and 1 are on the grid.
struct HeatmapGrid {
  Algorithm algorithm;
  int resolution = 0;
  std::vector<std::vector<double>> cells;

  double coordinate(int index) const {
    return static_cast<double>(index) / static_cast<double>(resolution - 1);
  }
};

/// One iteration from the 1-qubit real state with P0 = p_initial toward the
/// state with P0 = p_target. The fixed-point variant honours params
/// (phases and recursion depth); grover always uses the textbook iterate.
double heatmap_cell(Algorithm algorithm, double p_initial, double p_target,
                    const FixedPointParams& params = {});

HeatmapGrid heatmap(Algorithm algorithm, int resolution, const FixedPointParams& params = {});

struct MonotonicityResult {
  bool monotone = true;
  // (row, col) of the first cell that is smaller than its neighbour nearer
  // the diagonal.
  std::optional<std::pair<int, int>> first_violation;
};

/// Along each row, values must not decrease moving away from the diagonal.
MonotonicityResult monotonicity_check(const HeatmapGrid& grid, double tolerance = 1e-9);

struct ConvergencePoint {
  double epsilon;
  int recursions;
  double deviation;  // simulated
  double expected;   // epsilon^(3^m)
};

/// Deviation after m = 1..max_m recursions for each starting deviation,
/// realized with |t> = |0> and P0(|s>) = 1 - epsilon.
std::vector<ConvergencePoint> convergence_curve(std::span<const double> eps_values, int max_m);

using CsvCell = std::variant<std::string, double, long long>;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<CsvCell>> rows;
};

/// Comma-separated, header first, '\n' after every line, reals as %.10g.
/// Ragged rows raise DomainError.
std::string emit_csv(const CsvTable& table);

/// character,match_percent,mean,mean_deviation; table-wide mean and mean
/// deviation repeated on each row.
CsvTable to_csv(const pipeline::ScoreTable& table);
/// Same header; one row per character plus a final "Mean" row of column means.
CsvTable to_csv(const pipeline::BatchTable& table);
/// First column is P0(target); remaining columns per P0(initial).
CsvTable to_csv(const HeatmapGrid& grid);
CsvTable to_csv(std::span<const ConvergencePoint> curve);

}  // namespace qocr::analysis
