#include "qocr/analysis/analysis.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "qocr/error.hpp"
#include "qocr/sim/state_vector.hpp"

namespace qocr::analysis {

using sim::PixelPreparation;
using sim::StateVector;

double heatmap_cell(Algorithm algorithm, double p_initial, double p_target,
                    const FixedPointParams& params) {
  const StateVector target = sim::prepare_product(PixelPreparation({p_target}));
  StateVector final_state = target;
  if (algorithm == Algorithm::grover) {
    const StateVector initial = sim::prepare_product(PixelPreparation({p_initial}));
    final_state = fixedpoint::grover_iterate(initial, target, initial);
  } else {
    final_state = fixedpoint::fixed_point_evolve(
        fixedpoint::SearchProblem(PixelPreparation({p_initial}), target), params);
  }
  return std::fabs(sim::prob_zero(final_state, 0) - p_target);
}

HeatmapGrid heatmap(Algorithm algorithm, int resolution, const FixedPointParams& params) {
  if (resolution < 3) throw DomainError("heatmap resolution must be at least 3");
  params.validate();
  HeatmapGrid grid{algorithm, resolution, {}};
  grid.cells.assign(static_cast<std::size_t>(resolution),
                    std::vector<double>(static_cast<std::size_t>(resolution)));
  for (int row = 0; row < resolution; ++row) {
    for (int col = 0; col < resolution; ++col) {
      grid.cells[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] =
          heatmap_cell(algorithm, grid.coordinate(col), grid.coordinate(row), params);
    }
  }
  return grid;
}

MonotonicityResult monotonicity_check(const HeatmapGrid& grid, double tolerance) {
  const int res = grid.resolution;
  for (int row = 0; row < res; ++row) {
    const auto& cells = grid.cells[static_cast<std::size_t>(row)];
    for (int col = row + 1; col < res; ++col) {
      if (cells[static_cast<std::size_t>(col)] + tolerance < cells[static_cast<std::size_t>(col - 1)]) {
        return {false, std::pair{row, col}};
      }
    }
    for (int col = row - 1; col >= 0; --col) {
      if (cells[static_cast<std::size_t>(col)] + tolerance < cells[static_cast<std::size_t>(col + 1)]) {
        return {false, std::pair{row, col}};
      }
    }
  }
  return {};
}

std::vector<ConvergencePoint> convergence_curve(std::span<const double> eps_values, int max_m) {
  if (max_m < 1 || max_m > 4) throw DomainError("max recursion depth must lie in [1, 4]");
  const StateVector target = StateVector::basis(1, 0);
  std::vector<ConvergencePoint> out;
  for (double eps : eps_values) {
    if (!(eps > 0.0 && eps < 1.0)) throw DomainError("epsilon must lie in (0, 1)");
    for (int m = 1; m <= max_m; ++m) {
      FixedPointParams params;
      params.recursions = m;
      const auto final_state = fixedpoint::fixed_point_evolve(
          fixedpoint::SearchProblem(PixelPreparation({1.0 - eps}), target), params);
      out.push_back({eps, m, fixedpoint::deviation(final_state, target),
                     std::pow(eps, std::pow(3.0, m))});
    }
  }
  return out;
}

namespace {

std::string format_cell(const CsvCell& cell) {
  if (const auto* s = std::get_if<std::string>(&cell)) return *s;
  if (const auto* i = std::get_if<long long>(&cell)) return std::to_string(*i);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", std::get<double>(cell));
  return buf;
}

}  // namespace

std::string emit_csv(const CsvTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i > 0) out += ',';
    out += table.header[i];
  }
  out += '\n';
  for (std::size_t r = 0; r < table.rows.size(); ++r) {
    const auto& row = table.rows[r];
    if (row.size() != table.header.size()) {
      throw DomainError("CSV row " + std::to_string(r) + " has " + std::to_string(row.size()) +
                        " cells, header has " + std::to_string(table.header.size()));
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i > 0) out += ',';
      out += format_cell(row[i]);
    }
    out += '\n';
  }
  return out;
}

namespace {
const std::vector<std::string> kScoreHeader{"character", "match_percent", "mean",
                                            "mean_deviation"};
}

CsvTable to_csv(const pipeline::ScoreTable& table) {
  CsvTable csv{kScoreHeader, {}};
  for (const auto& row : table.rows) {
    csv.rows.push_back({std::string(1, row.character), row.match_percent, table.mean,
                        table.mean_deviation});
  }
  return csv;
}

CsvTable to_csv(const pipeline::BatchTable& table) {
  CsvTable csv{kScoreHeader, {}};
  for (const auto& row : table.rows) {
    csv.rows.push_back(
        {std::string(1, row.character), row.own_match, row.mean, row.mean_deviation});
  }
  csv.rows.push_back({std::string("Mean"), table.grand_own_match, table.grand_mean,
                      table.grand_mean_deviation});
  return csv;
}

CsvTable to_csv(const HeatmapGrid& grid) {
  CsvTable csv;
  csv.header.emplace_back("p0_target");
  for (int col = 0; col < grid.resolution; ++col) {
    csv.header.push_back(format_cell(grid.coordinate(col)));
  }
  for (int row = 0; row < grid.resolution; ++row) {
    std::vector<CsvCell> cells{grid.coordinate(row)};
    for (double v : grid.cells[static_cast<std::size_t>(row)]) cells.emplace_back(v);
    csv.rows.push_back(std::move(cells));
  }
  return csv;
}

CsvTable to_csv(std::span<const ConvergencePoint> curve) {
  CsvTable csv{{"epsilon", "recursions", "deviation", "expected"}, {}};
  for (const auto& p : curve) {
    csv.rows.push_back({p.epsilon, static_cast<long long>(p.recursions), p.deviation, p.expected});
  }
  return csv;
}

}  // namespace qocr::analysis
