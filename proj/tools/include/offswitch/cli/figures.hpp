#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "offswitch/designer.hpp"

namespace offswitch::cli {

struct Artifact {
    std::string file_name;
    std::string content;
};

// Designer scenarios behind fig4_*: prior N(0, 1), true noise 1 and a
// logistic human with beta 0.5, on a grid of robot posterior widths.
inline constexpr std::uint64_t kFigureSeed = 1729;
inline constexpr std::size_t kFigureTrials = 200000;
inline constexpr double kFigureBeta = 0.5;
inline constexpr double kFigurePosteriorLow = 0.3;
inline constexpr double kFigurePosteriorHigh = 0.999;
inline constexpr std::size_t kFigureGridPoints = 11;
inline constexpr std::size_t kFigureDenseGridPoints = 25;
inline constexpr std::size_t kFigureActionCounts[] = {1, 4, 16};

DesignerScenario figure_designer_scenario(std::size_t n_actions, std::size_t grid_points);

// fig4_right: designer_csv rows with a leading n_actions column.
std::string multi_action_csv(const std::vector<std::size_t>& n_actions,
                             const std::vector<DesignerResult>& results);

// All eight figure CSVs, in a fixed order. Content does not depend on `threads`.
std::vector<Artifact> figure_artifacts(unsigned threads);

}  // namespace offswitch::cli
