// Copyright 2026 The qgamble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QGAMBLE_SVG_HPP
#define QGAMBLE_SVG_HPP

#include <string>
#include <vector>

namespace qgamble {

struct Series {
  std::string name;
  std::vector<double> x;
  std::vector<double> y;
};

// Vertical line drawn across the plot area at data coordinate `x`.
struct Marker {
  double x = 0;
  std::string label;
};

struct PlotSpec {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
  std::vector<Marker> markers;
};

inline constexpr int kSvgWidth = 800;
inline constexpr int kSvgHeight = 500;

/// Standalone SVG 1.1 line plot; identical input gives identical bytes.
/// Throws InvalidInput when there is no series or a series has fewer
/// than two points.
std::string render_svg(const PlotSpec& plot);

}  // namespace qgamble

#endif  // QGAMBLE_SVG_HPP
