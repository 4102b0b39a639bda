// Copyright 2026 The expmap Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "expmap/matrix_json.hpp"

namespace expmap {

nlohmann::json matrix_to_json(const Matrix& m) {
  nlohmann::json entries = nlohmann::json::array();
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) entries.push_back({m(i, j).real(), m(i, j).imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Matrix matrix_from_json(const nlohmann::json& doc) {
  if (!doc.is_object() || !doc.contains("rows") || !doc.contains("cols") || !doc.contains("entries"))
    throw Error("matrix json: expected object with rows, cols, entries");
  const auto rows = doc.at("rows").get<Index>();
  const auto cols = doc.at("cols").get<Index>();
  const auto& entries = doc.at("entries");
  if (rows < 1 || cols < 1) throw DimensionError("matrix json: rows and cols must be positive");
  if (!entries.is_array() || static_cast<Index>(entries.size()) != rows * cols)
    throw DimensionError("matrix json: entry count does not match rows x cols");
  Matrix m(rows, cols);
  for (Index k = 0; k < rows * cols; ++k) {
    const auto& e = entries.at(static_cast<std::size_t>(k));
    if (!e.is_array() || e.size() != 2) throw Error("matrix json: entry must be [re, im]");
    m(k / cols, k % cols) = cplx(e[0].get<double>(), e[1].get<double>());
  }
  return m;
}

}  // namespace expmap
