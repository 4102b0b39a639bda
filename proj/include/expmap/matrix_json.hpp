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

#ifndef EXPMAP_MATRIX_JSON_HPP
#define EXPMAP_MATRIX_JSON_HPP

#include <string>

#include <json.hpp>

#include "expmap/types.hpp"

namespace expmap {

// Matrix exchange format:
//   {"rows": r, "cols": c, "entries": [[re, im], ...]}   entries row-major.

nlohmann::json matrix_to_json(const Matrix& m);

/// Throws DimensionError when the entry count disagrees with rows x cols and
/// Error on malformed documents.
Matrix matrix_from_json(const nlohmann::json& doc);

}  // namespace expmap

#endif  // EXPMAP_MATRIX_JSON_HPP
