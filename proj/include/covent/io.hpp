// Copyright 2026 The Covent Authors
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

#pragma once

#include <filesystem>
#include <json.hpp>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "covent/ensembles.hpp"
#include "covent/gmeasure.hpp"
#include "covent/sampler.hpp"
#include "covent/states.hpp"

/// JSON file formats.
///
///   density matrix      {"re": [[4x4]], "im": [[4x4]]}
///   pure state          {"amps": [[re, im], x4]}   order |00>, |01>, |10>, |11>
///   measurement record  {"shots": N, "seed": s, "counts": {"11": [n_pp, n_pm, n_mp, n_mm], ...}}
///   ensemble spec       {"kind": ..., "count": ..., "rank": ..., "purity_target": ...,
///                        "purity_window": ..., "mixture_terms": ..., "seed": ...}
///
/// Malformed documents raise ParseError; well-formed documents whose content
/// breaks a state invariant raise InvalidState.
namespace covent {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using json = nlohmann::json;

json to_json(const DensityMatrix& rho);
json to_json(const PureState& p);
json to_json(const MeasurementRecord& rec);
json to_json(const EnsembleSpec& spec);
/// Exactly the fields g, g_hs, l3, verdict, c_min, c_max.
json to_json(const GReport& report);
json to_json(const GEstimate& est);
json to_json(const CorrelationData& cd);

DensityMatrix density_matrix_from_json(const json& j);
PureState pure_state_from_json(const json& j);
MeasurementRecord record_from_json(const json& j);
EnsembleSpec ensemble_spec_from_json(const json& j);

/// Throws ParseError with a "parse error" message for invalid JSON text.
json parse_json(std::string_view text);
json read_json_file(const std::filesystem::path& path);

/// Any of the three accepted input documents, told apart by their keys.
using StateInput = std::variant<DensityMatrix, PureState, MeasurementRecord>;
StateInput input_from_json(const json& j);

/// Density matrix for a state-like input; throws ParseError for records.
DensityMatrix as_density_matrix(const StateInput& in);

}  // namespace covent
