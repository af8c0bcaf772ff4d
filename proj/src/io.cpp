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

#include "covent/io.hpp"

#include <fstream>
#include <sstream>

namespace covent {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object()) throw ParseError("parse error: expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("parse error: missing field '") + key + "'");
  return *it;
}

double number(const json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("parse error: ") + what + " must be a number");
  return j.get<double>();
}

template <typename Int>
Int integer(const json& j, const char* what) {
  if (!j.is_number_integer()) {
    throw ParseError(std::string("parse error: ") + what + " must be an integer");
  }
  return j.get<Int>();
}

Eigen::Matrix4d real_block(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 4) {
    throw ParseError(std::string("parse error: '") + what + "' must be a 4x4 array");
  }
  Eigen::Matrix4d m;
  for (int r = 0; r < 4; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || row.size() != 4) {
      throw ParseError(std::string("parse error: '") + what + "' must be a 4x4 array");
    }
    for (int c = 0; c < 4; ++c) m(r, c) = number(row[static_cast<std::size_t>(c)], what);
  }
  return m;
}

json rows(const Eigen::Matrix4d& m) {
  json out = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(m(r, c));
    out.push_back(std::move(row));
  }
  return out;
}

json matrix3(const Eigen::Matrix3d& m) {
  json out = json::array();
  for (int r = 0; r < 3; ++r) out.push_back({m(r, 0), m(r, 1), m(r, 2)});
  return out;
}

std::string setting_key(int s) { return std::to_string(s / 3 + 1) + std::to_string(s % 3 + 1); }

}  // namespace

json to_json(const DensityMatrix& rho) {
  return {{"re", rows(rho.matrix().real())}, {"im", rows(rho.matrix().imag())}};
}

json to_json(const PureState& p) {
  json amps = json::array();
  for (int k = 0; k < 4; ++k) amps.push_back({p[k].real(), p[k].imag()});
  return {{"amps", amps}};
}

json to_json(const MeasurementRecord& rec) {
  json counts = json::object();
  for (int s = 0; s < setting_count; ++s) {
    const auto& t = rec.counts[static_cast<std::size_t>(s)];
    counts[setting_key(s)] = {t[0], t[1], t[2], t[3]};
  }
  return {{"shots", rec.shots_per_setting}, {"seed", rec.seed}, {"counts", counts}};
}

json to_json(const EnsembleSpec& spec) {
  return {{"kind", std::string(ensemble_kind_name(spec.kind))},
          {"count", spec.count},
          {"rank", spec.rank},
          {"purity_target", spec.purity_target},
          {"purity_window", spec.purity_window},
          {"mixture_terms", spec.mixture_terms},
          {"seed", spec.seed}};
}

json to_json(const GReport& report) {
  return {{"g", report.g},
          {"g_hs", report.g_hs},
          {"l3", report.l3},
          {"verdict", std::string(verdict_name(report.verdict))},
          {"c_min", report.conc_interval.lower},
          {"c_max", report.conc_interval.upper}};
}

json to_json(const GEstimate& est) {
  return {{"g_hat", est.g_hat},
          {"stderr", est.std_error},
          {"ci_low", est.ci_low},
          {"ci_high", est.ci_high},
          {"cov_hat", matrix3(est.cov_hat)},
          {"shots_per_setting", est.shots_per_setting}};
}

json to_json(const CorrelationData& cd) {
  return {{"cov", matrix3(cd.cov)},
          {"corr", matrix3(cd.corr)},
          {"bloch_a", {cd.bloch_a(0), cd.bloch_a(1), cd.bloch_a(2)}},
          {"bloch_b", {cd.bloch_b(0), cd.bloch_b(1), cd.bloch_b(2)}}};
}

DensityMatrix density_matrix_from_json(const json& j) {
  const Eigen::Matrix4d re = real_block(field(j, "re"), "re");
  const Eigen::Matrix4d im = real_block(field(j, "im"), "im");
  Matrix4cd m;
  m.real() = re;
  m.imag() = im;
  return DensityMatrix(m);
}

PureState pure_state_from_json(const json& j) {
  const json& amps = field(j, "amps");
  if (!amps.is_array() || amps.size() != 4) {
    throw ParseError("parse error: 'amps' must hold four [re, im] pairs");
  }
  Eigen::Vector4cd v;
  for (int k = 0; k < 4; ++k) {
    const json& a = amps[static_cast<std::size_t>(k)];
    if (!a.is_array() || a.size() != 2) {
      throw ParseError("parse error: 'amps' must hold four [re, im] pairs");
    }
    v(k) = {number(a[0], "amplitude"), number(a[1], "amplitude")};
  }
  return PureState(v);
}

MeasurementRecord record_from_json(const json& j) {
  MeasurementRecord rec;
  rec.shots_per_setting = integer<std::int64_t>(field(j, "shots"), "shots");
  rec.seed = j.contains("seed") ? integer<std::uint64_t>(j["seed"], "seed") : 0;
  const json& counts = field(j, "counts");
  for (int s = 0; s < setting_count; ++s) {
    const json& t = field(counts, setting_key(s).c_str());
    if (!t.is_array() || t.size() != 4) {
      throw ParseError("parse error: counts '" + setting_key(s) + "' must have 4 entries");
    }
    for (std::size_t k = 0; k < 4; ++k) {
      rec.counts[static_cast<std::size_t>(s)][k] = integer<std::int64_t>(t[k], "count");
    }
  }
  validate(rec);
  return rec;
}

EnsembleSpec ensemble_spec_from_json(const json& j) {
  EnsembleSpec spec;
  const json& kind = field(j, "kind");
  if (!kind.is_string()) throw ParseError("parse error: 'kind' must be a string");
  spec.kind = ensemble_kind_from_name(kind.get<std::string>());
  spec.count = integer<std::uint64_t>(field(j, "count"), "count");
  if (j.contains("rank")) spec.rank = integer<int>(j["rank"], "rank");
  if (j.contains("purity_target")) spec.purity_target = number(j["purity_target"], "purity_target");
  if (j.contains("purity_window")) spec.purity_window = number(j["purity_window"], "purity_window");
  if (j.contains("mixture_terms"))
    spec.mixture_terms = integer<int>(j["mixture_terms"], "mixture_terms");
  if (j.contains("seed")) spec.seed = integer<std::uint64_t>(j["seed"], "seed");
  validate(spec);
  return spec;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("parse error: ") + e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("parse error: cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

StateInput input_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("parse error: expected a JSON object");
  if (j.contains("re") || j.contains("im")) return density_matrix_from_json(j);
  if (j.contains("amps")) return pure_state_from_json(j);
  if (j.contains("counts")) return record_from_json(j);
  throw ParseError("parse error: document is not a density matrix, pure state or record");
}

DensityMatrix as_density_matrix(const StateInput& in) {
  if (const auto* rho = std::get_if<DensityMatrix>(&in)) return *rho;
  if (const auto* p = std::get_if<PureState>(&in)) return from_pure(*p);
  throw ParseError("parse error: expected a state, got a measurement record");
}

}  // namespace covent
