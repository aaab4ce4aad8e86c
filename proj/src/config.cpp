/*
 * Copyright 2026 The hydrovqe Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "hydrovqe/config.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

namespace hvqe {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed,
                    const std::string& where) {
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw ConfigError(where + ": unknown key '" + key + "'");
  }
}

std::filesystem::path resolve(const std::filesystem::path& base, const std::string& p) {
  std::filesystem::path path(p);
  return path.is_relative() && !base.empty() ? base / path : path;
}

std::vector<double> rate_axis(const json& v) {
  if (v.is_number()) return {v.get<double>()};
  return v.get<std::vector<double>>();
}

}  // namespace

int RunConfig::resolved_workers() const {
  if (workers > 0) return workers;
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

ScanOptions RunConfig::scan_options() const {
  ScanOptions o;
  o.active_space = active_space;
  o.scheme = scheme;
  o.ansatz = ansatz;
  o.optimizer = optimizer;
  o.mode = {shots, resolved_workers(), seed};
  o.warm_start = warm_start;
  return o;
}

RunConfig parse_config(std::string_view json_text, const std::filesystem::path& base_dir) {
  RunConfig c;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown(j,
                 {"manifest", "fcidump", "scheme", "taper", "active_space", "ansatz",
                  "optimizer", "shots", "workers", "seed", "warm_start", "rates",
                  "bench", "output"},
                 "config");
  try {
    if (j.contains("manifest")) c.manifest = resolve(base_dir, j["manifest"]);
    if (j.contains("fcidump")) c.fcidump = resolve(base_dir, j["fcidump"]);
    if (j.contains("scheme")) c.scheme.kind = parse_encoding_kind(j["scheme"].get<std::string>());
    c.scheme.taper_two_qubits = j.value("taper", c.scheme.kind == EncodingKind::parity);
    if (j.contains("active_space")) {
      const json& a = j["active_space"];
      reject_unknown(a, {"frozen_occupied", "removed_virtual"}, "active_space");
      c.active_space.frozen_occupied = a.value("frozen_occupied", std::vector<int>{});
      c.active_space.removed_virtual = a.value("removed_virtual", std::vector<int>{});
    }
    if (j.contains("ansatz")) {
      const json& a = j["ansatz"];
      reject_unknown(a, {"level", "trotter_steps"}, "ansatz");
      if (a.contains("level")) c.ansatz.level = parse_ucc_level(a["level"].get<std::string>());
      c.ansatz.trotter_steps = a.value("trotter_steps", c.ansatz.trotter_steps);
    }
    if (j.contains("optimizer")) {
      const json& o = j["optimizer"];
      reject_unknown(o, {"kind", "max_evals", "tolerance", "seed"}, "optimizer");
      if (o.contains("kind")) c.optimizer.kind = parse_optimizer_kind(o["kind"].get<std::string>());
      c.optimizer.max_evals = o.value("max_evals", c.optimizer.max_evals);
      c.optimizer.tolerance = o.value("tolerance", c.optimizer.tolerance);
      c.optimizer.seed = o.value("seed", c.optimizer.seed);
    }
    c.shots = j.value("shots", c.shots);
    c.workers = j.value("workers", c.workers);
    c.seed = j.value("seed", c.seed);
    c.warm_start = j.value("warm_start", c.warm_start);
    if (j.contains("rates")) {
      const json& r = j["rates"];
      reject_unknown(r, {"e_g1", "e_g2", "e_q"}, "rates");
      if (r.contains("e_g1")) c.rates.e_g1 = rate_axis(r["e_g1"]);
      if (r.contains("e_g2")) c.rates.e_g2 = rate_axis(r["e_g2"]);
      if (r.contains("e_q")) c.rates.e_q = rate_axis(r["e_q"]);
    }
    if (j.contains("bench")) {
      const json& b = j["bench"];
      reject_unknown(b, {"workers", "evals"}, "bench");
      c.bench_workers = b.value("workers", c.bench_workers);
      c.bench_evals = b.value("evals", c.bench_evals);
    }
    if (j.contains("output")) {
      const json& o = j["output"];
      reject_unknown(o, {"csv", "json"}, "output");
      if (o.contains("csv")) c.output_csv = resolve(base_dir, o["csv"]);
      if (o.contains("json")) c.output_json = resolve(base_dir, o["json"]);
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  if (c.workers < 0) throw ConfigError("config: workers must be nonnegative");
  if (c.bench_evals < 1) throw ConfigError("config: bench.evals must be positive");
  for (int w : c.bench_workers) {
    if (w < 1) throw ConfigError("config: bench.workers entries must be positive");
  }
  for (const auto* axis : {&c.rates.e_g1, &c.rates.e_g2, &c.rates.e_q}) {
    for (double e : *axis) validate(ErrorRates{e, 0.0, 0.0});
  }
  validate(c.optimizer);
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.parent_path());
}

}  // namespace hvqe
