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

#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hydrovqe/fidelity.hpp"
#include "hydrovqe/vqe.hpp"

namespace hvqe {

class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Declarative run settings shared by the scan, fidelity and bench commands.
 * Relative paths are resolved against the config file's directory.
 */
struct RunConfig {
  std::filesystem::path manifest;
  std::filesystem::path fcidump;
  EncodingScheme scheme{EncodingKind::parity, true};
  ActiveSpaceSpec active_space;
  AnsatzSpec ansatz;
  OptimizerSpec optimizer;
  std::uint64_t shots = 0;
  /// 0 means one worker per available core.
  int workers = 0;
  std::uint64_t seed = 7;
  bool warm_start = true;
  RateGrid rates{{1e-3}, {1e-2}, {1e-2}};
  std::vector<int> bench_workers{1, 2, 4, 8};
  int bench_evals = 5;
  std::filesystem::path output_csv;
  std::filesystem::path output_json;

  int resolved_workers() const;
  ScanOptions scan_options() const;
};

RunConfig parse_config(std::string_view json_text,
                       const std::filesystem::path& base_dir = {});
RunConfig load_config(const std::filesystem::path& path);

}  // namespace hvqe
