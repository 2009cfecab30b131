// Copyright 2026 The qindex Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "qindex/verify.hpp"

namespace qindex {

struct RunConfig {
  double tol = 1e-10;
  long max_iter = 1000000;
  double band_multiplier = 10.0;
  Grid grid;
  std::string out_jsonl;  // empty: stdout
  std::string out_csv;    // empty: no CSV
  int workers = 0;        // <= 0: all threads
  std::uint64_t seed = 20260101;
  int samples = 200;
  int max_order = 8;  // random lemma samples

  /// tol > 0, max_iter >= 1, band_multiplier >= 1, else InvalidInput.
  void validate() const;
  VerifyConfig verify_config() const;
};

/// Flat `key = value` lines; `#` starts a comment. Keys: tol, max_iter,
/// band_multiplier, grid, out_jsonl, out_csv, workers, seed, samples,
/// max_order. Unknown keys throw InvalidInput.
std::map<std::string, std::string> parse_config_text(std::string_view text);

/// Applies parsed entries over `base`.
RunConfig apply_config(RunConfig base, const std::map<std::string, std::string>& entries);

RunConfig load_config_file(const std::string& path, RunConfig base = {});

/// QINDEX_WORKERS, when set, replaces `cfg.workers`.
RunConfig apply_environment(RunConfig cfg);

}  // namespace qindex
