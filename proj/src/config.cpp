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

#include "qindex/config.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "qindex/error.hpp"

namespace qindex {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
T number(const std::string& key, const std::string& text) {
  std::istringstream in(text);
  T value{};
  in >> value;
  if (in.fail() || !in.eof()) throw InvalidInput("config key '" + key + "' has bad value '" + text + "'");
  return value;
}

}  // namespace

void RunConfig::validate() const {
  if (!(tol > 0.0)) throw InvalidInput("tolerance must be positive");
  if (max_iter < 1) throw InvalidInput("max_iter must be at least 1");
  if (!(band_multiplier >= 1.0)) throw InvalidInput("band_multiplier must be at least 1");
  if (samples < 0) throw InvalidInput("samples must be nonnegative");
  if (max_order < 3) throw InvalidInput("max_order must be at least 3");
}

VerifyConfig RunConfig::verify_config() const {
  VerifyConfig v;
  v.spectral.tol = tol;
  v.spectral.max_iter = max_iter;
  v.band_multiplier = band_multiplier;
  return v;
}

std::map<std::string, std::string> parse_config_text(std::string_view text) {
  std::map<std::string, std::string> entries;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw InvalidInput("config line " + std::to_string(line_no) + " is not key = value");
    }
    entries[std::string(trim(line.substr(0, eq)))] = std::string(trim(line.substr(eq + 1)));
  }
  return entries;
}

RunConfig apply_config(RunConfig cfg, const std::map<std::string, std::string>& entries) {
  for (const auto& [key, value] : entries) {
    if (key == "tol") {
      cfg.tol = number<double>(key, value);
    } else if (key == "max_iter") {
      cfg.max_iter = number<long>(key, value);
    } else if (key == "band_multiplier") {
      cfg.band_multiplier = number<double>(key, value);
    } else if (key == "grid") {
      cfg.grid = parse_grid(value);
    } else if (key == "out_jsonl") {
      cfg.out_jsonl = value;
    } else if (key == "out_csv") {
      cfg.out_csv = value;
    } else if (key == "workers") {
      cfg.workers = number<int>(key, value);
    } else if (key == "seed") {
      cfg.seed = number<std::uint64_t>(key, value);
    } else if (key == "samples") {
      cfg.samples = number<int>(key, value);
    } else if (key == "max_order") {
      cfg.max_order = number<int>(key, value);
    } else {
      throw InvalidInput("unknown config key '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config_file(const std::string& path, RunConfig base) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read config file '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return apply_config(std::move(base), parse_config_text(text.str()));
}

RunConfig apply_environment(RunConfig cfg) {
  if (const char* w = std::getenv("QINDEX_WORKERS"); w != nullptr && *w != '\0') {
    cfg.workers = number<int>("QINDEX_WORKERS", w);
  }
  return cfg;
}

}  // namespace qindex
