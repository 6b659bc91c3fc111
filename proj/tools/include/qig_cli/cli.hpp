// Copyright 2026 The qig Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qig::cli {

using Json = nlohmann::ordered_json;

enum class Format { Csv, Json };

struct Params {
    std::optional<double> r1;
    std::optional<double> r2;
    double theta = 1.5707963267948966;
    int beta_grid = 360;
    std::optional<int> grid;
    double epsilon = 0.05;
    std::uint64_t seed = 1;
    long steps = 100000;
    double step_size = 0.1;
    int restarts = 4;
    int blocks = 3;
    long long copies = 1000000;
    std::string strategy = "entangled";
    double phi1 = 0.0;
    std::optional<double> phi2;
    std::optional<double> direction;
    double max_length = 10.0;
    int stride = 10;
    int angles = 12;
};

struct RunConfig {
    std::string command;
    Params params;
    Format format = Format::Csv;
    std::string out;
};

/// Subcommand names in help order.
const std::vector<std::string>& commands();

/// Default output format of a command.
Format default_format(const std::string& command);

/// Params the command reads, resolved against defaults.
Json resolved_params(const RunConfig& cfg);

/// Overlays keys of a JSON object onto params. Accepts both dash and
/// underscore spellings.
void apply_json(Params& params, const Json& j);

/// Reads a config file: a JSON object, or a CSV output whose first line is
/// "# {json}".
Json load_config(const std::string& path);

std::string render(const RunConfig& cfg);

/// Full entry point. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace qig::cli
