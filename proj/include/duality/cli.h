// Copyright 2026 The Duality Authors
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

#ifndef DUALITY_CLI_H
#define DUALITY_CLI_H

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace duality::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInvalidState = 2;

inline constexpr int kDefaultSweepSamples = 201;
inline constexpr int kDefaultTimePoints = 200;
inline constexpr int kDefaultIterations = 1000;
inline constexpr int kDefaultScreenSamples = 10000;
inline constexpr double kDefaultWavenumber = 1.2566370614359172e7;  // 2 pi / 500 nm
inline constexpr double kDefaultSlitSeparation = 1e-3;
inline constexpr double kDefaultScreenDistance = 1.0;
inline constexpr double kDefaultScreenFringes = 3.0;

/// Every flag of every subcommand; unset means "not given". Filled from the
/// command line first, then from --config for whatever is still unset.
struct RunConfig {
    std::optional<std::string> builtin;
    std::optional<std::string> file;
    std::optional<double> a;
    std::optional<double> b;
    std::optional<double> eta;
    std::optional<std::string> model;
    std::optional<double> gamma;
    std::optional<double> t_max;
    std::optional<int> steps;
    std::optional<std::string> method;
    std::optional<int> n;
    std::optional<double> k;
    std::optional<double> d;
    std::optional<double> L;
    std::optional<double> x_min;
    std::optional<double> x_max;
    std::optional<int> samples;
    std::optional<std::string> out;
    std::optional<std::string> format;
    std::optional<double> tol;
    std::optional<long long> seed;
    std::optional<std::string> config;
    std::optional<std::string> vary;
    std::optional<double> start;
    std::optional<double> stop;
    std::optional<double> p;
};

/// Fills unset fields of `cfg` from a JSON object whose keys are flag names
/// without the leading dashes. Throws FormatError on unknown keys or bad types.
void merge_config_file(RunConfig &cfg, const std::string &path);

/// Runs one `duality` invocation; `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace duality::cli

#endif
