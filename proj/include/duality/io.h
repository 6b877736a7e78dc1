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

#ifndef DUALITY_IO_H
#define DUALITY_IO_H

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "duality/channels.h"
#include "duality/errors.h"
#include "duality/observables.h"
#include "duality/state.h"
#include "json.hpp"

namespace duality {

/// Malformed state file or JSON document.
class FormatError : public InputError {
   public:
    using InputError::InputError;
};

struct LabeledState {
    CoherencePolarizationMatrix rho;
    std::string label;
};

/// Shortest decimal string that parses back to exactly `value` (at most 17
/// significant digits), '.' decimal separator, no locale.
std::string format_real(double value);

/// {"basis": ["H1","H2","V1","V2"], "rho": [[[re, im] x4] x4], "label": ...}
nlohmann::json state_to_json(const CoherencePolarizationMatrix &rho, const std::string &label = "");
LabeledState state_from_json(const nlohmann::json &doc);
LabeledState read_state_file(const std::filesystem::path &path);
void write_state_file(const std::filesystem::path &path, const CoherencePolarizationMatrix &rho,
                      const std::string &label = "");

nlohmann::json validation_report_to_json(const ValidationReport &report);

/// Flat object; undefined fields are null.
nlohmann::json report_to_json(const DualityReport &report);

/// label,I1,I2,mu_abs,mu_phase,p1,p2,V,D,D2_plus_V2
std::string report_csv_header();
/// Undefined fields are empty cells.
std::string report_csv_row(const DualityReport &report);

/// time,V,D,D2_plus_V2,mu_abs,p1,p2,I1,I2
std::string trajectory_csv_header();
std::string trajectory_csv_row(const TrajectoryPoint &point);

/// "# model=<name> gamma=<rate> method=<m> n=<n>"; n is "-" for the closed form.
std::string trajectory_comment(const EvolutionSpec &spec);

}  // namespace duality

#endif
