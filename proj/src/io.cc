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

#include "duality/io.h"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "duality/errors.h"

namespace duality {

using nlohmann::json;

std::string format_real(double value) {
    if (!std::isfinite(value)) {
        throw InputError("cannot serialize a non-finite number");
    }
    if (value == 0.0) {
        value = 0.0;  // drop the sign of -0
    }
    std::array<char, 64> buffer{};
    const auto result = std::to_chars(buffer.data(), buffer.data() + buffer.size(), value);
    return std::string(buffer.data(), result.ptr);
}

json state_to_json(const CoherencePolarizationMatrix &rho, const std::string &label) {
    json rows = json::array();
    for (int r = 0; r < 4; ++r) {
        json row = json::array();
        for (int c = 0; c < 4; ++c) {
            row.push_back(json::array({rho(r, c).real(), rho(r, c).imag()}));
        }
        rows.push_back(std::move(row));
    }
    json doc;
    doc["basis"] = json::array({kBasisLabels[0], kBasisLabels[1], kBasisLabels[2], kBasisLabels[3]});
    doc["rho"] = std::move(rows);
    if (!label.empty()) {
        doc["label"] = label;
    }
    return doc;
}

LabeledState state_from_json(const json &doc) {
    if (!doc.is_object()) {
        throw FormatError("state document must be a JSON object");
    }
    for (const auto &item : doc.items()) {
        if (item.key() != "basis" && item.key() != "rho" && item.key() != "label") {
            throw FormatError("unknown state field '" + item.key() + "'");
        }
    }
    if (!doc.contains("basis") || !doc.contains("rho")) {
        throw FormatError("state document needs 'basis' and 'rho'");
    }
    const json &basis = doc["basis"];
    if (!basis.is_array() || basis.size() != 4) {
        throw FormatError("'basis' must be [\"H1\",\"H2\",\"V1\",\"V2\"]");
    }
    for (int i = 0; i < 4; ++i) {
        if (!basis[i].is_string() || basis[i].get<std::string>() != kBasisLabels[i]) {
            throw FormatError("'basis' must be [\"H1\",\"H2\",\"V1\",\"V2\"]");
        }
    }
    const json &rows = doc["rho"];
    if (!rows.is_array() || rows.size() != 4) {
        throw FormatError("'rho' must be a 4x4 array of [re, im] pairs");
    }
    Matrix4 m;
    for (int r = 0; r < 4; ++r) {
        if (!rows[r].is_array() || rows[r].size() != 4) {
            throw FormatError("'rho' row " + std::to_string(r) + " must hold 4 [re, im] pairs");
        }
        for (int c = 0; c < 4; ++c) {
            const json &cell = rows[r][c];
            if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number()) {
                throw FormatError("'rho' entry (" + std::to_string(r) + "," + std::to_string(c) +
                                  ") must be a [re, im] number pair");
            }
            m(r, c) = Complex(cell[0].get<double>(), cell[1].get<double>());
        }
    }
    std::string label;
    if (doc.contains("label")) {
        if (!doc["label"].is_string()) {
            throw FormatError("'label' must be a string");
        }
        label = doc["label"].get<std::string>();
    }
    return {CoherencePolarizationMatrix(m), label};
}

LabeledState read_state_file(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw FormatError("cannot open state file '" + path.string() + "'");
    }
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw FormatError("state file '" + path.string() + "' is not valid JSON: " + e.what());
    }
    return state_from_json(doc);
}

void write_state_file(const std::filesystem::path &path, const CoherencePolarizationMatrix &rho,
                      const std::string &label) {
    std::ofstream out(path);
    if (!out) {
        throw FormatError("cannot write state file '" + path.string() + "'");
    }
    out << state_to_json(rho, label).dump(2) << '\n';
}

json validation_report_to_json(const ValidationReport &report) {
    json pairs = json::array();
    for (const auto &[n, m] : report.violated_bounds) {
        pairs.push_back(json::array({kBasisLabels[n], kBasisLabels[m]}));
    }
    return json{{"is_valid", report.is_valid},
                {"hermiticity_defect", report.hermiticity_defect},
                {"trace_defect", report.trace_defect},
                {"min_eigenvalue", report.min_eigenvalue},
                {"violated_bounds", pairs}};
}

namespace {

json optional_number(const std::optional<double> &value) { return value ? json(*value) : json(nullptr); }

std::string optional_cell(const std::optional<double> &value) { return value ? format_real(*value) : std::string(); }

// Labels are free text; quote them when they would break the row.
std::string csv_text(const std::string &text) {
    if (text.find_first_of(",\"\n\r") == std::string::npos) {
        return text;
    }
    std::string quoted = "\"";
    for (char ch : text) {
        if (ch == '"') {
            quoted += '"';
        }
        quoted += ch;
    }
    return quoted + "\"";
}

}  // namespace

json report_to_json(const DualityReport &report) {
    json doc;
    doc["label"] = report.label;
    doc["I1"] = report.i1;
    doc["I2"] = report.i2;
    doc["mu_abs"] = optional_number(report.coherence_magnitude);
    doc["mu_phase"] = optional_number(report.coherence_phase);
    doc["p1"] = optional_number(report.p1);
    doc["p2"] = optional_number(report.p2);
    doc["V"] = report.visibility;
    doc["D"] = report.distinguishability;
    doc["D2_plus_V2"] = report.complementarity;
    return doc;
}

std::string report_csv_header() { return "label,I1,I2,mu_abs,mu_phase,p1,p2,V,D,D2_plus_V2"; }

std::string report_csv_row(const DualityReport &report) {
    std::ostringstream row;
    row << csv_text(report.label) << ',' << format_real(report.i1) << ',' << format_real(report.i2) << ','
        << optional_cell(report.coherence_magnitude) << ',' << optional_cell(report.coherence_phase) << ','
        << optional_cell(report.p1) << ',' << optional_cell(report.p2) << ',' << format_real(report.visibility)
        << ',' << format_real(report.distinguishability) << ',' << format_real(report.complementarity);
    return row.str();
}

std::string trajectory_csv_header() { return "time,V,D,D2_plus_V2,mu_abs,p1,p2,I1,I2"; }

std::string trajectory_csv_row(const TrajectoryPoint &point) {
    const DualityReport &r = point.report;
    std::ostringstream row;
    row << format_real(point.time) << ',' << format_real(r.visibility) << ',' << format_real(r.distinguishability)
        << ',' << format_real(r.complementarity) << ',' << optional_cell(r.coherence_magnitude) << ','
        << optional_cell(r.p1) << ',' << optional_cell(r.p2) << ',' << format_real(r.i1) << ','
        << format_real(r.i2);
    return row.str();
}

std::string trajectory_comment(const EvolutionSpec &spec) {
    std::string n = spec.method == EvolutionMethod::kIterated ? std::to_string(spec.steps) : "-";
    return "# model=" + std::string(to_string(spec.model)) + " gamma=" + format_real(spec.rate) +
           " method=" + std::string(to_string(spec.method)) + " n=" + n;
}

}  // namespace duality
