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

#include "duality/channels.h"

#include <cmath>
#include <string>

#include "duality/errors.h"

namespace duality {

namespace {

Matrix4 ket_bra(int row, int col) {
    Matrix4 m = Matrix4::Zero();
    m(row, col) = 1.0;
    return m;
}

void require_probability(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InputError("interaction probability p must lie in [0, 1], got " + std::to_string(p));
    }
}

void require_non_negative(double value, const char *name) {
    if (!(value >= 0.0) || !std::isfinite(value)) {
        throw InputError(std::string(name) + " must be finite and non-negative, got " + std::to_string(value));
    }
}

}  // namespace

std::string_view to_string(ChannelModel model) {
    return model == ChannelModel::kDephasing ? "dephasing" : "scattering";
}

std::string_view to_string(EvolutionMethod method) {
    return method == EvolutionMethod::kClosedForm ? "closed" : "iterated";
}

ChannelModel parse_channel_model(std::string_view name) {
    if (name == "dephasing") {
        return ChannelModel::kDephasing;
    }
    if (name == "scattering") {
        return ChannelModel::kScattering;
    }
    throw InputError("unknown channel model '" + std::string(name) + "' (expected dephasing or scattering)");
}

EvolutionMethod parse_evolution_method(std::string_view name) {
    if (name == "closed" || name == "closed_form") {
        return EvolutionMethod::kClosedForm;
    }
    if (name == "iterated") {
        return EvolutionMethod::kIterated;
    }
    throw InputError("unknown evolution method '" + std::string(name) + "' (expected closed or iterated)");
}

KrausChannel::KrausChannel(std::string label, double p, std::vector<Matrix4> operators)
    : label_(std::move(label)), p_(p), operators_(std::move(operators)) {
    if (operators_.empty()) {
        throw InputError("a Kraus channel needs at least one operator");
    }
}

double KrausChannel::completeness_defect() const {
    Matrix4 sum = Matrix4::Zero();
    for (const auto &k : operators_) {
        sum += k.adjoint() * k;
    }
    return (sum - Matrix4::Identity()).cwiseAbs().maxCoeff();
}

KrausChannel dephasing_channel(double p) {
    require_probability(p);
    const double stay = std::sqrt(1.0 - p);
    const double hit = std::sqrt(p);
    return KrausChannel("dephasing", p,
                        {stay * Matrix4::Identity(),
                         hit * (ket_bra(kH1, kH1) + ket_bra(kV1, kV1)),
                         hit * (ket_bra(kH2, kH2) + ket_bra(kV2, kV2))});
}

KrausChannel scattering_channel(double p) {
    require_probability(p);
    const double stay = std::sqrt(1.0 - p);
    const double hit = std::sqrt(p);
    return KrausChannel("scattering", p,
                        {stay * Matrix4::Identity(),
                         hit * ket_bra(kH2, kH1),
                         hit * ket_bra(kH1, kH2),
                         hit * ket_bra(kV2, kV1),
                         hit * ket_bra(kV1, kV2)});
}

KrausChannel make_channel(ChannelModel model, double p) {
    return model == ChannelModel::kDephasing ? dephasing_channel(p) : scattering_channel(p);
}

CoherencePolarizationMatrix apply(const CoherencePolarizationMatrix &rho, const KrausChannel &channel) {
    const double defect = channel.completeness_defect();
    if (defect > kCompletenessTol) {
        throw ChannelError("channel '" + channel.label() + "' violates completeness by " + std::to_string(defect));
    }
    Matrix4 out = Matrix4::Zero();
    for (const auto &k : channel.operators()) {
        out.noalias() += k * rho.matrix() * k.adjoint();
    }
    return CoherencePolarizationMatrix(out);
}

CoherencePolarizationMatrix evolve_closed_form(const CoherencePolarizationMatrix &rho0, ChannelModel model,
                                               double rate, double t) {
    require_non_negative(rate, "decay rate");
    require_non_negative(t, "time");
    const double g = std::exp(-rate * t);
    const Matrix4 &r = rho0.matrix();
    Matrix4 out = r;

    if (model == ChannelModel::kDephasing) {
        // Coherences between different paths decay; same-path entries are untouched.
        for (int row = 0; row < 4; ++row) {
            for (int col = 0; col < 4; ++col) {
                const bool same_path = (row % 2) == (col % 2);
                if (!same_path) {
                    out(row, col) = g * r(row, col);
                }
            }
        }
        return CoherencePolarizationMatrix(out);
    }

    const double e = 1.0 - g;
    out = g * r;
    out(kH1, kH1) = g * r(kH1, kH1) + e * r(kH2, kH2);
    out(kH2, kH2) = g * r(kH2, kH2) + e * r(kH1, kH1);
    out(kV1, kV1) = g * r(kV1, kV1) + e * r(kV2, kV2);
    out(kV2, kV2) = g * r(kV2, kV2) + e * r(kV1, kV1);
    return CoherencePolarizationMatrix(out);
}

CoherencePolarizationMatrix evolve_iterated(const CoherencePolarizationMatrix &rho0, ChannelModel model,
                                            double rate, double t, int n) {
    require_non_negative(rate, "decay rate");
    require_non_negative(t, "time");
    if (n < 1) {
        throw InputError("iterated evolution needs n >= 1, got " + std::to_string(n));
    }
    const double p = rate * t / n;
    if (p > kMaxStepProbability) {
        throw InputError("per-step probability rate*t/n = " + std::to_string(p) + " exceeds " +
                         std::to_string(kMaxStepProbability) + "; increase n");
    }
    const KrausChannel channel = make_channel(model, p);
    CoherencePolarizationMatrix rho = rho0;
    for (int i = 0; i < n; ++i) {
        rho = apply(rho, channel);
    }
    return rho;
}

std::vector<double> uniform_time_grid(double t_max, int points) {
    require_non_negative(t_max, "t_max");
    if (points < 2) {
        throw InputError("a time grid needs at least 2 points");
    }
    std::vector<double> grid(points);
    for (int i = 0; i < points; ++i) {
        grid[i] = t_max * i / (points - 1);
    }
    return grid;
}

void validate_spec(const EvolutionSpec &spec) {
    require_non_negative(spec.rate, "decay rate");
    if (spec.times.empty()) {
        throw InputError("time grid is empty");
    }
    for (std::size_t i = 0; i < spec.times.size(); ++i) {
        require_non_negative(spec.times[i], "time");
        if (i > 0 && spec.times[i] < spec.times[i - 1]) {
            throw InputError("time grid must be non-decreasing");
        }
    }
    if (spec.method == EvolutionMethod::kIterated) {
        if (spec.steps < 1) {
            throw InputError("iterated evolution needs n >= 1");
        }
        const double p = spec.rate * spec.times.back() / spec.steps;
        if (p > kMaxStepProbability) {
            throw InputError("per-step probability gamma*t_max/n = " + std::to_string(p) + " exceeds " +
                             std::to_string(kMaxStepProbability) + "; increase --n");
        }
    }
}

std::vector<TrajectoryPoint> trajectory(const CoherencePolarizationMatrix &rho0, const EvolutionSpec &spec,
                                        double tol) {
    validate_spec(spec);
    std::vector<TrajectoryPoint> points;
    points.reserve(spec.times.size());
    for (double t : spec.times) {
        const CoherencePolarizationMatrix rho = spec.method == EvolutionMethod::kClosedForm
                                                    ? evolve_closed_form(rho0, spec.model, spec.rate, t)
                                                    : evolve_iterated(rho0, spec.model, spec.rate, t, spec.steps);
        points.push_back({t, report(rho, tol)});
    }
    return points;
}

}  // namespace duality
