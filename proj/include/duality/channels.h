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

#ifndef DUALITY_CHANNELS_H
#define DUALITY_CHANNELS_H

#include <string>
#include <string_view>
#include <vector>

#include "duality/observables.h"
#include "duality/state.h"

namespace duality {

/// Completeness defect above which apply() refuses a channel.
inline constexpr double kCompletenessTol = 1e-9;
/// Largest per-step interaction probability accepted by iterated evolution.
inline constexpr double kMaxStepProbability = 0.5;

enum class ChannelModel { kDephasing, kScattering };
enum class EvolutionMethod { kClosedForm, kIterated };

std::string_view to_string(ChannelModel model);
std::string_view to_string(EvolutionMethod method);
/// Accepts "dephasing" / "scattering". Throws InputError otherwise.
ChannelModel parse_channel_model(std::string_view name);
/// Accepts "closed" (alias "closed_form") / "iterated". Throws InputError otherwise.
EvolutionMethod parse_evolution_method(std::string_view name);

/// Operator-sum channel rho -> sum_i K_i rho K_i^dagger.
class KrausChannel {
   public:
    KrausChannel(std::string label, double p, std::vector<Matrix4> operators);

    const std::string &label() const { return label_; }
    double p() const { return p_; }
    const std::vector<Matrix4> &operators() const { return operators_; }

    /// Max-entry magnitude of sum_i K_i^dagger K_i - I.
    double completeness_defect() const;

   private:
    std::string label_;
    double p_;
    std::vector<Matrix4> operators_;
};

/// K0 = sqrt(1-p) I, K1 = sqrt(p) (path-1 projector), K2 = sqrt(p) (path-2 projector).
KrausChannel dephasing_channel(double p);

/// K0 = sqrt(1-p) I and the four path hops sqrt(p)|H,2><H,1|, sqrt(p)|H,1><H,2|,
/// sqrt(p)|V,2><V,1|, sqrt(p)|V,1><V,2|.
KrausChannel scattering_channel(double p);

KrausChannel make_channel(ChannelModel model, double p);

/// Throws ChannelError if the channel's completeness defect exceeds kCompletenessTol.
CoherencePolarizationMatrix apply(const CoherencePolarizationMatrix &rho, const KrausChannel &channel);

/// Closed-form time-evolved matrices with decay factor g = exp(-rate t).
///
/// dephasing: rho_12, rho_14, rho_23, rho_34 (and conjugates) scale by g.
/// scattering: every off-diagonal scales by g; each diagonal pair (11,22),
/// (33,44) mixes as rho_nn -> g rho_nn + (1-g) rho_mm.
CoherencePolarizationMatrix evolve_closed_form(const CoherencePolarizationMatrix &rho0, ChannelModel model,
                                               double rate, double t);

/// n successive applications of the model's channel at p = rate t / n.
/// Throws InputError unless n >= 1 and 0 <= p <= kMaxStepProbability.
CoherencePolarizationMatrix evolve_iterated(const CoherencePolarizationMatrix &rho0, ChannelModel model,
                                            double rate, double t, int n);

struct EvolutionSpec {
    ChannelModel model = ChannelModel::kDephasing;
    double rate = 1.0;
    std::vector<double> times;
    EvolutionMethod method = EvolutionMethod::kClosedForm;
    int steps = 1;  ///< channel applications per grid time, iterated method only
};

/// `points` equally spaced times on [0, t_max], both ends included.
std::vector<double> uniform_time_grid(double t_max, int points);

/// Throws InputError describing the first violated constraint.
void validate_spec(const EvolutionSpec &spec);

struct TrajectoryPoint {
    double time = 0.0;
    DualityReport report;
};

/// Each grid time is evolved independently from rho0.
std::vector<TrajectoryPoint> trajectory(const CoherencePolarizationMatrix &rho0, const EvolutionSpec &spec,
                                        double tol = kDefaultValidateTol);

}  // namespace duality

#endif
