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

#ifndef DUALITY_OBSERVABLES_H
#define DUALITY_OBSERVABLES_H

#include <optional>
#include <string>
#include <utility>

#include "duality/state.h"

namespace duality {

enum class Path { kOne = 1, kTwo = 2 };

/// Window below zero inside which the distinguishability discriminant is treated
/// as roundoff and clamped.
inline constexpr double kDiscriminantClamp = 1e-9;
/// |mu| below which its phase is reported as undefined.
inline constexpr double kPhaseUndefinedBelow = 1e-12;

struct PathProbabilities {
    double i1 = 0.0;  ///< rho_11 + rho_33
    double i2 = 0.0;  ///< rho_22 + rho_44
};

struct StokesVector {
    double s0 = 0.0;
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;
};

/// 2x2 polarization density matrix in basis {|H>, |V>}.
class PolarizationState {
   public:
    explicit PolarizationState(const Matrix2 &entries);

    Complex operator()(int row, int col) const { return entries_(row, col); }
    const Matrix2 &matrix() const { return entries_; }

    static PolarizationState horizontal();
    static PolarizationState vertical();

   private:
    Matrix2 entries_;
};

/// Weighted difference I1 rho_1 - I2 rho_2 of the conditional polarization
/// states.
class HelstromMatrix {
   public:
    explicit HelstromMatrix(const Matrix2 &entries) : entries_(entries) {}

    Complex operator()(int row, int col) const { return entries_(row, col); }
    const Matrix2 &matrix() const { return entries_; }

   private:
    Matrix2 entries_;
};

/// Wavenumber plus the two slit-to-point distances. Build with one of the
/// factories; both validate that every length is positive.
class ScreenGeometry {
   public:
    static ScreenGeometry from_path_lengths(double k, double r1, double r2);
    /// Slits at x = -d/2 (slit 1) and x = +d/2 (slit 2), screen at distance L.
    /// The far-field regime L >> d is the caller's responsibility.
    static ScreenGeometry far_field(double k, double slit_separation, double screen_distance, double x);

    double k() const { return k_; }
    double r1() const { return r1_; }
    double r2() const { return r2_; }

   private:
    ScreenGeometry(double k, double r1, double r2) : k_(k), r1_(r1), r2_(r2) {}
    double k_;
    double r1_;
    double r2_;
};

/// Far-field screen without a chosen point; used as a template for scans.
struct FarFieldSetup {
    double k = 0.0;
    double slit_separation = 0.0;
    double screen_distance = 0.0;

    ScreenGeometry at(double x) const {
        return ScreenGeometry::far_field(k, slit_separation, screen_distance, x);
    }
    /// Small-angle fringe spacing 2 pi L / (k d).
    double fringe_period() const;
};

struct ScanRange {
    double x_min = 0.0;
    double x_max = 0.0;
    int samples = 0;
};

struct DualityReport {
    std::string label;
    double visibility = 0.0;
    double distinguishability = 0.0;
    double complementarity = 0.0;  ///< D^2 + V^2
    std::optional<double> coherence_magnitude;
    std::optional<double> coherence_phase;  ///< in (-pi, pi]
    std::optional<double> p1;
    std::optional<double> p2;
    double i1 = 0.0;
    double i2 = 0.0;
};

PathProbabilities path_probabilities(const CoherencePolarizationMatrix &rho);

/// mu = (rho_12 + rho_34) / sqrt(I1 I2). Throws EmptyPathError if I1 or I2 <= tol.
Complex degree_of_coherence(const CoherencePolarizationMatrix &rho, double tol = kDefaultValidateTol);

/// Throws InputError if a component carries an imaginary residue above tol.
StokesVector stokes(const CoherencePolarizationMatrix &rho, Path path, double tol = kDefaultValidateTol);

double degree_of_polarization(const CoherencePolarizationMatrix &rho, Path path, double tol = kDefaultValidateTol);

/// Normalized path sub-block. Throws EmptyPathError on an empty path.
PolarizationState conditional_polarization(const CoherencePolarizationMatrix &rho, Path path,
                                           double tol = kDefaultValidateTol);

/// (1/2) sum_i (S_i / S_0) sigma_i with the Pauli set (I, Z, X, Y) matched to
/// (S0, S1, S2, S3).
PolarizationState polarization_from_stokes(const StokesVector &s);

/// Near-axis visibility 2 |rho_12 + rho_34|.
double visibility(const CoherencePolarizationMatrix &rho);

/// Visibility for arbitrary slit distances:
/// 2 r1 r2 |rho_12 + rho_34| / (r2^2 I1 + r1^2 I2).
double visibility_general(const CoherencePolarizationMatrix &rho, double r1, double r2);

/// Detection probability density I1/r1^2 + I2/r2^2 + 2 sqrt(I1 I2)/(r1 r2) Re[mu e^{ik(r1-r2)}].
/// The interference term is dropped when a path is empty.
double screen_intensity(const CoherencePolarizationMatrix &rho, const ScreenGeometry &geometry);

/// (max - min) / (max + min) over a uniform sample of screen_intensity.
///
/// The scan must cover at least one fringe period. Agreement with
/// visibility() degrades with the envelope change 1/r^2 across the scan and
/// with the imbalance between r1 and r2; both shrink as d/L -> 0 when the
/// scan stays a fixed number of fringes wide and the wavelength is small
/// compared to d.
double fringe_visibility_numeric(const CoherencePolarizationMatrix &rho, const FarFieldSetup &setup,
                                 const ScanRange &scan);

HelstromMatrix helstrom(const CoherencePolarizationMatrix &rho);

/// D = (|alpha + gamma| + |alpha - gamma|) / 2 with
/// alpha = rho_11 - rho_22 + rho_33 - rho_44, beta = rho_13 - rho_24,
/// kappa = (rho_11 - rho_22)(rho_33 - rho_44), gamma = sqrt(alpha^2 + 4(|beta|^2 - kappa)).
/// Throws NumericDomainError when the discriminant is below -kDiscriminantClamp.
double distinguishability(const CoherencePolarizationMatrix &rho);

/// Trace norm of helstrom(rho) through the 2x2 Hermitian eigensolver; shares
/// no code with distinguishability().
double distinguishability_oracle(const CoherencePolarizationMatrix &rho);

/// Closed-form eigenvalues (ascending) of a 2x2 Hermitian matrix; the input's
/// anti-Hermitian part is ignored.
std::pair<double, double> hermitian_eigenvalues(const Matrix2 &m);

/// (1/2) Tr |pa - pb|.
double trace_distance(const PolarizationState &pa, const PolarizationState &pb);

/// Validates rho (throws ValidationFailure) and gathers every observable.
DualityReport report(const CoherencePolarizationMatrix &rho, double tol = kDefaultValidateTol,
                     std::string label = "");

/// Checks the [0,1] ranges and I1 + I2 = 1. Throws NumericDomainError naming the
/// first offending field.
void check_report_ranges(const DualityReport &r, double tol = kDefaultValidateTol);


}  // namespace duality

#endif
