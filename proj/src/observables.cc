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

#include "duality/observables.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "duality/errors.h"

namespace duality {

namespace {

// Row/column indices of a path's {H, V} sub-block inside the 4x4 matrix.
struct PathIndices {
    int h;
    int v;
};

PathIndices indices_of(Path path) {
    return path == Path::kOne ? PathIndices{kH1, kV1} : PathIndices{kH2, kV2};
}

double path_weight(const CoherencePolarizationMatrix &rho, Path path) {
    const auto [h, v] = indices_of(path);
    return rho(h, h).real() + rho(v, v).real();
}

void require_populated(double weight, Path path, double tol) {
    if (weight <= tol) {
        throw EmptyPathError("path " + std::to_string(static_cast<int>(path)) + " has probability " +
                             std::to_string(weight) + " <= tolerance");
    }
}

double real_checked(Complex z, double tol, const char *what) {
    if (std::abs(z.imag()) > tol) {
        throw InputError(std::string(what) + " has imaginary residue " + std::to_string(z.imag()) +
                         "; the path block is not Hermitian");
    }
    return z.real();
}

Complex cross_path_coherence(const CoherencePolarizationMatrix &rho) { return rho(kH1, kH2) + rho(kV1, kV2); }

void require_positive_length(double value, const char *name) {
    if (!(value > 0.0) || !std::isfinite(value)) {
        throw InputError(std::string(name) + " must be a positive finite length");
    }
}

}  // namespace

PolarizationState::PolarizationState(const Matrix2 &entries) : entries_(entries) {
    for (int r = 0; r < 2; ++r) {
        for (int c = 0; c < 2; ++c) {
            if (!std::isfinite(entries_(r, c).real()) || !std::isfinite(entries_(r, c).imag())) {
                throw InputError("polarization state entry is not finite");
            }
        }
    }
    const double hermiticity = std::max({std::abs(entries_(0, 1) - std::conj(entries_(1, 0))),
                                         std::abs(entries_(0, 0).imag()), std::abs(entries_(1, 1).imag())});
    if (hermiticity > kDefaultValidateTol) {
        throw InputError("polarization state is not Hermitian");
    }
    if (std::abs(entries_.trace() - Complex(1.0, 0.0)) > kDefaultValidateTol) {
        throw InputError("polarization state does not have unit trace");
    }
    if (hermitian_eigenvalues(entries_).first < -kDefaultValidateTol) {
        throw InputError("polarization state is not positive semidefinite");
    }
}

PolarizationState PolarizationState::horizontal() {
    Matrix2 m = Matrix2::Zero();
    m(0, 0) = 1.0;
    return PolarizationState(m);
}

PolarizationState PolarizationState::vertical() {
    Matrix2 m = Matrix2::Zero();
    m(1, 1) = 1.0;
    return PolarizationState(m);
}

ScreenGeometry ScreenGeometry::from_path_lengths(double k, double r1, double r2) {
    require_positive_length(k, "wavenumber k");
    require_positive_length(r1, "r1");
    require_positive_length(r2, "r2");
    return ScreenGeometry(k, r1, r2);
}

ScreenGeometry ScreenGeometry::far_field(double k, double slit_separation, double screen_distance, double x) {
    require_positive_length(k, "wavenumber k");
    require_positive_length(slit_separation, "slit separation d");
    require_positive_length(screen_distance, "screen distance L");
    if (!std::isfinite(x)) {
        throw InputError("screen coordinate x must be finite");
    }
    const double half = 0.5 * slit_separation;
    const double r1 = std::hypot(screen_distance, x + half);
    const double r2 = std::hypot(screen_distance, x - half);
    return ScreenGeometry(k, r1, r2);
}

double FarFieldSetup::fringe_period() const {
    return 2.0 * std::numbers::pi * screen_distance / (k * slit_separation);
}

PathProbabilities path_probabilities(const CoherencePolarizationMatrix &rho) {
    return {path_weight(rho, Path::kOne), path_weight(rho, Path::kTwo)};
}

Complex degree_of_coherence(const CoherencePolarizationMatrix &rho, double tol) {
    const auto [i1, i2] = path_probabilities(rho);
    require_populated(i1, Path::kOne, tol);
    require_populated(i2, Path::kTwo, tol);
    return cross_path_coherence(rho) / (std::sqrt(i1) * std::sqrt(i2));
}

StokesVector stokes(const CoherencePolarizationMatrix &rho, Path path, double tol) {
    const auto [h, v] = indices_of(path);
    const Complex i_unit(0.0, 1.0);
    return {
        real_checked(rho(h, h) + rho(v, v), tol, "S0"),
        real_checked(rho(h, h) - rho(v, v), tol, "S1"),
        real_checked(rho(h, v) + rho(v, h), tol, "S2"),
        real_checked(i_unit * (rho(h, v) - rho(v, h)), tol, "S3"),
    };
}

double degree_of_polarization(const CoherencePolarizationMatrix &rho, Path path, double tol) {
    const StokesVector s = stokes(rho, path, tol);
    require_populated(s.s0, path, tol);
    return std::sqrt(s.s1 * s.s1 + s.s2 * s.s2 + s.s3 * s.s3) / s.s0;
}

PolarizationState conditional_polarization(const CoherencePolarizationMatrix &rho, Path path, double tol) {
    const auto [h, v] = indices_of(path);
    const double weight = path_weight(rho, path);
    require_populated(weight, path, tol);
    Matrix2 block;
    block << rho(h, h), rho(h, v), rho(v, h), rho(v, v);
    return PolarizationState(block / weight);
}

PolarizationState polarization_from_stokes(const StokesVector &s) {
    if (!(s.s0 > 0.0)) {
        throw EmptyPathError("Stokes vector with S0 <= 0 has no normalized polarization state");
    }
    const Complex i_unit(0.0, 1.0);
    Matrix2 identity, sigma_z, sigma_x, sigma_y;
    identity << 1.0, 0.0, 0.0, 1.0;
    sigma_z << 1.0, 0.0, 0.0, -1.0;
    sigma_x << 0.0, 1.0, 1.0, 0.0;
    sigma_y << 0.0, -i_unit, i_unit, 0.0;
    const Matrix2 m = 0.5 * (identity + (s.s1 / s.s0) * sigma_z + (s.s2 / s.s0) * sigma_x + (s.s3 / s.s0) * sigma_y);
    return PolarizationState(m);
}

double visibility(const CoherencePolarizationMatrix &rho) { return 2.0 * std::abs(cross_path_coherence(rho)); }

double visibility_general(const CoherencePolarizationMatrix &rho, double r1, double r2) {
    require_positive_length(r1, "r1");
    require_positive_length(r2, "r2");
    const auto [i1, i2] = path_probabilities(rho);
    return 2.0 * r1 * r2 * std::abs(cross_path_coherence(rho)) / (r2 * r2 * i1 + r1 * r1 * i2);
}

double screen_intensity(const CoherencePolarizationMatrix &rho, const ScreenGeometry &geometry) {
    const auto [i1, i2] = path_probabilities(rho);
    const double r1 = geometry.r1();
    const double r2 = geometry.r2();
    const double density1 = i1 / (r1 * r1);
    const double density2 = i2 / (r2 * r2);
    double interference = 0.0;
    if (i1 > kDefaultValidateTol && i2 > kDefaultValidateTol) {
        const Complex mu = degree_of_coherence(rho);
        const Complex phase = std::polar(1.0, geometry.k() * (r1 - r2));
        interference = 2.0 * std::sqrt(density1) * std::sqrt(density2) * (mu * phase).real();
    }
    return density1 + density2 + interference;
}

double fringe_visibility_numeric(const CoherencePolarizationMatrix &rho, const FarFieldSetup &setup,
                                 const ScanRange &scan) {
    if (scan.samples < 2 || !(scan.x_max > scan.x_min)) {
        throw InputError("scan range must have x_max > x_min and at least 2 samples");
    }
    if (scan.x_max - scan.x_min < setup.fringe_period()) {
        throw InputError("scan range is shorter than one fringe period");
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    const double step = (scan.x_max - scan.x_min) / (scan.samples - 1);
    for (int i = 0; i < scan.samples; ++i) {
        const double value = screen_intensity(rho, setup.at(scan.x_min + step * i));
        lo = std::min(lo, value);
        hi = std::max(hi, value);
    }
    return (hi - lo) / (hi + lo);
}

HelstromMatrix helstrom(const CoherencePolarizationMatrix &rho) {
    Matrix2 delta;
    delta << rho(kH1, kH1) - rho(kH2, kH2), rho(kH1, kV1) - rho(kH2, kV2),
             rho(kV1, kH1) - rho(kV2, kH2), rho(kV1, kV1) - rho(kV2, kV2);
    return HelstromMatrix(delta);
}

double distinguishability(const CoherencePolarizationMatrix &rho) {
    const double d11_22 = rho(kH1, kH1).real() - rho(kH2, kH2).real();
    const double d33_44 = rho(kV1, kV1).real() - rho(kV2, kV2).real();
    const double alpha = d11_22 + d33_44;
    const Complex beta = rho(kH1, kV1) - rho(kH2, kV2);
    const double kappa = d11_22 * d33_44;
    double discriminant = alpha * alpha + 4.0 * (std::norm(beta) - kappa);
    if (discriminant < 0.0) {
        if (discriminant < -kDiscriminantClamp) {
            throw NumericDomainError("distinguishability discriminant " + std::to_string(discriminant) +
                                     " is negative beyond roundoff; input is not a valid state");
        }
        discriminant = 0.0;
    }
    const double gamma = std::sqrt(discriminant);
    return 0.5 * (std::abs(alpha + gamma) + std::abs(alpha - gamma));
}

std::pair<double, double> hermitian_eigenvalues(const Matrix2 &m) {
    const double a = m(0, 0).real();
    const double d = m(1, 1).real();
    const Complex b = 0.5 * (m(0, 1) + std::conj(m(1, 0)));
    const double mean = 0.5 * (a + d);
    const double radius = std::hypot(0.5 * (a - d), std::abs(b));
    return {mean - radius, mean + radius};
}

double distinguishability_oracle(const CoherencePolarizationMatrix &rho) {
    const auto [low, high] = hermitian_eigenvalues(helstrom(rho).matrix());
    return std::abs(low) + std::abs(high);
}

double trace_distance(const PolarizationState &pa, const PolarizationState &pb) {
    const auto [low, high] = hermitian_eigenvalues(pa.matrix() - pb.matrix());
    return 0.5 * (std::abs(low) + std::abs(high));
}

DualityReport report(const CoherencePolarizationMatrix &rho, double tol, std::string label) {
    ValidationReport check = validate(rho, tol);
    if (!check.is_valid) {
        throw ValidationFailure(std::move(check));
    }

    DualityReport out;
    out.label = std::move(label);
    const auto [i1, i2] = path_probabilities(rho);
    out.i1 = i1;
    out.i2 = i2;
    out.visibility = visibility(rho);
    out.distinguishability = distinguishability(rho);
    out.complementarity = out.distinguishability * out.distinguishability + out.visibility * out.visibility;

    if (i1 > tol && i2 > tol) {
        const Complex mu = degree_of_coherence(rho, tol);
        out.coherence_magnitude = std::abs(mu);
        if (std::abs(mu) >= kPhaseUndefinedBelow) {
            double phase = std::arg(mu);
            if (phase <= -std::numbers::pi) {
                phase = std::numbers::pi;
            }
            out.coherence_phase = phase;
        }
    }
    if (i1 > tol) {
        out.p1 = degree_of_polarization(rho, Path::kOne, tol);
    }
    if (i2 > tol) {
        out.p2 = degree_of_polarization(rho, Path::kTwo, tol);
    }
    return out;
}

void check_report_ranges(const DualityReport &r, double tol) {
    auto check_unit = [tol](std::optional<double> value, const char *name) {
        if (value && !(*value >= -tol && *value <= 1.0 + tol)) {
            throw NumericDomainError(std::string(name) + " = " + std::to_string(*value) + " is outside [0, 1]");
        }
    };
    check_unit(r.visibility, "V");
    check_unit(r.distinguishability, "D");
    check_unit(r.complementarity, "D^2 + V^2");
    check_unit(r.coherence_magnitude, "|mu|");
    check_unit(r.p1, "p1");
    check_unit(r.p2, "p2");
    check_unit(r.i1, "I1");
    check_unit(r.i2, "I2");
    if (std::abs(r.i1 + r.i2 - 1.0) > tol) {
        throw NumericDomainError("I1 + I2 deviates from 1 by " + std::to_string(std::abs(r.i1 + r.i2 - 1.0)));
    }
}

}  // namespace duality
