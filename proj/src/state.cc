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

#include "duality/state.h"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <string>

#include "duality/errors.h"
#include "duality/rng.h"

namespace duality {

namespace {

bool is_finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_unit_interval(double value, const char *name) {
    if (!(value >= 0.0 && value <= 1.0)) {
        throw InputError(std::string(name) + " must lie in [0, 1], got " + std::to_string(value));
    }
}

}  // namespace

PureStateVector::PureStateVector(const Vector4 &amplitudes) : amplitudes_(amplitudes) {
    for (int i = 0; i < 4; ++i) {
        if (!is_finite(amplitudes_(i))) {
            throw InputError("pure state amplitude " + std::to_string(i) + " is not finite");
        }
    }
}

PureStateVector::PureStateVector(Complex h1, Complex h2, Complex v1, Complex v2)
    : PureStateVector(Vector4(h1, h2, v1, v2)) {}

double PureStateVector::norm_defect() const { return std::abs(amplitudes_.squaredNorm() - 1.0); }

CoherencePolarizationMatrix::CoherencePolarizationMatrix(const Matrix4 &entries) : entries_(entries) {
    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            if (!is_finite(entries_(r, c))) {
                throw InputError("density matrix entry (" + std::to_string(r) + "," + std::to_string(c) +
                                 ") is not finite");
            }
        }
    }
}

ValidationFailure::ValidationFailure(ValidationReport report)
    : std::runtime_error("state fails density-matrix validation"), report_(std::move(report)) {}

std::array<double, 4> eigenvalues(const CoherencePolarizationMatrix &rho) {
    const Matrix4 hermitian_part = (rho.matrix() + rho.matrix().adjoint()) * 0.5;
    Eigen::SelfAdjointEigenSolver<Matrix4> solver(hermitian_part, Eigen::EigenvaluesOnly);
    const auto &values = solver.eigenvalues();
    return {values(0), values(1), values(2), values(3)};
}

ValidationReport validate(const CoherencePolarizationMatrix &rho, double tol) {
    ValidationReport report;
    const Matrix4 &m = rho.matrix();

    for (int r = 0; r < 4; ++r) {
        for (int c = 0; c < 4; ++c) {
            report.hermiticity_defect = std::max(report.hermiticity_defect, std::abs(m(r, c) - std::conj(m(c, r))));
        }
    }
    report.trace_defect = std::abs(m.trace() - Complex(1.0, 0.0));
    report.min_eigenvalue = eigenvalues(rho)[0];

    for (int n = 0; n < 4; ++n) {
        for (int k = n + 1; k < 4; ++k) {
            const double bound = m(n, n).real() * m(k, k).real();
            if (std::norm(m(n, k)) > bound + tol || std::norm(m(k, n)) > bound + tol) {
                report.violated_bounds.emplace_back(n, k);
            }
        }
    }

    report.is_valid = report.hermiticity_defect <= tol && report.trace_defect <= tol &&
                      report.min_eigenvalue >= -tol && report.violated_bounds.empty();
    return report;
}

CoherencePolarizationMatrix from_pure(const PureStateVector &v, double tol) {
    if (v.norm_defect() > tol) {
        throw InputError("pure state is not normalized (| |v|^2 - 1 | = " + std::to_string(v.norm_defect()) + ")");
    }
    const Vector4 &a = v.amplitudes();
    return CoherencePolarizationMatrix(a * a.adjoint());
}

PureStateVector psi1(double a) {
    require_unit_interval(a, "a");
    return PureStateVector(a, std::sqrt(1.0 - a * a), 0.0, 0.0);
}

PureStateVector psi2(double a, double b) {
    require_unit_interval(a, "a");
    require_unit_interval(b, "b");
    const double path2 = std::sqrt(1.0 - a * a);
    return PureStateVector(a, b * path2, 0.0, Complex(0.0, std::sqrt(1.0 - b * b) * path2));
}

PureStateVector psi_mixed() { return PureStateVector(std::sqrt(0.5), 0.5, 0.0, 0.5); }

CoherencePolarizationMatrix werner(double eta) {
    require_unit_interval(eta, "eta");
    Vector4 singlet = Vector4::Zero();
    singlet(kH2) = std::sqrt(0.5);
    singlet(kV1) = -std::sqrt(0.5);
    const Matrix4 projector = singlet * singlet.adjoint();
    return CoherencePolarizationMatrix(eta * projector + ((1.0 - eta) / 4.0) * Matrix4::Identity());
}

CoherencePolarizationMatrix maximally_mixed() { return CoherencePolarizationMatrix(0.25 * Matrix4::Identity()); }

PureStateVector random_pure(std::uint64_t seed) {
    Xoshiro256 rng(seed);
    Vector4 amplitudes;
    for (int i = 0; i < 4; ++i) {
        const double re = rng.normal();
        const double im = rng.normal();
        amplitudes(i) = Complex(re, im);
    }
    return PureStateVector(amplitudes / amplitudes.norm());
}

CoherencePolarizationMatrix random_mixed(std::uint64_t seed, int rank) {
    if (rank < 1 || rank > 4) {
        throw InputError("rank must be in 1..4, got " + std::to_string(rank));
    }
    Xoshiro256 rng(seed);
    Eigen::Matrix<Complex, 4, Eigen::Dynamic> g(4, rank);
    for (int c = 0; c < rank; ++c) {
        for (int r = 0; r < 4; ++r) {
            const double re = rng.normal();
            const double im = rng.normal();
            g(r, c) = Complex(re, im);
        }
    }
    Matrix4 gg = g * g.adjoint();
    // G G^dagger is Hermitian in exact arithmetic; symmetrize the roundoff.
    gg = (gg + gg.adjoint()).eval() * 0.5;
    return CoherencePolarizationMatrix(gg / gg.trace().real());
}

}  // namespace duality
