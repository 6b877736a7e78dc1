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

#ifndef DUALITY_STATE_H
#define DUALITY_STATE_H

#include <Eigen/Core>
#include <array>
#include <complex>
#include <stdexcept>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace duality {

using Complex = std::complex<double>;
using Matrix4 = Eigen::Matrix<Complex, 4, 4>;
using Matrix2 = Eigen::Matrix<Complex, 2, 2>;
using Vector4 = Eigen::Matrix<Complex, 4, 1>;

/// Row/column index of each basis ket. The order {|H,1>, |H,2>, |V,1>, |V,2>}
/// is shared by every module and every file format.
inline constexpr int kH1 = 0;
inline constexpr int kH2 = 1;
inline constexpr int kV1 = 2;
inline constexpr int kV2 = 3;
inline constexpr std::array<std::string_view, 4> kBasisLabels{"H1", "H2", "V1", "V2"};

inline constexpr double kDefaultValidateTol = 1e-9;

/// Amplitudes of a pure path-polarization state, in basis order.
class PureStateVector {
   public:
    /// Throws InputError on non-finite amplitudes. Normalization is checked by
    /// from_pure(), not here.
    explicit PureStateVector(const Vector4 &amplitudes);
    PureStateVector(Complex h1, Complex h2, Complex v1, Complex v2);

    const Vector4 &amplitudes() const { return amplitudes_; }
    Complex operator[](int i) const { return amplitudes_(i); }
    double norm_defect() const;

    bool operator==(const PureStateVector &other) const { return amplitudes_ == other.amplitudes_; }

   private:
    Vector4 amplitudes_;
};

/// 4x4 coherence-polarization density matrix. Holds any finite matrix; use
/// validate() to check the density-matrix axioms.
class CoherencePolarizationMatrix {
   public:
    /// Throws InputError if any entry is non-finite.
    explicit CoherencePolarizationMatrix(const Matrix4 &entries);

    Complex operator()(int row, int col) const { return entries_(row, col); }
    const Matrix4 &matrix() const { return entries_; }

    bool operator==(const CoherencePolarizationMatrix &other) const { return entries_ == other.entries_; }

   private:
    Matrix4 entries_;
};

struct ValidationReport {
    bool is_valid = false;
    double hermiticity_defect = 0.0;  ///< max |rho(n,m) - conj(rho(m,n))|
    double trace_defect = 0.0;        ///< |Tr rho - 1|
    double min_eigenvalue = 0.0;      ///< of the Hermitian part (rho + rho^dagger)/2
    /// Pairs (n, m), n < m, 0-based, with |rho_nm|^2 > rho_nn rho_mm + tol.
    std::vector<std::pair<int, int>> violated_bounds;
};

/// Thrown where an operation requires a valid state and gets an invalid one.
class ValidationFailure : public std::runtime_error {
   public:
    explicit ValidationFailure(ValidationReport report);
    const ValidationReport &report() const { return report_; }

   private:
    ValidationReport report_;
};

ValidationReport validate(const CoherencePolarizationMatrix &rho, double tol = kDefaultValidateTol);

/// |v><v|. Throws InputError when | ||v||^2 - 1 | > tol.
CoherencePolarizationMatrix from_pure(const PureStateVector &v, double tol = kDefaultValidateTol);

/// a|H,1> + sqrt(1-a^2)|H,2>, a in [0,1].
PureStateVector psi1(double a);

/// a|H,1> + sqrt(1-a^2)(b|H,2> + i sqrt(1-b^2)|V,2>), a, b in [0,1].
PureStateVector psi2(double a, double b);

/// Equal superposition of |H,1> and diagonal polarization on path 2:
/// |H,1>/sqrt(2) + (|H,2> + |V,2>)/2.
PureStateVector psi_mixed();

/// eta |psi-><psi-| + (1-eta)/4 I with |psi-> = (|H,2> - |V,1>)/sqrt(2).
CoherencePolarizationMatrix werner(double eta);

/// I/4.
CoherencePolarizationMatrix maximally_mixed();

/// Haar-random pure state: 8 standard normals, normalized.
PureStateVector random_pure(std::uint64_t seed);

/// Ginibre state G G^dagger / Tr(G G^dagger), G a 4 x rank complex Gaussian
/// matrix. rank must be in 1..4.
CoherencePolarizationMatrix random_mixed(std::uint64_t seed, int rank);

/// Eigenvalues of the Hermitian part, ascending.
std::array<double, 4> eigenvalues(const CoherencePolarizationMatrix &rho);

}  // namespace duality

#endif
