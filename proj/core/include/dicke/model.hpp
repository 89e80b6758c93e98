// Copyright 2026 The dicke-squeezing Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Two-atom Dicke system. The collective (symmetric) space is spanned by
//   |e> = |e1 e2>,  |s> = (|e1 g2> + |g1 e2>)/sqrt(2),  |g> = |g1 g2>
// and is ordered {e, s, g}, descending in energy. The singlet never couples
// under collective dynamics and is not represented.
//
// The product basis is ordered {|e1 e2>, |e1 g2>, |g1 e2>, |g1 g2>}.

#include "dicke/numerics.hpp"

namespace dicke {

enum DickeLevel : std::size_t { kExcited = 0, kSymmetric = 1, kGround = 2 };

inline constexpr std::size_t kDickeDim = 3;
inline constexpr std::size_t kProductDim = 4;

/// Real-valued density matrix elements in the collective basis. `gg` is
/// redundant with unit trace and is carried explicitly so callers can state
/// it; `from_real_elements` checks it.
struct RealDickeElements {
  double ee = 0.0;
  double ss = 0.0;
  double gg = 0.0;
  double es = 0.0;
  double sg = 0.0;
  double eg = 0.0;
};

/// 3x3 density matrix in the {e, s, g} basis. Always Hermitian, unit trace
/// and positive semidefinite to 1e-12.
class DickeState {
 public:
  static DickeState from_matrix(ComplexMatrix m);
  static DickeState from_real_elements(const RealDickeElements& el);
  static DickeState pure(std::span<const Complex> amplitudes);
  static DickeState basis(DickeLevel level);

  const ComplexMatrix& matrix() const noexcept { return rho_; }
  Complex operator()(DickeLevel r, DickeLevel c) const { return rho_(r, c); }

  double ee() const { return rho_(kExcited, kExcited).real(); }
  double ss() const { return rho_(kSymmetric, kSymmetric).real(); }
  double gg() const { return rho_(kGround, kGround).real(); }
  Complex es() const { return rho_(kExcited, kSymmetric); }
  Complex sg() const { return rho_(kSymmetric, kGround); }
  Complex eg() const { return rho_(kExcited, kGround); }

  /// Tr rho^2.
  double purity() const;
  /// Largest |Im| over the off-diagonal elements.
  double max_imag_coherence() const;

 private:
  explicit DickeState(ComplexMatrix m) : rho_(std::move(m)) {}
  ComplexMatrix rho_;
};

/// 4x4 density matrix on the product basis, supported on the symmetric
/// (triplet) subspace.
class ProductState {
 public:
  static ProductState from_matrix(ComplexMatrix m);

  const ComplexMatrix& matrix() const noexcept { return rho_; }

 private:
  explicit ProductState(ComplexMatrix m) : rho_(std::move(m)) {}
  ComplexMatrix rho_;
};

/// Collective spin operators S = S_1 + S_2 restricted to the triplet, hbar = 1.
struct CollectiveOperators {
  ComplexMatrix s_plus;
  ComplexMatrix s_minus;
  ComplexMatrix s_x;
  ComplexMatrix s_y;
  ComplexMatrix s_z;
};

/// S+ = sqrt(2)(|e><s| + |s><g|), S_z = diag(1, 0, -1).
const CollectiveOperators& collective_operators();

/// 4x3 isometry mapping {e, s, g} into the product basis.
const ComplexMatrix& symmetric_embedding();

/// rho_4 = P rho P^dagger with P the symmetric embedding.
ProductState dicke_to_product(const DickeState& rho);

/// Tr(op rho). `op` must be 3x3.
Complex expectation(const ComplexMatrix& op, const DickeState& rho);

/// Shared validation used by both state types: Hermitian, unit trace, PSD.
/// Throws kInvalidInput with the failing property.
void validate_density_matrix(const ComplexMatrix& m, std::size_t dim, const char* what);

}  // namespace dicke
