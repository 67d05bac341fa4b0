// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

/**
 * @file repr.hpp
 * @brief Spin-j irreps of su_q(2) as dense complex matrices, plus checks of
 *        the algebra they satisfy.
 *
 * Basis is ordered by descending m: index k holds m = j - k. Then
 *   I_z        = diag(j, j-1, ..., -j)
 *   <m+1|I_+|m> = sqrt([j+m+1][j-m])     (superdiagonal)
 *   I_-        = I_+^dagger
 * and the relations satisfied are
 *   [I_z, I_+-] = +-I_+-,   [I_+, I_-] = [2 I_z].
 * The J copy of the algebra uses the identical construction.
 */

#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "qdeform/qnum.hpp"

namespace qdeform {

using ComplexMatrix = Eigen::MatrixXcd;

class IrrepMatrices {
 public:
  IrrepMatrices(SpinLabel j, DeformationParameter d, ComplexMatrix iz, ComplexMatrix iplus,
                ComplexMatrix iminus)
      : j_(j), d_(d), iz_(std::move(iz)), iplus_(std::move(iplus)), iminus_(std::move(iminus)) {}

  SpinLabel j() const noexcept { return j_; }
  const DeformationParameter& deformation() const noexcept { return d_; }
  int dim() const noexcept { return j_.dim(); }

  const ComplexMatrix& iz() const noexcept { return iz_; }
  const ComplexMatrix& iplus() const noexcept { return iplus_; }
  const ComplexMatrix& iminus() const noexcept { return iminus_; }

  /// 2m for basis index k.
  int twice_m_at(int k) const noexcept { return j_.twice_j() - 2 * k; }

 private:
  SpinLabel j_;
  DeformationParameter d_;
  ComplexMatrix iz_;
  ComplexMatrix iplus_;
  ComplexMatrix iminus_;
};

/// One checked matrix identity. `tolerance` is the effective bound used,
/// already scaled by the magnitude of the operands (see scaled_tolerance).
struct VerificationReport {
  std::string relation_name;
  double max_abs_deviation = 0.0;
  double tolerance = 0.0;
  bool passed = false;
};

IrrepMatrices build_irrep(SpinLabel j, const DeformationParameter& d);

/// [I_z,I_+] = I_+, [I_z,I_-] = -I_-, [I_+,I_-] = [2I_z].
std::vector<VerificationReport> verify_commutators(const IrrepMatrices& r, double tol);

/// C = I_- I_+ + [I_z][I_z + 1]; equals [j][j+1] times the identity.
ComplexMatrix casimir_standard(const IrrepMatrices& r);

/// I^2 = (I_+ I_- + I_- I_+)/2 + I_z^2, diagonal with entries
/// [j][j+1] - [m]([m+1] + [m-1])/2 + m^2.
ComplexMatrix casimir_symmetrized(const IrrepMatrices& r);

/// C = [j][j+1] 1 and [C, X] = 0 for X in {I_z, I_+, I_-}.
std::vector<VerificationReport> verify_casimir(const IrrepMatrices& r, double tol);

/// At q = 1, checks the nine so(4) relations of L = I x 1 + 1 x J and
/// M = I x 1 - 1 x J in Cartesian components on the (2j1+1)(2j2+1) space.
std::vector<VerificationReport> verify_so4_limit(SpinLabel j1, SpinLabel j2, double tol);

/// Closed forms, for comparison against the matrices.
double casimir_eigenvalue(SpinLabel j, const DeformationParameter& d);
double symmetrized_casimir_value(SpinLabel j, int twice_m, const DeformationParameter& d);

/// Entrywise max |a_ij|, 0 for empty matrices.
double max_abs(const ComplexMatrix& a);

/// tol * max(1, max|x| over the given matrices).
double scaled_tolerance(double tol, std::initializer_list<const ComplexMatrix*> operands);

/// Report for the identity lhs == rhs, with lhs formed as ab - ba.
VerificationReport check_commutator(std::string name, const ComplexMatrix& a,
                                    const ComplexMatrix& b, const ComplexMatrix& rhs, double tol);

/// Kronecker product.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

}  // namespace qdeform
