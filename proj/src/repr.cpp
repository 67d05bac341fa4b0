// Copyright 2026 The qdeform Authors
// SPDX-License-Identifier: Apache-2.0

#include "qdeform/repr.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace qdeform {

namespace {

using Complex = std::complex<double>;

VerificationReport make_report(std::string name, const ComplexMatrix& diff, double tolerance) {
  VerificationReport rep;
  rep.relation_name = std::move(name);
  rep.max_abs_deviation = max_abs(diff);
  rep.tolerance = tolerance;
  rep.passed = rep.max_abs_deviation <= rep.tolerance;
  return rep;
}

// diag(f(2m)) over the basis.
template <typename F>
ComplexMatrix diag_of(const IrrepMatrices& r, F&& f) {
  const int n = r.dim();
  ComplexMatrix out = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) out(k, k) = f(r.twice_m_at(k));
  return out;
}

}  // namespace

double max_abs(const ComplexMatrix& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

double scaled_tolerance(double tol, std::initializer_list<const ComplexMatrix*> operands) {
  double scale = 1.0;
  for (const auto* m : operands) scale = std::max(scale, max_abs(*m));
  return tol * scale;
}

VerificationReport check_commutator(std::string name, const ComplexMatrix& a,
                                    const ComplexMatrix& b, const ComplexMatrix& rhs, double tol) {
  const ComplexMatrix ab = a * b;
  const ComplexMatrix ba = b * a;
  return make_report(std::move(name), ab - ba - rhs, scaled_tolerance(tol, {&ab, &ba, &rhs}));
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

IrrepMatrices build_irrep(SpinLabel j, const DeformationParameter& d) {
  const int n = j.dim();
  const int tj = j.twice_j();
  ComplexMatrix iz = ComplexMatrix::Zero(n, n);
  ComplexMatrix iplus = ComplexMatrix::Zero(n, n);
  for (int k = 0; k < n; ++k) {
    const int tm = tj - 2 * k;
    iz(k, k) = 0.5 * tm;
    if (k == 0) continue;
    // |m> at column k goes to |m+1> at row k-1.
    const double radicand = qnumber_half(tj + tm + 2, d) * qnumber_half(tj - tm, d);
    if (!(radicand >= 0.0)) {
      throw std::logic_error("negative ladder radicand at twice_j=" + std::to_string(tj) +
                             ", twice_m=" + std::to_string(tm));
    }
    iplus(k - 1, k) = std::sqrt(radicand);
  }
  ComplexMatrix iminus = iplus.adjoint();
  return {j, d, std::move(iz), std::move(iplus), std::move(iminus)};
}

std::vector<VerificationReport> verify_commutators(const IrrepMatrices& r, double tol) {
  const auto& d = r.deformation();
  // [2m] = [2 * twice_m / 2]
  const ComplexMatrix q_two_iz = diag_of(r, [&](int tm) { return qnumber_half(2 * tm, d); });
  return {
      check_commutator("[I_z,I_+] = +I_+", r.iz(), r.iplus(), r.iplus(), tol),
      check_commutator("[I_z,I_-] = -I_-", r.iz(), r.iminus(), -r.iminus(), tol),
      check_commutator("[I_+,I_-] = [2I_z]", r.iplus(), r.iminus(), q_two_iz, tol),
  };
}

ComplexMatrix casimir_standard(const IrrepMatrices& r) {
  const auto& d = r.deformation();
  const ComplexMatrix q_iz = diag_of(r, [&](int tm) { return qnumber_half(tm, d); });
  const ComplexMatrix q_iz1 = diag_of(r, [&](int tm) { return qnumber_half(tm + 2, d); });
  return r.iminus() * r.iplus() + q_iz * q_iz1;
}

ComplexMatrix casimir_symmetrized(const IrrepMatrices& r) {
  return 0.5 * (r.iplus() * r.iminus() + r.iminus() * r.iplus()) + r.iz() * r.iz();
}

std::vector<VerificationReport> verify_casimir(const IrrepMatrices& r, double tol) {
  const ComplexMatrix c = casimir_standard(r);
  const ComplexMatrix expected =
      casimir_eigenvalue(r.j(), r.deformation()) * ComplexMatrix::Identity(r.dim(), r.dim());
  const ComplexMatrix zero = ComplexMatrix::Zero(r.dim(), r.dim());
  return {
      make_report("C = [j][j+1] 1", c - expected, scaled_tolerance(tol, {&c, &expected})),
      check_commutator("[C,I_z] = 0", c, r.iz(), zero, tol),
      check_commutator("[C,I_+] = 0", c, r.iplus(), zero, tol),
      check_commutator("[C,I_-] = 0", c, r.iminus(), zero, tol),
  };
}

std::vector<VerificationReport> verify_so4_limit(SpinLabel j1, SpinLabel j2, double tol) {
  const DeformationParameter undeformed;
  const IrrepMatrices a = build_irrep(j1, undeformed);
  const IrrepMatrices b = build_irrep(j2, undeformed);
  const ComplexMatrix id_a = ComplexMatrix::Identity(a.dim(), a.dim());
  const ComplexMatrix id_b = ComplexMatrix::Identity(b.dim(), b.dim());
  const Complex i_unit(0.0, 1.0);

  auto cartesian = [&](const IrrepMatrices& r) {
    return std::array<ComplexMatrix, 3>{
        ComplexMatrix(0.5 * (r.iplus() + r.iminus())),
        ComplexMatrix((r.iplus() - r.iminus()) / (2.0 * i_unit)),
        r.iz(),
    };
  };
  const auto ia = cartesian(a);
  const auto jb = cartesian(b);

  std::array<ComplexMatrix, 3> l;
  std::array<ComplexMatrix, 3> m;
  for (int c = 0; c < 3; ++c) {
    const ComplexMatrix left = kron(ia[c], id_b);
    const ComplexMatrix right = kron(id_a, jb[c]);
    l[c] = left + right;
    m[c] = left - right;
  }

  static constexpr std::array<const char*, 3> axis{"x", "y", "z"};
  std::vector<VerificationReport> out;
  out.reserve(9);
  for (int c = 0; c < 3; ++c) {
    const int a1 = c;
    const int b1 = (c + 1) % 3;
    const int c1 = (c + 2) % 3;
    const std::string ab = std::string(axis[a1]) + "," ;
    out.push_back(check_commutator("[L_" + ab + "L_" + axis[b1] + "] = iL_" + axis[c1], l[a1],
                                   l[b1], i_unit * l[c1], tol));
    out.push_back(check_commutator("[L_" + ab + "M_" + axis[b1] + "] = iM_" + axis[c1], l[a1],
                                   m[b1], i_unit * m[c1], tol));
    out.push_back(check_commutator("[M_" + ab + "M_" + axis[b1] + "] = iL_" + axis[c1], m[a1],
                                   m[b1], i_unit * l[c1], tol));
  }
  return out;
}

double casimir_eigenvalue(SpinLabel j, const DeformationParameter& d) {
  return qnumber_half(j.twice_j(), d) * qnumber_half(j.twice_j() + 2, d);
}

double symmetrized_casimir_value(SpinLabel j, int twice_m, const DeformationParameter& d) {
  const double m = 0.5 * twice_m;
  return casimir_eigenvalue(j, d) -
         0.5 * qnumber_half(twice_m, d) *
             (qnumber_half(twice_m + 2, d) + qnumber_half(twice_m - 2, d)) +
         m * m;
}

}  // namespace qdeform
