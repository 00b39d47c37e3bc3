#pragma once

// Thermal (KMS) structure of a faithful state on B(H_d).
//
// Time conventions: this header uses PHYSICAL time, evolving with the
// Hamiltonian H = -(1/beta) ln D as A -> e^{iHt} A e^{-iHt}. modular.hpp uses
// MODULAR time, A -> D^{is} A D^{-is}. They are related by
//   modular_flow(D, A, s) == heisenberg_evolve(sys, A, -beta * s).

#include <vector>

#include "modkit/modular.hpp"

namespace modkit {

inline constexpr double kDefaultGapTol = 1e-9;

/// D = exp(-beta H) exactly, with no partition-function division. Since
/// Tr D = 1 the additive constant of H is fixed by D itself.
struct GibbsSystem {
  double beta;
  DensityMatrix state;
  ComplexMatrix hamiltonian;
};

/// H = -(1/beta) ln D. Throws SingularState / BadBeta.
GibbsSystem gibbs_hamiltonian(const DensityMatrix& state, double beta);

/// e^{iHt} A e^{-iHt}. Throws ShapeMismatch.
ComplexMatrix heisenberg_evolve(const GibbsSystem& sys, const ComplexMatrix& a, double t);

/// The generator H (x) 1 - 1 (x) H^T acting as X -> HX - XH on vec(X).
struct ModularHamiltonian {
  SuperOperator superop;
};

ModularHamiltonian modular_hamiltonian(const GibbsSystem& sys);

/// Physical time that reproduces modular time s.
inline double physical_time_from_modular(double s, double beta) { return -beta * s; }

/// F_{A,B}(z) = omega(A sigma_z(B)) evaluated in the energy eigenbasis as
/// sum_jk D_jj A_jk B_kj exp(iz(E_k - E_j)). Throws OutsideStrip unless 0 <= Im z <= beta.
Complex kms_function(const GibbsSystem& sys, const ComplexMatrix& a, const ComplexMatrix& b, Complex z);

/// Hilbert-Schmidt orthonormal basis of {B : [B, D] = 0}: matrix units inside
/// each eigenvalue cluster of D. Eigenvalues are clustered when consecutive
/// gaps are <= gap_tol * lambda_max.
std::vector<ComplexMatrix> centralizer_basis(const PositiveFunctional& state, double gap_tol = kDefaultGapTol);

/// Multiplicities of the eigenvalue clusters used by centralizer_basis.
std::vector<Eigen::Index> eigenvalue_clusters(const PositiveFunctional& state, double gap_tol = kDefaultGapTol);

}  // namespace modkit
