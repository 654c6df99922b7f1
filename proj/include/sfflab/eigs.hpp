#pragma once

#include <Eigen/Dense>
#include <vector>

#include "sfflab/types.hpp"

namespace sfflab {

using CMatrix = Eigen::MatrixXcd;

// Which branch the eigenphase omega*tau_p is reduced to. ZeroTwoPi keeps
// pseudo-energies nonnegative so Boltzmann weights stay bounded by 1.
enum class PhaseBranch { ZeroTwoPi, SymmetricPi };

// Eigenvalues of a Hermitian matrix, ascending. Rejects input whose
// Hermiticity residual max|H - H^dag| exceeds 1e-12 * max|H|. With
// check_residual, verifies ||Hv - lambda v|| <= 1e-10 * ||H|| per pair.
std::vector<double> hermitian_eigenvalues(const CMatrix& h, bool check_residual = false);

// Eigenphases omega_j of a unitary matrix, with eigenvalue exp(-i omega_j tau_p)
// and omega_j tau_p reduced to the requested branch. Sorted ascending.
// Route: diagonalize (U + U^dag)/2, then split any degenerate cosine
// eigenspaces with (U - U^dag)/(2i); the per-pair residual check is mandatory.
std::vector<double> unitary_eigenphases(const CMatrix& u, double tau_p,
                                        PhaseBranch branch = PhaseBranch::ZeroTwoPi);

}  // namespace sfflab
