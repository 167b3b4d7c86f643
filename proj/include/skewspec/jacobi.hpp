#pragma once
#include <vector>

namespace skew {

// Cyclic Jacobi eigensolver for real symmetric matrices.
//
// Sweeps rotate away every off-diagonal pair in fixed (p, q) order until the
// off-diagonal Frobenius norm drops below tol * ||M||_F, with a hard limit of
// max_sweeps sweeps (an error beyond that signals pathological input).

inline constexpr double kJacobiTol = 1e-12;
inline constexpr int kJacobiMaxSweeps = 100;

// Low-level kernel: `a` is the n*n row-major matrix, destroyed in place and
// assumed symmetric; `evals` receives the n eigenvalues in descending order.
// No allocation. Throws std::runtime_error when the sweep limit is hit.
void jacobi_eigenvalues_inplace(double* a, int n, double* evals,
                                double tol = kJacobiTol, int max_sweeps = kJacobiMaxSweeps);

// Checked front end: verifies symmetry (within 1e-12 relative) and returns
// eigenvalues in descending order. Eigenvalue error is bounded by a modest
// multiple of tol * ||M||_F; the eigenvalue sum matches the trace to the same
// accuracy.
std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n, double tol = kJacobiTol);

}  // namespace skew
