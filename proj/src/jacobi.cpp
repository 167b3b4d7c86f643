#include "skewspec/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace skew {

namespace {

double off_diagonal_sq(const double* a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += a[i * n + j] * a[i * n + j];
    return 2.0 * s;
}

double frobenius_sq(const double* a, int n) {
    double s = 0.0;
    for (int i = 0; i < n * n; ++i) s += a[i] * a[i];
    return s;
}

}  // namespace

void jacobi_eigenvalues_inplace(double* a, int n, double* evals, double tol, int max_sweeps) {
    if (n <= 0) return;
    if (n == 1) {
        evals[0] = a[0];
        return;
    }
    const double fro_sq = frobenius_sq(a, n);
    const double stop_sq = tol * tol * fro_sq;

    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (off_diagonal_sq(a, n) <= stop_sq) break;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) continue;
                const double app = a[p * n + p];
                const double aqq = a[q * n + q];
                const double theta = (aqq - app) / (2.0 * apq);
                const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                a[p * n + p] = app - t * apq;
                a[q * n + q] = aqq + t * apq;
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = a[k * n + p];
                    const double akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                    a[p * n + k] = a[k * n + p];
                    a[q * n + k] = a[k * n + q];
                }
            }
        }
    }
    if (sweep == max_sweeps && off_diagonal_sq(a, n) > stop_sq) {
        throw std::runtime_error("jacobi: no convergence after " + std::to_string(max_sweeps) + " sweeps");
    }
    for (int i = 0; i < n; ++i) evals[i] = a[i * n + i];
    std::sort(evals, evals + n, std::greater<>());
}

std::vector<double> symmetric_eigenvalues(std::vector<double> a, int n, double tol) {
    if (n < 0 || static_cast<std::size_t>(n) * n != a.size()) {
        throw std::invalid_argument("symmetric_eigenvalues: matrix size mismatch");
    }
    double max_abs = 0.0;
    for (double x : a) max_abs = std::max(max_abs, std::abs(x));
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (std::abs(a[i * n + j] - a[j * n + i]) > 1e-12 * std::max(1.0, max_abs)) {
                throw std::invalid_argument("symmetric_eigenvalues: input is not symmetric");
            }
        }
    }
    std::vector<double> evals(n);
    jacobi_eigenvalues_inplace(a.data(), n, evals.data(), tol);
    return evals;
}

}  // namespace skew
