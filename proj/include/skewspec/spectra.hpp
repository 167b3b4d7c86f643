#pragma once
#include <vector>

#include "skewspec/graph.hpp"

// Skew spectra of oriented graphs. The eigenvalues of a skew adjacency matrix
// S are purely imaginary (or zero), +-i*sigma_j; this module works with the
// nonnegative norms sigma, obtained as square roots of the eigenvalues of the
// symmetric positive semidefinite matrix S^T S. That keeps every computation
// in real arithmetic with a single eigensolver.

namespace skew {

struct SkewSpectrum {
    std::vector<double> sigma;  // descending; eigenvalues of S are +-i*sigma_j
    int arc_count = 0;

    double radius() const { return sigma.empty() ? 0.0 : sigma.front(); }
    double energy() const;       // sum of sigma
    double sum_squares() const;  // equals 2m up to roundoff
};

SkewSpectrum skew_spectrum(const OrientedGraph& o);
double skew_spectral_radius(const OrientedGraph& o);
double skew_energy(const OrientedGraph& o);

// Largest adjacency eigenvalue of the underlying graph; dominates the skew
// spectral radius of every orientation.
double adjacency_spectral_radius(const UndirectedGraph& g);

// Structural check on a computed spectrum: positive values cluster into even
// multiplicities (the +-i pairing) and the near-zero count has the parity of
// n. Clusters use the absolute gap 1e-7 * (1 + sigma_1).
bool spectrum_pairing_ok(const SkewSpectrum& s);

// Allocation-free kernel for enumeration loops: fills sigma[0..n) descending.
// scratch must hold n*n doubles. Throws on eigensolver failure.
void skew_spectrum_into(const OrientedGraph& o, double* scratch, double* sigma);

}  // namespace skew
