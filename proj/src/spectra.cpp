#include "skewspec/spectra.hpp"

#include <cmath>
#include <stdexcept>

#include "skewspec/jacobi.hpp"

namespace skew {

namespace {

constexpr double kNegativeClamp = -1e-10;

// Builds S^T S into `g` (n*n row-major, zeroed here). Entry (i,j) collects
// s_ki * s_kj over common neighbors k; the diagonal is the degree.
void build_gram(const OrientedGraph& o, double* g) {
    const int n = o.vertex_count();
    const int m = o.arc_count();
    for (int i = 0; i < n * n; ++i) g[i] = 0.0;
    for (int e = 0; e < m; ++e) {
        const auto [t, h] = o.arc(e);
        g[t * n + t] += 1.0;
        g[h * n + h] += 1.0;
    }
    for (int e1 = 0; e1 < m; ++e1) {
        const auto [t1, h1] = o.arc(e1);
        for (int e2 = e1 + 1; e2 < m; ++e2) {
            const auto [t2, h2] = o.arc(e2);
            int k, i, j;
            if (t1 == t2) { k = t1; i = h1; j = h2; }
            else if (t1 == h2) { k = t1; i = h1; j = t2; }
            else if (h1 == t2) { k = h1; i = t1; j = h2; }
            else if (h1 == h2) { k = h1; i = t1; j = t2; }
            else continue;
            // s_ki = +1 when the arc leaves k.
            const double s1 = (k == t1 ? 1.0 : -1.0) * (k == t2 ? 1.0 : -1.0);
            g[i * n + j] += s1;
            g[j * n + i] += s1;
        }
    }
}

}  // namespace

double SkewSpectrum::energy() const {
    double s = 0.0;
    for (double x : sigma) s += x;
    return s;
}

double SkewSpectrum::sum_squares() const {
    double s = 0.0;
    for (double x : sigma) s += x * x;
    return s;
}

void skew_spectrum_into(const OrientedGraph& o, double* scratch, double* sigma) {
    const int n = o.vertex_count();
    build_gram(o, scratch);
    jacobi_eigenvalues_inplace(scratch, n, sigma);
    for (int i = 0; i < n; ++i) {
        if (sigma[i] < kNegativeClamp) {
            throw std::runtime_error("skew_spectrum: eigenvalue of S^T S below roundoff floor");
        }
        sigma[i] = sigma[i] <= 0.0 ? 0.0 : std::sqrt(sigma[i]);
    }
}

SkewSpectrum skew_spectrum(const OrientedGraph& o) {
    const int n = o.vertex_count();
    SkewSpectrum out;
    out.arc_count = o.arc_count();
    out.sigma.resize(n);
    if (n == 0) return out;
    std::vector<double> scratch(static_cast<std::size_t>(n) * n);
    skew_spectrum_into(o, scratch.data(), out.sigma.data());
    return out;
}

double skew_spectral_radius(const OrientedGraph& o) {
    if (o.vertex_count() < 1) throw std::invalid_argument("skew_spectral_radius: empty graph");
    return skew_spectrum(o).radius();
}

double skew_energy(const OrientedGraph& o) {
    return skew_spectrum(o).energy();
}

double adjacency_spectral_radius(const UndirectedGraph& g) {
    const int n = g.vertex_count();
    if (n < 1) throw std::invalid_argument("adjacency_spectral_radius: empty graph");
    std::vector<double> a(static_cast<std::size_t>(n) * n, 0.0);
    for (const auto& [u, v] : g.edges()) {
        a[static_cast<std::size_t>(u) * n + v] = 1.0;
        a[static_cast<std::size_t>(v) * n + u] = 1.0;
    }
    return symmetric_eigenvalues(std::move(a), n).front();
}

bool spectrum_pairing_ok(const SkewSpectrum& s) {
    const int n = static_cast<int>(s.sigma.size());
    if (n == 0) return true;
    const double gap = 1e-7 * (1.0 + s.sigma.front());
    int zeros = 0;
    int cluster_size = 0;
    double cluster_head = -1.0;
    for (int i = 0; i < n; ++i) {
        const double x = s.sigma[i];
        if (x < gap) {
            ++zeros;
            continue;
        }
        if (cluster_size > 0 && cluster_head - x <= gap) {
            ++cluster_size;
        } else {
            if (cluster_size % 2 != 0) return false;
            cluster_size = 1;
        }
        cluster_head = x;
    }
    if (cluster_size % 2 != 0) return false;
    return zeros % 2 == n % 2;
}

}  // namespace skew
