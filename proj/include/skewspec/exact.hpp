#pragma once
#include <gmpxx.h>

#include <optional>

#include "skewspec/graph.hpp"

// Exact linear algebra over the integers: determinant of the skew adjacency
// matrix via fraction-free (Bareiss) elimination, and the Pfaffian by
// recursive expansion along the first row. All arithmetic is exact; a fast
// int64 path covers the desk-scale orders where intermediate minors are known
// to fit (entries are in {-1,0,1}, so Hadamard bounds them by n^(n/2)).

namespace skew {

struct ExactDeterminant {
    mpz_class value;                    // det(S); nonnegative for skew-symmetric input
    std::optional<mpz_class> pfaffian;  // even n <= kPfaffianLimit only; pfaffian^2 == value
};

inline constexpr int kPfaffianLimit = 16;

// Determinant plus Pfaffian (when available) of a skew adjacency matrix.
// Odd-order skew-symmetric matrices are always singular: value 0, pfaffian 0.
ExactDeterminant exact_determinant(const SkewMatrix& s);

// Exact determinant restricted to n <= 24 (entries in {-1,0,1}); the whole
// Bareiss elimination then fits in int64. Meant for enumeration loops.
long long skew_determinant_small(const SkewMatrix& s);

// Pfaffian of an even-order skew-symmetric matrix, n <= kPfaffianLimit.
mpz_class pfaffian(const SkewMatrix& s);

// General fraction-free determinant of an integer matrix (row-major, n*n).
mpz_class integer_determinant(std::vector<mpz_class> a, int n);

}  // namespace skew
