#pragma once

#include <vector>

#include <gmpxx.h>

namespace ramicalc::oracles {

// Closed-form Betti number of the split Artin-Schreier product sheaf on
// affine n-space: (m - 1)^i, by repeated multiplication. Deliberately
// shares no code with the bound machinery it cross-checks.
mpz_class kunneth_betti(int n, int i, long m);

// Alternating sum chi = sum_{i=0}^{n} (-1)^i (m-1)^i, computed both term
// by term and by the geometric closed form ((1-m)^{n+1} - 1) / (-m); the
// two routes must agree.
mpz_class kunneth_chi(int n, long m);

// The recursive bounding polynomial, re-derived naively (no memoization,
// Horner-style substitution instead of binomial shifts). Coefficients
// lowest degree first. n <= 10.
std::vector<mpq_class> recursion_reference(int n);

} // namespace ramicalc::oracles
