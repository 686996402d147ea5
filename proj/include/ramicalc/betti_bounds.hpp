#pragma once

#include <string>
#include <vector>

#include "ramicalc/poly.hpp"
#include "ramicalc/rat.hpp"

namespace ramicalc {

// Ordered family of bounding polynomials, index = cohomological degree.
// Every coefficient is required to be >= 0 (the families bound
// dimensions, and nonnegative coefficients make them monotone on x >= 0).
class BoundFamily {
public:
    BoundFamily() = default;
    explicit BoundFamily(std::vector<Poly> polys);

    std::size_t size() const { return polys_.size(); }
    const Poly& operator[](std::size_t i) const { return polys_[i]; }
    const std::vector<Poly>& polys() const { return polys_; }
    // Zero beyond the stored range.
    Poly at_or_zero(std::size_t i) const;

private:
    std::vector<Poly> polys_;
};

// The recursive bounding family: b_0 = 1, b_1 = x and for n >= 2
//   b_n(x) = sum_{i<n, i != n mod 2} (x+2) b_i(x+3)
//          + sum_{i<n, i == n mod 2} (x+3) b_i(x)
//          + sum_{i<n, i != n mod 2} b_i(x).
BoundFamily b_family(int n_max);

// The comparison family: c_0 = 1, c_1 = x and for n >= 2
//   c_n(x) = (sum_{i<n} c_i(x+3)) * (x+3).
BoundFamily c_family(int n_max);

// (x + 3n - 3) * prod_{j=1}^{n-1} (x + 3j + 1), the closed-form envelope
// of b_n for n >= 3 (n = 2 has the exact value b_2 = x^2 + 7x + 9).
Poly closed_form_bound(int n);

struct ChainStep {
    int n;
    std::string step;  // "b<=c" | "c-chain" | "closed-form"
    bool certified;
    std::vector<std::string> checks;  // human-readable sub-checks
};

struct ChainReport {
    bool all_certified = true;
    std::vector<ChainStep> steps;
};

// Certifies, for 3 <= n <= n_max and by coefficient dominance only:
//   (i)   b_n <= c_n, through the common majorant (sum b_i(x+3))(x+3);
//   (ii)  c_n <= c_{n-1}(x+3)(x+4), through the expansion of c_n and the
//         step (x+7)(x+3) <= (x+6)(x+4);
//   (iii) c_n (hence b_n) <= closed_form_bound(n), iterating (ii).
ChainReport verify_closed_form_chain(int n_max);

// b_i(lc_H) * rank for 0 <= i <= n; 0 beyond the cohomological dimension.
Rat affine_betti_bound(int n, int i, const Rat& lc_H, long rank);

// Bound for compactly supported cohomology in degree 2n - i; equals
// b_i(lc_H) * rank for 0 <= i <= n and 0 otherwise.
Rat affine_betti_bound_compact(int n, int i, const Rat& lc_H, long rank);

struct ChiBounds {
    Rat lower;
    Rat upper;
};

// Two-sided bound on the Euler characteristic of a rank-r local system
// on affine n-space with top log conductor lc_H at infinity (n >= 2):
//   upper =  (sum_{i<n odd}  (lc+2) b_i(lc+3) + sum_{i<n even} (lc+3) b_i(lc)) * rank
//   lower = -(sum_{i<n even} (lc+2) b_i(lc+3) + sum_{i<n odd}  (lc+3) b_i(lc)) * rank.
ChiBounds chi_sandwich(int n, const Rat& lc_H, long rank);

// Bound on the Euler characteristic after twisting by a pole-order-m
// character pulled back from a line (m exceeding lc_H + 1, supplied by
// the caller):
//   lower = -(sum_{i<n even} b_i(m)) (m-1) * rank
//   upper =  (sum_{i<n odd}  b_i(m)) (m-1) * rank.
ChiBounds chi_twisted_sandwich(int n, const Rat& m, long rank);

struct AssembledBounds {
    // P_j for j = 0..2n: delta * b_{2N-j}(alpha + delta x) on [N, 2N], 0 elsewhere.
    std::vector<Poly> raw;
    // P'_i = x^i + P_i + P_{2n-i} for i = 0..n; deg P'_i = i.
    BoundFamily folded;
    // P'_{min(j, 2n-j)}(mu_value) for j = 0..2n.
    std::vector<Rat> bounds_at_mu;
};

// Bound assembly for a degree-delta finite cover of projective N-space
// inside an ambient relative dimension n, with generic-conductor ceiling
// alpha and admissible-measure value mu_value.
AssembledBounds assemble_bound_sequence(int n, int N, long delta, long alpha,
                                        const Rat& mu_value);

// Folds per-stratum bound families (families[i] bounds the dimension-i
// stratum closure) into one family for perverse objects. Output entry of
// degree n - i is e_i + f_i with
//   e_i = sum_{m=0}^{n-i} P^{i+m}_m,  f_i = sum_{m=2i}^{n+i} P^{m-i}_{m-2i},
// out-of-range summands counting as 0.
BoundFamily perverse_fold(const std::vector<BoundFamily>& families);

// Betti bounds on an affine curve: genus g, num_points punctures, top
// log conductor lc at the punctures.
//   i = 0: rank;  i = 1: (2g - 1 + |D| + |D| lc) * rank;  i >= 2: 0.
Rat curve_case_bound(long genus, long num_points, const Rat& lc, long rank, int i);

} // namespace ramicalc
