#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ramicalc/rat.hpp"

namespace ramicalc {

// Multiset of (slope, rank) pieces with pairwise-distinct slopes. Equal
// slopes merge by adding ranks.
class SlopeDecomposition {
public:
    SlopeDecomposition() = default;
    SlopeDecomposition(std::initializer_list<std::pair<Rat, long>> pieces);

    // Merges into an existing piece at the same slope. rank >= 1, slope >= 0.
    void add_piece(const Rat& slope, long rank);

    bool empty() const { return pieces_.empty(); }
    const std::map<Rat, long>& pieces() const { return pieces_; }
    long total_rank() const;
    // Sum of slope * rank over all pieces.
    Rat weighted_rank() const;
    // Throws on the empty decomposition.
    Rat max_slope() const;
    Rat min_slope() const;
    // The slope when there is exactly one piece.
    std::optional<Rat> isoclinic_slope() const;
    bool has_slope(const Rat& s) const { return pieces_.count(s) != 0; }

    // All slopes moved by t (t >= -min_slope so slopes stay >= 0).
    SlopeDecomposition shifted_by(const Rat& t) const;
    // Multiset union, ranks adding at equal slopes.
    SlopeDecomposition merged_with(const SlopeDecomposition& other) const;

    friend bool operator==(const SlopeDecomposition& a, const SlopeDecomposition& b) {
        return a.pieces_ == b.pieces_;
    }
    friend bool operator!=(const SlopeDecomposition& a, const SlopeDecomposition& b) {
        return !(a == b);
    }

private:
    std::map<Rat, long> pieces_;
};

// Numerical shadow of a finitely generated module over a local field:
// the logarithmic slope decomposition, optionally the non-logarithmic
// one, and whether the residue field is perfect. Construction enforces
// the rank accounting and the conductor sandwiches
//   lc <= c <= lc + 1   and   sw <= dimtot <= sw + rank,
// and, with a perfect residue field, the exact collapse
// nonlog = log shifted by +1.
class GaloisModuleData {
public:
    GaloisModuleData(long rank, bool perfect_residue, SlopeDecomposition log,
                     std::optional<SlopeDecomposition> nonlog = std::nullopt);

    long rank() const { return rank_; }
    bool perfect_residue() const { return perfect_residue_; }
    const SlopeDecomposition& log() const { return log_; }
    const std::optional<SlopeDecomposition>& nonlog() const { return nonlog_; }

    // Stored nonlog data, or log + 1 when the residue field is perfect.
    std::optional<SlopeDecomposition> effective_nonlog() const;

    friend bool operator==(const GaloisModuleData& a, const GaloisModuleData& b) {
        return a.rank_ == b.rank_ && a.perfect_residue_ == b.perfect_residue_ &&
               a.log_ == b.log_ && a.nonlog_ == b.nonlog_;
    }

private:
    long rank_;
    bool perfect_residue_;
    SlopeDecomposition log_;
    std::optional<SlopeDecomposition> nonlog_;
};

// Swan conductor: sum of slope * rank over the log pieces.
Rat swan(const GaloisModuleData& m);

// Total dimension: sum of slope * rank over the nonlog pieces, or
// sw + rank when the residue field is perfect. Throws "nonlog data
// unavailable" when neither source applies.
Rat dimtot(const GaloisModuleData& m);

struct ConductorInfo {
    Rat lc;                // largest log slope
    std::optional<Rat> c;  // largest nonlog slope, when determined
    Rat c_lower;           // c known: both bounds equal c; else [lc, lc+1]
    Rat c_upper;
};

ConductorInfo conductors(const GaloisModuleData& m);

// Requires matching perfect_residue flags; ranks add, slope multisets
// merge, and nonlog is kept only when present on both sides.
GaloisModuleData direct_sum(const GaloisModuleData& a, const GaloisModuleData& b);

// A module and its dual have identical slope data; kept as a named op.
GaloisModuleData dual(const GaloisModuleData& m);

enum class SlopeMode { log, nonlog };

// Both inputs isoclinic in the chosen mode with distinct slopes; the
// result is isoclinic at the larger slope with rank rk(a) * rk(b).
// Equal slopes are indeterminate (character cancellation can lower the
// slope): use swan_tensor_bounds.
GaloisModuleData tensor_isoclinic(const GaloisModuleData& a, const GaloisModuleData& b,
                                  SlopeMode mode);

struct SwanTensorBounds {
    Rat lower;  // sw(M)
    Rat upper;  // sw(M) + r * rank(M)
    // Determined when r avoids every log slope of M:
    // sw(M tensor N) = sum_{s<r} (r - s) * rank M_log^(s) + sw(M).
    std::optional<Rat> exact;
};

// N must have rank 1; r is its log slope. The bounds assume the twisting
// character does not cancel against the slope-r part of M (a hypothesis
// the caller supplies; it cannot be checked from slope data).
SwanTensorBounds swan_tensor_bounds(const GaloisModuleData& m, const GaloisModuleData& n);

// Rank-1 module of an Artin-Schreier cover t^p - t = u/x with pole order
// m prime to p: log slope m, slope m + 1. Rejects p | m.
GaloisModuleData artin_schreier_conductor(long m, long p);

// Conductor at a curve point crossing the two-divisor configuration with
// pullback multiplicities alpha along D and beta along E:
//   m * p^2 * alpha + (m + 1) * beta.
// Rejects p | m and alpha = beta = 0.
Rat two_lines_curve_conductor(long m, long p, long alpha, long beta);

// Log-conductor bound for a finite direct image of generic degree d:
// lc_trivial + d * lc_E.
Rat finite_direct_image_lc_bound(const Rat& lc_trivial, long d, const Rat& lc_E);

} // namespace ramicalc
