#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ramicalc/rat.hpp"

namespace ramicalc {

struct BadPoint {
    std::string label;
    Rat dimtot;       // total dimension of the nearby module at the point
    long stalk_rank;  // rank of the stalk at the point
};

// Numerical data of a constructible sheaf on a smooth proper curve:
// genus, generic rank, and the drop data at the finitely many points
// where it is not lisse.
struct CurveSheafData {
    long genus = 0;
    long generic_rank = 0;
    std::vector<BadPoint> bad_points;
};

// Throws unless genus >= 0, generic_rank >= 0 and every bad point has
// dimtot >= stalk_rank >= 0.
void validate(const CurveSheafData& d);

// chi = (2 - 2g) * rank - sum over bad points of (dimtot - stalk rank).
Rat gos_chi(const CurveSheafData& d);

struct CcCoefficients {
    Rat zero_section;  // -generic_rank
    std::vector<std::pair<std::string, Rat>> fibers;  // -(dimtot - stalk rank) per point
};

// Characteristic-cycle coefficients on a curve.
CcCoefficients cc_coefficients(const CurveSheafData& d);

// Betti bound for a local system on the affine curve obtained by
// removing num_points points; delegates to curve_case_bound.
Rat affine_curve_betti(const CurveSheafData& d, const Rat& lc_max, long num_points, int i);

} // namespace ramicalc
