#include "ramicalc/curves.hpp"

#include <stdexcept>

#include "ramicalc/betti_bounds.hpp"

namespace ramicalc {

void validate(const CurveSheafData& d) {
    if (d.genus < 0)
        throw std::domain_error("CurveSheafData: genus must be >= 0");
    if (d.generic_rank < 0)
        throw std::domain_error("CurveSheafData: generic rank must be >= 0");
    for (const BadPoint& pt : d.bad_points) {
        if (pt.label.empty())
            throw std::domain_error("CurveSheafData: empty bad-point label");
        if (pt.stalk_rank < 0)
            throw std::domain_error("CurveSheafData: stalk rank must be >= 0 at " + pt.label);
        if (pt.dimtot < Rat(pt.stalk_rank))
            throw std::domain_error("CurveSheafData: dimtot < stalk rank at " + pt.label);
    }
}

Rat gos_chi(const CurveSheafData& d) {
    validate(d);
    Rat chi = Rat(2 - 2 * d.genus) * Rat(d.generic_rank);
    for (const BadPoint& pt : d.bad_points)
        chi -= pt.dimtot - Rat(pt.stalk_rank);
    return chi;
}

CcCoefficients cc_coefficients(const CurveSheafData& d) {
    validate(d);
    CcCoefficients out;
    out.zero_section = -Rat(d.generic_rank);
    out.fibers.reserve(d.bad_points.size());
    for (const BadPoint& pt : d.bad_points)
        out.fibers.emplace_back(pt.label, -(pt.dimtot - Rat(pt.stalk_rank)));
    return out;
}

Rat affine_curve_betti(const CurveSheafData& d, const Rat& lc_max, long num_points, int i) {
    validate(d);
    return curve_case_bound(d.genus, num_points, lc_max, d.generic_rank, i);
}

} // namespace ramicalc
