#include "ramicalc/conductor.hpp"

#include <stdexcept>

namespace ramicalc {

namespace {

bool is_prime(long p) {
    if (p < 2)
        return false;
    for (long d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

} // namespace

SlopeDecomposition::SlopeDecomposition(std::initializer_list<std::pair<Rat, long>> pieces) {
    for (const auto& [slope, rank] : pieces)
        add_piece(slope, rank);
}

void SlopeDecomposition::add_piece(const Rat& slope, long rank) {
    if (rank < 1)
        throw std::domain_error("SlopeDecomposition: piece rank must be >= 1");
    if (slope.sign() < 0)
        throw std::domain_error("SlopeDecomposition: negative slope " + slope.str());
    pieces_[slope] += rank;
}

long SlopeDecomposition::total_rank() const {
    long total = 0;
    for (const auto& [slope, rank] : pieces_)
        total += rank;
    return total;
}

Rat SlopeDecomposition::weighted_rank() const {
    Rat sum(0);
    for (const auto& [slope, rank] : pieces_)
        sum += slope * Rat(rank);
    return sum;
}

Rat SlopeDecomposition::max_slope() const {
    if (pieces_.empty())
        throw std::domain_error("SlopeDecomposition: empty decomposition has no slopes");
    return pieces_.rbegin()->first;
}

Rat SlopeDecomposition::min_slope() const {
    if (pieces_.empty())
        throw std::domain_error("SlopeDecomposition: empty decomposition has no slopes");
    return pieces_.begin()->first;
}

std::optional<Rat> SlopeDecomposition::isoclinic_slope() const {
    if (pieces_.size() != 1)
        return std::nullopt;
    return pieces_.begin()->first;
}

SlopeDecomposition SlopeDecomposition::shifted_by(const Rat& t) const {
    SlopeDecomposition out;
    for (const auto& [slope, rank] : pieces_)
        out.add_piece(slope + t, rank);
    return out;
}

SlopeDecomposition SlopeDecomposition::merged_with(const SlopeDecomposition& other) const {
    SlopeDecomposition out = *this;
    for (const auto& [slope, rank] : other.pieces_)
        out.add_piece(slope, rank);
    return out;
}

GaloisModuleData::GaloisModuleData(long rank, bool perfect_residue, SlopeDecomposition log,
                                   std::optional<SlopeDecomposition> nonlog)
    : rank_(rank), perfect_residue_(perfect_residue), log_(std::move(log)),
      nonlog_(std::move(nonlog)) {
    if (rank_ < 1)
        throw std::domain_error("GaloisModuleData: rank must be >= 1");
    if (log_.total_rank() != rank_)
        throw std::domain_error("GaloisModuleData: log decomposition rank mismatch");
    if (nonlog_) {
        if (nonlog_->total_rank() != rank_)
            throw std::domain_error("GaloisModuleData: nonlog decomposition rank mismatch");
        if (nonlog_->min_slope() < Rat(1))
            throw std::domain_error("GaloisModuleData: nonlog slopes must be >= 1");
        const Rat lc = log_.max_slope();
        const Rat c = nonlog_->max_slope();
        if (c < lc || c > lc + Rat(1))
            throw std::domain_error("GaloisModuleData: conductor sandwich lc <= c <= lc+1 violated");
        const Rat sw = log_.weighted_rank();
        const Rat dt = nonlog_->weighted_rank();
        if (dt < sw || dt > sw + Rat(rank_))
            throw std::domain_error("GaloisModuleData: sw <= dimtot <= sw+rank violated");
        if (perfect_residue_ && *nonlog_ != log_.shifted_by(Rat(1)))
            throw std::domain_error(
                "GaloisModuleData: perfect residue field forces nonlog = log shifted by 1");
    }
}

std::optional<SlopeDecomposition> GaloisModuleData::effective_nonlog() const {
    if (nonlog_)
        return nonlog_;
    if (perfect_residue_)
        return log_.shifted_by(Rat(1));
    return std::nullopt;
}

Rat swan(const GaloisModuleData& m) {
    return m.log().weighted_rank();
}

Rat dimtot(const GaloisModuleData& m) {
    if (m.nonlog())
        return m.nonlog()->weighted_rank();
    if (m.perfect_residue())
        return swan(m) + Rat(m.rank());
    throw std::domain_error("dimtot: nonlog data unavailable");
}

ConductorInfo conductors(const GaloisModuleData& m) {
    ConductorInfo info{m.log().max_slope(), std::nullopt, Rat(0), Rat(0)};
    if (m.nonlog())
        info.c = m.nonlog()->max_slope();
    else if (m.perfect_residue())
        info.c = info.lc + Rat(1);
    if (info.c) {
        info.c_lower = *info.c;
        info.c_upper = *info.c;
    } else {
        info.c_lower = info.lc;
        info.c_upper = info.lc + Rat(1);
    }
    return info;
}

GaloisModuleData direct_sum(const GaloisModuleData& a, const GaloisModuleData& b) {
    if (a.perfect_residue() != b.perfect_residue())
        throw std::domain_error("direct_sum: perfect_residue flag mismatch");
    std::optional<SlopeDecomposition> nonlog;
    if (a.nonlog() && b.nonlog())
        nonlog = a.nonlog()->merged_with(*b.nonlog());
    return GaloisModuleData(a.rank() + b.rank(), a.perfect_residue(),
                            a.log().merged_with(b.log()), std::move(nonlog));
}

GaloisModuleData dual(const GaloisModuleData& m) {
    return m;
}

GaloisModuleData tensor_isoclinic(const GaloisModuleData& a, const GaloisModuleData& b,
                                  SlopeMode mode) {
    if (a.perfect_residue() != b.perfect_residue())
        throw std::domain_error("tensor_isoclinic: perfect_residue flag mismatch");
    const bool perfect = a.perfect_residue();
    const long rank = a.rank() * b.rank();

    auto pick = [&](const GaloisModuleData& m) -> SlopeDecomposition {
        if (mode == SlopeMode::log)
            return m.log();
        auto nl = m.effective_nonlog();
        if (!nl)
            throw std::domain_error("tensor_isoclinic: nonlog data unavailable");
        return *nl;
    };
    const auto sa = pick(a).isoclinic_slope();
    const auto sb = pick(b).isoclinic_slope();
    if (!sa || !sb)
        throw std::domain_error("tensor_isoclinic: not isoclinic in the requested mode");
    if (*sa == *sb)
        throw std::domain_error(
            "tensor_isoclinic: equal slopes -- result indeterminate, use swan_tensor_bounds");
    const Rat slope = *sa > *sb ? *sa : *sb;

    if (mode == SlopeMode::log)
        return GaloisModuleData(rank, perfect, SlopeDecomposition{{slope, rank}});
    if (!perfect)
        throw std::domain_error(
            "tensor_isoclinic: nonlog mode leaves the log decomposition undetermined over an "
            "imperfect residue field; use log mode or perfect-residue data");
    return GaloisModuleData(rank, perfect, SlopeDecomposition{{slope - Rat(1), rank}},
                            SlopeDecomposition{{slope, rank}});
}

SwanTensorBounds swan_tensor_bounds(const GaloisModuleData& m, const GaloisModuleData& n) {
    if (n.rank() != 1)
        throw std::domain_error("swan_tensor_bounds: twisting module must have rank 1");
    if (m.perfect_residue() != n.perfect_residue())
        throw std::domain_error("swan_tensor_bounds: perfect_residue flag mismatch");
    const Rat r = n.log().max_slope();
    const Rat sw_m = swan(m);

    SwanTensorBounds out{sw_m, sw_m + r * Rat(m.rank()), std::nullopt};
    if (!m.log().has_slope(r)) {
        Rat exact = sw_m;
        for (const auto& [s, rk] : m.log().pieces())
            if (s < r)
                exact += (r - s) * Rat(rk);
        out.exact = exact;
    }
    return out;
}

GaloisModuleData artin_schreier_conductor(long m, long p) {
    if (m < 1)
        throw std::domain_error("artin_schreier_conductor: pole order m must be >= 1");
    if (!is_prime(p))
        throw std::domain_error("artin_schreier_conductor: p must be prime");
    if (m % p == 0)
        throw std::domain_error(
            "artin_schreier_conductor: p divides m; reduce the exponent first");
    return GaloisModuleData(1, false, SlopeDecomposition{{Rat(m), 1}},
                            SlopeDecomposition{{Rat(m + 1), 1}});
}

Rat two_lines_curve_conductor(long m, long p, long alpha, long beta) {
    if (m < 1)
        throw std::domain_error("two_lines_curve_conductor: m must be >= 1");
    if (!is_prime(p))
        throw std::domain_error("two_lines_curve_conductor: p must be prime");
    if (m % p == 0)
        throw std::domain_error("two_lines_curve_conductor: p divides m");
    if (alpha < 0 || beta < 0)
        throw std::domain_error("two_lines_curve_conductor: multiplicities must be >= 0");
    if (alpha == 0 && beta == 0)
        throw std::domain_error(
            "two_lines_curve_conductor: the curve must meet at least one of D, E");
    return Rat(m) * Rat(p) * Rat(p) * Rat(alpha) + Rat(m + 1) * Rat(beta);
}

Rat finite_direct_image_lc_bound(const Rat& lc_trivial, long d, const Rat& lc_E) {
    if (lc_trivial.sign() < 0 || lc_E.sign() < 0)
        throw std::domain_error("finite_direct_image_lc_bound: conductors must be >= 0");
    if (d < 1)
        throw std::domain_error("finite_direct_image_lc_bound: degree must be >= 1");
    return lc_trivial + Rat(d) * lc_E;
}

} // namespace ramicalc
