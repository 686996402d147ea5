#include "ramicalc/verification.hpp"

#include <algorithm>
#include <random>

#include "ramicalc/conductor.hpp"
#include "ramicalc/curves.hpp"
#include "ramicalc/geometry.hpp"
#include "ramicalc/oracles.hpp"
#include "ramicalc/poly.hpp"

namespace ramicalc {

namespace {

// Thin deterministic sampler; avoids std::uniform_int_distribution whose
// exact outputs are implementation-defined.
struct Sampler {
    std::mt19937 rng;

    explicit Sampler(unsigned seed) : rng(seed) {}

    long pick(long lo, long hi) { return lo + static_cast<long>(rng() % (hi - lo + 1)); }

    Rat small_rat() {
        // Nonnegative rationals with small numerator and denominator.
        return Rat(pick(0, 12), pick(1, 4));
    }

    SlopeDecomposition slopes(int max_pieces, long total_rank_cap = 6) {
        SlopeDecomposition d;
        const int pieces = static_cast<int>(pick(1, max_pieces));
        long used = 0;
        for (int i = 0; i < pieces && used < total_rank_cap; ++i) {
            const long rank = pick(1, 2);
            d.add_piece(small_rat(), rank);
            used += rank;
        }
        return d;
    }

    GaloisModuleData module() {
        const SlopeDecomposition log = slopes(3);
        const bool perfect = pick(0, 1) == 1;
        std::optional<SlopeDecomposition> nonlog;
        if (perfect) {
            if (pick(0, 1) == 1)
                nonlog = log.shifted_by(Rat(1));
        } else if (pick(0, 2) > 0) {
            // Slopes move up by theta in [0, 1], clamped below at 1.
            const Rat theta(pick(0, 2), 2);
            SlopeDecomposition nl;
            for (const auto& [slope, rank] : log.pieces()) {
                Rat s = slope + theta;
                if (s < Rat(1))
                    s = Rat(1);
                nl.add_piece(s, rank);
            }
            nonlog = std::move(nl);
        }
        return GaloisModuleData(log.total_rank(), perfect, log, std::move(nonlog));
    }

    GaloisModuleData isoclinic_module(bool perfect, const Rat& slope, long rank) {
        return GaloisModuleData(rank, perfect, SlopeDecomposition{{slope, rank}});
    }

    QWeilDivisor divisor(const std::vector<std::string>& names, bool integer_entries) {
        QWeilDivisor d;
        for (const auto& name : names)
            if (pick(0, 1) == 1)
                d.set(name, integer_entries ? Rat(pick(0, 6)) : small_rat());
        return d;
    }

    CoherentToken token(const std::string& name, const std::vector<std::string>& fibers,
                        bool integer_entries = true) {
        std::map<std::string, QWeilDivisor> f;
        for (const auto& label : fibers)
            f[label] = divisor({"D", "E", "F"}, integer_entries);
        return CoherentToken(name, std::move(f));
    }
};

} // namespace

SuiteReport run_appendix_suite(int n_max, const std::vector<Rat>& grid) {
    SuiteReport report;
    report.suite = "appendix";
    report.chain = verify_closed_form_chain(n_max);
    for (const ChainStep& s : report.chain.steps)
        report.record("n=" + std::to_string(s.n) + " " + s.step, s.certified);

    const BoundFamily b = b_family(n_max);
    for (int n = 3; n <= n_max; ++n) {
        const bool ok = poly_nonneg_on_grid(closed_form_bound(n) - b[n], grid);
        report.record("grid: closed_form - b_" + std::to_string(n) + " >= 0", ok);
    }
    return report;
}

SuiteReport run_sharpness_suite() {
    SuiteReport report;
    report.suite = "sharpness";

    const BoundFamily b = b_family(12);
    bool degrees_ok = true, coeffs_ok = true;
    for (int i = 0; i <= 12; ++i) {
        degrees_ok = degrees_ok && b[i].degree() == i;
        for (const Rat& c : b[i].coeffs())
            coeffs_ok = coeffs_ok && c.sign() >= 0 && c.is_integer();
    }
    report.record("deg b_i = i for i <= 12", degrees_ok);
    report.record("b_i has nonnegative integer coefficients for i <= 12", coeffs_ok);

    bool sharp_ok = true;
    for (long m = 2; m <= 50 && sharp_ok; ++m)
        for (int i = 0; i <= 6 && sharp_ok; ++i) {
            const Rat oracle(mpq_class(oracles::kunneth_betti(6, i, m)));
            sharp_ok = oracle <= affine_betti_bound(6, i, Rat(m), 1);
        }
    report.record("(m-1)^i <= b_i(m) for m in 2..50, i <= 6", sharp_ok);
    return report;
}

SuiteReport run_invariants_suite(unsigned seed) {
    SuiteReport report;
    report.suite = "invariants";
    Sampler s(seed);

    {
        bool ok = true;
        for (int t = 0; t < 200 && ok; ++t) {
            const Rat a(s.pick(-50, 50), s.pick(1, 20));
            const Rat b(s.pick(-50, 50), s.pick(1, 20));
            ok = (a + (-a)).is_zero() && (b.is_zero() || (a * b) / b == a);
        }
        report.record("rational field laws", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < 100 && ok; ++t) {
            std::vector<Rat> coeffs;
            const long deg = s.pick(0, 5);
            for (long k = 0; k <= deg; ++k)
                coeffs.push_back(Rat(s.pick(-9, 9), s.pick(1, 3)));
            const Poly p(coeffs);
            const Rat sh(s.pick(-6, 6), s.pick(1, 3));
            const Rat th(s.pick(-6, 6), s.pick(1, 3));
            const Rat x(s.pick(-6, 6), s.pick(1, 3));
            ok = p.shifted(sh).shifted(th) == p.shifted(sh + th) &&
                 p.shifted(th).eval(x) == p.eval(x + th);
        }
        report.record("polynomial shift composition and evaluation", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < 1000 && ok; ++t) {
            const GaloisModuleData m = s.module();
            const ConductorInfo ci = conductors(m);
            ok = ci.lc <= ci.c_upper && ci.c_lower <= ci.c_upper &&
                 ci.c_lower >= ci.lc && ci.c_upper <= ci.lc + Rat(1);
            if (ok && ci.c)
                ok = ci.lc <= *ci.c && *ci.c <= ci.lc + Rat(1);
            if (ok && (m.nonlog() || m.perfect_residue())) {
                const Rat sw = swan(m), dt = dimtot(m);
                ok = sw <= dt && dt <= sw + Rat(m.rank());
            }
            if (ok && m.perfect_residue())
                ok = ci.c && *ci.c == ci.lc + Rat(1) && dimtot(m) == swan(m) + Rat(m.rank());
        }
        report.record("conductor sandwiches on random modules", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < 300 && ok; ++t) {
            GaloisModuleData a = s.module();
            GaloisModuleData b = s.module();
            if (a.perfect_residue() != b.perfect_residue())
                b = GaloisModuleData(a.rank(), a.perfect_residue(), a.log(), a.nonlog());
            const GaloisModuleData sum = direct_sum(a, b);
            ok = sum.rank() == a.rank() + b.rank() && swan(sum) == swan(a) + swan(b);
            if (ok && a.nonlog() && b.nonlog())
                ok = dimtot(sum) == dimtot(a) + dimtot(b);
            if (ok)
                ok = dual(sum) == sum;
        }
        report.record("direct-sum additivity and dual involution", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < 300 && ok; ++t) {
            const bool perfect = s.pick(0, 1) == 1;
            const Rat r1(s.pick(0, 8), s.pick(1, 3));
            Rat r2(s.pick(0, 8), s.pick(1, 3));
            if (r1 == r2)
                r2 += Rat(1, 5);
            const long k1 = s.pick(1, 3), k2 = s.pick(1, 3);
            const GaloisModuleData a = s.isoclinic_module(perfect, r1, k1);
            const GaloisModuleData b = s.isoclinic_module(perfect, r2, k2);
            const GaloisModuleData t12 = tensor_isoclinic(a, b, SlopeMode::log);
            const Rat top = r1 > r2 ? r1 : r2;
            ok = swan(t12) == Rat(k1) * Rat(k2) * top && t12.rank() == k1 * k2;
        }
        report.record("isoclinic tensor slope rule", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < 300 && ok; ++t) {
            const GaloisModuleData m = s.module();
            const GaloisModuleData n =
                s.isoclinic_module(m.perfect_residue(), Rat(s.pick(0, 10), s.pick(1, 3)), 1);
            const SwanTensorBounds bd = swan_tensor_bounds(m, n);
            ok = bd.lower <= bd.upper;
            if (ok && bd.exact)
                ok = bd.lower <= *bd.exact && *bd.exact <= bd.upper;
        }
        report.record("swan tensor bounds bracket their exact value", ok);
    }
    {
        bool ok = true;
        for (int t = 0; t < 100 && ok; ++t) {
            const long m = 2 * s.pick(0, 5) + 1, p = 2;  // odd m, so (m, p) = 1
            const long a1 = s.pick(0, 4), b1 = s.pick(0, 4);
            const long a2 = s.pick(0, 4), b2 = s.pick(0, 4);
            if (a1 + b1 == 0 || a2 + b2 == 0 || a1 + a2 + b1 + b2 == 0)
                continue;
            ok = two_lines_curve_conductor(m, p, a1 + a2, b1 + b2) ==
                 (a1 + b1 > 0 ? two_lines_curve_conductor(m, p, a1, b1) : Rat(0)) +
                     (a2 + b2 > 0 ? two_lines_curve_conductor(m, p, a2, b2) : Rat(0));
        }
        report.record("two-lines conductor linear in multiplicities", ok);
    }
    {
        const std::vector<std::string> fibers{"s0", "s1"};
        bool linear_ok = true, additive_ok = true, natural_ok = true, subadd_ok = true;
        for (int t = 0; t < 500; ++t) {
            const CoherentToken A = s.token("A" + std::to_string(t), fibers);
            const CoherentToken B = s.token("B" + std::to_string(t), fibers);
            const Rat ca = s.small_rat(), cb = s.small_rat();
            CoherentCombo combo;
            combo.add_term(A, ca);
            combo.add_term(B, cb);
            for (const auto& label : fibers)
                linear_ok = linear_ok &&
                            T_of(combo, label) == ca * A.fiber(label) + cb * B.fiber(label);
            const CoherentToken sum = direct_sum_token(A, B);
            for (const auto& label : fibers)
                additive_ok = additive_ok && sum.fiber(label) == A.fiber(label) + B.fiber(label);
            natural_ok = natural_ok && mu_f(A).is_integer() && mu_f(A).sign() >= 0;
            subadd_ok = subadd_ok && mu_f(sum) <= mu_f(A) + mu_f(B);
        }
        report.record("torsion divisor linearity", linear_ok);
        report.record("torsion divisor additivity on direct sums", additive_ok);
        report.record("mu natural-valued on integer tokens", natural_ok);
        report.record("mu subadditive on direct sums", subadd_ok);
    }
    {
        bool ok = true;
        const std::vector<std::string> names{"D", "E", "F"};
        for (int t = 0; t < 200 && ok; ++t) {
            const QWeilDivisor a = s.divisor(names, false);
            const QWeilDivisor b = s.divisor(names, false);
            const QWeilDivisor c = s.divisor(names, false);
            ok = divisor_leq(a, a);
            if (ok && divisor_leq(a, b) && divisor_leq(b, a))
                ok = a == b;
            if (ok && divisor_leq(a, b) && divisor_leq(b, c))
                ok = divisor_leq(a, c);
        }
        report.record("divisor comparison is a partial order", ok);
    }
    {
        bool ok = true;
        for (long m = 2; m <= 100 && ok; ++m) {
            const CurveSheafData d{0, 1, {{"inf", Rat(m + 1), 0}}};
            ok = gos_chi(d) == Rat(1 - m);
        }
        for (int t = 0; t < 200 && ok; ++t) {
            CurveSheafData d;
            d.genus = s.pick(0, 3);
            d.generic_rank = s.pick(0, 4);
            const long pts = s.pick(0, 3);
            for (long k = 0; k < pts; ++k) {
                const long stalk = s.pick(0, 3);
                d.bad_points.push_back(
                    {"x" + std::to_string(k), Rat(stalk) + s.small_rat(), stalk});
            }
            const CcCoefficients cc = cc_coefficients(d);
            Rat total = Rat(2 - 2 * d.genus) * (-cc.zero_section);
            for (const auto& [label, coeff] : cc.fibers)
                total += coeff;
            ok = gos_chi(d) == total;
            if (ok && d.bad_points.empty())
                ok = gos_chi(d) == Rat(2 - 2 * d.genus) * Rat(d.generic_rank);
        }
        report.record("curve Euler characteristic identities", ok);
    }
    return report;
}

} // namespace ramicalc
