#include "ramicalc/betti_bounds.hpp"

#include <stdexcept>

namespace ramicalc {

namespace {

const Rat kOne(1);
const Rat kThree(3);

Poly x_plus(long t) {
    return Poly{Rat(t), kOne};
}

} // namespace

BoundFamily::BoundFamily(std::vector<Poly> polys) : polys_(std::move(polys)) {
    for (const Poly& p : polys_)
        if (!p.all_coeffs_nonneg())
            throw std::domain_error("BoundFamily: negative coefficient in " + p.str());
}

Poly BoundFamily::at_or_zero(std::size_t i) const {
    return i < polys_.size() ? polys_[i] : Poly();
}

BoundFamily b_family(int n_max) {
    if (n_max < 0)
        throw std::domain_error("b_family: n_max must be >= 0");
    std::vector<Poly> b;
    b.reserve(n_max + 1);
    b.push_back(Poly::constant(kOne));
    if (n_max >= 1)
        b.push_back(Poly::x());
    for (int n = 2; n <= n_max; ++n) {
        // The three summands of the recursion, kept separate for auditing.
        Poly odd_shifted, same_parity, odd_plain;
        for (int i = 0; i < n; ++i) {
            if (i % 2 != n % 2) {
                odd_shifted += b[i].shifted(kThree);
                odd_plain += b[i];
            } else {
                same_parity += b[i];
            }
        }
        b.push_back(x_plus(2) * odd_shifted + x_plus(3) * same_parity + odd_plain);
    }
    return BoundFamily(std::move(b));
}

BoundFamily c_family(int n_max) {
    if (n_max < 0)
        throw std::domain_error("c_family: n_max must be >= 0");
    std::vector<Poly> c;
    c.reserve(n_max + 1);
    c.push_back(Poly::constant(kOne));
    if (n_max >= 1)
        c.push_back(Poly::x());
    for (int n = 2; n <= n_max; ++n) {
        Poly sum;
        for (int i = 0; i < n; ++i)
            sum += c[i].shifted(kThree);
        c.push_back(sum * x_plus(3));
    }
    return BoundFamily(std::move(c));
}

Poly closed_form_bound(int n) {
    if (n < 3)
        throw std::domain_error("closed_form_bound: defined for n >= 3 only");
    Poly out = x_plus(3L * n - 3);
    for (long j = 1; j <= n - 1; ++j)
        out = out * x_plus(3 * j + 1);
    return out;
}

namespace {

struct StepBuilder {
    ChainStep step;

    StepBuilder(int n, std::string name) { step.n = n; step.step = std::move(name); step.certified = true; }

    void check(bool ok, const std::string& what) {
        step.checks.push_back((ok ? "ok: " : "FAILED: ") + what);
        if (!ok)
            step.certified = false;
    }
};

} // namespace

ChainReport verify_closed_form_chain(int n_max) {
    if (n_max < 3)
        throw std::domain_error("verify_closed_form_chain: n_max must be >= 3");
    const BoundFamily b = b_family(n_max);
    const BoundFamily c = c_family(n_max);

    ChainReport report;
    auto push = [&report](StepBuilder& sb) {
        report.all_certified = report.all_certified && sb.step.certified;
        report.steps.push_back(std::move(sb.step));
    };

    for (int n = 3; n <= n_max; ++n) {
        // (i) b_n <= c_n through the shared majorant (sum_{i<n} b_i(x+3))(x+3).
        {
            StepBuilder sb(n, "b<=c");
            Poly sum_b3, sum_c3;
            for (int i = 0; i < n; ++i) {
                sum_b3 += b[i].shifted(kThree);
                sum_c3 += c[i].shifted(kThree);
            }
            const Poly majorant = sum_b3 * x_plus(3);
            sb.check(c[n] == sum_c3 * x_plus(3), "c_n equals its defining expansion");
            sb.check(poly_dominates(b[n], majorant), "b_n <= (sum b_i(x+3))(x+3)");
            sb.check(poly_dominates(majorant, c[n]), "(sum b_i(x+3))(x+3) <= c_n");
            sb.check(poly_dominates(b[n], c[n]), "b_n <= c_n");
            push(sb);
        }
        // (ii) c_n <= c_{n-1}(x+3)(x+4).
        {
            StepBuilder sb(n, "c-chain");
            Poly sum_c6, sum_c3;
            for (int i = 0; i <= n - 2; ++i) {
                sum_c6 += c[i].shifted(Rat(6));
                sum_c3 += c[i].shifted(kThree);
            }
            const Poly target = c[n - 1].shifted(kThree) * x_plus(4);
            sb.check(c[n] == (sum_c6 * x_plus(6) + sum_c3) * x_plus(3),
                     "c_n equals ((sum c_i(x+6))(x+6) + sum c_i(x+3))(x+3)");
            sb.check(c[n - 1].shifted(kThree) == sum_c6 * x_plus(6),
                     "c_{n-1}(x+3) equals (sum c_i(x+6))(x+6)");
            sb.check(poly_dominates(sum_c3, sum_c6), "sum c_i(x+3) <= sum c_i(x+6)");
            sb.check(poly_dominates(c[n], sum_c6 * x_plus(7) * x_plus(3)),
                     "c_n <= (sum c_i(x+6))(x+7)(x+3)");
            sb.check(poly_dominates(x_plus(7) * x_plus(3), x_plus(6) * x_plus(4)),
                     "(x+7)(x+3) <= (x+6)(x+4)");
            sb.check(poly_dominates(sum_c6 * x_plus(7) * x_plus(3), sum_c6 * x_plus(6) * x_plus(4)),
                     "(sum c_i(x+6))(x+7)(x+3) <= (sum c_i(x+6))(x+6)(x+4)");
            sb.check(sum_c6 * x_plus(6) * x_plus(4) == target,
                     "(sum c_i(x+6))(x+6)(x+4) equals c_{n-1}(x+3)(x+4)");
            sb.check(poly_dominates(c[n], target), "c_n <= c_{n-1}(x+3)(x+4)");
            push(sb);
        }
        // (iii) c_n <= closed form, iterating (ii) from the base c_2(x+3)(x+4).
        {
            StepBuilder sb(n, "closed-form");
            const Poly cf = closed_form_bound(n);
            if (n == 3) {
                sb.check(c[2].shifted(kThree) * x_plus(4) == cf,
                         "c_2(x+3)(x+4) equals the closed form at 3");
            } else {
                const Poly prev_cf = closed_form_bound(n - 1);
                sb.check(prev_cf.shifted(kThree) * x_plus(4) == cf,
                         "closed form satisfies the same shift-multiply step");
                sb.check(poly_dominates(c[n - 1].shifted(kThree) * x_plus(4),
                                        prev_cf.shifted(kThree) * x_plus(4)),
                         "c_{n-1}(x+3)(x+4) <= closed-form_{n-1}(x+3)(x+4)");
            }
            sb.check(poly_dominates(c[n], cf), "c_n <= closed form");
            sb.check(poly_dominates(b[n], cf), "b_n <= closed form");
            push(sb);
        }
    }
    return report;
}

Rat affine_betti_bound(int n, int i, const Rat& lc_H, long rank) {
    if (n < 0 || i < 0)
        throw std::domain_error("affine_betti_bound: dimension and degree must be >= 0");
    if (lc_H.sign() < 0)
        throw std::domain_error("affine_betti_bound: conductor must be >= 0");
    if (rank < 1)
        throw std::domain_error("affine_betti_bound: rank must be >= 1");
    if (i > n)
        return Rat(0);
    return b_family(i)[i].eval(lc_H) * Rat(rank);
}

Rat affine_betti_bound_compact(int n, int i, const Rat& lc_H, long rank) {
    if (n < 0)
        throw std::domain_error("affine_betti_bound_compact: dimension must be >= 0");
    if (lc_H.sign() < 0)
        throw std::domain_error("affine_betti_bound_compact: conductor must be >= 0");
    if (rank < 1)
        throw std::domain_error("affine_betti_bound_compact: rank must be >= 1");
    if (i < 0 || i > n)
        return Rat(0);
    return b_family(i)[i].eval(lc_H) * Rat(rank);
}

ChiBounds chi_sandwich(int n, const Rat& lc_H, long rank) {
    if (n < 2)
        throw std::domain_error("chi_sandwich: n must be >= 2");
    if (lc_H.sign() < 0)
        throw std::domain_error("chi_sandwich: conductor must be >= 0");
    if (rank < 1)
        throw std::domain_error("chi_sandwich: rank must be >= 1");
    const BoundFamily b = b_family(n - 1);
    Rat odd_shift(0), even_shift(0), odd_plain(0), even_plain(0);
    for (int i = 0; i < n; ++i) {
        const Rat at_shift = b[i].eval(lc_H + kThree);
        const Rat at_lc = b[i].eval(lc_H);
        if (i % 2 == 1) {
            odd_shift += at_shift;
            odd_plain += at_lc;
        } else {
            even_shift += at_shift;
            even_plain += at_lc;
        }
    }
    const Rat r(rank);
    ChiBounds out;
    out.upper = ((lc_H + Rat(2)) * odd_shift + (lc_H + kThree) * even_plain) * r;
    out.lower = -(((lc_H + Rat(2)) * even_shift + (lc_H + kThree) * odd_plain) * r);
    return out;
}

ChiBounds chi_twisted_sandwich(int n, const Rat& m, long rank) {
    if (n < 2)
        throw std::domain_error("chi_twisted_sandwich: n must be >= 2");
    if (m < kOne)
        throw std::domain_error("chi_twisted_sandwich: pole order must be >= 1");
    if (rank < 1)
        throw std::domain_error("chi_twisted_sandwich: rank must be >= 1");
    const BoundFamily b = b_family(n - 1);
    Rat odd_sum(0), even_sum(0);
    for (int i = 0; i < n; ++i)
        (i % 2 == 1 ? odd_sum : even_sum) += b[i].eval(m);
    const Rat scale = (m - kOne) * Rat(rank);
    return ChiBounds{-(even_sum * scale), odd_sum * scale};
}

AssembledBounds assemble_bound_sequence(int n, int N, long delta, long alpha,
                                        const Rat& mu_value) {
    if (N < 0 || N > n)
        throw std::domain_error("assemble_bound_sequence: fiber dimension must satisfy 0 <= N <= n");
    if (delta < 1)
        throw std::domain_error("assemble_bound_sequence: covering degree must be >= 1");
    if (alpha < 0)
        throw std::domain_error("assemble_bound_sequence: alpha must be >= 0");
    if (mu_value.sign() < 0)
        throw std::domain_error("assemble_bound_sequence: mu value must be >= 0");

    const BoundFamily b = b_family(N);
    AssembledBounds out;
    out.raw.assign(2 * n + 1, Poly());
    for (int j = N; j <= 2 * N; ++j)
        out.raw[j] = Rat(delta) * b[2 * N - j].composed_affine(Rat(alpha), Rat(delta));

    std::vector<Poly> folded(n + 1);
    for (int i = 0; i <= n; ++i) {
        folded[i] = Poly::monomial(i) + out.raw[i] + out.raw[2 * n - i];
        if (folded[i].degree() != i)
            throw std::logic_error("assemble_bound_sequence: fold degree drifted");
    }
    out.folded = BoundFamily(std::move(folded));

    out.bounds_at_mu.reserve(2 * n + 1);
    for (int j = 0; j <= 2 * n; ++j)
        out.bounds_at_mu.push_back(out.folded[std::min(j, 2 * n - j)].eval(mu_value));
    return out;
}

BoundFamily perverse_fold(const std::vector<BoundFamily>& families) {
    if (families.empty())
        throw std::domain_error("perverse_fold: need at least the dimension-0 family");
    const int n = static_cast<int>(families.size()) - 1;

    std::vector<Poly> out(n + 1);
    for (int i = 0; i <= n; ++i) {
        Poly e, f;
        for (int m = 0; m <= n - i; ++m)
            e += families[i + m].at_or_zero(m);
        for (int m = 2 * i; m <= n + i; ++m)
            f += families[m - i].at_or_zero(m - 2 * i);
        out[n - i] = e + f;  // entry of degree n - i
    }
    return BoundFamily(std::move(out));
}

Rat curve_case_bound(long genus, long num_points, const Rat& lc, long rank, int i) {
    if (genus < 0)
        throw std::domain_error("curve_case_bound: genus must be >= 0");
    if (num_points < 1)
        throw std::domain_error("curve_case_bound: need at least one puncture (affine curve)");
    if (lc.sign() < 0)
        throw std::domain_error("curve_case_bound: conductor must be >= 0");
    if (rank < 1)
        throw std::domain_error("curve_case_bound: rank must be >= 1");
    if (i < 0)
        throw std::domain_error("curve_case_bound: degree must be >= 0");
    if (i == 0)
        return Rat(rank);
    if (i == 1)
        return (Rat(2 * genus - 1 + num_points) + Rat(num_points) * lc) * Rat(rank);
    return Rat(0);
}

} // namespace ramicalc
