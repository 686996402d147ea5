#include "ramicalc/oracles.hpp"

#include <stdexcept>

namespace ramicalc::oracles {

namespace {

using QVec = std::vector<mpq_class>;

void trim(QVec& p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

QVec add(const QVec& a, const QVec& b) {
    QVec out(std::max(a.size(), b.size()), mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        out[i] += b[i];
    trim(out);
    return out;
}

QVec mul(const QVec& a, const QVec& b) {
    if (a.empty() || b.empty())
        return {};
    QVec out(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    trim(out);
    return out;
}

// p(x + t) by Horner: fold the coefficients from the top against (x + t).
QVec substitute_shift(const QVec& p, long t) {
    const QVec base{mpq_class(t), mpq_class(1)};
    QVec acc;
    for (std::size_t i = p.size(); i-- > 0;)
        acc = add(mul(acc, base), QVec{p[i]});
    return acc;
}

QVec naive_b(int n) {
    if (n == 0)
        return {mpq_class(1)};
    if (n == 1)
        return {mpq_class(0), mpq_class(1)};
    QVec total;
    const QVec x_plus_2{mpq_class(2), mpq_class(1)};
    const QVec x_plus_3{mpq_class(3), mpq_class(1)};
    for (int i = 0; i < n; ++i) {
        const QVec bi = naive_b(i);
        if (i % 2 != n % 2) {
            total = add(total, mul(x_plus_2, substitute_shift(bi, 3)));
            total = add(total, bi);
        } else {
            total = add(total, mul(x_plus_3, bi));
        }
    }
    return total;
}

} // namespace

mpz_class kunneth_betti(int n, int i, long m) {
    if (i < 0 || i > n)
        throw std::domain_error("kunneth_betti: degree out of range [0, n]");
    if (m < 1)
        throw std::domain_error("kunneth_betti: pole order must be >= 1");
    mpz_class out(1);
    for (int k = 0; k < i; ++k)
        out *= m - 1;
    return out;
}

mpz_class kunneth_chi(int n, long m) {
    if (n < 0)
        throw std::domain_error("kunneth_chi: dimension must be >= 0");
    if (m == 0)
        throw std::domain_error("kunneth_chi: pole order must be nonzero");
    mpz_class term(1), sum(0);
    for (int i = 0; i <= n; ++i) {
        sum += term;
        term *= 1 - m;
    }
    // Geometric closed form, as an independent route.
    mpz_class q(1);
    for (int i = 0; i <= n; ++i)
        q *= 1 - m;
    mpz_class closed = (q - 1) / mpz_class(-m);
    if (closed != sum)
        throw std::logic_error("kunneth_chi: summation and closed form disagree");
    return sum;
}

std::vector<mpq_class> recursion_reference(int n) {
    if (n < 0)
        throw std::domain_error("recursion_reference: n must be >= 0");
    if (n > 10)
        throw std::domain_error("recursion_reference: naive recursion capped at n = 10");
    return naive_b(n);
}

} // namespace ramicalc::oracles
