#pragma once

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "ramicalc/rat.hpp"

namespace ramicalc {

// Univariate polynomial with exact rational coefficients, stored densely
// lowest degree first. The top coefficient is nonzero unless the
// polynomial is zero (empty coefficient list).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Rat> coeffs);
    Poly(std::initializer_list<Rat> coeffs);

    static Poly constant(Rat c);
    // The monomial c * x^k.
    static Poly monomial(std::size_t k, Rat c = Rat(1));
    static Poly x() { return monomial(1); }

    // -1 encodes degree(0) = -inf.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    // Zero for k beyond the degree.
    Rat coeff(std::size_t k) const;
    const std::vector<Rat>& coeffs() const { return coeffs_; }

    bool all_coeffs_nonneg() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);

    friend Poly operator+(Poly a, const Poly& b) { a += b; return a; }
    friend Poly operator-(Poly a, const Poly& b) { a -= b; return a; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Rat& s, const Poly& p);

    friend bool operator==(const Poly& a, const Poly& b) { return a.coeffs_ == b.coeffs_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // p(x + t), by binomial expansion of the powers of (x + t).
    Poly shifted(const Rat& t) const;
    // p(s * x): coefficient k picks up a factor s^k.
    Poly arg_scaled(const Rat& s) const;
    // p(a + b*x).
    Poly composed_affine(const Rat& a, const Rat& b) const { return shifted(a).arg_scaled(b); }

    // Horner evaluation.
    Rat eval(const Rat& x) const;

    // Display form, degree descending: "x^2 + 7x + 9".
    std::string str() const;

private:
    void normalize();

    std::vector<Rat> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

// True iff every coefficient of b - a is >= 0. A sound but incomplete
// certificate for a(x) <= b(x) on all x >= 0.
bool poly_dominates(const Poly& a, const Poly& b);

// Samples p on the grid and reports whether every value is >= 0. A
// necessary-condition check, never a proof. Rejects negative grid points.
bool poly_nonneg_on_grid(const Poly& p, const std::vector<Rat>& grid);

// {0, 1/2, 1, 3/2, ..., 100}.
std::vector<Rat> default_grid();
// "start:step:end" with rational entries, step > 0, start >= 0.
std::vector<Rat> parse_grid_spec(const std::string& spec);
// parse_grid_spec(RAMICALC_GRID) when the variable is set, default_grid() otherwise.
std::vector<Rat> grid_from_env();

} // namespace ramicalc
