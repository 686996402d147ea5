#include "ramicalc/poly.hpp"

#include <cstdlib>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace ramicalc {

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

Poly::Poly(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) {
    normalize();
}

Poly Poly::constant(Rat c) {
    Poly p;
    if (!c.is_zero())
        p.coeffs_.push_back(std::move(c));
    return p;
}

Poly Poly::monomial(std::size_t k, Rat c) {
    Poly p;
    if (!c.is_zero()) {
        p.coeffs_.assign(k + 1, Rat(0));
        p.coeffs_[k] = std::move(c);
    }
    return p;
}

Rat Poly::coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rat(0);
}

bool Poly::all_coeffs_nonneg() const {
    for (const Rat& c : coeffs_)
        if (c.sign() < 0)
            return false;
    return true;
}

void Poly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero())
        coeffs_.pop_back();
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (Rat& c : r.coeffs_)
        c = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] += o.coeffs_[i];
    normalize();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (coeffs_.size() < o.coeffs_.size())
        coeffs_.resize(o.coeffs_.size(), Rat(0));
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        coeffs_[i] -= o.coeffs_[i];
    normalize();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero())
        return Poly();
    Poly r;
    r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    r.normalize();
    return r;
}

Poly operator*(const Rat& s, const Poly& p) {
    if (s.is_zero())
        return Poly();
    Poly r = p;
    for (Rat& c : r.coeffs_)
        c *= s;
    return r;
}

Poly Poly::shifted(const Rat& t) const {
    if (t.is_zero())
        return *this;
    Poly result;
    Poly power = Poly::constant(Rat(1));
    const Poly base{t, Rat(1)}; // x + t
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        result += coeffs_[k] * power;
        power = power * base;
    }
    return result;
}

Poly Poly::arg_scaled(const Rat& s) const {
    Poly r;
    r.coeffs_.reserve(coeffs_.size());
    Rat power(1);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        r.coeffs_.push_back(coeffs_[k] * power);
        power *= s;
    }
    r.normalize();
    return r;
}

Rat Poly::eval(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        acc *= x;
        acc += coeffs_[i];
    }
    return acc;
}

std::string Poly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        const Rat& c = coeffs_[i];
        if (c.is_zero())
            continue;
        Rat mag = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0)
                os << "-";
            first = false;
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = (mag == Rat(1));
        if (i == 0) {
            os << mag.str();
        } else {
            if (!unit)
                os << (mag.is_integer() ? mag.str() : "(" + mag.str() + ")");
            os << "x";
            if (i > 1)
                os << "^" << i;
        }
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) {
    return os << p.str();
}

bool poly_dominates(const Poly& a, const Poly& b) {
    return (b - a).all_coeffs_nonneg();
}

bool poly_nonneg_on_grid(const Poly& p, const std::vector<Rat>& grid) {
    for (const Rat& x : grid) {
        if (x.sign() < 0)
            throw std::domain_error("poly_nonneg_on_grid: negative grid point " + x.str());
        if (p.eval(x).sign() < 0)
            return false;
    }
    return true;
}

std::vector<Rat> default_grid() {
    std::vector<Rat> g;
    g.reserve(201);
    for (long k = 0; k <= 200; ++k)
        g.push_back(Rat(k, 2));
    return g;
}

std::vector<Rat> parse_grid_spec(const std::string& spec) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
        throw std::invalid_argument("grid spec must be start:step:end, got '" + spec + "'");
    const Rat start = Rat::parse(spec.substr(0, c1));
    const Rat step = Rat::parse(spec.substr(c1 + 1, c2 - c1 - 1));
    const Rat end = Rat::parse(spec.substr(c2 + 1));
    if (start.sign() < 0)
        throw std::invalid_argument("grid start must be >= 0");
    if (step.sign() <= 0)
        throw std::invalid_argument("grid step must be > 0");
    std::vector<Rat> g;
    for (Rat x = start; x <= end; x += step)
        g.push_back(x);
    return g;
}

std::vector<Rat> grid_from_env() {
    if (const char* spec = std::getenv("RAMICALC_GRID"))
        return parse_grid_spec(spec);
    return default_grid();
}

} // namespace ramicalc
