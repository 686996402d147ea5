#include "ramicalc/rat.hpp"

#include <ostream>
#include <stdexcept>

namespace ramicalc {

Rat::Rat(long num, long den) {
    if (den == 0)
        throw std::domain_error("Rat: zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
}

Rat::Rat(const mpq_class& q) : v_(q) {
    if (v_.get_den() == 0)
        throw std::domain_error("Rat: zero denominator");
    v_.canonicalize();
}

Rat Rat::parse(const std::string& s) {
    if (s.empty())
        throw std::invalid_argument("Rat: empty string");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("Rat: malformed rational '" + s + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("Rat: zero denominator in '" + s + "'");
    q.canonicalize();
    return Rat(q);
}

Rat Rat::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rat(q);
}

Rat Rat::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return Rat(q);
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero())
        throw std::domain_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
}

} // namespace ramicalc
