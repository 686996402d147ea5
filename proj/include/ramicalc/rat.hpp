#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace ramicalc {

// Arbitrary-precision rational number, always stored reduced with a
// positive denominator. Zero is 0/1. Backed by GMP.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(n) {}
    Rat(long num, long den);
    explicit Rat(const mpz_class& n) : v_(n) {}
    explicit Rat(const mpq_class& q);

    // Accepts "num/den" or "num"; throws std::invalid_argument on anything else.
    static Rat parse(const std::string& s);

    const mpq_class& raw() const { return v_; }
    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Smallest integer >= *this.
    Rat ceil() const;
    // Largest integer <= *this.
    Rat floor() const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

    // "num/den", the "/den" omitted when the denominator is 1.
    std::string str() const { return v_.get_str(); }
    // Lossy, for display-only decimal columns.
    double approx() const { return v_.get_d(); }

private:
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

} // namespace ramicalc
