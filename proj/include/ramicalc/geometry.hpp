#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ramicalc/rat.hpp"

namespace ramicalc {

// Q-Weil divisor: finite map from component names to rational
// multiplicities. Zero entries are pruned; names are nonempty.
class QWeilDivisor {
public:
    QWeilDivisor() = default;
    QWeilDivisor(std::initializer_list<std::pair<std::string, Rat>> entries);

    void set(const std::string& component, const Rat& mult);
    Rat multiplicity(const std::string& component) const;
    const std::map<std::string, Rat>& components() const { return mult_; }
    bool empty() const { return mult_.empty(); }

    // Largest multiplicity, 0 for the empty divisor.
    Rat max_multiplicity() const;

    bool all_nonneg() const;

    QWeilDivisor& operator+=(const QWeilDivisor& o);
    friend QWeilDivisor operator+(QWeilDivisor a, const QWeilDivisor& b) { a += b; return a; }
    friend QWeilDivisor operator*(const Rat& s, const QWeilDivisor& d);

    friend bool operator==(const QWeilDivisor& a, const QWeilDivisor& b) {
        return a.mult_ == b.mult_;
    }
    friend bool operator!=(const QWeilDivisor& a, const QWeilDivisor& b) { return !(a == b); }

private:
    std::map<std::string, Rat> mult_;
};

// Componentwise comparison, absent components counting as 0.
bool divisor_leq(const QWeilDivisor& a, const QWeilDivisor& b);

// A named coherent-sheaf token carrying, for each fiber label, the
// divisor of torsion lengths at codimension-1 points of that fiber.
class CoherentToken {
public:
    CoherentToken(std::string name, std::map<std::string, QWeilDivisor> fibers);

    const std::string& name() const { return name_; }
    const std::map<std::string, QWeilDivisor>& fibers() const { return fibers_; }
    const QWeilDivisor& fiber(const std::string& label) const;
    std::set<std::string> fiber_labels() const;

    friend bool operator==(const CoherentToken& a, const CoherentToken& b) {
        return a.name_ == b.name_ && a.fibers_ == b.fibers_;
    }
    friend bool operator!=(const CoherentToken& a, const CoherentToken& b) { return !(a == b); }

private:
    std::string name_;
    std::map<std::string, QWeilDivisor> fibers_;
};

// Torsion divisors add on direct sums; the result is named "a⊕b".
// Requires identical fiber label sets.
CoherentToken direct_sum_token(const CoherentToken& a, const CoherentToken& b);

// Q-linear combination of coherent tokens, keyed by token name (the
// isomorphism-class identifier). Zero coefficients are pruned.
class CoherentCombo {
public:
    CoherentCombo() = default;

    // Merges by token name, adding coefficients; a name reused with
    // different fiber data is rejected.
    void add_term(const CoherentToken& token, const Rat& coeff);
    static CoherentCombo single(const CoherentToken& token, const Rat& coeff);

    const std::map<std::string, std::pair<CoherentToken, Rat>>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    CoherentCombo& operator+=(const CoherentCombo& o);
    friend CoherentCombo operator+(CoherentCombo a, const CoherentCombo& b) { a += b; return a; }
    friend CoherentCombo operator*(const Rat& s, const CoherentCombo& c);

private:
    std::map<std::string, std::pair<CoherentToken, Rat>> terms_;
};

// The torsion-length divisor of a combo on one fiber, extended
// Q-linearly over the terms. Every token must carry the fiber.
QWeilDivisor T_of(const CoherentCombo& e, const std::string& fiber);

// Largest torsion multiplicity over the token's fibers.
Rat mu_f(const CoherentToken& token);
// Q-linear extension; all tokens must share one fiber label set.
Rat mu_f(const CoherentCombo& e);

// Admissibility of a tabulated mu: every value a nonnegative integer and
// mu(a⊕b) <= mu(a) + mu(b) on every sampled pair. The map is keyed by
// token name and must cover each sampled pair and its direct sum.
bool check_admissible(const std::map<std::string, Rat>& mu_values,
                      const std::vector<std::pair<std::string, std::string>>& sample_pairs);

// The combo (lc_D + 1) * O_D bounding the log conductors of a local
// system with generic log conductor lc_D along D.
CoherentCombo bounding_combo_for_local_system(const Rat& lc_D, const CoherentToken& token_O_D);

// Log-conductor-boundedness along one curve: the restricted conductor
// divisor is dominated by the pulled-back torsion divisor.
bool check_lc_bounded(const QWeilDivisor& lc_along_curve, const QWeilDivisor& pulled_T);

} // namespace ramicalc
