#include "ramicalc/geometry.hpp"

#include <stdexcept>

namespace ramicalc {

QWeilDivisor::QWeilDivisor(std::initializer_list<std::pair<std::string, Rat>> entries) {
    for (const auto& [name, mult] : entries)
        set(name, multiplicity(name) + mult);
}

void QWeilDivisor::set(const std::string& component, const Rat& mult) {
    if (component.empty())
        throw std::domain_error("QWeilDivisor: empty component name");
    if (mult.is_zero())
        mult_.erase(component);
    else
        mult_[component] = mult;
}

Rat QWeilDivisor::multiplicity(const std::string& component) const {
    auto it = mult_.find(component);
    return it == mult_.end() ? Rat(0) : it->second;
}

Rat QWeilDivisor::max_multiplicity() const {
    Rat best(0);
    bool first = true;
    for (const auto& [name, mult] : mult_) {
        if (first || mult > best) {
            best = mult;
            first = false;
        }
    }
    return best;
}

bool QWeilDivisor::all_nonneg() const {
    for (const auto& [name, mult] : mult_)
        if (mult.sign() < 0)
            return false;
    return true;
}

QWeilDivisor& QWeilDivisor::operator+=(const QWeilDivisor& o) {
    for (const auto& [name, mult] : o.mult_)
        set(name, multiplicity(name) + mult);
    return *this;
}

QWeilDivisor operator*(const Rat& s, const QWeilDivisor& d) {
    QWeilDivisor out;
    for (const auto& [name, mult] : d.mult_)
        out.set(name, s * mult);
    return out;
}

bool divisor_leq(const QWeilDivisor& a, const QWeilDivisor& b) {
    for (const auto& [name, mult] : a.components())
        if (mult > b.multiplicity(name))
            return false;
    // Negative entries of b not present in a would make b smaller there.
    for (const auto& [name, mult] : b.components())
        if (mult.sign() < 0 && a.multiplicity(name) > mult)
            return false;
    return true;
}

CoherentToken::CoherentToken(std::string name, std::map<std::string, QWeilDivisor> fibers)
    : name_(std::move(name)), fibers_(std::move(fibers)) {
    if (name_.empty())
        throw std::domain_error("CoherentToken: empty name");
    if (fibers_.empty())
        throw std::domain_error("CoherentToken: at least one fiber required");
    for (const auto& [label, divisor] : fibers_) {
        if (label.empty())
            throw std::domain_error("CoherentToken: empty fiber label");
        if (!divisor.all_nonneg())
            throw std::domain_error("CoherentToken: torsion lengths must be >= 0");
    }
}

const QWeilDivisor& CoherentToken::fiber(const std::string& label) const {
    auto it = fibers_.find(label);
    if (it == fibers_.end())
        throw std::domain_error("CoherentToken '" + name_ + "': unknown fiber '" + label + "'");
    return it->second;
}

std::set<std::string> CoherentToken::fiber_labels() const {
    std::set<std::string> labels;
    for (const auto& [label, divisor] : fibers_)
        labels.insert(label);
    return labels;
}

CoherentToken direct_sum_token(const CoherentToken& a, const CoherentToken& b) {
    if (a.fiber_labels() != b.fiber_labels())
        throw std::domain_error("direct_sum_token: fiber label sets differ");
    std::map<std::string, QWeilDivisor> fibers;
    for (const auto& [label, divisor] : a.fibers())
        fibers[label] = divisor + b.fiber(label);
    return CoherentToken(a.name() + "⊕" + b.name(), std::move(fibers));
}

void CoherentCombo::add_term(const CoherentToken& token, const Rat& coeff) {
    auto it = terms_.find(token.name());
    if (it == terms_.end()) {
        if (!coeff.is_zero())
            terms_.emplace(token.name(), std::make_pair(token, coeff));
        return;
    }
    if (it->second.first != token)
        throw std::domain_error("CoherentCombo: token name '" + token.name() +
                                "' reused with different fiber data");
    it->second.second += coeff;
    if (it->second.second.is_zero())
        terms_.erase(it);
}

CoherentCombo CoherentCombo::single(const CoherentToken& token, const Rat& coeff) {
    CoherentCombo combo;
    combo.add_term(token, coeff);
    return combo;
}

CoherentCombo& CoherentCombo::operator+=(const CoherentCombo& o) {
    for (const auto& [name, term] : o.terms_)
        add_term(term.first, term.second);
    return *this;
}

CoherentCombo operator*(const Rat& s, const CoherentCombo& c) {
    CoherentCombo out;
    for (const auto& [name, term] : c.terms_)
        out.add_term(term.first, s * term.second);
    return out;
}

QWeilDivisor T_of(const CoherentCombo& e, const std::string& fiber) {
    QWeilDivisor out;
    for (const auto& [name, term] : e.terms())
        out += term.second * term.first.fiber(fiber);
    return out;
}

Rat mu_f(const CoherentToken& token) {
    Rat best(0);
    bool first = true;
    for (const auto& [label, divisor] : token.fibers()) {
        Rat m = divisor.max_multiplicity();
        if (first || m > best) {
            best = m;
            first = false;
        }
    }
    if (first)
        throw std::domain_error("mu_f: token has no fibers");
    return best;
}

Rat mu_f(const CoherentCombo& e) {
    const std::set<std::string>* common = nullptr;
    std::set<std::string> reference;
    Rat sum(0);
    for (const auto& [name, term] : e.terms()) {
        if (!common) {
            reference = term.first.fiber_labels();
            common = &reference;
        } else if (term.first.fiber_labels() != reference) {
            throw std::domain_error("mu_f: tokens do not share a common fiber set");
        }
        sum += term.second * mu_f(term.first);
    }
    return sum;
}

bool check_admissible(const std::map<std::string, Rat>& mu_values,
                      const std::vector<std::pair<std::string, std::string>>& sample_pairs) {
    auto lookup = [&](const std::string& name) -> const Rat& {
        auto it = mu_values.find(name);
        if (it == mu_values.end())
            throw std::domain_error("check_admissible: missing value for token '" + name + "'");
        return it->second;
    };
    for (const auto& [name, value] : mu_values)
        if (value.sign() < 0 || !value.is_integer())
            return false;
    for (const auto& [a, b] : sample_pairs) {
        const Rat& va = lookup(a);
        const Rat& vb = lookup(b);
        const Rat& vsum = lookup(a + "⊕" + b);
        if (vsum > va + vb)
            return false;
    }
    return true;
}

CoherentCombo bounding_combo_for_local_system(const Rat& lc_D, const CoherentToken& token_O_D) {
    if (lc_D.sign() < 0)
        throw std::domain_error("bounding_combo_for_local_system: negative conductor");
    return CoherentCombo::single(token_O_D, lc_D + Rat(1));
}

bool check_lc_bounded(const QWeilDivisor& lc_along_curve, const QWeilDivisor& pulled_T) {
    return divisor_leq(lc_along_curve, pulled_T);
}

} // namespace ramicalc
