#pragma once

#include <map>
#include <utility>
#include <vector>

#include "segring/multisegment.hpp"

namespace segring {

/// Element of R: finite integer-linear combination of multisegment labels in
/// the standard-module basis. Zero coefficients are never stored.
class RElem {
public:
    using TermMap = std::map<Multisegment, long long>;

    RElem() = default;

    static RElem zero() { return RElem(); }
    static RElem unit() { return basis(Multisegment()); }
    static RElem basis(const Multisegment& label, long long coeff = 1) {
        RElem x;
        x.add_term(label, coeff);
        return x;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long coeff(const Multisegment& label) const {
        auto it = terms_.find(label);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(const Multisegment& label, long long coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(label, coeff);
        if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
    }

    RElem& operator+=(const RElem& other) {
        for (const auto& [label, c] : other.terms_) add_term(label, c);
        return *this;
    }
    RElem& operator-=(const RElem& other) {
        for (const auto& [label, c] : other.terms_) add_term(label, -c);
        return *this;
    }
    friend RElem operator+(RElem a, const RElem& b) { return a += b; }
    friend RElem operator-(RElem a, const RElem& b) { return a -= b; }

    friend RElem operator*(long long k, const RElem& x) {
        RElem out;
        if (k != 0)
            for (const auto& [label, c] : x.terms_) out.terms_.emplace(label, k * c);
        return out;
    }

    /// Parabolic-induction product: bilinear extension of multiset
    /// concatenation of labels. Commutative, associative, unit = 1.
    friend RElem operator*(const RElem& a, const RElem& b) {
        RElem out;
        for (const auto& [la, ca] : a.terms_)
            for (const auto& [lb, cb] : b.terms_) out.add_term(la.concat(lb), ca * cb);
        return out;
    }
    RElem& operator*=(const RElem& other) { return *this = *this * other; }

    friend bool operator==(const RElem& a, const RElem& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const RElem& a, const RElem& b) { return !(a == b); }

    /// All coefficients >= 0 (termwise ordering against zero).
    bool is_nonnegative() const {
        for (const auto& [label, c] : terms_)
            if (c < 0) return false;
        return true;
    }

private:
    TermMap terms_;
};

inline RElem dual(const LineTable& table, const RElem& x) {
    RElem out;
    for (const auto& [label, c] : x.terms()) out.add_term(dual(table, label), c);
    return out;
}

inline RElem twist(const RElem& x, const Rational& t) {
    RElem out;
    for (const auto& [label, c] : x.terms()) out.add_term(twist(label, t), c);
    return out;
}

/// Terms of x of the given degree.
inline RElem homogeneous_component(const LineTable& table, const RElem& x, long long deg) {
    RElem out;
    for (const auto& [label, c] : x.terms())
        if (degree(table, label) == deg) out.add_term(label, c);
    return out;
}

/// Element of the arity-r tensor power of R: integer-linear combination of
/// r-tuples of multisegment labels.
class TensorElem {
public:
    using Tuple = std::vector<Multisegment>;
    using TermMap = std::map<Tuple, long long>;

    explicit TensorElem(int arity) : arity_(arity) {}

    static TensorElem from_relem(const RElem& x) {
        TensorElem t(1);
        for (const auto& [label, c] : x.terms()) t.add_term({label}, c);
        return t;
    }

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long coeff(const Tuple& tuple) const {
        auto it = terms_.find(tuple);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(Tuple tuple, long long coeff) {
        if (static_cast<int>(tuple.size()) != arity_)
            throw DomainError("tensor term arity mismatch");
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(tuple), coeff);
        if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
    }

    TensorElem& operator+=(const TensorElem& other) {
        require_same_arity(other);
        for (const auto& [tuple, c] : other.terms_) add_term(tuple, c);
        return *this;
    }
    TensorElem& operator-=(const TensorElem& other) {
        require_same_arity(other);
        for (const auto& [tuple, c] : other.terms_) add_term(tuple, -c);
        return *this;
    }
    friend TensorElem operator+(TensorElem a, const TensorElem& b) { return a += b; }
    friend TensorElem operator-(TensorElem a, const TensorElem& b) { return a -= b; }

    /// Componentwise product (a_1 (x) ... (x) a_r)(b_1 (x) ... (x) b_r)
    /// = a_1 b_1 (x) ... (x) a_r b_r, no signs.
    friend TensorElem operator*(const TensorElem& a, const TensorElem& b) {
        a.require_same_arity(b);
        TensorElem out(a.arity_);
        for (const auto& [ta, ca] : a.terms_)
            for (const auto& [tb, cb] : b.terms_) {
                Tuple tuple;
                tuple.reserve(ta.size());
                for (std::size_t i = 0; i < ta.size(); ++i) tuple.push_back(ta[i].concat(tb[i]));
                out.add_term(std::move(tuple), ca * cb);
            }
        return out;
    }

    friend bool operator==(const TensorElem& a, const TensorElem& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const TensorElem& a, const TensorElem& b) { return !(a == b); }

    bool is_nonnegative() const {
        for (const auto& [tuple, c] : terms_)
            if (c < 0) return false;
        return true;
    }

private:
    void require_same_arity(const TensorElem& other) const {
        if (arity_ != other.arity_) throw DomainError("tensor arity mismatch");
    }

    int arity_;
    TermMap terms_;
};

/// Ordered sequence of cuspidal points: a term of the minimal Jacquet module.
using Word = std::vector<Point>;

/// Integer-linear combination of cuspidal words.
class WordSum {
public:
    using TermMap = std::map<Word, long long>;

    WordSum() = default;

    static WordSum single(Word w, long long coeff = 1) {
        WordSum s;
        s.add_term(std::move(w), coeff);
        return s;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    long long coeff(const Word& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? 0 : it->second;
    }

    void add_term(Word w, long long coeff) {
        if (coeff == 0) return;
        auto [it, inserted] = terms_.emplace(std::move(w), coeff);
        if (!inserted && (it->second += coeff) == 0) terms_.erase(it);
    }

    WordSum& operator+=(const WordSum& other) {
        for (const auto& [w, c] : other.terms_) add_term(w, c);
        return *this;
    }
    WordSum& operator-=(const WordSum& other) {
        for (const auto& [w, c] : other.terms_) add_term(w, -c);
        return *this;
    }
    friend WordSum operator+(WordSum a, const WordSum& b) { return a += b; }
    friend WordSum operator-(WordSum a, const WordSum& b) { return a -= b; }

    friend bool operator==(const WordSum& a, const WordSum& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const WordSum& a, const WordSum& b) { return !(a == b); }

    bool is_nonnegative() const {
        for (const auto& [w, c] : terms_)
            if (c < 0) return false;
        return true;
    }

    /// Termwise a <= b with multiplicity.
    static bool dominates(const WordSum& small, const WordSum& big) {
        for (const auto& [w, c] : small.terms_)
            if (c > big.coeff(w)) return false;
        return true;
    }

private:
    TermMap terms_;
};

inline long long degree(const LineTable& table, const Word& w) {
    long long total = 0;
    for (const Point& p : w) total += table[p.line].size;
    return total;
}

}  // namespace segring
