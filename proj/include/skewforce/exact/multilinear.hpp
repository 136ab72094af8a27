#ifndef SKEWFORCE_EXACT_MULTILINEAR_HPP
#define SKEWFORCE_EXACT_MULTILINEAR_HPP

#include <map>
#include <string>
#include <vector>

#include "skewforce/errors.hpp"
#include "skewforce/exact/rational.hpp"
#include "skewforce/vertex_set.hpp"

namespace skewforce {

// Polynomial with rational coefficients in which every variable has degree
// at most one; a monomial is the bitmask of its variables.
class MultilinearPolynomial {
public:
    MultilinearPolynomial() = default;

    static MultilinearPolynomial constant(const Rational& c) {
        MultilinearPolynomial p;
        p.add_term(0, c);
        return p;
    }

    static MultilinearPolynomial monomial(Mask m, const Rational& c = 1) {
        MultilinearPolynomial p;
        p.add_term(m, c);
        return p;
    }

    // e_j over the variables in `vars`.
    static MultilinearPolynomial elementary_symmetric(Mask vars, int j) {
        MultilinearPolynomial p;
        if (j < 0) return p;
        if (j == 0) return constant(1);
        std::vector<int> v;
        for (Mask m = vars; m != 0; m &= m - 1) v.push_back(lowest(m));
        const int n = static_cast<int>(v.size());
        if (j > n) return p;
        std::vector<int> idx(static_cast<std::size_t>(j));
        for (int i = 0; i < j; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            Mask m = 0;
            for (int i : idx) m |= bit(v[static_cast<std::size_t>(i)]);
            p.add_term(m, 1);
            int i = j - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - j + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int t = i + 1; t < j; ++t) idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
        }
        return p;
    }

    void add_term(Mask m, const Rational& c) {
        if (c == 0) return;
        Rational& slot = terms_[m];
        slot += c;
        if (slot == 0) terms_.erase(m);
    }

    const std::map<Mask, Rational>& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t term_count() const noexcept { return terms_.size(); }

    MultilinearPolynomial& operator+=(const MultilinearPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    MultilinearPolynomial& operator-=(const MultilinearPolynomial& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend MultilinearPolynomial operator+(MultilinearPolynomial a, const MultilinearPolynomial& b) { return a += b; }
    friend MultilinearPolynomial operator-(MultilinearPolynomial a, const MultilinearPolynomial& b) { return a -= b; }

    friend MultilinearPolynomial operator*(const Rational& s, const MultilinearPolynomial& p) {
        MultilinearPolynomial out;
        for (const auto& [m, c] : p.terms_) out.add_term(m, s * c);
        return out;
    }

    // x_v * p; only defined while the result stays multilinear.
    MultilinearPolynomial times_variable(int v) const {
        MultilinearPolynomial out;
        for (const auto& [m, c] : terms_) {
            if (m & bit(v)) throw Error("internal: product leaves the multilinear algebra");
            out.add_term(m | bit(v), c);
        }
        return out;
    }

    MultilinearPolynomial derivative(int v) const {
        MultilinearPolynomial out;
        for (const auto& [m, c] : terms_)
            if (m & bit(v)) out.add_term(m & ~bit(v), c);
        return out;
    }

    // Sets the variables in `zeroed` to 0.
    MultilinearPolynomial restrict_zero(Mask zeroed) const {
        MultilinearPolynomial out;
        for (const auto& [m, c] : terms_)
            if ((m & zeroed) == 0) out.add_term(m, c);
        return out;
    }

    Rational evaluate(const RationalVector& x) const {
        Rational total = 0;
        for (const auto& [m, c] : terms_) {
            Rational t = c;
            for (Mask r = m; r != 0 && t != 0; r &= r - 1) {
                const auto i = static_cast<std::size_t>(lowest(r));
                if (i >= x.size()) throw ValidationError("point has too few coordinates");
                t *= x[i];
            }
            total += t;
        }
        return total;
    }

    friend bool operator==(const MultilinearPolynomial& a, const MultilinearPolynomial& b) { return a.terms_ == b.terms_; }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            s += c.get_str();
            for (Mask r = m; r != 0; r &= r - 1) s += "*x" + std::to_string(lowest(r));
        }
        return s;
    }

private:
    std::map<Mask, Rational> terms_;
};

} // namespace skewforce

#endif // SKEWFORCE_EXACT_MULTILINEAR_HPP
