#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "mspotty/bigint.hpp"
#include "mspotty/errors.hpp"

namespace mspotty {

/// Dense univariate polynomial over Z with arbitrary-precision coefficients.
/// Position d holds the coefficient of z^d; trailing zeros are never stored,
/// so the zero polynomial has an empty coefficient vector.
class Poly {
  public:
    Poly() = default;
    explicit Poly(Int constant) {
        coeffs_.push_back(std::move(constant));
        trim();
    }

    static Poly one() { return Poly(Int(1)); }

    static Poly monomial(std::size_t degree, Int coeff = Int(1)) {
        Poly p;
        if (coeff != 0) {
            p.coeffs_.assign(degree + 1, Int(0));
            p.coeffs_[degree] = std::move(coeff);
        }
        return p;
    }

    bool is_zero() const { return coeffs_.empty(); }
    std::size_t degree() const { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    Int coeff(std::size_t d) const { return d < coeffs_.size() ? coeffs_[d] : Int(0); }

    void add_term(std::size_t degree, const Int& coeff) {
        if (coeff == 0) return;
        if (coeffs_.size() <= degree) coeffs_.resize(degree + 1, Int(0));
        coeffs_[degree] += coeff;
        trim();
    }

    Poly& operator+=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Int(0));
        for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        trim();
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly{};
        Poly r;
        r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
        r.trim();
        return r;
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(Poly a, const Int& s) {
        for (auto& c : a.coeffs_) c *= s;
        a.trim();
        return a;
    }

    Poly pow(std::size_t e) const {
        Poly result = one();
        Poly base = *this;
        while (e != 0) {
            if (e & 1) result *= base;
            if ((e >>= 1) != 0) base *= base;
        }
        return result;
    }

    Int eval(const Int& x) const {
        Int acc = 0;
        for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
        return acc;
    }

    /// Divides every coefficient by d; throws InexactDivision on a remainder.
    Poly divided_exactly(const Int& d) const {
        if (d == 0) throw InexactDivision("division of a polynomial by zero");
        Poly r;
        r.coeffs_.reserve(coeffs_.size());
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] % d != 0)
                throw InexactDivision("coefficient of z^" + std::to_string(i) +
                                      " is not divisible by " + d.str());
            r.coeffs_.push_back(coeffs_[i] / d);
        }
        r.trim();
        return r;
    }

    bool operator==(const Poly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Ascending-power rendering, e.g. "1 + 8z - 9z^2"; the zero polynomial
    /// renders as "0".
    std::string str(const char* var = "z") const {
        if (coeffs_.empty()) return "0";
        std::string out;
        for (std::size_t d = 0; d < coeffs_.size(); ++d) {
            const Int& c = coeffs_[d];
            if (c == 0) continue;
            const bool negative = c < 0;
            const Int mag = negative ? Int(-c) : c;
            if (out.empty()) {
                if (negative) out += "-";
            } else {
                out += negative ? " - " : " + ";
            }
            if (d == 0) {
                out += mag.str();
            } else {
                if (mag != 1) out += mag.str();
                out += var;
                if (d > 1) out += "^" + std::to_string(d);
            }
        }
        return out.empty() ? "0" : out;
    }

  private:
    std::vector<Int> coeffs_;

    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }
};

/// Quotient and remainder of num by a monic divisor, over Z.
inline std::pair<Poly, Poly> divmod_monic(const Poly& num, const Poly& den) {
    if (den.is_zero() || den.coeffs().back() != 1)
        throw Error("divmod_monic requires a monic divisor");
    std::vector<Int> rem(num.coeffs());
    const std::size_t dd = den.degree();
    Poly quot;
    while (rem.size() > dd) {
        const std::size_t shift = rem.size() - 1 - dd;
        const Int lead = rem.back();
        if (lead != 0) {
            quot.add_term(shift, lead);
            for (std::size_t i = 0; i <= dd; ++i) rem[shift + i] -= lead * den.coeff(i);
        }
        rem.pop_back();
    }
    Poly r;
    for (std::size_t i = 0; i < rem.size(); ++i) r.add_term(i, rem[i]);
    return {std::move(quot), std::move(r)};
}

}  // namespace mspotty
