#pragma once

#include <cstddef>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "mspotty/poly.hpp"

namespace mspotty {

/// M-th cyclotomic polynomial Phi_M, obtained by dividing x^M - 1 by the
/// cyclotomic polynomials of all proper divisors of M.  Results are cached;
/// the fill is idempotent, so concurrent callers observe the same values.
inline const Poly& cyclotomic_polynomial(std::size_t M) {
    if (M == 0) throw OutOfRange("cyclotomic polynomial needs M >= 1");
    static std::map<std::size_t, Poly> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(M); it != cache.end()) return it->second;
    for (std::size_t d = 1; d <= M; ++d) {
        if (M % d != 0 || cache.contains(d)) continue;
        Poly num = Poly::monomial(d) - Poly::one();  // x^d - 1
        for (std::size_t e = 1; e < d; ++e)
            if (d % e == 0) num = divmod_monic(num, cache.at(e)).first;
        cache.emplace(d, std::move(num));
    }
    return cache.at(M);
}

/// Exact element of the cyclotomic integers Z[zeta_M], stored as the M
/// coefficients of 1, zeta, ..., zeta^{M-1} in Z[x]/(x^M - 1).  Two values
/// are equal iff their difference vanishes modulo Phi_M.
class CycInt {
  public:
    explicit CycInt(std::size_t modulus) : modulus_(checked(modulus)), coeffs_(modulus, Int(0)) {}

    /// The monomial zeta_M^e (any integer exponent; reduced mod M).
    static CycInt root(std::size_t modulus, long long exponent) {
        CycInt r(modulus);
        r.add_root(exponent);
        return r;
    }

    std::size_t modulus() const { return modulus_; }
    const std::vector<Int>& coeffs() const { return coeffs_; }

    /// In-place += zeta_M^e.  Hot path of the character-sum oracles.
    void add_root(long long exponent) {
        const long long m = static_cast<long long>(modulus_);
        coeffs_[static_cast<std::size_t>(((exponent % m) + m) % m)] += 1;
    }

    CycInt& operator+=(const CycInt& o) {
        check_same_modulus(o);
        for (std::size_t i = 0; i < modulus_; ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }

    CycInt& operator-=(const CycInt& o) {
        check_same_modulus(o);
        for (std::size_t i = 0; i < modulus_; ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }

    friend CycInt operator+(CycInt a, const CycInt& b) { return a += b; }
    friend CycInt operator-(CycInt a, const CycInt& b) { return a -= b; }

    /// Cyclic convolution: zeta^i * zeta^j = zeta^{(i+j) mod M}.
    friend CycInt operator*(const CycInt& a, const CycInt& b) {
        a.check_same_modulus(b);
        CycInt r(a.modulus_);
        for (std::size_t i = 0; i < a.modulus_; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < a.modulus_; ++j) {
                if (b.coeffs_[j] == 0) continue;
                r.coeffs_[(i + j) % a.modulus_] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        return r;
    }

    CycInt& operator*=(const CycInt& o) { return *this = *this * o; }

    /// Canonical representative modulo Phi_M (degree < phi(M)).
    Poly reduced() const {
        Poly p;
        for (std::size_t i = 0; i < modulus_; ++i) p.add_term(i, coeffs_[i]);
        return divmod_monic(p, cyclotomic_polynomial(modulus_)).second;
    }

    /// The value as a rational integer, or absent when it is not one.
    std::optional<Int> as_integer() const {
        const Poly r = reduced();
        if (r.is_zero()) return Int(0);
        if (r.degree() == 0) return r.coeff(0);
        return std::nullopt;
    }

    /// Equality as elements of Z[zeta_M].
    bool operator==(const CycInt& o) const {
        check_same_modulus(o);
        return (*this - o).reduced().is_zero();
    }
    bool operator!=(const CycInt& o) const { return !(*this == o); }

  private:
    std::size_t modulus_;
    std::vector<Int> coeffs_;

    static std::size_t checked(std::size_t m) {
        if (m == 0) throw OutOfRange("cyclotomic modulus must be >= 1");
        return m;
    }

    void check_same_modulus(const CycInt& o) const {
        if (modulus_ != o.modulus_)
            throw ModulusMismatch("cyclotomic moduli differ: " + std::to_string(modulus_) +
                                  " vs " + std::to_string(o.modulus_));
    }
};

}  // namespace mspotty
