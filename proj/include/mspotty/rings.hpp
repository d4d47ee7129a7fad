#pragma once

#include <cctype>
#include <cstdint>
#include <numeric>
#include <string>
#include <string_view>
#include <vector>

#include "mspotty/errors.hpp"

namespace mspotty {

/// Index of a ring element in [0, l).  Elements carry no ring reference;
/// every operation takes the ring explicitly.
using Elem = std::uint16_t;

/// Largest ring order constructed by default (configurable up to 65535).
inline constexpr std::size_t kDefaultMaxOrder = 256;

/// Symbolic description of a finite commutative Frobenius ring.  Canonical
/// text grammar (whitespace-insensitive, coefficients constant term first):
///
///   Z<m> | F(<p>,<r>;<coeffs>) | GR(<p>,<n>,<r>;<coeffs>)
///       | chain(<p>,<s>,<k>;<coeffs>) | Rk(<k>) | prod(<spec>,<spec>,...)
///
/// e.g. `Z6`, `F(2,2;1,1,1)`, `chain(2,1,2;0,1)` (= F_2 + uF_2 with u^2 = 0).
struct RingSpec {
    enum class Family { Zmod, GaloisField, GaloisRing, ChainRing, Rk, Product };

    Family family = Family::Zmod;
    // Parameter slots by family:
    //   Zmod:        a = m
    //   GaloisField: a = p, b = r          modulus over F_p, degree r
    //   GaloisRing:  a = p, b = n, c = r   modulus over Z_{p^n}, degree r
    //   ChainRing:   a = p, b = s, c = k   modulus over F_p of the residue
    //                                      field F_q (q = p^s), degree s
    //   Rk:          a = k
    unsigned a = 0, b = 0, c = 0;
    std::vector<unsigned> modulus;
    std::vector<RingSpec> components;  // Product only

    bool operator==(const RingSpec&) const = default;

    std::string str() const {
        auto list = [](const std::vector<unsigned>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(v[i]);
            }
            return s;
        };
        switch (family) {
            case Family::Zmod: return "Z" + std::to_string(a);
            case Family::GaloisField:
                return "F(" + std::to_string(a) + "," + std::to_string(b) + ";" + list(modulus) + ")";
            case Family::GaloisRing:
                return "GR(" + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c) + ";" + list(modulus) + ")";
            case Family::ChainRing:
                return "chain(" + std::to_string(a) + "," + std::to_string(b) + "," +
                       std::to_string(c) + ";" + list(modulus) + ")";
            case Family::Rk: return "Rk(" + std::to_string(a) + ")";
            case Family::Product: {
                std::string s = "prod(";
                for (std::size_t i = 0; i < components.size(); ++i) {
                    if (i) s += ",";
                    s += components[i].str();
                }
                return s + ")";
            }
        }
        return {};
    }
};

/// A fully tabulated finite commutative ring together with a generating
/// character chi(x) = zeta_M^{char_exp[x]}.
///
/// Index <-> element bijections (constant/least-significant digit first):
///   Zmod(m):          index = the residue itself
///   GaloisField(p,r): sum a_i x^i        -> sum a_i p^i
///   GaloisRing(p,n,r): sum a_i x^i, a_i in Z_{p^n} -> sum a_i (p^n)^i
///   ChainRing(p,s,k): sum d_i u^i, d_i in F_q -> sum index(d_i) q^i
///   Rk(k):            sum c_A u_A over subsets A of {1..k};
///                     index = sum c_A 2^{mask(A)}, mask(A) = sum_{i in A} 2^{i-1}
///   Product:          mixed radix, leftmost component least significant
struct FiniteRing {
    RingSpec spec;
    std::size_t order = 0;         // l
    Elem one = 0;
    std::size_t char_modulus = 1;  // M
    std::vector<std::uint32_t> char_exp;
    std::vector<Elem> add_tab;  // l*l, row-major
    std::vector<Elem> mul_tab;
    std::vector<Elem> neg_tab;
    std::vector<std::string> elem_names;

    Elem add(Elem x, Elem y) const { return add_tab[std::size_t(x) * order + y]; }
    Elem mul(Elem x, Elem y) const { return mul_tab[std::size_t(x) * order + y]; }
    Elem neg(Elem x) const { return neg_tab[x]; }
    Elem sub(Elem x, Elem y) const { return add(x, neg(y)); }
    std::uint32_t chi(Elem x) const { return char_exp[x]; }
    std::string name() const { return spec.str(); }
};

inline Elem pow_elem(const FiniteRing& ring, Elem base, unsigned long long e) {
    Elem r = ring.one;
    while (e != 0) {
        if (e & 1) r = ring.mul(r, base);
        base = ring.mul(base, base);
        e >>= 1;
    }
    return r;
}

namespace detail {

inline bool is_prime(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<unsigned> to_digits(std::size_t index, unsigned long long base, std::size_t len) {
    std::vector<unsigned> d(len);
    for (std::size_t i = 0; i < len; ++i) {
        d[i] = static_cast<unsigned>(index % base);
        index /= base;
    }
    return d;
}

inline std::size_t from_digits(const std::vector<unsigned>& digits, unsigned long long base) {
    std::size_t index = 0;
    for (std::size_t i = digits.size(); i-- > 0;) index = index * base + digits[i];
    return index;
}

/// Remainder of `a` under division by a monic polynomial, coefficients mod base.
inline std::vector<unsigned> poly_rem(std::vector<unsigned> a, const std::vector<unsigned>& div,
                                      unsigned long long base) {
    const std::size_t d = div.size() - 1;
    while (a.size() > d) {
        const unsigned long long lead = a.back();
        const std::size_t shift = a.size() - 1 - d;
        if (lead != 0)
            for (std::size_t i = 0; i <= d; ++i) {
                const unsigned long long sub = (lead * div[i]) % base;
                a[shift + i] = static_cast<unsigned>((a[shift + i] + base - sub) % base);
            }
        a.pop_back();
    }
    a.resize(d, 0);
    return a;
}

/// Irreducibility over F_p by exhaustive search for a monic divisor of
/// degree 1..deg/2.  Cheap at the supported sizes.
inline bool is_irreducible(const std::vector<unsigned>& modulus, unsigned p) {
    const std::size_t r = modulus.size() - 1;
    for (std::size_t d = 1; 2 * d <= r; ++d) {
        std::size_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::size_t idx = 0; idx < count; ++idx) {
            std::vector<unsigned> divisor = to_digits(idx, p, d);
            divisor.push_back(1);
            const auto rem = poly_rem(modulus, divisor, p);
            bool zero = true;
            for (unsigned c : rem) zero &= (c == 0);
            if (zero) return false;
        }
    }
    return true;
}

inline void check_modulus(const std::vector<unsigned>& modulus, std::size_t degree,
                          unsigned long long base, const std::string& where) {
    if (modulus.size() != degree + 1)
        throw SpecError(where + ": modulus must have degree " + std::to_string(degree));
    for (unsigned c : modulus)
        if (c >= base) throw SpecError(where + ": modulus coefficient out of range");
    if (modulus.back() != 1) throw SpecError(where + ": modulus must be monic");
}

inline std::size_t checked_order(unsigned long long base, unsigned exp, std::size_t max_order) {
    unsigned long long v = 1;
    for (unsigned i = 0; i < exp; ++i) {
        v *= base;
        if (v > max_order)
            throw SizeLimitExceeded("ring order exceeds the configured limit of " +
                                    std::to_string(max_order));
    }
    return static_cast<std::size_t>(v);
}

inline void fill_neg_table(FiniteRing& ring) {
    const std::size_t l = ring.order;
    ring.neg_tab.resize(l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j)
            if (ring.add_tab[i * l + j] == 0) {
                ring.neg_tab[i] = static_cast<Elem>(j);
                break;
            }
}

inline std::string poly_elem_name(const std::vector<unsigned>& digits, const char* var) {
    std::string out;
    for (std::size_t i = digits.size(); i-- > 0;) {
        const unsigned a = digits[i];
        if (a == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0) {
            out += std::to_string(a);
            continue;
        }
        if (a != 1) out += std::to_string(a);
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

inline FiniteRing build_zmod(const RingSpec& spec, std::size_t max_order) {
    const unsigned m = spec.a;
    if (m < 2) throw SpecError("Zmod needs m >= 2");
    if (m > max_order)
        throw SizeLimitExceeded("ring order exceeds the configured limit of " +
                                std::to_string(max_order));
    FiniteRing ring;
    ring.spec = spec;
    ring.order = m;
    ring.one = 1;
    ring.char_modulus = m;
    ring.add_tab.resize(std::size_t(m) * m);
    ring.mul_tab.resize(std::size_t(m) * m);
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            ring.add_tab[i * m + j] = static_cast<Elem>((i + j) % m);
            ring.mul_tab[i * m + j] = static_cast<Elem>((i * j) % m);
        }
    fill_neg_table(ring);
    ring.char_exp.resize(m);
    ring.elem_names.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        ring.char_exp[i] = static_cast<std::uint32_t>(i);
        ring.elem_names[i] = std::to_string(i);
    }
    return ring;
}

/// Shared table construction for F_{p^r} and GR(p^n, r): polynomials of
/// degree < r with digit coefficients mod `base`, reduced by a monic modulus.
inline FiniteRing build_poly_quotient(const RingSpec& spec, unsigned long long base, unsigned r,
                                      std::size_t max_order, const char* var) {
    const std::size_t l = checked_order(base, r, max_order);
    std::vector<std::vector<unsigned>> digits(l);
    for (std::size_t i = 0; i < l; ++i) digits[i] = to_digits(i, base, r);

    FiniteRing ring;
    ring.spec = spec;
    ring.order = l;
    ring.one = 1;
    ring.add_tab.resize(l * l);
    ring.mul_tab.resize(l * l);
    std::vector<unsigned> prod(2 * r - 1);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            std::vector<unsigned> sum(r);
            for (std::size_t d = 0; d < r; ++d)
                sum[d] = static_cast<unsigned>((digits[i][d] + digits[j][d]) % base);
            ring.add_tab[i * l + j] = static_cast<Elem>(from_digits(sum, base));

            std::fill(prod.begin(), prod.end(), 0u);
            for (std::size_t di = 0; di < r; ++di)
                for (std::size_t dj = 0; dj < r; ++dj)
                    prod[di + dj] = static_cast<unsigned>(
                        (prod[di + dj] +
                         static_cast<unsigned long long>(digits[i][di]) * digits[j][dj]) %
                        base);
            const auto rem = poly_rem(prod, spec.modulus, base);
            ring.mul_tab[i * l + j] = static_cast<Elem>(from_digits(rem, base));
        }
    fill_neg_table(ring);
    ring.elem_names.resize(l);
    for (std::size_t i = 0; i < l; ++i) ring.elem_names[i] = poly_elem_name(digits[i], var);
    return ring;
}

inline FiniteRing build_gf(const RingSpec& spec, std::size_t max_order) {
    const unsigned p = spec.a, r = spec.b;
    if (!is_prime(p)) throw NonPrimeParameter(p);
    if (r < 1) throw SpecError("GaloisField needs r >= 1");
    check_modulus(spec.modulus, r, p, "F(" + std::to_string(p) + "," + std::to_string(r) + ")");
    if (!is_irreducible(spec.modulus, p))
        throw ReducibleModulus("modulus of " + spec.str() + " is reducible over F_" +
                               std::to_string(p));

    FiniteRing ring = build_poly_quotient(spec, p, r, max_order, "x");

    // chi(x) = zeta_p^{Tr(x)} with Tr(x) = x + x^p + ... + x^{p^{r-1}}.
    // The trace lands in the prime subfield, whose elements are exactly the
    // indices 0..p-1 under the bijection above.
    ring.char_modulus = p;
    ring.char_exp.resize(ring.order);
    for (std::size_t e = 0; e < ring.order; ++e) {
        Elem acc = 0;
        Elem frob = static_cast<Elem>(e);
        for (unsigned i = 0; i < r; ++i) {
            acc = ring.add(acc, frob);
            frob = pow_elem(ring, frob, p);
        }
        if (acc >= p) throw Error("internal: trace left the prime subfield");
        ring.char_exp[e] = acc;
    }
    return ring;
}

inline FiniteRing build_gr(const RingSpec& spec, std::size_t max_order) {
    const unsigned p = spec.a, n = spec.b, r = spec.c;
    if (!is_prime(p)) throw NonPrimeParameter(p);
    if (n < 1 || r < 1) throw SpecError("GaloisRing needs n >= 1 and r >= 1");
    unsigned long long q = 1;
    for (unsigned i = 0; i < n; ++i) {
        q *= p;  // p^n; the ring order q^r is at least q
        if (q > max_order)
            throw SizeLimitExceeded("ring order exceeds the configured limit of " +
                                    std::to_string(max_order));
    }
    check_modulus(spec.modulus, r, q, spec.str());
    std::vector<unsigned> reduced(spec.modulus.size());
    for (std::size_t i = 0; i < spec.modulus.size(); ++i) reduced[i] = spec.modulus[i] % p;
    if (!is_irreducible(reduced, p))
        throw ReducibleModulus("modulus of " + spec.str() + " is reducible modulo " +
                               std::to_string(p));

    FiniteRing ring = build_poly_quotient(spec, q, r, max_order, "x");

    // chi(a) = zeta_{p^n}^{a_{r-1}}: the exponent is the top polynomial
    // coefficient of a.
    ring.char_modulus = static_cast<std::size_t>(q);
    ring.char_exp.resize(ring.order);
    for (std::size_t e = 0; e < ring.order; ++e)
        ring.char_exp[e] = to_digits(e, q, r)[r - 1];
    return ring;
}

inline FiniteRing build_chain(const RingSpec& spec, std::size_t max_order) {
    const unsigned p = spec.a, s = spec.b, k = spec.c;
    if (s < 1 || k < 1) throw SpecError("chain ring needs s >= 1 and k >= 1");

    // Residue field F_q, q = p^s; its tables drive the digit arithmetic and
    // its trace supplies the character exponent.
    RingSpec field_spec;
    field_spec.family = RingSpec::Family::GaloisField;
    field_spec.a = p;
    field_spec.b = s;
    field_spec.modulus = spec.modulus;
    const FiniteRing field = build_gf(field_spec, max_order);
    const std::size_t q = field.order;

    const std::size_t l = checked_order(q, k, max_order);
    std::vector<std::vector<unsigned>> digits(l);
    for (std::size_t i = 0; i < l; ++i) digits[i] = to_digits(i, q, k);

    FiniteRing ring;
    ring.spec = spec;
    ring.order = l;
    ring.one = field.one;  // 1 sits in the u^0 digit
    ring.add_tab.resize(l * l);
    ring.mul_tab.resize(l * l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            std::vector<unsigned> sum(k), prod(k, 0);
            for (std::size_t d = 0; d < k; ++d)
                sum[d] = field.add(static_cast<Elem>(digits[i][d]),
                                   static_cast<Elem>(digits[j][d]));
            // Truncated convolution: u^k = 0 kills all higher terms.
            for (std::size_t di = 0; di < k; ++di)
                for (std::size_t dj = 0; di + dj < k; ++dj)
                    prod[di + dj] = field.add(
                        static_cast<Elem>(prod[di + dj]),
                        field.mul(static_cast<Elem>(digits[i][di]), static_cast<Elem>(digits[j][dj])));
            ring.add_tab[i * l + j] = static_cast<Elem>(from_digits(sum, q));
            ring.mul_tab[i * l + j] = static_cast<Elem>(from_digits(prod, q));
        }
    fill_neg_table(ring);

    // chi(r) = zeta_p^{Tr_{F_q/F_p}(a_{k-1})}, the trace of the u^{k-1} digit.
    ring.char_modulus = p;
    ring.char_exp.resize(l);
    for (std::size_t e = 0; e < l; ++e)
        ring.char_exp[e] = field.char_exp[digits[e][k - 1]];

    ring.elem_names.resize(l);
    for (std::size_t e = 0; e < l; ++e) {
        std::string out;
        for (std::size_t i = k; i-- > 0;) {
            const unsigned d = digits[e][i];
            if (d == 0) continue;
            if (!out.empty()) out += "+";
            const std::string& cn = field.elem_names[d];
            if (i == 0) {
                out += cn;
                continue;
            }
            if (cn != "1") out += (cn.find('+') != std::string::npos) ? "(" + cn + ")" : cn;
            out += "u";
            if (i > 1) out += "^" + std::to_string(i);
        }
        ring.elem_names[e] = out.empty() ? "0" : out;
    }
    return ring;
}

inline FiniteRing build_rk(const RingSpec& spec, std::size_t max_order) {
    const unsigned k = spec.a;
    if (k < 1) throw SpecError("Rk needs k >= 1");
    if (k >= 6 || (std::size_t(1) << (std::size_t(1) << k)) > max_order)
        throw SizeLimitExceeded("ring order exceeds the configured limit of " +
                                std::to_string(max_order));
    const unsigned nsubsets = 1u << k;        // monomials u_A, A subset of {1..k}
    const std::size_t l = std::size_t(1) << nsubsets;

    FiniteRing ring;
    ring.spec = spec;
    ring.order = l;
    ring.one = 1;  // c_{emptyset} = 1
    ring.add_tab.resize(l * l);
    ring.mul_tab.resize(l * l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            ring.add_tab[i * l + j] = static_cast<Elem>(i ^ j);
            // u_A * u_B = u_{A union B} when A and B are disjoint, else 0
            // (each u_i squares to zero).  Bit position a of an index is the
            // coefficient of the monomial whose variable set has mask a.
            std::size_t prod = 0;
            for (unsigned a = 0; a < nsubsets; ++a) {
                if (!(i >> a & 1)) continue;
                for (unsigned b = 0; b < nsubsets; ++b) {
                    if (!(j >> b & 1)) continue;
                    if ((a & b) == 0) prod ^= std::size_t(1) << (a | b);
                }
            }
            ring.mul_tab[i * l + j] = static_cast<Elem>(prod);
        }
    fill_neg_table(ring);

    // chi(r) = (-1)^{wt(c_A)}: the coefficient vector read as a binary word.
    ring.char_modulus = 2;
    ring.char_exp.resize(l);
    ring.elem_names.resize(l);
    for (std::size_t e = 0; e < l; ++e) {
        unsigned bits = 0;
        for (unsigned a = 0; a < nsubsets; ++a) bits += (e >> a) & 1;
        ring.char_exp[e] = bits & 1;

        std::string out;
        for (unsigned a = 0; a < nsubsets; ++a) {
            if (!(e >> a & 1)) continue;
            if (!out.empty()) out += "+";
            if (a == 0) {
                out += "1";
                continue;
            }
            for (unsigned v = 0; v < k; ++v)
                if (a >> v & 1) out += "u" + std::to_string(v + 1);
        }
        ring.elem_names[e] = out.empty() ? "0" : out;
    }
    return ring;
}

inline FiniteRing build(const RingSpec& spec, std::size_t max_order);

inline FiniteRing build_product(const RingSpec& spec, std::size_t max_order) {
    if (spec.components.empty()) throw EmptyProduct();
    std::vector<FiniteRing> parts;
    parts.reserve(spec.components.size());
    std::size_t l = 1;
    for (const auto& comp : spec.components) {
        parts.push_back(build(comp, max_order));
        if (l > max_order / parts.back().order)
            throw SizeLimitExceeded("ring order exceeds the configured limit of " +
                                    std::to_string(max_order));
        l *= parts.back().order;
    }

    // Mixed-radix indexing, leftmost component least significant.
    const std::size_t nparts = parts.size();
    auto decode = [&](std::size_t index) {
        std::vector<std::size_t> c(nparts);
        for (std::size_t i = 0; i < nparts; ++i) {
            c[i] = index % parts[i].order;
            index /= parts[i].order;
        }
        return c;
    };
    auto encode = [&](const std::vector<std::size_t>& c) {
        std::size_t index = 0;
        for (std::size_t i = nparts; i-- > 0;) index = index * parts[i].order + c[i];
        return index;
    };

    FiniteRing ring;
    ring.spec = spec;
    ring.order = l;
    ring.add_tab.resize(l * l);
    ring.mul_tab.resize(l * l);
    std::vector<std::vector<std::size_t>> comps(l);
    for (std::size_t i = 0; i < l; ++i) comps[i] = decode(i);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) {
            std::vector<std::size_t> sum(nparts), prod(nparts);
            for (std::size_t d = 0; d < nparts; ++d) {
                sum[d] = parts[d].add(static_cast<Elem>(comps[i][d]), static_cast<Elem>(comps[j][d]));
                prod[d] = parts[d].mul(static_cast<Elem>(comps[i][d]), static_cast<Elem>(comps[j][d]));
            }
            ring.add_tab[i * l + j] = static_cast<Elem>(encode(sum));
            ring.mul_tab[i * l + j] = static_cast<Elem>(encode(prod));
        }
    fill_neg_table(ring);

    std::vector<std::size_t> ones(nparts);
    for (std::size_t d = 0; d < nparts; ++d) ones[d] = parts[d].one;
    ring.one = static_cast<Elem>(encode(ones));

    // chi = product of the component characters: lift each exponent into
    // Z_M with M = lcm of the component moduli.
    std::size_t M = 1;
    for (const auto& part : parts) M = std::lcm(M, part.char_modulus);
    ring.char_modulus = M;
    ring.char_exp.resize(l);
    ring.elem_names.resize(l);
    for (std::size_t e = 0; e < l; ++e) {
        std::size_t exp = 0;
        std::string name = "(";
        for (std::size_t d = 0; d < nparts; ++d) {
            exp += (M / parts[d].char_modulus) * parts[d].char_exp[comps[e][d]];
            if (d) name += ",";
            name += parts[d].elem_names[comps[e][d]];
        }
        ring.char_exp[e] = static_cast<std::uint32_t>(exp % M);
        ring.elem_names[e] = name + ")";
    }
    return ring;
}

/// Constructs the tabulated ring described by `spec`.
inline FiniteRing build(const RingSpec& spec, std::size_t max_order) {
    // Element indices are 16-bit; the configurable cap must respect that.
    max_order = std::min<std::size_t>(max_order, 65535);
    switch (spec.family) {
        case RingSpec::Family::Zmod: return build_zmod(spec, max_order);
        case RingSpec::Family::GaloisField: return build_gf(spec, max_order);
        case RingSpec::Family::GaloisRing: return build_gr(spec, max_order);
        case RingSpec::Family::ChainRing: return build_chain(spec, max_order);
        case RingSpec::Family::Rk: return build_rk(spec, max_order);
        case RingSpec::Family::Product: return build_product(spec, max_order);
    }
    throw SpecError("unknown ring family");
}

struct SpecParser {
    std::string text;
    std::size_t pos = 0;

    explicit SpecParser(std::string_view raw) {
        text.reserve(raw.size());
        for (char ch : raw)
            if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw SpecError("ring spec '" + text + "': " + what + " at offset " + std::to_string(pos));
    }

    bool eof() const { return pos >= text.size(); }
    char peek() const { return eof() ? '\0' : text[pos]; }

    bool consume(std::string_view kw) {
        if (text.compare(pos, kw.size(), kw) == 0) {
            pos += kw.size();
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }

    unsigned number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
        unsigned long long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<unsigned long long>(text[pos] - '0');
            if (v > 1'000'000) fail("number too large");
            ++pos;
        }
        return static_cast<unsigned>(v);
    }

    std::vector<unsigned> coeff_list() {
        std::vector<unsigned> out{number()};
        while (peek() == ',') {
            ++pos;
            out.push_back(number());
        }
        return out;
    }

    RingSpec parse() {
        RingSpec r;
        if (consume("GR(")) {
            r.family = RingSpec::Family::GaloisRing;
            r.a = number();
            expect(',');
            r.b = number();
            expect(',');
            r.c = number();
            expect(';');
            r.modulus = coeff_list();
            expect(')');
        } else if (consume("Rk(")) {
            r.family = RingSpec::Family::Rk;
            r.a = number();
            expect(')');
        } else if (consume("F(")) {
            r.family = RingSpec::Family::GaloisField;
            r.a = number();
            expect(',');
            r.b = number();
            expect(';');
            r.modulus = coeff_list();
            expect(')');
        } else if (consume("chain(")) {
            r.family = RingSpec::Family::ChainRing;
            r.a = number();
            expect(',');
            r.b = number();
            expect(',');
            r.c = number();
            expect(';');
            r.modulus = coeff_list();
            expect(')');
        } else if (consume("prod(")) {
            r.family = RingSpec::Family::Product;
            if (peek() == ')') throw EmptyProduct();
            r.components.push_back(parse());
            while (peek() == ',') {
                ++pos;
                r.components.push_back(parse());
            }
            expect(')');
        } else if (consume("Z")) {
            r.family = RingSpec::Family::Zmod;
            r.a = number();
        } else {
            fail("unknown ring family");
        }
        return r;
    }
};

}  // namespace detail

/// Parses the canonical ring-spec grammar.  Whitespace-insensitive;
/// round-trips with RingSpec::str().
inline RingSpec parse_ring_spec(std::string_view spec_text) {
    detail::SpecParser parser(spec_text);
    RingSpec spec = parser.parse();
    if (!parser.eof()) parser.fail("trailing characters");
    return spec;
}

inline FiniteRing build(const RingSpec& spec, std::size_t max_order = kDefaultMaxOrder) {
    return detail::build(spec, max_order);
}

inline FiniteRing build(std::string_view spec_text, std::size_t max_order = kDefaultMaxOrder) {
    return detail::build(parse_ring_spec(spec_text), max_order);
}

/// True iff the kernel of chi contains no nonzero ideal: for every nonzero x
/// some multiple r*x has a nonzero character exponent.
inline bool verify_generating_character(const FiniteRing& ring) {
    const std::size_t M = ring.char_modulus;
    for (std::size_t x = 1; x < ring.order; ++x) {
        bool nontrivial = false;
        for (std::size_t r = 0; r < ring.order && !nontrivial; ++r)
            nontrivial = ring.char_exp[ring.mul(static_cast<Elem>(r), static_cast<Elem>(x))] % M != 0;
        if (!nontrivial) return false;
    }
    return true;
}

/// All invertible elements, ascending by index.
inline std::vector<Elem> units(const FiniteRing& ring) {
    std::vector<Elem> out;
    for (std::size_t x = 0; x < ring.order; ++x)
        for (std::size_t y = 0; y < ring.order; ++y)
            if (ring.mul(static_cast<Elem>(x), static_cast<Elem>(y)) == ring.one) {
                out.push_back(static_cast<Elem>(x));
                break;
            }
    return out;
}

}  // namespace mspotty
