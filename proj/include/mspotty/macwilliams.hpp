#pragma once

#include <vector>

#include "mspotty/cyclotomic.hpp"
#include "mspotty/weights.hpp"

namespace mspotty {

/// Closed form of the character sum S^(l)(k, j) over all bytes of RT weight
/// k, paired against a fixed byte of RT weight j:
///   1                  if k = 0
///   l^{k-1} (l - 1)    if 1 <= k <= b - j
///   -l^{k-1}           if k = b + 1 - j
///   0                  if k >= b + 2 - j
inline Int s_value(std::size_t l, std::size_t b, std::size_t k, std::size_t j) {
    if (l < 2) throw OutOfRange("s_value needs l >= 2");
    if (k > b || j > b) throw OutOfRange("s_value needs 0 <= k <= b and 0 <= j <= b");
    if (k == 0) return Int(1);
    if (k <= b - j) return ipow(Int(l), k - 1) * (Int(l) - 1);
    if (k == b + 1 - j) return -ipow(Int(l), k - 1);
    return Int(0);
}

/// The per-byte Fourier kernels V_0 ... V_b for fixed l, b, t:
/// V_j(z) = sum_k S^(l)(k, j) z^{ceil(k/t)}.
struct VTable {
    std::size_t l = 0, b = 0, t = 1;
    std::vector<Poly> polys;
};

inline VTable v_table(std::size_t l, std::size_t b, std::size_t t) {
    if (b < 1 || t < 1 || t > b) throw OutOfRange("v_table needs 1 <= t <= b");
    if (l < 2) throw OutOfRange("v_table needs l >= 2");
    VTable vt{l, b, t, {}};
    vt.polys.reserve(b + 1);
    for (std::size_t j = 0; j <= b; ++j) {
        Poly v;
        for (std::size_t k = 0; k <= b; ++k) v.add_term(ceil_div(k, t), s_value(l, b, k, j));
        vt.polys.push_back(std::move(v));
    }
    return vt;
}

/// Character sums over the byte space R^b, bucketed by RT weight: entry k is
/// sum over all v with rt_weight(v) = k of chi(<witness, v>), with the byte
/// pairing reversed.  Exact arithmetic in Z[zeta_M]; entries must reduce to
/// rational integers or the ring's character table is broken.
inline std::vector<Int> s_row_oracle(const FiniteRing& ring, std::size_t b,
                                     const Codeword& witness,
                                     std::size_t max_sweep = kDefaultMaxSweep) {
    if (witness.size() != b) throw LayoutMismatch("witness byte must have length b");
    if (ipow(Int(ring.order), b) > Int(max_sweep))
        throw SizeLimitExceeded("oracle sweep exceeds the limit of " + std::to_string(max_sweep));
    const ByteLayout single{1, b, 1};
    std::vector<CycInt> sums(b + 1, CycInt(ring.char_modulus));
    Codeword v(b, 0);
    do {
        const Elem ip = inner_product(ring, single, witness, v);
        sums[rt_weight(v)].add_root(ring.chi(ip));
    } while (next_vector(v, ring.order));

    std::vector<Int> out;
    out.reserve(b + 1);
    for (std::size_t k = 0; k <= b; ++k) {
        auto n = sums[k].as_integer();
        if (!n)
            throw NotAnInteger("character sum for k = " + std::to_string(k) +
                               " is not a rational integer over " + ring.name());
        out.push_back(std::move(*n));
    }
    return out;
}

/// S^(l)(k, j) evaluated by exhaustive character summation, with the
/// canonical witness byte (0, ..., 0, 1, 0, ..., 0) carrying its 1 at
/// position j (the zero byte for j = 0).
inline Int s_value_oracle(const FiniteRing& ring, std::size_t b, std::size_t k, std::size_t j,
                          std::size_t max_sweep = kDefaultMaxSweep) {
    if (k > b || j > b) throw OutOfRange("s_value_oracle needs 0 <= k <= b and 0 <= j <= b");
    Codeword witness(b, 0);
    if (j > 0) witness[j - 1] = ring.one;
    return s_row_oracle(ring, b, witness, max_sweep)[k];
}

/// The MacWilliams transform: W_dual(z) = (1/|C|) sum_alpha A_alpha
/// prod_j V_j(z)^{alpha_j}, with an exact division in every coefficient.
inline Poly transform(const DistributionTable& dist, const Int& card_c, const VTable& vt) {
    if (dist.layout.b != vt.b || dist.layout.t != vt.t || dist.ring_order != vt.l)
        throw DimensionMismatch("distribution table and V-table disagree on (l, b, t)");
    Poly sum;
    for (const auto& [alphas, count] : dist.counts) {
        if (alphas.size() != vt.b + 1)
            throw DimensionMismatch("weight vector length does not match b + 1");
        Poly term = Poly::one();
        for (std::size_t j = 0; j <= vt.b; ++j)
            if (alphas[j] > 0) term *= vt.polys[j].pow(alphas[j]);
        sum += term * count;
    }
    return sum.divided_exactly(card_c);
}

/// Fourier transform of f(v) = z^{mspotty_weight(v)} at the codeword c,
/// computed as an exact character sum over the whole space R^N.  Equals
/// prod_i V_{rt_weight(c_i)}(z), which is what the identity's proof needs.
inline Poly fourier_oracle(const FiniteRing& ring, const ByteLayout& layout, const Codeword& c,
                           std::size_t max_sweep = kDefaultMaxSweep) {
    layout.validate();
    const std::size_t N = layout.length();
    if (c.size() != N) throw LayoutMismatch("codeword length does not match the byte layout");
    if (ipow(Int(ring.order), N) > Int(max_sweep))
        throw SizeLimitExceeded("oracle sweep exceeds the limit of " + std::to_string(max_sweep));

    const std::size_t max_degree = layout.n * ceil_div(layout.b, layout.t);
    std::vector<CycInt> sums(max_degree + 1, CycInt(ring.char_modulus));
    Codeword v(N, 0);
    do {
        const Elem ip = inner_product(ring, layout, c, v);
        sums[mspotty_weight(v, layout)].add_root(ring.chi(ip));
    } while (next_vector(v, ring.order));

    Poly out;
    for (std::size_t d = 0; d <= max_degree; ++d) {
        auto n = sums[d].as_integer();
        if (!n)
            throw NotAnInteger("Fourier coefficient of z^" + std::to_string(d) +
                               " is not a rational integer over " + ring.name());
        out.add_term(d, *n);
    }
    return out;
}

/// Both routes to the dual enumerator, for exact comparison.
struct IdentityReport {
    bool pass = false;
    Int card_code;
    Int card_dual;
    Poly code_enumerator;
    Poly via_transform;  // transform of distribution(C)
    Poly via_dual;       // enumerator of distribution(dual(C))
    DistributionTable code_distribution;
    DistributionTable dual_distribution;
};

/// Computes W_dual by the transform and by brute-force dual enumeration and
/// reports exact polynomial equality.
inline IdentityReport verify_identity(const Code& code, std::size_t max_sweep = kDefaultMaxSweep) {
    IdentityReport report;
    report.card_code = Int(code.size());
    report.code_distribution = distribution(code);
    report.code_enumerator = enumerator(report.code_distribution);

    const VTable vt = v_table(code.ring.order, code.layout.b, code.layout.t);
    report.via_transform = transform(report.code_distribution, report.card_code, vt);

    const Code dual_code = dual(code, max_sweep);
    report.card_dual = Int(dual_code.size());
    report.dual_distribution = distribution(dual_code);
    report.via_dual = enumerator(report.dual_distribution);

    report.pass = (report.via_transform == report.via_dual);
    return report;
}

}  // namespace mspotty
