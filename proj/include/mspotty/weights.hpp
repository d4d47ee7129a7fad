#pragma once

#include <map>
#include <span>
#include <string>
#include <vector>

#include "mspotty/codes.hpp"
#include "mspotty/poly.hpp"

namespace mspotty {

/// RT weight of one byte: the 1-based position of the last nonzero entry,
/// 0 for the zero byte.
inline std::size_t rt_weight(std::span<const Elem> byte) {
    for (std::size_t i = byte.size(); i-- > 0;)
        if (byte[i] != 0) return i + 1;
    return 0;
}

inline std::span<const Elem> byte_of(const Codeword& c, const ByteLayout& layout, std::size_t i) {
    return std::span<const Elem>(c).subspan(i * layout.b, layout.b);
}

/// m-spotty RT weight: sum over bytes of ceil(rt_weight / t).
inline std::size_t mspotty_weight(const Codeword& c, const ByteLayout& layout) {
    if (c.size() != layout.length())
        throw LayoutMismatch("codeword length does not match the byte layout");
    std::size_t w = 0;
    for (std::size_t i = 0; i < layout.n; ++i)
        w += ceil_div(rt_weight(byte_of(c, layout, i)), layout.t);
    return w;
}

/// m-spotty RT distance: the m-spotty weight of the difference, taken byte
/// by byte.  Satisfies the metric axioms.
inline std::size_t mspotty_distance(const FiniteRing& ring, const Codeword& c, const Codeword& v,
                                    const ByteLayout& layout) {
    if (c.size() != layout.length() || v.size() != layout.length())
        throw LayoutMismatch("distance operands do not match the byte layout");
    std::size_t d = 0;
    Codeword diff(layout.b);
    for (std::size_t i = 0; i < layout.n; ++i) {
        const std::size_t base = i * layout.b;
        for (std::size_t j = 0; j < layout.b; ++j) diff[j] = ring.sub(c[base + j], v[base + j]);
        d += ceil_div(rt_weight(diff), layout.t);
    }
    return d;
}

/// (alpha_0, ..., alpha_b): alpha_j counts the bytes of RT weight j.
/// The entries sum to n.
using WeightVector = std::vector<std::size_t>;

inline WeightVector weight_vector(const Codeword& c, const ByteLayout& layout) {
    if (c.size() != layout.length())
        throw LayoutMismatch("codeword length does not match the byte layout");
    WeightVector alphas(layout.b + 1, 0);
    for (std::size_t i = 0; i < layout.n; ++i) ++alphas[rt_weight(byte_of(c, layout, i))];
    return alphas;
}

/// Codeword counts A_alpha per RT weight distribution vector, keyed in
/// lexicographic order.
struct DistributionTable {
    ByteLayout layout;
    std::size_t ring_order = 0;
    std::map<WeightVector, Int> counts;

    Int total() const {
        Int sum = 0;
        for (const auto& [alphas, count] : counts) sum += count;
        return sum;
    }
};

inline DistributionTable distribution(const Code& code) {
    DistributionTable table;
    table.layout = code.layout;
    table.ring_order = code.ring.order;
    for (const auto& word : code.words) ++table.counts[weight_vector(word, code.layout)];
    return table;
}

/// W(z) = sum_alpha A_alpha z^{sum_j ceil(j/t) alpha_j}.
inline Poly enumerator(const DistributionTable& dist) {
    Poly w;
    for (const auto& [alphas, count] : dist.counts) {
        std::size_t degree = 0;
        for (std::size_t j = 0; j < alphas.size(); ++j)
            degree += ceil_div(j, dist.layout.t) * alphas[j];
        w.add_term(degree, count);
    }
    return w;
}

/// Plain-text rendering of a distribution table:
///   RT weight vector    number
///   (3, 0, 0, 0)        1
inline std::string table_text(const DistributionTable& dist) {
    std::string out = "RT weight vector\tnumber\n";
    for (const auto& [alphas, count] : dist.counts) {
        out += "(";
        for (std::size_t j = 0; j < alphas.size(); ++j) {
            if (j) out += ", ";
            out += std::to_string(alphas[j]);
        }
        out += ")\t" + count.str() + "\n";
    }
    return out;
}

}  // namespace mspotty
