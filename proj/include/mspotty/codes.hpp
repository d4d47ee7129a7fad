#pragma once

#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mspotty/bigint.hpp"
#include "mspotty/rings.hpp"

namespace mspotty {

/// Default bound on brute-force sweeps (span tuples, dual vectors).
inline constexpr std::size_t kDefaultMaxSweep = std::size_t(1) << 24;

/// Byte structure of a code: n bytes of b symbols each, with spotty
/// parameter t (at most t errors per byte count as one spotty error).
struct ByteLayout {
    std::size_t n = 0;
    std::size_t b = 0;
    std::size_t t = 1;

    std::size_t length() const { return n * b; }

    void validate() const {
        if (n < 1 || b < 1) throw OutOfRange("byte layout needs n >= 1 and b >= 1");
        if (t < 1 || t > b) throw OutOfRange("spotty parameter t must satisfy 1 <= t <= b");
    }
};

/// A length-N vector of ring element indices; byte i (1-based) occupies
/// entries [(i-1)b, ib).
using Codeword = std::vector<Elem>;

/// A linear code: the R-span of a generator matrix, fully enumerated.
/// `words` is sorted lexicographically and duplicate-free.  Brute-forced
/// duals carry an empty generator; operations that need spanning vectors
/// fall back to `words` in that case.
struct Code {
    FiniteRing ring;
    ByteLayout layout;
    std::vector<Codeword> generator;
    std::vector<Codeword> words;

    std::size_t size() const { return words.size(); }
};

/// Advances v through R^N in lexicographic order (rightmost digit fastest).
/// Returns false once the all-zero word is reached again.
inline bool next_vector(Codeword& v, std::size_t order) {
    for (std::size_t i = v.size(); i-- > 0;) {
        if (++v[i] < order) return true;
        v[i] = 0;
    }
    return false;
}

/// The inner product with each byte taken in reverse order:
///   <c, v> = sum_i sum_j c_(i,j) * v_(i,b-j+1),
/// the pairing under which the duality of this library is defined.
inline Elem inner_product(const FiniteRing& ring, const ByteLayout& layout, const Codeword& c,
                          const Codeword& v) {
    if (c.size() != layout.length() || v.size() != layout.length())
        throw LayoutMismatch("inner product operands do not match the byte layout");
    Elem acc = 0;
    for (std::size_t i = 0; i < layout.n; ++i) {
        const std::size_t base = i * layout.b;
        for (std::size_t j = 0; j < layout.b; ++j)
            acc = ring.add(acc, ring.mul(c[base + j], v[base + layout.b - 1 - j]));
    }
    return acc;
}

/// Enumerates the R-span of the generator rows by sweeping all l^k
/// coefficient tuples and deduplicating.  Over a non-field ring the span is
/// not parameterized by information symbols; the sweep must cover every
/// coefficient tuple.
inline Code span(const FiniteRing& ring, const ByteLayout& layout,
                 std::vector<Codeword> generator, std::size_t max_sweep = kDefaultMaxSweep) {
    layout.validate();
    const std::size_t N = layout.length();
    for (const auto& row : generator) {
        if (row.size() != N)
            throw DimensionMismatch("generator row length " + std::to_string(row.size()) +
                                    " does not match N = " + std::to_string(N));
        for (Elem e : row)
            if (e >= ring.order)
                throw DimensionMismatch("generator entry " + std::to_string(e) +
                                        " is not an element index of " + ring.name());
    }
    if (ipow(Int(ring.order), generator.size()) > Int(max_sweep))
        throw SizeLimitExceeded("span sweep " + std::to_string(ring.order) + "^" +
                                std::to_string(generator.size()) + " exceeds the limit of " +
                                std::to_string(max_sweep));

    std::set<Codeword> seen;
    const std::size_t k = generator.size();
    // All scalar multiples of every row, precomputed once; the sweep then
    // only adds vectors.
    std::vector<std::vector<Codeword>> scaled(k, std::vector<Codeword>(ring.order, Codeword(N)));
    for (std::size_t d = 0; d < k; ++d)
        for (std::size_t coeff = 0; coeff < ring.order; ++coeff)
            for (std::size_t i = 0; i < N; ++i)
                scaled[d][coeff][i] = ring.mul(static_cast<Elem>(coeff), generator[d][i]);

    std::vector<Codeword> partial(k + 1, Codeword(N, 0));
    auto sweep = [&](auto&& self, std::size_t d) -> void {
        if (d == k) {
            seen.insert(partial[k]);
            return;
        }
        for (std::size_t coeff = 0; coeff < ring.order; ++coeff) {
            for (std::size_t i = 0; i < N; ++i)
                partial[d + 1][i] = ring.add(partial[d][i], scaled[d][coeff][i]);
            self(self, d + 1);
        }
    };
    sweep(sweep, 0);

    Code code;
    code.ring = ring;
    code.layout = layout;
    code.generator = std::move(generator);
    code.words.assign(seen.begin(), seen.end());
    return code;
}

/// Brute-force dual: every v in R^N orthogonal (reversed byte product) to
/// the generator rows, or to every codeword when no generator is stored.
inline Code dual(const Code& code, std::size_t max_sweep = kDefaultMaxSweep) {
    const std::size_t N = code.layout.length();
    if (ipow(Int(code.ring.order), N) > Int(max_sweep))
        throw SizeLimitExceeded("dual sweep " + std::to_string(code.ring.order) + "^" +
                                std::to_string(N) + " exceeds the limit of " +
                                std::to_string(max_sweep));
    const std::vector<Codeword>& tests = code.generator.empty() ? code.words : code.generator;

    Code result;
    result.ring = code.ring;
    result.layout = code.layout;
    Codeword v(N, 0);
    do {
        bool orthogonal = true;
        for (const auto& c : tests)
            if (inner_product(code.ring, code.layout, c, v) != 0) {
                orthogonal = false;
                break;
            }
        if (orthogonal) result.words.push_back(v);
    } while (next_vector(v, code.ring.order));
    return result;
}

/// Generator matrix file: a self-describing header plus one row per line.
///
///   ring=Z3 n=3 b=3 t=2
///   1 0 2 2 2 0 1 0 0
///   0 1 1 0 1 0 0 0 0
struct MatrixFile {
    std::string ring_spec;
    ByteLayout layout;
    std::vector<Codeword> rows;
};

inline MatrixFile read_matrix_text(std::istream& in) {
    MatrixFile mf;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        if (!header_seen) {
            std::string token;
            bool any = false;
            while (ls >> token) {
                any = true;
                const auto eq = token.find('=');
                if (eq == std::string::npos)
                    throw DimensionMismatch("matrix header expects key=value pairs, got '" +
                                            token + "'");
                const std::string key = token.substr(0, eq);
                const std::string value = token.substr(eq + 1);
                if (key == "ring") {
                    mf.ring_spec = value;
                } else if (key == "n" || key == "b" || key == "t") {
                    std::size_t num = 0;
                    try {
                        num = std::stoul(value);
                    } catch (const std::exception&) {
                        throw DimensionMismatch("matrix header: bad number in '" + token + "'");
                    }
                    (key == "n" ? mf.layout.n : key == "b" ? mf.layout.b : mf.layout.t) = num;
                } else {
                    throw DimensionMismatch("matrix header: unknown key '" + key + "'");
                }
            }
            if (!any) continue;  // skip leading blank lines
            if (mf.ring_spec.empty())
                throw DimensionMismatch("matrix header is missing ring=<spec>");
            header_seen = true;
            continue;
        }
        Codeword row;
        unsigned long long entry = 0;
        while (ls >> entry) {
            if (entry > 65535) throw DimensionMismatch("matrix entry out of range");
            row.push_back(static_cast<Elem>(entry));
        }
        if (!ls.eof())
            throw DimensionMismatch("matrix row contains a non-numeric token");
        if (!row.empty()) mf.rows.push_back(std::move(row));
    }
    if (!header_seen) throw DimensionMismatch("matrix file is empty");
    mf.layout.validate();
    return mf;
}

}  // namespace mspotty
