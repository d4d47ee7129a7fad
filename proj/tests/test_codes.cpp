#include "mspotty/codes.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "mspotty/io_json.hpp"

using namespace mspotty;

namespace {

const char* kTernaryMatrix =
    "ring=Z3 n=3 b=3 t=2\n"
    "1 0 2 2 2 0 1 0 0\n"
    "0 1 1 0 1 0 0 0 0\n";

const char* kZ6Matrix =
    "ring=Z6 n=2 b=3 t=2\n"
    "1 1 1 5 4 2\n"
    "0 3 0 3 3 3\n"
    "0 0 3 3 0 3\n";

Code load_code(const char* text) {
    std::istringstream in(text);
    const MatrixFile mf = read_matrix_text(in);
    return span(build(mf.ring_spec), mf.layout, mf.rows);
}

}  // namespace

TEST(Codes, InnerProductReversedBytes) {
    const auto z3 = build("Z3");
    const ByteLayout layout{1, 3, 1};
    // <(1,0,2), (0,1,1)> = 1*1 + 0*1 + 2*0 = 1
    EXPECT_EQ(inner_product(z3, layout, {1, 0, 2}, {0, 1, 1}), 1);
    EXPECT_EQ(inner_product(z3, layout, {1, 0, 2}, {0, 0, 0}), 0);
    EXPECT_THROW(inner_product(z3, layout, {1, 0}, {0, 1, 1}), LayoutMismatch);
}

TEST(Codes, InnerProductByteLengthOneIsDotProduct) {
    const auto z6 = build("Z6");
    const ByteLayout layout{4, 1, 1};
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(0, 5);
    for (int iter = 0; iter < 50; ++iter) {
        Codeword c(4), v(4);
        for (auto& e : c) e = static_cast<Elem>(entry(rng));
        for (auto& e : v) e = static_cast<Elem>(entry(rng));
        Elem dot = 0;
        for (std::size_t i = 0; i < 4; ++i) dot = z6.add(dot, z6.mul(c[i], v[i]));
        EXPECT_EQ(inner_product(z6, layout, c, v), dot);
    }
}

TEST(Codes, SpanSizes) {
    EXPECT_EQ(load_code(kTernaryMatrix).size(), 9u);
    EXPECT_EQ(load_code(kZ6Matrix).size(), 24u);

    // zero 1xN generator spans only the zero word
    const auto z3 = build("Z3");
    const Code zero = span(z3, ByteLayout{2, 2, 1}, {Codeword(4, 0)});
    EXPECT_EQ(zero.size(), 1u);
    EXPECT_EQ(zero.words[0], Codeword(4, 0));

    // no generator rows at all behaves the same
    EXPECT_EQ(span(z3, ByteLayout{2, 2, 1}, {}).size(), 1u);
}

TEST(Codes, SpanClosure) {
    for (const char* text : {kTernaryMatrix, kZ6Matrix}) {
        const Code code = load_code(text);
        const auto& ring = code.ring;
        const std::size_t N = code.layout.length();
        auto contains = [&](const Codeword& w) {
            return std::binary_search(code.words.begin(), code.words.end(), w);
        };
        EXPECT_TRUE(contains(Codeword(N, 0)));
        for (const auto& u : code.words)
            for (const auto& v : code.words) {
                Codeword sum(N);
                for (std::size_t i = 0; i < N; ++i) sum[i] = ring.add(u[i], v[i]);
                ASSERT_TRUE(contains(sum));
            }
        for (const auto& u : code.words)
            for (std::size_t s = 0; s < ring.order; ++s) {
                Codeword scaled(N);
                for (std::size_t i = 0; i < N; ++i)
                    scaled[i] = ring.mul(static_cast<Elem>(s), u[i]);
                ASSERT_TRUE(contains(scaled));
            }
    }
}

TEST(Codes, SpanUsesRingScalars) {
    // Over GF(4) the span of one row must include x*g and (x+1)*g, not just
    // the integer multiples of g.  With x = index 2: x*x = x+1.
    const auto gf4 = build("F(2,2;1,1,1)");
    const Code code = span(gf4, ByteLayout{2, 1, 1}, {Codeword{1, 2}});
    const std::vector<Codeword> expected{{0, 0}, {1, 2}, {2, 3}, {3, 1}};
    EXPECT_EQ(code.words, expected);
}

TEST(Codes, SpanClosureNonCyclicRings) {
    for (const char* spec : {"F(2,2;1,1,1)", "Rk(1)", "chain(2,1,2;0,1)"}) {
        const auto ring = build(spec);
        const ByteLayout layout{2, 2, 1};
        const Code code = span(ring, layout, {Codeword{1, 2, 0, 3}, Codeword{0, 1, 2, 2}});
        auto contains = [&](const Codeword& w) {
            return std::binary_search(code.words.begin(), code.words.end(), w);
        };
        for (const auto& u : code.words)
            for (std::size_t s = 0; s < ring.order; ++s) {
                Codeword scaled(4);
                for (std::size_t i = 0; i < 4; ++i)
                    scaled[i] = ring.mul(static_cast<Elem>(s), u[i]);
                ASSERT_TRUE(contains(scaled)) << spec;
            }
        for (const auto& u : code.words)
            for (const auto& v : code.words) {
                Codeword sum(4);
                for (std::size_t i = 0; i < 4; ++i) sum[i] = ring.add(u[i], v[i]);
                ASSERT_TRUE(contains(sum)) << spec;
            }
    }
}

TEST(Codes, SpanValidation) {
    const auto z3 = build("Z3");
    EXPECT_THROW(span(z3, ByteLayout{1, 3, 1}, {Codeword{1, 2}}), DimensionMismatch);
    EXPECT_THROW(span(z3, ByteLayout{1, 3, 1}, {Codeword{1, 2, 7}}), DimensionMismatch);
    EXPECT_THROW(span(z3, ByteLayout{1, 3, 5}, {Codeword{1, 2, 0}}), OutOfRange);
    EXPECT_THROW(span(z3, ByteLayout{1, 3, 1}, {Codeword{1, 0, 0}, Codeword{0, 1, 0}}, 8),
                 SizeLimitExceeded);
}

TEST(Codes, DualSizesAndDualityInvariant) {
    const Code ternary = load_code(kTernaryMatrix);
    const Code ternary_dual = dual(ternary);
    EXPECT_EQ(ternary_dual.size(), 2187u);
    EXPECT_EQ(Int(ternary.size()) * Int(ternary_dual.size()), ipow(Int(3), 9));

    const Code z6code = load_code(kZ6Matrix);
    const Code z6dual = dual(z6code);
    EXPECT_EQ(z6dual.size(), 1944u);
    EXPECT_EQ(Int(z6code.size()) * Int(z6dual.size()), ipow(Int(6), 6));
}

TEST(Codes, DoubleDualIsIdentity) {
    const Code code = load_code(kTernaryMatrix);
    const Code back = dual(dual(code));
    EXPECT_EQ(back.words, code.words);
}

TEST(Codes, DualOfFullSpaceIsZero) {
    const auto z2 = build("Z2");
    const Code full = span(z2, ByteLayout{1, 2, 1}, {Codeword{1, 0}, Codeword{0, 1}});
    ASSERT_EQ(full.size(), 4u);
    const Code d = dual(full);
    EXPECT_EQ(d.size(), 1u);
    EXPECT_EQ(d.words[0], Codeword(2, 0));
}

// The reversed-product dual is the bytewise reversal of the standard-product
// dual: reversing within each byte is a coordinate permutation that turns one
// pairing into the other.
TEST(Codes, ReversedDualIsPermutedStandardDual) {
    const Code code = load_code(kZ6Matrix);
    const auto& ring = code.ring;
    const auto& layout = code.layout;
    const std::size_t N = layout.length();

    std::vector<Codeword> standard_dual;
    Codeword v(N, 0);
    do {
        bool ok = true;
        for (const auto& g : code.generator) {
            Elem dot = 0;
            for (std::size_t i = 0; i < N; ++i) dot = ring.add(dot, ring.mul(g[i], v[i]));
            if (dot != 0) {
                ok = false;
                break;
            }
        }
        if (ok) standard_dual.push_back(v);
    } while (next_vector(v, ring.order));

    // reverse every byte of every standard-dual word
    for (auto& w : standard_dual)
        for (std::size_t i = 0; i < layout.n; ++i)
            std::reverse(w.begin() + static_cast<std::ptrdiff_t>(i * layout.b),
                         w.begin() + static_cast<std::ptrdiff_t>((i + 1) * layout.b));
    std::sort(standard_dual.begin(), standard_dual.end());

    EXPECT_EQ(dual(code).words, standard_dual);
}

TEST(Codes, DualSizeLimit) {
    const Code code = load_code(kTernaryMatrix);
    EXPECT_THROW(dual(code, 1000), SizeLimitExceeded);
}

TEST(Codes, MatrixTextParsing) {
    std::istringstream in(kTernaryMatrix);
    const MatrixFile mf = read_matrix_text(in);
    EXPECT_EQ(mf.ring_spec, "Z3");
    EXPECT_EQ(mf.layout.n, 3u);
    EXPECT_EQ(mf.layout.b, 3u);
    EXPECT_EQ(mf.layout.t, 2u);
    ASSERT_EQ(mf.rows.size(), 2u);
    EXPECT_EQ(mf.rows[1], (Codeword{0, 1, 1, 0, 1, 0, 0, 0, 0}));
}

TEST(Codes, MatrixTextErrors) {
    {
        std::istringstream in("n=3 b=3 t=2\n1 2 3\n");
        EXPECT_THROW(read_matrix_text(in), DimensionMismatch);  // no ring
    }
    {
        std::istringstream in("ring=Z3 q=4\n");
        EXPECT_THROW(read_matrix_text(in), DimensionMismatch);  // unknown key
    }
    {
        std::istringstream in("ring=Z3 n=1 b=3 t=2\n1 x 0\n");
        EXPECT_THROW(read_matrix_text(in), DimensionMismatch);  // non-numeric entry
    }
    {
        std::istringstream in("");
        EXPECT_THROW(read_matrix_text(in), DimensionMismatch);
    }
    {
        std::istringstream in("ring=Z3 n=1 b=3 t=9\n1 0 0\n");
        EXPECT_THROW(read_matrix_text(in), OutOfRange);  // t > b
    }
}

TEST(Codes, MatrixJsonParsing) {
    std::istringstream in(R"({"ring":"Z6","n":2,"b":3,"t":2,
        "rows":[[1,1,1,5,4,2],[0,3,0,3,3,3],[0,0,3,3,0,3]]})");
    const MatrixFile mf = read_matrix_json(in);
    EXPECT_EQ(mf.ring_spec, "Z6");
    EXPECT_EQ(mf.rows.size(), 3u);
    const Code code = span(build(mf.ring_spec), mf.layout, mf.rows);
    EXPECT_EQ(code.size(), 24u);

    std::istringstream bad(R"({"ring":"Z6","n":2,"b":3})");
    EXPECT_THROW(read_matrix_json(bad), DimensionMismatch);
    std::istringstream notjson("{{{");
    EXPECT_THROW(read_matrix_json(notjson), DimensionMismatch);
}

TEST(Codes, NextVectorEnumeratesLexicographically) {
    Codeword v(2, 0);
    std::vector<Codeword> all;
    do {
        all.push_back(v);
    } while (next_vector(v, 3));
    ASSERT_EQ(all.size(), 9u);
    EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
    EXPECT_EQ(all.front(), (Codeword{0, 0}));
    EXPECT_EQ(all.back(), (Codeword{2, 2}));
}
