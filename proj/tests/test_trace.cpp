#include "skein/trace.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace skein;

namespace {

Word random_word(std::mt19937_64 &rng, int max_syllables)
{
    std::uniform_int_distribution<int> count(0, max_syllables);
    std::uniform_int_distribution<int> gen(1, 3);
    std::uniform_int_distribution<int> exp(-3, 2);
    Word w;
    int n = count(rng);
    for (int i = 0; i < n; ++i) {
        int e = exp(rng);
        if (e >= 0)
            ++e;
        w = w * Word::generator(gen(rng), e);
    }
    return w;
}

} // namespace

TEST_CASE("base traces", "[trace]")
{
    TraceEngine t;
    CHECK(t.trace_poly(Word::identity()) == Polynomial(2));
    CHECK(t.trace_poly(parse_word("g1")) == Polynomial::variable(X1));
    CHECK(t.trace_poly(parse_word("g1*g2")) == Polynomial::variable(X12));
    CHECK(t.trace_poly(parse_word("g1*g2*g3")) == Polynomial::variable(X123));
    // Cyclic invariance: [g2 g1] = [g1 g2].
    CHECK(t.trace_poly(parse_word("g2*g1")) == Polynomial::variable(X12));
}

TEST_CASE("golden identities", "[trace]")
{
    TraceEngine t;
    for (int i = 1; i <= 3; ++i) {
        Var xi = static_cast<Var>(i - 1);
        CHECK(t.trace_poly(Word::generator(i, 2)) ==
              Polynomial::variable(xi, 2) - Polynomial(2));
    }
    for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j <= 3; ++j) {
            if (i == j)
                continue;
            Word w = Word::generator(i) * Word::generator(j, -1);
            CHECK(t.trace_poly(w) ==
                  Polynomial::variable(static_cast<Var>(i - 1)) *
                          Polynomial::variable(static_cast<Var>(j - 1)) -
                      Polynomial::variable(pair_var(i, j)));
        }
    }
    Polynomial common = parse_poly("x1*x2*x3 + x123");
    CHECK(t.trace_poly(parse_word("g1^-1*g3*g2")) ==
          common - parse_poly("x2*x13 + x3*x12"));
    CHECK(t.trace_poly(parse_word("g2^-1*g1*g3")) ==
          common - parse_poly("x3*x12 + x1*x23"));
    CHECK(t.trace_poly(parse_word("g3^-1*g2*g1")) ==
          common - parse_poly("x1*x23 + x2*x13"));

    CHECK(t.trace_poly(parse_word("g1*g2*g3*g1*g2*g3")) ==
          Polynomial::variable(X123, 2) - Polynomial(2));
}

TEST_CASE("normal form invariances", "[trace]")
{
    TraceEngine t;
    CHECK(t.trace_nf(parse_word("g1")) == Polynomial::variable(X1));

    std::mt19937_64 rng(31);
    for (int i = 0; i < 60; ++i) {
        Word w = random_word(rng, 5);
        CHECK(t.trace_nf(w) == t.trace_nf(w.inverse()));
        Word u = random_word(rng, 4), v = random_word(rng, 4);
        CHECK(t.trace_nf(u * v) == t.trace_nf(v * u));
        Word h = random_word(rng, 3);
        CHECK(t.trace_nf(h * w * h.inverse()) == t.trace_nf(w));
        CHECK(t.trace_nf(w).degree_in(X123) <= 1);
    }
}

TEST_CASE("fundamental product relation", "[trace]")
{
    // [u][v] = [uv] + [uv^-1] modulo K.
    TraceEngine t;
    std::mt19937_64 rng(37);
    for (int i = 0; i < 60; ++i) {
        Word u = random_word(rng, 5), v = random_word(rng, 5);
        Polynomial lhs = t.trace_poly(u) * t.trace_poly(v);
        Polynomial rhs = t.trace_poly(u * v) + t.trace_poly(u * v.inverse());
        CHECK(in_ideal_K(lhs - rhs));
    }
}

TEST_CASE("reordering relation", "[trace]")
{
    // [abc] = [a][bc] + [b][ac] + [c][ab] - [a][b][c] - [acb] modulo K.
    TraceEngine t;
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<int> gen(1, 3);
    std::uniform_int_distribution<int> exp(-2, 1);
    for (int i = 0; i < 60; ++i) {
        auto syl = [&] {
            int e = exp(rng);
            if (e >= 0)
                ++e;
            return Word::generator(gen(rng), e);
        };
        Word a = syl(), b = syl(), c = syl();
        Polynomial lhs = t.trace_poly(a * b * c);
        Polynomial rhs = t.trace_poly(a) * t.trace_poly(b * c) +
                         t.trace_poly(b) * t.trace_poly(a * c) +
                         t.trace_poly(c) * t.trace_poly(a * b) -
                         t.trace_poly(a) * t.trace_poly(b) * t.trace_poly(c) -
                         t.trace_poly(a * c * b);
        CHECK(in_ideal_K(lhs - rhs));
    }
}

TEST_CASE("representative independence of the split rule", "[trace]")
{
    TraceEngine first(SplitStrategy::First), last(SplitStrategy::Last);
    std::mt19937_64 rng(43);
    for (int i = 0; i < 40; ++i) {
        Word w = random_word(rng, 6);
        CHECK(in_ideal_K(first.trace_poly(w) - last.trace_poly(w)));
    }
}
