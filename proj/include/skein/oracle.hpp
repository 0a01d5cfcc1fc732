#pragma once

#include "skein/polynomial.hpp"
#include "skein/trace.hpp"
#include "skein/word.hpp"

#include <cstdint>
#include <gmpxx.h>
#include <random>
#include <string>
#include <vector>

namespace skein {

// 2x2 matrix with exact rational entries and determinant 1.
struct Mat2 {
    mpq_class a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }

    mpq_class det() const { return a * d - b * c; }
    mpq_class trace() const { return a + d; }

    Mat2 operator*(Mat2 const &r) const
    {
        return {a * r.a + b * r.c, a * r.b + b * r.d, c * r.a + d * r.c, c * r.b + d * r.d};
    }

    // Valid only for determinant 1.
    Mat2 inverse() const { return {d, -b, -c, a}; }

    friend bool operator==(Mat2 const &, Mat2 const &) = default;
};

struct SL2Rep {
    Mat2 m1, m2, m3;

    Mat2 const &image(int gen) const
    {
        switch (gen) {
        case 1: return m1;
        case 2: return m2;
        default: return m3;
        }
    }
};

// Splits a seed per trial so parallel trials stay reproducible.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t trial)
{
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (trial + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Each generator image is a product of `steps` random elementary shears
// (unitriangular, integer off-diagonal in [-3, 3]), so determinants are 1
// by construction and entries stay small.
inline SL2Rep random_rep(std::uint64_t seed, int steps)
{
    if (steps < 1)
        throw std::invalid_argument("random_rep: steps must be >= 1");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> off(-3, 3);
    std::uniform_int_distribution<int> side(0, 1);
    auto matrix = [&] {
        Mat2 m = Mat2::identity();
        for (int i = 0; i < steps; ++i) {
            int t = off(rng);
            Mat2 shear = side(rng) ? Mat2{1, t, 0, 1} : Mat2{1, 0, t, 1};
            m = m * shear;
        }
        return m;
    };
    return {matrix(), matrix(), matrix()};
}

inline Mat2 word_matrix(SL2Rep const &rep, Word const &w)
{
    Mat2 m = Mat2::identity();
    for (auto const &s : w.syllables()) {
        Mat2 g = rep.image(s.gen);
        if (s.exp < 0)
            g = g.inverse();
        std::int64_t n = s.exp < 0 ? -s.exp : s.exp;
        for (std::int64_t i = 0; i < n; ++i)
            m = m * g;
    }
    return m;
}

// The Horowitz coordinates of a representation, in ring variable order.
inline std::array<mpq_class, num_vars> trace_point(SL2Rep const &rep)
{
    return {rep.m1.trace(),
            rep.m2.trace(),
            rep.m3.trace(),
            (rep.m1 * rep.m2).trace(),
            (rep.m1 * rep.m3).trace(),
            (rep.m2 * rep.m3).trace(),
            (rep.m1 * rep.m2 * rep.m3).trace()};
}

// Exact comparison of the symbolic trace against the matrix trace.
inline bool check_word(TraceEngine &engine, SL2Rep const &rep, Word const &w)
{
    return engine.trace_poly(w).evaluate(trace_point(rep)) == word_matrix(rep, w).trace();
}

inline Word random_word(std::mt19937_64 &rng, int max_syllables)
{
    std::uniform_int_distribution<int> count(1, max_syllables);
    std::uniform_int_distribution<int> gen(1, 3);
    std::uniform_int_distribution<int> exp(-3, 2); // shifted past 0 below
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

struct FuzzFailure {
    int trial;
    std::uint64_t seed;
    std::string word;
    std::string expected; // matrix-side trace
    std::string got;      // polynomial-side value
};

struct FuzzReport {
    int trials = 0;
    std::vector<FuzzFailure> failures;
    long elapsed_ms = 0;

    std::string to_json() const
    {
        std::string s = "{\"trials\":" + std::to_string(trials) + ",\"failures\":[";
        for (std::size_t i = 0; i < failures.size(); ++i) {
            auto const &f = failures[i];
            if (i)
                s += ",";
            s += "{\"trial\":" + std::to_string(f.trial) +
                 ",\"seed\":" + std::to_string(f.seed) + ",\"word\":\"" + f.word +
                 "\",\"expected\":\"" + f.expected + "\",\"got\":\"" + f.got + "\"}";
        }
        s += "]}";
        return s;
    }
};

// Per trial: one random representation and word; checks the trace identity,
// the vanishing of K at the trace point, and the matrix-level product
// relation tr(U)tr(V) = tr(UV) + tr(UV^-1).
inline FuzzReport fuzz(TraceEngine &engine, int trials, int max_syllables,
                       std::uint64_t seed)
{
    if (trials < 1)
        throw std::invalid_argument("fuzz: trials must be >= 1");
    FuzzReport report;
    report.trials = trials;
    Polynomial const K = fricke_K();
    for (int t = 0; t < trials; ++t) {
        std::uint64_t st = mix_seed(seed, static_cast<std::uint64_t>(t));
        std::mt19937_64 rng(st);
        SL2Rep rep = random_rep(st, 4);
        Word w = random_word(rng, max_syllables);
        auto point = trace_point(rep);

        mpq_class expected = word_matrix(rep, w).trace();
        mpq_class got = engine.trace_poly(w).evaluate(point);
        bool ok = expected == got;

        if (ok && K.evaluate(point) != 0) {
            ok = false;
            expected = 0;
            got = K.evaluate(point);
        }
        if (ok) {
            Word v = random_word(rng, max_syllables);
            Mat2 U = word_matrix(rep, w), V = word_matrix(rep, v);
            mpq_class lhs = U.trace() * V.trace();
            mpq_class rhs = (U * V).trace() + (U * V.inverse()).trace();
            if (lhs != rhs) {
                ok = false;
                expected = lhs;
                got = rhs;
            }
        }
        if (!ok)
            report.failures.push_back(
                {t, st, w.str(), expected.get_str(), got.get_str()});
    }
    return report;
}

} // namespace skein
