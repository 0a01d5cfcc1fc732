#pragma once

#include "skein/polynomial.hpp"
#include "skein/word.hpp"

#include <map>
#include <vector>

namespace skein {

// Which repeated-generator pair the splitting rule picks when several are
// available. First is the default; Last exists so that representative
// independence (two routes differing by a multiple of K) can be tested.
enum class SplitStrategy { First, Last };

// Computes trace polynomials P_w with tr(rho(w)) = P_w(trace point of rho)
// for every SL2 representation rho, by recursive skein reduction. Results
// are memoized on the canonical trace key, so one engine instance should be
// confined to a single computation context (or guarded externally).
class TraceEngine {
  public:
    explicit TraceEngine(SplitStrategy split = SplitStrategy::First) : split_(split) {}

    // Raw representative; may contain x123^2 and higher. Unique only modulo
    // the principal ideal generated by K.
    Polynomial trace_poly(Word const &w)
    {
        Word key = canonical_trace_key(w);
        auto it = cache_.find(key);
        if (it != cache_.end())
            return it->second;
        Polynomial p = reduce(key);
        cache_.emplace(std::move(key), p);
        return p;
    }

    // Canonical element of the quotient ring: x123-degree <= 1.
    Polynomial trace_nf(Word const &w) { return rem_mod_K(trace_poly(w)); }

    std::size_t cache_size() const { return cache_.size(); }

  private:
    // Rule priority on the canonical key k:
    //   1. identity -> 2
    //   2. base word -> bare variable
    //   3. a syllable with |exponent| >= 2 -> power recurrence
    //   4. all exponents +-1, repeated generator -> split [XYZ] = [XZ][Y] - [XY^-1Z]
    //   5. distinct generators, some exponent -1 -> inverse elimination
    //   6. distinct generators, positive, unsorted -> reordering identity
    Polynomial reduce(Word const &k)
    {
        auto const &s = k.syllables();
        if (s.empty())
            return Polynomial(2);
        if (auto base = base_variable(k))
            return Polynomial::variable(*base);

        // Rule 3: first syllable with |m| >= 2.
        for (std::size_t j = 0; j < s.size(); ++j) {
            std::int64_t m = s[j].exp;
            if (m >= 2 || m <= -2) {
                std::int64_t step = m > 0 ? -1 : 1;
                Word u = slice(k, 0, j);
                Word v = slice(k, j + 1, s.size());
                Word w1 = u * Word::generator(s[j].gen, m + step) * v;
                Word w2 = u * Word::generator(s[j].gen, m + 2 * step) * v;
                return Polynomial::variable(static_cast<Var>(s[j].gen - 1)) * trace_poly(w1) -
                       trace_poly(w2);
            }
        }

        // Rule 4: repeated generator index, all exponents +-1.
        if (auto pair = repeated_pair(k)) {
            auto [p, q] = *pair;
            Word x = slice(k, 0, p + 1);
            Word y = slice(k, p + 1, q + 1);
            Word z = slice(k, q + 1, s.size());
            return trace_poly(x * z) * trace_poly(y) - trace_poly(x * y.inverse() * z);
        }

        // Rule 5: leftmost inverted syllable, all generators distinct.
        for (std::size_t j = 0; j < s.size(); ++j) {
            if (s[j].exp == -1) {
                Word u = slice(k, 0, j);
                Word v = slice(k, j + 1, s.size());
                return Polynomial::variable(static_cast<Var>(s[j].gen - 1)) * trace_poly(u * v) -
                       trace_poly(u * Word::generator(s[j].gen) * v);
            }
        }

        // Rule 6: the only remaining canonical key is g1*g3*g2.
        auto x = [](Var v) { return Polynomial::variable(v); };
        return x(X1) * x(X23) + x(X2) * x(X13) + x(X3) * x(X12) - x(X1) * x(X2) * x(X3) -
               x(X123);
    }

    static std::optional<Var> base_variable(Word const &k)
    {
        auto const &s = k.syllables();
        if (s.size() == 1 && s[0].exp == 1)
            return static_cast<Var>(s[0].gen - 1);
        if (s.size() == 2 && s[0].exp == 1 && s[1].exp == 1 && s[0].gen < s[1].gen)
            return pair_var(s[0].gen, s[1].gen);
        if (s.size() == 3 && s[0].exp == 1 && s[1].exp == 1 && s[2].exp == 1 &&
            s[0].gen == 1 && s[1].gen == 2 && s[2].gen == 3)
            return X123;
        return std::nullopt;
    }

    // Positions p < q of equal generator indices, or nullopt if all distinct.
    std::optional<std::pair<std::size_t, std::size_t>> repeated_pair(Word const &k) const
    {
        auto const &s = k.syllables();
        if (split_ == SplitStrategy::First) {
            for (std::size_t q = 1; q < s.size(); ++q)
                for (std::size_t p = 0; p < q; ++p)
                    if (s[p].gen == s[q].gen)
                        return std::pair{p, q};
        } else {
            for (std::size_t q = s.size(); q-- > 1;)
                for (std::size_t p = q; p-- > 0;)
                    if (s[p].gen == s[q].gen)
                        return std::pair{p, q};
        }
        return std::nullopt;
    }

    static Word slice(Word const &w, std::size_t from, std::size_t to)
    {
        auto const &s = w.syllables();
        return Word(std::vector<Syllable>(s.begin() + from, s.begin() + to));
    }

    SplitStrategy split_;
    std::map<Word, Polynomial> cache_;
};

} // namespace skein
