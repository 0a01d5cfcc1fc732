#pragma once

#include "skein/word.hpp" // ParseError

#include <array>
#include <cctype>
#include <cstddef>
#include <gmpxx.h>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace skein {

// The seven Horowitz trace coordinates, in ring order.
inline constexpr std::size_t num_vars = 7;
inline constexpr char const *var_names[num_vars] = {"x1",  "x2",  "x3", "x12",
                                                    "x13", "x23", "x123"};

enum Var : std::size_t { X1, X2, X3, X12, X13, X23, X123 };

// Returns the variable index for the trace of a product of distinct
// generators, e.g. {1,3} -> X13.
inline Var pair_var(int i, int j)
{
    if (i > j)
        std::swap(i, j);
    if (i == 1 && j == 2)
        return X12;
    if (i == 1 && j == 3)
        return X13;
    if (i == 2 && j == 3)
        return X23;
    throw std::invalid_argument("bad generator pair");
}

using Monomial = std::array<unsigned, num_vars>;

inline unsigned total_degree(Monomial const &m)
{
    unsigned d = 0;
    for (unsigned e : m)
        d += e;
    return d;
}

// Graded lexicographic order with x1 < x2 < x3 < x12 < x13 < x23 < x123.
struct GradedLex {
    bool operator()(Monomial const &a, Monomial const &b) const
    {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db)
            return da < db;
        for (std::size_t i = num_vars; i-- > 0;) {
            if (a[i] != b[i])
                return a[i] < b[i];
        }
        return false;
    }
};

// Sparse polynomial in Z[x1, x2, x3, x12, x13, x23, x123]. Stored
// coefficients are never zero; the empty term map is the zero polynomial.
class Polynomial {
  public:
    using TermMap = std::map<Monomial, mpz_class, GradedLex>;

    Polynomial() = default;
    Polynomial(mpz_class c)
    {
        if (c != 0)
            terms_[Monomial{}] = std::move(c);
    }
    Polynomial(long c) : Polynomial(mpz_class(c)) {}
    Polynomial(int c) : Polynomial(mpz_class(c)) {}

    static Polynomial variable(Var v, unsigned power = 1)
    {
        Polynomial p;
        if (power == 0)
            return Polynomial(1);
        Monomial m{};
        m[v] = power;
        p.terms_[m] = 1;
        return p;
    }

    static Polynomial term(mpz_class c, Monomial m)
    {
        Polynomial p;
        if (c != 0)
            p.terms_[m] = std::move(c);
        return p;
    }

    TermMap const &terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    mpz_class coefficient(Monomial const &m) const
    {
        auto it = terms_.find(m);
        return it == terms_.end() ? mpz_class(0) : it->second;
    }

    friend bool operator==(Polynomial const &, Polynomial const &) = default;

    Polynomial &operator+=(Polynomial const &rhs)
    {
        for (auto const &[m, c] : rhs.terms_)
            add_term(m, c);
        return *this;
    }

    Polynomial &operator-=(Polynomial const &rhs)
    {
        for (auto const &[m, c] : rhs.terms_)
            add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, Polynomial const &b) { return a += b; }
    friend Polynomial operator-(Polynomial a, Polynomial const &b) { return a -= b; }

    Polynomial operator-() const
    {
        Polynomial r;
        for (auto const &[m, c] : terms_)
            r.terms_[m] = -c;
        return r;
    }

    friend Polynomial operator*(Polynomial const &a, Polynomial const &b)
    {
        Polynomial r;
        for (auto const &[ma, ca] : a.terms_) {
            for (auto const &[mb, cb] : b.terms_) {
                Monomial m;
                for (std::size_t i = 0; i < num_vars; ++i)
                    m[i] = ma[i] + mb[i];
                r.add_term(m, ca * cb);
            }
        }
        return r;
    }

    Polynomial &operator*=(Polynomial const &rhs) { return *this = *this * rhs; }

    friend Polynomial operator*(mpz_class const &k, Polynomial const &p)
    {
        Polynomial r;
        if (k == 0)
            return r;
        for (auto const &[m, c] : p.terms_)
            r.terms_[m] = k * c;
        return r;
    }

    // Exact substitution at a rational point, in ring variable order.
    mpq_class evaluate(std::array<mpq_class, num_vars> const &point) const
    {
        mpq_class sum = 0;
        for (auto const &[m, c] : terms_) {
            mpq_class t(c);
            for (std::size_t i = 0; i < num_vars; ++i) {
                for (unsigned e = 0; e < m[i]; ++e)
                    t *= point[i];
            }
            sum += t;
        }
        return sum;
    }

    // Ring endomorphism relabeling the variables by a bijection of {0..6}.
    Polynomial substitute_indices(std::array<Var, num_vars> const &map) const
    {
        Polynomial r;
        for (auto const &[m, c] : terms_) {
            Monomial n{};
            for (std::size_t i = 0; i < num_vars; ++i)
                n[map[i]] += m[i];
            r.add_term(n, c);
        }
        return r;
    }

    unsigned degree_in(Var v) const
    {
        unsigned d = 0;
        for (auto const &[m, c] : terms_)
            d = std::max(d, m[v]);
        return d;
    }

    std::string str() const;
    std::string to_json() const;

  private:
    void add_term(Monomial const &m, mpz_class const &c)
    {
        if (c == 0)
            return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    TermMap terms_;
};

// The Fricke polynomial K, the single generator of the kernel of the map
// sending x_w to the trace of w: quadratic and monic in x123, vanishing at
// the trace point of every SL2 representation.
inline Polynomial fricke_K()
{
    auto x = [](Var v, unsigned e = 1) { return Polynomial::variable(v, e); };
    Polynomial mid = x(X1) * x(X23) + x(X2) * x(X13) + x(X3) * x(X12) - x(X1) * x(X2) * x(X3);
    return x(X123, 2) - mid * x(X123) + x(X1, 2) + x(X2, 2) + x(X3, 2) + x(X12, 2) +
           x(X13, 2) + x(X23, 2) - x(X1) * x(X2) * x(X12) - x(X1) * x(X3) * x(X13) -
           x(X2) * x(X3) * x(X23) + x(X12) * x(X13) * x(X23) - Polynomial(4);
}

struct DivModK {
    Polynomial quotient;
    Polynomial remainder; // x123-degree <= 1
};

// Long division of p by K viewed as polynomials in x123 over Z[x1..x23].
// K is monic of degree 2 in x123, so the division is integral and the
// remainder with x123-degree <= 1 is unique.
inline DivModK divmod_K(Polynomial const &p)
{
    static thread_local Polynomial const K = fricke_K();
    DivModK r{{}, p};
    for (;;) {
        unsigned d = r.remainder.degree_in(X123);
        if (d < 2)
            return r;
        // Collect the terms of top x123-degree, divided by x123^d.
        Polynomial top;
        for (auto const &[m, c] : r.remainder.terms()) {
            if (m[X123] == d) {
                Monomial n = m;
                n[X123] = 0;
                top += Polynomial::term(c, n);
            }
        }
        Polynomial q = top * Polynomial::variable(X123, d - 2);
        r.quotient += q;
        r.remainder -= q * K;
    }
}

inline Polynomial rem_mod_K(Polynomial const &p) { return divmod_K(p).remainder; }

inline bool in_ideal_K(Polynomial const &p) { return rem_mod_K(p).is_zero(); }

// Index permutations acting on the variables: a permutation pi of {1,2,3}
// sends x_i to x_{pi(i)} and x_ij to x_{pi(i)pi(j)} (indices sorted), fixing
// x123. sigma23 is the paper's "exchange 2 and 3" substitution.
inline std::array<Var, num_vars> index_permutation(int p1, int p2, int p3)
{
    std::array<int, 4> pi{0, p1, p2, p3};
    std::array<Var, num_vars> map{};
    map[X1] = static_cast<Var>(pi[1] - 1);
    map[X2] = static_cast<Var>(pi[2] - 1);
    map[X3] = static_cast<Var>(pi[3] - 1);
    map[X12] = pair_var(pi[1], pi[2]);
    map[X13] = pair_var(pi[1], pi[3]);
    map[X23] = pair_var(pi[2], pi[3]);
    map[X123] = X123;
    return map;
}

inline std::array<Var, num_vars> sigma23() { return index_permutation(1, 3, 2); }

inline std::string Polynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string s;
    bool first = true;
    // Leading (highest) terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto const &[m, c] = *it;
        mpz_class a = c;
        if (first) {
            if (a < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += (a < 0) ? " - " : " + ";
            if (a < 0)
                a = -a;
        }
        bool constant = total_degree(m) == 0;
        bool wrote = false;
        if (a != 1 || constant) {
            s += a.get_str();
            wrote = true;
        }
        for (std::size_t i = 0; i < num_vars; ++i) {
            if (m[i] == 0)
                continue;
            if (wrote)
                s += "*";
            s += var_names[i];
            if (m[i] > 1) {
                s += "^";
                s += std::to_string(m[i]);
            }
            wrote = true;
        }
        first = false;
    }
    return s;
}

// Text syntax: sum of terms; a term is an optional integer coefficient and
// variable powers, '*' optional between factors.
inline Polynomial parse_poly(std::string const &text)
{
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
            ++i;
    };
    auto parse_uint = [&]() -> unsigned long {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
            ++i;
        if (start == i)
            throw ParseError("expected integer", i);
        return std::stoul(text.substr(start, i - start));
    };
    Polynomial result;
    skip_ws();
    if (i == text.size())
        throw ParseError("empty polynomial", i);
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size())
            break;
        int sign = 1;
        if (text[i] == '+' || text[i] == '-') {
            sign = text[i] == '-' ? -1 : 1;
            ++i;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-'", i);
        }
        mpz_class coeff = sign;
        Monomial mono{};
        bool have_factor = false;
        while (true) {
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
            if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                std::size_t start = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    ++i;
                coeff *= mpz_class(text.substr(start, i - start));
                have_factor = true;
                continue;
            }
            if (i < text.size() && text[i] == 'x') {
                std::size_t start = i;
                ++i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                    ++i;
                std::string name = text.substr(start, i - start);
                std::size_t v = num_vars;
                for (std::size_t k = 0; k < num_vars; ++k) {
                    if (name == var_names[k]) {
                        v = k;
                        break;
                    }
                }
                if (v == num_vars)
                    throw ParseError("unknown variable " + name, start);
                unsigned long e = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    e = parse_uint();
                }
                mono[v] += static_cast<unsigned>(e);
                have_factor = true;
                continue;
            }
            break;
        }
        if (!have_factor)
            throw ParseError("expected term", i);
        result += Polynomial::term(coeff, mono);
        first = false;
    }
    return result;
}

// JSON: list of {"coeff": decimal string, "exps": [7 ints]}, leading terms
// first (same order as str()).
inline std::string Polynomial::to_json() const
{
    std::string s = "[";
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto const &[m, c] = *it;
        if (!first)
            s += ",";
        s += "{\"coeff\":\"" + c.get_str() + "\",\"exps\":[";
        for (std::size_t i = 0; i < num_vars; ++i) {
            if (i)
                s += ",";
            s += std::to_string(m[i]);
        }
        s += "]}";
        first = false;
    }
    return s + "]";
}

} // namespace skein
