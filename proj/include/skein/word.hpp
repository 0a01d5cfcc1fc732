#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skein {

// Freely reduced word over the generators g1, g2, g3, stored as a list of
// syllables (generator index, nonzero exponent). The empty list is the
// identity e. Adjacent syllables always carry distinct generator indices.
struct Syllable {
    int gen = 1;              // 1, 2 or 3
    std::int64_t exp = 1;     // never 0

    friend bool operator==(Syllable const &, Syllable const &) = default;
};

// Total order used for canonical trace keys: generator index first, then
// absolute exponent, positive before negative. This makes the plain
// positive words g1, g1*g2, ... the minima of their conjugacy classes.
inline std::strong_ordering syllable_order(Syllable const &a, Syllable const &b)
{
    if (a.gen != b.gen)
        return a.gen <=> b.gen;
    std::int64_t aa = a.exp < 0 ? -a.exp : a.exp;
    std::int64_t ab = b.exp < 0 ? -b.exp : b.exp;
    if (aa != ab)
        return aa <=> ab;
    return (a.exp < 0) <=> (b.exp < 0);
}

class Word {
  public:
    Word() = default;

    // Accepts arbitrary syllables and freely reduces them.
    explicit Word(std::vector<Syllable> syllables)
    {
        for (auto const &s : syllables)
            push(s.gen, s.exp);
    }

    static Word identity() { return Word{}; }

    static Word generator(int gen, std::int64_t exp = 1)
    {
        Word w;
        w.push(gen, exp);
        return w;
    }

    std::vector<Syllable> const &syllables() const { return syllables_; }
    bool is_identity() const { return syllables_.empty(); }
    std::size_t size() const { return syllables_.size(); }

    // Total syllable weight, i.e. the sum of |exponent|.
    std::int64_t weight() const
    {
        std::int64_t w = 0;
        for (auto const &s : syllables_)
            w += s.exp < 0 ? -s.exp : s.exp;
        return w;
    }

    friend bool operator==(Word const &, Word const &) = default;

    friend std::strong_ordering operator<=>(Word const &a, Word const &b)
    {
        std::size_t n = std::min(a.size(), b.size());
        for (std::size_t i = 0; i < n; ++i) {
            auto c = syllable_order(a.syllables_[i], b.syllables_[i]);
            if (c != std::strong_ordering::equal)
                return c;
        }
        return a.size() <=> b.size();
    }

    Word operator*(Word const &rhs) const
    {
        Word r = *this;
        for (auto const &s : rhs.syllables_)
            r.push(s.gen, s.exp);
        return r;
    }

    Word inverse() const
    {
        Word r;
        for (auto it = syllables_.rbegin(); it != syllables_.rend(); ++it)
            r.syllables_.push_back({it->gen, -it->exp});
        return r;
    }

    // Strips the conjugating part: while the first and last syllables share a
    // generator they are merged (a cyclic rotation), cancelling if possible.
    Word cyclically_reduced() const
    {
        Word r = *this;
        while (r.size() >= 2 && r.syllables_.front().gen == r.syllables_.back().gen) {
            auto back = r.syllables_.back();
            r.syllables_.pop_back();
            r.syllables_.front().exp = checked_add(r.syllables_.front().exp, back.exp);
            if (r.syllables_.front().exp == 0)
                r.syllables_.erase(r.syllables_.begin());
        }
        return r;
    }

    std::string str() const;

  private:
    static std::int64_t checked_add(std::int64_t a, std::int64_t b)
    {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r))
            throw std::overflow_error("word exponent overflow");
        return r;
    }

    void push(int gen, std::int64_t exp)
    {
        if (gen < 1 || gen > 3)
            throw std::invalid_argument("generator index must be 1, 2 or 3");
        if (exp == 0)
            return;
        if (!syllables_.empty() && syllables_.back().gen == gen) {
            syllables_.back().exp = checked_add(syllables_.back().exp, exp);
            if (syllables_.back().exp == 0)
                syllables_.pop_back();
        } else {
            syllables_.push_back({gen, exp});
        }
    }

    std::vector<Syllable> syllables_;
};

inline Word multiply(Word const &a, Word const &b) { return a * b; }
inline Word invert(Word const &w) { return w.inverse(); }

// Canonical representative of the conjugacy-and-inversion class of w: the
// minimal word among all cyclic rotations of the cyclic reduction of w and of
// its inverse. Used as the memoization key for trace polynomials, since
// traces satisfy [ab] = [ba] and [a] = [a^-1].
inline Word canonical_trace_key(Word const &w)
{
    Word c = w.cyclically_reduced();
    if (c.size() <= 0)
        return c;
    Word best = c;
    auto consider_rotations = [&best](Word const &v) {
        auto const &s = v.syllables();
        for (std::size_t i = 0; i < s.size(); ++i) {
            std::vector<Syllable> rot(s.begin() + i, s.end());
            rot.insert(rot.end(), s.begin(), s.begin() + i);
            Word cand(std::move(rot));
            if (cand < best)
                best = cand;
        }
    };
    consider_rotations(c);
    consider_rotations(c.inverse());
    return best;
}

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(std::string const &msg, std::size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos)
    {
    }
};

// Grammar: word := "e" | term (("*" | whitespace) term)*
//          term := ("g1"|"g2"|"g3") ("^" signed_integer)?
inline Word parse_word(std::string const &text)
{
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && (text[i] == ' ' || text[i] == '\t'))
            ++i;
    };
    skip_ws();
    if (i < text.size() && text[i] == 'e') {
        std::size_t j = i + 1;
        while (j < text.size() && (text[j] == ' ' || text[j] == '\t'))
            ++j;
        if (j == text.size())
            return Word::identity();
    }
    Word w;
    bool first = true;
    while (true) {
        skip_ws();
        if (i == text.size()) {
            if (first)
                throw ParseError("empty word (use \"e\" for the identity)", i);
            break;
        }
        if (!first) {
            if (text[i] == '*') {
                ++i;
                skip_ws();
            }
        }
        if (i + 1 >= text.size() || text[i] != 'g' || text[i + 1] < '1' || text[i + 1] > '3')
            throw ParseError("expected generator g1, g2 or g3", i);
        int gen = text[i + 1] - '0';
        i += 2;
        std::int64_t exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            std::size_t start = i;
            if (i < text.size() && (text[i] == '+' || text[i] == '-'))
                ++i;
            if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                throw ParseError("expected integer exponent", i);
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            try {
                exp = std::stoll(text.substr(start, i - start));
            } catch (std::out_of_range const &) {
                throw ParseError("exponent out of 64-bit range", start);
            }
            if (exp == 0)
                throw ParseError("exponent must be nonzero", start);
        }
        w = w * Word::generator(gen, exp);
        first = false;
    }
    return w;
}

inline std::string Word::str() const
{
    if (syllables_.empty())
        return "e";
    std::string s;
    for (std::size_t i = 0; i < syllables_.size(); ++i) {
        if (i)
            s += '*';
        s += 'g';
        s += static_cast<char>('0' + syllables_[i].gen);
        if (syllables_[i].exp != 1) {
            s += '^';
            s += std::to_string(syllables_[i].exp);
        }
    }
    return s;
}

} // namespace skein
