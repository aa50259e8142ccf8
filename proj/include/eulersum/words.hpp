#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace eulersum {

struct WordEntry {
    unsigned s = 0;    // argument, >= 1
    bool bar = false;  // true means the component carries sign -1
    auto operator<=>(const WordEntry&) const = default;
};

// Index of an alternating Euler sum. Admissibility (the convergence
// condition (s_1, eps_1) != (1, +1)) is a construction invariant, so any
// EulerWord in flight can be evaluated.
class EulerWord {
public:
    explicit EulerWord(std::vector<WordEntry> entries);  // throws std::domain_error

    const std::vector<WordEntry>& entries() const { return entries_; }
    unsigned depth() const { return static_cast<unsigned>(entries_.size()); }
    unsigned weight() const;

    auto operator<=>(const EulerWord&) const = default;  // lexicographic on (s, bar)

private:
    std::vector<WordEntry> entries_;
};

/// Parse the CLI word grammar: comma-separated entries, each a positive
/// integer with optional suffix 'b' marking the alternating sign;
/// whitespace is ignored. "2b,4" is zeta(2 bar, 4).
EulerWord parse_word(std::string_view text);
std::string format_word(const EulerWord& w);

struct Composition {
    std::vector<unsigned> parts;  // all >= 1
    unsigned sum() const;
    auto operator<=>(const Composition&) const = default;
};

/// Parse a comma-separated composition such as "1,2"; whitespace is ignored.
Composition parse_composition(std::string_view text);

/// All compositions of n into d positive parts, lexicographic; empty when d > n.
std::vector<Composition> compositions(unsigned n, unsigned d);

/// All length-d boolean vectors with exactly alpha true entries, ordered by
/// the positions of the true entries taken lexicographically.
std::vector<std::vector<bool>> sign_assignments(unsigned d, unsigned alpha);

/// Attach the xi-type signs to a composition: entry i is (2 j_i, bar iff j_i odd).
EulerWord xi_word(const Composition& c);

// Integer combination of words with positive multiplicities.
using WordCombination = std::map<EulerWord, long>;

/// Quasi-shuffle product over (s, eps) pairs; merged heads add arguments and
/// multiply signs. Every output word has weight w1 + w2 and depth <= d1 + d2.
WordCombination stuffle(const EulerWord& w1, const EulerWord& w2);

/// All even-argument words of weight 2n, depth d, with exactly alpha
/// alternating components: compositions(n, d) x sign_assignments(d, alpha).
std::vector<EulerWord> restricted_words(unsigned n, unsigned d, unsigned alpha);

}  // namespace eulersum
