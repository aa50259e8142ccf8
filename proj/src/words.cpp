#include "eulersum/words.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace eulersum {

EulerWord::EulerWord(std::vector<WordEntry> entries) : entries_(std::move(entries)) {
    if (entries_.empty())
        throw std::domain_error("EulerWord: empty word");
    for (const auto& e : entries_)
        if (e.s == 0) throw std::domain_error("EulerWord: arguments must be positive");
    if (entries_.front().s == 1 && !entries_.front().bar)
        throw std::domain_error("EulerWord: inadmissible word, (s1,eps1) != (1,1) is required");
}

unsigned EulerWord::weight() const {
    unsigned w = 0;
    for (const auto& e : entries_) w += e.s;
    return w;
}

EulerWord parse_word(std::string_view text) {
    std::string compact;
    compact.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    if (compact.empty())
        throw std::invalid_argument("word: empty input");

    std::vector<WordEntry> entries;
    std::size_t pos = 0;
    while (pos <= compact.size()) {
        std::size_t comma = compact.find(',', pos);
        std::string token = compact.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
        bool bar = false;
        if (!token.empty() && token.back() == 'b') {
            bar = true;
            token.pop_back();
        }
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("word: bad entry, expected <positive integer>[b]");
        unsigned long s = 0;
        try {
            s = std::stoul(token);
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("word: entry out of range");
        }
        if (s == 0 || s > 1000)
            throw std::invalid_argument("word: entry out of range");
        entries.push_back({static_cast<unsigned>(s), bar});
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == compact.size())
            throw std::invalid_argument("word: trailing comma");
    }
    return EulerWord(std::move(entries));
}

std::string format_word(const EulerWord& w) {
    std::string out;
    for (const auto& e : w.entries()) {
        if (!out.empty()) out.push_back(',');
        out += std::to_string(e.s);
        if (e.bar) out.push_back('b');
    }
    return out;
}

unsigned Composition::sum() const {
    unsigned s = 0;
    for (unsigned p : parts) s += p;
    return s;
}

Composition parse_composition(std::string_view text) {
    std::string compact;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
    if (compact.empty())
        throw std::invalid_argument("composition: empty input");
    Composition c;
    std::size_t pos = 0;
    while (pos <= compact.size()) {
        std::size_t comma = compact.find(',', pos);
        std::string token = compact.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("composition: parts must be positive integers");
        unsigned long p = std::stoul(token);
        if (p == 0 || p > 1000)
            throw std::invalid_argument("composition: part out of range");
        c.parts.push_back(static_cast<unsigned>(p));
        if (comma == std::string::npos) break;
        pos = comma + 1;
        if (pos == compact.size())
            throw std::invalid_argument("composition: trailing comma");
    }
    return c;
}

namespace {

void compositions_rec(unsigned n, unsigned d, std::vector<unsigned>& prefix,
                      std::vector<Composition>& out) {
    if (d == 1) {
        prefix.push_back(n);
        out.push_back(Composition{prefix});
        prefix.pop_back();
        return;
    }
    for (unsigned first = 1; first + (d - 1) <= n; ++first) {
        prefix.push_back(first);
        compositions_rec(n - first, d - 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Composition> compositions(unsigned n, unsigned d) {
    std::vector<Composition> out;
    if (d == 0 || d > n) return out;
    std::vector<unsigned> prefix;
    prefix.reserve(d);
    compositions_rec(n, d, prefix, out);
    return out;
}

std::vector<std::vector<bool>> sign_assignments(unsigned d, unsigned alpha) {
    std::vector<std::vector<bool>> out;
    if (alpha > d) return out;
    // Walk the alpha-subsets of {0,...,d-1} in lexicographic order.
    std::vector<unsigned> idx(alpha);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        std::vector<bool> pattern(d, false);
        for (unsigned i : idx) pattern[i] = true;
        out.push_back(std::move(pattern));
        if (alpha == 0) break;
        long i = static_cast<long>(alpha) - 1;
        while (i >= 0 && idx[i] == d - alpha + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (long j = i + 1; j < static_cast<long>(alpha); ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

EulerWord xi_word(const Composition& c) {
    std::vector<WordEntry> entries;
    entries.reserve(c.parts.size());
    for (unsigned j : c.parts)
        entries.push_back({2 * j, j % 2 == 1});
    return EulerWord(std::move(entries));
}

namespace {

void stuffle_rec(const std::vector<WordEntry>& a, std::size_t i,
                 const std::vector<WordEntry>& b, std::size_t j,
                 std::vector<WordEntry>& prefix, WordCombination& out) {
    if (i == a.size() && j == b.size()) {
        ++out[EulerWord(prefix)];
        return;
    }
    if (i < a.size()) {
        prefix.push_back(a[i]);
        stuffle_rec(a, i + 1, b, j, prefix, out);
        prefix.pop_back();
    }
    if (j < b.size()) {
        prefix.push_back(b[j]);
        stuffle_rec(a, i, b, j + 1, prefix, out);
        prefix.pop_back();
    }
    if (i < a.size() && j < b.size()) {
        prefix.push_back({a[i].s + b[j].s, a[i].bar != b[j].bar});
        stuffle_rec(a, i + 1, b, j + 1, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

WordCombination stuffle(const EulerWord& w1, const EulerWord& w2) {
    WordCombination out;
    std::vector<WordEntry> prefix;
    prefix.reserve(w1.depth() + w2.depth());
    stuffle_rec(w1.entries(), 0, w2.entries(), 0, prefix, out);
    return out;
}

std::vector<EulerWord> restricted_words(unsigned n, unsigned d, unsigned alpha) {
    std::vector<EulerWord> out;
    const auto comps = compositions(n, d);
    const auto patterns = sign_assignments(d, alpha);
    out.reserve(comps.size() * patterns.size());
    for (const auto& c : comps) {
        for (const auto& pattern : patterns) {
            std::vector<WordEntry> entries;
            entries.reserve(d);
            for (unsigned i = 0; i < d; ++i)
                entries.push_back({2 * c.parts[i], pattern[i]});
            out.push_back(EulerWord(std::move(entries)));
        }
    }
    return out;
}

}  // namespace eulersum
