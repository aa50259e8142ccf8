#include "eulersum/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

namespace eulersum {

namespace {

// Neumaier-compensated accumulator.
struct Kahan {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

double pow_int(double base, unsigned e) {
    double r = 1.0;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

// Streaming state of the nested sum. acc[i] tracks
//   A_i(k) = sum_{m<=k} eps_i^m m^{-s_i} A_{i+1}(m-1),  A_{d+1} = 1,
// so A_1(N) is the truncated sum over n_1 <= N. Extending to a larger N
// continues where the previous pass stopped, which makes the doubling
// refinement pay only for the new terms.
class WordSum {
public:
    explicit WordSum(const EulerWord& w) {
        for (const auto& e : w.entries()) {
            s_.push_back(e.s);
            bar_.push_back(e.bar);
        }
        acc_.resize(s_.size());
    }

    void extend(std::uint64_t to) {
        const std::size_t depth = s_.size();
        for (std::uint64_t k = done_ + 1; k <= to; ++k) {
            const double inv = 1.0 / static_cast<double>(k);
            const bool odd = (k & 1u) != 0;
            // Updating from the outermost level inward keeps each deeper
            // accumulator at its k-1 state exactly when it is read.
            for (std::size_t i = 0; i < depth; ++i) {
                const double deeper = (i + 1 < depth) ? acc_[i + 1].value() : 1.0;
                if (deeper == 0.0) continue;
                double term = pow_int(inv, s_[i]) * deeper;
                if (bar_[i] && odd) term = -term;
                acc_[i].add(term);
            }
        }
        done_ = std::max(done_, to);
    }

    double value() const { return acc_[0].value(); }

private:
    std::vector<unsigned> s_;
    std::vector<char> bar_;
    std::vector<Kahan> acc_;
    std::uint64_t done_ = 0;
};

constexpr std::uint64_t kRefineStart = std::uint64_t{1} << 16;
constexpr std::uint64_t kRefineMax = std::uint64_t{1} << 24;

NumericResult sum_over_words(std::vector<EulerWord> words, double tol) {
    std::sort(words.begin(), words.end());
    std::vector<NumericResult> member(words.size());

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const unsigned n_threads = static_cast<unsigned>(
        std::min<std::size_t>(words.size(), hw));
    if (n_threads <= 1) {
        for (std::size_t i = 0; i < words.size(); ++i)
            member[i] = eval_word_refined(words[i], tol);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= words.size()) return;
                member[i] = eval_word_refined(words[i], tol);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    Kahan value, error;
    std::uint64_t terms = 0;
    for (const auto& m : member) {
        value.add(m.value);
        error.add(m.error_estimate);
        terms = std::max(terms, m.terms_used);
    }
    return {value.value(), error.value(), terms};
}

}  // namespace

double eval_word(const EulerWord& w, std::uint64_t n_terms) {
    if (n_terms < w.depth())
        throw std::invalid_argument("eval_word: need at least depth many terms");
    WordSum ws(w);
    ws.extend(n_terms);
    return ws.value();
}

NumericResult eval_word_refined(const EulerWord& w, double tol) {
    if (!(tol >= 1e-12))
        throw std::invalid_argument("eval_word_refined: tol must be >= 1e-12");
    WordSum ws(w);
    ws.extend(kRefineStart);
    double prev = ws.value();
    std::uint64_t n = kRefineStart;
    double estimate = 0.0;
    double cur = prev;
    while (n < kRefineMax) {
        n *= 2;
        ws.extend(n);
        cur = ws.value();
        estimate = std::abs(cur - prev);
        if (estimate < tol) return {cur, estimate, n};
        prev = cur;
    }
    return {cur, estimate, n};  // estimate >= tol flags the miss
}

NumericResult restricted_sum_numeric(unsigned n, unsigned d, unsigned alpha, double tol) {
    if (d < 1 || d > n)
        throw std::domain_error("restricted_sum_numeric: need 1 <= d <= n");
    if (alpha > d)
        throw std::domain_error("restricted_sum_numeric: need 0 <= alpha <= d");
    return sum_over_words(restricted_words(n, d, alpha), tol);
}

NumericResult xi_sum_numeric(unsigned n, unsigned d, double tol) {
    if (d < 1 || d > n)
        throw std::domain_error("xi_sum_numeric: need 1 <= d <= n");
    std::vector<EulerWord> words;
    for (const auto& c : compositions(n, d)) words.push_back(xi_word(c));
    return sum_over_words(std::move(words), tol);
}

double default_tol(unsigned weight) {
    return weight >= 6 ? 1e-8 : 1e-5;
}

}  // namespace eulersum
