// eulersum: exact closed forms, generating-function expansions and numeric
// evaluation of alternating Euler sums with even arguments, plus the
// machine verification suites tying everything together.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "eulersum/closed_forms.hpp"
#include "eulersum/genfun.hpp"
#include "eulersum/oracle.hpp"
#include "eulersum/pipoly.hpp"
#include "eulersum/render.hpp"
#include "eulersum/verify.hpp"
#include "eulersum/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitUnsupported = 3;

constexpr unsigned kMaxIndex = 16;  // depth cap for closed-form commands

unsigned suite_max_n(unsigned flag_value, bool flag_given, unsigned fallback) {
    if (flag_given) return flag_value;
    if (const char* env = std::getenv("EULERSUM_MAX_N")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1 && v <= kMaxIndex) return static_cast<unsigned>(v);
    }
    return fallback;
}

int run(int argc, char** argv) {
    CLI::App app{"alternating Euler sums with even arguments: exact closed forms, "
                 "generating functions, numeric oracle, verification suites"};
    app.require_subcommand(1);

    // eval
    auto* eval = app.add_subcommand("eval", "numerically evaluate one Euler sum");
    std::string word_text, xi_text;
    double tol = 1e-8;
    eval->add_option("--word", word_text, "word such as \"2b,4\" (b marks an alternating entry)");
    eval->add_option("--xi", xi_text, "composition such as \"1,2\"; xi-type signs are applied");
    eval->add_option("--tol", tol, "target error estimate")->capture_default_str();

    // xi
    auto* xi = app.add_subcommand("xi", "exact xi-type restricted sum of weight 2n, depth d");
    unsigned xi_n = 0, xi_d = 0;
    std::string method = "short";
    xi->add_option("-n", xi_n, "half the weight")->required();
    xi->add_option("-d", xi_d, "depth")->required();
    xi->add_option("--method", method, "short | long | genfun")
        ->check(CLI::IsMember({"short", "long", "genfun"}))
        ->capture_default_str();

    // asum
    auto* asum = app.add_subcommand("asum", "exact restricted Euler sum with alpha alternating components");
    unsigned as_n = 0, as_d = 0, as_alpha = 0;
    bool as_all = false;
    asum->add_option("-n", as_n, "half the weight")->required();
    asum->add_option("-d", as_d, "depth")->required();
    auto* alpha_opt = asum->add_option("--alpha", as_alpha, "number of alternating components");
    asum->add_flag("--all", as_all, "print the whole alpha table plus the total");

    // series
    auto* series = app.add_subcommand("series", "expand a generating function");
    std::string which;
    unsigned series_max_n = 8;
    series->add_option("which", which, "phi | psi_tot | psi1")
        ->required()
        ->check(CLI::IsMember({"phi", "psi_tot", "psi1"}));
    series->add_option("--max-n", series_max_n, "largest u-power")->capture_default_str();

    // verify
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite = "all";
    unsigned verify_max_n = 0;
    verify->add_option("--suite", suite, "exact | numeric | stuffle | all")
        ->check(CLI::IsMember({"exact", "numeric", "stuffle", "all"}))
        ->capture_default_str();
    auto* vmax = verify->add_option("--max-n", verify_max_n, "depth of the suites");

    // table
    auto* table = app.add_subcommand("table", "emit exact value tables");
    std::string kind, format = "csv", out_path;
    unsigned table_max_n = 6, table_d = 0;
    table->add_option("--kind", kind, "xi | a_alpha")
        ->required()
        ->check(CLI::IsMember({"xi", "a_alpha"}));
    table->add_option("--max-n", table_max_n, "largest n")->capture_default_str();
    table->add_option("-d", table_d, "depth (a_alpha only)");
    table->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    table->add_option("--out", out_path, "write to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    using namespace eulersum;

    if (eval->parsed()) {
        if (word_text.empty() == xi_text.empty()) {
            std::cerr << "eval: give exactly one of --word or --xi\n";
            return kExitUsage;
        }
        EulerWord w = word_text.empty() ? xi_word(parse_composition(xi_text))
                                        : parse_word(word_text);
        std::cout << render_numeric_json(eval_word_refined(w, tol)) << '\n';
        return kExitOk;
    }

    if (xi->parsed()) {
        if (xi_d < 1 || xi_d > xi_n || xi_n > kMaxIndex)
            throw std::domain_error("xi: need 1 <= d <= n <= " + std::to_string(kMaxIndex));
        PiPoly value;
        if (method == "short")
            value = xi_short_form(xi_n, xi_d);
        else if (method == "long")
            value = xi_long_form(xi_n, xi_d);
        else
            value = PiPoly::monomial(2 * xi_n, phi_series(xi_n).coeff(xi_n, xi_d));
        std::cout << value.to_json() << '\n';
        return kExitOk;
    }

    if (asum->parsed()) {
        if (as_d < 1 || as_d > as_n || as_n > kMaxIndex)
            throw std::domain_error("asum: need 1 <= d <= n <= " + std::to_string(kMaxIndex));
        if (as_all) {
            for (unsigned alpha = 0; alpha <= as_d; ++alpha) {
                if (as_d > 4 && alpha > 1 && alpha < as_d) continue;
                std::cout << "{\"alpha\":" << alpha
                          << ",\"value\":" << a_alpha(as_n, as_d, alpha).to_json() << "}\n";
            }
            std::cout << "{\"total\":" << a_total(as_n, as_d).to_json() << "}\n";
            return kExitOk;
        }
        if (alpha_opt->count() == 0) {
            std::cerr << "asum: need --alpha or --all\n";
            return kExitUsage;
        }
        std::cout << a_alpha(as_n, as_d, as_alpha).to_json() << '\n';
        return kExitOk;
    }

    if (series->parsed()) {
        if (series_max_n > 32)
            throw std::domain_error("series: max-n capped at 32");
        std::cout << render_series_json(which, series_max_n) << '\n';
        return kExitOk;
    }

    if (verify->parsed()) {
        unsigned exact_n = suite_max_n(verify_max_n, vmax->count() > 0, 12);
        unsigned numeric_n = suite_max_n(verify_max_n, vmax->count() > 0, 5);
        if (exact_n < 1 || exact_n > kMaxIndex)
            throw std::domain_error("verify: max-n must be in 1.." + std::to_string(kMaxIndex));
        VerifyReport report = run_suite(suite, exact_n, std::min(numeric_n, 8u));
        report.write_text(std::cerr);
        std::cout << report.to_json() << '\n';
        return report.all_pass() ? kExitOk : kExitVerifyFailed;
    }

    if (table->parsed()) {
        if (table_max_n > kMaxIndex)
            throw std::domain_error("table: max-n capped at " + std::to_string(kMaxIndex));
        std::string text = render_table(kind, table_max_n, table_d, format);
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw std::runtime_error("table: cannot open " + out_path);
            f << text;
        }
        return kExitOk;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const eulersum::UnsupportedFormula& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}
