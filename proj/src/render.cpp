#include "eulersum/render.hpp"

#include <json.hpp>

#include <stdexcept>
#include <vector>

#include "eulersum/closed_forms.hpp"
#include "eulersum/genfun.hpp"
#include "eulersum/pipoly.hpp"

namespace eulersum {

namespace {

struct TableRow {
    unsigned n = 0;
    unsigned d = 0;
    bool has_alpha = false;
    unsigned alpha = 0;
    unsigned pi_exp = 0;
    std::string num;
    std::string den;
};

void append_rows(std::vector<TableRow>& rows, unsigned n, unsigned d, bool has_alpha,
                 unsigned alpha, const PiPoly& value) {
    for (const auto& [e, c] : value.terms())
        rows.push_back({n, d, has_alpha, alpha, e, c.num_str(), c.den_str()});
}

std::string rows_to_csv(const std::vector<TableRow>& rows) {
    std::string out = "n,d,alpha,pi_exp,num,den\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.d) + ",";
        if (r.has_alpha) out += std::to_string(r.alpha);
        out += "," + std::to_string(r.pi_exp) + "," + r.num + "," + r.den + "\n";
    }
    return out;
}

std::string rows_to_json(const std::string& kind, const std::vector<TableRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json jr{{"n", r.n},      {"d", r.d},      {"pi_exp", r.pi_exp},
                          {"num", r.num},  {"den", r.den}};
        if (r.has_alpha) jr["alpha"] = r.alpha;
        arr.push_back(std::move(jr));
    }
    nlohmann::json j;
    j["kind"] = kind;
    j["rows"] = std::move(arr);
    return j.dump();
}

}  // namespace

std::string render_numeric_json(const NumericResult& r) {
    nlohmann::json j;
    j["value"] = r.value;
    j["error_estimate"] = r.error_estimate;
    j["terms_used"] = r.terms_used;
    return j.dump();
}

std::string render_series_json(const std::string& which, unsigned max_n) {
    Series2 s(0);
    if (which == "phi")
        s = phi_series(max_n);
    else if (which == "psi_tot")
        s = psi_tot_series(max_n);
    else if (which == "psi1")
        s = psi1_series(max_n);
    else
        throw std::invalid_argument("series: expected phi, psi_tot or psi1");

    nlohmann::json matrix = nlohmann::json::array();
    for (unsigned n = 0; n <= max_n; ++n) {
        nlohmann::json row = nlohmann::json::array();
        for (unsigned d = 0; d <= n; ++d)
            row.push_back(s.coeff(n, d).str());
        matrix.push_back(std::move(row));
    }
    nlohmann::json j;
    j["series"] = which;
    j["max_n"] = max_n;
    j["grading"] = "entry [n][d] is the rational multiple of pi^(2n) at u^n v^d";
    j["matrix"] = std::move(matrix);
    return j.dump();
}

std::string render_table(const std::string& kind, unsigned max_n, unsigned depth,
                         const std::string& format) {
    std::vector<TableRow> rows;
    if (kind == "xi") {
        for (unsigned n = 1; n <= max_n; ++n)
            for (unsigned d = 1; d <= n; ++d)
                append_rows(rows, n, d, false, 0, xi_short_form(n, d));
    } else if (kind == "a_alpha") {
        if (depth < 1) throw std::invalid_argument("table: a_alpha needs a depth");
        if (max_n < depth) throw std::domain_error("table: need max_n >= d");
        for (unsigned n = depth; n <= max_n; ++n) {
            for (unsigned alpha = 0; alpha <= depth; ++alpha) {
                if (depth > 4 && alpha > 1 && alpha < depth) continue;  // no closed form
                append_rows(rows, n, depth, true, alpha, a_alpha(n, depth, alpha));
            }
        }
    } else {
        throw std::invalid_argument("table: expected kind xi or a_alpha");
    }

    if (format == "csv") return rows_to_csv(rows);
    if (format == "json") return rows_to_json(kind, rows);
    throw std::invalid_argument("table: expected format csv or json");
}

}  // namespace eulersum
