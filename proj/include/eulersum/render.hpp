#pragma once

#include "eulersum/oracle.hpp"

#include <string>

namespace eulersum {

/// JSON for a numeric evaluation: {"error_estimate":..,"terms_used":..,"value":..}.
std::string render_numeric_json(const NumericResult& r);

/// Coefficient matrix of one of the generating functions ("phi", "psi_tot",
/// "psi1") up to u^max_n, entries as exact "num/den" strings.
std::string render_series_json(const std::string& which, unsigned max_n);

/// Deterministic table of exact values, one row per pi-power term.
/// kind "xi": all pairs d <= n <= max_n. kind "a_alpha": fixed depth d,
/// n = d..max_n, every alpha with a closed form. format "csv" or "json".
std::string render_table(const std::string& kind, unsigned max_n, unsigned depth,
                         const std::string& format);

}  // namespace eulersum
