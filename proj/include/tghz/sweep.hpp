#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "tghz/optimize.hpp"

namespace tghz {

enum class SweepMode { qubit, continuous, numeric };

struct SweepSelector {
    SweepMode mode;
    std::size_t d = 0;  ///< dimension, numeric mode only
};

struct SweepRow {
    std::size_t n;
    std::string mode;
    double min_value;
    std::string certified;  // "closed_form" or "numeric"
};

/// %.12g rendering shared by every text surface, so repeated runs emit
/// byte-identical files.
inline std::string format_value(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

/// One row per (n, mode). Qubit rows exist only at even n, where the closed
/// form is certified; numeric rows run the full minimizer at the given d.
inline std::vector<SweepRow> sweep(std::size_t n_min, std::size_t n_max,
                                   std::span<const SweepSelector> modes,
                                   const BoundsConfig& cfg = {}) {
    if (n_min < 3 || n_min > n_max) {
        throw std::invalid_argument("sweep: requires 3 <= n_min <= n_max, got [" +
                                    std::to_string(n_min) + ", " + std::to_string(n_max) + "]");
    }
    if (modes.empty()) throw std::invalid_argument("sweep: no modes selected");
    std::vector<SweepRow> rows;
    for (std::size_t n = n_min; n <= n_max; ++n) {
        for (const auto& sel : modes) {
            switch (sel.mode) {
                case SweepMode::qubit:
                    if (n % 2 == 0) {
                        rows.push_back({n, "qubit", closed_form_qubit_min(n), "closed_form"});
                    }
                    break;
                case SweepMode::continuous:
                    rows.push_back({n, "continuous", closed_form_continuous_min(n), "closed_form"});
                    break;
                case SweepMode::numeric: {
                    if (sel.d < 2) {
                        throw std::invalid_argument("sweep: numeric mode requires d >= 2");
                    }
                    const auto r = minimize(n, sel.d, cfg);
                    rows.push_back({n, "numeric(" + std::to_string(sel.d) + ")", r.best_value,
                                    "numeric"});
                    break;
                }
            }
        }
    }
    std::sort(rows.begin(), rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.n != b.n) return a.n < b.n;
        return a.mode < b.mode;
    });
    return rows;
}

inline std::string sweep_to_csv(std::span<const SweepRow> rows) {
    std::string out = "n,mode,min_value,certified\n";
    for (const auto& r : rows) {
        out += std::to_string(r.n);
        out += ',';
        out += r.mode;
        out += ',';
        out += format_value(r.min_value);
        out += ',';
        out += r.certified;
        out += '\n';
    }
    return out;
}

}  // namespace tghz
