#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "tghz/classical.hpp"
#include "tghz/detail/rng.hpp"
#include "tghz/timeline.hpp"

namespace tghz {

struct BoundsConfig {
    std::size_t restarts = 64;
    std::size_t max_iters = 2000;
    double step_init = 0.1;
    double grad_tol = 1e-10;
    double imag_tol = 1e-9;
    std::size_t support_cap = 0;  ///< 0 selects the default of 2n.
    std::uint64_t seed = 0;
    std::size_t enumeration_cap = default_enumeration_cap;
};

enum class Termination { gradient_norm, max_iters, support_exhausted };

struct OptResult {
    double best_value;
    Distribution best_distribution;
    std::size_t restarts_run;
    std::size_t converged_restarts;
    std::uint64_t seed;
    Termination termination;
    bool exhaustive_skipped;  ///< d^{n-1} exceeded the enumeration cap.
};

namespace detail {

inline void validate_config(const BoundsConfig& cfg) {
    if (cfg.restarts == 0 || cfg.max_iters == 0 || cfg.enumeration_cap == 0) {
        throw std::invalid_argument(
            "BoundsConfig: restarts, max_iters and enumeration_cap must be positive");
    }
    if (!(cfg.step_init > 0.0) || !(cfg.grad_tol > 0.0) || !(cfg.imag_tol > 0.0)) {
        throw std::invalid_argument(
            "BoundsConfig: step_init, grad_tol and imag_tol must be positive");
    }
}

/// Euclidean projection onto the probability simplex (sort and threshold).
inline void project_to_simplex(std::span<const double> x, std::vector<double>& out,
                               std::vector<double>& scratch) {
    scratch.assign(x.begin(), x.end());
    std::sort(scratch.begin(), scratch.end(), std::greater<>());
    double cum = 0.0;
    double tau = scratch.front() - 1.0;
    for (std::size_t i = 0; i < scratch.size(); ++i) {
        cum += scratch[i];
        const double t = (cum - 1.0) / static_cast<double>(i + 1);
        if (scratch[i] - t > 0.0) tau = t;
    }
    out.resize(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) out[i] = std::max(x[i] - tau, 0.0);
}

struct PgdResult {
    std::vector<double> probs;
    double value = 1.0;
    double imag_residual = 0.0;
    bool converged = false;
};

/// Projected gradient descent on a fixed support, minimizing Re E_t with
/// halving backtracking from step_init. Stops on a stationary point (the
/// projected step shrinks below grad_tol, or no halving yields a strict
/// decrease) or after max_iters iterations.
inline PgdResult minimize_on_support(const SupportTable& tab, std::span<const double> p0,
                                     std::size_t max_iters, double step_init, double grad_tol) {
    PgdResult res;
    std::vector<double> scratch;
    project_to_simplex(p0, res.probs, scratch);
    if (tab.s == 1) {
        auto obj = objective(tab, res.probs);
        res.value = obj.value;
        res.imag_residual = obj.imag_residual;
        res.converged = true;
        return res;
    }
    auto obj = objective(tab, res.probs);
    std::vector<double> grad(tab.s), shifted(tab.s), trial, probe;
    for (std::size_t it = 0; it < max_iters; ++it) {
        objective_gradient(tab, res.probs, grad);
        for (std::size_t j = 0; j < tab.s; ++j) shifted[j] = res.probs[j] - grad[j];
        project_to_simplex(shifted, probe, scratch);
        double move2 = 0.0;
        for (std::size_t j = 0; j < tab.s; ++j) {
            const double dj = probe[j] - res.probs[j];
            move2 += dj * dj;
        }
        if (std::sqrt(move2) <= grad_tol) {
            res.converged = true;
            break;
        }
        double step = step_init;
        bool improved = false;
        for (int halving = 0; halving < 30; ++halving) {
            for (std::size_t j = 0; j < tab.s; ++j) shifted[j] = res.probs[j] - step * grad[j];
            project_to_simplex(shifted, trial, scratch);
            const auto cand = objective(tab, trial);
            if (cand.value < obj.value) {
                res.probs.swap(trial);
                obj = cand;
                improved = true;
                break;
            }
            step *= 0.5;
        }
        if (!improved) {
            res.converged = true;
            break;
        }
    }
    res.value = obj.value;
    res.imag_residual = obj.imag_residual;
    return res;
}

inline std::size_t choose_saturating(std::size_t a, std::size_t b) {
    if (b > a) return 0;
    if (b > a - b) b = a - b;
    std::size_t num = 1;
    for (std::size_t i = 1; i <= b; ++i) {
        const std::size_t factor = a - b + i;
        if (num > std::numeric_limits<std::size_t>::max() / factor) {
            return std::numeric_limits<std::size_t>::max();
        }
        num = num * factor / i;  // exact: i consecutive integers divide by i!
    }
    return num;
}

/// Visits every k-subset of [0, m) in lexicographic order.
template <typename F>
inline void for_each_combination(std::size_t m, std::size_t k, F&& visit) {
    if (k > m) return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
        visit(std::span<const std::size_t>(idx));
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + (i - 1)) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

/// Lowest classical expectation found by the composite search: the closed
/// construction candidates where feasible, an exhaustive anchored
/// support-search over small supports, and seeded random-restart projected
/// gradient descent. Deterministic for a fixed config; any candidate whose
/// product keeps an imaginary residual above imag_tol is rejected.
inline OptResult minimize(std::size_t n, std::size_t d, const BoundsConfig& cfg = {}) {
    if (n < 3) throw std::invalid_argument("minimize: requires n >= 3, got n = " + std::to_string(n));
    if (d < 2) throw std::invalid_argument("minimize: requires d >= 2, got d = " + std::to_string(d));
    detail::validate_config(cfg);
    const std::size_t support_cap = std::max<std::size_t>(std::size_t{2},
                                                          cfg.support_cap != 0 ? cfg.support_cap : 2 * n);

    enum Provenance { from_construction, from_exhaustive, from_restart };
    struct Chosen {
        double value;
        std::vector<Timeline> support;
        std::vector<double> probs;
        Provenance provenance;
        bool converged;
    };
    std::optional<Chosen> best;
    constexpr double tie_eps = 1e-12;

    auto canonicalize = [](std::span<const Timeline> sup, std::span<const double> pr) {
        std::vector<std::size_t> order;
        for (std::size_t j = 0; j < sup.size(); ++j) {
            if (pr[j] > 0.0) order.push_back(j);
        }
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return sup[a] < sup[b]; });
        std::pair<std::vector<Timeline>, std::vector<double>> out;
        for (auto j : order) {
            out.first.push_back(sup[j]);
            out.second.push_back(pr[j]);
        }
        return out;
    };

    auto offer = [&](std::span<const Timeline> sup, std::span<const double> pr, double value,
                     double residual, Provenance prov, bool converged) {
        if (!(residual <= cfg.imag_tol)) return;
        if (best && value > best->value + tie_eps) return;
        auto [csup, cpr] = canonicalize(sup, pr);
        if (!best || value < best->value - tie_eps ||
            std::lexicographical_compare(csup.begin(), csup.end(), best->support.begin(),
                                         best->support.end())) {
            best = Chosen{value, std::move(csup), std::move(cpr), prov, converged};
        }
    };

    auto polish_and_offer = [&](const Distribution& start, Provenance prov) {
        auto tab = detail::make_table(start.support());
        auto exact = detail::objective(tab, start.probs());
        offer(start.support(), start.probs(), exact.value, exact.imag_residual, prov, true);
        auto run = detail::minimize_on_support(tab, start.probs(), cfg.max_iters, cfg.step_init,
                                               cfg.grad_tol);
        offer(start.support(), run.probs, run.value, run.imag_residual, prov, run.converged);
    };

    std::vector<std::int64_t> zeros(n, 0);
    const Timeline identity = Timeline::from_exponents(zeros, d);
    {
        const std::vector<Timeline> sup{identity};
        const std::vector<double> pr{1.0};
        offer(sup, pr, 1.0, 0.0, from_construction, true);
    }
    if (n % 2 == 0 && n >= 4 && d % 2 == 0) {
        polish_and_offer(qubit_extremal_distribution(n, d), from_construction);
    }
    if (d % n == 0) {
        polish_and_offer(divisible_extremal_distribution(n, d), from_construction);
    }

    const std::size_t count = timeline_count(n, d);
    bool exhaustive_skipped = false;
    if (count <= cfg.enumeration_cap) {
        const auto all = enumerate_timelines(n, d, cfg.enumeration_cap);
        const std::size_t size_limit = std::min<std::size_t>(support_cap, 4);
        constexpr std::size_t support_budget = 150'000;
        const std::size_t polish_iters = std::min<std::size_t>(cfg.max_iters, 250);

        std::size_t smax = 1;
        std::size_t planned = 1;
        for (std::size_t s = 2; s <= std::min(size_limit, all.size()); ++s) {
            const std::size_t c = detail::choose_saturating(all.size() - 1, s - 1);
            if (c > support_budget || planned + c > support_budget) break;
            planned += c;
            smax = s;
        }

        std::vector<Timeline> sup;
        std::vector<double> uniform;
        for (std::size_t s = 1; s <= smax; ++s) {
            uniform.assign(s, 1.0 / static_cast<double>(s));
            detail::for_each_combination(all.size() - 1, s - 1, [&](std::span<const std::size_t> pick) {
                sup.clear();
                sup.push_back(all.front());
                for (auto j : pick) sup.push_back(all[j + 1]);
                auto tab = detail::make_table(sup);
                auto run = detail::minimize_on_support(tab, uniform, polish_iters, cfg.step_init,
                                                       cfg.grad_tol);
                offer(sup, run.probs, run.value, run.imag_residual, from_exhaustive, run.converged);
            });
        }
    } else {
        exhaustive_skipped = true;
    }

    std::size_t converged_restarts = 0;
    std::vector<std::int64_t> draw(n);
    for (std::size_t r = 0; r < cfg.restarts; ++r) {
        detail::Rng rng{detail::mix_seed(cfg.seed, r)};
        std::size_t target = 2 + rng.index(support_cap - 1);
        target = std::min(target, count);  // saturated counts never bind
        std::vector<Timeline> sup;
        const std::size_t max_attempts = 64 * target + 64;
        for (std::size_t attempt = 0; attempt < max_attempts && sup.size() < target; ++attempt) {
            std::size_t sum = 0;
            for (std::size_t i = 0; i + 1 < n; ++i) {
                const std::size_t k = rng.index(d);
                draw[i] = static_cast<std::int64_t>(k);
                sum += k;
            }
            draw[n - 1] = -static_cast<std::int64_t>(sum % d);
            Timeline t = Timeline::from_exponents(draw, d);
            if (std::find(sup.begin(), sup.end(), t) == sup.end()) sup.push_back(std::move(t));
        }
        std::vector<double> p0(sup.size());
        double total = 0.0;
        for (auto& p : p0) {
            p = -std::log(1.0 - rng.unit() + 1e-300);
            total += p;
        }
        for (auto& p : p0) p /= total;

        auto tab = detail::make_table(sup);
        auto run = detail::minimize_on_support(tab, p0, cfg.max_iters, cfg.step_init, cfg.grad_tol);
        if (run.converged) ++converged_restarts;
        offer(sup, run.probs, run.value, run.imag_residual, from_restart, run.converged);
    }

    Distribution dist(best->support, best->probs);
    const auto final_val = evaluate(dist);
    Termination term;
    if (best->provenance == from_exhaustive) {
        term = Termination::support_exhausted;
    } else {
        term = best->converged ? Termination::gradient_norm : Termination::max_iters;
    }
    return OptResult{final_val.value,  std::move(dist),          cfg.restarts,
                     converged_restarts, cfg.seed, term, exhaustive_skipped};
}

/// Independent oracle: exhaustive search over supports of size <= 4 with
/// probabilities on the 1/grid_steps lattice. Supports are anchored at the
/// all-identity timeline; every support is a translate of an anchored one
/// with the same expectation, so the anchored scan is still exhaustive.
inline double brute_force_min(std::size_t n, std::size_t d, std::size_t grid_steps) {
    if (n < 3) throw std::invalid_argument("brute_force_min: requires n >= 3");
    if (d < 2) throw std::invalid_argument("brute_force_min: requires d >= 2");
    const std::size_t count = timeline_count(n, d);
    if (count > 10'000) {
        throw std::invalid_argument("brute_force_min: d^{n-1} = " + std::to_string(count) +
                                    " exceeds the 10^4 oracle limit");
    }
    if (grid_steps < 10) {
        throw std::invalid_argument("brute_force_min: grid_steps must be at least 10");
    }

    const auto all = enumerate_timelines(n, d, 10'000);
    const std::size_t t_total = all.size();
    std::vector<double> roots_re(d), roots_im(d);
    for (std::size_t k = 0; k < d; ++k) {
        const auto z = PhaseExponent(static_cast<std::int64_t>(k), d).to_complex();
        roots_re[k] = z.real();
        roots_im[k] = z.imag();
    }
    // column j holds timeline j's outcome phases, split into re/im planes
    std::vector<double> col_re(t_total * n), col_im(t_total * n);
    for (std::size_t j = 0; j < t_total; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            col_re[j * n + i] = roots_re[all[j][i].exponent()];
            col_im[j * n + i] = roots_im[all[j][i].exponent()];
        }
    }

    const double scale = std::pow(1.0 / static_cast<double>(grid_steps), static_cast<double>(n));
    constexpr double imag_tol = 1e-9;
    double best = 1.0;  // every single-timeline support gives exactly 1

    std::vector<double> acc_re(5 * n), acc_im(5 * n);
    std::vector<const double*> qre(4), qim(4);

    for (std::size_t s = 2; s <= std::min<std::size_t>(4, t_total); ++s) {
        detail::for_each_combination(t_total - 1, s - 1, [&](std::span<const std::size_t> pick) {
            qre[0] = col_re.data();
            qim[0] = col_im.data();
            for (std::size_t j = 0; j < pick.size(); ++j) {
                qre[j + 1] = col_re.data() + (pick[j] + 1) * n;
                qim[j + 1] = col_im.data() + (pick[j] + 1) * n;
            }

            // depth-first over compositions of grid_steps into s positive
            // parts; the last two coordinates run in one fused pass
            auto scan = [&](auto&& self, std::size_t level, std::size_t rem, const double* are,
                            const double* aim) -> void {
                double* bre = acc_re.data() + (level + 1) * n;
                double* bim = acc_im.data() + (level + 1) * n;
                if (level == s - 2) {
                    const double* ure = qre[level];
                    const double* uim = qim[level];
                    const double* vre = qre[level + 1];
                    const double* vim = qim[level + 1];
                    const double last = static_cast<double>(rem - 1);
                    for (std::size_t i = 0; i < n; ++i) {
                        bre[i] = are[i] + ure[i] + last * vre[i];
                        bim[i] = aim[i] + uim[i] + last * vim[i];
                    }
                    for (std::size_t c = 1; c < rem; ++c) {
                        double pre = bre[0], pim = bim[0];
                        for (std::size_t i = 1; i < n; ++i) {
                            const double nre = pre * bre[i] - pim * bim[i];
                            pim = pre * bim[i] + pim * bre[i];
                            pre = nre;
                        }
                        if (std::abs(pim) * scale <= imag_tol) {
                            best = std::min(best, pre * scale);
                        }
                        for (std::size_t i = 0; i < n; ++i) {
                            bre[i] += ure[i] - vre[i];
                            bim[i] += uim[i] - vim[i];
                        }
                    }
                    return;
                }
                const double* ure = qre[level];
                const double* uim = qim[level];
                for (std::size_t i = 0; i < n; ++i) {
                    bre[i] = are[i] + ure[i];
                    bim[i] = aim[i] + uim[i];
                }
                const std::size_t hi = rem - (s - 1 - level);
                for (std::size_t c = 1; c <= hi; ++c) {
                    self(self, level + 1, rem - c, bre, bim);
                    for (std::size_t i = 0; i < n; ++i) {
                        bre[i] += ure[i];
                        bim[i] += uim[i];
                    }
                }
            };
            std::fill(acc_re.begin(), acc_re.begin() + n, 0.0);
            std::fill(acc_im.begin(), acc_im.begin() + n, 0.0);
            scan(scan, 0, grid_steps, acc_re.data(), acc_im.data());
        });
    }
    return best;
}

}  // namespace tghz
