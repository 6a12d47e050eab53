#include "uniqmax/enumeration.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "uniqmax/errors.hpp"
#include "uniqmax/parallel.hpp"
#include "uniqmax/tournament.hpp"

namespace uniqmax {

namespace {

Integer pow_integer(const Integer& base, unsigned long exponent) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
    return r;
}

// Runs fn(block, first, last) over the outcome index space and returns the
// per-block results in block order.
template <class Acc, class Fn>
std::vector<Acc> over_blocks(const PayoffModel& model, int n, const EnumerationOptions& options, Fn&& fn) {
    const std::uint64_t total = check_feasible(model, n, options);
    const unsigned blocks = std::max(1u, options.threads);
    std::vector<Acc> partial(std::min<std::uint64_t>(blocks, std::max<std::uint64_t>(total, 1)));
    parallel_blocks(static_cast<std::size_t>(total), blocks, [&](std::size_t b, std::size_t first, std::size_t last) {
        partial[b] = fn(static_cast<std::uint64_t>(first), static_cast<std::uint64_t>(last));
    });
    return partial;
}

}  // namespace

Rational OutcomeView::probability() const {
    Rational r(weight, denominator);
    r.canonicalize();
    return r;
}

Integer outcome_count(const PayoffModel& model, int n) {
    return pow_integer(Integer(model.k() + 1), static_cast<unsigned long>(game_count(n)));
}

std::uint64_t check_feasible(const PayoffModel& model, int n, const EnumerationOptions& options) {
    if (n < 1) {
        throw DomainError("enumeration needs n >= 1, got n=" + std::to_string(n));
    }
    Integer count = outcome_count(model, n);
    if (count > Integer(std::to_string(options.max_outcomes))) {
        throw FeasibilityError("enumerating n=" + std::to_string(n) + " requires " + std::to_string(model.k() + 1) +
                               "^" + std::to_string(game_count(n)) + " = " + count.get_str() +
                               " outcomes, above the cap of " + std::to_string(options.max_outcomes));
    }
    return std::stoull(count.get_str());
}

void enumerate_outcome_range(const PayoffModel& model, int n, std::uint64_t first, std::uint64_t last,
                             const OutcomeVisitor& visitor) {
    if (first >= last) {
        return;
    }
    const int k = model.k();
    const std::size_t games = game_count(n);
    std::vector<int> player_i;
    std::vector<int> player_j;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            player_i.push_back(i);
            player_j.push_back(j);
        }
    }
    const auto numerators = model.numerators();
    const bool flat = std::all_of(numerators.begin(), numerators.end(),
                                  [&](const Integer& v) { return v == numerators[0]; });
    const Integer denominator = pow_integer(model.denominator(), static_cast<unsigned long>(games));

    std::vector<int> digits(games, 0);
    std::uint64_t rest = first;
    for (std::size_t g = games; g-- > 0;) {
        digits[g] = static_cast<int>(rest % static_cast<std::uint64_t>(k + 1));
        rest /= static_cast<std::uint64_t>(k + 1);
    }
    std::vector<int> scores(n, 0);
    for (std::size_t g = 0; g < games; ++g) {
        scores[player_i[g]] += digits[g];
        scores[player_j[g]] += k - digits[g];
    }
    // prefix[g] = product of the numerators of games 0..g-1.
    std::vector<Integer> prefix(games + 1, Integer(1));
    auto refresh_from = [&](std::size_t g) {
        if (flat) {
            return;
        }
        for (std::size_t h = g; h < games; ++h) {
            prefix[h + 1] = prefix[h] * numerators[digits[h]];
        }
    };
    if (flat) {
        prefix[games] = pow_integer(numerators[0], static_cast<unsigned long>(games));
    }
    refresh_from(0);

    for (std::uint64_t index = first;;) {
        visitor(OutcomeView{n, k, index, digits, scores, prefix[games], denominator});
        if (++index >= last) {
            break;
        }
        std::size_t g = games;
        while (g > 0 && digits[g - 1] == k) {
            --g;
            digits[g] = 0;
            scores[player_i[g]] -= k;
            scores[player_j[g]] += k;
        }
        // index < last <= total, so some digit can still be incremented.
        --g;
        ++digits[g];
        ++scores[player_i[g]];
        --scores[player_j[g]];
        refresh_from(g);
    }
}

void enumerate_outcomes(const PayoffModel& model, int n, const OutcomeVisitor& visitor,
                        const EnumerationOptions& options) {
    const std::uint64_t total = check_feasible(model, n, options);
    enumerate_outcome_range(model, n, 0, total, visitor);
}

UniqueMaxReport exact_unique_max(const PayoffModel& model, int n, const EnumerationOptions& options) {
    Integer denominator;
    auto partial = over_blocks<Integer>(model, n, options, [&](std::uint64_t first, std::uint64_t last) {
        Integer unique = 0;
        enumerate_outcome_range(model, n, first, last, [&](const OutcomeView& o) {
            if (has_unique_max(o.y_scores)) {
                unique += o.weight;
            }
        });
        return unique;
    });
    Integer unique = 0;
    for (const auto& p : partial) {
        unique += p;
    }
    denominator = pow_integer(model.denominator(), static_cast<unsigned long>(game_count(n)));
    UniqueMaxReport report;
    report.n = n;
    report.r_n = Rational(unique, denominator);
    report.r_n.canonicalize();
    report.p_tie_at_max = 1 - report.r_n;
    return report;
}

CensusTable score_census(const PayoffModel& model, int n, const EnumerationOptions& options) {
    using Tally = std::map<std::vector<int>, std::pair<Integer, Integer>>;
    auto partial = over_blocks<Tally>(model, n, options, [&](std::uint64_t first, std::uint64_t last) {
        Tally tally;
        std::vector<int> key;
        enumerate_outcome_range(model, n, first, last, [&](const OutcomeView& o) {
            key.assign(o.y_scores.begin(), o.y_scores.end());
            std::sort(key.begin(), key.end());
            auto& slot = tally[key];
            slot.first += o.weight;
            slot.second += 1;
        });
        return tally;
    });
    Tally merged;
    for (auto& block : partial) {
        for (auto& [key, slot] : block) {
            auto& into = merged[key];
            into.first += slot.first;
            into.second += slot.second;
        }
    }
    const Integer denominator = pow_integer(model.denominator(), static_cast<unsigned long>(game_count(n)));
    CensusTable table;
    table.n = n;
    table.k = model.k();
    for (auto& [key, slot] : merged) {
        Rational p(slot.first, denominator);
        p.canonicalize();
        table.entries.emplace(key, CensusEntry{std::move(p), std::move(slot.second)});
    }
    return table;
}

NdRow NdReport::at(long long x) const {
    if (x < 0) {
        return NdRow{x, 0, 0};
    }
    if (x >= static_cast<long long>(rows.size())) {
        return NdRow{x, 1, 1};
    }
    return rows[static_cast<std::size_t>(x)];
}

NdReport nd_inequality_check(const PayoffModel& model, int n, const EnumerationOptions& options) {
    const std::size_t support = static_cast<std::size_t>(model.k()) * static_cast<std::size_t>(n - 1) + 1;
    using Hists = std::pair<std::vector<Integer>, std::vector<Integer>>;
    auto partial = over_blocks<Hists>(model, n, options, [&](std::uint64_t first, std::uint64_t last) {
        Hists h{std::vector<Integer>(support), std::vector<Integer>(support)};
        enumerate_outcome_range(model, n, first, last, [&](const OutcomeView& o) {
            int top = *std::max_element(o.y_scores.begin(), o.y_scores.end());
            h.first[static_cast<std::size_t>(top)] += o.weight;
            h.second[static_cast<std::size_t>(o.y_scores[0])] += o.weight;
        });
        return h;
    });
    std::vector<Integer> by_max(support);
    std::vector<Integer> by_first(support);
    for (const auto& block : partial) {
        if (block.first.empty()) {
            continue;
        }
        for (std::size_t y = 0; y < support; ++y) {
            by_max[y] += block.first[y];
            by_first[y] += block.second[y];
        }
    }
    const Integer denominator = pow_integer(model.denominator(), static_cast<unsigned long>(game_count(n)));
    NdReport report;
    report.n = n;
    report.k = model.k();
    Integer cum_max = 0;
    Integer cum_first = 0;
    for (std::size_t y = 0; y < support; ++y) {
        cum_max += by_max[y];
        cum_first += by_first[y];
        NdRow row;
        row.x = static_cast<long long>(y);
        row.lhs = Rational(cum_max, denominator);
        row.lhs.canonicalize();
        Rational marginal(cum_first, denominator);
        marginal.canonicalize();
        row.rhs = Rational(pow_integer(marginal.get_num(), static_cast<unsigned long>(n)),
                           pow_integer(marginal.get_den(), static_cast<unsigned long>(n)));
        row.rhs.canonicalize();
        Rational diff = row.lhs - row.rhs;
        if (y == 0 || diff > report.max_lhs_minus_rhs) {
            report.max_lhs_minus_rhs = diff;
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

std::map<int, Rational> wn_distribution_exact(const PayoffModel& model, int n, double y_threshold,
                                              const EnumerationOptions& options) {
    const std::size_t support = static_cast<std::size_t>(model.k()) * static_cast<std::size_t>(n - 1) + 1;
    using Tally = std::map<int, Integer>;
    auto partial = over_blocks<Tally>(model, n, options, [&](std::uint64_t first, std::uint64_t last) {
        Tally tally;
        std::vector<int> scratch(support, 0);
        enumerate_outcome_range(model, n, first, last, [&](const OutcomeView& o) {
            tally[tie_pairs_above(o.y_scores, y_threshold, scratch)] += o.weight;
        });
        return tally;
    });
    Tally merged;
    for (const auto& block : partial) {
        for (const auto& [w, weight] : block) {
            merged[w] += weight;
        }
    }
    const Integer denominator = pow_integer(model.denominator(), static_cast<unsigned long>(game_count(n)));
    std::map<int, Rational> dist;
    for (const auto& [w, weight] : merged) {
        Rational p(weight, denominator);
        p.canonicalize();
        dist.emplace(w, std::move(p));
    }
    return dist;
}

LatticePmf enumerated_marginal(const PayoffModel& model, int n, int player, const EnumerationOptions& options) {
    if (player < 0 || player >= n) {
        throw DomainError("player index " + std::to_string(player) + " outside 0.." + std::to_string(n - 1));
    }
    const std::size_t support = static_cast<std::size_t>(model.k()) * static_cast<std::size_t>(n - 1) + 1;
    auto partial = over_blocks<std::vector<Integer>>(model, n, options, [&](std::uint64_t first, std::uint64_t last) {
        std::vector<Integer> hist(support);
        enumerate_outcome_range(model, n, first, last, [&](const OutcomeView& o) {
            hist[static_cast<std::size_t>(o.y_scores[player])] += o.weight;
        });
        return hist;
    });
    std::vector<Integer> hist(support);
    for (const auto& block : partial) {
        for (std::size_t y = 0; y < block.size(); ++y) {
            hist[y] += block[y];
        }
    }
    return LatticePmf::exact(model.k(), n - 1, std::move(hist),
                             pow_integer(model.denominator(), static_cast<unsigned long>(game_count(n))));
}

}  // namespace uniqmax
