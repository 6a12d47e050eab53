#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "document.hpp"
#include "uniqmax/asymptotics.hpp"
#include "uniqmax/enumeration.hpp"
#include "uniqmax/errors.hpp"
#include "uniqmax/exact_dist.hpp"
#include "uniqmax/model_spec.hpp"
#include "uniqmax/monte_carlo.hpp"

namespace uniqmax::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public Error {
   public:
    using Error::Error;
};

struct Options {
    std::string model = "classic";
    std::string model_file;
    int n = 0;
    std::string grid;
    int n_games = -1;
    double epsilon = 1.0;
    std::optional<double> score_threshold;
    std::optional<double> y_threshold;
    std::uint64_t seed = 1;
    std::uint64_t reps = 10'000;
    double confidence = 0.95;
    std::string mode = "exact";
    std::string x_grid = "0.5,1,1.5,2,2.5";
    std::string output;
    unsigned threads = 1;
};

unsigned default_threads() {
    if (const char* env = std::getenv("UNIQMAX_THREADS")) {
        try {
            unsigned long v = std::stoul(env);
            return v == 0 ? 1u : static_cast<unsigned>(v);
        } catch (const std::exception&) {
            throw UsageError(std::string("UNIQMAX_THREADS is not a positive integer: '") + env + "'");
        }
    }
    return 1;
}

std::uint64_t max_outcomes() {
    EnumerationOptions defaults;
    if (const char* env = std::getenv("UNIQMAX_MAX_OUTCOMES")) {
        try {
            std::size_t used = 0;
            unsigned long long v = std::stoull(env, &used);
            if (used != std::string_view(env).size()) {
                throw std::invalid_argument("trailing characters");
            }
            return v;
        } catch (const std::exception&) {
            throw UsageError(std::string("UNIQMAX_MAX_OUTCOMES is not a nonnegative integer: '") + env + "'");
        }
    }
    return defaults.max_outcomes;
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof buffer, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

std::vector<int> expand_grid(const std::string& spec) {
    std::vector<int> parts;
    std::stringstream in(spec);
    std::string piece;
    while (std::getline(in, piece, ':')) {
        try {
            std::size_t used = 0;
            parts.push_back(std::stoi(piece, &used));
            if (used != piece.size()) {
                throw std::invalid_argument(piece);
            }
        } catch (const std::exception&) {
            throw UsageError("malformed --grid '" + spec + "' (expected n1:n2:step)");
        }
    }
    if (parts.size() != 3 || parts[2] < 1 || parts[0] > parts[1]) {
        throw UsageError("malformed --grid '" + spec + "' (expected n1:n2:step with n1 <= n2, step >= 1)");
    }
    std::vector<int> grid;
    for (long long v = parts[0]; v <= parts[1]; v += parts[2]) {
        grid.push_back(static_cast<int>(v));
    }
    return grid;
}

std::vector<double> parse_x_grid(const std::string& spec) {
    std::vector<double> xs;
    std::stringstream in(spec);
    std::string piece;
    while (std::getline(in, piece, ',')) {
        try {
            std::size_t used = 0;
            xs.push_back(std::stod(piece, &used));
            if (used != piece.size()) {
                throw std::invalid_argument(piece);
            }
        } catch (const std::exception&) {
            throw UsageError("malformed --x-grid entry '" + piece + "'");
        }
    }
    if (xs.empty()) {
        throw UsageError("--x-grid is empty");
    }
    return xs;
}

/// Resolved inputs shared by every subcommand, plus the manifest they produce.
class Context {
   public:
    Context(std::string subcommand, const Options& opts) : subcommand_(std::move(subcommand)), opts_(opts) {}

    PayoffModel model() {
        if (!model_) {
            model_ = opts_.model_file.empty() ? model_from_alias(opts_.model) : load_model_spec(opts_.model_file);
            param("model", model_->label());
        }
        return *model_;
    }

    std::vector<int> ns() {
        std::vector<int> grid;
        if (!opts_.grid.empty()) {
            grid = expand_grid(opts_.grid);
            param("grid", opts_.grid);
        } else if (opts_.n > 0) {
            grid = {opts_.n};
            param("n", std::to_string(opts_.n));
        } else {
            throw UsageError(subcommand_ + ": --n or --grid is required");
        }
        return grid;
    }

    double epsilon() {
        param("epsilon", format_double(opts_.epsilon));
        return opts_.epsilon;
    }

    Mode mode() {
        param("mode", opts_.mode);
        return opts_.mode == "exact" ? Mode::exact : Mode::binary64;
    }

    PmfOptions pmf_options() {
        PmfOptions o;
        o.mode = mode();
        o.threads = opts_.threads;
        return o;
    }

    EnumerationOptions enumeration_options() {
        EnumerationOptions o;
        o.max_outcomes = max_outcomes();
        o.threads = opts_.threads;
        param("max_outcomes", std::to_string(o.max_outcomes));
        return o;
    }

    McConfig mc_config() {
        McConfig c;
        c.seed = opts_.seed;
        c.reps = opts_.reps;
        c.confidence = opts_.confidence;
        c.threads = opts_.threads;
        param("seed", std::to_string(c.seed));
        param("reps", std::to_string(c.reps));
        param("confidence", format_double(c.confidence));
        return c;
    }

    /// Explicit Y-threshold override, if any (score thresholds are scaled by k).
    std::optional<double> y_threshold_override(const PayoffModel& model) {
        if (opts_.score_threshold && opts_.y_threshold) {
            throw UsageError("--score-threshold and --y-threshold are mutually exclusive");
        }
        if (opts_.score_threshold) {
            param("score_threshold", format_double(*opts_.score_threshold));
            return model.k() * *opts_.score_threshold;
        }
        if (opts_.y_threshold) {
            param("y_threshold", format_double(*opts_.y_threshold));
            return *opts_.y_threshold;
        }
        return std::nullopt;
    }

    void param(const std::string& key, const std::string& value) {
        for (auto& kv : params_) {
            if (kv.first == key) {
                kv.second = value;
                return;
            }
        }
        params_.emplace_back(key, value);
    }

    void note(std::string line) { extra_.push_back(std::move(line)); }

    const Options& opts() const { return opts_; }

    std::vector<std::string> metadata() const {
        std::vector<std::string> lines;
        lines.push_back(std::string("tool=uniqmax ") + kVersion + ", subcommand=" + subcommand_);
        lines.push_back("timestamp=" + utc_timestamp());
        std::string params = "params:";
        for (std::size_t i = 0; i < params_.size(); ++i) {
            params += (i ? ", " : " ") + params_[i].first + "=" + params_[i].second;
        }
        lines.push_back(params);
        lines.push_back("threads=" + std::to_string(opts_.threads) +
                        (opts_.output.empty() ? std::string() : ", output=" + opts_.output));
        lines.insert(lines.end(), extra_.begin(), extra_.end());
        return lines;
    }

   private:
    std::string subcommand_;
    Options opts_;
    std::optional<PayoffModel> model_;
    std::vector<std::pair<std::string, std::string>> params_;
    std::vector<std::string> extra_;
};

Json rational_or_null(const std::optional<Rational>& r) {
    return r ? Json(to_fraction_string(*r)) : Json(nullptr);
}

Json mc_record(const char* op, const PayoffModel& model, int n, std::optional<double> epsilon, const EstimateCI& e) {
    Json j;
    j["op"] = op;
    j["model"] = model.label();
    j["n"] = n;
    j["epsilon"] = epsilon ? Json(*epsilon) : Json(nullptr);
    j["seed"] = e.seed;
    j["reps"] = e.reps;
    j["estimate"] = e.estimate;
    j["ci"] = Json::array({e.ci_low, e.ci_high});
    j["successes"] = e.successes;
    j["confidence"] = e.confidence;
    return j;
}

Document ratio_document(Context& ctx, const PayoffModel& model, double epsilon, const RatioDiagnostic& d) {
    ctx.note("model=" + model.label() + ", epsilon=" + format_double(epsilon) + ", quantity=" + d.quantity);
    Document doc;
    doc.header = {field("n"), field("exact"), field("asymptotic"), field("ratio")};
    for (std::size_t i = 0; i < d.n_grid.size(); ++i) {
        doc.rows.push_back({field(std::to_string(d.n_grid[i])), field(format_double(d.exact_values[i])),
                            field(format_double(d.asymptotic_values[i])), field(format_double(d.ratios[i]))});
    }
    return doc;
}

Document json_document() {
    Document doc;
    doc.kind = Document::Kind::json;
    return doc;
}

using Handler = std::function<Document(Context&)>;

Document cmd_exact_r(Context& ctx) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const auto opts = ctx.enumeration_options();
    Document doc = json_document();
    for (int n : ns) {
        const auto report = exact_unique_max(model, n, opts);
        Json j;
        j["op"] = "exact-r";
        j["model"] = model.label();
        j["n"] = n;
        j["r_n"] = to_fraction_string(report.r_n);
        j["p_tie_at_max"] = to_fraction_string(report.p_tie_at_max);
        j["r_n_float"] = to_double(report.r_n);
        doc.records.push_back(std::move(j));
    }
    return doc;
}

Document cmd_census(Context& ctx) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const auto opts = ctx.enumeration_options();
    Document doc;
    doc.header = {field("n"), field("scores"), field("count"), field("prob_num"), field("prob_den")};
    for (int n : ns) {
        const auto table = score_census(model, n, opts);
        for (const auto& [key, entry] : table.entries) {
            std::string scores;
            for (std::size_t i = 0; i < key.size(); ++i) {
                scores += (i ? "," : "") + std::to_string(key[i]);
            }
            doc.rows.push_back({field(std::to_string(n)), quoted(scores), field(entry.count.get_str()),
                                field(entry.probability.get_num().get_str()),
                                field(entry.probability.get_den().get_str())});
        }
    }
    return doc;
}

Document cmd_nd_check(Context& ctx) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const auto opts = ctx.enumeration_options();
    Document doc;
    doc.header = {field("n"), field("x"), field("lhs_num"), field("lhs_den"), field("rhs_num"), field("rhs_den"),
                  field("holds")};
    for (int n : ns) {
        const auto report = nd_inequality_check(model, n, opts);
        ctx.note("n=" + std::to_string(n) + ", max_lhs_minus_rhs=" + to_fraction_string(report.max_lhs_minus_rhs) +
                 ", holds=" + (report.holds() ? "true" : "false"));
        for (const auto& row : report.rows) {
            doc.rows.push_back({field(std::to_string(n)), field(std::to_string(row.x)),
                                field(row.lhs.get_num().get_str()), field(row.lhs.get_den().get_str()),
                                field(row.rhs.get_num().get_str()), field(row.rhs.get_den().get_str()),
                                field(row.lhs <= row.rhs ? "true" : "false")});
        }
    }
    return doc;
}

double resolve_y_threshold(Context& ctx, const PayoffModel& model, int n) {
    if (auto y = ctx.y_threshold_override(model)) {
        return *y;
    }
    return threshold(model, n, ctx.epsilon()).t_n_lattice;
}

Document cmd_wn_dist(Context& ctx) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const auto opts = ctx.enumeration_options();
    Document doc;
    doc.header = {field("n"), field("y_threshold"), field("w"), field("prob_num"), field("prob_den")};
    for (int n : ns) {
        const double y = resolve_y_threshold(ctx, model, n);
        for (const auto& [w, p] : wn_distribution_exact(model, n, y, opts)) {
            doc.rows.push_back({field(std::to_string(n)), field(format_double(y)), field(std::to_string(w)),
                                field(p.get_num().get_str()), field(p.get_den().get_str())});
        }
    }
    return doc;
}

Document cmd_pmf(Context& ctx) {
    const auto model = ctx.model();
    if (ctx.opts().n_games < 0) {
        throw UsageError("pmf: --n-games is required");
    }
    const int games = ctx.opts().n_games;
    ctx.param("n_games", std::to_string(games));
    const auto options = ctx.pmf_options();
    const auto pmf = score_pmf(model, games, options);
    ctx.note("model=" + model.label() + ", n_games=" + std::to_string(games) + ", mode=" + ctx.opts().mode);
    Document doc;
    if (pmf.mode() == Mode::exact) {
        doc.header = {field("y"), field("mass_num"), field("mass_den")};
        for (long long y = 0; y <= pmf.max_y(); ++y) {
            const Rational m = pmf.exact_mass(y);
            doc.rows.push_back({field(std::to_string(y)), field(m.get_num().get_str()), field(m.get_den().get_str())});
        }
    } else {
        ctx.note("drift=" + format_double(pmf.drift()) + (pmf.quality_warning() ? ", warning=drift above 1e-9" : ""));
        doc.header = {field("y"), field("mass")};
        for (long long y = 0; y <= pmf.max_y(); ++y) {
            doc.rows.push_back({field(std::to_string(y)), field(format_double(pmf.mass(y)))});
        }
    }
    return doc;
}

Document cmd_threshold(Context& ctx) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const double eps = ctx.epsilon();
    Document doc = json_document();
    for (int n : ns) {
        const auto t = threshold(model, n, eps);
        Json j;
        j["op"] = "threshold";
        j["model"] = model.label();
        j["n"] = n;
        j["epsilon"] = eps;
        j["x_n"] = t.x_n;
        j["t_n"] = t.t_n;
        j["t_n_lattice"] = t.t_n_lattice;
        j["feller_ratio"] = feller_condition_ratio(model, n, eps);
        doc.records.push_back(std::move(j));
    }
    return doc;
}

Document cmd_wn_exact(Context& ctx) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const auto options = ctx.pmf_options();
    const auto override_y = ctx.y_threshold_override(model);
    const double eps = override_y ? 0.0 : ctx.epsilon();
    Document doc = json_document();
    for (int n : ns) {
        const double y = override_y ? *override_y : threshold(model, n, eps).t_n_lattice;
        const auto q = expected_wn_exact(model, n, y, options);
        Json j;
        j["op"] = "wn-exact";
        j["model"] = model.label();
        j["n"] = n;
        j["epsilon"] = override_y ? Json(nullptr) : Json(eps);
        j["y_threshold"] = y;
        j["mode"] = to_string(options.mode);
        j["value"] = q.value;
        j["exact"] = rational_or_null(q.exact);
        doc.records.push_back(std::move(j));
    }
    return doc;
}

Document cmd_wn_bound(Context& ctx) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const double eps = ctx.epsilon();
    const auto options = ctx.pmf_options();
    Document doc = json_document();
    for (int n : ns) {
        const auto q = expected_wn_upper(model, n, eps, options);
        Json j;
        j["op"] = "wn-bound";
        j["model"] = model.label();
        j["n"] = n;
        j["epsilon"] = eps;
        j["y_window"] = model.k() * (threshold(model, n - 1, eps).t_n - 1.0);
        j["mode"] = to_string(options.mode);
        j["rhs_n"] = q.value;
        j["exact"] = rational_or_null(q.exact);
        doc.records.push_back(std::move(j));
    }
    return doc;
}

Document cmd_prop1_bound(Context& ctx) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const double eps = ctx.epsilon();
    const auto options = ctx.pmf_options();
    Document doc = json_document();
    for (int n : ns) {
        const auto t = threshold(model, n, eps);
        const auto tail = tail_prob(score_pmf(model, n - 1, options), t.t_n_lattice);
        const auto bound = complement_power(tail, n);
        Json j;
        j["op"] = "prop1-bound";
        j["model"] = model.label();
        j["n"] = n;
        j["epsilon"] = eps;
        j["t_n"] = t.t_n;
        j["mode"] = to_string(options.mode);
        j["tail_prob"] = tail.value;
        j["tail_prob_exact"] = rational_or_null(tail.exact);
        j["lower_bound"] = bound.value;
        j["lower_bound_exact"] = rational_or_null(bound.exact);
        doc.records.push_back(std::move(j));
    }
    return doc;
}

Document cmd_mc_unique(Context& ctx) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const auto cfg = ctx.mc_config();
    Document doc = json_document();
    for (int n : ns) {
        const auto tally = tally_unique_max(model, n, cfg);
        auto j = mc_record("mc-unique", model, n, std::nullopt,
                           wilson_interval(tally.unique, tally.reps, cfg.confidence, cfg.seed));
        j["ties_at_max"] = tally.tied;
        doc.records.push_back(std::move(j));
    }
    return doc;
}

template <class Estimator>
Document mc_threshold_command(Context& ctx, const char* op, Estimator estimate) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const auto cfg = ctx.mc_config();
    const auto override_y = ctx.y_threshold_override(model);
    const double eps = override_y ? 0.0 : ctx.epsilon();
    Document doc = json_document();
    for (int n : ns) {
        const double y = override_y ? *override_y : threshold(model, n, eps).t_n_lattice;
        auto j = mc_record(op, model, n, override_y ? std::nullopt : std::optional<double>(eps),
                           estimate(model, n, y, cfg));
        j["y_threshold"] = y;
        doc.records.push_back(std::move(j));
    }
    return doc;
}

Document cmd_tail_compare(Context& ctx) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const double eps = ctx.epsilon();
    return ratio_document(ctx, model, eps, tail_ratio(model, ns, eps));
}

Document cmd_llt_compare(Context& ctx) {
    const auto model = ctx.model();
    std::vector<int> grid;
    if (ctx.opts().n_games >= 0 && ctx.opts().grid.empty()) {
        grid = {ctx.opts().n_games};
        ctx.param("n_games", std::to_string(ctx.opts().n_games));
    } else {
        grid = ctx.ns();
    }
    Document doc;
    doc.header = {field("n_games"), field("sup_error"), field("scaled_sup_error")};
    for (int m : grid) {
        const auto e = llt_sup_error(model, m);
        doc.rows.push_back({field(std::to_string(m)), field(format_double(e.sup_error)),
                            field(format_double(e.scaled_sup_error))});
    }
    return doc;
}

Document cmd_claim2(Context& ctx) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const auto xs = parse_x_grid(ctx.opts().x_grid);
    ctx.param("x_grid", ctx.opts().x_grid);
    Document doc;
    doc.header = {field("n"),    field("x"),    field("y_x"),        field("p_x"),         field("y_x1"),
                  field("p_x1"), field("gaussian_x"), field("gaussian_x1"), field("violation")};
    for (int n : ns) {
        const auto report = claim2_check(model, n, xs);
        for (const auto& r : report.rows) {
            doc.rows.push_back({field(std::to_string(r.n)), field(format_double(r.x)), field(std::to_string(r.y_x)),
                                field(format_double(r.p_x)), field(std::to_string(r.y_x1)),
                                field(format_double(r.p_x1)), field(format_double(r.gaussian_x)),
                                field(format_double(r.gaussian_x1)), field(r.violation ? "true" : "false")});
        }
    }
    return doc;
}

Document cmd_claim3_compare(Context& ctx) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const double eps = ctx.epsilon();
    return ratio_document(ctx, model, eps, claim3_ratio(model, ns, eps));
}

Document cmd_rhs_compare(Context& ctx) {
    const auto model = ctx.model();
    const auto ns = ctx.ns();
    const double eps = ctx.epsilon();
    return ratio_document(ctx, model, eps, rhs_ratio(model, ns, eps));
}

enum Flag : unsigned {
    kModel = 1u << 0,
    kN = 1u << 1,
    kEpsilon = 1u << 2,
    kMode = 1u << 3,
    kMc = 1u << 4,
    kThresholdOverride = 1u << 5,
    kNGames = 1u << 6,
    kXGrid = 1u << 7,
};

struct Command {
    const char* name;
    const char* help;
    unsigned flags;
    Handler handler;
};

const std::vector<Command>& commands() {
    static const std::vector<Command> table = {
        {"exact-r", "Exact probability of a unique maximum by full enumeration", kModel | kN, cmd_exact_r},
        {"census", "Score-sequence census by full enumeration", kModel | kN, cmd_census},
        {"nd-check", "Check P(all scores <= x) <= P(s_1 <= x)^n at every lattice x", kModel | kN, cmd_nd_check},
        {"wn-dist", "Exact distribution of W_n(t) by enumeration", kModel | kN | kEpsilon | kThresholdOverride,
         cmd_wn_dist},
        {"pmf", "Single-player score PMF on the Y-lattice", kModel | kMode | kNGames, cmd_pmf},
        {"threshold", "Threshold t_n and x_n", kModel | kN | kEpsilon, cmd_threshold},
        {"wn-exact", "Exact E[W_n(t)] via the shared-game decomposition",
         kModel | kN | kEpsilon | kMode | kThresholdOverride, cmd_wn_exact},
        {"wn-bound", "Upper bound RHS_n on E[W_n(t_n)]", kModel | kN | kEpsilon | kMode, cmd_wn_bound},
        {"prop1-bound", "Lower bound 1-(1-p)^n on P(max score > t_n)", kModel | kN | kEpsilon | kMode,
         cmd_prop1_bound},
        {"mc-unique", "Monte Carlo estimate of the unique-maximum probability", kModel | kN | kMc, cmd_mc_unique},
        {"mc-exceed", "Monte Carlo estimate of P(max score > t_n)",
         kModel | kN | kEpsilon | kMc | kThresholdOverride,
         [](Context& ctx) { return mc_threshold_command(ctx, "mc-exceed", estimate_exceed_y_threshold); }},
        {"mc-collision-free", "Monte Carlo estimate of P(W_n(t_n) = 0)",
         kModel | kN | kEpsilon | kMc | kThresholdOverride,
         [](Context& ctx) { return mc_threshold_command(ctx, "mc-collision-free", estimate_collision_free_y); }},
        {"tail-compare", "Exact tail P(s_1(n) > t_n) against its asymptotic form", kModel | kN | kEpsilon,
         cmd_tail_compare},
        {"llt-compare", "Local limit theorem sup-error over the lattice", kModel | kN | kNGames, cmd_llt_compare},
        {"claim2", "Monotonicity P_n(x) >= P_n(x+1) on the lattice", kModel | kN | kXGrid, cmd_claim2},
        {"claim3-compare", "Point probability at ceil(t_{n-1}-1) against its asymptotic form",
         kModel | kN | kEpsilon, cmd_claim3_compare},
        {"rhs-compare", "RHS_n against its asymptotic form", kModel | kN | kEpsilon, cmd_rhs_compare},
    };
    return table;
}

void add_flags(CLI::App& sub, unsigned flags, Options& o) {
    if (flags & kModel) {
        sub.add_option("--model", o.model, "classic | chess:<p_draw> | uniform:<k>");
        sub.add_option("--model-file", o.model_file, "JSON model document {\"k\":..,\"probs\":[..]}");
    }
    if (flags & kN) {
        sub.add_option("--n", o.n, "Number of players")->check(CLI::PositiveNumber);
        sub.add_option("--grid", o.grid, "n1:n2:step, ascending");
    }
    if (flags & kEpsilon) {
        sub.add_option("--epsilon", o.epsilon, "Threshold exponent epsilon > 0")->capture_default_str();
    }
    if (flags & kMode) {
        sub.add_option("--mode", o.mode, "exact | float")
            ->transform(CLI::CheckedTransformer(std::map<std::string, std::string>{
                {"exact", "exact"}, {"float", "float"}, {"binary64", "float"}}))
            ->capture_default_str();
    }
    if (flags & kMc) {
        sub.add_option("--seed", o.seed, "Base seed")->capture_default_str();
        sub.add_option("--reps", o.reps, "Replications")->check(CLI::PositiveNumber)->capture_default_str();
        sub.add_option("--confidence", o.confidence, "Wilson interval coverage")
            ->check(CLI::Range(0.0, 1.0))
            ->capture_default_str();
    }
    if (flags & kThresholdOverride) {
        sub.add_option("--score-threshold", o.score_threshold, "Explicit threshold in score units");
        sub.add_option("--y-threshold", o.y_threshold, "Explicit threshold in Y-units (k * score)");
    }
    if (flags & kNGames) {
        sub.add_option("--n-games", o.n_games, "Number of games in the sum")->check(CLI::NonNegativeNumber);
    }
    if (flags & kXGrid) {
        sub.add_option("--x-grid", o.x_grid, "Comma-separated positive x values")->capture_default_str();
    }
    sub.add_option("--output,-o", o.output, "Write to this file instead of stdout");
    sub.add_option("--threads", o.threads, "Worker threads (results do not depend on it)")
        ->check(CLI::PositiveNumber);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opts;
    try {
        opts.threads = default_threads();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    CLI::App app{"uniqmax: unique maximum score in round-robin tournaments"};
    app.name("uniqmax");
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    std::vector<std::pair<CLI::App*, const Command*>> subs;
    for (const auto& cmd : commands()) {
        CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
        add_flags(*sub, cmd.flags, opts);
        subs.emplace_back(sub, &cmd);
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::CallForVersion& e) {
        out << kVersion << "\n";
        return kOk;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // Subcommand --help.
            for (auto& [sub, cmd] : subs) {
                if (sub->parsed()) {
                    out << sub->help();
                    return kOk;
                }
            }
            out << app.help();
            return kOk;
        }
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    for (auto& [sub, cmd] : subs) {
        if (!sub->parsed()) {
            continue;
        }
        try {
            Context ctx(cmd->name, opts);
            Document doc = cmd->handler(ctx);
            doc.metadata = ctx.metadata();
            const std::string text = doc.serialize();
            if (opts.output.empty()) {
                out << text;
            } else {
                std::ofstream file(opts.output, std::ios::binary | std::ios::trunc);
                if (!file) {
                    err << "error: cannot write '" << opts.output << "'\n";
                    return kUsage;
                }
                file << text;
            }
            return kOk;
        } catch (const UsageError& e) {
            err << "usage error: " << e.what() << "\n";
            return kUsage;
        } catch (const ModelError& e) {
            err << "usage error: malformed model: " << e.what() << "\n";
            return kUsage;
        } catch (const DomainError& e) {
            err << "domain error: " << e.what() << "\n";
            return kDomain;
        } catch (const ResourceError& e) {
            err << "resource error: " << e.what() << "\n";
            return kResource;
        } catch (const std::exception& e) {
            err << "error: " << e.what() << "\n";
            return kInternal;
        }
    }
    err << "usage error: no subcommand given\n";
    return kUsage;
}

}  // namespace uniqmax::cli
