// Copyright 2026 The triplewalk Authors
// SPDX-License-Identifier: Apache-2.0

// triplewalk command-line front end. Talks to the engine only through the C
// API in triplewalk/triplewalk.h.
//
//   triplewalk evolve   --n 11 --l 5 --s 1 --j 10 --start 3 --horizon 100 --out trace.csv --plot trace.svg
//   triplewalk spectrum --n 11 --l 6 --s 1 --j 10 --out -
//   triplewalk sweep    --n 11 --l 2..10 --s 1..4 --j 10 --out sweep.csv
//   triplewalk verify   [--only NAME] [--list]
//
// Exit codes: 0 success, 1 I/O or engine failure (or a failed check), 2 invalid parameters.

#include "triplewalk/triplewalk.h"

#include "run_config.hpp"
#include "svg_plot.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

namespace {

using triplewalk::cli::RunConfig;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

constexpr const char* kOutDirEnv = "TRIPLEWALK_OUT_DIR";

/// Invalid user input; maps to exit code 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// I/O or engine failure; maps to exit code 1.
struct RuntimeFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void check(tw_status st, const std::string& context) {
    if (st == TW_OK) return;
    const std::string msg = context + ": " + tw_status_string(st) + " (" + tw_last_error() + ")";
    if (st == TW_ERR_INVALID_ARGUMENT || st == TW_ERR_OUT_OF_RANGE || st == TW_ERR_DEGENERATE_PARTITION)
        throw UsageError(msg);
    throw RuntimeFailure(msg);
}

/// Calls f(buffer, capacity, &count) twice: once to size, once to fill.
template <class F>
std::vector<double> fetch(F&& f, const std::string& context) {
    size_t count = 0;
    tw_status st = f(nullptr, 0, &count);
    if (st != TW_OK && st != TW_ERR_BUFFER_TOO_SMALL) check(st, context);
    std::vector<double> out(count);
    check(f(out.data(), out.size(), &count), context);
    return out;
}

struct ModelDeleter {
    void operator()(tw_model* m) const { tw_model_destroy(m); }
};
struct TraceDeleter {
    void operator()(tw_trace* t) const { tw_trace_destroy(t); }
};
struct SweepDeleter {
    void operator()(tw_sweep* s) const { tw_sweep_destroy(s); }
};

// ---- flag parsing -----------------------------------------------------------

int parse_int_text(const std::string& key, const std::string& text) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size())
        throw UsageError("invalid --" + key + ": expected an integer, got '" + text + "'");
    return value;
}

double parse_double_text(const std::string& key, const std::string& text) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value))
        throw UsageError("invalid --" + key + ": expected a number, got '" + text + "'");
    return value;
}

int get_int(const RunConfig& cfg, const std::string& key, int fallback) {
    const auto v = cfg.get(key);
    return v ? parse_int_text(key, *v) : fallback;
}

double get_double(const RunConfig& cfg, const std::string& key, double fallback) {
    const auto v = cfg.get(key);
    return v ? parse_double_text(key, *v) : fallback;
}

/// "a..b" or "a".
std::pair<int, int> get_range(const RunConfig& cfg, const std::string& key, std::pair<int, int> fallback) {
    const auto v = cfg.get(key);
    if (!v) return fallback;
    const auto dots = v->find("..");
    std::pair<int, int> r;
    if (dots == std::string::npos) {
        r.first = r.second = parse_int_text(key, *v);
    } else {
        r.first = parse_int_text(key, v->substr(0, dots));
        r.second = parse_int_text(key, v->substr(dots + 2));
    }
    if (r.second < r.first) throw UsageError("invalid --" + key + ": empty range '" + *v + "'");
    return r;
}

/// Comma-separated list of numbers.
std::vector<double> get_list(const RunConfig& cfg, const std::string& key, std::vector<double> fallback) {
    const auto v = cfg.get(key);
    if (!v) return fallback;
    std::vector<double> out;
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double_text(key, item));
    if (out.empty()) throw UsageError("invalid --" + key + ": empty list");
    return out;
}

tw_spec spec_from(const RunConfig& cfg, tw_spec defaults) {
    tw_spec spec;
    spec.main_len = get_int(cfg, "n", defaults.main_len);
    spec.side_len = get_int(cfg, "s", defaults.side_len);
    spec.attach = get_int(cfg, "l", defaults.attach);
    spec.coupling = get_double(cfg, "j", defaults.coupling);
    if (spec.main_len < 1) throw UsageError("invalid --n: must be >= 1");
    if (spec.side_len < 0) throw UsageError("invalid --s: must be >= 0");
    if (spec.attach < 1 || spec.attach > spec.main_len)
        throw UsageError("invalid --l: must satisfy 1 <= l <= n (n=" + std::to_string(spec.main_len) + ")");
    if (!(spec.coupling > 0.0)) throw UsageError("invalid --j: must be > 0");
    return spec;
}

double positive(const RunConfig& cfg, const std::string& key, double fallback) {
    const double v = get_double(cfg, key, fallback);
    if (!(v > 0.0)) throw UsageError("invalid --" + key + ": must be > 0");
    return v;
}

// ---- output -----------------------------------------------------------------

std::string fmt_double(double v) {
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
}

std::string short_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::filesystem::path out_dir() {
    const char* env = std::getenv(kOutDirEnv);
    return env != nullptr && *env != '\0' ? std::filesystem::path(env) : std::filesystem::path(".");
}

std::string resolve_out(const RunConfig& cfg, const std::string& key, const std::string& default_name) {
    if (auto v = cfg.get(key)) return *v;
    return (out_dir() / default_name).string();
}

/// Writes text to path, or to stdout when path is "-".
void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        std::cout.flush();
        return;
    }
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::error_code ec;
        std::filesystem::create_directories(p.parent_path(), ec);
    }
    std::ofstream out(p, std::ios::binary | std::ios::trunc);
    if (!out) throw RuntimeFailure("cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) throw RuntimeFailure("write to '" + path + "' failed");
}

std::string spec_tag(const tw_spec& s) {
    return "n" + std::to_string(s.main_len) + "_l" + std::to_string(s.attach) + "_s" + std::to_string(s.side_len) +
           "_j" + short_number(s.coupling);
}

// ---- subcommands --------------------------------------------------------------

int cmd_evolve(const RunConfig& cfg) {
    const tw_spec spec = spec_from(cfg, {11, 1, 5, 10.0});
    const int start = get_int(cfg, "start", 3);
    const double horizon = positive(cfg, "horizon", 100.0);
    const double dt = positive(cfg, "dt", 0.05);
    if (start < 1 || start > spec.main_len + spec.side_len)
        throw UsageError("invalid --start: must be a site in 1..n+s");

    tw_model* raw_model = nullptr;
    check(tw_model_create(&spec, &raw_model), "model");
    std::unique_ptr<tw_model, ModelDeleter> model(raw_model);
    tw_trace* raw_trace = nullptr;
    check(tw_trace_create(model.get(), start, horizon, dt, &raw_trace), "trace");
    std::unique_ptr<tw_trace, TraceDeleter> trace(raw_trace);

    auto column = [&](tw_trace_column c) {
        return fetch([&](double* b, size_t cap, size_t* n) { return tw_trace_column_data(trace.get(), c, b, cap, n); },
                     "trace column");
    };
    const auto t = column(TW_COL_TIME);
    const auto left = column(TW_COL_LEFT);
    const auto conn = column(TW_COL_CONN);
    const auto right = column(TW_COL_RIGHT);
    const auto side = column(TW_COL_SIDE);

    std::string csv = "t,p_left,p_conn,p_right,p_side\n";
    csv.reserve(t.size() * 100);
    for (std::size_t i = 0; i < t.size(); ++i) {
        csv += fmt_double(t[i]);
        for (double v : {left[i], conn[i], right[i], side[i]}) {
            csv += ',';
            csv += fmt_double(v);
        }
        csv += '\n';
    }
    const std::string out = resolve_out(cfg, "out", "evolve_" + spec_tag(spec) + ".csv");
    write_text(out, csv);

    if (auto plot = cfg.get("plot")) {
        const std::string title = "N=" + std::to_string(spec.main_len) + ", l=" + std::to_string(spec.attach) +
                                  ", S=" + std::to_string(spec.side_len) + ", J=" + short_number(spec.coupling) +
                                  ", start=" + std::to_string(start);
        const std::string svg = triplewalk::cli::render_svg(
            title, "t (units of inverse main-chain hopping)", "probability", t,
            {{"left part", "#1f77b4", left}, {"right part", "#d62728", right}});
        write_text(*plot, svg);
    }

    std::cerr << "max p_left=" << *std::max_element(left.begin(), left.end())
              << " max p_right=" << *std::max_element(right.begin(), right.end())
              << " max p_side=" << *std::max_element(side.begin(), side.end()) << " samples=" << t.size() << '\n';
    return kExitOk;
}

json roots_json(const tw_spec& spec, tw_root_mode mode) {
    size_t count = 0;
    tw_status st = tw_find_roots(&spec, mode, nullptr, nullptr, 0, &count);
    if (st != TW_OK && st != TW_ERR_BUFFER_TOO_SMALL) check(st, "roots");
    std::vector<double> roots(count), residuals(count);
    check(tw_find_roots(&spec, mode, roots.data(), residuals.data(), count, &count), "roots");
    const auto brackets = fetch(
        [&](double* b, size_t cap, size_t* n) { return tw_find_roots_inconclusive(&spec, mode, b, cap, n); }, "roots");
    json j;
    j["roots"] = json::array();
    for (std::size_t i = 0; i < roots.size(); ++i) j["roots"].push_back({{"z", roots[i]}, {"residual", residuals[i]}});
    j["inconclusive"] = json::array();
    for (std::size_t i = 0; i + 1 < brackets.size(); i += 2) j["inconclusive"].push_back({brackets[i], brackets[i + 1]});
    return j;
}

int cmd_spectrum(const RunConfig& cfg) {
    const tw_spec spec = spec_from(cfg, {11, 1, 5, 10.0});
    tw_model* raw_model = nullptr;
    check(tw_model_create(&spec, &raw_model), "model");
    std::unique_ptr<tw_model, ModelDeleter> model(raw_model);

    const auto eigen = fetch(
        [&](double* b, size_t cap, size_t* n) { return tw_model_eigenvalues(model.get(), b, cap, n); }, "eigenvalues");
    const auto remaining = fetch(
        [&](double* b, size_t cap, size_t* n) { return tw_remaining_levels(spec.main_len, spec.attach, b, cap, n); },
        "remaining levels");

    json report;
    report["spec"] = {{"n", spec.main_len}, {"l", spec.attach}, {"s", spec.side_len}, {"j", spec.coupling}};
    report["eigenvalues"] = eigen;
    report["remaining_levels"] = remaining;
    const auto coincident = fetch(
        [&](double* b, size_t cap, size_t* n) { return tw_coincident_levels(&spec, b, cap, n); }, "coincident levels");
    report["coincident_levels"] = coincident;

    std::vector<double> shifted;
    const bool interior = spec.attach > 1 && spec.attach < spec.main_len;
    if (interior) {
        shifted = fetch(
            [&](double* b, size_t cap, size_t* n) {
                return tw_shifted_levels_large_j(spec.main_len, spec.attach, b, cap, n);
            },
            "shifted levels");
        report["large_j_predictions"] = shifted;
    } else {
        report["large_j_predictions"] = nullptr;
    }
    const bool odd = spec.side_len % 2 == 1;
    report["detached"] = odd ? json::array({-spec.coupling, spec.coupling}) : json(nullptr);

    if (spec.side_len >= 1) {
        report["roots_exact"] = roots_json(spec, TW_ROOTS_EXACT);
        json large = roots_json(spec, TW_ROOTS_LARGE_J);
        if (odd) {
            for (auto& r : large["roots"]) {
                double delta = 0.0;
                if (tw_delta_shift(&spec, r["z"].get<double>(), &delta) == TW_OK) r["delta"] = delta;
            }
        } else {
            double lambda = 0.0;
            check(tw_lambda_s(spec.side_len, &lambda), "lambda_s");
            report["lambda_s"] = lambda;
        }
        report["roots_large_j"] = large;
    } else {
        report["roots_exact"] = nullptr;
        report["roots_large_j"] = nullptr;
    }

    // Nearest analytic prediction for every exact level.
    struct Candidate {
        double value;
        const char* kind;
    };
    std::vector<Candidate> candidates;
    for (double e : remaining) candidates.push_back({e, "remaining"});
    for (double e : coincident) candidates.push_back({e, "coincident"});
    for (double e : shifted) candidates.push_back({e, "shifted"});
    if (odd) {
        candidates.push_back({-spec.coupling, "detached"});
        candidates.push_back({spec.coupling, "detached"});
    }
    json matching = json::array();
    for (double e : eigen) {
        json m = {{"eigenvalue", e}};
        if (candidates.empty()) {
            m["nearest"] = nullptr;
            m["kind"] = nullptr;
            m["distance"] = nullptr;
        } else {
            const auto best = std::min_element(candidates.begin(), candidates.end(), [e](const auto& a, const auto& b) {
                return std::abs(a.value - e) < std::abs(b.value - e);
            });
            m["nearest"] = best->value;
            m["kind"] = best->kind;
            m["distance"] = std::abs(best->value - e);
        }
        matching.push_back(m);
    }
    report["matching"] = matching;

    write_text(resolve_out(cfg, "out", "spectrum_" + spec_tag(spec) + ".json"), report.dump(2) + "\n");
    return kExitOk;
}

json summary_json(const tw_parity_table& t) {
    json cells = json::array();
    for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q) {
            const tw_parity_cell& c = t.cells[p][q];
            json cell = {{"parity", p == 0 ? "odd" : "even"}, {"pred_gt2", q == 1}, {"present", c.present != 0}};
            if (c.present) {
                cell["count"] = c.count;
                cell["switching"] = c.switching;
                cell["agreeing"] = c.agreeing;
            } else {
                cell["count"] = nullptr;
                cell["switching"] = nullptr;
                cell["agreeing"] = nullptr;
            }
            cells.push_back(cell);
        }
    return {{"total", t.total},         {"evaluated", t.evaluated},           {"failed", t.failed},
            {"agreeing", t.agreeing},   {"agreement_rate", t.agreement_rate}, {"cells", cells}};
}

int cmd_sweep(const RunConfig& cfg) {
    tw_sweep_grid grid;
    tw_sweep_grid_default(&grid);
    const auto n = get_range(cfg, "n", {grid.n_first, grid.n_last});
    const auto l = get_range(cfg, "l", {grid.l_first, grid.l_last});
    const auto s = get_range(cfg, "s", {grid.s_first, grid.s_last});
    const auto couplings = get_list(cfg, "j", {grid.couplings, grid.couplings + grid.coupling_count});
    for (double j : couplings)
        if (!(j > 0.0)) throw UsageError("invalid --j: couplings must be > 0");
    if (n.first < 1) throw UsageError("invalid --n: must be >= 1");
    if (s.first < 0) throw UsageError("invalid --s: must be >= 0");
    if (l.first < 1 || l.second > n.first)
        throw UsageError("invalid --l: every l must satisfy 1 <= l <= n for every n in the grid");
    grid.n_first = n.first;
    grid.n_last = n.second;
    grid.l_first = l.first;
    grid.l_last = l.second;
    grid.s_first = s.first;
    grid.s_last = s.second;
    grid.couplings = couplings.data();
    grid.coupling_count = couplings.size();
    grid.start = get_int(cfg, "start", grid.start);
    grid.horizon = get_double(cfg, "horizon", grid.horizon);
    if (grid.horizon < 0.0) throw UsageError("invalid --horizon: must be >= 0 (0 selects max(100, 10 J^2))");
    grid.dt = positive(cfg, "dt", grid.dt);
    grid.threshold = positive(cfg, "threshold", grid.threshold);
    const int threads = get_int(cfg, "threads", 0);
    if (threads < 0) throw UsageError("invalid --threads: must be >= 0");
    grid.threads = static_cast<unsigned>(threads);

    tw_sweep* raw = nullptr;
    check(tw_sweep_run(&grid, &raw), "sweep");
    std::unique_ptr<tw_sweep, SweepDeleter> sweep(raw);

    std::string csv = "n,l,s,j,gcd,pred_gt2,parity,max_opposite,switching,agreement\n";
    for (size_t i = 0; i < tw_sweep_size(sweep.get()); ++i) {
        tw_sweep_record r;
        check(tw_sweep_record_at(sweep.get(), i, &r), "sweep record");
        csv += std::to_string(r.spec.main_len) + ',' + std::to_string(r.spec.attach) + ',' +
               std::to_string(r.spec.side_len) + ',' + fmt_double(r.spec.coupling) + ',' + std::to_string(r.gcd_value) +
               ',' + (r.predicate_paper ? "true" : "false") + ',' + (r.odd_parity ? "odd" : "even") + ',';
        if (r.evaluated) {
            csv += fmt_double(r.verdict.max_opposite) + ',' + (r.verdict.switching ? "true" : "false");
        } else {
            csv += ",error";
            std::cerr << "point n=" << r.spec.main_len << " l=" << r.spec.attach << " s=" << r.spec.side_len
                      << " failed: " << r.error << '\n';
        }
        csv += std::string(",") + (r.agreement ? "true" : "false") + '\n';
    }

    tw_parity_table table;
    check(tw_sweep_classify(sweep.get(), &table), "classify");
    const std::string summary = summary_json(table).dump(2) + "\n";

    const std::string out = resolve_out(cfg, "out", "sweep.csv");
    write_text(out, csv);
    if (auto path = cfg.get("summary")) {
        write_text(*path, summary);
    } else if (out == "-") {
        std::cerr << summary;
    } else {
        std::filesystem::path p(out);
        p.replace_extension(".summary.json");
        write_text(p.string(), summary);
    }
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg, bool list) {
    const size_t total = tw_check_count();
    if (list) {
        for (size_t i = 0; i < total; ++i) {
            tw_check_info info;
            check(tw_check_info_at(i, &info), "check info");
            std::cout << info.name << "\t" << info.criterion << "\t" << info.description << '\n';
        }
        return kExitOk;
    }
    std::vector<size_t> selected;
    if (auto only = cfg.get("only")) {
        size_t index = 0;
        if (tw_check_find(only->c_str(), &index) != TW_OK) throw UsageError("invalid --only: unknown check '" + *only + "'");
        selected.push_back(index);
    } else {
        for (size_t i = 0; i < total; ++i) selected.push_back(i);
    }
    int failed = 0;
    for (size_t i : selected) {
        tw_check_info info;
        tw_check_result result;
        check(tw_check_info_at(i, &info), "check info");
        check(tw_check_run(i, &result), "check run");
        if (!result.passed) ++failed;
        std::printf("%-5s %-4s %-24s %s\n", result.passed ? "PASS" : "FAIL", info.criterion, info.name, result.detail);
    }
    std::printf("%zu/%zu checks passed\n", selected.size() - static_cast<size_t>(failed), selected.size());
    return failed == 0 ? kExitOk : kExitFailure;
}

/// Registers every config key as a string flag on a subcommand.
void add_flags(CLI::App* app, std::map<std::string, std::string>& storage, const std::vector<std::string>& keys) {
    static const std::map<std::string, std::string> help{
        {"n", "main chain length N (sweep: a or a..b)"},
        {"l", "attach site l (sweep: a or a..b)"},
        {"s", "side chain length S (sweep: a or a..b)"},
        {"j", "coupling J (sweep: comma-separated list)"},
        {"start", "initial site"},
        {"horizon", "final time, inverse-hopping units"},
        {"dt", "sampling step"},
        {"threshold", "switching threshold on the opposite part"},
        {"out", "output path, '-' for stdout"},
        {"plot", "SVG plot path"},
        {"summary", "JSON summary path"},
        {"threads", "worker threads, 0 = all cores"},
        {"only", "run a single named check"},
    };
    for (const auto& k : keys) app->add_option("--" + k, storage[k], help.at(k));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Continuous-time quantum walks on triple graphs"};
    app.require_subcommand(1);
    std::string config_path;
    app.add_option("--config", config_path, "key = value file; flags override its entries");

    std::map<std::string, std::string> flags;
    const std::vector<std::string> spec_keys{"n", "l", "s", "j"};
    auto* evolve = app.add_subcommand("evolve", "probability trace of a walk started on one site");
    auto* spectrum = app.add_subcommand("spectrum", "exact and analytic level structure as JSON");
    auto* sweep = app.add_subcommand("sweep", "switching verdicts over a parameter grid");
    auto* verify = app.add_subcommand("verify", "run the acceptance checks");
    for (auto* sub : {evolve, spectrum, sweep}) sub->add_option("--config", config_path, "key = value file");
    add_flags(evolve, flags, {"n", "l", "s", "j", "start", "horizon", "dt", "out", "plot"});
    add_flags(spectrum, flags, {"n", "l", "s", "j", "out"});
    add_flags(sweep, flags, {"n", "l", "s", "j", "start", "horizon", "dt", "threshold", "threads", "out", "summary"});
    add_flags(verify, flags, {"only"});
    bool list_checks = false;
    verify->add_flag("--list", list_checks, "list check names");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        RunConfig cfg;
        if (!config_path.empty()) cfg = triplewalk::cli::load_config(config_path);
        RunConfig from_flags;
        for (auto* sub : app.get_subcommands())
            for (const auto& [key, value] : flags)
                if (auto* opt = sub->get_option_no_throw("--" + key); opt != nullptr && opt->count() > 0)
                    from_flags.set(key, value);
        cfg.merge_from(from_flags);

        if (evolve->parsed()) return cmd_evolve(cfg);
        if (spectrum->parsed()) return cmd_spectrum(cfg);
        if (sweep->parsed()) return cmd_sweep(cfg);
        if (verify->parsed()) return cmd_verify(cfg, list_checks);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const triplewalk::cli::ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
