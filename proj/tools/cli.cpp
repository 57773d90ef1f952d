#include "cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>
#include <vector>

#include "wbou/analytics.hpp"
#include "wbou/csv.hpp"
#include "wbou/error.hpp"
#include "wbou/estimation.hpp"
#include "wbou/law.hpp"
#include "wbou/parallel.hpp"
#include "wbou/path_engine.hpp"
#include "wbou/svmodel.hpp"

namespace wbou::cli {

namespace {

using csv::format_double;

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    const auto e = s.find_last_not_of(" \t\r\n");
    return b == std::string_view::npos ? std::string{} : std::string(s.substr(b, e - b + 1));
}

double parse_param(const std::map<std::string, std::string>& kv, const std::string& key,
                   const std::string& family) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw InvalidDriver(family + ": missing parameter '" + key + "'");
    double v = 0.0;
    if (!CLI::detail::lexical_cast(it->second, v)) {
        throw InvalidDriver(family + ": parameter '" + key + "' is not a number: " + it->second);
    }
    return v;
}

void reject_unknown(const std::map<std::string, std::string>& kv,
                    std::initializer_list<const char*> allowed, const std::string& family) {
    for (const auto& [k, v] : kv) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || k == a;
        if (!ok) throw InvalidDriver(family + ": unknown parameter '" + k + "'");
    }
}

}  // namespace

Driver parse_driver(std::string_view text) {
    const std::string spec = trim(text);
    const auto colon = spec.find(':');
    const std::string family = trim(spec.substr(0, colon));
    std::map<std::string, std::string> kv;
    if (colon != std::string::npos) {
        std::stringstream ss(spec.substr(colon + 1));
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (trim(item).empty()) continue;
            const auto eq = item.find('=');
            if (eq == std::string::npos) throw InvalidDriver("driver parameter '" + item + "' lacks '='");
            const std::string key = trim(item.substr(0, eq));
            if (!kv.emplace(key, trim(item.substr(eq + 1))).second) {
                throw InvalidDriver("driver parameter '" + key + "' given twice");
            }
        }
    }

    if (family == "brownian" || family == "bm") {
        reject_unknown(kv, {"gamma", "sigma2"}, family);
        const double g = kv.count("gamma") ? parse_param(kv, "gamma", family) : 0.0;
        const double s2 = kv.count("sigma2") ? parse_param(kv, "sigma2", family) : 1.0;
        return Driver::brownian(g, s2);
    }
    if (family == "gamma" || family == "gamma_subordinator") {
        reject_unknown(kv, {"a", "b"}, family);
        return Driver::gamma_subordinator(parse_param(kv, "a", family), parse_param(kv, "b", family));
    }
    if (family == "drift" || family == "deterministic_drift") {
        reject_unknown(kv, {"gamma"}, family);
        return Driver::deterministic_drift(parse_param(kv, "gamma", family));
    }
    if (family == "cpoisson" || family == "compound_poisson") {
        const auto jump = kv.count("jump") ? kv.at("jump") : std::string{};
        const double eta = parse_param(kv, "eta", family);
        if (jump == "normal") {
            reject_unknown(kv, {"eta", "jump", "m", "s2"}, family);
            return Driver::compound_poisson(
                eta, NormalJumps{parse_param(kv, "m", family), parse_param(kv, "s2", family)});
        }
        if (jump == "exp" || jump == "exponential") {
            reject_unknown(kv, {"eta", "jump", "rate"}, family);
            return Driver::compound_poisson(eta, ExponentialJumps{parse_param(kv, "rate", family)});
        }
        if (jump == "point") {
            reject_unknown(kv, {"eta", "jump", "c"}, family);
            return Driver::compound_poisson(eta, PointMassJumps{parse_param(kv, "c", family)});
        }
        throw InvalidDriver(family + ": jump must be one of normal, exp, point");
    }
    throw InvalidDriver("unknown driver family '" + family +
                        "' (expected brownian, gamma, cpoisson or drift)");
}

std::string indexed_path(const std::string& path, std::size_t index) {
    const std::filesystem::path p(path);
    const std::string name = p.stem().string() + "_" + std::to_string(index) + p.extension().string();
    return (p.parent_path() / name).string();
}

namespace {

struct RunConfig {
    std::string driver = "brownian:gamma=0,sigma2=1";
    double lambda = 1.0;
    double t_max = 10.0;
    double dt = 1e-3;
    std::size_t paths = 1;
    std::uint64_t seed = 0;
    double tol = 1e-12;
    std::string process = "wbou";
    double window = 1.0;
    std::string input;
    std::string out;
    unsigned threads = 0;
    std::string config;

    std::size_t min_lag = 1;
    std::size_t max_lag = 0;
    std::size_t fit_max_lag = 0;
    std::string model = "both";
    std::size_t max_skip = 0;

    double alpha = 0.0;
    double beta = 0.0;
    double delta = 1.0;
    int max_s = 10;
    int max_k = 10;
    double step = 1.0;
    double u_max = 5.0;
    std::size_t points = 101;
    double y_min = 0.1;
    double y_max = 5.0;
    bool scaled = false;
};

// Options are registered together with a string setter so that a key=value
// config file can preload the same fields before the command line is parsed.
class Binder {
public:
    template <class T>
    void option(CLI::App* app, const std::string& name, T& field, const std::string& desc) {
        app->add_option(name, field, desc)->capture_default_str();
        setters_.emplace(name, [&field, name](const std::string& v) {
            if (!CLI::detail::lexical_cast(v, field)) {
                throw ValidationError("config: cannot read '" + v + "' for " + name);
            }
        });
    }
    void flag(CLI::App* app, const std::string& name, bool& field, const std::string& desc) {
        app->add_flag(name, field, desc);
        setters_.emplace(name, [&field, name](const std::string& v) {
            if (!CLI::detail::lexical_cast(v, field)) {
                throw ValidationError("config: cannot read '" + v + "' for " + name);
            }
        });
    }

    void load(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw IoError("cannot open config file '" + path + "'");
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
            line = trim(line);
            if (line.empty()) continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos) {
                throw ValidationError("config line " + std::to_string(lineno) + ": expected key=value");
            }
            std::string key = trim(line.substr(0, eq));
            while (!key.empty() && key.front() == '-') key.erase(0, 1);
            std::replace(key.begin(), key.end(), '_', '-');
            const auto it = setters_.find("--" + key);
            if (it == setters_.end() || key == "config") {
                throw ValidationError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
            }
            it->second(trim(line.substr(eq + 1)));
        }
    }

private:
    std::map<std::string, std::function<void(const std::string&)>> setters_;
};

std::string config_path_from_argv(int argc, const char* const* argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) return argv[i + 1];
        if (a.rfind("--config=", 0) == 0) return a.substr(9);
    }
    return {};
}

// CSV goes to --out when given, otherwise to stdout; the summary line then
// moves to stderr so that stdout stays a clean table.
class Emitter {
public:
    Emitter(const RunConfig& cfg, std::ostream& out, std::ostream& err)
        : cfg_(cfg), out_(out), err_(err) {}

    void table(const std::string& csv_text) {
        if (cfg_.out.empty()) {
            out_ << csv_text;
        } else {
            csv::write_file(cfg_.out, csv_text);
        }
    }
    std::ostream& summary() { return cfg_.out.empty() ? err_ : out_; }

private:
    const RunConfig& cfg_;
    std::ostream& out_;
    std::ostream& err_;
};

SimulationGrid make_grid(const RunConfig& cfg) { return SimulationGrid::make(cfg.t_max, cfg.dt); }

TruncationPolicy make_trunc(const RunConfig& cfg) {
    TruncationPolicy t{cfg.tol};
    t.validate();
    return t;
}

void write_paths(const RunConfig& cfg, std::vector<std::string>& texts, std::ostream& out) {
    if (cfg.out.empty()) {
        if (texts.size() != 1) throw ValidationError("--paths > 1 needs --out");
        out << texts[0];
        return;
    }
    if (texts.size() == 1) {
        csv::write_file(cfg.out, texts[0]);
        return;
    }
    for (std::size_t i = 0; i < texts.size(); ++i) csv::write_file(indexed_path(cfg.out, i), texts[i]);
}

std::string grid_table(const SimulationGrid& grid, const std::string& name,
                       const std::vector<double>& values) {
    std::vector<double> t(grid.points());
    for (std::size_t k = 0; k < t.size(); ++k) t[k] = grid.time(k);
    std::ostringstream os;
    csv::write_table(os, {"t", name}, {t, values});
    return os.str();
}

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
    const Driver driver = parse_driver(cfg.driver);
    if (const auto ok = existence_check(driver, cfg.lambda); !ok) throw InvalidLambda(ok.reason);
    const auto grid = make_grid(cfg);
    const auto trunc = make_trunc(cfg);
    if (cfg.paths < 1) throw ValidationError("--paths must be >= 1");
    if (cfg.process != "wbou" && cfg.process != "y" && cfg.process != "ou" && cfg.process != "compact") {
        throw ValidationError("--process must be one of wbou, y, ou, compact");
    }
    if (cfg.process == "compact") grid.steps_for(cfg.window);

    std::vector<std::string> texts(cfg.paths);
    parallel_for(cfg.paths, [&](std::size_t i) {
        auto streams = PathStreams::derive(cfg.seed, i);
        std::ostringstream os;
        if (cfg.process == "wbou") {
            csv::write_path(os, simulate_wbou(driver, cfg.lambda, grid, trunc, streams));
        } else if (cfg.process == "y") {
            texts[i] = grid_table(grid, "y", simulate_y(driver, cfg.lambda, grid, trunc, streams).y);
            return;
        } else if (cfg.process == "ou") {
            texts[i] = grid_table(grid, "u", simulate_ou(driver, cfg.lambda, grid, trunc, streams).values);
            return;
        } else {
            texts[i] = grid_table(
                grid, "x", simulate_compact_kernel(driver, cfg.lambda, cfg.window, grid, streams).values);
            return;
        }
        texts[i] = os.str();
    }, cfg.threads);
    write_paths(cfg, texts, out);
    if (!cfg.out.empty()) {
        out << "process=" << cfg.process << " paths=" << cfg.paths << " points=" << grid.points()
            << " driver=" << driver.describe() << " lambda=" << format_double(cfg.lambda)
            << " seed=" << cfg.seed << '\n';
    }
    return kOk;
}

int cmd_sv(const RunConfig& cfg, std::ostream& out) {
    SvSpec spec{cfg.alpha, cfg.beta, cfg.lambda, parse_driver(cfg.driver)};
    spec.validate();
    const auto grid = make_grid(cfg);
    const auto trunc = make_trunc(cfg);
    if (cfg.paths < 1) throw ValidationError("--paths must be >= 1");
    std::vector<std::string> texts(cfg.paths);
    parallel_for(cfg.paths, [&](std::size_t i) {
        auto streams = SvStreams::derive(cfg.seed, i);
        std::ostringstream os;
        csv::write_sv_path(os, simulate_sv(spec, grid, streams, trunc));
        texts[i] = os.str();
    }, cfg.threads);
    write_paths(cfg, texts, out);
    if (!cfg.out.empty()) {
        out << "sv paths=" << cfg.paths << " points=" << grid.points()
            << " driver=" << spec.driver.describe() << " lambda=" << format_double(cfg.lambda) << '\n';
    }
    return kOk;
}

int cmd_theory_acf(const RunConfig& cfg, Emitter& emit) {
    const SecondOrderParams p{cfg.lambda, 0.0, 1.0};
    p.validate();
    if (!(cfg.step > 0.0)) throw ValidationError("--step must be > 0");
    std::vector<double> h, wb, ou;
    for (std::size_t i = 0; static_cast<double>(i) * cfg.step <= static_cast<double>(cfg.max_lag) + 1e-12; ++i) {
        const double lag = static_cast<double>(i) * cfg.step;
        h.push_back(lag);
        wb.push_back(acf_x(p, lag));
        ou.push_back(acf_ou(p, lag));
    }
    std::ostringstream os;
    csv::write_table(os, {"h", "acf_wbou", "acf_ou"}, {h, wb, ou});
    emit.table(os.str());
    emit.summary() << "theory=acf lambda=" << format_double(cfg.lambda) << " rows=" << h.size() << '\n';
    return kOk;
}

int cmd_theory_increments(const RunConfig& cfg, Emitter& emit) {
    const SecondOrderParams p{cfg.lambda, 0.0, 1.0};
    p.validate();
    if (cfg.max_k < 1) throw ValidationError("--max-k must be >= 1");
    std::vector<double> k, canon, printed, ou;
    for (int i = 1; i <= cfg.max_k; ++i) {
        k.push_back(i);
        canon.push_back(increment_acf(p, i));
        printed.push_back(increment_acf_printed(p, i));
        ou.push_back(increment_acf_ou(p, i));
    }
    std::ostringstream os;
    csv::write_table(os, {"k", "increment_acf", "increment_acf_printed", "increment_acf_ou"},
                     {k, canon, printed, ou});
    emit.table(os.str());
    emit.summary() << "theory=increments lambda=" << format_double(cfg.lambda)
                   << " threshold=" << format_double(lambda_sign_threshold()) << '\n';
    return kOk;
}

int cmd_theory_sv(const RunConfig& cfg, Emitter& emit) {
    const Driver driver = parse_driver(cfg.driver);
    const Moments m = moments(driver);
    if (cfg.max_s < 1) throw ValidationError("--max-s must be >= 1");
    std::vector<double> s, big, cov, corr;
    for (int i = 1; i <= cfg.max_s; ++i) {
        s.push_back(i);
        big.push_back(big_r(cfg.lambda, cfg.delta, i).closed_form);
        cov.push_back(cov_integrated_vol(m.v, cfg.lambda, cfg.delta, i));
        corr.push_back(corr_squared_returns(m.mu, m.v, cfg.lambda, cfg.delta, i));
    }
    std::ostringstream os;
    csv::write_table(os, {"s", "R", "cov_iv", "corr_sq_returns"}, {s, big, cov, corr});
    emit.table(os.str());
    emit.summary() << "theory=sv driver=" << driver.describe() << " lambda=" << format_double(cfg.lambda)
                   << " delta=" << format_double(cfg.delta) << '\n';
    return kOk;
}

int cmd_theory_cf(const RunConfig& cfg, Emitter& emit) {
    const Driver driver = parse_driver(cfg.driver);
    const auto trunc = make_trunc(cfg);
    const TimeScale clock = cfg.scaled ? TimeScale::scaled : TimeScale::natural;
    if (cfg.points < 2) throw ValidationError("--points must be >= 2");
    std::vector<double> u, re, im;
    for (std::size_t i = 0; i < cfg.points; ++i) {
        const double ui = -cfg.u_max + 2.0 * cfg.u_max * static_cast<double>(i) / static_cast<double>(cfg.points - 1);
        const auto c = char_fn_x(driver, cfg.lambda, ui, clock, trunc);
        u.push_back(ui);
        re.push_back(c.real());
        im.push_back(c.imag());
    }
    std::ostringstream os;
    csv::write_table(os, {"u", "re", "im"}, {u, re, im});
    emit.table(os.str());
    emit.summary() << "theory=cf driver=" << driver.describe() << " lambda=" << format_double(cfg.lambda)
                   << " scaled=" << (cfg.scaled ? "true" : "false") << '\n';
    return kOk;
}

int cmd_theory_tail(const RunConfig& cfg, Emitter& emit) {
    const Driver driver = parse_driver(cfg.driver);
    const TimeScale clock = cfg.scaled ? TimeScale::scaled : TimeScale::natural;
    const MarginalLaw law = triplet_of_x(driver, cfg.lambda, clock);
    if (cfg.points < 2) throw ValidationError("--points must be >= 2");
    if (!(cfg.y_min > 0.0 && cfg.y_max > cfg.y_min)) throw ValidationError("need 0 < --y-min < --y-max");
    std::vector<double> y, above, below, dens;
    for (std::size_t i = 0; i < cfg.points; ++i) {
        const double yi = cfg.y_min + (cfg.y_max - cfg.y_min) * static_cast<double>(i) / static_cast<double>(cfg.points - 1);
        y.push_back(yi);
        above.push_back(law.tail_above(yi));
        below.push_back(law.tail_below(yi));
        dens.push_back(law.density(yi));
    }
    std::ostringstream os;
    csv::write_table(os, {"y", "tail_above", "tail_below", "density"}, {y, above, below, dens});
    emit.table(os.str());
    emit.summary() << "theory=tail driver=" << driver.describe() << " gamma_x=" << format_double(law.triplet.gamma)
                   << " sigma2_x=" << format_double(law.triplet.sigma2) << '\n';
    return kOk;
}

std::vector<AcfModel> models_for(const std::string& name) {
    if (name == "both") return {AcfModel::wbou, AcfModel::ou};
    if (name == "wbou") return {AcfModel::wbou};
    if (name == "ou") return {AcfModel::ou};
    throw ValidationError("--model must be one of wbou, ou, both");
}

void report_fits(const std::vector<FitResult>& fits, std::ostream& os) {
    for (const auto& f : fits) {
        os << "model=" << model_name(f.model) << " lambda_hat=" << format_double(f.lambda_hat)
           << " rss=" << format_double(f.rss) << " boundary=" << (f.boundary ? "true" : "false") << '\n';
    }
    if (fits.size() == 2) {
        os << "winner=" << model_name(fits[0].rss <= fits[1].rss ? fits[0].model : fits[1].model) << '\n';
    }
}

Series read_series(const RunConfig& cfg) {
    if (cfg.input.empty()) throw ValidationError("--input is required");
    return csv::series_from_table(csv::read_table_file(cfg.input));
}

int cmd_acf(const RunConfig& cfg, Emitter& emit) {
    const Series series = read_series(cfg);
    if (cfg.max_lag < 1) throw ValidationError("--max-lag must be >= 1");
    const AcfEstimate acf = empirical_acf(series, cfg.max_lag);
    const LagRange range{cfg.min_lag, cfg.fit_max_lag ? cfg.fit_max_lag : cfg.max_lag};
    const FitResult wb = fit_acf(acf, AcfModel::wbou, range);
    const FitResult ou = fit_acf(acf, AcfModel::ou, range);
    std::vector<double> lag, wbf, ouf;
    for (std::size_t h = 0; h <= acf.max_lag(); ++h) {
        lag.push_back(static_cast<double>(h));
        wbf.push_back(model_acf(AcfModel::wbou, wb.lambda_hat, static_cast<double>(h)));
        ouf.push_back(model_acf(AcfModel::ou, ou.lambda_hat, static_cast<double>(h)));
    }
    std::ostringstream os;
    csv::write_table(os, {"lag", "rho_hat", "rho_wbou_fit", "rho_ou_fit"}, {lag, acf.rho, wbf, ouf});
    emit.table(os.str());
    report_fits({wb, ou}, emit.summary());
    return kOk;
}

int cmd_fit(const RunConfig& cfg, std::ostream& out) {
    if (cfg.input.empty()) throw ValidationError("--input is required");
    const AcfEstimate acf = csv::acf_from_table(csv::read_table_file(cfg.input));
    const LagRange range{cfg.min_lag, cfg.max_lag ? cfg.max_lag : acf.max_lag()};
    std::vector<FitResult> fits;
    for (AcfModel m : models_for(cfg.model)) fits.push_back(fit_acf(acf, m, range));
    report_fits(fits, out);
    return kOk;
}

int cmd_signature(const RunConfig& cfg, Emitter& emit) {
    const Series series = read_series(cfg);
    const auto points = signature_plot(series, cfg.max_skip);
    std::ostringstream os;
    csv::write_signature(os, points);
    emit.table(os.str());
    emit.summary() << "signature rows=" << points.size() << '\n';
    return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    Binder bind;
    CLI::App app{"Well-balanced Ornstein-Uhlenbeck toolkit", "wbou"};
    app.require_subcommand(1);
    app.add_option("--config", cfg.config, "key=value file; command-line flags take precedence");
    bind.option(&app, "--seed", cfg.seed, "root random seed");
    bind.option(&app, "--out", cfg.out, "output CSV path (stdout when omitted)");
    bind.option(&app, "--input", cfg.input, "input CSV path");
    bind.option(&app, "--threads", cfg.threads, "worker threads for --paths fan-out (0 = all cores)");

    auto add_driver = [&](CLI::App* s) {
        bind.option(s, "--driver", cfg.driver, "driver, e.g. gamma:a=1,b=1");
        bind.option(s, "--lambda", cfg.lambda, "mean-reversion rate lambda > 0");
    };
    auto add_grid = [&](CLI::App* s) {
        bind.option(s, "--t-max", cfg.t_max, "time horizon");
        bind.option(s, "--dt", cfg.dt, "grid step; must divide t-max");
        bind.option(s, "--paths", cfg.paths, "number of independent paths");
        bind.option(s, "--tol", cfg.tol, "truncation tolerance of the half-line integrals");
    };

    auto* sim = app.add_subcommand("simulate", "simulate paths of X (or Y, OU, compact kernel)");
    add_driver(sim);
    add_grid(sim);
    bind.option(sim, "--process", cfg.process, "wbou | y | ou | compact");
    bind.option(sim, "--window", cfg.window, "kernel window a for --process compact");

    auto* theory = app.add_subcommand("theory", "closed-form curves");
    theory->require_subcommand(1);
    auto* th_acf = theory->add_subcommand("acf", "ACF of X and of the OU process");
    bind.option(th_acf, "--lambda", cfg.lambda, "lambda > 0");
    bind.option(th_acf, "--max-lag", cfg.max_lag, "largest lag");
    bind.option(th_acf, "--step", cfg.step, "lag spacing");
    auto* th_inc = theory->add_subcommand("increments", "increment autocorrelations");
    bind.option(th_inc, "--lambda", cfg.lambda, "lambda > 0");
    bind.option(th_inc, "--max-k", cfg.max_k, "largest increment lag");
    auto* th_sv = theory->add_subcommand("sv", "integrated-volatility and squared-return curves");
    add_driver(th_sv);
    bind.option(th_sv, "--delta", cfg.delta, "return interval");
    bind.option(th_sv, "--max-s", cfg.max_s, "largest lag in intervals");
    auto* th_cf = theory->add_subcommand("cf", "characteristic function of X_0");
    add_driver(th_cf);
    bind.option(th_cf, "--u-max", cfg.u_max, "u grid is [-u-max, u-max]");
    bind.option(th_cf, "--points", cfg.points, "number of grid points");
    bind.option(th_cf, "--tol", cfg.tol, "truncation tolerance");
    bind.flag(th_cf, "--scaled", cfg.scaled, "driver on the scaled clock");
    auto* th_tail = theory->add_subcommand("tail", "Lévy tails and density of X_0");
    add_driver(th_tail);
    bind.option(th_tail, "--y-min", cfg.y_min, "smallest y > 0");
    bind.option(th_tail, "--y-max", cfg.y_max, "largest y");
    bind.option(th_tail, "--points", cfg.points, "number of grid points");
    bind.flag(th_tail, "--scaled", cfg.scaled, "driver on the scaled clock");
    auto* th_thr = theory->add_subcommand("threshold", "sign threshold of the first increment ACF");

    auto* acf = app.add_subcommand("acf", "empirical ACF of a series, with both model fits");
    bind.option(acf, "--max-lag", cfg.max_lag, "largest lag");
    bind.option(acf, "--min-lag", cfg.min_lag, "smallest lag used in the fits");
    bind.option(acf, "--fit-max-lag", cfg.fit_max_lag, "largest lag used in the fits (default --max-lag)");

    auto* fit = app.add_subcommand("fit", "least-squares fit of lambda to an ACF CSV");
    bind.option(fit, "--model", cfg.model, "wbou | ou | both");
    bind.option(fit, "--min-lag", cfg.min_lag, "smallest lag");
    bind.option(fit, "--max-lag", cfg.max_lag, "largest lag (default: all)");

    auto* sig = app.add_subcommand("signature", "volatility signature plot");
    bind.option(sig, "--max-skip", cfg.max_skip, "largest subsampling step");

    auto* sv = app.add_subcommand("sv", "simulate the stochastic-volatility model");
    add_driver(sv);
    add_grid(sv);
    bind.option(sv, "--alpha", cfg.alpha, "drift of the log-price");
    bind.option(sv, "--beta", cfg.beta, "volatility loading of the drift");

    for (CLI::App* s : {sim, theory, th_acf, th_inc, th_sv, th_cf, th_tail, th_thr, acf, fit, sig, sv}) {
        s->fallthrough();
    }

    try {
        if (const auto path = config_path_from_argv(argc, argv); !path.empty()) bind.load(path);
        try {
            app.parse(argc, argv);
        } catch (const CLI::ParseError& e) {
            if (e.get_exit_code() == 0) return app.exit(e, out, err);
            err << "error: " << e.what() << '\n';
            return kValidationFailure;
        }

        Emitter emit(cfg, out, err);
        if (*sim) return cmd_simulate(cfg, out);
        if (*sv) return cmd_sv(cfg, out);
        if (*acf) return cmd_acf(cfg, emit);
        if (*fit) return cmd_fit(cfg, out);
        if (*sig) return cmd_signature(cfg, emit);
        if (*th_acf) return cmd_theory_acf(cfg, emit);
        if (*th_inc) return cmd_theory_increments(cfg, emit);
        if (*th_sv) return cmd_theory_sv(cfg, emit);
        if (*th_cf) return cmd_theory_cf(cfg, emit);
        if (*th_tail) return cmd_theory_tail(cfg, emit);
        if (*th_thr) {
            out << "lambda_threshold=" << format_double(lambda_sign_threshold()) << '\n';
            return kOk;
        }
        err << "error: no command\n";
        return kValidationFailure;
    } catch (const IoError& e) {
        err << "io error: " << e.what() << '\n';
        return kIoFailure;
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kValidationFailure;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kIoFailure;
    }
}

}  // namespace wbou::cli
