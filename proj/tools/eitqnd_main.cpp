// Command-line front end: figure-class parameter sweeps emitted as CSV, plus
// Q-grid dumps for the QND pipeline. All output is machine-readable and
// deterministic: identical config -> byte-identical files.

#include "eitqnd/ensemble.hpp"
#include "eitqnd/lambda3.hpp"
#include "eitqnd/nsys4.hpp"
#include "eitqnd/numkernel.hpp"
#include "eitqnd/qnd.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

namespace {

using eitqnd::Complex;

class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Flat key-value config with dotted section keys; CLI --set overrides win.
class Config {
public:
    void load_file(const std::string& path) {
        std::ifstream in(path);
        if (!in) throw ConfigError("cannot open config file: " + path);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const auto hash = line.find('#');
            if (hash != std::string::npos) line.erase(hash);
            const auto trimmed = trim(line);
            if (trimmed.empty()) continue;
            const auto eq = trimmed.find('=');
            if (eq == std::string::npos) {
                throw ConfigError(path + ":" + std::to_string(lineno) +
                                  ": expected key = value, got '" + trimmed + "'");
            }
            values_[trim(trimmed.substr(0, eq))] = trim(trimmed.substr(eq + 1));
        }
    }

    void apply_sets(const std::vector<std::string>& sets) {
        for (const auto& s : sets) {
            const auto eq = s.find('=');
            if (eq == std::string::npos) throw ConfigError("--set expects key=value, got '" + s + "'");
            values_[trim(s.substr(0, eq))] = trim(s.substr(eq + 1));
        }
    }

    double number(const std::string& key, double fallback) {
        used_.insert(key);
        auto it = values_.find(key);
        if (it == values_.end()) {
            resolved_[key] = format(fallback);
            return fallback;
        }
        try {
            size_t pos = 0;
            const double v = std::stod(it->second, &pos);
            if (pos != it->second.size()) throw std::invalid_argument("trailing characters");
            resolved_[key] = format(v);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("config key '" + key + "': not a number: '" + it->second + "'");
        }
    }

    long integer(const std::string& key, long fallback) {
        used_.insert(key);
        auto it = values_.find(key);
        if (it == values_.end()) {
            resolved_[key] = std::to_string(fallback);
            return fallback;
        }
        try {
            const long v = std::stol(it->second);
            resolved_[key] = std::to_string(v);
            return v;
        } catch (const std::exception&) {
            throw ConfigError("config key '" + key + "': not an integer: '" + it->second + "'");
        }
    }

    std::string text(const std::string& key, const std::string& fallback) {
        used_.insert(key);
        auto it = values_.find(key);
        const std::string v = it == values_.end() ? fallback : it->second;
        resolved_[key] = v;
        return v;
    }

    std::vector<double> number_list(const std::string& key, const std::string& fallback) {
        const std::string raw = text(key, fallback);
        std::vector<double> out;
        std::stringstream ss(raw);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                out.push_back(std::stod(trim(item)));
            } catch (const std::exception&) {
                throw ConfigError("config key '" + key + "': bad list element '" + item + "'");
            }
        }
        if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
        return out;
    }

    void reject_unknown() const {
        for (const auto& [key, value] : values_) {
            if (!used_.count(key)) throw ConfigError("unknown config key '" + key + "'");
        }
    }

    /// One comment line recording the full resolved parameter set.
    std::string provenance() const {
        std::string s = "#";
        for (const auto& [key, value] : resolved_) s += " " + key + "=" + value;
        return s;
    }

    static std::string format(double v) {
        char buf[40];
        std::snprintf(buf, sizeof(buf), "%.16e", v);
        return buf;
    }

private:
    static std::string trim(const std::string& s) {
        const auto b = s.find_first_not_of(" \t\r");
        if (b == std::string::npos) return "";
        const auto e = s.find_last_not_of(" \t\r");
        return s.substr(b, e - b + 1);
    }

    std::map<std::string, std::string> values_;
    std::map<std::string, std::string> resolved_;
    std::set<std::string> used_;
};

struct Axis {
    double start;
    double stop;
    long count;
    bool log_scale;

    double at(long i) const {
        const double t = count == 1 ? 0.0 : double(i) / double(count - 1);
        if (log_scale) return start * std::pow(stop / start, t);
        return start + (stop - start) * t;
    }
};

Axis read_axis(Config& cfg, const std::string& prefix, double start, double stop, long count,
               const std::string& scale = "linear") {
    Axis ax;
    ax.start = cfg.number(prefix + ".start", start);
    ax.stop = cfg.number(prefix + ".stop", stop);
    ax.count = cfg.integer(prefix + ".count", count);
    const std::string s = cfg.text(prefix + ".scale", scale);
    if (s != "linear" && s != "log") throw ConfigError(prefix + ".scale must be linear or log");
    ax.log_scale = s == "log";
    if (ax.count < 2) throw ConfigError(prefix + ".count must be >= 2");
    if (ax.start == ax.stop) throw ConfigError(prefix + ": start must differ from stop");
    if (ax.log_scale && (ax.start <= 0.0 || ax.stop <= 0.0)) {
        throw ConfigError(prefix + ": log scale requires positive bounds");
    }
    return ax;
}

void parallel_for(long n, int jobs, const std::function<void(long)>& body) {
    const int workers = std::max(1, jobs);
    if (workers == 1) {
        for (long i = 0; i < n; ++i) body(i);
        return;
    }
    std::vector<std::thread> pool;
    const long chunk = (n + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
        const long b = std::min<long>(w * chunk, n);
        const long e = std::min<long>(b + chunk, n);
        if (b < e) {
            pool.emplace_back([b, e, &body] {
                for (long i = b; i < e; ++i) body(i);
            });
        }
    }
    for (auto& t : pool) t.join();
}

class CsvWriter {
public:
    CsvWriter(const std::string& path, const std::string& provenance,
              const std::vector<std::string>& columns) {
        out_.open(path, std::ios::binary);  // LF endings on every platform
        if (!out_) throw std::runtime_error("cannot open output file: " + path);
        out_ << provenance << "\n";
        for (size_t i = 0; i < columns.size(); ++i) {
            out_ << columns[i] << (i + 1 < columns.size() ? "," : "");
        }
        out_ << "\n";
    }

    void comment(const std::string& text) { out_ << "# " << text << "\n"; }

    void row(const std::vector<double>& vals) {
        for (size_t i = 0; i < vals.size(); ++i) {
            out_ << Config::format(vals[i]) << (i + 1 < vals.size() ? "," : "");
        }
        out_ << "\n";
    }

private:
    std::ofstream out_;
};

eitqnd::LambdaParams lambda_from(Config& cfg) {
    eitqnd::LambdaParams p;
    p.omega1 = cfg.number("lambda.omega1", 0.5);
    p.omega2 = cfg.number("lambda.omega2", 0.1);
    p.delta_mutual = cfg.number("lambda.delta_mutual", 0.0);
    p.delta_two_photon = cfg.number("lambda.delta_two_photon", 0.0);
    p.validate();
    return p;
}

eitqnd::InhomLine line_from(Config& cfg) {
    eitqnd::InhomLine line;
    line.delta0 = cfg.number("line.delta0", 0.0);
    line.gamma_inh = cfg.number("line.gamma", 10.0);
    line.nodes = static_cast<int>(cfg.integer("line.nodes", 64));
    line.validate();
    return line;
}

eitqnd::MaterialParams material_from(Config& cfg, const std::string& preset) {
    eitqnd::MaterialParams m = eitqnd::nv_preset();
    if (preset != "nv") throw ConfigError("unknown preset '" + preset + "'");
    m.wavelength = cfg.number("material.wavelength", m.wavelength);
    m.gamma_sp = cfg.number("material.gamma_sp", m.gamma_sp);
    m.gamma_inh = cfg.number("material.gamma_inh", m.gamma_inh);
    m.density = cfg.number("material.density", m.density);
    m.length = cfg.number("material.length", m.length);
    m.dipole = cfg.number("material.dipole", m.dipole);
    m.eps_r = cfg.number("material.eps_r", m.eps_r);
    m.bulk_index = cfg.number("material.bulk_index", m.bulk_index);
    m.bandwidth = cfg.number("material.bandwidth", m.bandwidth);
    m.kappa = cfg.number("material.kappa", m.kappa);
    m.omega2 = cfg.number("material.omega2", m.omega2);
    m.j_scaling = cfg.number("material.j_scaling", m.j_scaling);
    m.mean_detuning = cfg.number("material.mean_detuning", m.mean_detuning);
    m.validate();
    return m;
}

int cmd_spectrum(Config& cfg, const std::string& out, int jobs) {
    const eitqnd::LambdaParams base = lambda_from(cfg);
    const eitqnd::InhomLine line = line_from(cfg);
    const Axis delta = read_axis(cfg, "spectrum.delta", -0.2, 0.2, 401);
    const bool with_ensemble = cfg.integer("spectrum.ensemble", 1) != 0;
    cfg.reject_unknown();

    std::vector<std::array<double, 5>> rows(delta.count);
    parallel_for(delta.count, jobs, [&](long i) {
        eitqnd::LambdaParams p = base;
        p.delta_two_photon = delta.at(i);
        const Complex single = eitqnd::steady_state(eitqnd::generator3(p)).m(2, 1);
        Complex ens(0.0, 0.0);
        if (with_ensemble) {
            ens = eitqnd::gauss_hermite_average(
                [&p](double mutual) {
                    eitqnd::LambdaParams q = p;
                    q.delta_mutual = mutual;
                    return eitqnd::steady_state(eitqnd::generator3(q)).m(2, 1);
                },
                line);
        }
        rows[i] = {p.delta_two_photon, single.real(), single.imag(), ens.real(), ens.imag()};
    });

    CsvWriter csv(out, cfg.provenance(),
                  {"delta", "re_rho_cb", "im_rho_cb", "re_rho_cb_ensemble", "im_rho_cb_ensemble"});
    for (const auto& r : rows) csv.row({r.begin(), r.end()});
    return 0;
}

int cmd_dispersion_map(Config& cfg, const std::string& out, int jobs) {
    const Axis o1 = read_axis(cfg, "dispersion.omega1", 0.05, 2.0, 80);
    const Axis o2 = read_axis(cfg, "dispersion.omega2", 0.05, 2.0, 80);
    cfg.reject_unknown();

    const long total = o1.count * o2.count;
    std::vector<std::array<double, 5>> rows(total);
    parallel_for(total, jobs, [&](long idx) {
        const double w1 = o1.at(idx / o2.count);
        const double w2 = o2.at(idx % o2.count);
        const double r = eitqnd::dispersion_rcb(w1, w2);
        const double ridge_w1 = std::sqrt(3.0) * w2;
        rows[idx] = {w1, w2, std::log10(-r), ridge_w1,
                     eitqnd::dispersion_rcb(ridge_w1, w2)};
    });

    CsvWriter csv(out, cfg.provenance(),
                  {"omega1", "omega2", "log10_neg_rcb", "ridge_omega1", "ridge_rcb"});
    for (const auto& r : rows) csv.row({r.begin(), r.end()});
    return 0;
}

int cmd_bandwidth_map(Config& cfg, const std::string& out, int jobs) {
    const Axis o1 = read_axis(cfg, "bandwidth.omega1", 0.01, 1.0, 80, "log");
    const Axis o2 = read_axis(cfg, "bandwidth.omega2", 0.01, 1.0, 80, "log");
    const double target = cfg.number("bandwidth.target", 0.01);
    cfg.reject_unknown();

    const long total = o1.count * o2.count;
    std::vector<std::array<double, 4>> rows(total);
    parallel_for(total, jobs, [&](long idx) {
        const double w1 = o1.at(idx / o2.count);
        const double w2 = o2.at(idx % o2.count);
        const double f = eitqnd::bandwidth_for_absorption(w1, w2, 1.0, target);
        rows[idx] = {w1, w2, f, std::log10(f)};
    });

    CsvWriter csv(out, cfg.provenance(), {"omega1", "omega2", "bandwidth", "log10_bandwidth"});
    for (const auto& r : rows) csv.row({r.begin(), r.end()});
    return 0;
}

int cmd_jcurve(Config& cfg, const std::string& out, int jobs) {
    const Axis d = read_axis(cfg, "jcurve.d", 0.0, 6.0, 601);
    cfg.reject_unknown();

    CsvWriter csv(out, cfg.provenance(), {"d", "j"});
    const double dstar = eitqnd::optimal_detuning();
    csv.comment("argmax_d = " + Config::format(dstar));
    const auto cmp = eitqnd::detuning_comparison(5.0);
    csv.comment("J(5)/J(d*) = " + Config::format(cmp.ratio_to_optimum) +
                "  (cost of detuning to d=5 relative to the optimum)");
    csv.comment("sqrt(pi)*5*J(5) = " + Config::format(cmp.ratio_to_homogeneous) +
                "  (vs a homogeneous sample detuned by the same Delta_0; the on-resonance"
                " homogeneous baseline has no finite 1/Delta counterpart)");
    (void)jobs;
    for (long i = 0; i < d.count; ++i) {
        const double x = d.at(i);
        csv.row({x, eitqnd::j_curve(x)});
    }
    return 0;
}

int cmd_scalings(Config& cfg, const std::string& out, int jobs) {
    const double kappa = cfg.number("scalings.kappa", 0.02);
    const Axis x = read_axis(cfg, "scalings.kappa2_n1", 1e-3, 1e3, 301, "log");
    cfg.reject_unknown();

    CsvWriter csv(out, cfg.provenance(), {"kappa2_n1", "n1", "t_ab", "t_cd"});
    (void)jobs;
    for (long i = 0; i < x.count; ++i) {
        const double u = x.at(i);
        const double n1 = u / (kappa * kappa);
        const auto t = eitqnd::t_scalings(kappa, n1);
        csv.row({u, n1, t.t_ab, t.t_cd});
    }
    return 0;
}

int cmd_qnd(Config& cfg, const std::string& out, int jobs, const std::string& preset) {
    const eitqnd::MaterialParams m = material_from(cfg, preset);
    const std::vector<double> alphas = cfg.number_list("qnd.alpha_list", "1,5,10,15,20,25");
    const std::vector<double> n3s = cfg.number_list("qnd.n3_list", "0,1,2");
    const std::string tm_text = cfg.text("qnd.time_model", "per-fock");
    const std::string mode_text = cfg.text("qnd.mode", "lossless");
    const bool dump_qgrids = cfg.integer("qnd.qgrid", 1) != 0;
    const int resolution = static_cast<int>(cfg.integer("qnd.resolution", 201));
    cfg.reject_unknown();

    if (tm_text != "per-fock" && tm_text != "fixed") {
        throw ConfigError("qnd.time_model must be per-fock or fixed");
    }
    if (mode_text != "lossless" && mode_text != "lossy") {
        throw ConfigError("qnd.mode must be lossless or lossy");
    }
    const auto time_model =
        tm_text == "fixed" ? eitqnd::TimeModel::fixed : eitqnd::TimeModel::per_fock;
    const auto mode = mode_text == "lossy" ? eitqnd::KerrMode::lossy : eitqnd::KerrMode::lossless;

    std::filesystem::create_directories(out);

    CsvWriter amps(out + "/amplitudes.csv", cfg.provenance(), {"alpha", "n3", "n", "re", "im"});
    CsvWriter ovl(out + "/overlaps.csv", cfg.provenance(),
                  {"alpha", "n3_i", "n3_j", "overlap", "peak_phase_i", "peak_phase_j",
                   "phase_separation"});

    for (double alpha : alphas) {
        const auto dist =
            eitqnd::distinguishability(m, Complex(alpha, 0.0), n3s, time_model, mode);
        for (size_t i = 0; i < n3s.size(); ++i) {
            for (size_t j = 0; j < n3s.size(); ++j) {
                ovl.row({alpha, n3s[i], n3s[j], dist.overlaps(i, j), dist.peak_phases[i],
                         dist.peak_phases[j],
                         std::abs(dist.peak_phases[i] - dist.peak_phases[j])});
            }
        }
        for (size_t i = 0; i < n3s.size(); ++i) {
            const auto state =
                eitqnd::evolve_probe(m, Complex(alpha, 0.0), n3s[i], time_model, mode);
            for (int n = 0; n <= state.n_max; ++n) {
                amps.row({alpha, n3s[i], double(n), state.amplitudes(n).real(),
                          state.amplitudes(n).imag()});
            }
            if (dump_qgrids) {
                const double extent = std::max(1.5 * alpha, 3.0);
                const auto grid = eitqnd::q_function(state, extent, resolution, jobs);
                std::ostringstream name;
                name << out << "/qgrid_alpha" << alpha << "_n3" << n3s[i] << ".txt";
                std::ofstream qf(name.str(), std::ios::binary);
                qf << "# extent=" << Config::format(grid.extent)
                   << " resolution=" << grid.resolution << "\n";
                for (int r = 0; r < grid.resolution; ++r) {
                    for (int c = 0; c < grid.resolution; ++c) {
                        qf << Config::format(grid.values(r, c))
                           << (c + 1 < grid.resolution ? "," : "");
                    }
                    qf << "\n";
                }
            }
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"EIT cross-Kerr / QND sweep tool"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string preset = "nv";
    std::vector<std::string> sets;
    int jobs = 1;
    app.add_option("--config", config_path, "flat key=value config file")->capture_default_str();
    app.add_option("--out", out_path, "output CSV path (directory for qnd)");
    app.add_option("--jobs", jobs, "worker threads for sweeps")->capture_default_str();
    app.add_option("--preset", preset, "material preset (nv)")->capture_default_str();
    app.add_option("--set", sets, "override config key=value (repeatable)");

    auto* sc_spectrum = app.add_subcommand("spectrum", "probe coherence vs two-photon detuning");
    auto* sc_dispersion = app.add_subcommand("dispersion-map", "log10(-R_cb) over Omega1 x Omega2");
    auto* sc_bandwidth = app.add_subcommand("bandwidth-map", "bandwidth for target absorption");
    auto* sc_jcurve = app.add_subcommand("jcurve", "detuning figure of merit J(d)");
    auto* sc_scalings = app.add_subcommand("scalings", "cross/self Kerr scalings T_ab, T_cd");
    auto* sc_qnd = app.add_subcommand("qnd", "probe evolution, Q-grids and overlap matrix");
    for (auto* sc : app.get_subcommands({})) sc->fallthrough();  // global flags after the verb

    CLI11_PARSE(app, argc, argv);

    try {
        Config cfg;
        if (!config_path.empty()) cfg.load_file(config_path);
        cfg.apply_sets(sets);

        if (sc_spectrum->parsed()) {
            return cmd_spectrum(cfg, out_path.empty() ? "spectrum.csv" : out_path, jobs);
        }
        if (sc_dispersion->parsed()) {
            return cmd_dispersion_map(cfg, out_path.empty() ? "dispersion_map.csv" : out_path, jobs);
        }
        if (sc_bandwidth->parsed()) {
            return cmd_bandwidth_map(cfg, out_path.empty() ? "bandwidth_map.csv" : out_path, jobs);
        }
        if (sc_jcurve->parsed()) {
            return cmd_jcurve(cfg, out_path.empty() ? "jcurve.csv" : out_path, jobs);
        }
        if (sc_scalings->parsed()) {
            return cmd_scalings(cfg, out_path.empty() ? "scalings.csv" : out_path, jobs);
        }
        if (sc_qnd->parsed()) {
            return cmd_qnd(cfg, out_path.empty() ? "qnd_out" : out_path, jobs, preset);
        }
        return 2;
    } catch (const ConfigError& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const eitqnd::DegenerateSteadyStateError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const eitqnd::TruncationError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const eitqnd::SingularIntegrandError& e) {
        std::fprintf(stderr, "numerical failure: %s\n", e.what());
        return 3;
    } catch (const std::logic_error& e) {
        // parameter validation (invalid_argument / domain_error)
        std::fprintf(stderr, "config error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
