// Copyright 2026 The quditsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <numeric>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "quditsim/approx_rank.h"
#include "quditsim/circuit.h"
#include "quditsim/dense.h"
#include "quditsim/error.h"
#include "quditsim/gauss_sum.h"
#include "quditsim/inner_product.h"
#include "quditsim/magic.h"
#include "quditsim/weak_sim.h"

namespace quditsim::cli {

namespace {

bool is_usage_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError:
        case ErrorCode::NonPrimeDimension:
        case ErrorCode::UnsupportedDimension:
        case ErrorCode::IndexOutOfRange:
        case ErrorCode::SameQudit:
            return true;
        default:
            return false;
    }
}

void report(std::ostream &err, const Error &e) {
    err << "error";
    if (e.line() > 0) {
        err << " (line " << e.line() << ")";
    }
    err << ": " << e.what() << "\n";
}

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::InvalidArgument, "cannot read " + path);
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

double kappa(int d, double alpha_abs) {
    return -2 * std::log(alpha_abs) / std::log(static_cast<double>(d));
}

std::string fixed(double v, int digits) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(digits) << v;
    return s.str();
}

/// Runs `body` and sends its output to --output when given.
int with_output(const CliConfig &cfg, std::ostream &out, const std::function<int(std::ostream &)> &body) {
    if (cfg.output_path.empty()) {
        return body(out);
    }
    std::ofstream file(cfg.output_path);
    if (!file) {
        throw Error(ErrorCode::InvalidArgument, "cannot write " + cfg.output_path);
    }
    return body(file);
}

// Self-check suites. Each returns (passed, total).
struct SuiteResult {
    std::string name;
    int passed = 0;
    int total = 0;

    void expect(bool ok) {
        total++;
        passed += ok;
    }
};

SuiteResult check_field() {
    SuiteResult r{"field"};
    for (int d : {3, 5, 7, 11, 13}) {
        for (int a = 1; a < d; a++) {
            int inv = inverse(FpScalar(a, d)).value();
            r.expect(a * inv % d == 1);
        }
    }
    return r;
}

SuiteResult check_gauss_sums() {
    SuiteResult r{"gauss_sum"};
    for (int d : {3, 5, 7, 11, 13}) {
        Complex w = std::polar(1.0, 2 * M_PI / d);
        for (int f = 0; f < d; f++) {
            for (int g = 0; g < d; g++) {
                Complex brute = 0;
                for (int j = 0; j < d; j++) {
                    int64_t e = (static_cast<int64_t>(f) * j * (j - 1) / 2 + static_cast<int64_t>(g) * j) % d;
                    brute += std::pow(w, static_cast<double>(e));
                }
                Complex closed = quadratic_gauss_sum(FpScalar(f, d), FpScalar(g, d)).value().to_complex();
                r.expect(std::abs(closed - brute) < 1e-12);
            }
        }
    }
    return r;
}

SuiteResult check_table() {
    SuiteResult r{"table"};
    struct Row {
        int d;
        double alpha_abs;
    };
    for (Row row : {Row{3, 0.84403}, Row{5, 0.723607}, Row{7, 0.677277}}) {
        r.expect(std::abs(std::abs(alpha(row.d, optimal_p(row.d))) - row.alpha_abs) < 1e-5);
    }
    return r;
}

Gate random_gate(int d, int n, std::mt19937_64 &rng) {
    std::uniform_int_distribution<int> qudit(0, n - 1);
    std::uniform_int_distribution<int> power(1, d - 1);
    Gate g{GateKind::H, qudit(rng)};
    switch (std::uniform_int_distribution<int>(0, n > 1 ? 4 : 3)(rng)) {
        case 0:
            g.kind = GateKind::X;
            g.power = power(rng);
            break;
        case 1:
            g.kind = GateKind::Z;
            g.power = power(rng);
            break;
        case 2:
            g.kind = GateKind::P;
            g.power = power(rng);
            break;
        case 3:
            break;
        default:
            g.kind = GateKind::CSUM;
            g.q1 = (g.q0 + std::uniform_int_distribution<int>(1, n - 1)(rng)) % n;
            g.power = power(rng);
            break;
    }
    return g;
}

double max_diff(const CVector &a, const CVector &b) {
    double worst = 0;
    for (size_t i = 0; i < a.size(); i++) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

std::pair<StabilizerState, DenseState> random_pair(int d, int n, int length, std::mt19937_64 &rng) {
    Superposition s{{1, StabilizerState::basis_state(d, FpVector(n, 0))}};
    DenseState dense(d, n);
    for (int i = 0; i < length; i++) {
        Gate g = random_gate(d, n, rng);
        apply_clifford(s, g);
        dense = apply_gate_dense(dense, g);
    }
    return {s[0].state, dense};
}

SuiteResult check_canonical(int words) {
    SuiteResult r{"canonical_form"};
    std::mt19937_64 rng(2024);
    for (int i = 0; i < words; i++) {
        int d = i % 2 ? 5 : 3;
        int n = 1 + i % 3;
        auto [s, dense] = random_pair(d, n, 1 + static_cast<int>(rng() % 50), rng);
        r.expect(max_diff(s.dense_vector(), dense.amplitudes()) < 1e-10);
    }
    return r;
}

SuiteResult check_inner(int pairs) {
    SuiteResult r{"inner_product"};
    std::mt19937_64 rng(2025);
    for (int i = 0; i < pairs; i++) {
        int d = i % 2 ? 5 : 3;
        int n = 1 + i % 4;
        auto [a, da] = random_pair(d, n, 30, rng);
        auto [b, db] = random_pair(d, n, 30, rng);
        Complex dot = 0;
        for (size_t x = 0; x < da.amplitudes().size(); x++) {
            dot += std::conj(db.amplitudes()[x]) * da.amplitudes()[x];
        }
        r.expect(std::abs(inner(a, b).to_complex() - dot) < 1e-10);
    }
    return r;
}

SuiteResult check_orbits() {
    SuiteResult r{"orbit"};
    for (int d : {3, 5, 7}) {
        OrbitDecomposition o = orbit(d, optimal_p(d));
        MagicGateSpec m = build_M(d);
        CVector sum(d, 0);
        for (const auto &s : o.states) {
            CVector v = s.dense_vector();
            for (int x = 0; x < d; x++) {
                sum[x] += o.prefactor * v[x];
            }
        }
        CVector target(d);
        for (int x = 0; x < d; x++) {
            target[x] = m.diagonal[x].to_complex() / std::sqrt(static_cast<double>(d));
        }
        r.expect(max_diff(sum, target) < 1e-10);
    }
    return r;
}

SuiteResult check_gadget() {
    SuiteResult r{"gadget"};
    for (int d : {3, 5}) {
        std::string ds = "d " + std::to_string(d) + "\n";
        for (const char *body : {"n 1\nH 0\nT 0\nH 0\nMEASURE 0\n", "n 2\nH 0\nT 0\nCSUM 0 1\nT 1\nH 1\nMEASURE 1\n"}) {
            SimConfig cfg;
            cfg.delta = 1e-9;
            cfg.dense_check = true;
            WeakSimulator sim(parse_circuit(ds + body), cfg);
            r.expect(*sim.dense_tvd() < 1e-10);
        }
    }
    return r;
}

SuiteResult check_fidelity(int d, int tmax) {
    SuiteResult r{"fidelity_d" + std::to_string(d)};
    std::mt19937_64 rng(2026);
    OrbitDecomposition o = orbit(d, optimal_p(d));
    MagicGateSpec m = build_M(d);
    CVector one(d);
    for (int x = 0; x < d; x++) {
        one[x] = m.diagonal[x].to_complex() / std::sqrt(static_cast<double>(d));
    }
    CVector target = {1};
    for (int t = 1; t <= tmax; t++) {
        target = kron(target, one);
        for (int k = 0; k <= t; k++) {
            LinearCode code = sample_code(d, t, k, rng);
            double z = z_of_code(code, o.betas);
            CVector l = dense_vector(build_approx_state(code, o, z));
            Complex ov = 0;
            for (size_t x = 0; x < l.size(); x++) {
                ov += std::conj(l[x]) * target[x];
            }
            double predicted = std::pow(d, k) * std::pow(std::abs(o.alpha), 2 * t) / z;
            r.expect(std::abs(std::norm(ov) - predicted) < 1e-10);
        }
    }
    return r;
}

}  // namespace

std::string phase_label(int d, int64_t root_exponent) {
    int64_t g = ExactPhase::granularity(d);
    int64_t r = ((root_exponent % g) + g) % g;
    if (r == 0) {
        return "1";
    }
    if (r % (8 * d) == 0) {
        int64_t k = r / (8 * d);
        if (k > d / 2) {
            k -= d;
        }
        return k == 1 ? "w" : "w^" + std::to_string(k);
    }
    int64_t num = r > g / 2 ? r - g : r;
    int64_t div = std::gcd(std::abs(num), g);
    return "e^(2pi i*" + std::to_string(num / div) + "/" + std::to_string(g / div) + ")";
}

int cmd_table(const CliConfig &cfg, std::ostream &out, std::ostream &) {
    std::string format = cfg.format.empty() ? "text" : cfg.format;
    struct Row {
        int d;
        std::string diagonal;
        int p;
        double alpha_abs;
        double kappa;
    };
    std::vector<Row> rows;
    for (int d : cfg.d_list) {
        MagicGateSpec m = build_M(d);
        std::string diag;
        for (size_t j = 0; j < m.diagonal.size(); j++) {
            diag += (j ? "," : "") + phase_label(d, m.diagonal[j].root_exponent());
        }
        int p = optimal_p(d);
        double a = std::abs(alpha(d, p));
        rows.push_back({d, "diag(" + diag + ")", p, a, kappa(d, a)});
    }
    return with_output(cfg, out, [&](std::ostream &o) {
        if (format == "csv") {
            o << "d,diagonal,p,alpha_abs,kappa\n";
            for (const auto &row : rows) {
                o << row.d << ",\"" << row.diagonal << "\"," << row.p << "," << fixed(row.alpha_abs, 6) << ","
                  << fixed(row.kappa, 4) << "\n";
            }
        } else if (format == "json") {
            for (const auto &row : rows) {
                nlohmann::ordered_json j;
                j["d"] = row.d;
                j["diagonal"] = row.diagonal;
                j["p"] = row.p;
                j["alpha_abs"] = row.alpha_abs;
                j["kappa"] = row.kappa;
                o << j.dump() << "\n";
            }
        } else {
            o << std::left << std::setw(4) << "d" << std::setw(48) << "M_d" << std::setw(4) << "p" << std::setw(12)
              << "|alpha|" << "kappa\n";
            for (const auto &row : rows) {
                o << std::left << std::setw(4) << row.d << std::setw(48) << row.diagonal << std::setw(4) << row.p
                  << std::setw(12) << fixed(row.alpha_abs, 6) << fixed(row.kappa, 4) << "\n";
            }
        }
        return kOk;
    });
}

int cmd_rank(const CliConfig &cfg, std::ostream &out, std::ostream &) {
    int d = cfg.d;
    int p = cfg.p_override ? *cfg.p_override : optimal_p(d);
    OrbitDecomposition o = orbit(d, p);
    double a = std::abs(o.alpha);
    KChoice choice = choose_k(cfg.t, cfg.delta, a, d);
    if (cfg.strict) {
        choose_k_strict(cfg.t, cfg.delta, a, d);
    }
    std::mt19937_64 rng(cfg.seed);
    ApproxStateCert cert = find_code(cfg.t, cfg.delta, o, rng, 0, cfg.threads);
    return with_output(cfg, out, [&](std::ostream &s) {
        if (cfg.format == "json") {
            nlohmann::ordered_json j;
            j["d"] = d;
            j["t"] = cfg.t;
            j["p"] = p;
            j["delta"] = cfg.delta;
            j["seed"] = cfg.seed;
            j["k"] = cert.code.k();
            j["k_unclamped"] = choice.unclamped;
            j["chi"] = cert.code.size();
            j["z"] = cert.z;
            j["threshold"] = cert.threshold;
            j["fidelity"] = cert.fidelity;
            j["trials"] = cert.trials;
            j["delta_max"] = delta_max(cfg.t, a, d);
            s << j.dump() << "\n";
        } else {
            s << std::setprecision(12);
            s << "d " << d << "  t " << cfg.t << "  p " << p << "  delta " << cfg.delta << "  seed " << cfg.seed << "\n";
            s << "k " << cert.code.k();
            if (choice.clamped) {
                s << " (formula gives " << choice.unclamped << ", clamped to [0, t])";
            }
            s << "\n";
            s << "chi " << cert.code.size() << "\n";
            s << "Z(L) " << cert.z << "\n";
            s << "threshold " << cert.threshold << "\n";
            s << "fidelity " << cert.fidelity << "\n";
            s << "trials " << cert.trials << "\n";
            s << "delta_max " << delta_max(cfg.t, a, d) << "\n";
        }
        return kOk;
    });
}

int cmd_simulate(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    Circuit circuit;
    try {
        circuit = parse_circuit(read_file(cfg.circuit_path));
    } catch (const Error &e) {
        report(err, e);
        return kUsageError;
    }
    auto start = std::chrono::steady_clock::now();
    SimConfig sc;
    sc.delta = cfg.delta;
    sc.seed = cfg.seed;
    sc.p_override = cfg.p_override;
    sc.threads = cfg.threads;
    sc.dense_check = cfg.dense_check;
    WeakSimulator sim(circuit, sc);
    bool csv = cfg.format == "csv";
    return with_output(cfg, out, [&](std::ostream &o) {
        if (csv) {
            o << "outcomes,gadget_outcomes\n";
        }
        for (uint64_t i = 0; i < cfg.samples; i++) {
            SampleRecord r = sim.sample();
            if (csv) {
                auto join = [](const std::vector<int> &v) {
                    std::string s;
                    for (int x : v) {
                        s += std::to_string(x);
                    }
                    return s;
                };
                o << join(r.outcomes) << "," << join(r.gadget_outcomes) << "\n";
            } else {
                o << r.to_json() << "\n";
            }
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        nlohmann::ordered_json footer;
        footer["chi"] = sim.chi();
        footer["k"] = sim.k();
        footer["t"] = sim.t();
        footer["fidelity"] = sim.fidelity();
        footer["seed"] = cfg.seed;
        footer["samples"] = cfg.samples;
        if (sim.dense_tvd()) {
            footer["dense_tvd"] = *sim.dense_tvd();
        }
        if (!cfg.no_timing) {
            footer["wall_time_s"] = seconds;
        }
        nlohmann::ordered_json line;
        line["footer"] = footer;
        if (csv) {
            o << "# ";
        }
        o << line.dump() << "\n";
        return kOk;
    });
}

int cmd_check(const CliConfig &cfg, std::ostream &out, std::ostream &err) {
    std::vector<std::function<SuiteResult()>> suites = {check_field, check_gauss_sums, check_table};
    if (cfg.level == "medium" || cfg.level == "full") {
        suites.push_back([] { return check_canonical(100); });
        suites.push_back([] { return check_inner(200); });
        suites.push_back(check_orbits);
        suites.push_back(check_gadget);
    }
    if (cfg.level == "full") {
        suites.push_back([] { return check_canonical(500); });
        suites.push_back([] { return check_inner(1000); });
        suites.push_back([] { return check_fidelity(3, 6); });
        suites.push_back([] { return check_fidelity(5, 3); });
    }
    bool all = true;
    for (const auto &suite : suites) {
        SuiteResult r;
        try {
            r = suite();
        } catch (const Error &e) {
            report(err, e);
            r.total = r.total + 1;
        }
        all = all && r.passed == r.total;
        out << (r.passed == r.total ? "ok   " : "FAIL ") << r.name << " " << r.passed << "/" << r.total << "\n";
    }
    out << (all ? "all checks passed" : "some checks failed") << "\n";
    return all ? kOk : kRuntimeFailure;
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
    CliConfig cfg;
    CLI::App app{"Weak simulation of qudit Clifford+T circuits"};
    app.require_subcommand(1);
    auto formats = CLI::IsMember({"json", "csv", "text"});

    auto *simulate = app.add_subcommand("simulate", "Sample a circuit file");
    simulate->add_option("--circuit", cfg.circuit_path, "Circuit file")->required();
    simulate->add_option("--delta", cfg.delta, "Target approximation error")->check(CLI::Range(0.0, 1.0));
    simulate->add_option("--seed", cfg.seed, "Random seed");
    simulate->add_option("--samples", cfg.samples, "Number of samples");
    simulate->add_option("--p", cfg.p_override, "Orbit representative");
    simulate->add_option("--format", cfg.format, "json or csv")->check(formats);
    simulate->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    simulate->add_option("--output", cfg.output_path, "Write samples here instead of stdout");
    simulate->add_flag("--dense-check", cfg.dense_check, "Report TVD against the dense simulator");
    simulate->add_flag("--no-timing", cfg.no_timing, "Omit wall time from the footer");

    auto *table = app.add_subcommand("table", "Magic gate, optimal p, |alpha| and kappa per dimension");
    table->add_option("--d", cfg.d_list, "Dimensions")->expected(1, -1);
    table->add_option("--format", cfg.format, "text, csv or json")->check(formats);
    table->add_option("--output", cfg.output_path, "Output file");

    auto *rank = app.add_subcommand("rank", "Find a certified approximate stabilizer decomposition");
    rank->add_option("--d", cfg.d, "Dimension");
    rank->add_option("--t", cfg.t, "Number of T gates")->check(CLI::NonNegativeNumber);
    rank->add_option("--delta", cfg.delta, "Target approximation error");
    rank->add_option("--seed", cfg.seed, "Random seed");
    rank->add_option("--p", cfg.p_override, "Orbit representative");
    rank->add_option("--format", cfg.format, "text or json")->check(formats);
    rank->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    rank->add_option("--output", cfg.output_path, "Output file");
    rank->add_flag("--strict", cfg.strict, "Fail instead of clamping k to t");

    auto *check = app.add_subcommand("check", "Cross-check against brute force and dense simulation");
    check->add_option("--level", cfg.level, "fast, medium or full")->check(CLI::IsMember({"fast", "medium", "full"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << "\n" << app.help();
        return kUsageError;
    }

    try {
        if (*table) {
            for (int d : cfg.d_list) {
                require_odd_prime(d);
            }
            return cmd_table(cfg, out, err);
        }
        if (*rank) {
            require_odd_prime(cfg.d);
            if (!(cfg.delta > 0 && cfg.delta < 1)) {
                err << "usage error: --delta must lie in (0, 1)\n";
                return kUsageError;
            }
            return cmd_rank(cfg, out, err);
        }
        if (*check) {
            return cmd_check(cfg, out, err);
        }
        if (!(cfg.delta > 0 && cfg.delta < 1)) {
            err << "usage error: --delta must lie in (0, 1)\n";
            return kUsageError;
        }
        return cmd_simulate(cfg, out, err);
    } catch (const Error &e) {
        report(err, e);
        return is_usage_error(e.code()) ? kUsageError : kRuntimeFailure;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kRuntimeFailure;
    }
}

}  // namespace quditsim::cli
