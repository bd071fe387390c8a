// Copyright 2026 The insqec Authors
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

#include "insqec/experiment.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "insqec/analytic.h"
#include "insqec/errors.h"
#include "insqec/oracle.h"
#include "insqec/recovery.h"
#include "insqec/rng.h"
#include "insqec/scb.h"
#include "insqec/syndrome.h"

namespace insqec {

namespace {

using json = nlohmann::json;

constexpr double kDistributionTolerance = 1e-10;
constexpr double kZeroBandTolerance = 1e-12;
constexpr double kFidelityTolerance = 1e-9;
constexpr double kAmplitudeTolerance = 1e-10;

json complex_json(Complex c) {
    return json::array({c.real(), c.imag()});
}

json amplitudes_json(const QubitAmplitudes &q) {
    return json::array({complex_json(q.c0), complex_json(q.c1)});
}

json code_json(const GnuCode &code) {
    return {{"g", code.g()}, {"n", code.n()}, {"u", code.u()}, {"N", code.num_qubits()}};
}

json key_json(const SyndromeKey &s) {
    return {{"j", s.j.str()}, {"twice_j", s.j.twice()}, {"w", s.w}};
}

json distribution_json(const std::map<SyndromeKey, double> &dist) {
    json out = json::array();
    for (const auto &[key, p] : dist) {
        json row = key_json(key);
        row["probability"] = p;
        out.push_back(row);
    }
    return out;
}

double lookup(const std::map<SyndromeKey, double> &dist, const SyndromeKey &key) {
    auto it = dist.find(key);
    return it == dist.end() ? 0.0 : it->second;
}

/// max |analytic - oracle| over the union of keys.
double max_deviation(const std::map<SyndromeKey, double> &analytic, const std::map<SyndromeKey, double> &oracle) {
    double worst = 0;
    for (const auto &[key, p] : oracle) {
        worst = std::max(worst, std::abs(p - lookup(analytic, key)));
    }
    for (const auto &[key, p] : analytic) {
        worst = std::max(worst, std::abs(p - lookup(oracle, key)));
    }
    return worst;
}

/// Largest oracle probability on syndromes outside the four nonzero ones.
double zero_band(const GnuCode &code, const std::map<SyndromeKey, double> &oracle) {
    auto keys = nonzero_syndromes(code);
    std::set<SyndromeKey> allowed(keys.begin(), keys.end());
    double worst = 0;
    for (const auto &[key, p] : oracle) {
        if (!allowed.count(key)) {
            worst = std::max(worst, p);
        }
    }
    return worst;
}

int draw_position(uint64_t seed, int N) {
    Rng rng = Rng::stream(seed, 0);
    return static_cast<int>(rng.next() % static_cast<uint64_t>(N + 1));
}

std::string fmt(double x) {
    std::ostringstream out;
    out.precision(17);
    out << x;
    return out.str();
}

/// INSQEC_THREADS if set, else hardware_concurrency.
std::size_t worker_count() {
    if (const char *env = std::getenv("INSQEC_THREADS")) {
        int n = std::atoi(env);
        if (n >= 1) {
            return static_cast<std::size_t>(n);
        }
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous blocks, one per worker thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t, std::size_t)> &block) {
    std::size_t threads = std::min(worker_count(), std::max<std::size_t>(count, 1));
    if (threads <= 1) {
        block(0, count);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (std::size_t t = 0; t < threads; t++) {
        std::size_t lo = count * t / threads;
        std::size_t hi = count * (t + 1) / threads;
        pool.emplace_back([&, t, lo, hi] {
            try {
                block(lo, hi);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

const std::set<std::string> kModes = {"single", "montecarlo", "lemma", "example", "sweep"};

}  // namespace

std::vector<std::array<int, 3>> default_grid() {
    return {{2, 2, 1}, {3, 2, 1}, {2, 3, 1}, {2, 2, 2}, {3, 3, 1}, {2, 2, 3}, {3, 2, 2}};
}

Complex parse_complex(const json &j, const std::string &what) {
    if (j.is_number()) {
        return {j.get<double>(), 0.0};
    }
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number()) {
        return {j[0].get<double>(), j[1].get<double>()};
    }
    throw ConfigError(what + " must be a number or an [re, im] pair");
}

QubitAmplitudes parse_amplitudes(const json &j, const std::string &what, std::vector<std::string> &warnings) {
    if (!j.is_array() || j.size() != 2) {
        throw ConfigError(what + " must be a pair of amplitudes [c0, c1]");
    }
    Complex c0 = parse_complex(j[0], what + "[0]");
    Complex c1 = parse_complex(j[1], what + "[1]");
    double norm = std::norm(c0) + std::norm(c1);
    if (std::abs(norm - 1) > 1e-6) {
        throw ConfigError(what + " has squared norm " + fmt(norm) + "; expected 1");
    }
    if (norm != 1) {
        double s = std::sqrt(norm);
        c0 /= s;
        c1 /= s;
        warnings.push_back(what + " renormalized from squared norm " + fmt(norm));
    }
    return {c0, c1};
}

ExperimentConfig parse_config(const json &doc, std::vector<std::string> &warnings, ExperimentConfig cfg) {
    if (!doc.is_object()) {
        throw ConfigError("config must be a JSON object");
    }
    auto as_int = [](const json &v, const std::string &key) {
        if (!v.is_number_integer()) {
            throw ConfigError(key + " must be an integer");
        }
        return v.get<int64_t>();
    };
    for (const auto &[key, v] : doc.items()) {
        if (key == "g") {
            cfg.g = static_cast<int>(as_int(v, key));
        } else if (key == "n") {
            cfg.n = static_cast<int>(as_int(v, key));
        } else if (key == "u") {
            cfg.u = static_cast<int>(as_int(v, key));
        } else if (key == "payload" || key == "c") {
            cfg.payload = parse_amplitudes(v, key, warnings);
        } else if (key == "insertion" || key == "v") {
            cfg.insertion = parse_amplitudes(v, key, warnings);
        } else if (key == "position" || key == "a") {
            if (v.is_string() && v.get<std::string>() == "random") {
                cfg.position.reset();
            } else {
                cfg.position = static_cast<int>(as_int(v, key));
            }
        } else if (key == "shots") {
            int64_t s = as_int(v, key);
            if (s < 1) {
                throw ConfigError("shots must be at least 1");
            }
            cfg.shots = static_cast<uint64_t>(s);
        } else if (key == "seed") {
            if (v.is_number_unsigned()) {
                cfg.seed = v.get<uint64_t>();
            } else if (v.is_number_integer() && v.get<int64_t>() >= 0) {
                cfg.seed = static_cast<uint64_t>(v.get<int64_t>());
            } else {
                throw ConfigError("seed must be a non-negative integer");
            }
        } else if (key == "mode") {
            if (!v.is_string() || !kModes.count(v.get<std::string>())) {
                throw ConfigError("mode must be one of single, montecarlo, lemma, example, sweep");
            }
            cfg.mode = v.get<std::string>();
        } else if (key == "format") {
            if (!v.is_string()) {
                throw ConfigError("format must be json or csv");
            }
            cfg.format = v.get<std::string>();
        } else if (key == "grid") {
            if (!v.is_array()) {
                throw ConfigError("grid must be an array of [g, n, u] triples");
            }
            std::vector<std::array<int, 3>> grid;
            for (const auto &cell : v) {
                if (!cell.is_array() || cell.size() != 3) {
                    throw ConfigError("grid must be an array of [g, n, u] triples");
                }
                grid.push_back({static_cast<int>(as_int(cell[0], "grid g")), static_cast<int>(as_int(cell[1], "grid n")),
                                static_cast<int>(as_int(cell[2], "grid u"))});
            }
            cfg.grid = grid;
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    return cfg;
}

void check_config(const ExperimentConfig &cfg) {
    try {
        GnuCode code = cfg.code();
        if (cfg.position && (*cfg.position < 0 || *cfg.position > code.num_qubits())) {
            throw ConfigError("position a must satisfy 0 <= a <= N = " + std::to_string(code.num_qubits()));
        }
    } catch (const ConfigError &) {
        throw;
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    if (cfg.shots < 1 || cfg.shots > kMaxShots) {
        throw ConfigError("shots must lie in 1.." + std::to_string(kMaxShots));
    }
    if (cfg.format != "json" && cfg.format != "csv") {
        throw ConfigError("format must be json or csv");
    }
    if (!kModes.count(cfg.mode)) {
        throw ConfigError("mode must be one of single, montecarlo, lemma, example, sweep");
    }
    if (cfg.grid) {
        for (const auto &c : *cfg.grid) {
            try {
                GnuCode(c[0], c[1], c[2]);
            } catch (const std::invalid_argument &e) {
                throw ConfigError(std::string("grid cell: ") + e.what());
            }
        }
    }
}

std::array<double, 2> wilson_interval(uint64_t successes, uint64_t trials) {
    if (trials == 0) {
        return {0, 1};
    }
    const double z = 1.959963984540054;
    double n = static_cast<double>(trials);
    double p = static_cast<double>(successes) / n;
    double denom = 1 + z * z / n;
    double center = (p + z * z / (2 * n)) / denom;
    double half = z / denom * std::sqrt(p * (1 - p) / n + z * z / (4 * n * n));
    return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

Report run_single(const ExperimentConfig &cfg) {
    check_config(cfg);
    GnuCode code = cfg.code();
    int N = code.num_qubits();
    require_dense_capacity(N + 1, "single run");
    int a = cfg.position ? *cfg.position : draw_position(cfg.seed, N);

    DenseState psi = insert(encode(code, cfg.payload), cfg.insertion, a);
    auto analytic = syndrome_distribution(code, cfg.insertion, a);
    auto oracle = oracle_syndrome_distribution(psi, code.g());
    double deviation = max_deviation(analytic, oracle);
    double band = zero_band(code, oracle);

    Rng rng = Rng::stream(cfg.seed, 1);
    SyndromeExtraction ex = extract_syndrome(psi, code.g(), rng);
    json post;
    post["num_qubits"] = ex.post_state.num_qubits;
    post["sector_residual"] = sector_residual(ex.post_state, ex.syndrome.key.j);
    json weights = json::object();
    for (const auto &[k, p] : ex.post_state.weight_histogram()) {
        weights[std::to_string(k)] = p;
    }
    post["weights"] = weights;

    RecoveryOutcome rec = teleport(code, code, ex.post_state, ex.syndrome.key, split_seed(cfg.seed, 2), cfg.payload);

    bool ok = deviation <= kDistributionTolerance && band < kZeroBandTolerance &&
              rec.fidelity >= 1 - kFidelityTolerance;
    Report r;
    r.body = {
        {"schema", kSchema},
        {"mode", "single"},
        {"code", code_json(code)},
        {"seed", cfg.seed},
        {"position", a},
        {"payload", amplitudes_json(cfg.payload)},
        {"insertion", amplitudes_json(cfg.insertion)},
        {"analytic", distribution_json(analytic)},
        {"oracle", distribution_json(support(oracle, kZeroBranchCutoff))},
        {"max_distribution_deviation", deviation},
        {"zero_band_max", band},
        {"sampled_syndrome", ex.syndrome.to_json()},
        {"post_state", post},
        {"recovery", rec.to_json()},
        {"status", ok ? "pass" : "fail"},
    };
    std::ostringstream csv;
    csv << "twice_j,w,analytic,oracle\n";
    for (const auto &[key, p] : analytic) {
        csv << key.j.twice() << ',' << key.w << ',' << fmt(p) << ',' << fmt(lookup(oracle, key)) << '\n';
    }
    r.csv = csv.str();
    r.exit_code = ok ? 0 : 2;
    return r;
}

Report run_montecarlo(const ExperimentConfig &cfg) {
    check_config(cfg);
    GnuCode code = cfg.code();
    int N = code.num_qubits();
    require_dense_capacity(N + 1, "Monte Carlo run");
    DenseState encoded = encode(code, cfg.payload);

    std::map<int, std::map<SyndromeKey, double>> oracle;  // by position
    for (int a = 0; a <= N; a++) {
        if (!cfg.position || *cfg.position == a) {
            oracle.emplace(a, oracle_syndrome_distribution(insert(encoded, cfg.insertion, a), code.g()));
        }
    }

    struct Tally {
        std::map<SyndromeKey, uint64_t> counts;
        std::map<int, uint64_t> positions;
    };
    std::size_t blocks = worker_count();
    std::vector<Tally> tallies(blocks);
    json first_shot;
    parallel_for(blocks, [&](std::size_t lo, std::size_t hi) {
        for (std::size_t b = lo; b < hi; b++) {
            Tally &t = tallies[b];
            for (uint64_t shot = cfg.shots * b / blocks; shot < cfg.shots * (b + 1) / blocks; shot++) {
                Rng rng = Rng::stream(cfg.seed, shot);
                int a = cfg.position ? *cfg.position : static_cast<int>(rng.next() % static_cast<uint64_t>(N + 1));
                Syndrome s = sample_syndrome(oracle.at(a), rng);
                t.counts[s.key]++;
                t.positions[a]++;
                if (shot == 0) {
                    first_shot = key_json(s.key);
                    first_shot["position"] = a;
                }
            }
        }
    });
    std::map<SyndromeKey, uint64_t> counts;
    std::map<int, uint64_t> positions;
    for (const Tally &t : tallies) {
        for (const auto &[k, c] : t.counts) {
            counts[k] += c;
        }
        for (const auto &[a, c] : t.positions) {
            positions[a] += c;
        }
    }

    // Expected distribution: uniform mixture over positions when a is random.
    std::map<SyndromeKey, double> analytic;
    if (cfg.position) {
        analytic = syndrome_distribution(code, cfg.insertion, *cfg.position);
    } else {
        for (int a = 0; a <= N; a++) {
            for (const auto &[key, p] : syndrome_distribution(code, cfg.insertion, a)) {
                analytic[key] += p / (N + 1);
            }
        }
    }

    std::set<SyndromeKey> keys;
    for (const auto &[key, p] : analytic) {
        if (p > kZeroBandTolerance) {
            keys.insert(key);
        }
    }
    for (const auto &[key, c] : counts) {
        keys.insert(key);
    }

    double shots = static_cast<double>(cfg.shots);
    bool ok = true;
    json rows = json::array();
    std::ostringstream csv;
    csv << "twice_j,w,count,frequency,wilson_low,wilson_high,analytic,sigma,within_3sigma\n";
    for (const SyndromeKey &key : keys) {
        uint64_t c = counts.count(key) ? counts[key] : 0;
        double freq = static_cast<double>(c) / shots;
        double p = lookup(analytic, key);
        double sigma = std::sqrt(p * (1 - p) / shots);
        bool within = std::abs(freq - p) <= 3 * sigma + 1e-15;
        ok = ok && within;
        auto ci = wilson_interval(c, cfg.shots);
        json row = key_json(key);
        row["count"] = c;
        row["frequency"] = freq;
        row["wilson_95"] = ci;
        row["analytic"] = p;
        row["sigma"] = sigma;
        row["within_3sigma"] = within;
        rows.push_back(row);
        csv << key.j.twice() << ',' << key.w << ',' << c << ',' << fmt(freq) << ',' << fmt(ci[0]) << ','
            << fmt(ci[1]) << ',' << fmt(p) << ',' << fmt(sigma) << ',' << (within ? "true" : "false") << '\n';
    }
    json pos = json::object();
    for (const auto &[a, c] : positions) {
        pos[std::to_string(a)] = c;
    }

    Report r;
    r.body = {
        {"schema", kSchema},
        {"mode", "montecarlo"},
        {"code", code_json(code)},
        {"seed", cfg.seed},
        {"shots", cfg.shots},
        {"position", cfg.position ? json(*cfg.position) : json("random")},
        {"payload", amplitudes_json(cfg.payload)},
        {"insertion", amplitudes_json(cfg.insertion)},
        {"position_counts", pos},
        {"first_shot", first_shot},
        {"rows", rows},
        {"status", ok ? "pass" : "fail"},
    };
    r.csv = csv.str();
    r.exit_code = ok ? 0 : 2;
    return r;
}

Report run_lemma(const ExperimentConfig &cfg) {
    check_config(cfg);
    Report r;
    auto grid = cfg.grid ? *cfg.grid : default_grid();
    if (grid.empty()) {
        r.warnings.push_back("empty grid: nothing to verify");
    }
    bool ok = true;
    json cells = json::array();
    std::ostringstream csv;
    csv << "g,n,u,status,oracle_checked,max_oracle_deviation,max_norm_function_deviation\n";
    for (const auto &c : grid) {
        GnuCode code(c[0], c[1], c[2]);
        Lemma1Report rep = verify_lemma1(code);
        ok = ok && rep.passed;
        cells.push_back(rep.to_json());
        csv << c[0] << ',' << c[1] << ',' << c[2] << ',' << (rep.passed ? "pass" : "fail") << ','
            << (rep.oracle_checked ? "true" : "false") << ',' << fmt(rep.max_oracle_deviation) << ','
            << fmt(rep.max_norm_function_deviation) << '\n';
    }
    r.body = {
        {"schema", kSchema},
        {"mode", "lemma"},
        {"cells", cells},
        {"status", ok ? "pass" : "fail"},
    };
    r.csv = csv.str();
    r.exit_code = ok ? 0 : 2;
    return r;
}

Report run_example() {
    GnuCode code(2, 2, 1);
    int N = code.num_qubits();
    double r6 = std::sqrt(6.0);
    struct Display {
        int w;
        int x;
        std::vector<std::pair<int, double>> amps;  // (weight, amplitude)
    };
    const std::vector<Display> displays = {
        {0, 0, {{0, std::sqrt(5.0) / r6}, {4, 1 / r6}}},
        {1, 0, {{1, 1 / r6}, {5, std::sqrt(5.0) / r6}}},
        {0, 1, {{2, 1.0}}},
        {1, 1, {{3, 1.0}}},
    };
    std::array<DenseState, 2> logical{to_dense(logical_codeword(code, 0)), to_dense(logical_codeword(code, 1))};
    auto oracle_branch = [&](int x, const SyndromeKey &s, int a) {
        int b = inserted_bit(code, s);
        DenseState psi = insert(logical[x], b ? InsertionQubit{0, 1} : InsertionQubit{1, 0}, a);
        return apply_w_projector(apply_total_j_projector(psi, s.j), s.j, code.g(), s.w);
    };

    double worst = 0;
    json symmetric = json::array();
    HalfInt jsym = sector_j(code, Sector::symmetric);
    for (const Display &d : displays) {
        ProjectedCodeword cw = symmetric_codeword(code, d.w, d.x);
        double dev = 0;
        json amps = json::array();
        std::set<int> seen;
        for (const auto &[k, amp] : d.amps) {
            Complex got = cw.symmetric.amps.count(k) ? cw.symmetric.amps.at(k) : Complex(0);
            dev = std::max(dev, std::abs(got - amp));
            amps.push_back({{"weight", k}, {"value", got.real()}, {"expected", amp}});
            seen.insert(k);
        }
        for (const auto &[k, amp] : cw.symmetric.amps) {
            if (!seen.count(k)) {
                dev = std::max(dev, std::abs(amp));
            }
        }
        // The oracle projection must be the same state for every position.
        DenseState dense = cw.to_dense();
        for (int a = 0; a <= N; a++) {
            DenseState o = oracle_branch(d.x, {jsym, d.w}, a).normalized();
            dev = std::max(dev, (o.amps - dense.amps).cwiseAbs().maxCoeff());
        }
        worst = std::max(worst, dev);
        symmetric.push_back({{"w", d.w}, {"x", d.x}, {"amplitudes", amps}, {"max_deviation", dev}});
    }

    ScbBasis basis = build_scb(N + 1);
    HalfInt jmix = sector_j(code, Sector::mixed);
    json mixed = json::array();
    for (int a = 0; a <= N; a++) {
        auto d = insertion_overlaps(basis, N, a, jmix, jmix);
        double dsq = 0;
        json dj = json::object();
        for (const auto &[p, c] : d) {
            dsq += std::norm(c);
            dj[std::to_string(p)] = complex_json(c);
        }
        worst = std::max(worst, std::abs(dsq - 1));
        for (int w : {0, code.g() - 1}) {
            for (int x = 0; x < 2; x++) {
                DenseState cw = mixed_codeword(code, a, w, x, d).to_dense(&basis).normalized();
                DenseState o = oracle_branch(x, {jmix, w}, a).normalized();
                double dev = (o.amps - cw.amps).cwiseAbs().maxCoeff();
                double overlap = std::abs(o.inner(cw));
                worst = std::max({worst, dev, std::abs(overlap - 1)});
                mixed.push_back({{"a", a},
                                 {"w", w},
                                 {"x", x},
                                 {"sum_d_squared", dsq},
                                 {"d", dj},
                                 {"max_deviation", dev},
                                 {"overlap_abs", overlap}});
            }
        }
    }

    bool ok = worst < kAmplitudeTolerance;
    Report r;
    r.body = {
        {"schema", kSchema}, {"mode", "example"},     {"code", code_json(code)},
        {"symmetric", symmetric}, {"mixed", mixed}, {"max_amplitude_deviation", worst},
        {"status", ok ? "pass" : "fail"},
    };
    r.exit_code = ok ? 0 : 2;
    return r;
}

Report run_sweep(const ExperimentConfig &cfg) {
    check_config(cfg);
    Report r;
    auto grid = cfg.grid ? *cfg.grid : default_grid();
    if (grid.empty()) {
        r.warnings.push_back("empty grid: nothing to sweep");
    }
    struct Cell {
        bool skipped = false;
        bool ok = true;
        json body;
        std::string csv;
    };
    std::vector<Cell> results(grid.size());
    parallel_for(grid.size(), [&](std::size_t lo, std::size_t hi) {
        for (std::size_t ci = lo; ci < hi; ci++) {
            Cell &cell = results[ci];
            GnuCode code(grid[ci][0], grid[ci][1], grid[ci][2]);
            int N = code.num_qubits();
            if (N + 1 > max_dense_qubits()) {
                cell.skipped = true;
                continue;
            }
            DenseState encoded = encode(code, cfg.payload);
            std::ostringstream csv;
            json positions = json::array();
            for (int a = 0; a <= N; a++) {
                auto analytic = syndrome_distribution(code, cfg.insertion, a);
                auto oracle = oracle_syndrome_distribution(insert(encoded, cfg.insertion, a), code.g());
                double deviation = max_deviation(analytic, oracle);
                double band = zero_band(code, oracle);
                cell.ok = cell.ok && deviation <= kDistributionTolerance && band < kZeroBandTolerance;

                Rng rng(split_seed(split_seed(cfg.seed, ci), static_cast<uint64_t>(a)));
                std::map<SyndromeKey, uint64_t> counts;
                for (uint64_t shot = 0; shot < cfg.shots; shot++) {
                    counts[sample_syndrome(oracle, rng).key]++;
                }
                json rows = json::array();
                for (const auto &[key, p] : analytic) {
                    double freq = static_cast<double>(counts[key]) / static_cast<double>(cfg.shots);
                    json row = key_json(key);
                    row["analytic"] = p;
                    row["prefix_route"] = key.j == sector_j(code, Sector::mixed)
                                              ? lookup(analytic, key) / gamma_mixed(code, a, key.w) *
                                                    gamma_mixed_prefix_route(code, a, key.w)
                                              : p;
                    row["oracle"] = lookup(oracle, key);
                    row["frequency"] = freq;
                    rows.push_back(row);
                    csv << code.g() << ',' << code.n() << ',' << code.u() << ',' << a << ',' << key.j.twice() << ','
                        << key.w << ',' << fmt(p) << ',' << fmt(lookup(oracle, key)) << ',' << fmt(freq) << '\n';
                }
                positions.push_back(
                    {{"a", a}, {"rows", rows}, {"max_deviation", deviation}, {"zero_band_max", band}});
            }
            cell.body = {{"code", code_json(code)}, {"positions", positions}};
            cell.csv = csv.str();
        }
    });
    bool ok = true;
    json cells = json::array();
    std::ostringstream csv;
    csv << "g,n,u,a,twice_j,w,analytic,oracle,frequency\n";
    for (std::size_t ci = 0; ci < grid.size(); ci++) {
        if (results[ci].skipped) {
            r.warnings.push_back("skipping (" + std::to_string(grid[ci][0]) + "," + std::to_string(grid[ci][1]) +
                                 "," + std::to_string(grid[ci][2]) + "): N+1 exceeds the qubit cap");
            continue;
        }
        ok = ok && results[ci].ok;
        cells.push_back(results[ci].body);
        csv << results[ci].csv;
    }
    r.body = {
        {"schema", kSchema},
        {"mode", "sweep"},
        {"seed", cfg.seed},
        {"shots", cfg.shots},
        {"payload", amplitudes_json(cfg.payload)},
        {"insertion", amplitudes_json(cfg.insertion)},
        {"cells", cells},
        {"status", ok ? "pass" : "fail"},
    };
    r.csv = csv.str();
    r.exit_code = ok ? 0 : 2;
    return r;
}

Report run(const ExperimentConfig &cfg) {
    if (cfg.mode == "single") {
        return run_single(cfg);
    }
    if (cfg.mode == "montecarlo") {
        return run_montecarlo(cfg);
    }
    if (cfg.mode == "lemma") {
        return run_lemma(cfg);
    }
    if (cfg.mode == "example") {
        return run_example();
    }
    if (cfg.mode == "sweep") {
        return run_sweep(cfg);
    }
    throw ConfigError("unknown mode '" + cfg.mode + "'");
}

}  // namespace insqec
