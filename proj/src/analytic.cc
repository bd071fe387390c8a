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

#include "insqec/analytic.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <string>

#include "insqec/cg.h"
#include "insqec/errors.h"
#include "insqec/oracle.h"

namespace insqec {

namespace {

void check_w(const GnuCode &code, int w) {
    if (w < 0 || w >= code.g()) {
        throw std::out_of_range("w = " + std::to_string(w) + " outside 0.." + std::to_string(code.g() - 1));
    }
}

void check_position(const GnuCode &code, int a) {
    if (a < 0 || a > code.num_qubits()) {
        throw std::out_of_range("insertion position " + std::to_string(a) + " outside 0.." +
                                std::to_string(code.num_qubits()));
    }
}

void check_bit(int x) {
    if (x != 0 && x != 1) {
        throw std::invalid_argument("logical bit must be 0 or 1");
    }
}

Rational pow2_inverse(int e) {
    return Rational(BigInt(1), BigInt(1) << e);
}

/// Exact <N/2, k0 - N/2; 1/2, m2 | j, k0 - N/2 + m2>, or an exact zero when
/// the coupled m is out of range for j.
CgExact block_spin_coupling(int N, int k0, int bit, HalfInt j) {
    HalfInt m1 = HalfInt::from_twice(2 * k0 - N);
    HalfInt m2 = bit ? kHalf : -kHalf;
    HalfInt m = m1 + m2;
    if (m.abs() > j) {
        return {};
    }
    return cg_exact({HalfInt::from_twice(N), m1, kHalf, m2, j, m});
}

/// sum over i = x mod 2 of binom(n, i) * weight(i).
template <typename F>
Rational parity_sum(int n, int x, F weight) {
    Rational total = 0;
    for (int i = x; i <= n; i += 2) {
        total += Rational(binomial(n, i)) * weight(i);
    }
    return total;
}

}  // namespace

HalfInt sector_j(const GnuCode &code, Sector sector) {
    int N = code.num_qubits();
    return HalfInt::from_twice(sector == Sector::symmetric ? N + 1 : N - 1);
}

const char *sector_name(Sector sector) {
    return sector == Sector::symmetric ? "symmetric" : "mixed";
}

std::string SyndromeKey::str() const {
    return "(" + j.str() + ", " + std::to_string(w) + ")";
}

std::vector<SyndromeKey> nonzero_syndromes(const GnuCode &code) {
    HalfInt sym = sector_j(code, Sector::symmetric);
    HalfInt mix = sector_j(code, Sector::mixed);
    return {{sym, 0}, {sym, 1}, {mix, 0}, {mix, code.g() - 1}};
}

Sector sector_of(const GnuCode &code, const SyndromeKey &s) {
    if (s.j == sector_j(code, Sector::symmetric)) {
        return Sector::symmetric;
    }
    if (s.j == sector_j(code, Sector::mixed)) {
        return Sector::mixed;
    }
    throw std::invalid_argument("j = " + s.j.str() + " is not reachable by a single insertion");
}

int inserted_bit(const GnuCode &code, const SyndromeKey &s) {
    check_w(code, s.w);
    if (sector_of(code, s) == Sector::symmetric) {
        if (s.w == 0 || s.w == 1) {
            return s.w;
        }
    } else {
        if (s.w == 0) {
            return 1;
        }
        if (s.w == code.g() - 1) {
            return 0;
        }
    }
    throw ZeroCodeword("syndrome " + s.str() + " has no support for this code");
}

Rational gamma_symmetric_exact(const GnuCode &code, int w) {
    check_w(code, w);
    int N = code.num_qubits();
    Rational spread(N, 2 * code.u() * (N + 1));
    if (w == 0) {
        return 1 - spread;
    }
    if (w == 1) {
        return Rational(1, N + 1) + spread;
    }
    return 0;
}

double gamma_symmetric(const GnuCode &code, int w) {
    return to_double(gamma_symmetric_exact(code, w));
}

namespace {

Rational mixed_branch(const GnuCode &code, int w, const Rational &route_weight) {
    Rational half_inv_u(1, 2 * code.u());
    if (w == 0) {
        return (1 - half_inv_u) * route_weight;
    }
    if (w == code.g() - 1) {
        return half_inv_u * route_weight;
    }
    return 0;
}

}  // namespace

Rational gamma_mixed_exact(const GnuCode &code, int a, int w) {
    check_position(code, a);
    check_w(code, w);
    int N = code.num_qubits();
    return mixed_branch(code, w, Rational(N, N + 1));
}

double gamma_mixed(const GnuCode &code, int a, int w) {
    return to_double(gamma_mixed_exact(code, a, w));
}

Rational gamma_mixed_prefix_route_exact(const GnuCode &code, int a, int w) {
    check_position(code, a);
    check_w(code, w);
    return mixed_branch(code, w, Rational(a, a + 1));
}

double gamma_mixed_prefix_route(const GnuCode &code, int a, int w) {
    return to_double(gamma_mixed_prefix_route_exact(code, a, w));
}

GammaTable gamma_table(const GnuCode &code) {
    GammaTable t{code, {}, {}, {}};
    for (int w = 0; w < code.g(); w++) {
        t.symmetric[w] = gamma_symmetric(code, w);
        for (int a = 0; a <= code.num_qubits(); a++) {
            t.mixed[{a, w}] = gamma_mixed(code, a, w);
            t.mixed_prefix_route[{a, w}] = gamma_mixed_prefix_route(code, a, w);
        }
    }
    return t;
}

std::map<SyndromeKey, Rational> syndrome_distribution_exact(const GnuCode &code, const Rational &v0_sq, int a) {
    check_position(code, a);
    if (v0_sq < 0 || v0_sq > 1) {
        throw std::invalid_argument("|v0|^2 must lie in [0, 1]");
    }
    Rational v1_sq = 1 - v0_sq;
    auto keys = nonzero_syndromes(code);
    std::map<SyndromeKey, Rational> out;
    out[keys[0]] = v0_sq * gamma_symmetric_exact(code, 0);
    out[keys[1]] = v1_sq * gamma_symmetric_exact(code, 1);
    out[keys[2]] = v1_sq * gamma_mixed_exact(code, a, 0);
    out[keys[3]] = v0_sq * gamma_mixed_exact(code, a, code.g() - 1);
    return out;
}

std::map<SyndromeKey, double> syndrome_distribution(const GnuCode &code, const InsertionQubit &q1, int a) {
    check_position(code, a);
    double p0 = std::norm(q1.c0), p1 = std::norm(q1.c1);
    double total = p0 + p1;
    p0 /= total;
    p1 /= total;
    auto keys = nonzero_syndromes(code);
    std::map<SyndromeKey, double> out;
    out[keys[0]] = p0 * gamma_symmetric(code, 0);
    out[keys[1]] = p1 * gamma_symmetric(code, 1);
    out[keys[2]] = p1 * gamma_mixed(code, a, 0);
    out[keys[3]] = p0 * gamma_mixed(code, a, code.g() - 1);
    return out;
}

CodewordProfile codeword_profile(const GnuCode &code, const SyndromeKey &s, int x) {
    check_bit(x);
    CodewordProfile out;
    out.syndrome = s;
    out.sector = sector_of(code, s);
    out.x = x;
    out.bit = inserted_bit(code, s);
    int N = code.num_qubits();
    Rational prefactor = pow2_inverse(code.n() - 1);
    for (int i = x; i <= code.n(); i += 2) {
        int k0 = code.g() * i;
        CgExact c = block_spin_coupling(N, k0, out.bit, s.j);
        if (c.sign == 0) {
            continue;
        }
        CodewordTerm t;
        t.index = i;
        t.weight = k0 + out.bit;
        t.m = HalfInt::from_twice(2 * t.weight - (N + 1));
        t.amp_squared = prefactor * Rational(binomial(code.n(), i)) * c.squared;
        t.sign = c.sign;
        out.norm_squared += t.amp_squared;
        out.terms.push_back(t);
    }
    return out;
}

Rational symmetric_norm_closed_form(const GnuCode &code, int w, int x) {
    check_bit(x);
    check_w(code, w);
    int N = code.num_qubits(), g = code.g();
    Rational sum;
    if (w == 0) {
        sum = parity_sum(code.n(), x, [&](int i) {
            return 1 - Rational(g * i, N + 1);
        });
    } else if (w == 1) {
        sum = parity_sum(code.n(), x, [&](int i) {
            return Rational(g * i + 1, N + 1);
        });
    } else {
        throw ZeroCodeword("symmetric codeword with w = " + std::to_string(w) + " is zero");
    }
    return pow2_inverse(code.n() - 1) * sum;
}

namespace {

Rational mixed_norm_with_route(const GnuCode &code, int w, int x, const Rational &route_weight) {
    check_bit(x);
    check_w(code, w);
    int nu = code.n() * code.u();
    Rational sum;
    if (w == 0) {
        sum = parity_sum(code.n(), x, [&](int i) {
            return 1 - Rational(i, nu);
        });
    } else if (w == code.g() - 1) {
        sum = parity_sum(code.n(), x, [&](int i) {
            return Rational(i, nu);
        });
    } else {
        throw ZeroCodeword("mixed codeword with w = " + std::to_string(w) + " is zero");
    }
    return pow2_inverse(code.n() - 1) * route_weight * sum;
}

}  // namespace

Rational mixed_norm_closed_form(const GnuCode &code, int w, int x) {
    int N = code.num_qubits();
    return mixed_norm_with_route(code, w, x, Rational(N, N + 1));
}

Rational mixed_norm_prefix_route(const GnuCode &code, int a, int w, int x) {
    check_position(code, a);
    return mixed_norm_with_route(code, w, x, Rational(a, a + 1));
}

double norm_function_direct(const GnuCode &code, int a, int i) {
    int N = code.num_qubits(), k = code.g() * i;
    if (a < 1 || a > N) {
        throw std::out_of_range("prefix route needs 1 <= a <= N");
    }
    if (k < 0 || k > N) {
        throw std::out_of_range("weight g*i outside 0..N");
    }
    HalfInt ja = HalfInt::from_twice(a), jp = HalfInt::from_twice(a - 1), jr = HalfInt::from_twice(N - a),
            j = HalfInt::from_twice(N - 1);
    double sum = 0;
    for (int l = std::max(0, k + a - N); l <= std::min(a, k); l++) {
        HalfInt m1 = HalfInt::from_twice(2 * l - a);
        HalfInt mp = m1 + kHalf;
        HalfInt mr = HalfInt::from_twice(2 * (k - l) - (N - a));
        HalfInt m = mp + mr;
        if (mp.abs() > jp || m.abs() > j) {
            continue;
        }
        double first = cg({ja, m1, kHalf, kHalf, jp, mp});
        double second = cg({jp, mp, jr, mr, j, m});
        double weight = std::sqrt(to_double(Rational(binomial(a, l) * binomial(N - a, k - l))));
        sum += weight * first * second;
    }
    return sum * sum;
}

Rational norm_function_closed_form(const GnuCode &code, int a, int i) {
    int N = code.num_qubits();
    return Rational(a, a + 1) * Rational(binomial(N - 1, code.g() * i));
}

double ProjectedCodeword::norm_squared() const {
    if (sector == Sector::symmetric) {
        return symmetric.norm_squared();
    }
    double total = 0;
    for (const auto &[key, a] : mixed) {
        total += std::norm(a);
    }
    return total;
}

DenseState ProjectedCodeword::to_dense(const ScbBasis *basis) const {
    if (sector == Sector::symmetric) {
        return insqec::to_dense(symmetric);
    }
    if (!basis || basis->num_qubits() != num_qubits) {
        throw std::invalid_argument("mixed codeword needs the coupled basis on " + std::to_string(num_qubits) +
                                    " qubits");
    }
    DenseState out = DenseState::zero(num_qubits);
    for (const auto &[key, a] : mixed) {
        out.amps += a * basis->state(key.first, mixed_m.at(key.second)).amps;
    }
    return out;
}

ProjectedCodeword symmetric_codeword(const GnuCode &code, int w, int x) {
    HalfInt j = sector_j(code, Sector::symmetric);
    if (w != 0 && w != 1) {
        check_w(code, w);
        throw ZeroCodeword("symmetric codeword with w = " + std::to_string(w) + " is zero");
    }
    CodewordProfile profile = codeword_profile(code, {j, w}, x);
    double norm = std::sqrt(to_double(symmetric_norm_closed_form(code, w, x)));
    ProjectedCodeword out;
    out.syndrome = {j, w};
    out.sector = Sector::symmetric;
    out.x = x;
    out.num_qubits = code.num_qubits() + 1;
    out.symmetric.num_qubits = out.num_qubits;
    for (const auto &t : profile.terms) {
        out.symmetric.amps[t.weight] = t.amp() / norm;
    }
    return out;
}

ProjectedCodeword mixed_codeword(const GnuCode &code, int a, int w, int x, const std::map<std::size_t, Complex> &d) {
    check_position(code, a);
    HalfInt j = sector_j(code, Sector::mixed);
    CodewordProfile profile = codeword_profile(code, {j, w}, x);
    ProjectedCodeword out;
    out.syndrome = {j, w};
    out.sector = Sector::mixed;
    out.x = x;
    out.num_qubits = code.num_qubits() + 1;
    for (const auto &t : profile.terms) {
        out.mixed_m[t.index] = t.m;
        for (const auto &[p, dp] : d) {
            out.mixed[{p, t.index}] = dp * t.amp();
        }
    }
    return out;
}

std::map<std::size_t, Complex> insertion_overlaps(const ScbBasis &basis, int N, int a, HalfInt j, HalfInt m) {
    if (basis.num_qubits() != N + 1) {
        throw std::invalid_argument("basis must live on N+1 qubits");
    }
    if (a < 0 || a > N) {
        throw std::out_of_range("insertion position outside 0..N");
    }
    HalfInt block = HalfInt::from_twice(N);
    DenseState coupled = DenseState::zero(N + 1);
    for (HalfInt m2 : {kHalf, -kHalf}) {
        HalfInt m1 = m - m2;
        if (m1.abs() > block) {
            continue;
        }
        double c = cg({block, m1, kHalf, m2, j, m});
        if (c == 0) {
            continue;
        }
        int k1 = (m1 + HalfInt::from_twice(N)).as_integer();
        InsertionQubit spin = m2 > HalfInt() ? InsertionQubit{0, 1} : InsertionQubit{1, 0};
        coupled.amps += c * insert(dicke(N, k1), spin, a).amps;
    }
    return overlap_coefficients(coupled, basis, j, m);
}

std::pair<BigInt, BigInt> binomial_sums(int n, int parity) {
    if (n < 0) {
        throw std::invalid_argument("n must be non-negative");
    }
    check_bit(parity);
    BigInt plain = 0, weighted = 0;
    for (int i = parity; i <= n; i += 2) {
        plain += binomial(n, i);
        weighted += binomial(n, i) * i;
    }
    return {plain, weighted};
}

Rational alternating_linear_sum(int n, const Rational &c0, const Rational &c1) {
    Rational total = 0;
    for (int i = 0; i <= n; i++) {
        Rational term = Rational(binomial(n, i)) * (c0 + c1 * i);
        if (i % 2) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

nlohmann::json Lemma1Report::to_json() const {
    nlohmann::json res = nlohmann::json::object();
    for (const auto &[name, value] : residues) {
        res[name] = value.str();
    }
    return {
        {"g", code.g()},
        {"n", code.n()},
        {"u", code.u()},
        {"status", passed ? "pass" : "fail"},
        {"residues", res},
        {"oracle_checked", oracle_checked},
        {"max_oracle_deviation", max_oracle_deviation},
        {"max_norm_function_deviation", max_norm_function_deviation},
        {"violations", violations},
    };
}

Lemma1Report verify_lemma1(const GnuCode &code, double tolerance) {
    int n = code.n(), u = code.u(), g = code.g(), N = code.num_qubits();
    if (n * u > 64) {
        throw std::invalid_argument("closed-form checks are limited to n*u <= 64");
    }
    Lemma1Report report{code, true, {}, false, 0, 0, {}};
    auto cell = [&](int a, int w) {
        return "(g=" + std::to_string(g) + ",n=" + std::to_string(n) + ",u=" + std::to_string(u) +
               ",a=" + std::to_string(a) + ",w=" + std::to_string(w) + ")";
    };

    // Alternating sums of squared coupling coefficients, one per nonzero
    // branch, evaluated with the exact Racah coefficients.
    for (const SyndromeKey &s : nonzero_syndromes(code)) {
        Sector sector = sector_of(code, s);
        int bit = inserted_bit(code, s);
        Rational total = 0;
        for (int i = 0; i <= n; i++) {
            Rational term = Rational(binomial(n, i)) * block_spin_coupling(N, g * i, bit, s.j).squared;
            total += (i % 2) ? -term : term;
        }
        std::string name = std::string(sector == Sector::symmetric ? "symmetric" : "mixed") + "_cg_w" +
                           std::to_string(s.w);
        report.residues[name] = total;
    }
    report.residues["binomial_sum_w0"] = alternating_linear_sum(n, 1, Rational(-1, n * u));
    report.residues["binomial_sum_w" + std::to_string(g - 1)] = alternating_linear_sum(n, 0, Rational(1, n * u));
    for (const auto &[name, value] : report.residues) {
        if (value != 0) {
            report.passed = false;
            report.violations.push_back(name + " = " + value.str() + " for " + cell(-1, -1));
        }
    }

    for (int a = 1; a <= N; a++) {
        for (int i = 0; i <= n && g * i <= N; i++) {
            double closed = to_double(norm_function_closed_form(code, a, i));
            double dev = std::abs(norm_function_direct(code, a, i) - closed) / std::max(1.0, closed);
            report.max_norm_function_deviation = std::max(report.max_norm_function_deviation, dev);
            if (dev > tolerance) {
                report.passed = false;
                report.violations.push_back("norm function f_a(" + std::to_string(i) + ") off by " +
                                            std::to_string(dev) + " at " + cell(a, 0));
            }
        }
    }

    if (N + 1 > max_dense_qubits()) {
        return report;
    }
    report.oracle_checked = true;
    std::array<DenseState, 2> logical{to_dense(logical_codeword(code, 0)), to_dense(logical_codeword(code, 1))};
    for (int a = 0; a <= N; a++) {
        for (const SyndromeKey &s : nonzero_syndromes(code)) {
            Sector sector = sector_of(code, s);
            int bit = inserted_bit(code, s);
            InsertionQubit spin = bit ? InsertionQubit{0, 1} : InsertionQubit{1, 0};
            std::array<double, 2> norms{};
            for (int x = 0; x < 2; x++) {
                DenseState psi = insert(logical[x], spin, a);
                DenseState projected = apply_w_projector(apply_total_j_projector(psi, s.j), s.j, g, s.w);
                norms[x] = projected.norm_squared();
                double closed = to_double(sector == Sector::symmetric ? symmetric_norm_closed_form(code, s.w, x)
                                                                      : mixed_norm_closed_form(code, s.w, x));
                report.max_oracle_deviation = std::max(report.max_oracle_deviation, std::abs(norms[x] - closed));
            }
            double gap = std::abs(norms[0] - norms[1]);
            report.max_oracle_deviation = std::max(report.max_oracle_deviation, gap);
            if (gap > tolerance) {
                report.passed = false;
                report.violations.push_back("codeword norms differ by " + std::to_string(gap) + " at " +
                                            cell(a, s.w));
            }
        }
    }
    if (report.max_oracle_deviation > tolerance) {
        report.passed = false;
        report.violations.push_back("oracle norms deviate from the closed form by " +
                                    std::to_string(report.max_oracle_deviation));
    }
    return report;
}

}  // namespace insqec
