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

#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "insqec/channel.h"
#include "insqec/exact.h"
#include "insqec/half_int.h"
#include "insqec/scb.h"
#include "insqec/states.h"

namespace insqec {

/// Which total angular momentum the J^2 measurement returned:
/// symmetric is j = (N+1)/2, mixed is j = (N-1)/2.
enum class Sector { symmetric, mixed };

HalfInt sector_j(const GnuCode &code, Sector sector);
const char *sector_name(Sector sector);

/// Two-stage measurement outcome (j, w).
struct SyndromeKey {
    HalfInt j;
    int w = 0;

    auto operator<=>(const SyndromeKey &) const = default;
    std::string str() const;
};

/// The four syndromes that can occur, in the order
/// (sym, 0), (sym, 1), (mixed, 0), (mixed, g-1).
std::vector<SyndromeKey> nonzero_syndromes(const GnuCode &code);

/// Sector of a syndrome; throws std::invalid_argument if j is neither
/// (N+1)/2 nor (N-1)/2.
Sector sector_of(const GnuCode &code, const SyndromeKey &s);

/// Value of the inserted qubit that feeds this branch: w = 0 and 1 in the
/// symmetric sector come from |0> and |1>; w = 0 and g-1 in the mixed sector
/// come from |1> and |0>. Throws ZeroCodeword for a branch that is
/// identically empty.
int inserted_bit(const GnuCode &code, const SyndromeKey &s);

// --- Branch probabilities ---------------------------------------------------

/// gamma_0 = 1 - N / (2u (N+1)), gamma_1 = 1/(N+1) + N / (2u (N+1)),
/// zero for 2 <= w < g.
Rational gamma_symmetric_exact(const GnuCode &code, int w);
double gamma_symmetric(const GnuCode &code, int w);

/// Mixed-sector branch weight for insertion position a:
///   w = 0:    (1 - 1/(2u)) N/(N+1)
///   w = g-1:  1/(2u) N/(N+1)
/// and zero in between. J^2 commutes with qubit permutations, so this does
/// not depend on a; every row equals the a = N row.
Rational gamma_mixed_exact(const GnuCode &code, int a, int w);
double gamma_mixed(const GnuCode &code, int a, int w);

/// Part of gamma_mixed carried by coupling paths whose prefix (the first a
/// qubits plus the inserted one) has total (a-1)/2:
///   w = 0:    (1 - 1/(2u)) a/(a+1)
///   w = g-1:  1/(2u) a/(a+1)
/// The remaining N/(N+1) - a/(a+1) fraction goes through a prefix total of
/// (a+1)/2. Equals gamma_mixed at a = N.
Rational gamma_mixed_prefix_route_exact(const GnuCode &code, int a, int w);
double gamma_mixed_prefix_route(const GnuCode &code, int a, int w);

struct GammaTable {
    GnuCode code;
    std::map<int, double> symmetric;
    std::map<std::pair<int, int>, double> mixed;               // (a, w)
    std::map<std::pair<int, int>, double> mixed_prefix_route;  // (a, w)
};

GammaTable gamma_table(const GnuCode &code);

/// Joint (j, w) distribution for inserting q1 at position a. Does not depend
/// on the payload. Entries are listed for all four nonzero syndromes.
std::map<SyndromeKey, double> syndrome_distribution(const GnuCode &code, const InsertionQubit &q1, int a);

/// Same with |v0|^2 given as an exact rational.
std::map<SyndromeKey, Rational> syndrome_distribution_exact(const GnuCode &code, const Rational &v0_sq, int a);

// --- Projected codewords ------------------------------------------------------

/// One Dicke weight of a projected codeword. `amp` is the unnormalised
/// coefficient on |j, m> along the insertion's coupling multiplet.
struct CodewordTerm {
    int index = 0;  // i in the codeword sum
    int weight = 0;
    HalfInt m;
    Rational amp_squared;
    int sign = 0;

    double amp() const {
        return signed_sqrt(sign, amp_squared);
    }
};

/// Coefficients of the unnormalised codeword x~ in branch s, written on the
/// multiplet |j, m> obtained by coupling the code block (spin N/2) with the
/// inserted spin-1/2. They do not depend on the insertion position.
struct CodewordProfile {
    SyndromeKey syndrome;
    Sector sector = Sector::symmetric;
    int x = 0;
    int bit = 0;
    std::vector<CodewordTerm> terms;
    Rational norm_squared;
};

CodewordProfile codeword_profile(const GnuCode &code, const SyndromeKey &s, int x);

/// Closed-form squared norm of the unnormalised symmetric codeword:
///   w = 0: 2^{-(n-1)} sum_{i = x mod 2} binom(n, i) (1 - g i/(N+1))
///   w = 1: 2^{-(n-1)} sum_{i = x mod 2} binom(n, i) (g i + 1)/(N+1)
Rational symmetric_norm_closed_form(const GnuCode &code, int w, int x);

/// Closed-form squared norm of the unnormalised mixed codeword:
///   w = 0:   2^{-(n-1)} N/(N+1) sum binom(n, i) (1 - i/(n u))
///   w = g-1: 2^{-(n-1)} N/(N+1) sum binom(n, i) i/(n u)
Rational mixed_norm_closed_form(const GnuCode &code, int w, int x);

/// The prefix-route share of mixed_norm_closed_form: N/(N+1) replaced by
/// a/(a+1).
Rational mixed_norm_prefix_route(const GnuCode &code, int a, int w, int x);

/// f_a(i): the squared prefix-route sum over l of
/// sqrt(binom(a,l) binom(N-a, gi-l)) <a/2; 1/2 | (a-1)/2> <(a-1)/2; (N-a)/2 | (N-1)/2>,
/// evaluated term by term with cg().
double norm_function_direct(const GnuCode &code, int a, int i);
/// a/(a+1) binom(N-1, g i).
Rational norm_function_closed_form(const GnuCode &code, int a, int i);

struct ProjectedCodeword {
    SyndromeKey syndrome;
    Sector sector = Sector::symmetric;
    int x = 0;
    int num_qubits = 0;
    /// Symmetric sector: normalized Dicke amplitudes on N+1 qubits.
    WeightState symmetric;
    /// Mixed sector: unnormalised amplitude on (path index, codeword index i).
    std::map<std::pair<std::size_t, int>, Complex> mixed;
    /// Mixed sector: m of each codeword index i.
    std::map<int, HalfInt> mixed_m;

    double norm_squared() const;
    /// Needs `basis` only in the mixed sector.
    DenseState to_dense(const ScbBasis *basis = nullptr) const;
};

/// Normalized symmetric-sector codeword x for w in {0, 1}. Throws
/// ZeroCodeword for other w.
ProjectedCodeword symmetric_codeword(const GnuCode &code, int w, int x);

/// Unnormalised mixed-sector codeword x for w in {0, g-1}: amplitude
/// d_p * profile_i on |j, m_i>_p. With sum_p |d_p|^2 = 1 its squared norm is
/// mixed_norm_closed_form for every position a and every d.
ProjectedCodeword mixed_codeword(const GnuCode &code, int a, int w, int x, const std::map<std::size_t, Complex> &d);

/// d_{a,p} = <j, m|_p pi_a |j, m>_{N (x) 1}, where |j, m>_{N (x) 1} couples a
/// symmetric N-qubit block with one extra spin and pi_a moves that spin to
/// position a. Independent of m.
std::map<std::size_t, Complex> insertion_overlaps(const ScbBasis &basis, int N, int a, HalfInt j, HalfInt m);

// --- Norm equality ------------------------------------------------------------

/// (sum_{i = p mod 2} binom(n, i), sum_{i = p mod 2} i binom(n, i)).
std::pair<BigInt, BigInt> binomial_sums(int n, int parity);

/// sum_i binom(n, i) (-1)^i (c0 + c1 i) for rational c0, c1.
Rational alternating_linear_sum(int n, const Rational &c0, const Rational &c1);

struct Lemma1Report {
    GnuCode code;
    bool passed = true;
    /// name -> exact value of each alternating-sum condition; all must be 0.
    std::map<std::string, Rational> residues;
    bool oracle_checked = false;
    /// max over (a, w, x) of |oracle norm^2 - closed form| and of
    /// |norm^2(x=0) - norm^2(x=1)|.
    double max_oracle_deviation = 0;
    /// max over (a, i) of |f_a(i) direct - closed form|.
    double max_norm_function_deviation = 0;
    std::vector<std::string> violations;

    nlohmann::json to_json() const;
};

/// Evaluates the norm-equality conditions exactly and, when N+1 fits in a
/// dense state, compares every projected codeword norm against the oracle.
/// Closed-form checks require n*u <= 64.
Lemma1Report verify_lemma1(const GnuCode &code, double tolerance = 1e-10);

}  // namespace insqec
