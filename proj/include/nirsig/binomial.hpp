// Copyright (c) 2026 The nirsig authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NIRSIG_BINOMIAL_HPP
#define NIRSIG_BINOMIAL_HPP

#include <cstdint>

namespace nirsig {

/// Parameters of a binomial upper-tail probability: observed successes t,
/// trial count m and expected success probability p. The failure probability
/// q is always defined as 1 - p and recomputed where needed.
struct TailQuery {
    std::int64_t successes = 0; // t, 0 <= t <= m
    std::int64_t trials = 1;    // m, >= 1
    double p = 0.5;             // expected success probability in [0, 1]

    /// Throws DomainError unless 0 <= t <= m, m >= 1 and p in [0, 1].
    void validate() const;
};

enum class Sidedness {
    OneTailed,
    TwoTailed,
};

/// How a p-value was computed.
enum class TailMethod {
    ExactSum,            // direct anchored summation in extended precision
    LogSpaceExact,       // log-gamma based summation / incomplete-beta identity
    NormalApproximation, // z-statistic through the normal survival function
};

struct PValue {
    double value = 1.0;
    TailMethod method = TailMethod::ExactSum;
    Sidedness sidedness = Sidedness::OneTailed;
    bool clamped = false;      // a two-tailed doubling exceeded 1 and was capped
    bool out_of_range = false; // unclamped two-tailed value exceeds 1
};

/// One-sample z-statistic for the normal approximation of the binomial.
/// The approximation is conventionally considered applicable when
/// mpq = m*p*(1-p) >= 5; the statistic is computed either way and the
/// gate flag tells the caller whether that condition held.
struct ZStatistic {
    double z = 0.0;
    bool continuity_corrected = true;
    double mpq = 0.0;
    bool gate_satisfied = false;
};

/// ln[C(m,k) * p^k * (1-p)^(m-k)], computed via log-gamma.
/// Returns -infinity when the pmf is exactly zero (never NaN).
/// Throws DomainError for k outside [0, m], m < 1 or p outside [0, 1].
double binom_pmf_log(std::int64_t k, std::int64_t m, double p);

/// Upper-tail probability sum_{k=t}^{m} C(m,k) p^k q^(m-k), one-tailed.
/// Chooses the summation route up to m = 100000 and the incomplete-beta
/// route beyond. Within 1e-12 absolute of the exact rational value for
/// m <= 1000. Never returns NaN or infinity.
PValue upper_tail_exact(const TailQuery& query);

/// Summation route for the upper tail: term-ratio recurrence started at the
/// largest term inside [t, m]. For m <= 10000 the anchor term is built by a
/// direct extended-precision product; above that it comes from
/// binom_pmf_log. Works at any m but costs O(effective support).
double upper_tail_sum(const TailQuery& query);

/// Incomplete-beta route for the upper tail, using the identity
/// P(X >= t) = I_p(t, m - t + 1) evaluated with a continued fraction.
double upper_tail_beta(const TailQuery& query);

/// Ground-truth tail via naive summation of explicitly multiplied binomial
/// coefficients in exact integer arithmetic, with p taken as the exact
/// rational value of the double argument. Test oracle only; throws
/// ScaleError when m exceeds 1000.
double upper_tail_oracle(const TailQuery& query);

/// Oracle mass strictly below t: sum_{k=0}^{t-1} C(m,k) p^k q^(m-k),
/// same exact arithmetic and scale bound as upper_tail_oracle.
double lower_mass_oracle(const TailQuery& query);

/// Two-tailed p-value: twice the upper tail. With clamp the value is capped
/// at 1 and flagged clamped; without, the raw doubling is returned as-is and
/// flagged out_of_range when it exceeds 1.
PValue two_tailed(const TailQuery& query, bool clamp);

/// The doubling rule behind two_tailed, applicable to any one-tailed value
/// (the normal route doubles the same way).
PValue double_to_two_tailed(const PValue& one_tailed, bool clamp);

/// z = (t - c - m*p) / sqrt(m*p*q) with c = 0.5 under continuity correction.
/// Throws DomainError when p is 0 or 1 (mpq would vanish).
ZStatistic normal_z(const TailQuery& query, bool continuity_correction);

/// P(Z >= z) for standard normal Z, via the complementary error function.
/// Accurate to better than 1e-12 relative for |z| <= 8.
PValue normal_upper_pval(const ZStatistic& stat);

} // namespace nirsig

#endif // NIRSIG_BINOMIAL_HPP
