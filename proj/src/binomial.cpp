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

#include "nirsig/binomial.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "nirsig/errors.hpp"

namespace nirsig {

namespace {

// Route thresholds. Up to kProductMaxTrials the anchor term is an exact-ish
// long double product; up to kSumMaxTrials the anchor comes from lgamma and
// the sum runs in log space; beyond that the incomplete-beta identity wins.
constexpr std::int64_t kProductMaxTrials = 10'000;
constexpr std::int64_t kSumMaxTrials = 100'000;

constexpr double kInf = std::numeric_limits<double>::infinity();

double clamp01(double x) {
    return std::min(1.0, std::max(0.0, x));
}

// Largest pmf term inside [t, m]: the global mode floor((m+1)p) clamped.
std::int64_t restricted_mode(std::int64_t t, std::int64_t m, double p) {
    double raw = std::floor(static_cast<double>(m + 1) * p);
    auto mode = static_cast<std::int64_t>(raw);
    return std::clamp(mode, t, m);
}

// pmf(k0) as a long double, by interleaved multiplication of the
// coefficient/p factors with the q factors so intermediates stay in range.
long double pmf_product(std::int64_t k0, std::int64_t m, double p) {
    const long double pl = p;
    const long double ql = 1.0L - pl;
    long double acc = 1.0L;
    std::int64_t qleft = m - k0;
    for (std::int64_t i = 1; i <= k0; ++i) {
        acc *= static_cast<long double>(m - k0 + i) / static_cast<long double>(i) * pl;
        while (acc > 1.0L && qleft > 0) {
            acc *= ql;
            --qleft;
        }
    }
    while (qleft > 0) {
        acc *= ql;
        --qleft;
    }
    return acc;
}

// Sum of pmf terms over [t, m] relative to the anchor term at k0, via the
// term ratio pmf(k+1)/pmf(k) = (m-k)p / ((k+1)q). Terms decay monotonically
// away from k0, so once a term falls below the cutoff the geometric bound
// term * r/(1-r) caps everything dropped.
long double relative_term_sum(std::int64_t t, std::int64_t m, double p, std::int64_t k0) {
    const long double pl = p;
    const long double ql = 1.0L - pl;
    constexpr long double kCutoff = 1e-21L;

    long double sum = 1.0L;
    long double term = 1.0L;
    for (std::int64_t k = k0; k < m; ++k) { // upward
        term *= static_cast<long double>(m - k) * pl /
                (static_cast<long double>(k + 1) * ql);
        sum += term;
        if (term < kCutoff * sum)
            break;
    }
    term = 1.0L;
    for (std::int64_t k = k0; k > t; --k) { // downward
        term *= static_cast<long double>(k) * ql /
                (static_cast<long double>(m - k + 1) * pl);
        sum += term;
        if (term < kCutoff * sum)
            break;
    }
    return sum;
}

// Continued fraction for the regularized incomplete beta I_x(a,b),
// evaluated with the modified Lentz algorithm. Converges quickly for
// x below a/(a+b); callers switch to the symmetric form otherwise.
double beta_cont_fraction(double a, double b, double x) {
    constexpr double kTiny = 1e-300;
    constexpr double kEps = 1e-16;
    constexpr int kMaxIter = 500'000;

    const double qab = a + b;
    const double qap = a + 1.0;
    const double qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * x / qap;
    if (std::fabs(d) < kTiny)
        d = kTiny;
    d = 1.0 / d;
    double h = d;
    for (int i = 1; i <= kMaxIter; ++i) {
        const double m2 = 2.0 * i;
        double aa = i * (b - i) * x / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + i) * (qab + i) * x / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < kTiny)
            d = kTiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < kTiny)
            c = kTiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) <= kEps)
            return h;
    }
    throw DomainError("incomplete beta continued fraction did not converge");
}

PValue make_one_tailed(double value, TailMethod method) {
    PValue pv;
    pv.value = value;
    pv.method = method;
    pv.sidedness = Sidedness::OneTailed;
    return pv;
}

} // namespace

void TailQuery::validate() const {
    if (trials < 1)
        throw DomainError("trial count m must be >= 1, got " + std::to_string(trials));
    if (successes < 0 || successes > trials)
        throw DomainError("success count t must lie in [0, m], got t=" +
                          std::to_string(successes) + " with m=" + std::to_string(trials));
    if (!(p >= 0.0 && p <= 1.0))
        throw DomainError("success probability p must lie in [0, 1], got " +
                          std::to_string(p));
}

double binom_pmf_log(std::int64_t k, std::int64_t m, double p) {
    TailQuery probe{k, m, p};
    probe.validate();
    if (p == 0.0)
        return k == 0 ? 0.0 : -kInf;
    if (p == 1.0)
        return k == m ? 0.0 : -kInf;
    const double md = static_cast<double>(m);
    const double kd = static_cast<double>(k);
    double log_coeff = std::lgamma(md + 1.0) - std::lgamma(kd + 1.0) -
                       std::lgamma(md - kd + 1.0);
    double result = log_coeff;
    if (k > 0)
        result += kd * std::log(p);
    if (k < m)
        result += (md - kd) * std::log1p(-p);
    return result;
}

double upper_tail_sum(const TailQuery& query) {
    query.validate();
    const std::int64_t t = query.successes;
    const std::int64_t m = query.trials;
    const double p = query.p;

    if (p == 1.0)
        return 1.0; // the k=m term alone carries probability 1
    if (p == 0.0)
        return t == 0 ? 1.0 : 0.0;

    const std::int64_t k0 = restricted_mode(t, m, p);
    const long double relsum = relative_term_sum(t, m, p, k0);

    if (m <= kProductMaxTrials) {
        const long double tail = pmf_product(k0, m, p) * relsum;
        return clamp01(static_cast<double>(tail));
    }
    const double anchor_log = binom_pmf_log(k0, m, p);
    const double tail = std::exp(anchor_log + std::log(static_cast<double>(relsum)));
    return clamp01(tail);
}

double upper_tail_beta(const TailQuery& query) {
    query.validate();
    const std::int64_t t = query.successes;
    const std::int64_t m = query.trials;
    const double p = query.p;

    if (t == 0)
        return 1.0;
    if (p == 1.0)
        return 1.0;
    if (p == 0.0)
        return 0.0;
    if (t == m)
        return clamp01(std::exp(binom_pmf_log(m, m, p)));

    // P(X >= t) = I_p(a, b) with a = t, b = m - t + 1. The prefactor
    // x^a (1-x)^b / B(a,b) equals pmf(t) * q * t for integer a, b, so the
    // anchor is shared with the summation route.
    const double a = static_cast<double>(t);
    const double b = static_cast<double>(m - t + 1);
    const double log_front = binom_pmf_log(t, m, p) + std::log1p(-p);
    double tail;
    if (p < a / (a + b)) {
        tail = std::exp(log_front) * beta_cont_fraction(a, b, p);
    } else {
        const double ratio = a / b;
        tail = 1.0 - std::exp(log_front) * ratio * beta_cont_fraction(b, a, 1.0 - p);
    }
    return clamp01(tail);
}

PValue upper_tail_exact(const TailQuery& query) {
    query.validate();
    if (query.successes == 0)
        return make_one_tailed(1.0, query.trials <= kProductMaxTrials
                                        ? TailMethod::ExactSum
                                        : TailMethod::LogSpaceExact);
    if (query.trials <= kSumMaxTrials) {
        const TailMethod method = query.trials <= kProductMaxTrials
                                      ? TailMethod::ExactSum
                                      : TailMethod::LogSpaceExact;
        return make_one_tailed(upper_tail_sum(query), method);
    }
    return make_one_tailed(upper_tail_beta(query), TailMethod::LogSpaceExact);
}

PValue double_to_two_tailed(const PValue& one_tailed, bool clamp) {
    PValue pv = one_tailed;
    const double raw = 2.0 * pv.value;
    pv.sidedness = Sidedness::TwoTailed;
    if (clamp && raw > 1.0) {
        pv.value = 1.0;
        pv.clamped = true;
    } else {
        pv.value = raw;
        pv.out_of_range = raw > 1.0;
    }
    return pv;
}

PValue two_tailed(const TailQuery& query, bool clamp) {
    return double_to_two_tailed(upper_tail_exact(query), clamp);
}

ZStatistic normal_z(const TailQuery& query, bool continuity_correction) {
    query.validate();
    const double p = query.p;
    if (p == 0.0 || p == 1.0)
        throw DomainError("normal approximation is undefined for p = " +
                          std::to_string(p) + " (m*p*q = 0)");
    const double m = static_cast<double>(query.trials);
    const double t = static_cast<double>(query.successes);
    const double q = 1.0 - p;
    ZStatistic stat;
    stat.continuity_corrected = continuity_correction;
    stat.mpq = m * p * q;
    stat.gate_satisfied = stat.mpq >= 5.0;
    const double c = continuity_correction ? 0.5 : 0.0;
    stat.z = (t - c - m * p) / std::sqrt(stat.mpq);
    return stat;
}

PValue normal_upper_pval(const ZStatistic& stat) {
    if (!std::isfinite(stat.z))
        throw DomainError("z-statistic must be finite");
    PValue pv;
    pv.value = 0.5 * std::erfc(stat.z / std::numbers::sqrt2);
    pv.method = TailMethod::NormalApproximation;
    pv.sidedness = Sidedness::OneTailed;
    return pv;
}

} // namespace nirsig
