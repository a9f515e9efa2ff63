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

// Ground-truth binomial tail masses by the most naive route available:
// p is read as the exact rational value of its double representation,
// binomial coefficients are built by explicit multiplication, and the
// terms are summed in exact integer arithmetic (GMP). Slow by design;
// test harnesses only.

#include <string>

#include <gmpxx.h>

#include "nirsig/binomial.hpp"
#include "nirsig/errors.hpp"

namespace nirsig {

namespace {

constexpr std::int64_t kOracleMaxTrials = 1'000;

// Exact mass of k in [lo, hi] for m trials, success probability num/den.
// Every term C(m,k) * num^k * (den-num)^(m-k) shares the denominator den^m.
double exact_mass(std::int64_t lo, std::int64_t hi, std::int64_t m,
                  const mpz_class& num, const mpz_class& den) {
    if (lo > hi)
        return 0.0;
    const mpz_class fail_num = den - num; // q's numerator over the same den

    // Degenerate probabilities: only one support point carries mass.
    if (num == 0)
        return lo == 0 ? 1.0 : 0.0;
    if (fail_num == 0)
        return hi == m ? 1.0 : 0.0;

    // C(m,lo) by the multiplicative formula, all divisions exact.
    mpz_class coeff = 1;
    for (std::int64_t i = 1; i <= lo; ++i) {
        coeff *= m - lo + i;
        mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(),
                        static_cast<unsigned long>(i));
    }
    mpz_class succ_pow;
    mpz_pow_ui(succ_pow.get_mpz_t(), num.get_mpz_t(),
               static_cast<unsigned long>(lo));
    mpz_class fail_pow;
    mpz_pow_ui(fail_pow.get_mpz_t(), fail_num.get_mpz_t(),
               static_cast<unsigned long>(m - lo));

    mpz_class sum = 0;
    for (std::int64_t k = lo;; ++k) {
        sum += coeff * succ_pow * fail_pow;
        if (k == hi)
            break;
        coeff *= m - k;
        mpz_divexact_ui(coeff.get_mpz_t(), coeff.get_mpz_t(),
                        static_cast<unsigned long>(k + 1));
        succ_pow *= num;
        mpz_divexact(fail_pow.get_mpz_t(), fail_pow.get_mpz_t(),
                     fail_num.get_mpz_t());
    }

    mpz_class total_den;
    mpz_pow_ui(total_den.get_mpz_t(), den.get_mpz_t(),
               static_cast<unsigned long>(m));
    mpq_class mass(sum, total_den);
    mass.canonicalize();
    return mass.get_d();
}

double oracle_mass(const TailQuery& query, bool upper) {
    query.validate();
    if (query.trials > kOracleMaxTrials)
        throw ScaleError("oracle supports m <= " + std::to_string(kOracleMaxTrials) +
                         ", got m = " + std::to_string(query.trials));
    mpq_class prob(query.p); // exact rational of the double
    prob.canonicalize();
    const std::int64_t lo = upper ? query.successes : 0;
    const std::int64_t hi = upper ? query.trials : query.successes - 1;
    return exact_mass(lo, hi, query.trials, prob.get_num(), prob.get_den());
}

} // namespace

double upper_tail_oracle(const TailQuery& query) {
    return oracle_mass(query, true);
}

double lower_mass_oracle(const TailQuery& query) {
    return oracle_mass(query, false);
}

} // namespace nirsig
