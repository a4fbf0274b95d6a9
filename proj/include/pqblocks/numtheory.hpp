#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace pqblocks {

enum class PsiSign { Minus, Plus };

/// Linear: ord_p(x) odd. Unitary: ord_p(x) even. Even: p = 2.
enum class PrimeKind { Linear, Unitary, Even };

const char* to_string(PrimeKind k);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> primes_up_to(std::int64_t bound);
/// Distinct prime divisors of |n|, ascending. n != 0.
std::vector<std::int64_t> prime_divisors(std::int64_t n);
/// Returns the prime if q = prime^k with k >= 1, else 0.
std::int64_t prime_power_base(std::int64_t q);

/// Exponent of p in k. k != 0, p prime.
int valuation(std::int64_t k, std::int64_t p);
int valuation(const mpz_class& k, std::int64_t p);
/// The p-part p^{v_p(k)} of k. k != 0.
std::int64_t p_part(std::int64_t k, std::int64_t p);

/// Multiplicative order of x modulo m; gcd(x, m) = 1, m >= 2.
std::int64_t ord_mod(std::int64_t x, std::int64_t m);

int mobius(std::int64_t n);

/// x^f - 1 or x^f + 1.
mpz_class psi(std::int64_t x, std::int64_t f, PsiSign sign);
/// Phi_d(x) via the Moebius product of x^e - 1 over e | d. |x| >= 2.
mpz_class cyclotomic_value(std::int64_t d, std::int64_t x);

PrimeKind classify_linear_unitary(std::int64_t x, std::int64_t p);

bool is_fermat_prime(std::int64_t p);
bool is_mersenne_prime(std::int64_t p);

/// Everything needed to evaluate v_p(x^f -+ 1) without touching big numbers.
struct ValuationContext {
    std::int64_t x = 0;
    std::int64_t p = 0;
    std::int64_t e_p = 0;  ///< ord_p(x)
    PrimeKind kind = PrimeKind::Even;
    /// Odd p: v_p(x^e_p - 1). p = 2: v_2(x - 1).
    int base = 0;
    /// p = 2 only: v_2(x + 1).
    int base_plus = 0;

    /// |x| >= 2, p prime, p does not divide x.
    static ValuationContext make(std::int64_t x, std::int64_t p);
};

/// v_p(x^f -+ 1) by the cyclotomic closed form. f >= 1.
int psi_valuation(const ValuationContext& ctx, std::int64_t f, PsiSign sign);

}  // namespace pqblocks
