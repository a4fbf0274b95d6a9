#include "pqblocks/numtheory.hpp"

#include <cstdlib>
#include <string>

#include "pqblocks/errors.hpp"

namespace pqblocks {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 b, u64 e, u64 m) {
    u64 r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mulmod(r, b, m);
        b = mulmod(b, b, m);
        e >>= 1;
    }
    return r;
}

u64 gcd_u(u64 a, u64 b) {
    while (b != 0) {
        u64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool is_power_of_two(std::int64_t v) { return v > 0 && (v & (v - 1)) == 0; }

}  // namespace

const char* to_string(PrimeKind k) {
    switch (k) {
        case PrimeKind::Linear: return "linear";
        case PrimeKind::Unitary: return "unitary";
        case PrimeKind::Even: return "even";
    }
    return "?";
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % d == 0) return n == d;
    }
    // Deterministic Miller-Rabin for 64-bit inputs.
    u64 m = static_cast<u64>(n);
    u64 d = m - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, m);
        if (x == 1 || x == m - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, m);
            if (x == m - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<std::int64_t> primes_up_to(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound < 2) return out;
    std::vector<bool> sieve(static_cast<std::size_t>(bound) + 1, true);
    for (std::int64_t i = 2; i <= bound; ++i) {
        if (!sieve[i]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j <= bound; j += i) sieve[j] = false;
    }
    return out;
}

std::vector<std::int64_t> prime_divisors(std::int64_t n) {
    require(n != 0, "prime_divisors: n must be nonzero");
    u64 m = static_cast<u64>(n < 0 ? -n : n);
    std::vector<std::int64_t> out;
    for (u64 d = 2; d * d <= m; ++d) {
        if (m % d != 0) continue;
        out.push_back(static_cast<std::int64_t>(d));
        while (m % d == 0) m /= d;
    }
    if (m > 1) out.push_back(static_cast<std::int64_t>(m));
    return out;
}

std::int64_t prime_power_base(std::int64_t q) {
    if (q < 2) return 0;
    auto ps = prime_divisors(q);
    return ps.size() == 1 ? ps.front() : 0;
}

int valuation(std::int64_t k, std::int64_t p) {
    require(k != 0, "valuation: k must be nonzero");
    require(p >= 2, "valuation: p must be at least 2");
    int v = 0;
    while (k % p == 0) {
        k /= p;
        ++v;
    }
    return v;
}

int valuation(const mpz_class& k, std::int64_t p) {
    require(k != 0, "valuation: k must be nonzero");
    require(p >= 2, "valuation: p must be at least 2");
    mpz_class rest;
    mpz_class base(static_cast<long>(p));
    return static_cast<int>(mpz_remove(rest.get_mpz_t(), k.get_mpz_t(), base.get_mpz_t()));
}

std::int64_t p_part(std::int64_t k, std::int64_t p) {
    std::int64_t out = 1;
    for (int v = valuation(k, p); v > 0; --v) out *= p;
    return out;
}

std::int64_t ord_mod(std::int64_t x, std::int64_t m) {
    require(m >= 2, "ord_mod: modulus must be at least 2");
    std::int64_t r = x % m;
    if (r < 0) r += m;
    u64 um = static_cast<u64>(m);
    require(gcd_u(static_cast<u64>(r), um) == 1, "ord_mod: x and m must be coprime");
    // The order divides phi(m).
    u64 phi = um;
    for (auto pd : prime_divisors(m)) phi = phi / static_cast<u64>(pd) * static_cast<u64>(pd - 1);
    u64 order = phi;
    for (auto l : prime_divisors(static_cast<std::int64_t>(phi))) {
        u64 ul = static_cast<u64>(l);
        while (order % ul == 0 && powmod(static_cast<u64>(r), order / ul, um) == 1) order /= ul;
    }
    return static_cast<std::int64_t>(order);
}

int mobius(std::int64_t n) {
    require(n >= 1, "mobius: n must be positive");
    int mu = 1;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d != 0) continue;
        n /= d;
        if (n % d == 0) return 0;
        mu = -mu;
    }
    if (n > 1) mu = -mu;
    return mu;
}

mpz_class psi(std::int64_t x, std::int64_t f, PsiSign sign) {
    require(f >= 0, "psi: f must be nonnegative");
    mpz_class v;
    mpz_class base(static_cast<long>(x));
    mpz_pow_ui(v.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(f));
    return sign == PsiSign::Minus ? mpz_class(v - 1) : mpz_class(v + 1);
}

mpz_class cyclotomic_value(std::int64_t d, std::int64_t x) {
    require(d >= 1, "cyclotomic_value: d must be positive");
    require(std::llabs(x) >= 2, "cyclotomic_value: |x| must be at least 2");
    mpz_class num = 1, den = 1;
    for (std::int64_t e = 1; e <= d; ++e) {
        if (d % e != 0) continue;
        int mu = mobius(d / e);
        if (mu == 1) num *= psi(x, e, PsiSign::Minus);
        if (mu == -1) den *= psi(x, e, PsiSign::Minus);
    }
    return num / den;
}

PrimeKind classify_linear_unitary(std::int64_t x, std::int64_t p) {
    require(is_prime(p), "classify_linear_unitary: p must be prime");
    require(x % p != 0, "classify_linear_unitary: p divides x");
    require(p != 2, "classify_linear_unitary: p must be odd");
    return ord_mod(x, p) % 2 == 1 ? PrimeKind::Linear : PrimeKind::Unitary;
}

bool is_fermat_prime(std::int64_t p) { return p > 2 && is_prime(p) && is_power_of_two(p - 1); }

bool is_mersenne_prime(std::int64_t p) { return p > 2 && is_prime(p) && is_power_of_two(p + 1); }

ValuationContext ValuationContext::make(std::int64_t x, std::int64_t p) {
    require(std::llabs(x) >= 2, "ValuationContext: |x| must be at least 2");
    require(is_prime(p), "ValuationContext: p must be prime");
    require(x % p != 0, "ValuationContext: p divides x");
    ValuationContext ctx;
    ctx.x = x;
    ctx.p = p;
    ctx.e_p = ord_mod(x, p);
    ctx.kind = p == 2 ? PrimeKind::Even : classify_linear_unitary(x, p);
    if (p == 2) {
        ctx.base = valuation(x - 1, 2);
        ctx.base_plus = valuation(x + 1, 2);
        return ctx;
    }
    // v_p(x^e - 1), probing residues modulo growing powers of p.
    mpz_class base(static_cast<long>(x)), mod(static_cast<long>(p)), res;
    int v = 0;
    for (;;) {
        mpz_powm_ui(res.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(ctx.e_p), mod.get_mpz_t());
        if (res != 1) break;
        ++v;
        mod *= p;
    }
    ctx.base = v;
    return ctx;
}

int psi_valuation(const ValuationContext& ctx, std::int64_t f, PsiSign sign) {
    require(f >= 1, "psi_valuation: f must be positive");
    if (ctx.p == 2) {
        bool odd = f % 2 == 1;
        if (sign == PsiSign::Minus) return odd ? ctx.base : ctx.base + ctx.base_plus + valuation(f, 2) - 1;
        return odd ? ctx.base_plus : 1;
    }
    bool divides = f % ctx.e_p == 0;
    if (sign == PsiSign::Minus) return divides ? ctx.base + valuation(f, ctx.p) : 0;
    bool divides_twice = (2 * f) % ctx.e_p == 0;
    return (divides_twice && !divides) ? ctx.base + valuation(f, ctx.p) : 0;
}

}  // namespace pqblocks
