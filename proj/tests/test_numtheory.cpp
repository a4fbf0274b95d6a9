#include <doctest.h>

#include <cstdlib>
#include <random>

#include "pqblocks/errors.hpp"
#include "pqblocks/numtheory.hpp"

using namespace pqblocks;

namespace {

// Smallest k with x^k = 1 mod m, by walking the powers.
std::int64_t naive_order(std::int64_t x, std::int64_t m) {
    std::int64_t r = ((x % m) + m) % m, acc = r;
    for (std::int64_t k = 1;; ++k) {
        if (acc == 1 % m) return k;
        acc = acc * r % m;
    }
}

int direct(std::int64_t x, std::int64_t f, PsiSign s, std::int64_t p) {
    mpz_class v = psi(x, f, s);
    if (v == 0) return 1 << 20;
    return valuation(v, p);
}

}  // namespace

TEST_CASE("p_part") {
    CHECK(p_part(12, 2) == 4);
    CHECK(p_part(7, 3) == 1);
    std::int64_t k = (1 << 10) * 5, pk = 1;
    while (k % 2 == 0) {
        k /= 2;
        pk *= 2;
    }
    CHECK(p_part((1 << 10) * 5, 2) == pk);
    CHECK(pk == 1024);
    CHECK_THROWS_AS(p_part(0, 2), InvalidArgument);
}

TEST_CASE("multiplicative order") {
    CHECK(ord_mod(1, 9) == 1);
    CHECK(ord_mod(2, 7) == 3);
    CHECK(ord_mod(2, 5) == 4);
    CHECK(ord_mod(-3, 7) == 3);
    CHECK_THROWS_AS(ord_mod(6, 9), InvalidArgument);
    for (std::int64_t m = 2; m <= 80; ++m)
        for (std::int64_t x = -30; x <= 30; ++x) {
            std::int64_t a = x, b = m;
            while (b) {
                a %= b;
                std::swap(a, b);
            }
            if (std::llabs(a) != 1) continue;
            CHECK(ord_mod(x, m) == naive_order(x, m));
        }
}

TEST_CASE("psi and cyclotomic values") {
    CHECK(psi(3, 2, PsiSign::Minus) == 8);
    CHECK(psi(2, 4, PsiSign::Minus) == 15);
    CHECK(psi(-3, 3, PsiSign::Minus) == -28);
    CHECK(psi(-2, 3, PsiSign::Plus) == -7);
    CHECK(cyclotomic_value(1, 3) == 2);
    CHECK(cyclotomic_value(2, 3) == 4);
    CHECK(cyclotomic_value(4, 3) == 10);
    CHECK(cyclotomic_value(6, 2) == 3);
    CHECK(cyclotomic_value(12, 2) == 13);
    CHECK_THROWS_AS(cyclotomic_value(3, 1), InvalidArgument);
    // x^d - 1 is the product of Phi_e(x) over e | d
    for (std::int64_t x : {-5, -2, 2, 3, 7})
        for (std::int64_t d = 1; d <= 30; ++d) {
            mpz_class prod = 1;
            for (std::int64_t e = 1; e <= d; ++e)
                if (d % e == 0) prod *= cyclotomic_value(e, x);
            CHECK(prod == psi(x, d, PsiSign::Minus));
        }
}

TEST_CASE("linear and unitary primes") {
    CHECK(classify_linear_unitary(2, 7) == PrimeKind::Linear);
    CHECK(classify_linear_unitary(2, 5) == PrimeKind::Unitary);
    CHECK(classify_linear_unitary(4, 3) == PrimeKind::Linear);
    CHECK_THROWS_AS(classify_linear_unitary(3, 2), InvalidArgument);
    CHECK_THROWS_AS(classify_linear_unitary(6, 3), InvalidArgument);
    CHECK(ValuationContext::make(3, 2).kind == PrimeKind::Even);
}

TEST_CASE("fermat and mersenne primes") {
    CHECK(is_fermat_prime(17));
    CHECK(is_fermat_prime(3));
    CHECK(is_mersenne_prime(7));
    CHECK(is_mersenne_prime(31));
    CHECK_FALSE(is_fermat_prime(9));
    CHECK_FALSE(is_mersenne_prime(9));
    CHECK_FALSE(is_fermat_prime(7));
    CHECK_FALSE(is_mersenne_prime(2));

    // a prime power 2^k +- 1 with exponent >= 2 only occurs as 9
    for (std::int64_t p = 2; p <= 50; ++p) {
        if (!is_prime(p)) continue;
        for (int a = 2; a <= 6; ++a) {
            mpz_class pa;
            mpz_ui_pow_ui(pa.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(a));
            for (int k = 1; k <= 12; ++k) {
                mpz_class two = mpz_class(1) << k;
                if (pa == two + 1) CHECK(pa == 9);
                if (k >= 2) CHECK(pa != two - 1);
            }
        }
    }
}

TEST_CASE("psi_valuation examples") {
    CHECK(psi_valuation(ValuationContext::make(3, 2), 2, PsiSign::Minus) == 3);
    CHECK(psi_valuation(ValuationContext::make(2, 5), 4, PsiSign::Minus) == 1);
    CHECK(psi_valuation(ValuationContext::make(2, 7), 5, PsiSign::Minus) == 0);
    CHECK(psi_valuation(ValuationContext::make(9, 2), 2, PsiSign::Minus) == 4);
    CHECK(psi_valuation(ValuationContext::make(7, 2), 1, PsiSign::Plus) == 3);
}

TEST_CASE("psi_valuation matches big integer valuation") {
    for (std::int64_t x = -20; x <= 20; ++x) {
        if (std::llabs(x) < 2) continue;
        for (std::int64_t p : primes_up_to(37)) {
            if (x % p == 0) continue;
            auto ctx = ValuationContext::make(x, p);
            for (std::int64_t f = 1; f <= 60; ++f)
                for (PsiSign s : {PsiSign::Minus, PsiSign::Plus}) {
                    if (psi(x, f, s) == 0) continue;
                    INFO("x=" << x << " p=" << p << " f=" << f);
                    CHECK(psi_valuation(ctx, f, s) == direct(x, f, s, p));
                }
        }
    }
}

TEST_CASE("p divides Phi_f(x) exactly at f = p^k ord_p(x)") {
    for (std::int64_t x : {-7, -3, -2, 2, 3, 4, 5, 10}) {
        for (std::int64_t p : primes_up_to(23)) {
            if (x % p == 0) continue;
            std::int64_t e = ord_mod(x, p);
            for (std::int64_t d = 1; d <= 60; ++d) {
                bool expected = false;
                for (std::int64_t pk = 1; pk * e <= d; pk *= p)
                    if (pk * e == d) expected = true;
                mpz_class phi = cyclotomic_value(d, x);
                INFO("x=" << x << " p=" << p << " d=" << d);
                CHECK((phi % p == 0) == expected);
            }
        }
    }
}

TEST_CASE("valuation depends only on the p-part of a multiple of the order") {
    for (std::int64_t x : {-5, -3, 2, 3, 7, 9}) {
        for (std::int64_t p : primes_up_to(13)) {
            if (x % p == 0) continue;
            std::int64_t e = ord_mod(x, p);
            for (std::int64_t n = e; n <= 60; n += e)
                for (std::int64_t m = e; m <= 60; m += e) {
                    bool same = direct(x, n, PsiSign::Minus, p) == direct(x, m, PsiSign::Minus, p);
                    CHECK(same == (p_part(n, p) == p_part(m, p)));
                }
        }
    }
}

TEST_CASE("p divides x^{2f} - 1 iff ord_p(x^2) divides f") {
    for (std::int64_t x : {-4, -3, 2, 3, 5, 6}) {
        for (std::int64_t p : primes_up_to(31)) {
            if (x % p == 0) continue;
            std::int64_t e2 = ord_mod(x * x, p);
            for (std::int64_t f = 1; f <= 40; ++f)
                CHECK((psi(x, 2 * f, PsiSign::Minus) % p == 0) == (f % e2 == 0));
        }
    }
}

TEST_CASE("unitary primes swap signs with the parity of n / ord_p(x^2)") {
    for (std::int64_t x : {2, 3, 4, 5, 7}) {
        for (std::int64_t p : primes_up_to(41)) {
            if (p == 2 || x % p == 0) continue;
            if (classify_linear_unitary(x, p) != PrimeKind::Unitary) continue;
            std::int64_t e = ord_mod(x * x, p);
            for (std::int64_t n = e; n <= 48; n += e)
                for (std::int64_t m = e; m <= 48; m += e) {
                    if (p_part(n, p) != p_part(m, p)) continue;
                    bool same_parity = (n / e) % 2 == (m / e) % 2;
                    PsiSign s1 = PsiSign::Minus, s2 = same_parity ? PsiSign::Minus : PsiSign::Plus;
                    CHECK(direct(x, n, s1, p) == direct(x, m, s2, p));
                    s1 = PsiSign::Plus;
                    s2 = same_parity ? PsiSign::Plus : PsiSign::Minus;
                    CHECK(direct(x, n, s1, p) == direct(x, m, s2, p));
                }
        }
    }
}

TEST_CASE("random valuations") {
    std::mt19937_64 rng(20261016);
    std::vector<std::int64_t> primes = primes_up_to(37);
    std::uniform_int_distribution<std::int64_t> xs(-20, 20), fs(1, 60);
    std::uniform_int_distribution<std::size_t> ps(0, primes.size() - 1);
    int done = 0;
    while (done < 2000) {
        std::int64_t x = xs(rng), f = fs(rng), p = primes[ps(rng)];
        if (std::llabs(x) < 2 || x % p == 0) continue;
        PsiSign s = rng() % 2 ? PsiSign::Plus : PsiSign::Minus;
        if (psi(x, f, s) == 0) continue;
        CHECK(psi_valuation(ValuationContext::make(x, p), f, s) == direct(x, f, s, p));
        ++done;
    }
}
