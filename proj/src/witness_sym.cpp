#include "pqblocks/witness_sym.hpp"

#include <vector>

#include "pqblocks/errors.hpp"
#include "pqblocks/expansion.hpp"
#include "pqblocks/numtheory.hpp"

namespace pqblocks {

namespace {

void check_primes(std::int64_t n, std::int64_t p, std::int64_t q) {
    require(is_prime(p) && is_prime(q), "p and q must be prime");
    require(p != q, "p and q must differ");
    require(p <= n && q <= n, "p and q must not exceed n");
}

// (1^ones, rest...) as a partition.
Partition hook_like(int ones, std::vector<int> rest) {
    rest.insert(rest.end(), ones, 1);
    return Partition(rest);
}

Partition almost_hook(std::int64_t n, std::int64_t k, std::int64_t l) {
    return AlmostHookSpec{static_cast<int>(n), static_cast<int>(k), static_cast<int>(l)}.expand();
}

bool coprime_to(const mpz_class& d, std::int64_t p) { return valuation(d, p) == 0; }

}  // namespace

const char* to_string(SymCase c) {
    switch (c) {
        case SymCase::Sign: return "Sign";
        case SymCase::I: return "I";
        case SymCase::IIa: return "IIa";
        case SymCase::IIb: return "IIb";
        case SymCase::IIbb: return "IIbb";
        case SymCase::IIIa: return "IIIa";
        case SymCase::IIIb: return "IIIb";
    }
    return "?";
}

const char* to_string(AltCase c) {
    switch (c) {
        case AltCase::FromSym: return "FromSym";
        case AltCase::Case1: return "Case1";
        case AltCase::Case2_1: return "Case2_1";
        case AltCase::Case2_2: return "Case2_2";
        case AltCase::Case2_3: return "Case2_3";
        case AltCase::Case2_4: return "Case2_4";
        case AltCase::Case3_1: return "Case3_1";
        case AltCase::Case3_2: return "Case3_2";
        case AltCase::Case3_3a: return "Case3_3a";
        case AltCase::Case3_3b: return "Case3_3b";
        case AltCase::Case3_3c: return "Case3_3c";
    }
    return "?";
}

const char* to_string(Constituent c) {
    switch (c) {
        case Constituent::FullRestriction: return "full";
        case Constituent::SplitPlus: return "plus";
        case Constituent::SplitMinus: return "minus";
    }
    return "?";
}

SymWitness witness_symmetric(std::int64_t n, std::int64_t p, std::int64_t q) {
    require(n >= 3, "witness_symmetric: n must be at least 3");
    check_primes(n, p, q);
    SymWitness w;
    std::int64_t r = n % q, s = n % p;
    if (r < s) {
        std::swap(p, q);
        std::swap(r, s);
        w.primes_swapped = true;
    }
    if (r <= 1) {
        w.partition = Partition::column(static_cast<int>(n));
        w.case_tag = SymCase::Sign;
    } else {
        auto ch = chop(n, p, q);
        const std::int64_t b = ch.plain.b;
        std::int64_t k = 0, l = 0;
        if (r == b) {
            w.case_tag = SymCase::I;
            k = 0, l = r;
        } else if (r > b) {
            w.case_tag = SymCase::IIa;
            k = b, l = r;
        } else if (b < q || (ch.m - 1) % q != 0) {
            w.case_tag = b < q ? SymCase::IIb : SymCase::IIbb;
            k = r, l = b;
        } else {
            if (!ch.primed) throw VerificationFailure("witness_symmetric: primed chop unavailable");
            const std::int64_t rp = ch.primed->r, bp = ch.primed->b;
            if (rp == bp) throw VerificationFailure("witness_symmetric: r' = b' in Case III");
            w.case_tag = rp > bp ? SymCase::IIIa : SymCase::IIIb;
            k = std::min(rp, bp), l = std::max(rp, bp);
        }
        w.partition = almost_hook(n, k, l);
    }
    if (!verify_symmetric(w, p, q)) {
        throw VerificationFailure("witness_symmetric: check failed for n=" + std::to_string(n) + " p=" +
                                  std::to_string(p) + " q=" + std::to_string(q));
    }
    return w;
}

bool verify_symmetric(const SymWitness& w, std::int64_t p, std::int64_t q) {
    const int n = w.partition.size();
    if (w.partition == Partition::row(n)) return false;
    if (!is_p_principal_sym(w.partition, p) || !is_p_principal_sym(w.partition, q)) return false;
    auto d = degree(w.partition);
    return coprime_to(d, p) && coprime_to(d, q);
}

AltWitness witness_alternating(std::int64_t n, std::int64_t p, std::int64_t q) {
    require(n >= 4, "witness_alternating: n must be at least 4");
    check_primes(n, p, q);
    auto sym = witness_symmetric(n, p, q);
    AltWitness w;
    w.primes_swapped = sym.primes_swapped;
    const int N = static_cast<int>(n);
    if (sym.case_tag != SymCase::Sign) {
        if (sym.partition.is_self_conjugate()) throw VerificationFailure("witness_alternating: self-conjugate lift");
        w.partition = sym.partition;
        w.case_tag = AltCase::FromSym;
    } else {
        std::int64_t r = n % q, s = n % p;
        if (r < s) {
            std::swap(p, q);
            std::swap(r, s);
        }
        if (r == 0) {
            w.case_tag = AltCase::Case1;
            w.partition = hook_like(1, {N - 1});
        } else if (s == 0) {
            const int k = valuation(n - 1, q);
            std::int64_t qk = 1;
            for (int i = 0; i < k; ++i) qk *= q;
            const std::int64_t mt = (n - 1) / qk;
            const std::int64_t c = term_values(padic(n, p)).front();
            if (qk < c && mt != 1) {
                w.case_tag = AltCase::Case2_1;
                if (mt == 2 && (p == 2 || q == 2)) throw VerificationFailure("witness_alternating: Case 2.1 with even prime");
                w.partition = hook_like(static_cast<int>(n - qk - 1), {static_cast<int>(qk + 1)});
            } else if (qk > c) {
                w.case_tag = AltCase::Case2_2;
                w.partition = hook_like(static_cast<int>(n - c - 2), {2, static_cast<int>(c)});
            } else if (q != 2) {
                w.case_tag = AltCase::Case2_3;
                w.partition = hook_like(N / 2 - 2, {2, N / 2});
            } else {
                w.case_tag = AltCase::Case2_4;
                w.partition = hook_like(static_cast<int>(qk / 2), {static_cast<int>(qk / 2 + 1)});
            }
        } else if ((p != 2 && q != 2) || n % 4 != 3) {
            w.case_tag = AltCase::Case3_1;
            w.partition = Partition({N - 2, 2});
        } else {
            const std::int64_t odd = p == 2 ? q : p;
            const int k = valuation(n - 1, 3);
            std::int64_t mt = n - 1;
            for (int i = 0; i < k; ++i) mt /= 3;
            if (odd >= 5) {
                w.case_tag = AltCase::Case3_2;
                w.partition = Partition({N - 3, 2, 1});
            } else if (k != 1 || (mt - 1) % 3 != 0) {
                w.case_tag = AltCase::Case3_3a;
                w.partition = Partition({N - 3, 2, 1});
            } else if (valuation(n - 3, 2) == 2) {
                w.case_tag = AltCase::Case3_3b;
                w.partition = hook_like(N - 12, {5, 7});
            } else {
                w.case_tag = AltCase::Case3_3c;
                w.partition = hook_like(N - 8, {4, 4});
            }
        }
    }
    w.degree = degree(w.partition);
    if (w.partition.is_self_conjugate()) {
        w.constituent = Constituent::SplitPlus;
        w.degree /= 2;
    }
    if (!verify_alternating(w, p, q)) {
        throw VerificationFailure("witness_alternating: check failed for n=" + std::to_string(n) + " p=" +
                                  std::to_string(p) + " q=" + std::to_string(q));
    }
    return w;
}

bool verify_alternating(const AltWitness& w, std::int64_t p, std::int64_t q) {
    const int n = w.partition.size();
    if (w.partition == Partition::row(n) || w.partition == Partition::column(n)) return false;
    bool split = w.constituent != Constituent::FullRestriction;
    if (split != w.partition.is_self_conjugate()) return false;
    if (!is_p_principal_alt(w.partition, p) || !is_p_principal_alt(w.partition, q)) return false;
    mpz_class d = degree(w.partition);
    if (split) d /= 2;
    return d == w.degree && coprime_to(d, p) && coprime_to(d, q);
}

SmallIntersection classify_small_intersection(std::int64_t n, std::int64_t p, std::int64_t q) {
    require(n >= 4, "classify_small_intersection: n must be at least 4");
    require(is_prime(p) && is_prime(q), "classify_small_intersection: p and q must be prime");
    require(q < p && p <= n, "classify_small_intersection: need q < p <= n");
    if (q != 2) return SmallIntersection::Larger;
    bool linear_only = (n == 9 && p == 3) || (n == p && is_fermat_prime(p)) || (n - 1 == p && is_mersenne_prime(p));
    return linear_only ? SmallIntersection::LinearOnly : SmallIntersection::Larger;
}

std::set<std::pair<std::int64_t, std::int64_t>> classify_triples(std::int64_t max_n) {
    require(max_n >= 4, "classify_triples: max_n must be at least 4");
    std::set<std::pair<std::int64_t, std::int64_t>> out;
    for (std::int64_t n = 4; n <= max_n; ++n) {
        for (auto p : primes_up_to(n)) {
            if (p > 2 && classify_small_intersection(n, p, 2) == SmallIntersection::LinearOnly) out.emplace(n, p);
        }
    }
    return out;
}

}  // namespace pqblocks
