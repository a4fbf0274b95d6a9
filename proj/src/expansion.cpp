#include "pqblocks/expansion.hpp"

#include "pqblocks/errors.hpp"
#include "pqblocks/numtheory.hpp"

namespace pqblocks {

namespace {

std::vector<std::pair<std::int64_t, int>> digits(std::int64_t w, std::int64_t p, int first_exponent,
                                                 bool keep_leading_zero) {
    std::vector<std::pair<std::int64_t, int>> out;
    int a = first_exponent;
    bool first = true;
    while (w > 0 || (first && keep_leading_zero)) {
        std::int64_t c = w % p;
        if (c != 0 || (first && keep_leading_zero)) out.emplace_back(c, a);
        w /= p;
        ++a;
        first = false;
    }
    return out;
}

// Scan for the first term exceeding r; terms are given by value.
ChopValues scan(std::int64_t n, std::int64_t s, std::int64_t r, const std::vector<std::int64_t>& values,
                int first_index) {
    ChopValues v;
    v.r = r;
    v.b = s;
    std::size_t i = 0;
    while (i < values.size() && r >= values[i]) v.b += values[i++];
    if (i == values.size()) throw VerificationFailure("chop: no expansion term exceeds r");
    v.t0 = static_cast<int>(i) + first_index;
    v.T = n - v.b;
    return v;
}

}  // namespace

PAdicExpansion padic(std::int64_t n, std::int64_t p) {
    require(n >= 0, "padic: n must be nonnegative");
    require(is_prime(p), "padic: p must be prime");
    PAdicExpansion x{n, p, n % p, digits(n / p, p, 1, false)};
    return x;
}

std::vector<std::int64_t> term_values(const PAdicExpansion& x) {
    std::vector<std::int64_t> out;
    for (auto [c, a] : x.terms) {
        std::int64_t v = c;
        for (int i = 0; i < a; ++i) v *= x.p;
        out.push_back(v);
    }
    return out;
}

ChopResult chop(std::int64_t n, std::int64_t p, std::int64_t q) {
    require(is_prime(p) && is_prime(q), "chop: p and q must be prime");
    require(p != q, "chop: p and q must differ");
    require(p <= n && q <= n, "chop: p and q must not exceed n");
    auto x = padic(n, p);
    auto values = term_values(x);
    ChopResult res;
    res.n = n;
    res.p = p;
    res.q = q;
    std::int64_t r = n % q;
    res.m = (n - r) / q;
    res.plain = scan(n, x.s, r, values, 1);
    std::int64_t rp = q + r;
    if (n >= 2 * rp) res.primed = scan(n, x.s, rp, values, 1);
    return res;
}

EpPAdicExpansion ep_padic(std::int64_t n, std::int64_t p, std::int64_t e_p) {
    require(is_prime(p), "ep_padic: p must be prime");
    require(e_p >= 1 && e_p < p, "ep_padic: need 1 <= e_p < p");
    require(e_p <= n, "ep_padic: e_p must not exceed n");
    EpPAdicExpansion x{n, p, e_p, n % e_p, digits(n / e_p, p, 0, true)};
    return x;
}

std::vector<std::int64_t> term_values(const EpPAdicExpansion& x) {
    std::vector<std::int64_t> out;
    for (auto [c, a] : x.terms) {
        std::int64_t v = c * x.e_p;
        for (int i = 0; i < a; ++i) v *= x.p;
        out.push_back(v);
    }
    return out;
}

EpChopResult chop_ep(std::int64_t n, std::int64_t p, std::int64_t e_p, std::int64_t e_q) {
    require(e_q >= 1, "chop_ep: e_q must be positive");
    auto x = ep_padic(n, p, e_p);
    auto values = term_values(x);
    EpChopResult res;
    res.n = n;
    res.p = p;
    res.e_p = e_p;
    res.e_q = e_q;
    std::int64_t r = n % e_q;
    res.m = (n - r) / e_q;
    res.plain = scan(n, x.s, r, values, 0);
    std::int64_t rp = e_q + r;
    if (n >= 2 * rp) res.primed = scan(n, x.s, rp, values, 0);
    return res;
}

}  // namespace pqblocks
