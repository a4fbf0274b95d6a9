#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace pqblocks {

/// n = s + sum c_i p^{a_i}, 1 <= a_1 < ... , 1 <= c_i < p.
struct PAdicExpansion {
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::int64_t s = 0;
    std::vector<std::pair<std::int64_t, int>> terms;  ///< (c_i, a_i), increasing a_i
};

PAdicExpansion padic(std::int64_t n, std::int64_t p);

/// Term values c_i p^{a_i} in order.
std::vector<std::int64_t> term_values(const PAdicExpansion& x);

struct ChopValues {
    std::int64_t r = 0;
    int t0 = 0;  ///< index into the expansion terms, numbered as in the expansion
    std::int64_t b = 0;
    std::int64_t T = 0;
};

struct ChopResult {
    std::int64_t n = 0, p = 0, q = 0;
    std::int64_t m = 0;  ///< (n - r) / q
    ChopValues plain;
    /// Present when n >= 2 (q + r).
    std::optional<ChopValues> primed;
};

/// p, q distinct primes <= n.
ChopResult chop(std::int64_t n, std::int64_t p, std::int64_t q);

/// n = s + w e_p, w written p-adically with a_0 = 0 and c_0 possibly zero.
struct EpPAdicExpansion {
    std::int64_t n = 0;
    std::int64_t p = 0;
    std::int64_t e_p = 0;
    std::int64_t s = 0;
    std::vector<std::pair<std::int64_t, int>> terms;  ///< terms[0] = (c_0, 0)
};

EpPAdicExpansion ep_padic(std::int64_t n, std::int64_t p, std::int64_t e_p);
/// Term values c_i e_p p^{a_i}.
std::vector<std::int64_t> term_values(const EpPAdicExpansion& x);

struct EpChopResult {
    std::int64_t n = 0, p = 0, e_p = 0, e_q = 0;
    std::int64_t m = 0;  ///< (n - r) / e_q
    ChopValues plain;
    /// Present when n >= 2 (e_q + r).
    std::optional<ChopValues> primed;
};

/// p prime, 1 <= e_p < p, 1 <= e_q, e_p <= n.
EpChopResult chop_ep(std::int64_t n, std::int64_t p, std::int64_t e_p, std::int64_t e_q);

}  // namespace pqblocks
