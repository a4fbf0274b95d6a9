#include "pqblocks/witness_lie.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "pqblocks/errors.hpp"
#include "pqblocks/expansion.hpp"

namespace pqblocks {

namespace {

void check_field(std::int64_t Q, std::int64_t p, std::int64_t q) {
    require(prime_power_base(Q) != 0, "Q must be a prime power");
    require(is_prime(p) && is_prime(q), "p and q must be prime");
    require(p != q, "p and q must differ");
    require(Q % p != 0 && Q % q != 0, "p and q must not divide Q");
}

std::vector<int> range(std::int64_t from, std::int64_t to) {
    std::vector<int> out;
    for (std::int64_t i = from; i <= to; ++i) out.push_back(static_cast<int>(i));
    return out;
}

std::vector<int> plus(std::vector<int> v, std::initializer_list<std::int64_t> extra) {
    for (auto x : extra) v.push_back(static_cast<int>(x));
    std::sort(v.begin(), v.end());
    return v;
}

// Shared case table over an already chopped n; thresholds use e_q, the III test uses q itself.
struct Dispatch {
    LieCase tag = LieCase::I;
    std::int64_t k = 0, l = 0;  // almost hook parameters
    std::int64_t R = 0, T = 0, b = 0;
    bool primed = false;
};

Dispatch dispatch(const EpChopResult& ch, std::int64_t q) {
    Dispatch d;
    const std::int64_t r = ch.plain.r, b = ch.plain.b;
    d.R = ch.n - r;
    d.T = ch.plain.T;
    d.b = b;
    if (r == b) {
        d.tag = LieCase::I;
        d.k = 0, d.l = r;
    } else if (r > b) {
        d.tag = LieCase::IIa;
        d.k = b, d.l = r;
    } else if (b < ch.e_q || (ch.m - 1) % q != 0) {
        d.tag = b < ch.e_q ? LieCase::IIb : LieCase::IIbb;
        d.k = r, d.l = b;
    } else {
        if (!ch.primed) throw VerificationFailure("Lie witness: primed chop unavailable");
        const std::int64_t rp = ch.primed->r, bp = ch.primed->b;
        if (rp == bp) throw VerificationFailure("Lie witness: r' = b' in Case III");
        d.tag = rp > bp ? LieCase::IIIa : LieCase::IIIb;
        d.k = std::min(rp, bp), d.l = std::max(rp, bp);
        d.R = ch.n - rp;
        d.T = ch.primed->T;
        d.b = bp;
        d.primed = true;
    }
    return d;
}

}  // namespace

const char* to_string(LieCase c) {
    switch (c) {
        case LieCase::Steinberg: return "Steinberg";
        case LieCase::I: return "I";
        case LieCase::IIa: return "IIa";
        case LieCase::IIb: return "IIb";
        case LieCase::IIbb: return "IIbb";
        case LieCase::IIIa: return "IIIa";
        case LieCase::IIIb: return "IIIb";
    }
    return "?";
}

const char* to_string(BCSubcase c) {
    switch (c) {
        case BCSubcase::None: return "";
        case BCSubcase::Alpha: return "alpha";
        case BCSubcase::Beta: return "beta";
        case BCSubcase::Gamma: return "gamma";
        case BCSubcase::Delta: return "delta";
        case BCSubcase::AlphaPrime: return "alpha'";
        case BCSubcase::BetaPrime: return "beta'";
        case BCSubcase::GammaPrime: return "gamma'";
        case BCSubcase::DeltaPrime: return "delta'";
    }
    return "?";
}

TypeAContext TypeAContext::make(int n, std::int64_t Q, int epsilon, std::int64_t p, std::int64_t q) {
    require(n >= 2, "type A: n must be at least 2");
    require(epsilon == 1 || epsilon == -1, "type A: epsilon must be +1 or -1");
    check_field(Q, p, q);
    TypeAContext ctx{n, Q, epsilon, p, q, ord_mod(epsilon * Q, p), ord_mod(epsilon * Q, q)};
    require(ctx.e_p <= n && ctx.e_q <= n, "type A: pq must divide the group order (e_p, e_q <= n)");
    return ctx;
}

TypeBCContext TypeBCContext::make(int n, std::int64_t Q, std::int64_t p, std::int64_t q) {
    require(n >= 2, "type BC: n must be at least 2");
    check_field(Q, p, q);
    TypeBCContext ctx;
    ctx.n = n;
    ctx.Q = Q;
    ctx.p = p;
    ctx.q = q;
    ctx.e_p = ord_mod(Q * Q, p);
    ctx.e_q = ord_mod(Q * Q, q);
    ctx.p_kind = p == 2 ? PrimeKind::Even : classify_linear_unitary(Q, p);
    ctx.q_kind = q == 2 ? PrimeKind::Even : classify_linear_unitary(Q, q);
    require(ctx.e_p <= n && ctx.e_q <= n, "type BC: pq must divide the group order (e_p, e_q <= n)");
    return ctx;
}

TypeAWitness witness_typeA(const TypeAContext& in) {
    TypeAContext ctx = in;
    TypeAWitness w;
    std::int64_t r = ctx.n % ctx.e_q, s = ctx.n % ctx.e_p;
    if (r < s) {
        std::swap(ctx.p, ctx.q);
        std::swap(ctx.e_p, ctx.e_q);
        w.primes_swapped = true;
        r = ctx.n % ctx.e_q;
    }
    if (r <= 1) {
        w.case_tag = LieCase::Steinberg;
        w.partition = Partition::column(ctx.n);
    } else {
        auto d = dispatch(chop_ep(ctx.n, ctx.p, ctx.e_p, ctx.e_q), ctx.q);
        w.case_tag = d.tag;
        w.partition = AlmostHookSpec{ctx.n, static_cast<int>(d.k), static_cast<int>(d.l)}.expand();
    }
    if (!verify_typeA(in, w.partition)) {
        throw VerificationFailure("witness_typeA: check failed for n=" + std::to_string(in.n) +
                                  " Q=" + std::to_string(in.Q) + " eps=" + std::to_string(in.epsilon) +
                                  " p=" + std::to_string(in.p) + " q=" + std::to_string(in.q));
    }
    return w;
}

bool verify_typeA(const TypeAContext& ctx, const Partition& lambda) {
    if (lambda.size() != ctx.n || lambda == Partition::row(ctx.n)) return false;
    for (auto [prime, e] : {std::pair{ctx.p, ctx.e_p}, std::pair{ctx.q, ctx.e_q}}) {
        if (e_core(lambda, static_cast<int>(e)) != Partition::row(ctx.n % static_cast<int>(e))) return false;
        if (typeA_degree_valuation(lambda, ctx.x(), prime) != 0) return false;
    }
    return true;
}

TypeBCWitness witness_typeBC(const TypeBCContext& in) {
    TypeBCContext ctx = in;
    TypeBCWitness w;
    std::int64_t r = ctx.n % ctx.e_q, s = ctx.n % ctx.e_p;
    if (r < s) {
        std::swap(ctx.p, ctx.q);
        std::swap(ctx.e_p, ctx.e_q);
        std::swap(ctx.p_kind, ctx.q_kind);
        w.primes_swapped = true;
        r = ctx.n % ctx.e_q;
    }
    if (r == 0) {
        w.case_tag = LieCase::Steinberg;
        w.symbol = steinberg_symbol(ctx.n);
    } else {
        auto ch = chop_ep(ctx.n, ctx.p, ctx.e_p, ctx.e_q);
        auto d = dispatch(ch, ctx.q);
        w.case_tag = d.tag;
        const bool p_first = ctx.p_kind != PrimeKind::Unitary || (d.T / ctx.e_p) % 2 == 0;
        const bool m_even = ch.m % 2 == 0;
        const bool q_first = ctx.q_kind == PrimeKind::Linear || (d.primed ? !m_even : m_even);
        static constexpr BCSubcase plain[2][2] = {{BCSubcase::Delta, BCSubcase::Gamma},
                                                  {BCSubcase::Beta, BCSubcase::Alpha}};
        static constexpr BCSubcase primed[2][2] = {{BCSubcase::DeltaPrime, BCSubcase::GammaPrime},
                                                   {BCSubcase::BetaPrime, BCSubcase::AlphaPrime}};
        w.subcase = (d.primed ? primed : plain)[p_first][q_first];
        const std::int64_t M = d.R - d.b - 1, R = d.R, T = d.T;
        if (d.tag == LieCase::I) {
            w.symbol = Symbol(plus(range(0, M), {R}), plus(range(1, M), {R}));
        } else if (p_first && q_first) {
            w.symbol = Symbol(plus(range(1, M), {R, T}), range(0, M));
        } else if (p_first) {
            w.symbol = Symbol(plus(range(0, M), {R}), plus(range(1, M), {T}));
        } else if (q_first) {
            w.symbol = Symbol(plus(range(0, M), {T}), plus(range(1, M), {R}));
        } else {
            w.symbol = Symbol(plus(range(0, M), {R, T}), range(1, M));
        }
    }
    if (!verify_typeBC(in, w.symbol)) {
        throw VerificationFailure("witness_typeBC: check failed for n=" + std::to_string(in.n) +
                                  " Q=" + std::to_string(in.Q) + " p=" + std::to_string(in.p) +
                                  " q=" + std::to_string(in.q));
    }
    return w;
}

bool verify_typeBC(const TypeBCContext& ctx, const Symbol& s) {
    if (s.rank() != ctx.n || s.defect() % 2 == 0 || s == trivial_symbol(ctx.n)) return false;
    if (!is_principal_bc(s, static_cast<int>(ctx.e_p), ctx.p_kind)) return false;
    if (!is_principal_bc(s, static_cast<int>(ctx.e_q), ctx.q_kind)) return false;
    return symbol_degree_valuation(s, ctx.Q, ctx.p) == 0 && symbol_degree_valuation(s, ctx.Q, ctx.q) == 0;
}

}  // namespace pqblocks
