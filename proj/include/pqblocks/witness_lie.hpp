#pragma once

#include <cstdint>
#include <string>

#include "pqblocks/numtheory.hpp"
#include "pqblocks/partition.hpp"
#include "pqblocks/symbol.hpp"

namespace pqblocks {

/// SL_n(eps Q) data. e_p = ord_p(eps Q); both orders must be <= n.
struct TypeAContext {
    int n = 0;
    std::int64_t Q = 0;
    int epsilon = 1;
    std::int64_t p = 0, q = 0;
    std::int64_t e_p = 0, e_q = 0;

    std::int64_t x() const { return epsilon * Q; }
    static TypeAContext make(int n, std::int64_t Q, int epsilon, std::int64_t p, std::int64_t q);
};

/// B_n / C_n data. e_p = ord_p(Q^2); kinds come from ord_p(Q).
struct TypeBCContext {
    int n = 0;
    std::int64_t Q = 0;
    std::int64_t p = 0, q = 0;
    std::int64_t e_p = 0, e_q = 0;
    PrimeKind p_kind = PrimeKind::Even, q_kind = PrimeKind::Even;

    static TypeBCContext make(int n, std::int64_t Q, std::int64_t p, std::int64_t q);
};

enum class LieCase { Steinberg, I, IIa, IIb, IIbb, IIIa, IIIb };
enum class BCSubcase { None, Alpha, Beta, Gamma, Delta, AlphaPrime, BetaPrime, GammaPrime, DeltaPrime };

const char* to_string(LieCase c);
const char* to_string(BCSubcase c);

struct TypeAWitness {
    Partition partition;
    LieCase case_tag = LieCase::Steinberg;
    bool primes_swapped = false;
};

struct TypeBCWitness {
    Symbol symbol;
    LieCase case_tag = LieCase::Steinberg;
    BCSubcase subcase = BCSubcase::None;
    bool primes_swapped = false;
};

TypeAWitness witness_typeA(const TypeAContext& ctx);
TypeBCWitness witness_typeBC(const TypeBCContext& ctx);

/// Block and degree post-checks with the closed-form valuations.
bool verify_typeA(const TypeAContext& ctx, const Partition& lambda);
bool verify_typeBC(const TypeBCContext& ctx, const Symbol& s);

}  // namespace pqblocks
