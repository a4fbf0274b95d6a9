#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "pqblocks/partition.hpp"

namespace pqblocks {

enum class SymCase { Sign, I, IIa, IIb, IIbb, IIIa, IIIb };
enum class AltCase { FromSym, Case1, Case2_1, Case2_2, Case2_3, Case2_4, Case3_1, Case3_2, Case3_3a, Case3_3b, Case3_3c };
enum class Constituent { FullRestriction, SplitPlus, SplitMinus };

const char* to_string(SymCase c);
const char* to_string(AltCase c);
const char* to_string(Constituent c);

struct SymWitness {
    Partition partition;
    SymCase case_tag = SymCase::Sign;
    bool primes_swapped = false;
};

struct AltWitness {
    Partition partition;
    Constituent constituent = Constituent::FullRestriction;
    mpz_class degree;
    AltCase case_tag = AltCase::FromSym;
    bool primes_swapped = false;
};

/// n >= 3, p != q primes <= n. Throws VerificationFailure if the result is not
/// {p,q}-principal of degree prime to pq.
SymWitness witness_symmetric(std::int64_t n, std::int64_t p, std::int64_t q);
/// n >= 4, p != q primes <= n.
AltWitness witness_alternating(std::int64_t n, std::int64_t p, std::int64_t q);

/// Post-checks, computed from cores and hook degrees only.
bool verify_symmetric(const SymWitness& w, std::int64_t p, std::int64_t q);
bool verify_alternating(const AltWitness& w, std::int64_t p, std::int64_t q);

enum class SmallIntersection { LinearOnly, Larger };

/// n >= 4, q < p <= n primes.
SmallIntersection classify_small_intersection(std::int64_t n, std::int64_t p, std::int64_t q);
/// All (n, p) with q = 2 and 4 <= n <= max_n whose A_n intersection is linear only.
std::set<std::pair<std::int64_t, std::int64_t>> classify_triples(std::int64_t max_n);

}  // namespace pqblocks
