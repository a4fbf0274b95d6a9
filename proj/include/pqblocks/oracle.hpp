#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pqblocks/partition.hpp"
#include "pqblocks/symbol.hpp"
#include "pqblocks/witness_sym.hpp"

namespace pqblocks {

/// Brute-force intersections Irr_p'(B_p) n Irr_q'(B_q), recomputed from first principles.
struct IntersectionReport {
    std::string group;  ///< "sym", "alt", "typea", "typebc"
    int n = 0;
    std::int64_t p = 0, q = 0;
    std::int64_t Q = 0;  ///< 0 for sym/alt
    int epsilon = 0;     ///< type A only
    std::vector<std::string> labels;  ///< sorted

    bool contains(const std::string& label) const;
    std::size_t size() const { return labels.size(); }
};

namespace oracle {

constexpr int kMaxEnumerate = 60;
constexpr int kMaxIntersection = 30;
constexpr int kMaxSymbolRank = 12;
constexpr int kMaxTypeA = 10;
constexpr int kMaxTypeBC = 8;
constexpr std::int64_t kMaxField = 9;

/// Label of an A_n constituent: the larger of {lambda, lambda^t}, with "+"/"-" for split ones.
std::string alt_label(const Partition& lambda, Constituent c);

std::vector<Partition> partitions(int n);  ///< n <= 60
Partition core_by_rim_hooks(const Partition& lambda, int e);
/// n! prod_{i<j} (b_i - b_j) / prod b_i!
mpz_class degree_by_beta(const Partition& lambda);
/// Odd-defect rank-n symbols by exhaustive search over row subsets. n <= 12.
std::vector<Symbol> symbols(int n);
Symbol core_by_removal(const Symbol& s, int e);
Symbol cocore_by_removal(const Symbol& s, int e);
/// x'-part of the unipotent degree of SL_n(x) from the beta-set product.
mpq_class typeA_qprime(const Partition& lambda, std::int64_t x);
/// Q'-part of the unipotent degree from the pairwise row products.
mpq_class typeBC_qprime(const Symbol& s, std::int64_t Q);

/// Per-n cache of partitions and degrees for repeated S_n / A_n queries.
class SymmetricTable {
public:
    explicit SymmetricTable(int n);  ///< 2 <= n <= 30
    int n() const { return n_; }
    IntersectionReport sym(std::int64_t p, std::int64_t q) const;
    IntersectionReport alt(std::int64_t p, std::int64_t q) const;

private:
    const std::vector<bool>& principal(std::int64_t p) const;
    int n_;
    std::map<std::int64_t, std::vector<bool>> principal_;  ///< per prime <= n
    std::vector<Partition> parts_;
    std::vector<Partition> conj_;
    std::vector<mpz_class> degrees_;
};

IntersectionReport intersection_sym(int n, std::int64_t p, std::int64_t q);
IntersectionReport intersection_alt(int n, std::int64_t p, std::int64_t q);
IntersectionReport intersection_typeA(int n, std::int64_t Q, int epsilon, std::int64_t p, std::int64_t q);
IntersectionReport intersection_typeBC(int n, std::int64_t Q, std::int64_t p, std::int64_t q);

}  // namespace oracle
}  // namespace pqblocks
