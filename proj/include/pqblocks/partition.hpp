#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace pqblocks {

/// Weakly decreasing positive parts.
class Partition {
public:
    Partition() = default;
    /// Parts in any order; zero parts are dropped.
    explicit Partition(std::vector<int> parts);

    /// Parses "1^5,2,3"; repeated parts merge. The empty string is the empty partition.
    static Partition parse(const std::string& text);
    static Partition column(int n);  ///< (1^n)
    static Partition row(int n);     ///< (n)

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Exponential notation, parts increasing: (3,2,1,1) -> "1^2,2,3".
    std::string to_string() const;

    Partition conjugate() const;
    bool is_self_conjugate() const { return *this == conjugate(); }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// (1^{n-k-l-1}, k+1, l) with 0 <= k < l < n - k.
struct AlmostHookSpec {
    int n = 0;
    int k = 0;
    int l = 0;

    void validate() const;
    Partition expand() const;
};

std::vector<Partition> enumerate_partitions(int n);
/// Streams the partitions of n in the same order as enumerate_partitions.
void for_each_partition(int n, const std::function<void(const Partition&)>& visit);

/// All hook lengths, ascending.
std::vector<int> hook_lengths(const Partition& lambda);
/// n! / prod(hooks).
mpz_class degree(const Partition& lambda);
/// v_p(n!) - sum v_p(h), no big integers involved.
int degree_valuation(const Partition& lambda, std::int64_t p);
/// Both product formulas for almost hooks; they must agree.
mpz_class almost_hook_degree(const AlmostHookSpec& spec);

/// e-core by sliding beads on an e-runner abacus. e >= 1.
Partition e_core(const Partition& lambda, int e);

/// e-core equals (n mod p).
bool is_p_principal_sym(const Partition& lambda, std::int64_t p);
/// e-core is (s) or (1^s), excluding self-conjugate p-cores other than (n), (1^n).
bool is_p_principal_alt(const Partition& lambda, std::int64_t p);

/// v_p of prod_{k<=n} (x^k - 1) / prod_h (x^h - 1), the x'-part of the unipotent degree.
int typeA_degree_valuation(const Partition& lambda, std::int64_t x, std::int64_t p);

}  // namespace pqblocks
