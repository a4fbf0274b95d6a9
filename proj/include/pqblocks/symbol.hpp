#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pqblocks/numtheory.hpp"

namespace pqblocks {

/// Two strictly increasing rows of nonnegative integers, modulo
/// swapping the rows and the shift (X, Y) ~ ({0} u X+1, {0} u Y+1).
class Symbol {
public:
    Symbol() = default;
    /// Stores the normal form of the given rows; see normalize().
    Symbol(std::vector<int> top, std::vector<int> bottom);

    const std::vector<int>& top() const { return top_; }
    const std::vector<int>& bottom() const { return bottom_; }

    int rank() const;
    int defect() const;
    /// "[0,2|1]"
    std::string to_string() const;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol& a, const Symbol& b) {
        if (auto c = a.top_ <=> b.top_; c != 0) return c;
        return a.bottom_ <=> b.bottom_;
    }

private:
    std::vector<int> top_;
    std::vector<int> bottom_;
};

/// Strip shared leading zeros, then put the longer row on top (ties: lexicographically larger on top).
/// Rows must be strictly increasing and nonnegative.
Symbol normalize(std::vector<int> top, std::vector<int> bottom);

/// ({n}, {}) for the trivial character.
Symbol trivial_symbol(int n);
/// ({0,1,...,n}, {1,...,n}).
Symbol steinberg_symbol(int n);

/// Hook lengths within rows, as a multiset (sorted).
std::vector<int> symbol_hooks(const Symbol& s);
/// Cohook lengths across rows, as a multiset (sorted).
std::vector<int> symbol_cohooks(const Symbol& s);
/// floor((#X + #Y - 1) / 2) - #(X n Y).
int symbol_b_prime(const Symbol& s);

Symbol e_core_symbol(const Symbol& s, int e);
Symbol e_cocore_symbol(const Symbol& s, int e);

/// v_p of the Q'-part of the unipotent degree. p does not divide Q.
int symbol_degree_valuation(const Symbol& s, std::int64_t Q, std::int64_t p);
/// Q'-part of the degree as an exact rational.
mpq_class symbol_degree_qprime(const Symbol& s, std::int64_t Q);

/// Principal block membership for rank-n symbols: p = 2 always; linear p by e-core,
/// unitary p by e-cocore, against ({n mod e}, {}).
bool is_principal_bc(const Symbol& s, int e, PrimeKind kind);

/// Odd-defect symbols of rank n, each class once.
std::vector<Symbol> enumerate_symbols_odd_defect(int n);

enum class SpecialFamily { L1, L2, L3, L4 };
const char* to_string(SpecialFamily f);

/// 0 <= k <= l, k + l <= n - 1; L3 and L4 need k < l.
struct SpecialSymbolSpec {
    SpecialFamily family = SpecialFamily::L1;
    int n = 0;
    int k = 0;
    int l = 0;

    void validate() const;
};

Symbol special_symbol(const SpecialSymbolSpec& spec);

struct SpecialDegreeParts {
    mpq_class canonical;    ///< almost-hook shaped product in x = Q^2
    mpq_class exceptional;  ///< 1 when k = l
};

SpecialDegreeParts special_symbol_degree_parts(const SpecialSymbolSpec& spec, std::int64_t Q);

/// Removes the prime of Q from numerator and denominator.
mpq_class q_prime_part(const mpq_class& v, std::int64_t Q);

}  // namespace pqblocks
