#include "pqblocks/symbol.hpp"

#include <algorithm>
#include <set>

#include "pqblocks/errors.hpp"
#include "pqblocks/partition.hpp"

namespace pqblocks {

namespace {

void check_row(const std::vector<int>& row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
        require(row[i] >= 0, "symbol: negative entry");
        require(i == 0 || row[i - 1] < row[i], "symbol: row not strictly increasing");
    }
}

std::vector<int> range(int from, int to) {
    std::vector<int> out;
    for (int i = from; i <= to; ++i) out.push_back(i);
    return out;
}

std::vector<int> sorted(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    return v;
}

std::vector<int> row_core(const std::vector<int>& row, int e) {
    std::vector<int> beads(e, 0);
    for (int x : row) ++beads[x % e];
    std::vector<int> out;
    for (int r = 0; r < e; ++r) {
        for (int j = 0; j < beads[r]; ++j) out.push_back(r + e * j);
    }
    return sorted(out);
}

// Hook lengths x - x' for x in row, x' < x missing from `other`.
void differences(const std::vector<int>& row, const std::vector<int>& other, std::vector<int>& out) {
    std::set<int> present(other.begin(), other.end());
    for (int x : row) {
        for (int y = 0; y < x; ++y) {
            if (!present.count(y)) out.push_back(x - y);
        }
    }
}

}  // namespace

Symbol::Symbol(std::vector<int> top, std::vector<int> bottom) {
    check_row(top);
    check_row(bottom);
    while (!top.empty() && !bottom.empty() && top.front() == 0 && bottom.front() == 0) {
        top.erase(top.begin());
        bottom.erase(bottom.begin());
        for (int& x : top) --x;
        for (int& y : bottom) --y;
    }
    if (top.size() < bottom.size() || (top.size() == bottom.size() && top < bottom)) std::swap(top, bottom);
    top_ = std::move(top);
    bottom_ = std::move(bottom);
}

int Symbol::rank() const {
    long sum = 0;
    for (int x : top_) sum += x;
    for (int y : bottom_) sum += y;
    long c = static_cast<long>(top_.size() + bottom_.size()) - 1;
    return static_cast<int>(sum - (c * c) / 4);
}

int Symbol::defect() const { return static_cast<int>(top_.size() - bottom_.size()); }

std::string Symbol::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < top_.size(); ++i) out += (i ? "," : "") + std::to_string(top_[i]);
    out += "|";
    for (std::size_t i = 0; i < bottom_.size(); ++i) out += (i ? "," : "") + std::to_string(bottom_[i]);
    return out + "]";
}

Symbol normalize(std::vector<int> top, std::vector<int> bottom) { return Symbol(std::move(top), std::move(bottom)); }

Symbol trivial_symbol(int n) {
    require(n >= 0, "trivial_symbol: n must be nonnegative");
    return Symbol({n}, {});
}

Symbol steinberg_symbol(int n) {
    require(n >= 0, "steinberg_symbol: n must be nonnegative");
    return Symbol(range(0, n), range(1, n));
}

std::vector<int> symbol_hooks(const Symbol& s) {
    std::vector<int> out;
    differences(s.top(), s.top(), out);
    differences(s.bottom(), s.bottom(), out);
    return sorted(out);
}

std::vector<int> symbol_cohooks(const Symbol& s) {
    std::vector<int> out;
    differences(s.top(), s.bottom(), out);
    differences(s.bottom(), s.top(), out);
    return sorted(out);
}

int symbol_b_prime(const Symbol& s) {
    const auto& X = s.top();
    const auto& Y = s.bottom();
    std::vector<int> both;
    std::set_intersection(X.begin(), X.end(), Y.begin(), Y.end(), std::back_inserter(both));
    int total = static_cast<int>(X.size() + Y.size());
    return (total - 1) / 2 - static_cast<int>(both.size());
}

Symbol e_core_symbol(const Symbol& s, int e) {
    require(e >= 1, "e_core_symbol: e must be positive");
    return Symbol(row_core(s.top(), e), row_core(s.bottom(), e));
}

Symbol e_cocore_symbol(const Symbol& s, int e) {
    require(e >= 1, "e_cocore_symbol: e must be positive");
    std::set<int> X(s.top().begin(), s.top().end());
    std::set<int> Y(s.bottom().begin(), s.bottom().end());
    for (;;) {
        // Largest removable entry first; the result does not depend on the order.
        int best = -1;
        bool from_top = true;
        for (int x : X) {
            if (x >= e && !Y.count(x - e) && x > best) best = x, from_top = true;
        }
        for (int y : Y) {
            if (y >= e && !X.count(y - e) && y > best) best = y, from_top = false;
        }
        if (best < 0) break;
        auto& src = from_top ? X : Y;
        auto& dst = from_top ? Y : X;
        src.erase(best);
        dst.insert(best - e);
    }
    return Symbol(std::vector<int>(X.begin(), X.end()), std::vector<int>(Y.begin(), Y.end()));
}

int symbol_degree_valuation(const Symbol& s, std::int64_t Q, std::int64_t p) {
    require(prime_power_base(Q) != 0, "symbol_degree_valuation: Q must be a prime power");
    require(Q % p != 0, "symbol_degree_valuation: p divides Q");
    auto ctx = ValuationContext::make(Q, p);
    int v = 0;
    for (int i = 1; i <= s.rank(); ++i) v += psi_valuation(ctx, 2 * i, PsiSign::Minus);
    if (p == 2) v -= symbol_b_prime(s);
    for (int h : symbol_hooks(s)) v -= psi_valuation(ctx, h, PsiSign::Minus);
    for (int c : symbol_cohooks(s)) v -= psi_valuation(ctx, c, PsiSign::Plus);
    return v;
}

mpq_class q_prime_part(const mpq_class& v, std::int64_t Q) {
    std::int64_t l = prime_power_base(Q);
    require(l != 0, "q_prime_part: Q must be a prime power");
    mpz_class num = v.get_num(), den = v.get_den(), ell(static_cast<long>(l));
    if (num != 0) mpz_remove(num.get_mpz_t(), num.get_mpz_t(), ell.get_mpz_t());
    mpz_remove(den.get_mpz_t(), den.get_mpz_t(), ell.get_mpz_t());
    mpq_class out(num, den);
    out.canonicalize();
    return out;
}

mpq_class symbol_degree_qprime(const Symbol& s, std::int64_t Q) {
    require(prime_power_base(Q) != 0, "symbol_degree_qprime: Q must be a prime power");
    mpz_class num = 1, den = 1;
    for (int i = 1; i <= s.rank(); ++i) num *= psi(Q, 2 * i, PsiSign::Minus);
    den <<= symbol_b_prime(s);
    for (int h : symbol_hooks(s)) den *= psi(Q, h, PsiSign::Minus);
    for (int c : symbol_cohooks(s)) den *= psi(Q, c, PsiSign::Plus);
    mpq_class out(num, den);
    out.canonicalize();
    return q_prime_part(out, Q);
}

bool is_principal_bc(const Symbol& s, int e, PrimeKind kind) {
    require(e >= 1, "is_principal_bc: e must be positive");
    if (kind == PrimeKind::Even) return true;
    Symbol target({s.rank() % e}, {});
    return (kind == PrimeKind::Linear ? e_core_symbol(s, e) : e_cocore_symbol(s, e)) == target;
}

std::vector<Symbol> enumerate_symbols_odd_defect(int n) {
    require(n >= 0, "enumerate_symbols_odd_defect: n must be nonnegative");
    std::vector<Symbol> out;
    for (int d = 1; (d * d - 1) / 4 <= n; d += 2) {
        int rest = n - (d * d - 1) / 4;
        for (int a = 0; a <= rest; ++a) {
            for (const auto& alpha : enumerate_partitions(a)) {
                for (const auto& beta : enumerate_partitions(rest - a)) {
                    int m = std::max({beta.length(), alpha.length() - d, 0});
                    auto betaset = [](const Partition& lam, int len) {
                        std::vector<int> row(len);
                        for (int i = 0; i < len; ++i) {
                            int part = i < lam.length() ? lam.parts()[i] : 0;
                            row[len - 1 - i] = part + (len - 1 - i);
                        }
                        return row;
                    };
                    out.emplace_back(betaset(alpha, m + d), betaset(beta, m));
                }
            }
        }
    }
    return out;
}

const char* to_string(SpecialFamily f) {
    switch (f) {
        case SpecialFamily::L1: return "L1";
        case SpecialFamily::L2: return "L2";
        case SpecialFamily::L3: return "L3";
        case SpecialFamily::L4: return "L4";
    }
    return "?";
}

void SpecialSymbolSpec::validate() const {
    require(n >= 1, "special symbol: n must be positive");
    require(0 <= k && k <= l && k + l <= n - 1, "special symbol: need 0 <= k <= l and k + l <= n - 1");
    bool needs_gap = family == SpecialFamily::L3 || family == SpecialFamily::L4;
    require(!needs_gap || k < l, "special symbol: L3 and L4 need k < l");
}

Symbol special_symbol(const SpecialSymbolSpec& spec) {
    spec.validate();
    const int M = spec.n - spec.k - spec.l - 1;
    const int K = spec.n - spec.k, L = spec.n - spec.l;
    auto with = [](std::vector<int> v, std::initializer_list<int> extra) {
        v.insert(v.end(), extra);
        return sorted(v);
    };
    switch (spec.family) {
        case SpecialFamily::L1: return Symbol(with(range(0, M), {K}), with(range(1, M), {L}));
        case SpecialFamily::L2: return Symbol(with(range(0, M), {L}), with(range(1, M), {K}));
        case SpecialFamily::L3: return Symbol(with(range(1, M), {L, K}), range(0, M));
        case SpecialFamily::L4: return Symbol(with(range(0, M), {L, K}), range(1, M));
    }
    throw InvalidArgument("special symbol: unknown family");
}

SpecialDegreeParts special_symbol_degree_parts(const SpecialSymbolSpec& spec, std::int64_t Q) {
    spec.validate();
    require(prime_power_base(Q) != 0, "special_symbol_degree_parts: Q must be a prime power");
    const int n = spec.n, k = spec.k, l = spec.l;
    auto P = [Q](int f) { return psi(Q, 2 * f, PsiSign::Minus); };
    mpz_class den = 1, first = 1, second = 1;
    for (int i = 1; i <= k; ++i) den *= P(i);
    for (int i = 1; i <= l; ++i) {
        if (i != l - k) den *= P(i);
    }
    for (int i = 1; i <= k; ++i) first *= P(n - k + i);
    for (int i = 1; i <= l; ++i) {
        if (i != l - k) first *= P(n - k - i);
    }
    for (int i = 1; i <= l; ++i) {
        if (i != l - k) second *= P(n - l + i);
    }
    for (int i = 1; i <= k; ++i) second *= P(n - l - i);
    if (first != second) throw VerificationFailure("special_symbol_degree_parts: canonical forms disagree");
    SpecialDegreeParts parts;
    parts.canonical = mpq_class(first, den);
    parts.canonical.canonicalize();
    parts.exceptional = 1;
    if (k == l) return parts;
    const int K = n - k, L = n - l, g = l - k;
    const auto m = PsiSign::Minus, pl = PsiSign::Plus;
    mpz_class num, dd;
    switch (spec.family) {
        case SpecialFamily::L1: num = psi(Q, K, m) * psi(Q, L, pl), dd = psi(Q, g, m); break;
        case SpecialFamily::L2: num = psi(Q, K, pl) * psi(Q, L, m), dd = psi(Q, g, m); break;
        case SpecialFamily::L3: num = psi(Q, K, pl) * psi(Q, L, pl), dd = psi(Q, g, pl); break;
        case SpecialFamily::L4: num = psi(Q, K, m) * psi(Q, L, m), dd = psi(Q, g, pl); break;
    }
    parts.exceptional = mpq_class(num, 2 * dd);
    parts.exceptional.canonicalize();
    return parts;
}

}  // namespace pqblocks
