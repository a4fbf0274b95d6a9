#include "pqblocks/oracle.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "pqblocks/errors.hpp"
#include "pqblocks/numtheory.hpp"

namespace pqblocks {

bool IntersectionReport::contains(const std::string& label) const {
    return std::binary_search(labels.begin(), labels.end(), label);
}

namespace oracle {

namespace {

void check_pair(std::int64_t p, std::int64_t q) {
    require(is_prime(p) && is_prime(q), "oracle: p and q must be prime");
    require(p != q, "oracle: p and q must differ");
}

void check_field(std::int64_t Q, std::int64_t p, std::int64_t q) {
    check_pair(p, q);
    require(Q >= 2 && Q <= kMaxField && prime_power_base(Q) != 0, "oracle: Q must be a prime power <= 9");
    require(Q % p != 0 && Q % q != 0, "oracle: p and q must not divide Q");
}

std::vector<int> beta(const Partition& lambda) {
    int len = lambda.length();
    std::vector<int> out(len);
    for (int i = 0; i < len; ++i) out[i] = lambda.parts()[i] + (len - 1 - i);
    return out;
}

bool coprime(const mpq_class& v, std::int64_t p) {
    mpz_class num = abs(v.get_num()), den = v.get_den();
    return valuation(num, p) == valuation(den, p);
}

// Strictly increasing sequences of length len, entries >= lo, with the given sum.
void sequences(int len, int sum, int lo, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (len == 0) {
        if (sum == 0) out.push_back(cur);
        return;
    }
    // Smallest possible remaining sum: lo + (lo+1) + ... (len terms).
    for (int x = lo; static_cast<long>(len) * x + static_cast<long>(len) * (len - 1) / 2 <= sum; ++x) {
        cur.push_back(x);
        sequences(len - 1, sum - x, x + 1, cur, out);
        cur.pop_back();
    }
}

std::set<int> remove_hooks(std::set<int> row, int e) {
    for (;;) {
        auto it = std::find_if(row.begin(), row.end(), [&](int x) { return x >= e && !row.count(x - e); });
        if (it == row.end()) return row;
        int x = *it;
        row.erase(it);
        row.insert(x - e);
    }
}

std::vector<int> to_vec(const std::set<int>& s) { return {s.begin(), s.end()}; }

mpq_class strip(const mpz_class& num, const mpz_class& den, std::int64_t Q) {
    mpz_class a = num, b = den, ell(static_cast<long>(prime_power_base(Q)));
    mpz_remove(a.get_mpz_t(), a.get_mpz_t(), ell.get_mpz_t());
    mpz_remove(b.get_mpz_t(), b.get_mpz_t(), ell.get_mpz_t());
    mpq_class out(a, b);
    out.canonicalize();
    return out;
}

}  // namespace

std::string alt_label(const Partition& lambda, Constituent c) {
    Partition conj = lambda.conjugate();
    const Partition& rep = lambda < conj ? conj : lambda;
    switch (c) {
        case Constituent::FullRestriction: return rep.to_string();
        case Constituent::SplitPlus: return rep.to_string() + "+";
        case Constituent::SplitMinus: return rep.to_string() + "-";
    }
    return rep.to_string();
}

std::vector<Partition> partitions(int n) {
    require(n >= 0 && n <= kMaxEnumerate, "oracle: partition enumeration is limited to n <= 60");
    return enumerate_partitions(n);
}

Partition core_by_rim_hooks(const Partition& lambda, int e) {
    require(e >= 1, "oracle: e must be positive");
    std::vector<int> parts = lambda.parts();
    for (;;) {
        std::vector<int> conj = Partition(parts).conjugate().parts();
        bool removed = false;
        for (int i = 0; i < static_cast<int>(parts.size()) && !removed; ++i) {
            for (int j = 0; j < parts[i]; ++j) {
                int leg = conj[j] - i - 1;
                if ((parts[i] - j - 1) + leg + 1 != e) continue;
                for (int t = 0; t < leg; ++t) parts[i + t] = parts[i + t + 1] - 1;
                parts[i + leg] = j;
                removed = true;
                break;
            }
        }
        if (!removed) return Partition(parts);
        parts = Partition(parts).parts();
    }
}

mpz_class degree_by_beta(const Partition& lambda) {
    auto b = beta(lambda);
    mpz_class num, den = 1, f;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) num *= b[i] - b[j];
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(b[i]));
        den *= f;
    }
    return num / den;
}

std::vector<Symbol> symbols(int n) {
    require(n >= 0 && n <= kMaxSymbolRank, "oracle: symbol enumeration is limited to n <= 12");
    std::vector<Symbol> out;
    for (int d = 1; (d * d - 1) / 4 <= n; d += 2) {
        // A row not starting at 0 costs at least its length above the minimal sum.
        const int slack = n - (d * d - 1) / 4;
        for (int l = 0; l <= slack; ++l) {
            const int k = l + d;
            const int target = n + (k + l - 1) * (k + l - 1) / 4;
            for (int sx = k * (k - 1) / 2; sx <= target - l * (l - 1) / 2; ++sx) {
                std::vector<std::vector<int>> xs, ys;
                std::vector<int> cur;
                sequences(k, sx, 0, cur, xs);
                if (xs.empty()) continue;
                sequences(l, target - sx, 0, cur, ys);
                for (const auto& X : xs) {
                    for (const auto& Y : ys) {
                        if (!Y.empty() && X.front() == 0 && Y.front() == 0) continue;
                        out.emplace_back(X, Y);
                    }
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

Symbol core_by_removal(const Symbol& s, int e) {
    require(e >= 1, "oracle: e must be positive");
    auto X = remove_hooks({s.top().begin(), s.top().end()}, e);
    auto Y = remove_hooks({s.bottom().begin(), s.bottom().end()}, e);
    return Symbol(to_vec(X), to_vec(Y));
}

Symbol cocore_by_removal(const Symbol& s, int e) {
    require(e >= 1, "oracle: e must be positive");
    std::set<int> rows[2] = {{s.top().begin(), s.top().end()}, {s.bottom().begin(), s.bottom().end()}};
    for (;;) {
        int best = -1, from = 0;
        for (int r = 0; r < 2; ++r) {
            for (int x : rows[r]) {
                if (x >= e && !rows[1 - r].count(x - e) && (best < 0 || x < best)) best = x, from = r;
            }
        }
        if (best < 0) break;
        rows[from].erase(best);
        rows[1 - from].insert(best - e);
    }
    return Symbol(to_vec(rows[0]), to_vec(rows[1]));
}

mpq_class typeA_qprime(const Partition& lambda, std::int64_t x) {
    auto b = beta(lambda);
    mpz_class num = 1, den = 1;
    for (int k = 1; k <= lambda.size(); ++k) num *= psi(x, k, PsiSign::Minus);
    for (std::size_t i = 0; i < b.size(); ++i) {
        for (std::size_t j = i + 1; j < b.size(); ++j) num *= psi(x, b[i] - b[j], PsiSign::Minus);
        for (int k = 1; k <= b[i]; ++k) den *= psi(x, k, PsiSign::Minus);
    }
    mpq_class out(num, den);
    out.canonicalize();
    return out;
}

mpq_class typeBC_qprime(const Symbol& s, std::int64_t Q) {
    require(prime_power_base(Q) != 0, "oracle: Q must be a prime power");
    const auto& X = s.top();
    const auto& Y = s.bottom();
    mpz_class num = 1, den = 1;
    for (int i = 1; i <= s.rank(); ++i) num *= psi(Q, 2 * i, PsiSign::Minus);
    for (const auto* row : {&X, &Y}) {
        for (std::size_t i = 0; i < row->size(); ++i) {
            for (std::size_t j = i + 1; j < row->size(); ++j) num *= psi(Q, (*row)[j] - (*row)[i], PsiSign::Minus);
            for (int k = 1; k <= (*row)[i]; ++k) den *= psi(Q, 2 * k, PsiSign::Minus);
        }
    }
    for (int x : X) {
        for (int y : Y) num *= x == y ? mpz_class(2) : psi(Q, std::abs(x - y), PsiSign::Plus);
    }
    den <<= (X.size() + Y.size() - 1) / 2;
    return strip(num, den, Q);
}

SymmetricTable::SymmetricTable(int n) : n_(n) {
    require(n >= 2 && n <= kMaxIntersection, "oracle: intersections are limited to n <= 30");
    parts_ = partitions(n);
    for (const auto& lam : parts_) {
        conj_.push_back(lam.conjugate());
        degrees_.push_back(degree_by_beta(lam));
    }
    for (auto p : primes_up_to(n)) {
        const int e = static_cast<int>(p);
        const Partition target = Partition::row(n % e);
        auto& flags = principal_[p];
        for (const auto& lam : parts_) flags.push_back(core_by_rim_hooks(lam, e) == target);
    }
}

const std::vector<bool>& SymmetricTable::principal(std::int64_t p) const {
    auto it = principal_.find(p);
    require(it != principal_.end(), "oracle: primes must not exceed n");
    return it->second;
}

IntersectionReport SymmetricTable::sym(std::int64_t p, std::int64_t q) const {
    check_pair(p, q);
    IntersectionReport rep{"sym", n_, p, q, 0, 0, {}};
    const auto& bp = principal(p);
    const auto& bq = principal(q);
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (bp[i] && bq[i] && valuation(degrees_[i], p) == 0 && valuation(degrees_[i], q) == 0) {
            rep.labels.push_back(parts_[i].to_string());
        }
    }
    std::sort(rep.labels.begin(), rep.labels.end());
    return rep;
}

IntersectionReport SymmetricTable::alt(std::int64_t p, std::int64_t q) const {
    check_pair(p, q);
    IntersectionReport rep{"alt", n_, p, q, 0, 0, {}};
    const auto& bp = principal(p);
    const auto& bq = principal(q);
    auto index = [&](const Partition& lam) {
        return static_cast<std::size_t>(std::find(parts_.begin(), parts_.end(), lam) - parts_.begin());
    };
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < conj_[i]) continue;
        std::size_t j = index(conj_[i]);
        bool in_p = bp[i] || bp[j], in_q = bq[i] || bq[j];
        if (!in_p || !in_q) continue;
        mpz_class d = degrees_[i];
        bool split = i == j;
        if (split) d /= 2;
        if (valuation(d, p) != 0 || valuation(d, q) != 0) continue;
        if (split) {
            rep.labels.push_back(alt_label(parts_[i], Constituent::SplitPlus));
            rep.labels.push_back(alt_label(parts_[i], Constituent::SplitMinus));
        } else {
            rep.labels.push_back(alt_label(parts_[i], Constituent::FullRestriction));
        }
    }
    std::sort(rep.labels.begin(), rep.labels.end());
    return rep;
}

IntersectionReport intersection_sym(int n, std::int64_t p, std::int64_t q) { return SymmetricTable(n).sym(p, q); }

IntersectionReport intersection_alt(int n, std::int64_t p, std::int64_t q) {
    require(n >= 4, "oracle: A_n needs n >= 4");
    return SymmetricTable(n).alt(p, q);
}

IntersectionReport intersection_typeA(int n, std::int64_t Q, int epsilon, std::int64_t p, std::int64_t q) {
    require(n >= 2 && n <= kMaxTypeA, "oracle: type A is limited to 2 <= n <= 10");
    require(epsilon == 1 || epsilon == -1, "oracle: epsilon must be +1 or -1");
    check_field(Q, p, q);
    const std::int64_t x = epsilon * Q;
    const int ep = static_cast<int>(ord_mod(x, p)), eq = static_cast<int>(ord_mod(x, q));
    require(ep <= n && eq <= n, "oracle: pq must divide the group order");
    IntersectionReport rep{"typea", n, p, q, Q, epsilon, {}};
    for (const auto& lam : partitions(n)) {
        if (core_by_rim_hooks(lam, ep) != Partition::row(n % ep)) continue;
        if (core_by_rim_hooks(lam, eq) != Partition::row(n % eq)) continue;
        auto d = typeA_qprime(lam, x);
        if (coprime(d, p) && coprime(d, q)) rep.labels.push_back(lam.to_string());
    }
    std::sort(rep.labels.begin(), rep.labels.end());
    return rep;
}

IntersectionReport intersection_typeBC(int n, std::int64_t Q, std::int64_t p, std::int64_t q) {
    require(n >= 2 && n <= kMaxTypeBC, "oracle: type BC is limited to 2 <= n <= 8");
    check_field(Q, p, q);
    struct Prime {
        std::int64_t p;
        int e;
        bool unitary;
    };
    std::vector<Prime> primes;
    for (auto r : {p, q}) {
        int e = static_cast<int>(ord_mod(Q * Q, r));
        require(e <= n, "oracle: pq must divide the group order");
        primes.push_back({r, e, r != 2 && ord_mod(Q, r) % 2 == 0});
    }
    IntersectionReport rep{"typebc", n, p, q, Q, 0, {}};
    for (const auto& s : symbols(n)) {
        bool ok = true;
        for (const auto& pr : primes) {
            if (pr.p == 2) continue;
            Symbol target({n % pr.e}, {});
            ok = ok && (pr.unitary ? cocore_by_removal(s, pr.e) : core_by_removal(s, pr.e)) == target;
        }
        if (!ok) continue;
        auto d = typeBC_qprime(s, Q);
        if (coprime(d, p) && coprime(d, q)) rep.labels.push_back(s.to_string());
    }
    std::sort(rep.labels.begin(), rep.labels.end());
    return rep;
}

}  // namespace oracle
}  // namespace pqblocks
