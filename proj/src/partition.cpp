#include "pqblocks/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "pqblocks/errors.hpp"
#include "pqblocks/numtheory.hpp"

namespace pqblocks {

namespace {

int parse_int(const std::string& tok, const std::string& whole) {
    require(!tok.empty(), "partition: empty token in '" + whole + "'");
    for (char c : tok) {
        require(c >= '0' && c <= '9', "partition: bad token '" + tok + "' in '" + whole + "'");
    }
    require(tok.size() <= 6, "partition: number too large in '" + whole + "'");
    return std::stoi(tok);
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

// Beta-set with `len` beads.
std::vector<int> beta_set(const Partition& lambda) {
    const auto& parts = lambda.parts();
    int len = lambda.length();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = parts[i] + (len - 1 - i);
    return beta;
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.rbegin(), beta.rend());
    int len = static_cast<int>(beta.size());
    std::vector<int> parts(len);
    for (int i = 0; i < len; ++i) parts[i] = beta[i] - (len - 1 - i);
    return Partition(parts);
}

}  // namespace

Partition::Partition(std::vector<int> parts) {
    for (int x : parts) require(x >= 0, "partition: negative part");
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.rbegin(), parts.rend());
    parts_ = std::move(parts);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::parse(const std::string& text) {
    std::vector<int> parts;
    std::string body = trim(text);
    if (body.empty()) return Partition();
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok = trim(tok);
        auto caret = tok.find('^');
        int part = parse_int(tok.substr(0, caret), text);
        int mult = caret == std::string::npos ? 1 : parse_int(tok.substr(caret + 1), text);
        require(part > 0 || mult == 0 || caret == std::string::npos,
                "partition: zero part with nonzero multiplicity in '" + text + "'");
        for (int i = 0; i < mult; ++i) parts.push_back(part);
    }
    require(body.back() != ',', "partition: trailing comma in '" + text + "'");
    return Partition(parts);
}

Partition Partition::column(int n) { return Partition(std::vector<int>(n, 1)); }
Partition Partition::row(int n) { return Partition(std::vector<int>{n}); }

std::string Partition::to_string() const {
    std::map<int, int> mult;
    for (int x : parts_) ++mult[x];
    std::string out;
    for (auto [part, m] : mult) {
        if (!out.empty()) out += ',';
        out += std::to_string(part);
        if (m > 1) out += '^' + std::to_string(m);
    }
    return out;
}

Partition Partition::conjugate() const {
    std::vector<int> conj(parts_.empty() ? 0 : parts_.front(), 0);
    for (int x : parts_) {
        for (int j = 0; j < x; ++j) ++conj[j];
    }
    return Partition(conj);
}

void AlmostHookSpec::validate() const {
    require(0 <= k && k < l && l < n - k, "almost hook: need 0 <= k < l < n - k");
}

Partition AlmostHookSpec::expand() const {
    validate();
    std::vector<int> parts(n - k - l - 1, 1);
    parts.push_back(k + 1);
    parts.push_back(l);
    return Partition(parts);
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& lam) { out.push_back(lam); });
    return out;
}

void for_each_partition(int n, const std::function<void(const Partition&)>& visit) {
    require(n >= 0, "enumerate_partitions: n must be nonnegative");
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int rest, int maxpart) {
        if (rest == 0) {
            visit(Partition(cur));
            return;
        }
        for (int x = std::min(rest, maxpart); x >= 1; --x) {
            cur.push_back(x);
            rec(rest - x, x);
            cur.pop_back();
        }
    };
    rec(n, n);
}

std::vector<int> hook_lengths(const Partition& lambda) {
    const auto& parts = lambda.parts();
    auto conj = lambda.conjugate().parts();
    std::vector<int> hooks;
    hooks.reserve(lambda.size());
    for (int i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < parts[i]; ++j) hooks.push_back((parts[i] - j - 1) + (conj[j] - i - 1) + 1);
    }
    std::sort(hooks.begin(), hooks.end());
    return hooks;
}

mpz_class degree(const Partition& lambda) {
    mpz_class num, den = 1;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(lambda.size()));
    for (int h : hook_lengths(lambda)) den *= h;
    return num / den;
}

int degree_valuation(const Partition& lambda, std::int64_t p) {
    require(p >= 2, "degree_valuation: p must be at least 2");
    auto vp = [p](std::int64_t k) {
        int v = 0;
        for (; k % p == 0; k /= p) ++v;
        return v;
    };
    const auto& parts = lambda.parts();
    int v = 0;
    for (int k = 2; k <= lambda.size(); ++k) v += vp(k);
    // column lengths, read off the decreasing rows
    std::vector<int> cols(parts.empty() ? 0 : static_cast<std::size_t>(parts[0]), 0);
    for (int r : parts)
        for (int j = 0; j < r; ++j) ++cols[j];
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < parts[i]; ++j) v -= vp((parts[i] - j - 1) + (cols[j] - i - 1) + 1);
    return v;
}

mpz_class almost_hook_degree(const AlmostHookSpec& spec) {
    spec.validate();
    const int n = spec.n, k = spec.k, l = spec.l;
    mpz_class den = 1, first = 1, second = 1;
    for (int i = 1; i <= k; ++i) den *= i;
    for (int i = 1; i <= l; ++i) {
        if (i != l - k) den *= i;
    }
    for (int i = 1; i <= k; ++i) first *= n - k + i;
    for (int i = 1; i <= l; ++i) {
        if (i != l - k) first *= n - k - i;
    }
    for (int i = 1; i <= l; ++i) {
        if (i != l - k) second *= n - l + i;
    }
    for (int i = 1; i <= k; ++i) second *= n - l - i;
    if (first != second) throw VerificationFailure("almost_hook_degree: closed forms disagree");
    return first / den;
}

Partition e_core(const Partition& lambda, int e) {
    require(e >= 1, "e_core: e must be positive");
    auto beta = beta_set(lambda);
    std::vector<int> beads(e, 0);
    for (int b : beta) ++beads[b % e];
    std::vector<int> core;
    for (int r = 0; r < e; ++r) {
        for (int j = 0; j < beads[r]; ++j) core.push_back(r + e * j);
    }
    return from_beta(core);
}

bool is_p_principal_sym(const Partition& lambda, std::int64_t p) {
    require(is_prime(p), "is_p_principal_sym: p must be prime");
    int e = static_cast<int>(p);
    return e_core(lambda, e) == Partition::row(lambda.size() % e);
}

bool is_p_principal_alt(const Partition& lambda, std::int64_t p) {
    require(is_prime(p), "is_p_principal_alt: p must be prime");
    int e = static_cast<int>(p);
    int s = lambda.size() % e;
    Partition core = e_core(lambda, e);
    if (core != Partition::row(s) && core != Partition::column(s)) return false;
    bool trivial_or_sign = lambda == Partition::row(lambda.size()) || lambda == Partition::column(lambda.size());
    return !(core == lambda && lambda.is_self_conjugate() && !trivial_or_sign);
}

int typeA_degree_valuation(const Partition& lambda, std::int64_t x, std::int64_t p) {
    auto ctx = ValuationContext::make(x, p);
    int v = 0;
    for (int k = 1; k <= lambda.size(); ++k) v += psi_valuation(ctx, k, PsiSign::Minus);
    for (int h : hook_lengths(lambda)) v -= psi_valuation(ctx, h, PsiSign::Minus);
    return v;
}

}  // namespace pqblocks
