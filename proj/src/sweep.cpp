#include "pqblocks/sweep.hpp"

#include <atomic>
#include <chrono>
#include <limits>
#include <map>
#include <cstdlib>
#include <memory>
#include <optional>
#include <set>
#include <thread>

#include "pqblocks/errors.hpp"
#include "pqblocks/numtheory.hpp"
#include "pqblocks/oracle.hpp"
#include "pqblocks/records.hpp"
#include "pqblocks/witness_lie.hpp"
#include "pqblocks/witness_sym.hpp"

namespace pqblocks {

namespace {

using nlohmann::json;

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

// x^k for small bases, refusing anything near the int64 range.
std::int64_t checked_pow(std::int64_t x, int k) {
    std::int64_t v = 1;
    for (int i = 0; i < k; ++i) {
        require(std::llabs(v) <= std::numeric_limits<std::int64_t>::max() / 16 / std::llabs(x),
                "group_primes: Q^n too large");
        v *= x;
    }
    return v;
}

std::string group_name(Family f, int epsilon) {
    switch (f) {
        case Family::Sym: return "S";
        case Family::Alt: return "A";
        case Family::TypeA: return epsilon == 1 ? "A" : "2A";
        case Family::TypeBC: return "BC";
    }
    return "?";
}

bool oracle_in_bounds(Family f, const SweepTask& t) {
    switch (f) {
        case Family::Sym:
        case Family::Alt: return t.n <= oracle::kMaxIntersection;
        case Family::TypeA: return t.n <= oracle::kMaxTypeA && t.Q <= oracle::kMaxField;
        case Family::TypeBC: return t.n <= oracle::kMaxTypeBC && t.Q <= oracle::kMaxField;
    }
    return false;
}

SweepRow run_one(Family f, const SweepTask& t, bool use_oracle, const oracle::SymmetricTable* table) {
    SweepRow row;
    std::string label;
    std::string size;
    try {
        std::optional<IntersectionReport> rep;
        bool check = use_oracle && oracle_in_bounds(f, t);
        switch (f) {
            case Family::Sym: {
                auto w = witness_symmetric(t.n, t.p, t.q);
                row.record = sym_record(t.n, t.p, t.q, w);
                label = oracle_label(w);
                if (check) rep = table ? table->sym(t.p, t.q) : oracle::intersection_sym(t.n, t.p, t.q);
                break;
            }
            case Family::Alt: {
                auto w = witness_alternating(t.n, t.p, t.q);
                row.record = alt_record(t.n, t.p, t.q, w);
                label = oracle_label(w);
                if (check) rep = table ? table->alt(t.p, t.q) : oracle::intersection_alt(t.n, t.p, t.q);
                break;
            }
            case Family::TypeA: {
                auto ctx = TypeAContext::make(t.n, t.Q, t.epsilon, t.p, t.q);
                auto w = witness_typeA(ctx);
                row.record = typeA_record(ctx, w);
                label = oracle_label(w);
                if (check) rep = oracle::intersection_typeA(t.n, t.Q, t.epsilon, t.p, t.q);
                break;
            }
            case Family::TypeBC: {
                auto ctx = TypeBCContext::make(t.n, t.Q, t.p, t.q);
                auto w = witness_typeBC(ctx);
                row.record = typeBC_record(ctx, w);
                label = oracle_label(w);
                if (check) rep = oracle::intersection_typeBC(t.n, t.Q, t.p, t.q);
                break;
            }
        }
        row.record["verified"] = true;
        row.ok = true;
        if (rep) {
            bool contains = rep->contains(label);
            row.record["intersection_size"] = rep->size();
            row.record["in_intersection"] = contains;
            row.ok = contains;
            size = std::to_string(rep->size());
        }
    } catch (const std::exception& e) {
        row.record = {{"group", group_name(f, t.epsilon)}, {"n", t.n}, {"p", t.p}, {"q", t.q}};
        if (t.Q != 0) row.record["Q"] = t.Q;
        row.record["verified"] = false;
        row.record["error"] = e.what();
        row.ok = false;
    }
    row.csv = group_name(f, t.epsilon) + "," + std::to_string(t.n) + "," + std::to_string(t.p) + "," +
              std::to_string(t.q) + "," + size + "," + (label.empty() ? "false" : "true") + "," + csv_field(label);
    return row;
}

}  // namespace

Family parse_family(const std::string& name) {
    if (name == "sym") return Family::Sym;
    if (name == "alt") return Family::Alt;
    if (name == "typea") return Family::TypeA;
    if (name == "typebc") return Family::TypeBC;
    throw InvalidArgument("unknown family '" + name + "' (expected sym, alt, typea or typebc)");
}

const char* to_string(Family f) {
    switch (f) {
        case Family::Sym: return "sym";
        case Family::Alt: return "alt";
        case Family::TypeA: return "typea";
        case Family::TypeBC: return "typebc";
    }
    return "?";
}

json SweepResult::summary() const {
    return {{"summary", {{"tuples", rows.size()}, {"failures", failures}, {"seconds", seconds}}}};
}

std::vector<std::int64_t> group_primes(Family f, int n, std::int64_t Q, int epsilon) {
    if (f == Family::Sym || f == Family::Alt) return primes_up_to(n);
    std::set<std::int64_t> primes;
    const std::int64_t x = f == Family::TypeA ? epsilon * Q : Q;
    for (int k = 1; k <= n; ++k) {
        std::int64_t v = checked_pow(x, k);
        std::vector<std::int64_t> factors{v - 1};
        if (f == Family::TypeBC) factors.push_back(v + 1);
        for (auto fac : factors) {
            for (auto p : prime_divisors(fac)) primes.insert(p);
        }
    }
    return {primes.begin(), primes.end()};
}

std::vector<SweepTask> sweep_tasks(const SweepConfig& cfg) {
    const bool lie = cfg.family == Family::TypeA || cfg.family == Family::TypeBC;
    const int lowest = cfg.family == Family::Sym ? 3 : cfg.family == Family::Alt ? 4 : 2;
    std::vector<SweepTask> tasks;
    std::vector<std::int64_t> fields = lie ? cfg.fields : std::vector<std::int64_t>{0};
    std::vector<int> epsilons = cfg.family == Family::TypeA ? cfg.epsilons : std::vector<int>{0};
    for (auto Q : fields) {
        if (lie) require(prime_power_base(Q) != 0, "sweep: Q must be a prime power");
        for (int eps : epsilons) {
            if (cfg.family == Family::TypeA) require(eps == 1 || eps == -1, "sweep: epsilon must be +1 or -1");
            for (int n = std::max(cfg.n_min, lowest); n <= cfg.n_max; ++n) {
                auto primes = group_primes(cfg.family, n, Q, eps);
                for (std::size_t i = 0; i < primes.size(); ++i) {
                    for (std::size_t j = i + 1; j < primes.size(); ++j) {
                        if (cfg.prime_bound > 0 && primes[j] > cfg.prime_bound) continue;
                        tasks.push_back({n, primes[i], primes[j], lie ? Q : 0, cfg.family == Family::TypeA ? eps : 0});
                    }
                }
            }
        }
    }
    return tasks;
}

SweepRow run_task(Family f, const SweepTask& t, bool use_oracle) { return run_one(f, t, use_oracle, nullptr); }

SweepResult run_sweep(const SweepConfig& cfg) {
    require(cfg.jobs >= 1, "sweep: jobs must be positive");
    auto start = std::chrono::steady_clock::now();
    auto tasks = sweep_tasks(cfg);
    std::map<int, std::unique_ptr<oracle::SymmetricTable>> tables;
    if (cfg.oracle && (cfg.family == Family::Sym || cfg.family == Family::Alt)) {
        for (const auto& t : tasks) {
            if (t.n <= oracle::kMaxIntersection && !tables.count(t.n)) {
                tables[t.n] = std::make_unique<oracle::SymmetricTable>(t.n);
            }
        }
    }
    SweepResult res;
    res.rows.resize(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            auto it = tables.find(tasks[i].n);
            res.rows[i] = run_one(cfg.family, tasks[i], cfg.oracle, it == tables.end() ? nullptr : it->second.get());
        }
    };
    std::vector<std::thread> pool;
    for (int j = 1; j < cfg.jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    for (const auto& r : res.rows) res.failures += r.ok ? 0 : 1;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return res;
}

}  // namespace pqblocks
