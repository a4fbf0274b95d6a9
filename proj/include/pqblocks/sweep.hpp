#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace pqblocks {

enum class Family { Sym, Alt, TypeA, TypeBC };

Family parse_family(const std::string& name);  ///< "sym", "alt", "typea", "typebc"
const char* to_string(Family f);

struct SweepConfig {
    Family family = Family::Sym;
    int n_min = 3;
    int n_max = 10;
    std::int64_t prime_bound = 0;          ///< 0: no bound beyond the group
    std::vector<std::int64_t> fields{2};   ///< Q values, Lie families only
    std::vector<int> epsilons{1};          ///< type A only
    bool oracle = false;                   ///< also check containment where the oracle allows it
    int jobs = 1;
};

/// One parameter tuple of a sweep.
struct SweepTask {
    int n = 0;
    std::int64_t p = 0, q = 0;
    std::int64_t Q = 0;
    int epsilon = 0;
};

struct SweepRow {
    nlohmann::json record;  ///< one JSON line
    bool ok = false;
    std::string csv;        ///< group,n,p,q,intersection_size,witness_found,witness_label
};

struct SweepResult {
    std::vector<SweepRow> rows;  ///< canonical order
    std::size_t failures = 0;
    double seconds = 0;

    nlohmann::json summary() const;
};

/// Primes dividing the order of the group in the family, ascending.
std::vector<std::int64_t> group_primes(Family f, int n, std::int64_t Q, int epsilon);
std::vector<SweepTask> sweep_tasks(const SweepConfig& cfg);
/// Runs one tuple; never throws.
SweepRow run_task(Family f, const SweepTask& t, bool oracle);
SweepResult run_sweep(const SweepConfig& cfg);

constexpr const char* kCsvHeader = "group,n,p,q,intersection_size,witness_found,witness_label";

}  // namespace pqblocks
