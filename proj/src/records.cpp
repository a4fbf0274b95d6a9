#include "pqblocks/records.hpp"

namespace pqblocks {

using nlohmann::json;

json to_json(const Partition& lambda) { return lambda.parts(); }

json to_json(const Symbol& s) { return {{"top", s.top()}, {"bottom", s.bottom()}}; }

json to_json(const IntersectionReport& r) {
    json j = {{"group", r.group}, {"n", r.n}, {"p", r.p}, {"q", r.q}};
    if (r.Q != 0) j["Q"] = r.Q;
    if (r.epsilon != 0) j["epsilon"] = r.epsilon;
    j["size"] = r.size();
    j["labels"] = r.labels;
    return j;
}

json sym_record(std::int64_t n, std::int64_t p, std::int64_t q, const SymWitness& w) {
    return {{"group", "S"},
            {"n", n},
            {"p", p},
            {"q", q},
            {"partition", w.partition.to_string()},
            {"parts", to_json(w.partition)},
            {"case", to_string(w.case_tag)},
            {"primes_swapped", w.primes_swapped},
            {"degree", degree(w.partition).get_str()}};
}

json alt_record(std::int64_t n, std::int64_t p, std::int64_t q, const AltWitness& w) {
    return {{"group", "A"},
            {"n", n},
            {"p", p},
            {"q", q},
            {"partition", w.partition.to_string()},
            {"parts", to_json(w.partition)},
            {"case", to_string(w.case_tag)},
            {"constituent", to_string(w.constituent)},
            {"primes_swapped", w.primes_swapped},
            {"degree", w.degree.get_str()}};
}

json typeA_record(const TypeAContext& ctx, const TypeAWitness& w) {
    return {{"family", ctx.epsilon == 1 ? "A" : "2A"},
            {"n", ctx.n},
            {"Q", ctx.Q},
            {"epsilon", ctx.epsilon},
            {"p", ctx.p},
            {"q", ctx.q},
            {"label", w.partition.to_string()},
            {"case", to_string(w.case_tag)},
            {"subcase", nullptr},
            {"primes_swapped", w.primes_swapped}};
}

json typeBC_record(const TypeBCContext& ctx, const TypeBCWitness& w) {
    json sub = w.subcase == BCSubcase::None ? json(nullptr) : json(to_string(w.subcase));
    return {{"family", "BC"},
            {"n", ctx.n},
            {"Q", ctx.Q},
            {"p", ctx.p},
            {"q", ctx.q},
            {"label", to_json(w.symbol)},
            {"case", to_string(w.case_tag)},
            {"subcase", sub},
            {"primes_swapped", w.primes_swapped}};
}

std::string oracle_label(const SymWitness& w) { return w.partition.to_string(); }
std::string oracle_label(const AltWitness& w) { return oracle::alt_label(w.partition, w.constituent); }
std::string oracle_label(const TypeAWitness& w) { return w.partition.to_string(); }
std::string oracle_label(const TypeBCWitness& w) { return w.symbol.to_string(); }

}  // namespace pqblocks
