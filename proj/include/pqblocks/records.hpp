#pragma once

#include <string>

#include <json.hpp>

#include "pqblocks/oracle.hpp"
#include "pqblocks/witness_lie.hpp"
#include "pqblocks/witness_sym.hpp"

namespace pqblocks {

nlohmann::json to_json(const Partition& lambda);  ///< parts, decreasing
nlohmann::json to_json(const Symbol& s);          ///< {"top":[...],"bottom":[...]}
nlohmann::json to_json(const IntersectionReport& r);

nlohmann::json sym_record(std::int64_t n, std::int64_t p, std::int64_t q, const SymWitness& w);
nlohmann::json alt_record(std::int64_t n, std::int64_t p, std::int64_t q, const AltWitness& w);
nlohmann::json typeA_record(const TypeAContext& ctx, const TypeAWitness& w);
nlohmann::json typeBC_record(const TypeBCContext& ctx, const TypeBCWitness& w);

/// Label under which the oracle lists the witness.
std::string oracle_label(const SymWitness& w);
std::string oracle_label(const AltWitness& w);
std::string oracle_label(const TypeAWitness& w);
std::string oracle_label(const TypeBCWitness& w);

}  // namespace pqblocks
