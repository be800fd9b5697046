#pragma once
#include <optional>
#include <string>

#include <json.hpp>

#include "alphapack/algorithms.hpp"
#include "alphapack/core.hpp"
#include "alphapack/oracles.hpp"
#include "alphapack/universal.hpp"

namespace alphapack {

// Instance files:
//   {"kind":"3sp","n":9,"sets":[[0,1,2],...],"seed":0,"planted":{...}}
//   {"kind":"p2","n":6,"edges":[[0,1],...],"seed":0,"planted":{...}}
//   {"kind":"3dm","n1":2,"n2":2,"n3":2,"sets":[[0,2,4],...],"seed":0,...}
// Solutions: {"paths":[[end,mid,end],...]} or {"sets":[indices...]}.

struct LoadedInstance {
    std::string kind;  // "3sp" | "p2" | "3dm"
    Instance instance;
    std::optional<PlantMeta> planted;
    uint64_t seed = 0;
};

nlohmann::json instance_to_json(const LoadedInstance& li);
LoadedInstance instance_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const P2Packing& p);
nlohmann::json solution_to_json(const SetPacking& p);
P2Packing p2_solution_from_json(const nlohmann::json& j);
SetPacking set_solution_from_json(const nlohmann::json& j);

nlohmann::json outcome_to_json(const SolveOutcome& outcome);

nlohmann::json universal_to_json(const UniversalFamily& fam);
UniversalFamily universal_from_json(const nlohmann::json& j);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace alphapack
