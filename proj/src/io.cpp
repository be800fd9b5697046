#include "alphapack/io.hpp"

#include <fstream>
#include <sstream>

namespace alphapack {

using nlohmann::json;

namespace {

json sets_to_json(const std::vector<ThreeSet>& sets) {
    json arr = json::array();
    for (const auto& s : sets) arr.push_back({s[0], s[1], s[2]});
    return arr;
}

std::vector<ThreeSet> sets_from_json(const json& arr) {
    std::vector<ThreeSet> out;
    for (const auto& j : arr) {
        if (!j.is_array() || j.size() != 3)
            throw std::runtime_error("instance: each set needs exactly 3 elements");
        out.push_back(make_three_set(j[0].get<int>(), j[1].get<int>(), j[2].get<int>()));
    }
    return out;
}

json plant_to_json(const PlantMeta& m, const std::string& kind) {
    json j;
    j["k"] = m.k;
    if (kind == "p2") {
        json paths = json::array();
        for (auto& p : m.paths) paths.push_back({p[0], p[1], p[2]});
        j["paths"] = paths;
    } else {
        j["sets"] = sets_to_json(m.sets);
    }
    return j;
}

PlantMeta plant_from_json(const json& j, const std::string& kind) {
    PlantMeta m;
    m.k = j.value("k", 0);
    if (kind == "p2") {
        for (const auto& p : j.value("paths", json::array()))
            m.paths.push_back({p[0].get<int>(), p[1].get<int>(), p[2].get<int>()});
    } else if (j.contains("sets")) {
        m.sets = sets_from_json(j["sets"]);
    }
    return m;
}

}  // namespace

json instance_to_json(const LoadedInstance& li) {
    json j;
    j["kind"] = li.kind;
    j["seed"] = li.seed;
    if (li.kind == "3sp") {
        const auto& f = std::get<ThreeSetFamily>(li.instance);
        j["n"] = f.n;
        j["sets"] = sets_to_json(f.sets);
    } else if (li.kind == "3dm") {
        const auto& f = std::get<TripartiteFamily>(li.instance);
        j["n1"] = f.n1;
        j["n2"] = f.n2;
        j["n3"] = f.n3;
        j["sets"] = sets_to_json(f.sets);
    } else if (li.kind == "p2") {
        const auto& g = std::get<Graph>(li.instance);
        j["n"] = g.n;
        json edges = json::array();
        for (auto& [a, b] : g.edges) edges.push_back({a, b});
        j["edges"] = edges;
    } else {
        throw std::runtime_error("unknown instance kind: " + li.kind);
    }
    if (li.planted) j["planted"] = plant_to_json(*li.planted, li.kind);
    return j;
}

LoadedInstance instance_from_json(const json& j) {
    LoadedInstance li;
    li.kind = j.at("kind").get<std::string>();
    li.seed = j.value("seed", 0ULL);
    if (li.kind == "3sp") {
        ThreeSetFamily f;
        f.n = j.at("n").get<int>();
        f.sets = sets_from_json(j.value("sets", json::array()));
        li.instance = std::move(f);
    } else if (li.kind == "3dm") {
        TripartiteFamily f;
        f.n1 = j.at("n1").get<int>();
        f.n2 = j.at("n2").get<int>();
        f.n3 = j.at("n3").get<int>();
        f.sets = sets_from_json(j.value("sets", json::array()));
        li.instance = std::move(f);
    } else if (li.kind == "p2") {
        int n = j.at("n").get<int>();
        std::vector<std::pair<int, int>> edges;
        for (const auto& e : j.value("edges", json::array()))
            edges.push_back({e[0].get<int>(), e[1].get<int>()});
        li.instance = make_graph(n, std::move(edges));
    } else {
        throw std::runtime_error("unknown instance kind: " + li.kind);
    }
    if (j.contains("planted")) li.planted = plant_from_json(j["planted"], li.kind);
    return li;
}

json solution_to_json(const P2Packing& p) {
    json paths = json::array();
    for (const auto& path : p.paths) paths.push_back({path.end1, path.mid, path.end2});
    return json{{"paths", paths}};
}

json solution_to_json(const SetPacking& p) {
    return json{{"sets", p.chosen}};
}

P2Packing p2_solution_from_json(const json& j) {
    P2Packing p;
    for (const auto& e : j.at("paths"))
        p.paths.push_back(P2Path{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
    return p;
}

SetPacking set_solution_from_json(const json& j) {
    SetPacking p;
    for (const auto& e : j.at("sets")) p.chosen.push_back(e.get<int>());
    return p;
}

json outcome_to_json(const SolveOutcome& outcome) {
    json j;
    j["procedure"] = outcome.procedure;
    j["k"] = outcome.k;
    j["alpha"] = outcome.alpha;
    j["target"] = outcome.target;
    j["size"] = outcome.size();
    j["met"] = outcome.met;
    j["predicted_base"] = outcome.predicted_base;
    j["elapsed_ms"] = outcome.elapsed_ms;
    if (auto* p = std::get_if<P2Packing>(&outcome.packing))
        j["solution"] = solution_to_json(*p);
    else
        j["solution"] = solution_to_json(std::get<SetPacking>(outcome.packing));
    return j;
}

json universal_to_json(const UniversalFamily& fam) {
    json j;
    j["n"] = fam.n;
    j["k"] = fam.k;
    j["p"] = fam.p;
    j["alpha"] = fam.alpha;
    j["provenance"] = provenance_name(fam.provenance);
    j["verified"] = fam.verified;
    j["seed"] = fam.seed;
    json members = json::array();
    for (const auto& m : fam.members) members.push_back(m.elements());
    j["members"] = members;
    return j;
}

UniversalFamily universal_from_json(const json& j) {
    UniversalFamily fam;
    fam.n = j.at("n").get<int>();
    fam.k = j.at("k").get<int>();
    fam.p = j.at("p").get<int>();
    fam.alpha = j.at("alpha").get<double>();
    fam.verified = j.value("verified", false);
    fam.seed = j.value("seed", 0ULL);
    std::string prov = j.value("provenance", "base-random");
    for (Provenance p : {Provenance::BaseRandom, Provenance::HashLift,
                         Provenance::PartitionCompose})
        if (prov == provenance_name(p)) fam.provenance = p;
    for (const auto& m : j.value("members", json::array())) {
        Bitset bs(fam.n);
        for (const auto& e : m) {
            int v = e.get<int>();
            if (v < 0 || v >= fam.n)
                throw std::runtime_error("universal family: member element out of range");
            bs.set(v);
        }
        fam.members.push_back(std::move(bs));
    }
    return fam;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace alphapack
