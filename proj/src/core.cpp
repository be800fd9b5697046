#include "alphapack/core.hpp"

#include <set>
#include <sstream>

namespace alphapack {

namespace {

void check_three_sets(const std::vector<ThreeSet>& sets, int n,
                      std::vector<std::string>& out) {
    std::set<ThreeSet> seen;
    for (size_t i = 0; i < sets.size(); i++) {
        const ThreeSet& s = sets[i];
        std::ostringstream tag;
        tag << "set " << i << " {" << s[0] << "," << s[1] << "," << s[2] << "}";
        if (s[0] == s[1] || s[1] == s[2])
            out.push_back(tag.str() + ": set has <3 distinct elements");
        if (!(s[0] <= s[1] && s[1] <= s[2]))
            out.push_back(tag.str() + ": set not stored sorted");
        for (int e : s)
            if (e < 0 || e >= n) out.push_back(tag.str() + ": element out of universe");
        if (!seen.insert(s).second) out.push_back(tag.str() + ": duplicate set");
    }
}

}  // namespace

std::vector<std::string> validate_instance(const Instance& instance) {
    std::vector<std::string> out;
    if (auto* f = std::get_if<ThreeSetFamily>(&instance)) {
        if (f->n < 0) out.push_back("negative universe size");
        check_three_sets(f->sets, f->n, out);
    } else if (auto* f = std::get_if<TripartiteFamily>(&instance)) {
        if (f->n1 < 0 || f->n2 < 0 || f->n3 < 0) out.push_back("negative block size");
        check_three_sets(f->sets, f->n(), out);
        for (size_t i = 0; i < f->sets.size(); i++) {
            const ThreeSet& s = f->sets[i];
            if (s[0] < 0 || s[2] >= f->n()) continue;  // already reported
            if (f->block_of(s[0]) != 0 || f->block_of(s[1]) != 1 || f->block_of(s[2]) != 2) {
                std::ostringstream tag;
                tag << "set " << i << ": not one-per-block";
                out.push_back(tag.str());
            }
        }
    } else if (auto* g = std::get_if<Graph>(&instance)) {
        if (g->n < 0) out.push_back("negative node count");
        std::set<std::pair<int, int>> seen;
        for (auto& [a, b] : g->edges) {
            if (a == b) out.push_back("self-loop at node " + std::to_string(a));
            if (a < 0 || a >= g->n || b < 0 || b >= g->n)
                out.push_back("edge endpoint out of range");
            if (a > b) out.push_back("edge pair not sorted");
            if (!seen.insert({std::min(a, b), std::max(a, b)}).second)
                out.push_back("duplicate edge");
        }
    }
    return out;
}

}  // namespace alphapack
