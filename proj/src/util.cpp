#include "alphapack/util.hpp"

#include <cstdlib>

namespace alphapack {

Budget Budget::from_env() {
    Budget b;
    if (const char* s = std::getenv("ALPHAPACK_BUDGET")) {
        char* end = nullptr;
        double v = std::strtod(s, &end);
        if (end != s && v > 0) {
            b.verify_pairs = v;
            b.verify_cost = 6.0 * v;
            b.compose_work = v;
        }
    }
    return b;
}

const Budget& budget() {
    static Budget b = Budget::from_env();
    return b;
}

}  // namespace alphapack
