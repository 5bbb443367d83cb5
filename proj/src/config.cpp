#include "planecomp/config.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>

namespace planecomp {

int degree_bound() {
    const char* env = std::getenv("PLANECOMP_DEGREE_BOUND");
    if (!env) return kDefaultDegreeBound;
    int value = 0;
    auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), value);
    if (ec != std::errc() || *ptr != '\0' || value <= 0) return kDefaultDegreeBound;
    return value;
}

}  // namespace planecomp
