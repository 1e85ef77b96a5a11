#include "prosodiff/rng.hpp"

namespace prosodiff {

namespace {
RngStream g_rng(0);
}

RngStream& global_rng() { return g_rng; }

void seed_all(uint64_t seed) { g_rng = RngStream(seed); }

}  // namespace prosodiff
