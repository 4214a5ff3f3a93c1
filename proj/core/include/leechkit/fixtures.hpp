#pragma once

#include "leechkit/pipeline.hpp"

namespace leechkit {

struct Fixture {
    Lattice s;
    GroupAction g;
};

// S = the Leech copy itself, G = {-1}
Fixture fixture_leech_itself();

// S = Z v0 for the first minimal vector v0 of the Leech copy, G = {-1}
Fixture fixture_rank1_min();

// S = a primitive copy of E8 scaled by 2 inside the Leech copy (eight
// norm-4 vectors with the doubled E8 simple-root pairings, saturation
// checked), G = {-1}
Fixture fixture_e8_2();

// Primitive sublattice of the Leech copy spanned by seeded draws from the
// pool of minimal vectors, saturated; rootless automatically (sublattice
// of a minimum-4 lattice).
Lattice random_rootless_sublattice(std::size_t rank, std::uint64_t seed);

// Named fixture lookup for the CLI: leech-itself | rank1-min | e8-2
std::optional<Fixture> fixture_by_name(const std::string& name);

}  // namespace leechkit
