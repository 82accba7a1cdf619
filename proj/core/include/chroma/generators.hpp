#pragma once

#include <cstdint>

#include "chroma/approx.hpp"
#include "chroma/coloring.hpp"
#include "chroma/lattice.hpp"
#include "chroma/patterns.hpp"
#include "chroma/rng.hpp"

namespace chroma {

// Connected set of `size` vertices grown from a random seed vertex inside `within`
// (the whole ambient when empty).
VertexSet random_connected_set(const LatticeGraph& g, std::size_t size, Rng& rng, const VertexSet& within = {});

// Regular set of the given parity: inner-parity vertices at distance >= margin
// from the face layer are kept with probability `density`, closed under ^+,
// and isolated complement vertices are absorbed.
VertexSet random_regular_set(const LatticeGraph& g, Rng& rng, SetParity parity = SetParity::Odd,
                             double density = 0.3, int margin = 2);

// Heat-bath colouring of Λ with a P0 boundary after `sweeps` sweeps from a pure
// P0 start; the exterior is extended in the P0 pattern.
Coloring random_coloring(const LatticeGraph& g, const VertexSet& domain, const Pattern& p0, long long sweeps,
                         std::uint64_t seed);

}  // namespace chroma
