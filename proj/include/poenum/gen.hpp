#ifndef POENUM_GEN_HPP
#define POENUM_GEN_HPP

#include <cstdint>
#include <random>

#include "poenum/graph.hpp"

namespace poe {

using Rng = std::mt19937_64;

// uniform_int_distribution varies across standard libraries; this keeps
// generated instances byte-stable for a fixed seed.
inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) {
    return rng() % n;
}

inline double rand_unit(Rng& rng) {
    return (double)(rng() >> 11) * (1.0 / 9007199254740992.0);
}

MultiGraph gen_cycle(int n);
MultiGraph gen_star(int n);               // vertex 0 is the center
MultiGraph gen_path(int n);
MultiGraph gen_complete(int n);
MultiGraph gen_tree(int n, Rng& rng);     // random attachment tree
MultiGraph gen_gnp(int n, double p, Rng& rng);
MultiGraph gen_chordal(int n, int k, Rng& rng);  // each vertex attached to a clique
MultiGraph gen_multi(int n, int m, Rng& rng);    // connected, parallel edges allowed

// Connected simple graph: random tree plus `extra` distinct chords.
MultiGraph gen_connected(int n, int extra, Rng& rng);
// Few hub vertices carry all edges, so matchings stay polynomial in count.
MultiGraph gen_hub(int n, int hubs, Rng& rng);
// Path spine with a few pendant vertices.
MultiGraph gen_caterpillar(int n, int hairs, Rng& rng);
// Randomly labeled cycle plus a chord between antipodal positions: two long
// cycles, so the spanning-tree count grows like n^2, not exponentially.
MultiGraph gen_theta(int n, Rng& rng);

}  // namespace poe

#endif
