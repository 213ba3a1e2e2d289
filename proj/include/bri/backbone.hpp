#pragma once

#include <vector>

#include "bri/vec3.hpp"

namespace bri {

/// One residue's main-chain atoms: nitrogen, alpha-carbon, carboxyl carbon.
struct Residue {
    Vec3 n;
    Vec3 a;
    Vec3 c;
};

/// Ordered sequence of residues; the geometric object all invariants act on.
using Backbone = std::vector<Residue>;

inline bool is_finite(const Residue& r) {
    return is_finite(r.n) && is_finite(r.a) && is_finite(r.c);
}

inline bool is_finite(const Backbone& s) {
    for (const Residue& r : s)
        if (!is_finite(r)) return false;
    return true;
}

}  // namespace bri
