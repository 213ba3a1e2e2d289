#pragma once

// Deterministic random inputs shared by the unit and acceptance suites.
// Everything is seeded explicitly; no global RNG state.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "bri/backbone.hpp"
#include "bri/chain_record.hpp"
#include "bri/geometry.hpp"
#include "bri/vec3.hpp"

namespace briTest {

using Rng = std::mt19937_64;

inline bri::Vec3 unit_direction(Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    for (;;) {
        bri::Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        const double n = bri::norm(v);
        if (n > 1e-6) return v / n;
    }
}

struct BackboneOptions {
    double bond_min = 1.2;
    double bond_max = 1.6;
    double min_height = 0.55;  // keeps residue frames well-conditioned
};

/// Random non-degenerate backbone of m residues: atoms are chained with
/// bond lengths in [bond_min, bond_max]; the C direction is resampled until
/// the residual triangle's height clears min_height.
inline bri::Backbone random_backbone(Rng& rng, std::size_t m,
                                     const BackboneOptions& opt = {}) {
    std::uniform_real_distribution<double> bond(opt.bond_min, opt.bond_max);
    bri::Backbone s;
    s.reserve(m);
    bri::Vec3 prev{0.0, 0.0, 0.0};  // runs over N1,A1,C1,N2,...
    for (std::size_t i = 0; i < m; ++i) {
        const bri::Vec3 n = (i == 0) ? prev : prev + bond(rng) * unit_direction(rng);
        const bri::Vec3 a = n + bond(rng) * unit_direction(rng);
        const bri::Vec3 u = (n - a) / bri::norm(n - a);
        bri::Vec3 c;
        for (;;) {
            const double len = bond(rng);
            const bri::Vec3 ac = len * unit_direction(rng);
            const bri::Vec3 h = ac - bri::dot(ac, u) * u;
            if (bri::norm(h) >= opt.min_height) {
                c = a + ac;
                break;
            }
        }
        s.push_back({n, a, c});
        prev = c;
    }
    return s;
}

inline bri::Backbone random_backbone(std::uint64_t seed, std::size_t m,
                                     const BackboneOptions& opt = {}) {
    Rng rng(seed);
    return random_backbone(rng, m, opt);
}

/// Adds i.i.d. uniform noise in [-eps, eps] to every coordinate.
inline bri::Backbone perturb(Rng& rng, const bri::Backbone& s, double eps) {
    std::uniform_real_distribution<double> noise(-eps, eps);
    bri::Backbone out;
    out.reserve(s.size());
    for (const bri::Residue& r : s) {
        auto jitter = [&](const bri::Vec3& p) {
            return bri::Vec3{p.x + noise(rng), p.y + noise(rng), p.z + noise(rng)};
        };
        out.push_back({jitter(r.n), jitter(r.a), jitter(r.c)});
    }
    return out;
}

/// Wraps a bare backbone in chain metadata for corpus-level tests.
inline bri::ChainRecord make_chain(const std::string& entry, const std::string& chain,
                                   const bri::Backbone& s) {
    bri::ChainRecord rec;
    rec.entry_id = entry;
    rec.chain_id = chain;
    rec.model = 1;
    rec.entity_kind = "polypeptide(L)";
    rec.residues.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        bri::ResidueRecord r;
        r.seq_index = static_cast<int>(i) + 1;
        r.name = "ALA";
        r.n = bri::AtomRecord{s[i].n, 1.0, false};
        r.a = bri::AtomRecord{s[i].a, 1.0, false};
        r.c = bri::AtomRecord{s[i].c, 1.0, false};
        rec.residues.push_back(std::move(r));
    }
    return rec;
}

}  // namespace briTest
