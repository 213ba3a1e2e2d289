#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bri/backbone.hpp"
#include "bri/error.hpp"
#include "bri/vec3.hpp"

namespace bri {

struct AtomRecord {
    Vec3 pos;
    double occupancy = 1.0;
    bool alt_loc = false;  // an alternate-location indicator was present
};

/// One residue as deposited: any of the three main atoms may be missing.
struct ResidueRecord {
    int seq_index = 0;
    std::string name;  // 3-letter code
    std::optional<AtomRecord> n, a, c;

    bool complete() const { return n && a && c; }
};

/// A parsed chain with provenance. `entity_kind` is the polymer type of the
/// chain's entity ("polypeptide(L)" etc.), empty when the file gives none.
struct ChainRecord {
    std::string entry_id;
    std::string chain_id;
    int model = 1;
    std::string entity_kind;
    std::vector<ResidueRecord> residues;

    bool complete() const {
        for (const ResidueRecord& r : residues)
            if (!r.complete()) return false;
        return !residues.empty();
    }

    /// Geometric backbone; requires every residue complete.
    Backbone backbone() const {
        Backbone s;
        s.reserve(residues.size());
        for (const ResidueRecord& r : residues) {
            if (!r.complete())
                throw Error("chain " + entry_id + ":" + chain_id +
                            " has incomplete residues; clean it first");
            s.push_back({r.n->pos, r.a->pos, r.c->pos});
        }
        return s;
    }

    std::vector<std::string> sequence() const {
        std::vector<std::string> seq;
        seq.reserve(residues.size());
        for (const ResidueRecord& r : residues) seq.push_back(r.name);
        return seq;
    }
};

}  // namespace bri
