#pragma once

#include <cmath>
#include <cstddef>

#include "bri/backbone.hpp"
#include "bri/error.hpp"
#include "bri/geometry.hpp"
#include "bri/invariant.hpp"

namespace bri {

/// Rebuilds atom positions from an invariant matrix, in canonical pose:
/// A1 at the origin, N1 on the positive x-axis, C1 in the upper xy-plane.
/// Atoms of row i are placed by adding the stored bond vectors expressed in
/// the frame of residue i-1; that frame is recomputed from the atoms just
/// placed, exactly mirroring the forward computation.
///
/// Throws MalformedMatrix when row 0 breaks the zero pattern or any entry is
/// non-finite, DegenerateRow when a placed residue cannot support a frame.
inline Backbone reconstruct(const BriMatrix& b) {
    if (b.rows == 0) throw MalformedMatrix("invariant matrix has no rows");
    for (double v : b.data)
        if (!std::isfinite(v)) throw MalformedMatrix("invariant matrix has non-finite entries");
    for (std::size_t c : BriMatrix::kFirstRowZeroCols)
        if (b.at(0, c) != 0.0)
            throw MalformedMatrix("first row must be zero outside columns xN, xC, yC");

    const double xn = b.at(0, 0);
    const double xc = b.at(0, 6);
    const double yc = b.at(0, 7);
    if (!(xn >= kMinBondLength) || !(yc >= kMinTriangleHeight))
        throw DegenerateRow("first row does not define a valid triangle", 0);

    Backbone s;
    s.reserve(b.rows);
    s.push_back({{xn, 0.0, 0.0}, {0.0, 0.0, 0.0}, {xc, yc, 0.0}});

    for (std::size_t i = 1; i < b.rows; ++i) {
        ResidueFrame f;
        try {
            f = residue_frame(s[i - 1].n, s[i - 1].a, s[i - 1].c, i - 1);
        } catch (const DegenerateResidue&) {
            throw DegenerateRow("placed atoms cannot support a frame", i - 1);
        }
        const Vec3 n = s[i - 1].c + b.at(i, 0) * f.u + b.at(i, 1) * f.v + b.at(i, 2) * f.w;
        const Vec3 a = n + b.at(i, 3) * f.u + b.at(i, 4) * f.v + b.at(i, 5) * f.w;
        const Vec3 c = a + b.at(i, 6) * f.u + b.at(i, 7) * f.v + b.at(i, 8) * f.w;
        s.push_back({n, a, c});
    }
    return s;
}

}  // namespace bri
