#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "bri/backbone.hpp"
#include "bri/error.hpp"
#include "bri/geometry.hpp"

namespace bri {

/// m x 3 matrix of residual-triangle shapes. Row i holds |A_i N_i|, the
/// signed projection of A_i C_i on the AN direction, and the triangle
/// height at C_i. Columns are named xAN, xAC, yAC.
struct TrinMatrix {
    std::size_t rows = 0;
    std::vector<double> data;  // rows x 3, row-major

    static constexpr std::array<const char*, 3> kColumnNames = {"xAN", "xAC", "yAC"};

    double at(std::size_t r, std::size_t c) const { return data[3 * r + c]; }
    double& at(std::size_t r, std::size_t c) { return data[3 * r + c]; }
};

/// m x 9 matrix of bond-vector coordinates in the previous residue's frame.
/// Column order is fixed: the C_{i-1}->N_i triplet, then N_i->A_i, then
/// A_i->C_i, each as (x, y, z). Row 0 packs the first triangle's three
/// numbers into columns xN, xC, yC; its other six columns are exactly zero.
struct BriMatrix {
    std::size_t rows = 0;
    std::vector<double> data;  // rows x 9, row-major

    static constexpr std::size_t kCols = 9;
    static constexpr std::array<const char*, 9> kColumnNames = {"xN", "yN", "zN", "xA", "yA",
                                                                "zA", "xC", "yC", "zC"};
    /// Columns of row 0 that are zero by convention.
    static constexpr std::array<std::size_t, 6> kFirstRowZeroCols = {1, 2, 3, 4, 5, 8};

    double at(std::size_t r, std::size_t c) const { return data[kCols * r + c]; }
    double& at(std::size_t r, std::size_t c) { return data[kCols * r + c]; }

    /// Vector form of length 9m - 6: row 0 contributes its three packed
    /// values, every later row all nine.
    std::vector<double> flattened() const {
        if (rows == 0) return {};
        std::vector<double> out;
        out.reserve(9 * rows - 6);
        out.push_back(at(0, 0));
        out.push_back(at(0, 6));
        out.push_back(at(0, 7));
        out.insert(out.end(), data.begin() + kCols, data.end());
        return out;
    }
};

/// Nine column averages of BRI rows 1..m-1 (the first row excluded).
using BrainVector = std::array<double, 9>;

namespace detail {

inline std::vector<ResidueGeometry> residue_geometries(const Backbone& s) {
    std::vector<ResidueGeometry> g;
    g.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i)
        g.push_back(residue_geometry(s[i].n, s[i].a, s[i].c, i));
    return g;
}

}  // namespace detail

/// Per-residue triangular invariant.
inline TrinMatrix compute_trin(const Backbone& s) {
    if (s.empty()) throw TooShort("trin of an empty backbone");
    TrinMatrix t;
    t.rows = s.size();
    t.data.resize(3 * s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        const ResidueGeometry g = residue_geometry(s[i].n, s[i].a, s[i].c, i);
        t.at(i, 0) = g.an_length;
        t.at(i, 1) = g.ac_along;
        t.at(i, 2) = g.ac_height;
    }
    return t;
}

/// The complete invariant under rigid motion. Linear time in the number of
/// residues; throws DegenerateResidue (with index) on ill-formed triangles.
inline BriMatrix compute_bri(const Backbone& s) {
    if (s.empty()) throw TooShort("invariant of an empty backbone");
    BriMatrix b;
    b.rows = s.size();
    b.data.assign(9 * s.size(), 0.0);

    ResidueGeometry prev = residue_geometry(s[0].n, s[0].a, s[0].c, 0);
    b.at(0, 0) = prev.an_length;
    b.at(0, 6) = prev.ac_along;
    b.at(0, 7) = prev.ac_height;

    for (std::size_t i = 1; i < s.size(); ++i) {
        const ResidueFrame& f = prev.frame;
        const Vec3 cn = s[i].n - s[i - 1].c;
        const Vec3 na = s[i].a - s[i].n;
        const Vec3 ac = s[i].c - s[i].a;
        b.at(i, 0) = dot(cn, f.u);
        b.at(i, 1) = dot(cn, f.v);
        b.at(i, 2) = dot(cn, f.w);
        b.at(i, 3) = dot(na, f.u);
        b.at(i, 4) = dot(na, f.v);
        b.at(i, 5) = dot(na, f.w);
        b.at(i, 6) = dot(ac, f.u);
        b.at(i, 7) = dot(ac, f.v);
        b.at(i, 8) = dot(ac, f.w);
        prev = residue_geometry(s[i].n, s[i].a, s[i].c, i);
    }
    return b;
}

/// Invariant of the mirror image: all z-columns change sign.
inline BriMatrix mirror_bri(const BriMatrix& b) {
    BriMatrix out = b;
    for (std::size_t r = 0; r < out.rows; ++r)
        for (std::size_t c : {2u, 5u, 8u}) {
            double& v = out.at(r, c);
            if (v != 0.0) v = -v;  // keep exact zeros (planar chains) at +0
        }
    return out;
}

/// Maximum absolute difference over all corresponding entries. A metric:
/// identity, symmetry and the triangle inequality hold exactly.
inline double linf(const BriMatrix& b1, const BriMatrix& b2) {
    if (b1.rows != b2.rows)
        throw LengthMismatch("invariant matrices have " + std::to_string(b1.rows) + " and " +
                             std::to_string(b2.rows) + " rows; compare equal lengths only");
    double worst = 0.0;
    for (std::size_t i = 0; i < b1.data.size(); ++i)
        worst = std::max(worst, std::abs(b1.data[i] - b2.data[i]));
    return worst;
}

inline double linf(const BrainVector& a, const BrainVector& b) {
    double worst = 0.0;
    for (std::size_t j = 0; j < 9; ++j) worst = std::max(worst, std::abs(a[j] - b[j]));
    return worst;
}

/// Column averages of rows 1..m-1. Requires at least two rows.
inline BrainVector compute_brain(const BriMatrix& b) {
    if (b.rows < 2) throw TooShort("column averages need at least two rows");
    BrainVector out{};
    for (std::size_t r = 1; r < b.rows; ++r)
        for (std::size_t c = 0; c < 9; ++c) out[c] += b.at(r, c);
    const double inv = 1.0 / static_cast<double>(b.rows - 1);
    for (double& v : out) v *= inv;
    return out;
}

/// Invariant of the subchain of `count` residues starting at 0-based index
/// `first`, assembled from the full chain's matrices without touching atom
/// coordinates. Row 0 of the result comes from the trin row of the first
/// extracted residue; later rows are copied verbatim.
inline BriMatrix subchain_bri(const BriMatrix& b, const TrinMatrix& t, std::size_t first,
                              std::size_t count) {
    if (b.rows != t.rows) throw LengthMismatch("invariant and trin row counts differ");
    if (count < 1 || first >= b.rows || count > b.rows - first)
        throw IndexOutOfRange("subchain [" + std::to_string(first) + ", " +
                              std::to_string(first + count) + ") exceeds " +
                              std::to_string(b.rows) + " rows");

    BriMatrix out;
    out.rows = count;
    if (first == 0) {
        out.data.assign(b.data.begin(), b.data.begin() + 9 * count);
        return out;
    }
    out.data.assign(9 * count, 0.0);
    out.at(0, 0) = t.at(first, 0);
    out.at(0, 6) = t.at(first, 1);
    out.at(0, 7) = t.at(first, 2);
    std::copy(b.data.begin() + 9 * (first + 1), b.data.begin() + 9 * (first + count),
              out.data.begin() + 9);
    return out;
}

}  // namespace bri
