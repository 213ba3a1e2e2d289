#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

#include "bri/backbone.hpp"
#include "bri/error.hpp"
#include "bri/vec3.hpp"

namespace bri {

/// Degeneracy guards for residue frames (Angstroms). Real chains are far
/// above these; they only reject corrupt or synthetic input.
inline constexpr double kMinBondLength = 1e-6;
inline constexpr double kMinTriangleHeight = 1e-6;

/// Orthonormality / determinant tolerance for rotation matrices.
inline constexpr double kRotationTol = 1e-12;

/// Row-major 3x3 matrix.
struct Mat3 {
    std::array<double, 9> a{};

    static constexpr Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }

    /// Rotation whose rows are the given (orthonormal) vectors; maps u to
    /// e_x, v to e_y, w to e_z.
    static constexpr Mat3 from_rows(const Vec3& u, const Vec3& v, const Vec3& w) {
        return {{u.x, u.y, u.z, v.x, v.y, v.z, w.x, w.y, w.z}};
    }

    constexpr double operator()(int r, int c) const { return a[3 * r + c]; }
    constexpr double& operator()(int r, int c) { return a[3 * r + c]; }

    constexpr Vec3 operator*(const Vec3& v) const {
        return {a[0] * v.x + a[1] * v.y + a[2] * v.z,
                a[3] * v.x + a[4] * v.y + a[5] * v.z,
                a[6] * v.x + a[7] * v.y + a[8] * v.z};
    }

    constexpr Mat3 operator*(const Mat3& o) const {
        Mat3 r{};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                r(i, j) = (*this)(i, 0) * o(0, j) + (*this)(i, 1) * o(1, j) + (*this)(i, 2) * o(2, j);
        return r;
    }

    constexpr Mat3 transposed() const {
        return {{a[0], a[3], a[6], a[1], a[4], a[7], a[2], a[5], a[8]}};
    }

    constexpr double det() const {
        return a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) +
               a[2] * (a[3] * a[7] - a[4] * a[6]);
    }
};

/// Largest absolute deviation of R^T R from the identity.
inline double orthonormality_defect(const Mat3& r) {
    Mat3 g = r.transposed() * r;
    double worst = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            worst = std::max(worst, std::abs(g(i, j) - (i == j ? 1.0 : 0.0)));
    return worst;
}

/// Proper rigid motion p -> R p + t. The rotation must be proper orthogonal;
/// the constructor enforces R^T R = I and det R = 1 within kRotationTol.
class RigidMotion {
public:
    RigidMotion() : rotation_(Mat3::identity()), translation_{} {}

    RigidMotion(const Mat3& rotation, const Vec3& translation)
        : rotation_(rotation), translation_(translation) {
        if (orthonormality_defect(rotation) > kRotationTol)
            throw Error("rigid motion rotation is not orthogonal");
        if (std::abs(rotation.det() - 1.0) > kRotationTol)
            throw Error("rigid motion rotation is not proper (det != +1)");
        if (!is_finite(translation)) throw Error("rigid motion translation is not finite");
    }

    static RigidMotion identity() { return RigidMotion(); }

    const Mat3& rotation() const { return rotation_; }
    const Vec3& translation() const { return translation_; }

    Vec3 operator()(const Vec3& p) const { return rotation_ * p + translation_; }

    RigidMotion inverse() const {
        Mat3 rt = rotation_.transposed();
        return RigidMotion(rt, -(rt * translation_));
    }

    /// Composition: (f * g)(p) = f(g(p)).
    RigidMotion operator*(const RigidMotion& g) const {
        return RigidMotion(rotation_ * g.rotation_, rotation_ * g.translation_ + translation_);
    }

private:
    Mat3 rotation_;
    Vec3 translation_;
};

/// Orthonormal frame attached to one residue: origin at the alpha-carbon,
/// u along A->N, v the unit in-plane component of A->C, w = u x v.
struct ResidueFrame {
    Vec3 origin;
    Vec3 u;
    Vec3 v;
    Vec3 w;
};

/// Frame plus the three numbers fixing the triangle shape: |AN|, the signed
/// projection of AC on u, and the height of the triangle at C.
struct ResidueGeometry {
    ResidueFrame frame;
    double an_length;
    double ac_along;
    double ac_height;
};

inline ResidueGeometry residue_geometry(const Vec3& n, const Vec3& a, const Vec3& c,
                                        std::size_t index = DegenerateResidue::npos) {
    const Vec3 an = n - a;
    const double an_length = norm(an);
    if (!(an_length >= kMinBondLength))
        throw DegenerateResidue("N and alpha-carbon coincide", index);
    const Vec3 u = an / an_length;

    const Vec3 ac = c - a;
    const double ac_along = dot(ac, u);
    const Vec3 h = ac - ac_along * u;
    const double ac_height = norm(h);
    if (!(ac_height >= kMinTriangleHeight))
        throw DegenerateResidue("backbone atoms are collinear", index);
    const Vec3 v = h / ac_height;

    return {{a, u, v, cross(u, v)}, an_length, ac_along, ac_height};
}

/// Orthonormal frame of the residual triangle N-A-C.
/// Throws DegenerateResidue when |AN| or the triangle height at C falls
/// under the degeneracy guards.
inline ResidueFrame residue_frame(const Vec3& n, const Vec3& a, const Vec3& c,
                                  std::size_t index = DegenerateResidue::npos) {
    return residue_geometry(n, a, c, index).frame;
}

/// Applies f to every atom.
inline Backbone apply_motion(const RigidMotion& f, const Backbone& s) {
    Backbone out;
    out.reserve(s.size());
    for (const Residue& r : s) out.push_back({f(r.n), f(r.a), f(r.c)});
    return out;
}

/// Reflection in the xy-plane: (x, y, z) -> (x, y, -z).
inline Backbone mirror(const Backbone& s) {
    Backbone out;
    out.reserve(s.size());
    for (const Residue& r : s)
        out.push_back({{r.n.x, r.n.y, -r.n.z}, {r.a.x, r.a.y, -r.a.z}, {r.c.x, r.c.y, -r.c.z}});
    return out;
}

/// Moves a backbone into its canonical pose: A1 at the origin, N1 on the
/// positive x-axis, C1 in the upper xy-plane (y >= 0). Returns the posed
/// backbone together with the motion f that achieves it, f(S) = result.
inline std::pair<Backbone, RigidMotion> canonical_pose(const Backbone& s) {
    if (s.empty()) throw TooShort("canonical pose of an empty backbone");
    const ResidueFrame f0 = residue_frame(s[0].n, s[0].a, s[0].c, 0);
    const Mat3 r = Mat3::from_rows(f0.u, f0.v, f0.w);
    RigidMotion f(r, -(r * s[0].a));
    return {apply_motion(f, s), f};
}

/// Uniformly random rotation (quaternion on the 3-sphere) plus a translation
/// uniform in [-box_half, box_half]^3. Deterministic per seed.
inline RigidMotion random_motion(std::uint64_t seed, double box_half = 10.0) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);

    double q0, q1, q2, q3, n2;
    do {
        q0 = gauss(rng);
        q1 = gauss(rng);
        q2 = gauss(rng);
        q3 = gauss(rng);
        n2 = q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3;
    } while (n2 < 1e-12);
    const double inv = 1.0 / std::sqrt(n2);
    q0 *= inv;
    q1 *= inv;
    q2 *= inv;
    q3 *= inv;

    Mat3 r{{1 - 2 * (q2 * q2 + q3 * q3), 2 * (q1 * q2 - q0 * q3), 2 * (q1 * q3 + q0 * q2),
            2 * (q1 * q2 + q0 * q3), 1 - 2 * (q1 * q1 + q3 * q3), 2 * (q2 * q3 - q0 * q1),
            2 * (q1 * q3 - q0 * q2), 2 * (q2 * q3 + q0 * q1), 1 - 2 * (q1 * q1 + q2 * q2)}};

    std::uniform_real_distribution<double> shift(-box_half, box_half);
    const double tx = shift(rng), ty = shift(rng), tz = shift(rng);
    return RigidMotion(r, {tx, ty, tz});
}

/// Rotation angle in radians, in [0, pi].
inline double rotation_angle(const Mat3& r) {
    const double t = (r(0, 0) + r(1, 1) + r(2, 2) - 1.0) / 2.0;
    return std::acos(std::clamp(t, -1.0, 1.0));
}

}  // namespace bri
