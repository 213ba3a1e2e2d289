#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "bri/backbone.hpp"
#include "bri/error.hpp"
#include "bri/invariant.hpp"

namespace bri {

/// Partial geometric sum 1 + b + ... + b^(r-1) = (b^r - 1)/(b - 1),
/// evaluated in log-space first so overflow degrades to +inf instead of
/// garbage. Rejects bases at or near 1 where the closed form collapses.
inline double geometric_row_weight(double base, std::size_t r) {
    if (!(base > 0.0) || !std::isfinite(base))
        throw InvalidStats("row-weight base must be positive and finite");
    if (std::abs(base - 1.0) < 1e-12) throw InvalidStats("row-weight base too close to 1");
    if (r == 0) return 0.0;
    if (static_cast<double>(r) * std::log(base) > 700.0)
        return std::numeric_limits<double>::infinity();
    return (std::pow(base, static_cast<double>(r)) - 1.0) / (base - 1.0);
}

/// Extremal bond lengths and triangle heights over a corpus, plus the
/// continuity constants derived from them. The peptide-bond maximum is
/// absent when no chain has two consecutive residues.
struct BondStats {
    double na_min = 0.0;  // |N_i A_i|
    double na_max = 0.0;
    double ac_min = 0.0;  // |A_i C_i|
    double ac_max = 0.0;
    std::optional<double> cn_min;  // |C_i N_{i+1}|
    std::optional<double> cn_max;
    double height_min = 0.0;  // triangle height at C_i
    double height_max = 0.0;
    std::size_t residues = 0;
    std::size_t chains = 0;

    /// L: largest bond length of any type seen.
    double max_bond_length() const {
        return std::max({na_max, ac_max, cn_max.value_or(0.0)});
    }

    /// K: sensitivity of a residue frame to atom perturbations,
    /// 1/l_NA + (2/h)(1 + 2 L_AC / l_NA).
    double frame_sensitivity() const {
        return 1.0 / na_min + (2.0 / height_min) * (1.0 + 2.0 * ac_max / na_min);
    }

    /// Forward Lipschitz constant lambda = 2(1 + 2LK): perturbing every atom
    /// by at most eps moves the invariant by at most lambda * eps.
    double forward_lipschitz() const {
        return 2.0 * (1.0 + 2.0 * max_bond_length() * frame_sensitivity());
    }

    /// Growth base b = 8LK of the row weights and of the inverse constant.
    double hat_base() const { return 8.0 * max_bond_length() * frame_sensitivity(); }

    /// Row weight (b^r - 1)/(b - 1) for 0-based row r.
    double row_weight(std::size_t r) const { return geometric_row_weight(hat_base(), r); }

    /// mu(m) = sqrt(3) (b^(m-1) - 1)/(b - 1): after aligning first frames,
    /// every atom of two chains with invariant distance delta matches within
    /// mu * delta. +inf flags overflow of the geometric factor. For m == 1
    /// the first-triangle bound sqrt(3) is kept.
    double inverse_lipschitz(std::size_t m) const {
        if (m == 0) throw TooShort("inverse constant of an empty chain");
        if (m == 1) return std::sqrt(3.0);
        return std::sqrt(3.0) * row_weight(m - 1);
    }
};

/// Exact min/max scan of bond lengths and triangle heights.
inline BondStats compute_bond_stats(const std::vector<Backbone>& corpus) {
    BondStats st;
    st.na_min = st.ac_min = st.height_min = std::numeric_limits<double>::infinity();
    st.na_max = st.ac_max = st.height_max = 0.0;
    double cn_min = std::numeric_limits<double>::infinity();
    double cn_max = 0.0;
    bool has_cn = false;

    for (const Backbone& s : corpus) {
        if (s.empty()) continue;
        ++st.chains;
        for (std::size_t i = 0; i < s.size(); ++i) {
            const ResidueGeometry g = residue_geometry(s[i].n, s[i].a, s[i].c, i);
            const double na = g.an_length;
            const double ac = norm(s[i].c - s[i].a);
            st.na_min = std::min(st.na_min, na);
            st.na_max = std::max(st.na_max, na);
            st.ac_min = std::min(st.ac_min, ac);
            st.ac_max = std::max(st.ac_max, ac);
            st.height_min = std::min(st.height_min, g.ac_height);
            st.height_max = std::max(st.height_max, g.ac_height);
            if (i + 1 < s.size()) {
                const double cn = distance(s[i + 1].n, s[i].c);
                cn_min = std::min(cn_min, cn);
                cn_max = std::max(cn_max, cn);
                has_cn = true;
            }
            ++st.residues;
        }
    }
    if (st.residues == 0) throw EmptyCorpus("bond statistics of an empty corpus");
    if (has_cn) {
        st.cn_min = cn_min;
        st.cn_max = cn_max;
    }
    return st;
}

inline BondStats compute_bond_stats(const Backbone& s) {
    return compute_bond_stats(std::vector<Backbone>{s});
}

/// Constants frozen from a scan of the bundled fixture corpus
/// (data/fixtures); used whenever no corpus is supplied so that derived
/// bounds are always reproducible. Rerun `bri stats` on the fixtures to
/// regenerate.
inline BondStats default_bond_stats() {
    BondStats st;
    st.na_min = 1.458;
    st.na_max = 1.458;
    st.ac_min = 1.525;
    st.ac_max = 1.525;
    st.cn_min = 1.329;
    st.cn_max = 1.329;
    st.height_min = 1.424;
    st.height_max = 1.424;
    st.residues = 0;
    st.chains = 0;
    return st;
}

/// Row-weighted invariant: row r (0-based, r >= 1) scaled by
/// (b^r - 1)/(b - 1). Bounds the atom-matching error by sqrt(3) times the
/// weighted invariant distance. Exact zeros stay zero even when the weight
/// overflows to +inf.
inline BriMatrix hat_bri(const BriMatrix& b, const BondStats& stats) {
    BriMatrix out = b;
    for (std::size_t r = 1; r < out.rows; ++r) {
        const double w = stats.row_weight(r);
        for (std::size_t c = 0; c < 9; ++c) {
            double& v = out.at(r, c);
            if (v != 0.0) v *= w;
        }
    }
    return out;
}

/// Streaming mean/std/min/max of one invariant column.
struct ColumnStats {
    std::size_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;  // sum of squared deviations (Welford)
    double min = std::numeric_limits<double>::infinity();
    double max = -std::numeric_limits<double>::infinity();

    void add(double v) {
        ++count;
        const double d = v - mean;
        mean += d / static_cast<double>(count);
        m2 += d * (v - mean);
        min = std::min(min, v);
        max = std::max(max, v);
    }

    /// Population standard deviation.
    double stddev() const {
        return count == 0 ? 0.0 : std::sqrt(m2 / static_cast<double>(count));
    }
};

/// Per-column summary over a corpus: trin columns over every residue, the
/// nine invariant columns over rows 1..m-1 of every chain. Accumulation
/// order is the given chain order, so results are bit-stable.
struct CorpusInvariantStats {
    std::array<ColumnStats, 3> trin;
    std::array<ColumnStats, 9> bri;
    std::size_t chains = 0;
};

inline CorpusInvariantStats corpus_invariant_stats(const std::vector<Backbone>& corpus) {
    CorpusInvariantStats out;
    for (const Backbone& s : corpus) {
        if (s.empty()) continue;
        ++out.chains;
        const TrinMatrix t = compute_trin(s);
        for (std::size_t r = 0; r < t.rows; ++r)
            for (std::size_t c = 0; c < 3; ++c) out.trin[c].add(t.at(r, c));
        const BriMatrix b = compute_bri(s);
        for (std::size_t r = 1; r < b.rows; ++r)
            for (std::size_t c = 0; c < 9; ++c) out.bri[c].add(b.at(r, c));
    }
    if (out.chains == 0) throw EmptyCorpus("invariant statistics of an empty corpus");
    return out;
}

}  // namespace bri
