#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "clawpoly/group_model.hpp"
#include "clawpoly/transform.hpp"
#include "clawpoly/vrep.hpp"

namespace clawpoly::sampling {

using Rng = std::mt19937_64;

/// Uniform Z2 x Z2 labeling with identity sum (last element forced).
inline Labeling random_vertex_labeling(std::size_t m, Rng& rng)
{
    const auto spec = GroupSpec::z2z2();
    std::uniform_int_distribution<int> bit(0, 1);
    std::vector<GroupElement> els;
    int a = 0, b = 0;
    for (std::size_t j = 0; j + 1 < m; ++j) {
        els.push_back(spec.element({bit(rng), bit(rng)}));
        a += els.back()[0];
        b += els.back()[1];
    }
    els.push_back(spec.element({a, b}));
    return Labeling(spec, std::move(els));
}

/// Positive rational weights summing to one, denominators bounded by
/// count * max_weight.
inline std::vector<Rational> random_weights(std::size_t count, Rng& rng, int max_weight = 12)
{
    std::uniform_int_distribution<int> w(1, max_weight);
    std::vector<Rational> out(count);
    Rational total = 0;
    for (auto& q : out) {
        q = w(rng);
        total += q;
    }
    for (auto& q : out)
        q /= total;
    return out;
}

inline LeafMatrix combine(const std::vector<LeafMatrix>& pts, const std::vector<Rational>& weights)
{
    LeafMatrix out(pts.front().rows(), pts.front().cols());
    for (std::size_t k = 0; k < pts.size(); ++k)
        for (std::size_t i = 0; i < out.rows(); ++i)
            for (std::size_t j = 0; j < out.cols(); ++j)
                out(i, j) += weights[k] * pts[k](i, j);
    return out;
}

/// Convex combination of `count` random vertices of Delta'(m).
inline LeafMatrix random_combination(std::size_t m, std::size_t count, Rng& rng)
{
    std::vector<LeafMatrix> pts;
    for (std::size_t k = 0; k < count; ++k)
        pts.push_back(apply_f(labeling_to_matrix(random_vertex_labeling(m, rng))));
    return combine(pts, random_weights(count, rng));
}

/// A point on the segment between the image of a random vertex u and of a
/// vertex w obtained from u by adding identity-summing increments to a few
/// leaves. Two leaves with the same increment give a P1 pattern, three leaves
/// with the three distinct increments a P2 pattern; `changed` >= 4 gives
/// random increments.
inline LeafMatrix random_segment_point(std::size_t m, std::size_t changed, Rng& rng)
{
    const auto spec = GroupSpec::z2z2();
    const Labeling u = random_vertex_labeling(m, rng);
    changed = std::min(changed, m);
    std::vector<std::size_t> leaves(m);
    std::iota(leaves.begin(), leaves.end(), 0);
    std::shuffle(leaves.begin(), leaves.end(), rng);
    leaves.resize(changed);

    std::vector<GroupElement> inc;
    const auto nonid = spec.embedding_order();
    std::uniform_int_distribution<std::size_t> pick(0, 2);
    if (changed == 2) {
        const auto h = nonid[pick(rng)];
        inc = {h, h};
    } else if (changed == 3) {
        inc = nonid;
        std::shuffle(inc.begin(), inc.end(), rng);
    } else {
        GroupElement s = identity(spec);
        for (std::size_t k = 0; k + 1 < changed; ++k) {
            inc.push_back(nonid[pick(rng)]);
            s = add(spec, s, inc.back());
        }
        inc.push_back(s);
    }
    std::vector<GroupElement> w = u.elements;
    for (std::size_t k = 0; k < changed; ++k)
        w[leaves[k]] = add(spec, w[leaves[k]], inc[k]);

    const LeafMatrix pu = apply_f(labeling_to_matrix(u));
    const LeafMatrix pw = apply_f(labeling_to_matrix(Labeling(spec, std::move(w))));
    const auto weights = random_weights(2, rng);
    return combine({pu, pw}, weights);
}

/// Mixed sampler over Delta'(m): half generic combinations of 2-5 vertices,
/// half structured segment points that land on shared pseudo-facets.
inline LeafMatrix sample_delta_prime_point(std::size_t m, Rng& rng)
{
    std::uniform_int_distribution<int> mode(0, 9);
    const int k = mode(rng);
    if (k < 5) {
        std::uniform_int_distribution<std::size_t> count(2, 5);
        return random_combination(m, count(rng), rng);
    }
    if (k < 7)
        return random_segment_point(m, 2, rng);
    if (k < 9)
        return random_segment_point(m, 3, rng);
    std::uniform_int_distribution<std::size_t> changed(4, std::max<std::size_t>(4, m));
    return random_segment_point(m, changed(rng), rng);
}

/// Random rational 3 x m matrix with entries in [lo, hi] on a grid of step
/// 1/den; used for isomorphism checks that need points outside the polytope.
inline LeafMatrix random_matrix(std::size_t rows, std::size_t m, Rng& rng, long lo_num, long hi_num, long den)
{
    std::uniform_int_distribution<long> num(lo_num, hi_num);
    LeafMatrix out(rows, m);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            out(i, j) = Rational(num(rng), den);
            out(i, j).canonicalize();
        }
    return out;
}

} // namespace clawpoly::sampling
