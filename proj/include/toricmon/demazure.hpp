#ifndef TORICMON_DEMAZURE_HPP
#define TORICMON_DEMAZURE_HPP

#include "toricmon/cone.hpp"
#include "toricmon/laurent.hpp"

#include <cstddef>
#include <vector>

namespace toricmon {

/// A lattice vector e with <e, p_i> = -1 on the chosen extreme ray of a
/// strongly convex cone and <e, p_j> >= 0 on every other ray. ray_index is
/// 0-based into extreme_rays of the cone.
struct DemazureRoot {
    IntVec e;
    std::size_t ray_index = 0;

    bool operator==(const DemazureRoot& other) const = default;
};

bool is_demazure_root(const Cone& sigma, const IntVec& e, std::size_t ray_index);

/// Roots with max |coordinate| <= box_bound, grouped by ray. The root sets
/// are infinite in general; finite_by_ray[i] reports whether the i-th set
/// is provably finite (trivial recession cone), in which case the box is
/// guaranteed to contain all of it once box_bound is large enough.
struct RootEnumeration {
    std::vector<std::vector<IntVec>> roots_by_ray; // sorted per ray
    std::vector<bool> finite_by_ray;
};

RootEnumeration enumerate_demazure_roots(const Cone& sigma, const Int& box_bound);

/// 2k Demazure roots attached to the k rays of a regular face tau, pairing
/// Kronecker-style with them: <p_i, e_s^{(r)}> = -delta_{ri} for i, r <= k.
/// chars[r] = e2[r] - e1[r] lies in the sublattice orthogonal to tau.
struct CompatibleCollection {
    Cone sigma;
    Face tau;
    std::vector<IntVec> e1, e2; // index r = position in tau.ray_indices
    std::vector<IntVec> chars;

    std::size_t k() const { return e1.size(); }
};

CompatibleCollection make_compatible_collection(const Cone& sigma, const Face& tau,
                                                const std::vector<IntVec>& e1,
                                                const std::vector<IntVec>& e2);

/// Activity criterion: the characters chi_r are linearly independent.
bool is_active(const CompatibleCollection& E);

/// All compatible collections whose roots lie in the coordinate box.
std::vector<CompatibleCollection> search_compatible_collections(const Cone& sigma,
                                                                const Face& tau,
                                                                const Int& box_bound);

/// The locally nilpotent derivation delta_e(chi^m) = <m, p_i> chi^{m+e},
/// extended linearly. Every exponent of f must lie in the dual semigroup.
LaurentPoly derivation_apply(const Cone& sigma, const DemazureRoot& root,
                             const LaurentPoly& f);

/// exp(s * delta_e) applied to f; finite by local nilpotency.
LaurentPoly ga_action(const Cone& sigma, const DemazureRoot& root, const Rat& s,
                      const LaurentPoly& f);

} // namespace toricmon

#endif
