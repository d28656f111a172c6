#include "toricmon/demazure.hpp"

#include <algorithm>
#include <functional>

namespace toricmon {

bool is_demazure_root(const Cone& sigma, const IntVec& e, std::size_t ray_index) {
    if (!is_strongly_convex(sigma))
        throw ValidationError("is_demazure_root: cone contains a line");
    std::vector<IntVec> rays = extreme_rays(sigma);
    if (rays.empty())
        throw ValidationError("is_demazure_root: cone has no rays");
    if (ray_index >= rays.size())
        throw ValidationError("is_demazure_root: ray index out of range");
    if (e.size() != sigma.rank())
        throw ValidationError("is_demazure_root: vector length differs from rank");
    for (std::size_t j = 0; j < rays.size(); ++j) {
        Int p = pairing(e, rays[j]);
        if (j == ray_index ? p != -1 : p < 0)
            return false;
    }
    return true;
}

RootEnumeration enumerate_demazure_roots(const Cone& sigma, const Int& box_bound) {
    if (box_bound < 0)
        throw ValidationError("enumerate_demazure_roots: negative box bound");
    if (!is_strongly_convex(sigma))
        throw ValidationError("enumerate_demazure_roots: cone contains a line");
    std::vector<IntVec> rays = extreme_rays(sigma);
    std::size_t n = sigma.rank();
    RootEnumeration out;
    out.roots_by_ray.resize(rays.size());
    out.finite_by_ray.resize(rays.size());

    for (std::size_t i = 0; i < rays.size(); ++i) {
        // the root set at ray i is finite iff its recession cone
        // {e : <e,p_i> = 0, <e,p_j> >= 0} is trivial, i.e. the cone
        // generated by the p_j together with the line through p_i is all
        // of N_Q
        std::vector<IntVec> gens = rays;
        gens.push_back(vec_neg(rays[i]));
        out.finite_by_ray[i] = dual_cone(Cone(n, sigma.side(), gens)).generators().empty();
    }

    IntVec e(n);
    std::function<void(std::size_t)> scan = [&](std::size_t j) {
        if (j == n) {
            for (std::size_t i = 0; i < rays.size(); ++i) {
                bool ok = true;
                for (std::size_t t = 0; t < rays.size() && ok; ++t) {
                    Int p = pairing(e, rays[t]);
                    if (t == i ? p != -1 : p < 0)
                        ok = false;
                }
                if (ok)
                    out.roots_by_ray[i].push_back(e);
            }
            return;
        }
        for (Int v = -box_bound; v <= box_bound; ++v) {
            e[j] = v;
            scan(j + 1);
        }
    };
    scan(0);
    return out;
}

CompatibleCollection make_compatible_collection(const Cone& sigma, const Face& tau,
                                                const std::vector<IntVec>& e1,
                                                const std::vector<IntVec>& e2) {
    if (tau.parent != sigma)
        throw ValidationError("compatible collection: face does not belong to the cone");
    if (!is_regular_face(tau))
        throw ValidationError("compatible collection: face is not regular");
    std::size_t k = tau.ray_indices.size();
    if (tau.dim != k)
        throw ValidationError("compatible collection: face rays are dependent");
    if (e1.size() != k || e2.size() != k)
        throw ValidationError("compatible collection: need one root pair per face ray");

    std::vector<IntVec> face_rays = tau.rays();
    std::vector<std::string> problems;
    for (std::size_t r = 0; r < k; ++r) {
        for (const IntVec* e : {&e1[r], &e2[r]}) {
            if (!is_demazure_root(sigma, *e, tau.ray_indices[r]))
                problems.push_back("pair " + std::to_string(r) +
                                   ": not a Demazure root at the face ray");
            for (std::size_t i = 0; i < k; ++i) {
                Int p = pairing(face_rays[i], *e);
                if (p != (i == r ? -1 : 0)) {
                    problems.push_back("pair " + std::to_string(r) +
                                       ": pairing with face ray " + std::to_string(i) +
                                       " is " + p.str() + ", need " +
                                       (i == r ? "-1" : "0"));
                }
            }
        }
    }
    if (!problems.empty())
        throw ValidationError(problems);

    CompatibleCollection out{sigma, tau, e1, e2, {}};
    for (std::size_t r = 0; r < k; ++r) {
        IntVec chi = vec_sub(e2[r], e1[r]);
        for (const IntVec& p : face_rays)
            if (pairing(chi, p) != 0)
                throw ValidationError("compatible collection: character leaves the face lattice");
        out.chars.push_back(chi);
    }
    return out;
}

bool is_active(const CompatibleCollection& E) {
    std::size_t k = E.k();
    if (k == 0)
        return true;
    return rank_q(IntMat::from_rows(E.chars)) == k;
}

std::vector<CompatibleCollection> search_compatible_collections(const Cone& sigma,
                                                                const Face& tau,
                                                                const Int& box_bound) {
    if (tau.parent != sigma)
        throw ValidationError("search_compatible_collections: face does not belong to the cone");
    if (!is_regular_face(tau))
        throw ValidationError("search_compatible_collections: face is not regular");
    std::size_t k = tau.ray_indices.size();
    RootEnumeration all = enumerate_demazure_roots(sigma, box_bound);
    std::vector<IntVec> face_rays = tau.rays();

    // per face ray: roots at that ray also vanishing on the other face rays
    std::vector<std::vector<IntVec>> cand(k);
    for (std::size_t r = 0; r < k; ++r) {
        for (const IntVec& e : all.roots_by_ray[tau.ray_indices[r]]) {
            bool ok = true;
            for (std::size_t i = 0; i < k && ok; ++i)
                if (i != r && pairing(face_rays[i], e) != 0)
                    ok = false;
            if (ok)
                cand[r].push_back(e);
        }
        if (cand[r].empty())
            return {};
    }

    std::vector<CompatibleCollection> out;
    std::vector<IntVec> e1(k), e2(k);
    std::function<void(std::size_t)> pick = [&](std::size_t r) {
        if (r == k) {
            out.push_back(make_compatible_collection(sigma, tau, e1, e2));
            return;
        }
        for (const IntVec& a : cand[r])
            for (const IntVec& b : cand[r]) {
                e1[r] = a;
                e2[r] = b;
                pick(r + 1);
            }
    };
    pick(0);
    return out;
}

LaurentPoly derivation_apply(const Cone& sigma, const DemazureRoot& root,
                             const LaurentPoly& f) {
    if (!is_demazure_root(sigma, root.e, root.ray_index))
        throw ValidationError("derivation_apply: not a Demazure root");
    Cone dual = dual_cone(sigma);
    std::vector<IntVec> rays = extreme_rays(sigma);
    const IntVec& p = rays[root.ray_index];
    LaurentPoly out(f.rank());
    for (const auto& [m, c] : f.terms()) {
        if (!contains(dual, m))
            throw ValidationError("derivation_apply: exponent outside the dual semigroup");
        Int deg = pairing(m, p);
        if (deg == 0)
            continue;
        out.add_term(vec_add(m, root.e), c * Rat(deg));
    }
    return out;
}

LaurentPoly ga_action(const Cone& sigma, const DemazureRoot& root, const Rat& s,
                      const LaurentPoly& f) {
    if (!is_demazure_root(sigma, root.e, root.ray_index))
        throw ValidationError("ga_action: not a Demazure root");
    Cone dual = dual_cone(sigma);
    std::vector<IntVec> rays = extreme_rays(sigma);
    const IntVec& p = rays[root.ray_index];
    LaurentPoly out(f.rank());
    for (const auto& [m, c] : f.terms()) {
        if (!contains(dual, m))
            throw ValidationError("ga_action: exponent outside the dual semigroup");
        Int deg = pairing(m, p);
        IntVec exp = m;
        Rat spow(1);
        for (Int i = 0; i <= deg; ++i) {
            out.add_term(exp, c * Rat(binomial(deg, i)) * spow);
            exp = vec_add(exp, root.e);
            spow *= s;
        }
    }
    return out;
}

} // namespace toricmon
