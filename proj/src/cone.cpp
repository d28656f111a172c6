#include "toricmon/cone.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace toricmon {

Side opposite(Side s) {
    return s == Side::M ? Side::N : Side::M;
}

Cone::Cone(std::size_t rank, Side side, std::vector<IntVec> generators)
    : rank_(rank), side_(side) {
    if (rank == 0)
        throw ValidationError("cone: rank must be positive");
    std::set<IntVec> canon;
    for (const IntVec& g : generators) {
        if (g.size() != rank)
            throw ValidationError("cone: generator length differs from rank");
        if (is_zero_vec(g))
            throw ValidationError("cone: zero generator");
        canon.insert(primitive_part(g));
    }
    generators_.assign(canon.begin(), canon.end());
}

std::size_t Cone::dim() const {
    if (generators_.empty())
        return 0;
    return rank_q(IntMat::from_rows(generators_));
}

namespace {

/// Enumerates size-k index subsets of {0..n-1} in lexicographic order.
void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
    if (k > n)
        return;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        fn(idx);
        std::size_t i = k;
        while (i > 0) {
            --i;
            if (idx[i] + (k - i) < n) {
                ++idx[i];
                for (std::size_t j = i + 1; j < k; ++j)
                    idx[j] = idx[j - 1] + 1;
                break;
            }
            if (i == 0)
                return;
        }
        if (k == 0)
            return;
    }
}

bool nonneg_on_all(const IntVec& w, const std::vector<IntVec>& gens) {
    for (const IntVec& g : gens)
        if (pairing(w, g) < 0)
            return false;
    return true;
}

} // namespace

Cone dual_cone(const Cone& c) {
    std::size_t n = c.rank();
    const std::vector<IntVec>& gens = c.generators();
    if (gens.empty()) {
        std::vector<IntVec> all;
        for (std::size_t i = 0; i < n; ++i) {
            IntVec e(n, 0);
            e[i] = 1;
            all.push_back(e);
            all.push_back(vec_neg(e));
        }
        return Cone(n, opposite(c.side()), std::move(all));
    }

    std::size_t s = rank_q(IntMat::from_rows(gens));
    std::vector<IntVec> lin = kernel_basis(IntMat::from_rows(gens));

    std::set<IntVec> rays;
    for_each_subset(gens.size(), s - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVec> rows;
        for (std::size_t i : idx)
            rows.push_back(gens[i]);
        for (const IntVec& l : lin)
            rows.push_back(l);
        IntMat m = rows.empty() ? IntMat(0, n) : IntMat::from_rows(rows);
        if (rows.empty() ? n != 1 : rank_q(m) != n - 1)
            return;
        std::vector<IntVec> ker = kernel_basis(m);
        if (ker.size() != 1)
            return;
        if (nonneg_on_all(ker[0], gens))
            rays.insert(ker[0]);
        IntVec neg = vec_neg(ker[0]);
        if (nonneg_on_all(neg, gens))
            rays.insert(neg);
    });

    std::vector<IntVec> out(rays.begin(), rays.end());
    for (const IntVec& l : lin) {
        out.push_back(l);
        out.push_back(vec_neg(l));
    }
    return Cone(n, opposite(c.side()), std::move(out));
}

bool is_strongly_convex(const Cone& c) {
    if (c.generators().empty())
        return true;
    return rank_q(IntMat::from_rows(dual_cone(c).generators())) == c.rank();
}

std::vector<IntVec> lineality_basis(const Cone& c) {
    if (c.generators().empty())
        return {};
    return kernel_basis(IntMat::from_rows(dual_cone(c).generators()));
}

std::vector<IntVec> extreme_rays(const Cone& c) {
    if (!is_strongly_convex(c))
        throw ValidationError("extreme_rays: cone contains a line");
    const std::vector<IntVec>& gens = c.generators();
    if (gens.empty())
        return {};
    std::vector<IntVec> duals = dual_cone(c).generators();
    std::vector<IntVec> out;
    for (const IntVec& g : gens) {
        std::vector<IntVec> active;
        for (const IntVec& d : duals)
            if (pairing(d, g) == 0)
                active.push_back(d);
        std::size_t r = active.empty() ? 0 : rank_q(IntMat::from_rows(active));
        if (r == c.rank() - 1)
            out.push_back(g);
    }
    return out;
}

bool contains(const Cone& c, const IntVec& v) {
    if (v.size() != c.rank())
        throw ValidationError("contains: vector length differs from cone rank");
    Cone d = dual_cone(c);
    return nonneg_on_all(v, d.generators());
}

namespace {

std::vector<IntVec> face_ray_set(const std::vector<IntVec>& rays,
                                 const std::vector<std::size_t>& indices) {
    std::vector<IntVec> out;
    for (std::size_t i : indices)
        out.push_back(rays[i]);
    return out;
}

} // namespace

std::vector<IntVec> Face::rays() const {
    return face_ray_set(extreme_rays(parent), ray_indices);
}

Face make_face(const Cone& parent, std::vector<std::size_t> ray_indices) {
    std::vector<IntVec> rays = extreme_rays(parent);
    std::sort(ray_indices.begin(), ray_indices.end());
    if (std::adjacent_find(ray_indices.begin(), ray_indices.end()) != ray_indices.end())
        throw ValidationError("make_face: duplicate ray index");
    for (std::size_t i : ray_indices)
        if (i >= rays.size())
            throw ValidationError("make_face: ray index out of range");

    std::vector<IntVec> duals = dual_cone(parent).generators();
    IntVec witness(parent.rank(), 0);
    for (const IntVec& d : duals) {
        bool vanishes = true;
        for (std::size_t i : ray_indices)
            if (pairing(d, rays[i]) != 0) {
                vanishes = false;
                break;
            }
        if (vanishes)
            witness = vec_add(witness, d);
    }
    for (std::size_t j = 0; j < rays.size(); ++j) {
        bool selected = std::binary_search(ray_indices.begin(), ray_indices.end(), j);
        Int p = pairing(witness, rays[j]);
        if (selected && p != 0)
            throw ValidationError("make_face: internal witness error");
        if (!selected && p <= 0)
            throw ValidationError("make_face: selected rays do not span a face");
    }
    std::vector<IntVec> sel = face_ray_set(rays, ray_indices);
    std::size_t d = sel.empty() ? 0 : rank_q(IntMat::from_rows(sel));
    return Face{parent, std::move(ray_indices), std::move(witness), d};
}

std::vector<Face> faces_of_dimension(const Cone& c, std::size_t d) {
    if (d > c.dim())
        throw ValidationError("faces_of_dimension: dimension exceeds cone dimension");
    std::vector<IntVec> rays = extreme_rays(c);
    std::vector<IntVec> duals = dual_cone(c).generators();
    if (duals.size() > 20)
        throw ValidationError("faces_of_dimension: too many facets for subset enumeration");

    std::set<std::vector<std::size_t>> seen;
    std::vector<Face> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << duals.size()); ++mask) {
        std::vector<std::size_t> sel;
        for (std::size_t j = 0; j < rays.size(); ++j) {
            bool in_face = true;
            for (std::size_t b = 0; b < duals.size() && in_face; ++b)
                if ((mask >> b) & 1)
                    if (pairing(duals[b], rays[j]) != 0)
                        in_face = false;
            if (in_face)
                sel.push_back(j);
        }
        if (!seen.insert(sel).second)
            continue;
        std::vector<IntVec> sel_rays = face_ray_set(rays, sel);
        std::size_t fd = sel_rays.empty() ? 0 : rank_q(IntMat::from_rows(sel_rays));
        if (fd == d)
            out.push_back(make_face(c, sel));
    }
    std::sort(out.begin(), out.end(),
              [](const Face& a, const Face& b) { return a.ray_indices < b.ray_indices; });
    return out;
}

bool is_regular_face(const Face& f) {
    if (f.ray_indices.empty())
        return true;
    SmithResult s = smith_normal_form(IntMat::from_rows(f.rays()));
    std::vector<Int> inv = s.invariant_factors();
    if (inv.size() != f.ray_indices.size())
        return false;
    for (const Int& x : inv)
        if (x != 1)
            return false;
    return true;
}

namespace {

/// Lattice points of the closed parallelepiped spanned by the rows of b,
/// found by scanning the coordinate bounding box and solving for the
/// barycentric coordinates exactly.
void parallelepiped_points(const std::vector<IntVec>& b, std::set<IntVec>& out, Int& box_used) {
    std::size_t n = b[0].size();
    std::vector<Int> lo(n, 0), hi(n, 0);
    for (std::size_t j = 0; j < n; ++j)
        for (const IntVec& v : b) {
            if (v[j] > 0)
                hi[j] += v[j];
            else
                lo[j] += v[j];
        }
    for (std::size_t j = 0; j < n; ++j) {
        box_used = std::max(box_used, abs_int(lo[j]));
        box_used = std::max(box_used, abs_int(hi[j]));
    }

    RatMat cols(n, b.size());
    for (std::size_t i = 0; i < b.size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            cols.at(j, i) = Rat(b[i][j]);

    IntVec x(n);
    std::function<void(std::size_t)> scan = [&](std::size_t j) {
        if (j == n) {
            RatVec rhs(n);
            for (std::size_t t = 0; t < n; ++t)
                rhs[t] = Rat(x[t]);
            auto lambda = solve_rational(cols, rhs);
            if (!lambda)
                return;
            // solve_rational zeroes free variables, so verify the residual
            for (std::size_t t = 0; t < n; ++t) {
                Rat acc(0);
                for (std::size_t i = 0; i < b.size(); ++i)
                    acc += (*lambda)[i] * Rat(b[i][t]);
                if (acc != Rat(x[t]))
                    return;
            }
            for (const Rat& l : *lambda)
                if (l < 0 || l > 1)
                    return;
            out.insert(x);
            return;
        }
        for (Int v = lo[j]; v <= hi[j]; ++v) {
            x[j] = v;
            scan(j + 1);
        }
    };
    scan(0);
}

} // namespace

HilbertBasis hilbert_basis(const Cone& c, std::optional<Int> degree_bound) {
    std::size_t n = c.rank();
    HilbertBasis hb;
    if (c.generators().empty())
        return hb;

    std::vector<IntVec> lin = lineality_basis(c);
    if (!lin.empty()) {
        // split off the lineality lattice with an adapted complement, so
        // that the lattice points of c decompose as (complement points) +
        // (lineality lattice)
        AdaptedBasis ab = extend_to_basis(lin, n);
        std::size_t d = lin.size();
        std::vector<IntVec> proj;
        for (const IntVec& g : c.generators()) {
            IntVec y(n - d);
            for (std::size_t j = 0; j < n - d; ++j)
                y[j] = pairing(ab.dual[d + j], g);
            if (!is_zero_vec(y))
                proj.push_back(y);
        }
        hb.degree_bound_used = 0;
        std::vector<IntVec> elements;
        for (const IntVec& l : lin) {
            elements.push_back(l);
            elements.push_back(vec_neg(l));
        }
        if (!proj.empty()) {
            Cone sub(n - d, c.side(), proj);
            HilbertBasis sub_hb = hilbert_basis(sub, degree_bound);
            hb.degree_bound_used = sub_hb.degree_bound_used;
            for (const IntVec& y : sub_hb.elements) {
                IntVec x(n, 0);
                for (std::size_t j = 0; j < n - d; ++j)
                    x = vec_add(x, vec_scale(y[j], ab.primal[d + j]));
                elements.push_back(x);
            }
        }
        std::sort(elements.begin(), elements.end());
        hb.elements = std::move(elements);
        return hb;
    }

    std::vector<IntVec> rays = extreme_rays(c);
    if (rays.empty())
        return hb;
    std::size_t s = c.dim();
    std::vector<IntVec> duals = dual_cone(c).generators();
    auto in_cone = [&](const IntVec& v) {
        for (const IntVec& d : duals)
            if (pairing(d, v) < 0)
                return false;
        return true;
    };

    std::set<IntVec> candidates;
    Int box_used = 0;
    for_each_subset(rays.size(), s, [&](const std::vector<std::size_t>& idx) {
        std::vector<IntVec> b;
        for (std::size_t i : idx)
            b.push_back(rays[i]);
        if (rank_q(IntMat::from_rows(b)) != s)
            return;
        parallelepiped_points(b, candidates, box_used);
    });
    if (degree_bound && *degree_bound < box_used)
        throw ValidationError("hilbert_basis: degree bound " + degree_bound->str() +
                              " below the required search box " + box_used.str());
    hb.degree_bound_used = box_used;

    candidates.erase(IntVec(n, 0));
    std::vector<IntVec> cand(candidates.begin(), candidates.end());
    for (const IntVec& x : cand) {
        bool reducible = false;
        for (const IntVec& y : cand) {
            if (y == x)
                continue;
            IntVec z = vec_sub(x, y);
            if (is_zero_vec(z))
                continue;
            if (in_cone(z)) {
                reducible = true;
                break;
            }
        }
        if (!reducible)
            hb.elements.push_back(x);
    }
    return hb;
}

} // namespace toricmon
