#include "toricmon/automorphisms.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toricmon {

namespace {

bool is_unimodular(const IntMat& a) {
    if (a.rows() != a.cols()) return false;
    const Int d = det(a);
    return d == 1 || d == -1;
}

void require_unimodular(const IntMat& a, std::size_t size, const char* who) {
    if (a.rows() != size || a.cols() != size)
        throw ValidationError(std::string(who) + ": map has the wrong size");
    if (!is_unimodular(a))
        throw ValidationError(std::string(who) + ": map is not unimodular (determinant " +
                              det(a).str() + ")");
}

std::vector<Int> flatten(const IntMat& a) {
    std::vector<Int> key;
    key.reserve(a.rows() * a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) key.push_back(a.at(i, j));
    return key;
}

void sort_canonically(std::vector<IntMat>& mats) {
    std::sort(mats.begin(), mats.end(),
              [](const IntMat& a, const IntMat& b) { return flatten(a) < flatten(b); });
}

/// Grows the found stabilizer elements into a group: membership is closed
/// under products and inverses, so anything generated is a genuine element
/// even when it fell outside the search box.
void close_under_group_ops(std::vector<IntMat>& elements) {
    std::set<std::vector<Int>> seen;
    for (const IntMat& a : elements) seen.insert(flatten(a));
    for (std::size_t i = 0; i < elements.size(); ++i) {
        if (elements.size() > 512)
            throw ValidationError("outer automorphism closure exceeded 512 elements; "
                                  "refusing to report a truncated group");
        const auto inv = inverse_unimodular(elements[i]);
        if (inv && seen.insert(flatten(*inv)).second) elements.push_back(*inv);
        for (std::size_t j = 0; j < elements.size(); ++j) {
            const IntMat p = elements[i] * elements[j];
            if (seen.insert(flatten(p)).second) elements.push_back(p);
            const IntMat q = elements[j] * elements[i];
            if (seen.insert(flatten(q)).second) elements.push_back(q);
        }
    }
}

void for_each_injective_assignment(std::size_t slots, std::size_t pool,
                                   const std::function<void(const std::vector<std::size_t>&)>& fn) {
    std::vector<std::size_t> pick;
    std::vector<bool> used(pool, false);
    const std::function<void()> rec = [&]() {
        if (pick.size() == slots) {
            fn(pick);
            return;
        }
        for (std::size_t i = 0; i < pool; ++i) {
            if (used[i]) continue;
            used[i] = true;
            pick.push_back(i);
            rec();
            pick.pop_back();
            used[i] = false;
        }
    };
    rec();
}

std::optional<IntMat> solve_integral_map(const std::vector<IntVec>& from,
                                         const std::vector<IntVec>& to) {
    const std::size_t n = from[0].size();
    RatMat bmat(n, n), tmat(n, n);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            bmat.at(i, j) = Rat(from[j][i]);
            tmat.at(i, j) = Rat(to[j][i]);
        }
    const auto binv = bmat.inverse();
    if (!binv) return std::nullopt;
    const RatMat a = tmat * *binv;
    IntMat result(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rat& v = a.at(i, j);
            if (boost::multiprecision::denominator(v) != 1) return std::nullopt;
            result.at(i, j) = boost::multiprecision::numerator(v);
        }
    return result;
}

} // namespace

bool is_in_aut_T_chi(const RootMonoid& X, const IntMat& B) {
    const std::size_t m = X.n() - X.k();
    require_unimodular(B, m, "is_in_aut_T_chi");
    for (std::size_t r = 0; r < X.k(); ++r) {
        IntVec chi(m);
        for (std::size_t j = 0; j < m; ++j)
            chi[j] = pairing(X.E.chars[r], X.basis.primal[X.k() + j]);
        if (B.apply(chi) != chi) return false;
    }
    return true;
}

bool is_in_aut_M_sigma_tau_E(const RootMonoid& X, const IntMat& A) {
    const std::size_t n = X.n();
    require_unimodular(A, n, "is_in_aut_M_sigma_tau_E");
    const IntMat ainv = *inverse_unimodular(A);

    // The face-orthogonal sublattice is saturated, so mapping its basis
    // into it forces equality.
    for (std::size_t j = X.k(); j < n; ++j) {
        const IntVec image = A.apply(X.basis.dual[j]);
        for (const IntVec& p : X.face_rays())
            if (pairing(image, p) != 0) return false;
    }

    for (const IntVec& g : X.dual_sigma.generators()) {
        if (!contains(X.dual_sigma, A.apply(g))) return false;
        if (!contains(X.dual_sigma, ainv.apply(g))) return false;
    }

    for (std::size_t r = 0; r < X.k(); ++r) {
        if (A.apply(X.E.e1[r]) != X.E.e1[r]) return false;
        if (A.apply(X.E.e2[r]) != X.E.e2[r]) return false;
    }
    return true;
}

OuterEnumeration enumerate_outer(const RootMonoid& X, const Int& box_bound) {
    if (!is_active(X.E))
        throw ValidationError("the collection is not active (the characters chi_r are "
                              "linearly dependent), so the symmetry enumeration does not apply");

    const std::size_t n = X.n();
    OuterEnumeration out;
    std::set<std::vector<Int>> seen;
    auto record = [&](const IntMat& a) {
        if (seen.insert(flatten(a)).second) out.elements.push_back(a);
    };

    if (is_strongly_convex(X.dual_sigma)) {
        const std::vector<IntVec>& rays = X.dual_sigma.generators();

        std::vector<IntVec> basis_rays;
        std::vector<IntVec> accumulated;
        for (const IntVec& r : rays) {
            accumulated.push_back(r);
            if (rank_q(IntMat::from_rows(accumulated)) == accumulated.size())
                basis_rays.push_back(r);
            else
                accumulated.pop_back();
            if (basis_rays.size() == n) break;
        }

        for_each_injective_assignment(n, rays.size(), [&](const std::vector<std::size_t>& pick) {
            std::vector<IntVec> targets;
            for (std::size_t i : pick) targets.push_back(rays[i]);
            const auto a = solve_integral_map(basis_rays, targets);
            if (!a || !is_unimodular(*a)) return;
            if (is_in_aut_M_sigma_tau_E(X, *a)) record(*a);
        });
        out.complete = true;
        out.note = "the dual cone is pointed; every candidate arises from an injective "
                   "assignment of an independent ray set into the ray set";
    } else {
        std::vector<Int> entries(n * n, -box_bound);
        while (true) {
            IntMat a(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) a.at(i, j) = entries[i * n + j];
            if (is_unimodular(a) && is_in_aut_M_sigma_tau_E(X, a)) record(a);

            std::size_t pos = 0;
            while (pos < entries.size() && entries[pos] == box_bound) entries[pos++] = -box_bound;
            if (pos == entries.size()) break;
            ++entries[pos];
        }
        out.complete = false;
        out.note = "the dual cone has a lineality space, so the stabilizer may be infinite; "
                   "only maps with entries in [-" + box_bound.str() + "," + box_bound.str() +
                   "] were searched (plus their group closure)";
    }

    close_under_group_ops(out.elements);
    sort_canonically(out.elements);
    return out;
}

bool verify_monoid_automorphism(const RootMonoid& X, const IntMat& A, const Int& sample_bound) {
    const std::size_t n = X.n();
    if (A.rows() != n || A.cols() != n || !is_unimodular(A)) return false;

    IntVec u(n, -sample_bound);
    while (true) {
        if (contains(X.dual_sigma, u) && !contains(X.dual_sigma, A.apply(u))) return false;
        std::size_t pos = 0;
        while (pos < n && u[pos] == sample_bound) u[pos++] = -sample_bound;
        if (pos == n) break;
        ++u[pos];
    }

    std::set<IntVec> basis_set(X.hilbert.elements.begin(), X.hilbert.elements.end());
    std::set<IntVec> image_set;
    for (const IntVec& h : X.hilbert.elements) image_set.insert(A.apply(h));
    if (image_set != basis_set) return false;

    for (const IntVec& h : X.hilbert.elements) {
        const TensorPoly lhs = comultiply(X, A.apply(h));
        const TensorPoly source = comultiply(X, h);
        TensorPoly rhs(n, 2);
        for (const auto& [exps, coeff] : source.terms())
            rhs.add_term({A.apply(exps[0]), A.apply(exps[1])}, coeff);
        if (lhs != rhs) return false;
    }
    return true;
}

std::vector<std::vector<std::size_t>> composition_table(const std::vector<IntMat>& elements) {
    std::map<std::vector<Int>, std::size_t> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index[flatten(elements[i])] = i;

    std::vector<std::vector<std::size_t>> table(elements.size(),
                                                std::vector<std::size_t>(elements.size()));
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t j = 0; j < elements.size(); ++j) {
            const auto it = index.find(flatten(elements[i] * elements[j]));
            if (it == index.end())
                throw std::logic_error("composition_table: element list is not closed");
            table[i][j] = it->second;
        }
    return table;
}

std::string identify_small_group(const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t m = table.size();
    if (m == 0) return "unidentified";
    if (m == 1) return "trivial";
    if (m > 16) return "unidentified";

    std::size_t id = m;
    for (std::size_t i = 0; i < m; ++i) {
        bool is_id = true;
        for (std::size_t j = 0; j < m; ++j)
            if (table[i][j] != j) is_id = false;
        if (is_id) id = i;
    }
    if (id == m) return "unidentified";

    std::vector<std::size_t> orders(m);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t g = i, ord = 1;
        while (g != id) {
            g = table[g][i];
            if (++ord > m) return "unidentified";
        }
        orders[i] = ord;
    }
    const std::size_t max_order = *std::max_element(orders.begin(), orders.end());
    const auto count_order = [&](std::size_t k) {
        return static_cast<std::size_t>(std::count(orders.begin(), orders.end(), k));
    };

    bool abelian = true;
    for (std::size_t i = 0; i < m && abelian; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (table[i][j] != table[j][i]) {
                abelian = false;
                break;
            }

    if (max_order == m) return "Z/" + std::to_string(m);
    if (abelian) {
        if (m == 4) return "Z/2 x Z/2";
        if (m == 8 && max_order == 4) return "Z/4 x Z/2";
        if (m == 8 && max_order == 2) return "Z/2 x Z/2 x Z/2";
        if (m == 9) return "Z/3 x Z/3";
        if (m == 12 && max_order == 6) return "Z/6 x Z/2";
        if (m == 16 && max_order == 8) return "Z/8 x Z/2";
        if (m == 16 && max_order == 4) return count_order(4) == 12 ? "Z/4 x Z/4" : "Z/4 x Z/2 x Z/2";
        if (m == 16 && max_order == 2) return "Z/2 x Z/2 x Z/2 x Z/2";
        return "unidentified";
    }
    if (m == 6) return "S3";
    if (m == 8) return count_order(2) == 5 ? "D4" : "Q8";
    if (m == 10) return "D5";
    if (m == 12) {
        if (count_order(2) == 7) return "D6";
        if (count_order(2) == 3) return "A4";
        return "Dic3";
    }
    if (m == 14) return "D7";
    if (m == 16 && count_order(2) == 9) return "D8";
    if (m == 16 && count_order(2) == 1) return "Q16";
    return "unidentified";
}

AutReport aut_report(const RootMonoid& X, const Int& box_bound) {
    AutReport report{unit_group(X), {}, enumerate_outer(X, box_bound), {}, {}, {}};

    for (const IntMat& a : report.outer.elements) {
        if (!verify_monoid_automorphism(X, a))
            throw std::logic_error("aut_report: an enumerated symmetry failed the "
                                   "comultiplication compatibility check");
    }
    report.table = composition_table(report.outer.elements);
    report.outer_name = identify_small_group(report.table);

    std::ostringstream inner;
    inner << "G_a^" << report.inner.k << " x| T/Z with torus rank " << report.inner.torus_rank
          << "; center has dimension " << report.inner.center.dim;
    if (!report.inner.center.torsion.empty()) {
        inner << " and component group";
        for (const Int& f : report.inner.center.torsion) inner << " Z/" << f.str();
    }
    report.inner_description = inner.str();
    report.root_preservation_note =
        "the root set E is preserved pointwise (each root fixed individually); the setwise "
        "reading remains an open question and is not implemented";
    return report;
}

} // namespace toricmon
