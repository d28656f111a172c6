#include "toricmon/reductive.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace toricmon {

namespace {

Rat dot(const RatVec& a, const RatVec& b) {
    if (a.size() != b.size()) throw ValidationError("pairing: dimension mismatch");
    Rat s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::optional<IntVec> integral(const RatVec& v) {
    IntVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (boost::multiprecision::denominator(v[i]) != 1) return std::nullopt;
        out[i] = boost::multiprecision::numerator(v[i]);
    }
    return out;
}

/// Coefficients of a character-space vector over the char_lattice rows.
std::optional<IntVec> char_coords(const RootDatum& rd, const RatVec& v) {
    const auto inv = rd.char_lattice.inverse();
    if (!inv) return std::nullopt;
    RatVec m(rd.ambient_rank, Rat(0));
    for (std::size_t j = 0; j < rd.ambient_rank; ++j)
        for (std::size_t t = 0; t < rd.ambient_rank; ++t) m[j] += inv->at(t, j) * v[t];
    return integral(m);
}

/// Coordinates of a cocharacter-space vector in the basis dual to the
/// char_lattice rows.
RatVec cochar_coords(const RootDatum& rd, const RatVec& v) {
    RatVec x(rd.ambient_rank, Rat(0));
    for (std::size_t i = 0; i < rd.ambient_rank; ++i) {
        RatVec row(rd.ambient_rank);
        for (std::size_t j = 0; j < rd.ambient_rank; ++j) row[j] = rd.char_lattice.at(i, j);
        x[i] = dot(row, v);
    }
    return x;
}

RatVec to_rat(const IntVec& v) {
    RatVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
    return out;
}

std::vector<Int> flatten(const IntMat& a) {
    std::vector<Int> key;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) key.push_back(a.at(i, j));
    return key;
}

bool is_unimodular(const IntMat& a) {
    if (a.rows() != a.cols()) return false;
    const Int d = det(a);
    return d == 1 || d == -1;
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

/// Everything enumerate_aut_GDC needs in cocharacter-basis coordinates,
/// where the lattice is the standard one.
struct CoordData {
    Cone cone_x;
    std::vector<IntVec> coroots_x;
    std::vector<IntVec> root_rows; // pairing <alpha_i, v> = root_rows[i] . x
    std::vector<IntVec> radical_kernel;
};

CoordData to_coords(const RootDatum& rd, const Cone& c) {
    std::vector<IntVec> rays;
    for (const IntVec& g : c.generators())
        rays.push_back(primitive_from_rational(cochar_coords(rd, to_rat(g))));

    std::vector<IntVec> coroots;
    for (const RatVec& cv : rd.simple_coroots) {
        const auto x = integral(cochar_coords(rd, cv));
        if (!x)
            throw ValidationError("a simple coroot does not lie in the cocharacter lattice");
        coroots.push_back(*x);
    }

    std::vector<IntVec> roots;
    for (const RatVec& a : rd.simple_roots) {
        const auto m = char_coords(rd, a);
        if (!m) throw ValidationError("a simple root does not lie in the character lattice");
        roots.push_back(*m);
    }

    std::vector<IntVec> kernel;
    if (!roots.empty())
        kernel = kernel_basis(IntMat::from_rows(roots));
    else
        for (std::size_t i = 0; i < rd.ambient_rank; ++i) {
            IntVec e(rd.ambient_rank, 0);
            e[i] = 1;
            kernel.push_back(e);
        }

    return CoordData{Cone(rd.ambient_rank, Side::N, rays), std::move(coroots),
                     std::move(roots), std::move(kernel)};
}

} // namespace

RootDatum make_root_datum(std::size_t ambient_rank, std::size_t radical_rank,
                          std::vector<RatVec> simple_roots, std::vector<RatVec> simple_coroots,
                          RatMat char_lattice) {
    std::vector<std::string> problems;
    const std::size_t n = ambient_rank;
    const std::size_t r = simple_roots.size();

    if (simple_coroots.size() != r)
        problems.push_back("the numbers of simple roots and simple coroots differ");
    if (r + radical_rank != n)
        problems.push_back("semisimple rank plus radical rank must equal the ambient rank");
    for (const RatVec& v : simple_roots)
        if (v.size() != n) problems.push_back("a simple root has the wrong length");
    for (const RatVec& v : simple_coroots)
        if (v.size() != n) problems.push_back("a simple coroot has the wrong length");
    if (char_lattice.rows() != n || char_lattice.cols() != n)
        problems.push_back("char_lattice must be square of the ambient rank");
    if (!problems.empty()) throw ValidationError(problems);

    if (!char_lattice.inverse())
        problems.push_back("char_lattice rows are not a basis (singular matrix)");

    RootDatum rd{ambient_rank, radical_rank, std::move(simple_roots), std::move(simple_coroots),
                 std::move(char_lattice)};
    if (!problems.empty()) throw ValidationError(problems);

    // Cartan conditions.
    IntMat cartan(r, r);
    bool cartan_ok = true;
    for (std::size_t i = 0; i < r && cartan_ok; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const Rat p = dot(rd.simple_roots[i], rd.simple_coroots[j]);
            if (boost::multiprecision::denominator(p) != 1) {
                problems.push_back("Cartan pairing <alpha_" + std::to_string(i + 1) +
                                   ", alpha_" + std::to_string(j + 1) + "^vee> is not an integer");
                cartan_ok = false;
                break;
            }
            cartan.at(i, j) = boost::multiprecision::numerator(p);
        }
    if (cartan_ok) {
        for (std::size_t i = 0; i < r; ++i) {
            if (cartan.at(i, i) != 2)
                problems.push_back("Cartan diagonal entry " + std::to_string(i + 1) +
                                   " is not 2");
            for (std::size_t j = 0; j < r; ++j) {
                if (i == j) continue;
                if (cartan.at(i, j) > 0)
                    problems.push_back("Cartan off-diagonal entry is positive");
                if ((cartan.at(i, j) == 0) != (cartan.at(j, i) == 0))
                    problems.push_back("Cartan zero pattern is not symmetric");
            }
        }
        // Finite type: every principal minor is positive.
        for (std::size_t mask = 1; mask < (std::size_t(1) << r); ++mask) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < r; ++i)
                if (mask & (std::size_t(1) << i)) idx.push_back(i);
            IntMat sub(idx.size(), idx.size());
            for (std::size_t i = 0; i < idx.size(); ++i)
                for (std::size_t j = 0; j < idx.size(); ++j)
                    sub.at(i, j) = cartan.at(idx[i], idx[j]);
            if (det(sub) <= 0) {
                problems.push_back("the Cartan matrix is not of finite type "
                                   "(a principal minor is not positive)");
                break;
            }
        }
    }

    for (std::size_t i = 0; i < r; ++i)
        if (!char_coords(rd, rd.simple_roots[i]))
            problems.push_back("simple root " + std::to_string(i + 1) +
                               " is not in the character lattice");
    for (std::size_t i = 0; i < r; ++i)
        if (!integral(cochar_coords(rd, rd.simple_coroots[i])))
            problems.push_back("simple coroot " + std::to_string(i + 1) +
                               " is not in the cocharacter lattice");

    if (r > 0) {
        const auto independent = [r](const std::vector<RatVec>& vectors) {
            std::vector<IntVec> prim;
            for (const RatVec& v : vectors) {
                bool zero = true;
                for (const Rat& x : v)
                    if (x != 0) zero = false;
                if (zero) return false;
                prim.push_back(primitive_from_rational(v));
            }
            return rank_q(IntMat::from_rows(prim)) == r;
        };
        if (!independent(rd.simple_roots))
            problems.push_back("the simple roots are linearly dependent");
        if (!independent(rd.simple_coroots))
            problems.push_back("the simple coroots are linearly dependent");
    }

    if (!problems.empty()) throw ValidationError(problems);
    return rd;
}

IntMat cartan_matrix(const RootDatum& rd) {
    const std::size_t r = rd.semisimple_rank();
    IntMat c(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) {
            const Rat p = dot(rd.simple_roots[i], rd.simple_coroots[j]);
            if (boost::multiprecision::denominator(p) != 1)
                throw ValidationError("Cartan pairing is not an integer");
            c.at(i, j) = boost::multiprecision::numerator(p);
        }
    for (std::size_t i = 0; i < r; ++i)
        if (c.at(i, i) != 2)
            throw ValidationError("Cartan diagonal entry is not 2");
    return c;
}

std::vector<std::vector<std::size_t>> diagram_automorphisms(const RootDatum& rd) {
    const IntMat c = cartan_matrix(rd);
    const std::size_t r = rd.semisimple_rank();
    std::vector<std::size_t> perm(r);
    for (std::size_t i = 0; i < r; ++i) perm[i] = i;

    std::vector<std::vector<std::size_t>> autos;
    do {
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (c.at(perm[i], perm[j]) != c.at(i, j)) {
                    ok = false;
                    break;
                }
        if (ok) autos.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return autos;
}

bool is_dominant(const RootDatum& rd, const RatVec& lambda) {
    if (lambda.size() != rd.ambient_rank)
        throw ValidationError("is_dominant: weight has the wrong length");
    if (!char_coords(rd, lambda))
        throw ValidationError("is_dominant: the weight is not in the character lattice");
    for (const RatVec& cv : rd.simple_coroots)
        if (dot(lambda, cv) < 0) return false;
    return true;
}

bool in_neg_weyl_chamber(const RootDatum& rd, const RatVec& v) {
    if (v.size() != rd.ambient_rank)
        throw ValidationError("in_neg_weyl_chamber: vector has the wrong length");
    for (const RatVec& a : rd.simple_roots)
        if (dot(a, v) > 0) return false;
    return true;
}

VinbergReport validate_vinberg_cone(const RootDatum& rd, const Cone& c, const Int& weight_box) {
    VinbergReport report;
    report.weight_box = weight_box;

    if (c.rank() != rd.ambient_rank) {
        report.problems.push_back("the cone does not live in the cocharacter space");
        return report;
    }
    if (!is_strongly_convex(c))
        report.problems.push_back("the cone is not strictly convex");

    std::set<IntVec> coroot_dirs;
    for (const RatVec& cv : rd.simple_coroots) {
        const IntVec prim = primitive_from_rational(cv);
        coroot_dirs.insert(prim);
        if (!contains(c, prim))
            report.problems.push_back("the cone does not contain every simple coroot");
    }

    for (const IntVec& g : c.generators()) {
        if (coroot_dirs.count(g)) continue;
        if (!in_neg_weyl_chamber(rd, to_rat(g)))
            report.problems.push_back(
                "a generator outside the coroot directions is not in the closed "
                "negative Weyl chamber");
    }

    report.valid = report.problems.empty();
    if (!report.valid) return report;

    report.dual = dual_cone(c);

    // Weight monoid sample: lattice points of the dual cone, recorded by
    // their coefficients over the char_lattice rows, in a coordinate box.
    const std::size_t n = rd.ambient_rank;
    IntVec coeff(n, -weight_box);
    while (true) {
        RatVec lambda(n, Rat(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                lambda[j] += Rat(coeff[i]) * rd.char_lattice.at(i, j);
        bool inside = true;
        for (const IntVec& g : c.generators())
            if (dot(lambda, to_rat(g)) < 0) {
                inside = false;
                break;
            }
        if (inside) report.weight_sample.push_back(coeff);

        std::size_t pos = 0;
        while (pos < n && coeff[pos] == weight_box) coeff[pos++] = -weight_box;
        if (pos == n) break;
        ++coeff[pos];
    }
    std::sort(report.weight_sample.begin(), report.weight_sample.end());
    return report;
}

GDCEnumeration enumerate_aut_GDC(const RootDatum& rd, const Cone& c, const Int& box_bound) {
    const VinbergReport vr = validate_vinberg_cone(rd, c, 1);
    if (!vr.valid) throw ValidationError(vr.problems);

    const CoordData cd = to_coords(rd, c);
    const std::size_t n = rd.ambient_rank;
    const auto diag_autos = diagram_automorphisms(rd);

    const auto passes = [&](const IntMat& rho) -> std::optional<std::vector<std::size_t>> {
        const auto rho_inv = inverse_unimodular(rho);
        if (!rho_inv) return std::nullopt;
        for (const IntVec& g : cd.cone_x.generators()) {
            if (!contains(cd.cone_x, rho.apply(g))) return std::nullopt;
            if (!contains(cd.cone_x, rho_inv->apply(g))) return std::nullopt;
        }
        for (const auto& pi : diag_autos) {
            bool match = true;
            for (std::size_t i = 0; i < cd.coroots_x.size() && match; ++i)
                if (rho.apply(cd.coroots_x[i]) != cd.coroots_x[pi[i]]) match = false;
            if (!match) continue;
            bool radical_ok = true;
            for (const IntVec& kv : cd.radical_kernel) {
                const IntVec image = rho.apply(kv);
                for (const IntVec& a : cd.root_rows)
                    if (pairing(a, image) != 0) {
                        radical_ok = false;
                        break;
                    }
                if (!radical_ok) break;
            }
            if (radical_ok) return pi;
            return std::nullopt;
        }
        return std::nullopt;
    };

    GDCEnumeration out;
    std::set<std::vector<Int>> seen;
    std::vector<IntMat> found;
    auto record = [&](const IntMat& rho) {
        if (seen.insert(flatten(rho)).second) found.push_back(rho);
    };

    if (cd.cone_x.dim() == n) {
        const std::vector<IntVec>& rays = cd.cone_x.generators();
        std::vector<IntVec> basis_rays, accumulated;
        for (const IntVec& ray : rays) {
            accumulated.push_back(ray);
            if (rank_q(IntMat::from_rows(accumulated)) == accumulated.size())
                basis_rays.push_back(ray);
            else
                accumulated.pop_back();
            if (basis_rays.size() == n) break;
        }
        for_each_injective_assignment(n, rays.size(), [&](const std::vector<std::size_t>& pick) {
            std::vector<IntVec> targets;
            for (std::size_t i : pick) targets.push_back(rays[i]);
            const auto rho = solve_integral_map(basis_rays, targets);
            if (!rho || !is_unimodular(*rho)) return;
            if (passes(*rho)) record(*rho);
        });
        out.complete = true;
        out.note = "the cone is full-dimensional; ray assignments exhaust all candidates";
    } else {
        std::vector<Int> entries(n * n, -box_bound);
        while (true) {
            IntMat rho(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) rho.at(i, j) = entries[i * n + j];
            if (is_unimodular(rho) && passes(rho)) record(rho);
            std::size_t pos = 0;
            while (pos < entries.size() && entries[pos] == box_bound) entries[pos++] = -box_bound;
            if (pos == entries.size()) break;
            ++entries[pos];
        }
        out.complete = false;
        out.note = "the cone is not full-dimensional; only maps with entries in [-" +
                   box_bound.str() + "," + box_bound.str() +
                   "] were searched (plus their group closure)";
    }

    // Group closure: products and inverses of survivors survive.
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (found.size() > 512)
            throw ValidationError("symmetry closure exceeded 512 elements; refusing to "
                                  "report a truncated group");
        const auto inv = inverse_unimodular(found[i]);
        if (inv && seen.insert(flatten(*inv)).second) found.push_back(*inv);
        for (std::size_t j = 0; j < found.size(); ++j) {
            const IntMat p = found[i] * found[j];
            if (seen.insert(flatten(p)).second) found.push_back(p);
            const IntMat q = found[j] * found[i];
            if (seen.insert(flatten(q)).second) found.push_back(q);
        }
    }
    std::sort(found.begin(), found.end(),
              [](const IntMat& a, const IntMat& b) { return flatten(a) < flatten(b); });

    // Decorate with the contragredient map and the (phi, pi) decomposition.
    const std::size_t r = rd.semisimple_rank();
    std::vector<IntVec> root_span_basis;
    if (r > 0) root_span_basis = saturated_row_basis(IntMat::from_rows(cd.root_rows));
    const AdaptedBasis quotient_basis = extend_to_basis(root_span_basis, n);

    for (const IntMat& rho : found) {
        // Contragredient action on characters: <rho*(lambda), rho(v)> = <lambda, v>.
        GDCElement el{rho, inverse_unimodular(rho)->transpose(), {}};
        const auto pi = passes(rho);
        if (!pi) throw std::logic_error("enumerate_aut_GDC: closure left the stabilizer");

        const std::size_t k = rd.radical_rank;
        IntMat phi(k, k);
        for (std::size_t col = 0; col < k; ++col) {
            const IntVec image = el.on_chars.apply(quotient_basis.primal[r + col]);
            for (std::size_t row = 0; row < k; ++row)
                phi.at(row, col) = pairing(quotient_basis.dual[r + row], image);
        }
        el.decompositions.push_back({phi, *pi});
        out.elements.push_back(std::move(el));
    }
    return out;
}

ReductiveAutReport reductive_aut_report(const RootDatum& rd, const Cone& c,
                                        const Int& box_bound) {
    const VinbergReport vr = validate_vinberg_cone(rd, c, 1);
    if (!vr.valid) throw ValidationError(vr.problems);

    ReductiveAutReport report;
    const CoordData cd = to_coords(rd, c);
    const std::size_t r = rd.semisimple_rank();

    if (r == 0) {
        report.center_order = 1;
        report.inner_description = "trivial (the semisimple part is trivial)";
    } else {
        const std::vector<IntVec> ls = saturated_row_basis(IntMat::from_rows(cd.coroots_x));
        IntMat p(r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) p.at(i, j) = pairing(cd.root_rows[i], ls[j]);
        report.center_order = abs_int(det(p));
        report.inner_description =
            "G_s/Z(G_s) with |Z(G_s)| = " + report.center_order.str();
    }

    report.outer = enumerate_aut_GDC(rd, c, box_bound);
    std::vector<IntMat> mats;
    for (const GDCElement& el : report.outer.elements) mats.push_back(el.on_cochars);
    report.table = composition_table(mats);
    report.outer_name = identify_small_group(report.table);
    return report;
}

RootDatum standard_root_datum(const std::string& name) {
    const auto cartan_realization = [](const IntMat& c) {
        const std::size_t r = c.rows();
        std::vector<RatVec> roots, coroots;
        for (std::size_t i = 0; i < r; ++i) {
            RatVec root(r, Rat(0)), coroot(r, Rat(0));
            for (std::size_t j = 0; j < r; ++j) root[j] = Rat(c.at(i, j));
            coroot[i] = Rat(1);
            roots.push_back(root);
            coroots.push_back(coroot);
        }
        RatMat lattice(r, r);
        for (std::size_t i = 0; i < r; ++i) lattice.at(i, i) = Rat(1);
        return make_root_datum(r, 0, roots, coroots, lattice);
    };

    const auto chain = [](std::size_t r) {
        IntMat c(r, r);
        for (std::size_t i = 0; i < r; ++i) {
            c.at(i, i) = 2;
            if (i + 1 < r) {
                c.at(i, i + 1) = -1;
                c.at(i + 1, i) = -1;
            }
        }
        return c;
    };

    if (name.size() == 2 && name[1] >= '1' && name[1] <= '4') {
        const std::size_t r = static_cast<std::size_t>(name[1] - '0');
        if (name[0] == 'A') return cartan_realization(chain(r));
        if (name[0] == 'B' && r >= 2) {
            IntMat c = chain(r);
            c.at(r - 2, r - 1) = -2;
            return cartan_realization(c);
        }
        if (name[0] == 'C' && r >= 2) {
            IntMat c = chain(r);
            c.at(r - 1, r - 2) = -2;
            return cartan_realization(c);
        }
        if (name[0] == 'D' && r >= 2) {
            IntMat c(r, r);
            for (std::size_t i = 0; i < r; ++i) c.at(i, i) = 2;
            for (std::size_t i = 0; i + 1 < r && i + 2 < r; ++i) {
                c.at(i, i + 1) = -1;
                c.at(i + 1, i) = -1;
            }
            if (r >= 3) {
                c.at(r - 3, r - 1) = -1;
                c.at(r - 1, r - 3) = -1;
            }
            return cartan_realization(c);
        }
    }

    const auto gl = [](std::size_t n) {
        std::vector<RatVec> roots, coroots;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            RatVec v(n, Rat(0));
            v[i] = Rat(1);
            v[i + 1] = Rat(-1);
            roots.push_back(v);
            coroots.push_back(v);
        }
        RatMat lattice(n, n);
        for (std::size_t i = 0; i < n; ++i) lattice.at(i, i) = Rat(1);
        return make_root_datum(n, 1, roots, coroots, lattice);
    };

    if (name.size() == 3 && name.substr(0, 2) == "GL" && name[2] >= '1' && name[2] <= '4')
        return gl(static_cast<std::size_t>(name[2] - '0'));
    if (name.size() == 4 && name.substr(0, 3) == "Mat" && name[3] >= '2' && name[3] <= '4')
        return gl(static_cast<std::size_t>(name[3] - '0'));

    throw ValidationError("unknown standard root datum name: " + name);
}

} // namespace toricmon
