// Acceptance gate: one line per criterion, PASS or FAIL, nonzero exit when
// anything fails. Usage: acceptance <path-to-cli> <path-to-data-dir>

#include "toricmon/automorphisms.hpp"
#include "toricmon/demazure.hpp"
#include "toricmon/reductive.hpp"
#include "toricmon/root_monoid.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#ifndef _WIN32
#include <sys/wait.h>
#endif

using namespace toricmon;

namespace {

std::mt19937 rng(91219);

int coord(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng);
}

IntVec random_vec(std::size_t n, int lo, int hi) {
    IntVec v(n);
    for (auto& x : v) x = coord(lo, hi);
    return v;
}

Cone random_pointed_cone(std::size_t n, int max_rays, int max_coord) {
    while (true) {
        const int count = coord(1, max_rays);
        std::vector<IntVec> rays;
        for (int i = 0; i < count; ++i) {
            IntVec v = random_vec(n, -max_coord, max_coord);
            if (!is_zero_vec(v)) rays.push_back(v);
        }
        if (rays.empty()) continue;
        Cone c(n, Side::N, rays);
        if (is_strongly_convex(c)) return c;
    }
}

Rat random_rat(bool nonzero) {
    int num = coord(-6, 6);
    while (nonzero && num == 0) num = coord(-6, 6);
    return Rat(num, coord(1, 5));
}

RootMonoid make_re1() {
    Cone sigma(2, Side::N, {{1, 0}, {0, 1}});
    return build(sigma, make_face(sigma, {1}), {{-1, 0}}, {{-1, 1}});
}

RootMonoid make_re2() {
    Cone sigma(3, Side::N, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    return build(sigma, make_face(sigma, {2}), {{-1, 0, 0}}, {{-1, 1, 1}});
}

/// Direct binomial expansion of the comultiplication, written against the
/// defining product formula rather than through the tensor algebra:
/// sum over (j_1..j_k) of prod_r C(a_r, j_r) *
///   chi^{u + sum_r j_r e2_r}  (x)  chi^{u + sum_r (a_r - j_r) e1_r}.
TensorPoly oracle_delta(const RootMonoid& X, const IntVec& u) {
    std::vector<Int> a;
    for (const IntVec& p : X.face_rays()) a.push_back(pairing(u, p));
    TensorPoly out(X.n(), 2);
    std::vector<Int> j(X.k(), 0);
    while (true) {
        Rat coeff(1);
        IntVec left = u, right = u;
        for (std::size_t r = 0; r < X.k(); ++r) {
            coeff *= Rat(binomial(a[r], j[r]));
            left = vec_add(left, vec_scale(j[r], X.E.e2[r]));
            right = vec_add(right, vec_scale(a[r] - j[r], X.E.e1[r]));
        }
        out.add_term({left, right}, coeff);
        std::size_t pos = 0;
        while (pos < X.k()) {
            j[pos] += 1;
            if (j[pos] <= a[pos]) break;
            j[pos] = 0;
            ++pos;
        }
        if (pos == X.k() || X.k() == 0) break;
    }
    return out;
}

std::vector<IntVec> box_points(const Cone& c, int radius) {
    std::vector<IntVec> points;
    IntVec v(c.rank(), -radius);
    while (true) {
        if (contains(c, v)) points.push_back(v);
        std::size_t pos = 0;
        while (pos < c.rank()) {
            v[pos] += 1;
            if (v[pos] <= radius) break;
            v[pos] = -radius;
            ++pos;
        }
        if (pos == c.rank()) break;
    }
    return points;
}

// ---------------------------------------------------------------- criteria

bool criterion_bialgebra(std::string& detail) {
    for (const RootMonoid& X : {make_re1(), make_re2()}) {
        const BialgebraReport report = verify_bialgebra(X, 3);
        if (!report.all_passed()) {
            detail = "axiom failed on rank " + std::to_string(X.n()) + ": " +
                     (report.closure.passed
                          ? (report.coassociativity.passed ? report.counit_axiom.witness
                                                           : report.coassociativity.witness)
                          : report.closure.witness);
            return false;
        }
        if (report.exponents_checked == 0) {
            detail = "no exponents were checked";
            return false;
        }
    }
    return true;
}

bool criterion_comultiplication(std::string& detail) {
    const RootMonoid re1 = make_re1();
    TensorPoly pinned(2, 2);
    pinned.add_term({{0, 1}, {1, 0}}, Rat(1));
    pinned.add_term({{1, 0}, {0, 0}}, Rat(1));
    if (comultiply(re1, {1, 0}) != pinned) {
        detail = "pinned expansion of chi^(1,0) mismatched";
        return false;
    }

    const RootMonoid re2 = make_re2();
    for (int t = 0; t < 20; ++t) {
        const IntVec u1{coord(0, 5), coord(0, 5)};
        if (comultiply(re1, u1) != oracle_delta(re1, u1)) {
            detail = "oracle mismatch in rank 2";
            return false;
        }
        const IntVec u2{coord(0, 5), coord(0, 5), coord(0, 5)};
        if (comultiply(re2, u2) != oracle_delta(re2, u2)) {
            detail = "oracle mismatch in rank 3";
            return false;
        }
    }
    return true;
}

bool criterion_unit_group_law(std::string& detail) {
    for (const RootMonoid& X : {make_re1(), make_re2()}) {
        const UnitGroupData ug = unit_group(X);
        const std::size_t k = ug.k, m = ug.torus_rank;
        for (int trial = 0; trial < 100; ++trial) {
            RatVec a1(k), a2(k), t1(m), t2(m);
            for (auto& x : a1) x = random_rat(false);
            for (auto& x : a2) x = random_rat(false);
            for (auto& x : t1) x = random_rat(true);
            for (auto& x : t2) x = random_rat(true);

            const MonoidPoint z = point_multiply(X, MonoidPoint::primitive(a1, t1),
                                                 MonoidPoint::primitive(a2, t2));
            if (z.kind() != MonoidPoint::Kind::Primitive) {
                detail = "product of units is not in unit coordinates";
                return false;
            }
            for (std::size_t r = 0; r < k; ++r) {
                Rat chi(1);
                for (std::size_t j = 0; j < m; ++j)
                    chi *= rat_pow(t1[j], ug.char_matrix.at(r, j));
                if (z.alpha()[r] != a1[r] + chi * a2[r]) {
                    detail = "additive coordinate disagrees with the semidirect law";
                    return false;
                }
            }
            for (std::size_t j = 0; j < m; ++j) {
                if (z.t()[j] != t1[j] * t2[j]) {
                    detail = "torus coordinate disagrees with the semidirect law";
                    return false;
                }
            }
        }
    }
    return true;
}

bool criterion_nilpotency(std::string& detail) {
    int done = 0, positive = 0;
    while (done < 50) {
        const std::size_t n = 2 + static_cast<std::size_t>(done % 2);
        const Cone sigma = random_pointed_cone(n, static_cast<int>(n) + 1, 3);
        const RootEnumeration found = enumerate_demazure_roots(sigma, 3);
        std::vector<std::pair<IntVec, std::size_t>> candidates;
        for (std::size_t i = 0; i < found.roots_by_ray.size(); ++i)
            for (const IntVec& e : found.roots_by_ray[i]) candidates.push_back({e, i});
        if (candidates.empty()) continue;
        const auto& [e, ray_index] = candidates[static_cast<std::size_t>(
            coord(0, static_cast<int>(candidates.size()) - 1))];
        const DemazureRoot root{e, ray_index};
        const IntVec p = extreme_rays(sigma)[ray_index];

        const std::vector<IntVec> sample = box_points(dual_cone(sigma), 4);
        const IntVec m = sample[static_cast<std::size_t>(
            coord(0, static_cast<int>(sample.size()) - 1))];
        const Int a = pairing(m, p);

        LaurentPoly f = LaurentPoly::monomial(n, m);
        for (Int step = 0; step < a; ++step) f = derivation_apply(sigma, root, f);
        if (a > 0) {
            ++positive;
            if (f.is_zero()) {
                detail = "derivation vanished before the pairing order";
                return false;
            }
        }
        if (!derivation_apply(sigma, root, f).is_zero()) {
            detail = "derivation is not nilpotent at the pairing order";
            return false;
        }

        const Rat s1 = random_rat(false), s2 = random_rat(false);
        const LaurentPoly g = LaurentPoly::monomial(n, m);
        const LaurentPoly once = ga_action(sigma, root, s1 + s2, g);
        const LaurentPoly twice = ga_action(sigma, root, s1, ga_action(sigma, root, s2, g));
        if (once != twice) {
            detail = "exp(s delta) exp(s' delta) differs from exp((s+s') delta)";
            return false;
        }
        ++done;
    }
    if (positive < 10) {
        detail = "too few samples exercised a positive pairing";
        return false;
    }
    return true;
}

bool criterion_root_enumeration(std::string& detail) {
    for (int t = 0; t < 10; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
        const Cone sigma = random_pointed_cone(n, static_cast<int>(n) + 2, 3);
        const std::vector<IntVec> rays = extreme_rays(sigma);
        const RootEnumeration found = enumerate_demazure_roots(sigma, 3);

        std::vector<std::set<IntVec>> brute(rays.size());
        IntVec e(n, -3);
        while (true) {
            for (std::size_t i = 0; i < rays.size(); ++i)
                if (is_demazure_root(sigma, e, i)) brute[i].insert(e);
            std::size_t pos = 0;
            while (pos < n) {
                e[pos] += 1;
                if (e[pos] <= 3) break;
                e[pos] = -3;
                ++pos;
            }
            if (pos == n) break;
        }

        for (std::size_t i = 0; i < rays.size(); ++i) {
            const std::set<IntVec> got(found.roots_by_ray[i].begin(),
                                       found.roots_by_ray[i].end());
            if (got != brute[i]) {
                detail = "enumeration differs from the box scan on ray " + std::to_string(i);
                return false;
            }
        }
    }
    return true;
}

bool criterion_automorphisms(std::string& detail) {
    const RootMonoid re1 = make_re1();
    const OuterEnumeration out1 = enumerate_outer(re1);
    if (!out1.complete || out1.elements.size() != 1) {
        detail = "rank-2 example should have exactly the identity";
        return false;
    }

    const RootMonoid re2 = make_re2();
    const OuterEnumeration out2 = enumerate_outer(re2);
    const IntMat swap = IntMat::from_rows({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
    if (!out2.complete || out2.elements.size() != 2 ||
        std::find(out2.elements.begin(), out2.elements.end(), swap) == out2.elements.end()) {
        detail = "rank-3 example should be the coordinate swap group";
        return false;
    }

    // Brute force over all unimodular matrices with entries in [-2, 2],
    // in plain machine integers, as the independent oracle.
    const auto brute_matches = [&detail](const RootMonoid& X,
                                         const std::vector<IntMat>& expected) {
        const std::size_t n = X.n();
        std::vector<long long> entries(n * n, -2);
        std::set<std::vector<long long>> survivors;
        while (true) {
            long long det = 0;
            if (n == 2) {
                det = entries[0] * entries[3] - entries[1] * entries[2];
            } else {
                det = entries[0] * (entries[4] * entries[8] - entries[5] * entries[7]) -
                      entries[1] * (entries[3] * entries[8] - entries[5] * entries[6]) +
                      entries[2] * (entries[3] * entries[7] - entries[4] * entries[6]);
            }
            if (det == 1 || det == -1) {
                IntMat a(n, n);
                for (std::size_t i = 0; i < n; ++i)
                    for (std::size_t j = 0; j < n; ++j)
                        a.at(i, j) = entries[i * n + j];
                if (is_in_aut_M_sigma_tau_E(X, a)) survivors.insert(entries);
            }
            std::size_t pos = 0;
            while (pos < entries.size()) {
                entries[pos] += 1;
                if (entries[pos] <= 2) break;
                entries[pos] = -2;
                ++pos;
            }
            if (pos == entries.size()) break;
        }
        std::set<std::vector<long long>> listed;
        for (const IntMat& a : expected) {
            std::vector<long long> key;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    key.push_back(a.at(i, j).convert_to<long long>());
            listed.insert(key);
        }
        if (survivors != listed) {
            detail = "brute force over [-2,2] entries found a different group";
            return false;
        }
        return true;
    };

    if (!brute_matches(re1, out1.elements)) return false;
    if (!brute_matches(re2, out2.elements)) return false;

    for (const IntMat& a : out1.elements)
        if (!verify_monoid_automorphism(re1, a)) {
            detail = "a rank-2 element fails the comultiplication check";
            return false;
        }
    for (const IntMat& a : out2.elements)
        if (!verify_monoid_automorphism(re2, a)) {
            detail = "a rank-3 element fails the comultiplication check";
            return false;
        }
    return true;
}

bool criterion_reductive(std::string& detail) {
    const RootDatum mat2 = standard_root_datum("Mat2");
    const Cone mat2_cone(2, Side::N, {{1, -1}, {0, 1}});
    const ReductiveAutReport report = reductive_aut_report(mat2, mat2_cone);
    if (report.center_order != 2 || report.outer.elements.size() != 1 ||
        !report.outer.complete) {
        detail = "2x2 matrix monoid should have trivial outer part and center order 2";
        return false;
    }

    const RootDatum torus = make_root_datum(2, 2, {}, {}, [] {
        RatMat id(2, 2);
        id.at(0, 0) = Rat(1);
        id.at(1, 1) = Rat(1);
        return id;
    }());
    const Cone orthant(2, Side::N, {{1, 0}, {0, 1}});
    const ReductiveAutReport torus_report = reductive_aut_report(torus, orthant);
    if (torus_report.outer.elements.size() != 2 || torus_report.outer_name != "Z/2" ||
        torus_report.center_order != 1) {
        detail = "rank-2 torus orthant should have outer group Z/2";
        return false;
    }

    // Graph-automorphism oracle: permutations preserving only the 0/1
    // adjacency of the diagram (valid for the simply laced cases below).
    const auto graph_aut_count = [](const IntMat& cartan) {
        const std::size_t r = cartan.rows();
        std::vector<std::size_t> perm(r);
        std::iota(perm.begin(), perm.end(), 0);
        std::size_t count = 0;
        do {
            bool ok = true;
            for (std::size_t i = 0; i < r && ok; ++i)
                for (std::size_t j = 0; j < r && ok; ++j)
                    if ((cartan.at(i, j) != 0) != (cartan.at(perm[i], perm[j]) != 0))
                        ok = false;
            if (ok) ++count;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return count;
    };

    const std::vector<std::pair<std::string, std::size_t>> expected{
        {"A1", 1}, {"A2", 2}, {"A3", 2}, {"D4", 6}};
    for (const auto& [name, order] : expected) {
        const RootDatum rd = standard_root_datum(name);
        const std::size_t got = diagram_automorphisms(rd).size();
        if (got != order || got != graph_aut_count(cartan_matrix(rd))) {
            detail = "diagram automorphism order mismatch for " + name;
            return false;
        }
    }
    return true;
}

bool criterion_duality(std::string& detail) {
    for (int t = 0; t < 20; ++t) {
        const std::size_t n = 2 + static_cast<std::size_t>(t % 2);
        std::vector<IntVec> rays;
        const int count = coord(1, static_cast<int>(n) + 2);
        for (int i = 0; i < count; ++i) {
            IntVec v = random_vec(n, -3, 3);
            if (!is_zero_vec(v)) rays.push_back(v);
        }
        if (rays.empty()) {
            --t;
            continue;
        }
        const Cone c(n, Side::N, rays);
        const Cone dd = dual_cone(dual_cone(c));
        IntVec v(n, -3);
        while (true) {
            if (contains(c, v) != contains(dd, v)) {
                detail = "double dual changed membership";
                return false;
            }
            std::size_t pos = 0;
            while (pos < n) {
                v[pos] += 1;
                if (v[pos] <= 3) break;
                v[pos] = -3;
                ++pos;
            }
            if (pos == n) break;
        }
        if (is_strongly_convex(c) && extreme_rays(dd) != extreme_rays(c)) {
            detail = "double dual changed the extreme rays of a pointed cone";
            return false;
        }
    }

    const Cone slanted(2, Side::N, {{0, 1}, {2, -1}});
    const HilbertBasis hb = hilbert_basis(slanted);
    const std::vector<IntVec> expected{{0, 1}, {1, 0}, {2, -1}};
    if (hb.elements != expected) {
        detail = "Hilbert basis of the slanted cone is wrong";
        return false;
    }

    std::set<IntVec> reachable;
    for (Int c0 = 0; c0 <= 12; ++c0)
        for (Int c1 = 0; c1 <= 12; ++c1)
            for (Int c2 = 0; c2 <= 12; ++c2) {
                const IntVec p = vec_add(vec_add(vec_scale(c0, expected[0]),
                                                 vec_scale(c1, expected[1])),
                                         vec_scale(c2, expected[2]));
                if (abs_int(p[0]) <= 6 && abs_int(p[1]) <= 6) reachable.insert(p);
            }
    for (const IntVec& p : box_points(slanted, 6)) {
        if (!reachable.count(p)) {
            detail = "a boxed cone point does not decompose over the basis";
            return false;
        }
    }
    return true;
}

int run_command(const std::string& command) {
    const int status = std::system(command.c_str());
#ifndef _WIN32
    if (status == -1 || !WIFEXITED(status)) return -1;
    return WEXITSTATUS(status);
#else
    return status;
#endif
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool criterion_cli_determinism(const std::string& cli, const std::string& data_dir,
                               std::string& detail) {
    struct Job {
        std::string file;
        std::string args;
        int expected_exit;
    };
    const std::vector<Job> jobs{
        {"orthant2.json", "roots --bound 2", 0},
        {"re1.json", "verify", 0},
        {"re1.json", "build --format text", 0},
        {"re2.json", "aut", 0},
        {"halfline.json", "aut", 3},
        {"mat2.json", "reductive-aut", 0},
        {"torus2.json", "reductive-aut", 0},
        {"torus2.json", "validate --bound 2", 0},
    };
    for (const Job& job : jobs) {
        const std::string base =
            cli + " " + job.args + " --input " + data_dir + "/" + job.file;
        const std::string out_a = "acceptance_run_a.out";
        const std::string out_b = "acceptance_run_b.out";
        const int code_a = run_command(base + " --output " + out_a);
        const int code_b = run_command(base + " --output " + out_b);
        if (code_a != job.expected_exit || code_b != job.expected_exit) {
            detail = job.file + " (" + job.args + "): exit " + std::to_string(code_a) +
                     "/" + std::to_string(code_b) + ", expected " +
                     std::to_string(job.expected_exit);
            return false;
        }
        const std::string bytes_a = slurp(out_a);
        if (bytes_a.empty() || bytes_a != slurp(out_b)) {
            detail = job.file + " (" + job.args + "): outputs differ between runs";
            return false;
        }
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: acceptance <path-to-cli> <path-to-data-dir>\n";
        return 2;
    }
    const std::string cli = argv[1];
    const std::string data_dir = argv[2];

    int failures = 0;
    const auto report = [&failures](int index, const std::string& label,
                                    const std::function<bool(std::string&)>& fn) {
        std::string detail;
        bool ok = false;
        try {
            ok = fn(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        std::cout << "criterion " << index << " (" << label
                  << "): " << (ok ? "PASS" : "FAIL");
        if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
        std::cout << "\n";
        if (!ok) ++failures;
    };

    report(1, "bialgebra axioms on both reference monoids", criterion_bialgebra);
    report(2, "comultiplication matches the binomial oracle", criterion_comultiplication);
    report(3, "unit group follows the semidirect law", criterion_unit_group_law);
    report(4, "derivations are nilpotent of the pairing order", criterion_nilpotency);
    report(5, "root enumeration equals the box scan", criterion_root_enumeration);
    report(6, "outer symmetry groups match brute force", criterion_automorphisms);
    report(7, "reductive monoid reports", criterion_reductive);
    report(8, "duality and Hilbert basis oracles", criterion_duality);
    report(9, "CLI output is deterministic with contracted exit codes",
           [&](std::string& detail) {
               return criterion_cli_determinism(cli, data_dir, detail);
           });

    return failures == 0 ? 0 : 1;
}
