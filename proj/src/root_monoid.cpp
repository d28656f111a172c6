#include "toricmon/root_monoid.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace toricmon {

namespace {

std::string vec_str(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) os << ",";
        os << v[i];
    }
    os << ")";
    return os.str();
}

RootMonoid assemble(const Cone& sigma, const Face& tau, CompatibleCollection E) {
    std::vector<IntVec> face_rays = tau.rays();
    const std::size_t n = sigma.rank();
    const std::size_t k = E.k();
    AdaptedBasis basis = extend_to_basis(face_rays, n);

    std::vector<IntVec> rows;
    for (std::size_t r = 0; r < k; ++r) rows.push_back(vec_scale(Int(-1), E.e1[r]));
    for (std::size_t j = k; j < n; ++j) rows.push_back(basis.dual[j]);
    const Int d = det(IntMat::from_rows(rows));
    if (d != 1 && d != -1) {
        throw ValidationError("the vectors -e1_r together with the dual basis of the "
                              "face complement do not form a lattice basis (determinant " +
                              d.str() + ")");
    }

    Cone dual = dual_cone(sigma);
    HilbertBasis hb = hilbert_basis(dual);
    return RootMonoid{sigma,           tau, std::move(E), std::move(basis),
                      std::move(dual), std::move(hb), std::move(face_rays)};
}

/// The raw comultiplication expansion; assumes only that u pairs
/// nonnegatively with the face rays.
TensorPoly comultiply_formula(const RootMonoid& X, const IntVec& u) {
    const std::size_t n = X.n();
    const IntVec zero(n, 0);
    TensorPoly result = TensorPoly::monomial(n, {u, u});
    for (std::size_t r = 0; r < X.k(); ++r) {
        const Int deg = pairing(u, X.face_rays()[r]);
        if (deg < 0) {
            throw ValidationError("comultiplication undefined: " + vec_str(u) +
                                  " pairs negatively with face ray " +
                                  vec_str(X.face_rays()[r]));
        }
        TensorPoly factor = TensorPoly::monomial(n, {zero, X.E.e1[r]}) +
                            TensorPoly::monomial(n, {X.E.e2[r], zero});
        for (Int i = 0; i < deg; ++i) result = result * factor;
    }
    return result;
}

Rat counit_formula(const RootMonoid& X, const IntVec& u) {
    for (const IntVec& p : X.face_rays())
        if (pairing(u, p) != 0) return Rat(0);
    return Rat(1);
}

void require_in_semigroup(const RootMonoid& X, const IntVec& u, const char* who) {
    if (u.size() != X.n())
        throw ValidationError(std::string(who) + ": exponent has wrong length");
    if (!contains(X.dual_sigma, u))
        throw ValidationError(std::string(who) + ": exponent " + vec_str(u) +
                              " is not in the weight semigroup");
}

void validate_point(const RootMonoid& X, const MonoidPoint& x) {
    switch (x.kind()) {
    case MonoidPoint::Kind::Primitive: {
        std::vector<std::string> problems;
        if (x.alpha().size() != X.k())
            problems.push_back("alpha must have one coordinate per face ray");
        if (x.t().size() != X.n() - X.k())
            problems.push_back("t must have one coordinate per torus factor");
        for (const Rat& c : x.t())
            if (c == 0) {
                problems.push_back("torus coordinates must be nonzero");
                break;
            }
        if (!problems.empty()) throw ValidationError(problems);
        return;
    }
    case MonoidPoint::Kind::Distinguished: {
        std::vector<std::string> problems;
        if (x.v().size() != X.n())
            problems.push_back("v must have one coordinate per lattice dimension");
        else if (!contains(X.sigma, x.v()))
            problems.push_back("v = " + vec_str(x.v()) + " is not in the cone");
        if (x.t().size() != X.n())
            problems.push_back("t must have one coordinate per lattice dimension");
        for (const Rat& c : x.t())
            if (c == 0) {
                problems.push_back("torus coordinates must be nonzero");
                break;
            }
        if (!problems.empty()) throw ValidationError(problems);
        return;
    }
    case MonoidPoint::Kind::Product:
        validate_point(X, x.left());
        validate_point(X, x.right());
        return;
    }
}

Rat eval_impl(const RootMonoid& X, const MonoidPoint& x, const IntVec& u) {
    switch (x.kind()) {
    case MonoidPoint::Kind::Primitive: {
        const std::size_t k = X.k();
        const std::size_t n = X.n();
        Rat value(1);
        std::vector<Int> a(k);
        for (std::size_t r = 0; r < k; ++r) {
            a[r] = pairing(u, X.face_rays()[r]);
            value *= rat_pow(x.alpha()[r], a[r]);
        }
        for (std::size_t j = k; j < n; ++j) {
            Int c = pairing(u, X.basis.primal[j]);
            for (std::size_t r = 0; r < k; ++r)
                c += a[r] * pairing(X.E.e1[r], X.basis.primal[j]);
            value *= rat_pow(x.t()[j - k], c);
        }
        return value;
    }
    case MonoidPoint::Kind::Distinguished: {
        if (pairing(u, x.v()) != 0) return Rat(0);
        Rat value(1);
        for (std::size_t i = 0; i < u.size(); ++i) value *= rat_pow(x.t()[i], u[i]);
        return value;
    }
    case MonoidPoint::Kind::Product: {
        const TensorPoly d = comultiply_formula(X, u);
        Rat value(0);
        for (const auto& [exps, coeff] : d.terms())
            value += coeff * eval_impl(X, x.left(), exps[0]) * eval_impl(X, x.right(), exps[1]);
        return value;
    }
    }
    throw std::logic_error("point_eval: unknown point kind");
}

Rat character_value(const RootMonoid& X, const IntVec& chi, const RatVec& t) {
    Rat value(1);
    for (std::size_t j = X.k(); j < X.n(); ++j)
        value *= rat_pow(t[j - X.k()], pairing(chi, X.basis.primal[j]));
    return value;
}

} // namespace

RootMonoid build(const Cone& sigma, const Face& tau, const std::vector<IntVec>& e1,
                 const std::vector<IntVec>& e2) {
    if (!is_strongly_convex(sigma))
        throw ValidationError("the cone is not strongly convex");
    CompatibleCollection E = make_compatible_collection(sigma, tau, e1, e2);
    return assemble(sigma, tau, std::move(E));
}

RootMonoid build_unchecked(const Cone& sigma, const Face& tau,
                           const std::vector<IntVec>& e1, const std::vector<IntVec>& e2) {
    std::vector<IntVec> chars;
    for (std::size_t r = 0; r < e1.size(); ++r) chars.push_back(vec_sub(e2[r], e1[r]));
    return assemble(sigma, tau, CompatibleCollection{sigma, tau, e1, e2, std::move(chars)});
}

bool in_weight_semigroup(const RootMonoid& X, const IntVec& u) {
    return u.size() == X.n() && contains(X.dual_sigma, u);
}

TensorPoly comultiply(const RootMonoid& X, const IntVec& u) {
    require_in_semigroup(X, u, "comultiply");
    return comultiply_formula(X, u);
}

Rat counit(const RootMonoid& X, const IntVec& u) {
    require_in_semigroup(X, u, "counit");
    return counit_formula(X, u);
}

BialgebraReport verify_bialgebra(const RootMonoid& X, std::size_t degree) {
    BialgebraReport report;
    report.degree = degree;

    const std::size_t n = X.n();
    std::set<IntVec> sample;
    sample.insert(IntVec(n, 0));
    std::set<IntVec> layer = sample;
    for (std::size_t d = 0; d < degree; ++d) {
        std::set<IntVec> next;
        for (const IntVec& s : layer)
            for (const IntVec& h : X.hilbert.elements) next.insert(vec_add(s, h));
        sample.insert(next.begin(), next.end());
        layer = std::move(next);
    }

    const auto delta = [&X](const IntVec& m) { return comultiply_formula(X, m); };
    const auto eps = [&X](const IntVec& m) { return counit_formula(X, m); };

    for (const IntVec& u : sample) {
        const TensorPoly d = comultiply_formula(X, u);

        if (report.closure.passed) {
            for (const auto& [exps, coeff] : d.terms()) {
                for (const IntVec& e : exps) {
                    if (!in_weight_semigroup(X, e)) {
                        report.closure.passed = false;
                        report.closure.witness = "Delta(chi^" + vec_str(u) +
                                                 ") has a tensor factor chi^" + vec_str(e) +
                                                 " outside the weight semigroup";
                        break;
                    }
                }
                if (!report.closure.passed) break;
            }
        }

        if (report.coassociativity.passed) {
            try {
                if (expand_leg(d, 0, delta) != expand_leg(d, 1, delta)) {
                    report.coassociativity.passed = false;
                    report.coassociativity.witness =
                        "(Delta x id)Delta and (id x Delta)Delta differ on chi^" + vec_str(u);
                }
            } catch (const ValidationError& err) {
                report.coassociativity.passed = false;
                report.coassociativity.witness = "coassociativity undefined on chi^" +
                                                 vec_str(u) + ": " + err.what();
            }
        }

        if (report.counit_axiom.passed) {
            const TensorPoly expected = TensorPoly::monomial(n, {u});
            if (contract_leg(d, 0, eps) != expected || contract_leg(d, 1, eps) != expected) {
                report.counit_axiom.passed = false;
                report.counit_axiom.witness =
                    "(epsilon x id)Delta or (id x epsilon)Delta is not the identity on chi^" +
                    vec_str(u);
            }
        }
    }

    report.exponents_checked = sample.size();
    return report;
}

UnitGroupData unit_group(const RootMonoid& X) {
    UnitGroupData ug;
    ug.k = X.k();
    ug.torus_rank = X.n() - X.k();
    ug.char_matrix = IntMat(ug.k, ug.torus_rank);
    for (std::size_t r = 0; r < ug.k; ++r)
        for (std::size_t j = 0; j < ug.torus_rank; ++j)
            ug.char_matrix.at(r, j) = pairing(X.E.chars[r], X.basis.primal[X.k() + j]);

    std::size_t zero_chars = 0;
    for (std::size_t r = 0; r < ug.k; ++r)
        if (is_zero_vec(X.E.chars[r])) ++zero_chars;

    // The center collects the torus kernel of the character map together
    // with the additive factors acted on by a trivial character.
    const std::size_t rank = ug.k == 0 || ug.torus_rank == 0 ? 0 : rank_q(ug.char_matrix);
    ug.center.dim = (ug.torus_rank - rank) + zero_chars;
    if (ug.k > 0 && ug.torus_rank > 0) {
        for (const Int& f : smith_normal_form(ug.char_matrix).invariant_factors())
            if (f != 1) ug.center.torsion.push_back(f);
    }
    return ug;
}

MonoidPoint MonoidPoint::primitive(RatVec alpha, RatVec t) {
    MonoidPoint x;
    x.kind_ = Kind::Primitive;
    x.alpha_ = std::move(alpha);
    x.t_ = std::move(t);
    return x;
}

MonoidPoint MonoidPoint::distinguished(IntVec v, RatVec t) {
    MonoidPoint x;
    x.kind_ = Kind::Distinguished;
    x.v_ = std::move(v);
    x.t_ = std::move(t);
    return x;
}

MonoidPoint MonoidPoint::product(MonoidPoint left, MonoidPoint right) {
    MonoidPoint x;
    x.kind_ = Kind::Product;
    x.left_ = std::make_shared<const MonoidPoint>(std::move(left));
    x.right_ = std::make_shared<const MonoidPoint>(std::move(right));
    return x;
}

MonoidPoint identity_point(const RootMonoid& X) {
    return MonoidPoint::primitive(RatVec(X.k(), Rat(0)), RatVec(X.n() - X.k(), Rat(1)));
}

Rat point_eval(const RootMonoid& X, const MonoidPoint& x, const IntVec& u) {
    validate_point(X, x);
    require_in_semigroup(X, u, "point_eval");
    return eval_impl(X, x, u);
}

MonoidPoint point_multiply(const RootMonoid& X, const MonoidPoint& x, const MonoidPoint& y) {
    validate_point(X, x);
    validate_point(X, y);
    if (x.kind() != MonoidPoint::Kind::Primitive || y.kind() != MonoidPoint::Kind::Primitive)
        return MonoidPoint::product(x, y);

    RatVec alpha(X.k());
    for (std::size_t r = 0; r < X.k(); ++r)
        alpha[r] = x.alpha()[r] + character_value(X, X.E.chars[r], x.t()) * y.alpha()[r];
    RatVec t(X.n() - X.k());
    for (std::size_t j = 0; j < t.size(); ++j) t[j] = x.t()[j] * y.t()[j];
    MonoidPoint result = MonoidPoint::primitive(std::move(alpha), std::move(t));

    const MonoidPoint formal = MonoidPoint::product(x, y);
    for (const IntVec& h : X.hilbert.elements) {
        if (eval_impl(X, result, h) != eval_impl(X, formal, h))
            throw std::logic_error("point_multiply: unit group law disagrees with the "
                                   "comultiplication at chi^" + vec_str(h));
    }
    return result;
}

} // namespace toricmon
