#ifndef TORICMON_ROOT_MONOID_HPP
#define TORICMON_ROOT_MONOID_HPP

#include "toricmon/cone.hpp"
#include "toricmon/demazure.hpp"
#include "toricmon/laurent.hpp"

#include <memory>
#include <string>
#include <vector>

namespace toricmon {

/// Validated (sigma, tau, E) bundle together with the derived data every
/// computation needs: the adapted lattice basis p_1..p_k, p'_{k+1}..p'_n
/// with dual q_1..q_n, the dual cone, and the Hilbert basis of its
/// semigroup of lattice points.
struct RootMonoid {
    Cone sigma;
    Face tau;
    CompatibleCollection E;
    AdaptedBasis basis;
    Cone dual_sigma;
    HilbertBasis hilbert;

    std::size_t n() const { return sigma.rank(); }
    std::size_t k() const { return E.k(); }

    /// tau's primitive ray generators p_1..p_k, in collection order.
    const std::vector<IntVec>& face_rays() const { return face_rays_; }

    std::vector<IntVec> face_rays_;
};

/// Full validation: sigma strongly convex, tau a regular face, the roots
/// compatible, and the derived character basis unimodular. Throws
/// ValidationError with the itemized failures.
RootMonoid build(const Cone& sigma, const Face& tau, const std::vector<IntVec>& e1,
                 const std::vector<IntVec>& e2);

/// Assembles the bundle without the compatibility checks. Exists so tests
/// can probe how the verification report reacts to broken inputs; not part
/// of the supported construction path.
RootMonoid build_unchecked(const Cone& sigma, const Face& tau,
                           const std::vector<IntVec>& e1, const std::vector<IntVec>& e2);

/// Membership of u in the weight semigroup of lattice points of the dual
/// cone.
bool in_weight_semigroup(const RootMonoid& X, const IntVec& u);

/// The comultiplication on the character chi^u, fully expanded:
/// Delta(chi^u) = (chi^u x chi^u) * prod_r (1 x chi^{e1_r} + chi^{e2_r} x 1)^{<p_r,u>}.
TensorPoly comultiply(const RootMonoid& X, const IntVec& u);

/// Counit: 1 when u vanishes on all face rays, else 0.
Rat counit(const RootMonoid& X, const IntVec& u);

struct AxiomCheck {
    bool passed = true;
    std::string witness; // first counterexample, empty when passed
};

struct BialgebraReport {
    AxiomCheck closure, coassociativity, counit_axiom;
    std::size_t degree = 3;     // products of up to this many generators checked
    std::size_t exponents_checked = 0;

    bool all_passed() const {
        return closure.passed && coassociativity.passed && counit_axiom.passed;
    }
};

/// Checks closure, coassociativity and the counit axiom for Delta on every
/// Hilbert basis element and every product of up to `degree` of them.
BialgebraReport verify_bialgebra(const RootMonoid& X, std::size_t degree = 3);

struct CenterData {
    std::size_t dim = 0;
    std::vector<Int> torsion; // invariant factors > 1 of the character matrix
};

struct UnitGroupData {
    std::size_t k = 0;
    std::size_t torus_rank = 0;
    IntMat char_matrix; // k x torus_rank, rows = chi_r in the q_{k+1..n} coordinates
    CenterData center;
};

UnitGroupData unit_group(const RootMonoid& X);

/// Point of the monoid: an element of the unit group in (alpha, t)
/// coordinates, a monomial limit point attached to a one-parameter
/// subgroup direction v in sigma, or a formal product evaluated through
/// the comultiplication.
class MonoidPoint {
public:
    enum class Kind { Primitive, Distinguished, Product };

    static MonoidPoint primitive(RatVec alpha, RatVec t);
    static MonoidPoint distinguished(IntVec v, RatVec t);
    static MonoidPoint product(MonoidPoint left, MonoidPoint right);

    Kind kind() const { return kind_; }
    const RatVec& alpha() const { return alpha_; }
    const RatVec& t() const { return t_; }
    const IntVec& v() const { return v_; }
    const MonoidPoint& left() const { return *left_; }
    const MonoidPoint& right() const { return *right_; }

private:
    MonoidPoint() = default;
    Kind kind_ = Kind::Primitive;
    RatVec alpha_, t_;
    IntVec v_;
    std::shared_ptr<const MonoidPoint> left_, right_;
};

/// The identity of the unit group: alpha = 0, t = 1.
MonoidPoint identity_point(const RootMonoid& X);

/// Exact evaluation of chi^u at a point.
Rat point_eval(const RootMonoid& X, const MonoidPoint& x, const IntVec& u);

/// Product of two points. Two Primitive points are normalized through the
/// semidirect-product law (alpha + chibar(t) alpha', t t'), cross-checked
/// against the comultiplication on the Hilbert basis.
MonoidPoint point_multiply(const RootMonoid& X, const MonoidPoint& x, const MonoidPoint& y);

} // namespace toricmon

#endif
