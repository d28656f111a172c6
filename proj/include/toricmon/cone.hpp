#ifndef TORICMON_CONE_HPP
#define TORICMON_CONE_HPP

#include "toricmon/lattice.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace toricmon {

/// Which of the two dual lattices a vector or cone lives in. M carries
/// characters, N carries one-parameter subgroups; the pairing is the
/// coordinate dot product.
enum class Side { M, N };

Side opposite(Side s);

/// Finitely generated rational polyhedral cone. Generators are stored
/// canonically: primitive, deduplicated, sorted lexicographically. The
/// empty generator list is the zero cone.
class Cone {
public:
    Cone(std::size_t rank, Side side, std::vector<IntVec> generators);

    static Cone zero(std::size_t rank, Side side) { return Cone(rank, side, {}); }

    std::size_t rank() const { return rank_; }
    Side side() const { return side_; }
    const std::vector<IntVec>& generators() const { return generators_; }

    /// Dimension of the linear span.
    std::size_t dim() const;

    bool operator==(const Cone& other) const = default;

private:
    std::size_t rank_ = 0;
    Side side_ = Side::N;
    std::vector<IntVec> generators_;
};

/// {m : <m, v> >= 0 for all v in c}, as a generated cone on the opposite
/// side. When the dual has a lineality space, the canonical generator list
/// is the pointed part's extreme rays together with both signs of the
/// canonical lineality basis.
Cone dual_cone(const Cone& c);

/// Primitive generators of the one-dimensional faces, sorted. Requires a
/// strongly convex cone.
std::vector<IntVec> extreme_rays(const Cone& c);

/// True iff c contains no line.
bool is_strongly_convex(const Cone& c);

/// Canonical basis (row Hermite form) of the largest linear subspace
/// contained in c.
std::vector<IntVec> lineality_basis(const Cone& c);

/// Facet-inequality membership test.
bool contains(const Cone& c, const IntVec& v);

/// Face of a cone, recorded as the set of parent extreme rays it contains,
/// together with a supporting functional vanishing exactly on those rays.
struct Face {
    Cone parent;
    std::vector<std::size_t> ray_indices; // sorted, 0-based into extreme_rays(parent)
    IntVec witness;                       // in the dual lattice; zero for the full face
    std::size_t dim = 0;

    std::vector<IntVec> rays() const;
};

/// Validates that the selected rays span a face (a supporting functional
/// vanishing exactly on them exists) and builds it.
Face make_face(const Cone& parent, std::vector<std::size_t> ray_indices);

/// All faces of the given dimension, sorted by ray-index set.
std::vector<Face> faces_of_dimension(const Cone& c, std::size_t d);

/// True iff the primitive ray generators of f extend to a basis of the
/// ambient lattice (all Smith invariant factors 1).
bool is_regular_face(const Face& f);

struct HilbertBasis {
    std::vector<IntVec> elements;   // sorted lexicographically
    Int degree_bound_used = 0;      // coordinate box radius the search needed
};

/// Minimal generating set of the semigroup of lattice points of c. For a
/// cone with lineality the returned list is both signs of the canonical
/// lineality-lattice basis together with the Hilbert basis of the pointed
/// part (nothing is irreducible once units exist, but the list still
/// generates). degree_bound, when given, must cover the parallelepiped
/// search box or the call fails; by default the box is sized automatically.
HilbertBasis hilbert_basis(const Cone& c, std::optional<Int> degree_bound = std::nullopt);

} // namespace toricmon

#endif
