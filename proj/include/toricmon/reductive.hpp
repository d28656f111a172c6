#ifndef TORICMON_REDUCTIVE_HPP
#define TORICMON_REDUCTIVE_HPP

#include "toricmon/automorphisms.hpp"
#include "toricmon/cone.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace toricmon {

/// Combinatorial description of a connected reductive group: the ambient
/// cocharacter space carries the simple coroots, its dual the simple roots,
/// and char_lattice rows span the character lattice of the maximal torus.
struct RootDatum {
    std::size_t ambient_rank = 0; // n
    std::size_t radical_rank = 0; // k, with k + #roots = n
    std::vector<RatVec> simple_roots;
    std::vector<RatVec> simple_coroots;
    RatMat char_lattice; // n x n, rows a basis of the character lattice

    std::size_t semisimple_rank() const { return simple_roots.size(); }
};

/// Validating constructor; throws ValidationError with every failed
/// condition itemized.
RootDatum make_root_datum(std::size_t ambient_rank, std::size_t radical_rank,
                          std::vector<RatVec> simple_roots,
                          std::vector<RatVec> simple_coroots, RatMat char_lattice);

/// Ready-made data: "A1".."A4", "B2".."B4", "C2".."C4", "D2".."D4" (simply
/// connected, Cartan realization), "GL1".."GL4", and "Mat2".."Mat4" as
/// aliases for the GL data.
RootDatum standard_root_datum(const std::string& name);

/// C_ij = <alpha_i, alpha_j^vee>. Throws when a pairing is not an integer
/// or a diagonal entry is not 2.
IntMat cartan_matrix(const RootDatum& rd);

/// All permutations of the simple roots preserving the Cartan matrix,
/// sorted; brute force over the symmetric group.
std::vector<std::vector<std::size_t>> diagram_automorphisms(const RootDatum& rd);

/// lambda must lie in the character lattice; true iff it pairs >= 0 with
/// every simple coroot.
bool is_dominant(const RootDatum& rd, const RatVec& lambda);

/// True iff v pairs <= 0 with every simple root.
bool in_neg_weyl_chamber(const RootDatum& rd, const RatVec& v);

struct VinbergReport {
    bool valid = false;
    std::vector<std::string> problems;
    std::optional<Cone> dual; // the dual cone, present when valid
    std::vector<IntVec> weight_sample; // coordinates in the char_lattice basis
    Int weight_box = 0;
};

/// Checks the monoid-cone conditions: strong convexity, containment of
/// every simple coroot, and membership of each non-coroot generator in the
/// closed negative Weyl chamber. On success also samples the weight monoid
/// (dual-cone lattice points) in a coordinate box.
VinbergReport validate_vinberg_cone(const RootDatum& rd, const Cone& c,
                                    const Int& weight_box = 3);

struct GDCElement {
    IntMat on_cochars; // action on the cocharacter lattice, basis coordinates
    IntMat on_chars;   // contragredient action on the character lattice
    // (phi, pi): induced map on the radical character quotient plus the
    // diagram permutation carrying the coroots.
    std::vector<std::pair<IntMat, std::vector<std::size_t>>> decompositions;
};

struct GDCEnumeration {
    std::vector<GDCElement> elements; // sorted, a group under on_cochars
    bool complete = false;
    std::string note;
};

/// The finite symmetry group of (root datum, cone): lattice maps fixing
/// the cone, permuting the coroots by a diagram automorphism, and
/// stabilizing the radical splitting. Exhaustive via ray assignment when
/// the cone is full-dimensional, else an entry-bounded search.
GDCEnumeration enumerate_aut_GDC(const RootDatum& rd, const Cone& c, const Int& box_bound = 2);

struct ReductiveAutReport {
    Int center_order = 1; // |Z(G_s)| from lattice indices
    std::string inner_description;
    GDCEnumeration outer;
    std::vector<std::vector<std::size_t>> table;
    std::string outer_name;
};

ReductiveAutReport reductive_aut_report(const RootDatum& rd, const Cone& c,
                                        const Int& box_bound = 2);

} // namespace toricmon

#endif
