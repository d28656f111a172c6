#ifndef TORICMON_AUTOMORPHISMS_HPP
#define TORICMON_AUTOMORPHISMS_HPP

#include "toricmon/root_monoid.hpp"

#include <string>
#include <vector>

namespace toricmon {

/// True iff B fixes every character chi_r, written in the coordinates of
/// the q-basis of the face-orthogonal sublattice. B must be unimodular of
/// size n-k.
bool is_in_aut_T_chi(const RootMonoid& X, const IntMat& B);

/// True iff the unimodular n x n map A on the character lattice preserves
/// the face-orthogonal sublattice, maps the dual cone onto itself, and
/// fixes every root of E individually.
bool is_in_aut_M_sigma_tau_E(const RootMonoid& X, const IntMat& A);

struct OuterEnumeration {
    std::vector<IntMat> elements; // sorted, closed under product and inverse
    bool complete = false;        // true when the enumeration is provably exhaustive
    std::string note;
};

/// The finite group of lattice symmetries of (M, sigma, tau, E). When
/// sigma is full-dimensional the dual cone is pointed and ray assignments
/// enumerate every candidate; otherwise only maps with entries in
/// [-box_bound, box_bound] are searched and complete is false. Requires an
/// active collection.
OuterEnumeration enumerate_outer(const RootMonoid& X, const Int& box_bound = 2);

/// Checks that A acts as a monoid automorphism at the observable level:
/// the weight semigroup is preserved on a coordinate box, the Hilbert
/// basis is permuted, and the comultiplication commutes with the induced
/// algebra map on every Hilbert basis element.
bool verify_monoid_automorphism(const RootMonoid& X, const IntMat& A,
                                const Int& sample_bound = 3);

/// table[i][j] = index of elements[i] * elements[j]. Throws
/// std::logic_error when the list is not closed.
std::vector<std::vector<std::size_t>> composition_table(const std::vector<IntMat>& elements);

/// Conservative isomorphism-type annotation from the composition table:
/// cyclic/product/dihedral names for order <= 16 where the order profile
/// pins the group, else "unidentified".
std::string identify_small_group(const std::vector<std::vector<std::size_t>>& table);

struct AutReport {
    UnitGroupData inner;
    std::string inner_description;
    OuterEnumeration outer;
    std::vector<std::vector<std::size_t>> table;
    std::string outer_name;
    std::string root_preservation_note;
};

/// Assembles the automorphism group description of an active root monoid:
/// symbolic inner part from the unit group, enumerated outer part with
/// every element re-verified against the comultiplication. box_bound is
/// forwarded to enumerate_outer.
AutReport aut_report(const RootMonoid& X, const Int& box_bound = 2);

} // namespace toricmon

#endif
