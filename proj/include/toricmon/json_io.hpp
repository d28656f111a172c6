#ifndef TORICMON_JSON_IO_HPP
#define TORICMON_JSON_IO_HPP

#include "toricmon/automorphisms.hpp"
#include "toricmon/cone.hpp"
#include "toricmon/demazure.hpp"
#include "toricmon/laurent.hpp"
#include "toricmon/reductive.hpp"
#include "toricmon/root_monoid.hpp"

#include <json.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricmon {

/// Object keys live in a sorted map, so serialization order is canonical.
using Json = nlohmann::json;

/// Thrown when a JSON document does not match the expected schema. Kept
/// distinct from ValidationError so callers can tell malformed input apart
/// from well-formed input that fails mathematical validation.
class MalformedInput : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Scalars. Integers serialize as JSON numbers while they fit in 64 bits
// and as decimal strings beyond that; parsing accepts both forms.
// Rationals serialize as numbers when integral and as "p/q" strings
// otherwise, except inside term lists where the coefficient is always a
// string.
Json int_to_json(const Int& a);
Int int_from_json(const Json& j, const std::string& where);
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j, const std::string& where);

// Vectors are integer arrays; matrices and vector lists are row-major
// arrays of arrays.
Json vec_to_json(const IntVec& v);
IntVec vec_from_json(const Json& j, const std::string& where);
Json vec_list_to_json(const std::vector<IntVec>& rows);
std::vector<IntVec> vec_list_from_json(const Json& j, const std::string& where);
Json mat_to_json(const IntMat& m);
IntMat mat_from_json(const Json& j, const std::string& where);
Json rat_vec_to_json(const RatVec& v);
RatVec rat_vec_from_json(const Json& j, const std::string& where);
Json rat_mat_to_json(const RatMat& m);
RatMat rat_mat_from_json(const Json& j, const std::string& where);

/// {"rank": n, "rays": [[...], ...]}
Json cone_to_json(const Cone& c);
Cone cone_from_json(const Json& j, Side side, const std::string& where = "cone");

/// {"ray_indices": [...]}, 0-based into extreme_rays of the parent.
Json face_to_json(const Face& f);
std::vector<std::size_t> ray_indices_from_json(const Json& j,
                                               const std::string& where = "face");

/// The bundle the monoid subcommands consume: cone, face and the two root
/// lists of the collection.
struct MonoidInput {
    Cone sigma;
    std::vector<std::size_t> ray_indices;
    std::vector<IntVec> e1, e2;
};

/// {"cone": {...}, "face": {...}, "e1": [[...], ...], "e2": [[...], ...]}
MonoidInput monoid_input_from_json(const Json& j);
Json monoid_input_to_json(const MonoidInput& input);

/// A root datum given explicitly ({"root_datum": {...}}) or by standard
/// name ({"standard": "Mat2"}), plus the cone in the cocharacter space.
struct ReductiveInput {
    RootDatum datum;
    Cone cone;
};

ReductiveInput reductive_input_from_json(const Json& j);

/// {"rank": n, "radical_rank": k, "simple_roots": [...],
///  "simple_coroots": [...], "char_lattice": [[...]]}
Json root_datum_to_json(const RootDatum& rd);
RootDatum root_datum_from_json(const Json& j);

// Term lists: [{"coeff": "p/q", "exp": [...]}, ...], sorted by exponent.
// Tensor terms carry one exponent array per leg.
Json laurent_to_json(const LaurentPoly& f);
Json tensor_to_json(const TensorPoly& t);

// Reports.
Json hilbert_to_json(const HilbertBasis& hb);
Json root_enumeration_to_json(const RootEnumeration& found, const std::vector<IntVec>& rays);
Json unit_group_to_json(const UnitGroupData& ug);
Json monoid_summary_to_json(const RootMonoid& X);
Json bialgebra_report_to_json(const BialgebraReport& report);
Json aut_report_to_json(const AutReport& report);
Json vinberg_report_to_json(const VinbergReport& report);
Json reductive_report_to_json(const ReductiveAutReport& report);

/// Canonical serialization: two-space indent, sorted keys, trailing
/// newline. Every byte of CLI output funnels through here or render_text.
std::string dump_canonical(const Json& j);

/// Human-readable rendering of the same tree: "key: value" lines with
/// indentation, arrays of scalars inline. Deterministic.
std::string render_text(const Json& j);

} // namespace toricmon

#endif
