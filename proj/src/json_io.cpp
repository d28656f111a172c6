#include "toricmon/json_io.hpp"

#include <limits>
#include <utility>

namespace toricmon {

namespace {

[[noreturn]] void malformed(const std::string& where, const std::string& what) {
    throw MalformedInput(where + ": " + what);
}

const Json& require_field(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) malformed(where, "expected a JSON object");
    const auto it = j.find(key);
    if (it == j.end()) malformed(where, std::string("missing field \"") + key + "\"");
    return *it;
}

std::size_t size_from_json(const Json& j, const std::string& where) {
    const Int a = int_from_json(j, where);
    if (a < 0 || a > 1024) malformed(where, "expected a small non-negative integer");
    return a.convert_to<std::size_t>();
}

Json axiom_to_json(const AxiomCheck& check) {
    Json j;
    j["passed"] = check.passed;
    if (!check.passed) j["witness"] = check.witness;
    return j;
}

Json table_to_json(const std::vector<std::vector<std::size_t>>& table) {
    Json rows = Json::array();
    for (const auto& row : table) rows.push_back(Json(row));
    return rows;
}

} // namespace

Json int_to_json(const Int& a) {
    static const Int lo(std::numeric_limits<long long>::min());
    static const Int hi(std::numeric_limits<long long>::max());
    if (a >= lo && a <= hi) return Json(a.convert_to<long long>());
    return Json(a.str());
}

Int int_from_json(const Json& j, const std::string& where) {
    if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return Int(s);
        } catch (const std::runtime_error&) {
            malformed(where, "bad integer literal \"" + s + "\"");
        }
    }
    malformed(where, "expected an integer");
}

Json rat_to_json(const Rat& r) {
    if (boost::multiprecision::denominator(r) == 1)
        return int_to_json(boost::multiprecision::numerator(r));
    return Json(rat_to_string(r));
}

Rat rat_from_json(const Json& j, const std::string& where) {
    if (j.is_number_unsigned()) return Rat(Int(j.get<unsigned long long>()));
    if (j.is_number_integer()) return Rat(Int(j.get<long long>()));
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        try {
            return rat_from_string(s);
        } catch (const std::invalid_argument&) {
            malformed(where, "bad rational literal \"" + s + "\"");
        }
    }
    malformed(where, "expected an integer or a rational string \"p/q\"");
}

Json vec_to_json(const IntVec& v) {
    Json a = Json::array();
    for (const Int& x : v) a.push_back(int_to_json(x));
    return a;
}

IntVec vec_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) malformed(where, "expected an array of integers");
    IntVec v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(int_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

Json vec_list_to_json(const std::vector<IntVec>& rows) {
    Json a = Json::array();
    for (const IntVec& row : rows) a.push_back(vec_to_json(row));
    return a;
}

std::vector<IntVec> vec_list_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) malformed(where, "expected an array of integer arrays");
    std::vector<IntVec> rows;
    rows.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        rows.push_back(vec_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return rows;
}

Json mat_to_json(const IntMat& m) {
    return vec_list_to_json(m.row_vectors());
}

IntMat mat_from_json(const Json& j, const std::string& where) {
    const std::vector<IntVec> rows = vec_list_from_json(j, where);
    if (rows.empty()) return IntMat();
    for (const IntVec& row : rows)
        if (row.size() != rows.front().size()) malformed(where, "rows have unequal lengths");
    return IntMat::from_rows(rows);
}

Json rat_vec_to_json(const RatVec& v) {
    Json a = Json::array();
    for (const Rat& x : v) a.push_back(rat_to_json(x));
    return a;
}

RatVec rat_vec_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) malformed(where, "expected an array of rationals");
    RatVec v;
    v.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(rat_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    return v;
}

Json rat_mat_to_json(const RatMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t jj = 0; jj < m.cols(); ++jj) row.push_back(rat_to_json(m.at(i, jj)));
        rows.push_back(row);
    }
    return rows;
}

RatMat rat_mat_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) malformed(where, "expected an array of rational arrays");
    std::vector<RatVec> rows;
    for (std::size_t i = 0; i < j.size(); ++i)
        rows.push_back(rat_vec_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    if (rows.empty()) return RatMat();
    const std::size_t cols = rows.front().size();
    for (const RatVec& row : rows)
        if (row.size() != cols) malformed(where, "rows have unequal lengths");
    RatMat m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t jj = 0; jj < cols; ++jj) m.at(i, jj) = rows[i][jj];
    return m;
}

Json cone_to_json(const Cone& c) {
    Json j;
    j["rank"] = c.rank();
    j["rays"] = vec_list_to_json(c.generators());
    return j;
}

Cone cone_from_json(const Json& j, Side side, const std::string& where) {
    const std::size_t n = size_from_json(require_field(j, "rank", where), where + ".rank");
    const std::vector<IntVec> rays =
        vec_list_from_json(require_field(j, "rays", where), where + ".rays");
    for (const IntVec& ray : rays)
        if (ray.size() != n) malformed(where + ".rays", "each ray must have length equal to the rank");
    return Cone(n, side, rays);
}

Json face_to_json(const Face& f) {
    Json j;
    j["ray_indices"] = Json(f.ray_indices);
    return j;
}

std::vector<std::size_t> ray_indices_from_json(const Json& j, const std::string& where) {
    const Json& arr = require_field(j, "ray_indices", where);
    if (!arr.is_array()) malformed(where + ".ray_indices", "expected an array of indices");
    std::vector<std::size_t> indices;
    indices.reserve(arr.size());
    for (std::size_t i = 0; i < arr.size(); ++i)
        indices.push_back(
            size_from_json(arr[i], where + ".ray_indices[" + std::to_string(i) + "]"));
    return indices;
}

MonoidInput monoid_input_from_json(const Json& j) {
    Cone sigma = cone_from_json(require_field(j, "cone", "monoid"), Side::N, "monoid.cone");
    std::vector<std::size_t> indices =
        ray_indices_from_json(require_field(j, "face", "monoid"), "monoid.face");
    std::vector<IntVec> e1 = vec_list_from_json(require_field(j, "e1", "monoid"), "monoid.e1");
    std::vector<IntVec> e2 = vec_list_from_json(require_field(j, "e2", "monoid"), "monoid.e2");
    for (const IntVec& e : e1)
        if (e.size() != sigma.rank())
            malformed("monoid.e1", "each root must have length equal to the cone rank");
    for (const IntVec& e : e2)
        if (e.size() != sigma.rank())
            malformed("monoid.e2", "each root must have length equal to the cone rank");
    return MonoidInput{std::move(sigma), std::move(indices), std::move(e1), std::move(e2)};
}

Json monoid_input_to_json(const MonoidInput& input) {
    Json j;
    j["cone"] = cone_to_json(input.sigma);
    j["face"] = Json{{"ray_indices", Json(input.ray_indices)}};
    j["e1"] = vec_list_to_json(input.e1);
    j["e2"] = vec_list_to_json(input.e2);
    return j;
}

ReductiveInput reductive_input_from_json(const Json& j) {
    if (!j.is_object()) malformed("input", "expected a JSON object");
    RootDatum datum = [&j]() -> RootDatum {
        if (j.contains("standard")) {
            const Json& name = j.at("standard");
            if (!name.is_string()) malformed("input.standard", "expected a string name");
            try {
                return standard_root_datum(name.get<std::string>());
            } catch (const ValidationError& e) {
                malformed("input.standard", e.what());
            }
        }
        return root_datum_from_json(require_field(j, "root_datum", "input"));
    }();
    Cone cone = cone_from_json(require_field(j, "cone", "input"), Side::N, "input.cone");
    if (cone.rank() != datum.ambient_rank)
        malformed("input.cone", "rank must equal the root datum rank");
    return ReductiveInput{std::move(datum), std::move(cone)};
}

Json root_datum_to_json(const RootDatum& rd) {
    Json j;
    j["rank"] = rd.ambient_rank;
    j["radical_rank"] = rd.radical_rank;
    Json roots = Json::array();
    for (const RatVec& v : rd.simple_roots) roots.push_back(rat_vec_to_json(v));
    j["simple_roots"] = roots;
    Json coroots = Json::array();
    for (const RatVec& v : rd.simple_coroots) coroots.push_back(rat_vec_to_json(v));
    j["simple_coroots"] = coroots;
    j["char_lattice"] = rat_mat_to_json(rd.char_lattice);
    return j;
}

RootDatum root_datum_from_json(const Json& j) {
    const std::string where = "root_datum";
    const std::size_t n = size_from_json(require_field(j, "rank", where), where + ".rank");
    const std::size_t k =
        size_from_json(require_field(j, "radical_rank", where), where + ".radical_rank");

    const auto parse_vectors = [&](const char* key) {
        const Json& arr = require_field(j, key, where);
        const std::string label = where + "." + key;
        if (!arr.is_array()) malformed(label, "expected an array of vectors");
        std::vector<RatVec> vectors;
        for (std::size_t i = 0; i < arr.size(); ++i) {
            RatVec v = rat_vec_from_json(arr[i], label + "[" + std::to_string(i) + "]");
            if (v.size() != n) malformed(label, "each vector must have length equal to the rank");
            vectors.push_back(std::move(v));
        }
        return vectors;
    };

    std::vector<RatVec> roots = parse_vectors("simple_roots");
    std::vector<RatVec> coroots = parse_vectors("simple_coroots");
    RatMat lattice =
        rat_mat_from_json(require_field(j, "char_lattice", where), where + ".char_lattice");
    if (lattice.rows() != n || lattice.cols() != n)
        malformed(where + ".char_lattice", "expected an n x n matrix");
    return make_root_datum(n, k, std::move(roots), std::move(coroots), std::move(lattice));
}

Json laurent_to_json(const LaurentPoly& f) {
    Json terms = Json::array();
    for (const auto& [exp, coeff] : f.terms()) {
        Json t;
        t["coeff"] = rat_to_string(coeff);
        t["exp"] = vec_to_json(exp);
        terms.push_back(t);
    }
    return terms;
}

Json tensor_to_json(const TensorPoly& t) {
    Json terms = Json::array();
    for (const auto& [exps, coeff] : t.terms()) {
        Json term;
        term["coeff"] = rat_to_string(coeff);
        term["exp"] = vec_list_to_json(exps);
        terms.push_back(term);
    }
    return terms;
}

Json hilbert_to_json(const HilbertBasis& hb) {
    Json j;
    j["degree_bound_used"] = int_to_json(hb.degree_bound_used);
    j["elements"] = vec_list_to_json(hb.elements);
    return j;
}

Json root_enumeration_to_json(const RootEnumeration& found, const std::vector<IntVec>& rays) {
    Json j;
    j["finite_by_ray"] = Json(found.finite_by_ray);
    j["rays"] = vec_list_to_json(rays);
    Json by_ray = Json::array();
    for (const auto& roots : found.roots_by_ray) by_ray.push_back(vec_list_to_json(roots));
    j["roots_by_ray"] = by_ray;
    return j;
}

Json unit_group_to_json(const UnitGroupData& ug) {
    Json center;
    center["dim"] = ug.center.dim;
    Json torsion = Json::array();
    for (const Int& f : ug.center.torsion) torsion.push_back(int_to_json(f));
    center["torsion"] = torsion;

    Json j;
    j["center"] = center;
    j["char_matrix"] = mat_to_json(ug.char_matrix);
    j["k"] = ug.k;
    j["torus_rank"] = ug.torus_rank;
    return j;
}

Json monoid_summary_to_json(const RootMonoid& X) {
    Json j;
    j["chars"] = vec_list_to_json(X.E.chars);
    j["dual_cone"] = cone_to_json(X.dual_sigma);
    j["face_rays"] = vec_list_to_json(X.face_rays());
    j["hilbert_basis"] = hilbert_to_json(X.hilbert);
    j["k"] = X.k();
    j["n"] = X.n();
    j["unit_group"] = unit_group_to_json(unit_group(X));
    return j;
}

Json bialgebra_report_to_json(const BialgebraReport& report) {
    Json j;
    j["closure"] = axiom_to_json(report.closure);
    j["coassoc"] = axiom_to_json(report.coassociativity);
    j["counit"] = axiom_to_json(report.counit_axiom);
    j["degree"] = report.degree;
    j["exponents_checked"] = report.exponents_checked;
    j["passed"] = report.all_passed();
    return j;
}

Json aut_report_to_json(const AutReport& report) {
    Json inner = unit_group_to_json(report.inner);
    inner["description"] = report.inner_description;

    Json outer;
    outer["complete"] = report.outer.complete;
    Json elements = Json::array();
    for (const IntMat& a : report.outer.elements) elements.push_back(mat_to_json(a));
    outer["elements"] = elements;
    outer["name"] = report.outer_name;
    outer["note"] = report.outer.note;
    outer["order"] = report.outer.elements.size();
    outer["table"] = table_to_json(report.table);

    Json j;
    j["inner"] = inner;
    j["outer"] = outer;
    j["root_preservation_note"] = report.root_preservation_note;
    return j;
}

Json vinberg_report_to_json(const VinbergReport& report) {
    Json j;
    if (report.dual) j["dual_cone"] = cone_to_json(*report.dual);
    j["problems"] = Json(report.problems);
    j["valid"] = report.valid;
    j["weight_box"] = int_to_json(report.weight_box);
    j["weight_sample"] = vec_list_to_json(report.weight_sample);
    return j;
}

Json reductive_report_to_json(const ReductiveAutReport& report) {
    Json outer;
    outer["complete"] = report.outer.complete;
    Json elements = Json::array();
    for (const GDCElement& el : report.outer.elements) {
        Json e;
        Json decompositions = Json::array();
        for (const auto& [phi, pi] : el.decompositions) {
            Json d;
            d["phi"] = mat_to_json(phi);
            d["pi"] = Json(pi);
            decompositions.push_back(d);
        }
        e["decompositions"] = decompositions;
        e["on_chars"] = mat_to_json(el.on_chars);
        e["on_cochars"] = mat_to_json(el.on_cochars);
        elements.push_back(e);
    }
    outer["elements"] = elements;
    outer["name"] = report.outer_name;
    outer["note"] = report.outer.note;
    outer["order"] = report.outer.elements.size();
    outer["table"] = table_to_json(report.table);

    Json j;
    j["center_order"] = int_to_json(report.center_order);
    j["inner_description"] = report.inner_description;
    j["outer"] = outer;
    return j;
}

std::string dump_canonical(const Json& j) {
    return j.dump(2) + "\n";
}

namespace {

std::string inline_json(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

bool renders_inline(const Json& j) {
    if (j.is_object()) return j.empty();
    if (j.is_array()) return j.empty() || j.dump().size() <= 60;
    return true;
}

void render_lines(const Json& j, std::size_t indent, std::string& out) {
    const std::string pad(indent, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (renders_inline(value)) {
                out += pad + key + ": " + inline_json(value) + "\n";
            } else {
                out += pad + key + ":\n";
                render_lines(value, indent + 2, out);
            }
        }
    } else if (j.is_array()) {
        for (const Json& value : j) {
            if (renders_inline(value)) {
                out += pad + "- " + inline_json(value) + "\n";
            } else {
                out += pad + "-\n";
                render_lines(value, indent + 2, out);
            }
        }
    } else {
        out += pad + inline_json(j) + "\n";
    }
}

} // namespace

std::string render_text(const Json& j) {
    std::string out;
    render_lines(j, 0, out);
    return out;
}

} // namespace toricmon
