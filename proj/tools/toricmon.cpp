#include "toricmon/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using namespace toricmon;

namespace {

constexpr int kExitOk = 0;         // success, everything verified
constexpr int kExitMalformed = 1;  // unreadable or schema-violating input
constexpr int kExitInvalid = 2;    // mathematical validation failed
constexpr int kExitIncomplete = 3; // enumeration could not be exhaustive

struct Options {
    std::string input;
    long long bound = 2;
    long long degree_bound = 3;
    std::string format = "json";
    std::string output;
};

Json load_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw MalformedInput("cannot open input file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const Json::exception& e) {
        throw MalformedInput(std::string("input is not valid JSON: ") + e.what());
    }
}

int emit(const Json& report, const Options& opt, int code) {
    const std::string payload =
        opt.format == "text" ? render_text(report) : dump_canonical(report);
    if (opt.output.empty()) {
        std::cout << payload;
    } else {
        std::ofstream out(opt.output, std::ios::binary);
        if (!out) {
            std::cerr << "cannot open output file: " << opt.output << "\n";
            return kExitMalformed;
        }
        out << payload;
    }
    return code;
}

/// The cone subcommands accept either a bare cone object or a monoid
/// bundle, in which case the "cone" member is used.
const Json& cone_part(const Json& j) {
    if (j.is_object() && j.contains("cone")) return j.at("cone");
    return j;
}

RootMonoid build_from_input(const Json& j) {
    const MonoidInput input = monoid_input_from_json(j);
    const Face tau = make_face(input.sigma, input.ray_indices);
    return build(input.sigma, tau, input.e1, input.e2);
}

int run_roots(const Json& j, const Options& opt) {
    const Cone sigma = cone_from_json(cone_part(j), Side::N, "cone");
    const RootEnumeration found = enumerate_demazure_roots(sigma, Int(opt.bound));
    Json report = root_enumeration_to_json(found, extreme_rays(sigma));
    report["bound"] = opt.bound;
    return emit(report, opt, kExitOk);
}

int run_validate(const Json& j, const Options& opt) {
    if (j.is_object() && (j.contains("root_datum") || j.contains("standard"))) {
        const ReductiveInput input = reductive_input_from_json(j);
        const VinbergReport report =
            validate_vinberg_cone(input.datum, input.cone, Int(opt.bound));
        return emit(vinberg_report_to_json(report), opt,
                    report.valid ? kExitOk : kExitInvalid);
    }

    Json report;
    try {
        const RootMonoid X = build_from_input(j);
        report["conditions"] = Json::array();
        report["k"] = X.k();
        report["n"] = X.n();
        report["valid"] = true;
        return emit(report, opt, kExitOk);
    } catch (const ValidationError& e) {
        report["conditions"] = Json(e.conditions());
        report["valid"] = false;
        return emit(report, opt, kExitInvalid);
    }
}

int run_build(const Json& j, const Options& opt) {
    const RootMonoid X = build_from_input(j);
    return emit(monoid_summary_to_json(X), opt, kExitOk);
}

int run_verify(const Json& j, const Options& opt) {
    const RootMonoid X = build_from_input(j);
    const BialgebraReport report =
        verify_bialgebra(X, static_cast<std::size_t>(opt.degree_bound));
    return emit(bialgebra_report_to_json(report), opt,
                report.all_passed() ? kExitOk : kExitInvalid);
}

int run_aut(const Json& j, const Options& opt) {
    const RootMonoid X = build_from_input(j);
    const AutReport report = aut_report(X, Int(opt.bound));
    return emit(aut_report_to_json(report), opt,
                report.outer.complete ? kExitOk : kExitIncomplete);
}

int run_reductive_aut(const Json& j, const Options& opt) {
    const ReductiveInput input = reductive_input_from_json(j);
    const ReductiveAutReport report =
        reductive_aut_report(input.datum, input.cone, Int(opt.bound));
    return emit(reductive_report_to_json(report), opt,
                report.outer.complete ? kExitOk : kExitIncomplete);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations on root monoids of affine toric varieties "
                 "and on reductive monoid symmetry groups"};
    app.require_subcommand(1);

    Options opt;
    const auto add_common = [&opt](CLI::App* cmd, bool with_degree) {
        cmd->add_option("--input", opt.input, "Path to the JSON input file")->required();
        cmd->add_option("--bound", opt.bound,
                        "Coordinate box bound for enumerations and samples")
            ->check(CLI::Range(1LL, 1000000LL));
        if (with_degree)
            cmd->add_option("--degree-bound", opt.degree_bound,
                            "Check products of up to this many generators")
                ->check(CLI::Range(1LL, 16LL));
        cmd->add_option("--format", opt.format, "Report format")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--output", opt.output,
                        "Write the report to this file instead of stdout");
    };

    add_common(app.add_subcommand(
                   "roots", "Enumerate Demazure roots of a cone inside a coordinate box"),
               false);
    add_common(app.add_subcommand(
                   "validate", "Validate a monoid bundle or a reductive (datum, cone) pair"),
               false);
    add_common(app.add_subcommand(
                   "build", "Build a root monoid and report its derived data"),
               false);
    add_common(app.add_subcommand(
                   "verify", "Verify the comultiplication axioms of a root monoid"),
               true);
    add_common(app.add_subcommand(
                   "aut", "Enumerate the lattice symmetry group of a root monoid"),
               false);
    add_common(app.add_subcommand(
                   "reductive-aut",
                   "Enumerate the symmetry group of a reductive monoid cone"),
               false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitMalformed;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        const Json input = load_input(opt.input);
        if (command == "roots") return run_roots(input, opt);
        if (command == "validate") return run_validate(input, opt);
        if (command == "build") return run_build(input, opt);
        if (command == "verify") return run_verify(input, opt);
        if (command == "aut") return run_aut(input, opt);
        return run_reductive_aut(input, opt);
    } catch (const MalformedInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitMalformed;
    } catch (const ValidationError& e) {
        Json report;
        report["conditions"] = Json(e.conditions());
        report["valid"] = false;
        return emit(report, opt, kExitInvalid);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
