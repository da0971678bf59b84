#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qhankel/families.hpp"
#include "qhankel/hankel.hpp"
#include "qhankel/jfraction.hpp"
#include "qhankel/motzkin.hpp"
#include "qhankel/verify.hpp"

namespace qhankel {

namespace cli_detail {

inline FamilyKind parse_family(const std::string& name) {
    const auto kind = family_from_name(name);
    if (!kind) throw CLI::ValidationError("--name/--family", "unknown family: " + name);
    return *kind;
}

inline DetAlgorithm parse_algorithm(const std::string& name) {
    if (name == "bareiss") return DetAlgorithm::bareiss;
    if (name == "cofactor") return DetAlgorithm::cofactor;
    throw CLI::ValidationError("--alg", "unknown algorithm: " + name);
}

}  // namespace cli_detail

/// Command-line front end. `args` excludes the program name. Exit status:
/// 0 success (and all verifications passing), 1 when a verification case
/// fails, 2 on usage errors, 3 on computation errors.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact q-polynomial Hankel determinant toolkit"};
    app.require_subcommand(1);

    std::string family_name_arg;
    std::string instance_name_arg;
    std::string suite_arg;
    std::vector<std::string> id_args;
    std::string alg_arg = "bareiss";
    std::string format_arg = "text";
    std::string out_path;
    std::int64_t n_arg = 0;
    std::int64_t n_max_arg = 0;
    std::int64_t shift_arg = 0;
    std::int64_t depth_arg = 0;
    std::int64_t c_single = 1;
    std::vector<std::int64_t> c_values = {1};

    CLI::App* family_cmd = app.add_subcommand("family", "print a family member in canonical form");
    family_cmd->add_option("--name", family_name_arg, "family name")->required();
    family_cmd->add_option("--n", n_arg, "member index (n >= 0)")->required();
    family_cmd->add_option("--c", c_single, "base parameter c >= 1 (psi/Psi)");

    CLI::App* det_cmd = app.add_subcommand("det", "Hankel determinant of a family sequence");
    det_cmd->add_option("--family", family_name_arg, "family name")->required();
    det_cmd->add_option("--n", n_arg, "matrix dimension (n >= 1)")->required();
    det_cmd->add_option("--shift", shift_arg, "sequence shift (>= 0)");
    det_cmd->add_option("--c", c_single, "base parameter c >= 1 (psi/Psi)");
    det_cmd->add_option("--alg", alg_arg, "determinant algorithm: bareiss|cofactor");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the identity verification catalog");
    verify_cmd->add_option("--suite", suite_arg, "identity suite (only: all)");
    verify_cmd->add_option("--id", id_args, "comma-separated identity tags")->delimiter(',');
    verify_cmd->add_option("--n-max", n_max_arg, "largest matrix dimension")->required();
    verify_cmd->add_option("--c", c_values, "comma-separated c values")->delimiter(',');
    verify_cmd->add_option("--alg", alg_arg, "determinant algorithm: bareiss|cofactor");
    verify_cmd->add_option("--format", format_arg, "report format: text|json");
    verify_cmd->add_option("--out", out_path, "write the report to a file instead of stdout");

    CLI::App* jfraction_cmd =
        app.add_subcommand("jfraction", "extract Jacobi coefficients from a family's moments");
    jfraction_cmd->add_option("--family", family_name_arg, "family name")->required();
    jfraction_cmd->add_option("--depth", depth_arg, "number of s coefficients (>= 1)")->required();
    jfraction_cmd->add_option("--c", c_single, "base parameter c >= 1 (psi/Psi)");

    CLI::App* table_cmd = app.add_subcommand("table", "dump the triangular table of an instance");
    table_cmd->add_option("--name", instance_name_arg, "instance name: rs|poch|hermite")->required();
    table_cmd->add_option("--n-max", n_max_arg, "table depth")->required();

    std::vector<const char*> argv;
    argv.push_back("qhankel");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    }

    try {
        if (family_cmd->parsed()) {
            if (n_arg < 0 || c_single < 1) {
                err << "usage error: --n must be >= 0 and --c >= 1\n";
                return 2;
            }
            const FamilyId id(cli_detail::parse_family(family_name_arg),
                              static_cast<std::uint32_t>(c_single));
            const auto n = static_cast<std::uint32_t>(n_arg);
            out << generate(id, n, Route::closed_form).values[n].to_string() << '\n';
            return 0;
        }

        if (det_cmd->parsed()) {
            if (n_arg < 1 || shift_arg < 0 || c_single < 1) {
                err << "usage error: --n must be >= 1, --shift >= 0, --c >= 1\n";
                return 2;
            }
            const FamilyId id(cli_detail::parse_family(family_name_arg),
                              static_cast<std::uint32_t>(c_single));
            const auto n = static_cast<std::uint32_t>(n_arg);
            const auto shift = static_cast<std::uint32_t>(shift_arg);
            const DetAlgorithm algorithm = cli_detail::parse_algorithm(alg_arg);
            const auto seq = generate(id, 2 * (n - 1) + shift, Route::closed_form);
            out << det(hankel_matrix(seq.values, n, shift), algorithm).to_string() << '\n';
            return 0;
        }

        if (verify_cmd->parsed()) {
            if (n_max_arg < 1) {
                err << "usage error: --n-max must be >= 1\n";
                return 2;
            }
            if (!suite_arg.empty() && suite_arg != "all") {
                err << "usage error: unknown suite: " << suite_arg << '\n';
                return 2;
            }
            if (!suite_arg.empty() && !id_args.empty()) {
                err << "usage error: --suite and --id are mutually exclusive\n";
                return 2;
            }
            if (format_arg != "text" && format_arg != "json") {
                err << "usage error: unknown format: " << format_arg << '\n';
                return 2;
            }
            std::vector<IdentityId> ids;
            std::string suite_name;
            if (id_args.empty()) {
                const auto& catalog = identity_catalog();
                ids.assign(catalog.begin(), catalog.end());
                suite_name = "all";
            } else {
                std::ostringstream names;
                for (const std::string& tag : id_args) {
                    const auto id = identity_from_name(tag);
                    if (!id) {
                        err << "usage error: unknown identity tag: " << tag << '\n';
                        return 2;
                    }
                    ids.push_back(*id);
                    names << (names.tellp() > 0 ? "," : "") << tag;
                }
                suite_name = names.str();
            }
            std::vector<std::uint32_t> cs;
            for (std::int64_t c : c_values) {
                if (c < 1) {
                    err << "usage error: --c values must be >= 1\n";
                    return 2;
                }
                cs.push_back(static_cast<std::uint32_t>(c));
            }
            const DetAlgorithm algorithm = cli_detail::parse_algorithm(alg_arg);
            const VerificationReport report =
                run_suite(ids, static_cast<std::uint32_t>(n_max_arg), cs, algorithm, suite_name);
            const std::string rendered =
                format_arg == "json" ? report_json(report) : report_text(report);
            if (out_path.empty()) {
                out << rendered;
            } else {
                std::ofstream file(out_path, std::ios::binary);
                if (!file) throw Error("cannot open output file: " + out_path);
                file << rendered;
            }
            return report.failed == 0 ? 0 : 1;
        }

        if (jfraction_cmd->parsed()) {
            if (depth_arg < 1 || c_single < 1) {
                err << "usage error: --depth must be >= 1 and --c >= 1\n";
                return 2;
            }
            const FamilyId id(cli_detail::parse_family(family_name_arg),
                              static_cast<std::uint32_t>(c_single));
            const auto depth = static_cast<std::uint32_t>(depth_arg);
            const auto seq = generate(id, 2 * depth, Route::closed_form);
            MomentSequence moments;
            for (const BiPoly& value : seq.values) moments.moments.emplace_back(value);
            const JacobiCoefficients coeffs = extract(moments, depth);
            for (std::size_t k = 0; k < coeffs.s.size(); ++k)
                out << "s(" << k << ") = " << coeffs.s[k].to_string() << '\n';
            for (std::size_t k = 0; k < coeffs.t.size(); ++k)
                out << "t(" << k << ") = " << coeffs.t[k].to_string() << '\n';
            return 0;
        }

        if (table_cmd->parsed()) {
            if (n_max_arg < 0) {
                err << "usage error: --n-max must be >= 0\n";
                return 2;
            }
            FamilyKind kind;
            if (instance_name_arg == "rs")
                kind = FamilyKind::rogers_szego;
            else if (instance_name_arg == "poch")
                kind = FamilyKind::pochhammer;
            else if (instance_name_arg == "hermite")
                kind = FamilyKind::q_hermite;
            else {
                err << "usage error: unknown instance: " << instance_name_arg << '\n';
                return 2;
            }
            const auto n_max = static_cast<std::uint32_t>(n_max_arg);
            out << build_table(jacobi_instance(kind, n_max), n_max).dump();
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 3;
    }
    return 2;
}

}  // namespace qhankel
