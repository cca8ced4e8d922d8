/*
Copyright 2026 The galois-lines Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

// Command-line front end: check, close, find, diff, rho.
//
// Exit codes: 0 success / clean scan, 1 failed validation, 2 parse or I/O
// error, 3 a certified count or certified geometry contradicts a proven
// bound or fact, 4 incomplete scan (skipped work items or unresolved
// families).

#include <iostream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "galois/io.hpp"

using namespace galois;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitParse = 2;
constexpr int kExitViolation = 3;
constexpr int kExitIncomplete = 4;

FieldPtr session_field(const std::vector<unsigned>& file_conductors,
                       std::optional<unsigned> flag) {
    unsigned n = 1;
    for (unsigned c : file_conductors) {
        n = std::lcm(n, c);
    }
    if (flag) {
        if (*flag == 0 || *flag % n != 0) {
            throw parse_error("--conductor " + std::to_string(*flag) +
                              " is not a positive multiple of the file conductor " +
                              std::to_string(n));
        }
        n = *flag;
    }
    return CyclotomicField::create(n);
}

void print_quadric_shape(const CurveModel& curve) {
    const QuadricShape shape = quadric_rank_vertex(curve);
    std::cout << "rank Q = " << shape.rank << "\n";
    if (shape.vertex) {
        std::cout << "vertex (";
        for (unsigned i = 0; i < 4; ++i) {
            std::cout << (*shape.vertex)[i].str() << (i + 1 < 4 ? " : " : ")\n");
        }
    }
}

int run_check(const std::string& curve_path, const std::string& group_path,
              std::optional<unsigned> conductor) {
    const CurveFile cf = parse_curve(read_file(curve_path));
    const GroupFile gf = parse_group(read_file(group_path));
    const FieldPtr session = session_field(
        {cf.quadric.field()->conductor(), gf.field->conductor()}, conductor);
    const CurveModel curve(embed(cf.quadric, session), embed(cf.cubic, session));
    print_quadric_shape(curve);
    bool all_ok = true;
    for (std::size_t i = 0; i < gf.generators.size(); ++i) {
        const ProjTransform g(embed(gf.generators[i], session));
        const AutomorphismCertificate cert = check_automorphism(g, curve);
        if (cert.ok) {
            std::cout << "generator " << i << ": automorphism, g*Q = (" << cert.q_scale.str()
                      << ")*Q, g*F = G*Q + (" << cert.f_scale.str() << ")*F\n";
        } else {
            all_ok = false;
            std::cout << "generator " << i << ": NOT an automorphism\n";
            const HomForm gq = pullback(g, curve.quadric());
            std::cout << "  g*Q = " << gq.str() << "\n";
            std::cout << "  g*F = " << pullback(g, curve.cubic()).str() << "\n";
            std::cout << "  (must be proportional to Q and congruent to a multiple of F "
                         "modulo linear multiples of Q)\n";
        }
    }
    return all_ok ? kExitOk : kExitValidation;
}

int run_close(const std::string& group_path, std::optional<unsigned> conductor, unsigned cap,
              const std::string& dump_path) {
    const GroupFile gf = parse_group(read_file(group_path));
    const FieldPtr session = session_field({gf.field->conductor()}, conductor);
    std::vector<ProjTransform> gens;
    for (const auto& m : gf.generators) {
        gens.emplace_back(embed(m, session));
    }
    try {
        const FiniteMatrixGroup group = FiniteMatrixGroup::close(gens, cap);
        std::cout << "order " << group.order() << "\n";
        if (!dump_path.empty()) {
            write_file(dump_path, elements_to_json(group));
        }
        return kExitOk;
    } catch (const group_cap_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}

ScanOptions parse_types(const std::string& types, unsigned order_cap) {
    ScanOptions opt;
    opt.order_cap = order_cap;
    std::stringstream ss(types);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item == "s3") {
            opt.s3 = true;
        } else if (item == "k4") {
            opt.k4 = true;
        } else if (item == "cyclic") {
            opt.cyclic = true;
        } else if (!item.empty()) {
            throw parse_error("unknown line type '" + item + "' (use s3, k4, cyclic)");
        }
    }
    if (!opt.s3 && !opt.k4 && !opt.cyclic) {
        throw parse_error("--types must select at least one of s3, k4, cyclic");
    }
    return opt;
}

int run_find(const std::string& curve_path, const std::string& group_path,
             std::optional<unsigned> conductor, const std::string& types, unsigned order_cap,
             unsigned group_cap, const std::string& output) {
    const CurveFile cf = parse_curve(read_file(curve_path));
    const GroupFile gf = parse_group(read_file(group_path));
    const FieldPtr session = session_field(
        {cf.quadric.field()->conductor(), gf.field->conductor()}, conductor);
    const CurveModel curve(embed(cf.quadric, session), embed(cf.cubic, session));
    const ScanOptions opt = parse_types(types, order_cap);

    std::vector<ProjTransform> gens;
    for (const auto& m : gf.generators) {
        gens.emplace_back(embed(m, session));
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!check_automorphism(gens[i], curve).ok) {
            std::cerr << "error: generator " << i
                      << " is not an automorphism of the curve; refusing to scan\n";
            return kExitValidation;
        }
    }
    FiniteMatrixGroup group = [&] {
        try {
            return FiniteMatrixGroup::close(gens, group_cap);
        } catch (const group_cap_exceeded& e) {
            throw error(std::string("closure failed: ") + e.what());
        }
    }();

    const ScanReport report = find_galois_lines(curve, group, opt);
    if (opt.s3) {
        std::cout << "S3: " << report.count(LineType::S3) << "\n";
    }
    if (opt.k4) {
        std::cout << "K4: " << report.count(LineType::K4) << "\n";
    }
    if (opt.cyclic) {
        std::cout << "cyclic: " << report.cyclic_count() << "\n";
    }
    if (!output.empty()) {
        write_file(output, report_to_json(report, session));
    }
    for (const auto& v : report.violations) {
        std::cerr << "violation: " << v << "\n";
    }
    for (const auto& s : report.skipped) {
        std::cerr << "skipped: " << s << "\n";
    }
    for (const auto& u : report.unresolved_families) {
        std::cerr << "unresolved: " << u << "\n";
    }
    if (!report.violations.empty()) {
        return kExitViolation;
    }
    if (!report.complete()) {
        return kExitIncomplete;
    }
    return kExitOk;
}

int run_diff(const std::string& found_path, const std::string& expected_path) {
    const LinesFile a = parse_lines(read_file(found_path));
    const LinesFile b = parse_lines(read_file(expected_path));
    const unsigned n = std::lcm(a.field->conductor(), b.field->conductor());
    const FieldPtr session = CyclotomicField::create(n);
    const auto canonical = [&](const LinesFile& lf) {
        std::vector<ProjLine> lines;
        for (const auto& dual : lf.duals) {
            lines.push_back(ProjLine::from_dual_rows(embed(dual, session)));
        }
        std::sort(lines.begin(), lines.end(),
                  [](const ProjLine& x, const ProjLine& y) { return lex_less(x, y); });
        return lines;
    };
    const auto la = canonical(a);
    const auto lb = canonical(b);
    bool equal = true;
    for (const auto& l : la) {
        if (std::find(lb.begin(), lb.end(), l) == lb.end()) {
            equal = false;
            std::cout << "only in " << found_path << ": " << l.cutting_forms().first.str()
                      << " = " << l.cutting_forms().second.str() << " = 0\n";
        }
    }
    for (const auto& l : lb) {
        if (std::find(la.begin(), la.end(), l) == la.end()) {
            equal = false;
            std::cout << "only in " << expected_path << ": " << l.cutting_forms().first.str()
                      << " = " << l.cutting_forms().second.str() << " = 0\n";
        }
    }
    if (equal) {
        std::cout << "line sets match (" << la.size() << " lines)\n";
        return kExitOk;
    }
    return kExitValidation;
}

int run_rho(const std::string& c_text, unsigned conductor, const std::string& roots_text,
            const std::string& output) {
    const FieldPtr field = CyclotomicField::create(conductor);
    const CycloNum c(field, Rational::parse(c_text));
    std::optional<std::vector<CycloNum>> roots;
    if (!roots_text.empty()) {
        roots.emplace();
        std::stringstream ss(roots_text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            roots->emplace_back(field, Rational::parse(item));
        }
    }
    const auto candidates = two_trigonal_rho_candidates(c, roots ? &*roots : nullptr);
    std::cout << "rho candidates: " << candidates.size() << "\n";
    if (!output.empty()) {
        std::vector<Mat> mats;
        for (const auto& r : candidates) {
            mats.push_back(r.witness());
        }
        write_file(output, group_to_json(field, mats));
    }
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact search and certification of Galois lines for genus-4 canonical "
                 "curves given as (2,3)-complete intersections with a known group of "
                 "projective automorphisms"};
    app.require_subcommand(1);

    std::string curve_path, group_path, found_path, expected_path;
    std::string types = "s3,k4";
    std::string output, dump, c_text = "0", roots_text;
    std::optional<unsigned> conductor;
    unsigned order_cap = 120;
    unsigned group_cap = 1000;
    unsigned rho_conductor = 3;

    auto* check = app.add_subcommand("check", "validate a curve and its generators");
    check->add_option("--curve", curve_path, "curve file")->required();
    check->add_option("--group", group_path, "group file")->required();
    check->add_option("--conductor", conductor, "session conductor (multiple of file conductors)");

    auto* close = app.add_subcommand("close", "close a generator set in PGL4");
    close->add_option("--group", group_path, "group file")->required();
    close->add_option("--conductor", conductor, "session conductor");
    close->add_option("--group-cap", group_cap, "closure size cap");
    close->add_option("--dump", dump, "write all canonical elements to this file");

    auto* find = app.add_subcommand("find", "scan for Galois lines and certify them");
    find->add_option("--curve", curve_path, "curve file")->required();
    find->add_option("--group", group_path, "group file")->required();
    find->add_option("--conductor", conductor, "session conductor");
    find->add_option("--types", types, "comma list of s3,k4,cyclic");
    find->add_option("--order-cap", order_cap, "projective order cap");
    find->add_option("--group-cap", group_cap, "closure size cap");
    find->add_option("--output", output, "write the scan report to this file");

    auto* diff = app.add_subcommand("diff", "compare two line files as canonical sets");
    diff->add_option("--found", found_path, "scan report or line file")->required();
    diff->add_option("--expected", expected_path, "line file")->required();

    auto* rho = app.add_subcommand("rho", "emit the two-trigonal involution family for c");
    rho->add_option("--c", c_text, "rational parameter c");
    rho->add_option("--conductor", rho_conductor, "session conductor (needs a cube root of unity)");
    rho->add_option("--roots", roots_text, "comma list of rational roots of the parameter cubic");
    rho->add_option("--output", output, "write candidates as a group file");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) {
            return run_check(curve_path, group_path, conductor);
        }
        if (close->parsed()) {
            return run_close(group_path, conductor, group_cap, dump);
        }
        if (find->parsed()) {
            return run_find(curve_path, group_path, conductor, types, order_cap, group_cap,
                            output);
        }
        if (diff->parsed()) {
            return run_diff(found_path, expected_path);
        }
        if (rho->parsed()) {
            return run_rho(c_text, rho_conductor, roots_text, output);
        }
    } catch (const parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const incomplete_roots& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const field_too_small& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitParse;
}
