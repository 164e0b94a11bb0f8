#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "dihedral/affine.hpp"
#include "dihedral/equivalence.hpp"
#include "dihedral/infinite.hpp"
#include "dihedral/json.hpp"
#include "dihedral/spaces.hpp"
#include "dihedral/verify.hpp"

namespace dihedral::cli {

namespace {

std::string join(const std::vector<Element>& xs, const char* sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + to_string(xs[i]);
    return out;
}

std::string braces(const std::vector<Element>& xs) { return "{" + join(xs) + "}"; }

void emit_json_line(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

int run_aut_list(const AutList& c, Format fmt, std::ostream& out) {
    const Modulus n(c.n);
    const auto auts = enumerate_aut_k(n, c.k);
    if (fmt == Format::Csv) out << "theta,a,b,order,inner\n";
    if (fmt == Format::Table)
        out << "Aut_" << c.k << "(D_" << c.n << "): " << auts.size() << " automorphisms\n"
            << std::left << std::setw(14) << "theta" << std::setw(7) << "order" << "inner\n";
    for (const auto& t : auts) {
        const Int order = aut_order(t);
        switch (fmt) {
            case Format::Json:
                emit_json_line(out, Json{{"theta", to_string(t)},
                                         {"a", t.a().value()},
                                         {"b", t.b().value()},
                                         {"order", order},
                                         {"inner", is_inner(t)}});
                break;
            case Format::Csv:
                out << to_string(t) << ',' << t.a().value() << ',' << t.b().value() << ',' << order << ','
                    << (is_inner(t) ? "true" : "false") << '\n';
                break;
            case Format::Table:
                out << std::left << std::setw(14) << to_string(t) << std::setw(7) << order
                    << (is_inner(t) ? "yes" : "no") << '\n';
                break;
        }
    }
    return kExitOk;
}

int run_classes(const Classes& c, Format fmt, std::ostream& out) {
    const Modulus n(c.n);
    const auto cls = enumerate_classes(n, c.k);
    if (fmt == Format::Csv) out << "a,rep_b,representative,size\n";
    if (fmt == Format::Table) out << cls.size() << " classes in Aut_" << c.k << "(D_" << c.n << ")\n";
    for (const auto& e : cls) {
        switch (fmt) {
            case Format::Json: emit_json_line(out, to_json(e)); break;
            case Format::Csv:
                out << e.a.value() << ',' << e.rep_b.value() << ',' << to_string(e.representative()) << ',' << e.size
                    << '\n';
                break;
            case Format::Table: {
                out << std::left << std::setw(14) << to_string(e.representative()) << "size " << std::setw(5) << e.size
                    << " b in {";
                for (std::size_t i = 0; i < e.members.size(); ++i) out << (i ? ", " : "") << e.members[i];
                out << "}\n";
                break;
            }
        }
    }
    return kExitOk;
}

int run_spaces(const Spaces& c, Format fmt, std::ostream& out) {
    const Modulus n(c.n);
    const SpaceReport report = analyze(parse_aut(c.theta, n));
    const Json j = to_json(report);
    switch (fmt) {
        case Format::Json: out << j.dump() << '\n'; break;
        case Format::Csv:
            out << "field,value\n";
            for (const auto& [key, value] : j.items())
                out << key << ",\"" << (value.is_string() ? value.get<std::string>() : value.dump()) << "\"\n";
            break;
        case Format::Table:
            out << "theta   " << to_string(report.theta) << " on D_" << c.n << " (order " << aut_order(report.theta)
                << ")\n"
                << "H       " << braces(report.H) << "  [" << to_string(report.h_shape) << ", order "
                << report.H.size() << "]\n"
                << "Q       " << braces(report.Q) << '\n';
            if (report.R) out << "R       " << braces(*report.R) << '\n';
            out << "Q gen   " << (report.q_generator ? "<" + std::to_string(report.q_generator->generator()) + ">" : "-")
                << '\n'
                << "HQ = G  " << (report.hq.hq_is_g ? "yes" : "no") << std::boolalpha << "  (b in <a-1>: " << report.hq.b_in_image
                << ", H n Q = {1}: " << report.hq.trivial_intersection << ", gcd test: " << report.hq.gcd_coprime
                << ")\n"
                << "H\\Q     " << report.h_orbits.size() << " orbits\n"
                << "G\\Q     " << report.g_orbit_count << " orbit\n";
            break;
    }
    return kExitOk;
}

int run_orbits(const Orbits& c, Format fmt, std::ostream& out) {
    const Modulus n(c.n);
    const AffineAut theta = parse_aut(c.theta, n);
    const auto h = h_orbits_on_q(theta);
    const Int g = g_orbits_on_q(theta);
    switch (fmt) {
        case Format::Json: {
            Json orbits_json = Json::array();
            for (const auto& o : h) orbits_json.push_back(to_json(o));
            out << Json{{"theta", to_string(theta)}, {"h_orbits", orbits_json}, {"g_orbit_count", g}}.dump() << '\n';
            break;
        }
        case Format::Csv:
            out << "orbit,element\n";
            for (std::size_t i = 0; i < h.size(); ++i)
                for (const auto& x : h[i]) out << i << ',' << to_string(x) << '\n';
            break;
        case Format::Table:
            out << "H-orbits on Q for " << to_string(theta) << " on D_" << c.n << ":\n";
            for (const auto& o : h) out << "  " << braces(o) << '\n';
            out << "G-orbits on Q: " << g << '\n';
            break;
    }
    return kExitOk;
}

int run_count_involutions(const CountInvolutions& c, Format fmt, std::ostream& out) {
    if (fmt == Format::Csv) out << "n,count,slope1,slope2,slope3\n";
    if (fmt == Format::Table)
        out << std::right << std::setw(5) << "n" << std::setw(10) << "|Aut_2|" << std::setw(12) << "involutions"
            << std::setw(8) << "n" << std::setw(8) << "2n" << std::setw(8) << "3n" << '\n';
    for (Int n = 3; n <= c.max_n; ++n) {
        const Int aut2 = count_involutions(Modulus(n));
        const Int primary = c.include_identity ? aut2 : aut2 - 1;
        switch (fmt) {
            case Format::Json:
                emit_json_line(out, Json{{"n", n},
                                         {"count", primary},
                                         {"aut2", aut2},
                                         {"involutions", aut2 - 1},
                                         {"slope1", n},
                                         {"slope2", 2 * n},
                                         {"slope3", 3 * n}});
                break;
            case Format::Csv:
                out << n << ',' << primary << ',' << n << ',' << 2 * n << ',' << 3 * n << '\n';
                break;
            case Format::Table:
                out << std::setw(5) << n << std::setw(10) << aut2 << std::setw(12) << aut2 - 1 << std::setw(8) << n
                    << std::setw(8) << 2 * n << std::setw(8) << 3 * n << '\n';
                break;
        }
    }
    return kExitOk;
}

int run_count_classes(const CountClasses& c, Format fmt, std::ostream& out) {
    if (fmt == Format::Csv) out << "n,count\n";
    if (fmt == Format::Table) out << std::right << std::setw(5) << "n" << std::setw(8) << "C_n" << '\n';
    for (Int n = 3; n <= c.max_n; ++n) {
        const Int count = count_involution_classes(Modulus(n));
        switch (fmt) {
            case Format::Json: emit_json_line(out, Json{{"n", n}, {"count", count}}); break;
            case Format::Csv: out << n << ',' << count << '\n'; break;
            case Format::Table: out << std::setw(5) << n << std::setw(8) << count << '\n'; break;
        }
    }
    return kExitOk;
}

int run_verify(const Verify& c, Format fmt, std::ostream& out) {
    VerifyOptions options;
    options.max_n = c.max_n;
    options.max_k = c.max_k;
    const VerifyReport report = verify_sweep(options);
    switch (fmt) {
        case Format::Json:
            for (const auto& r : report.results)
                emit_json_line(out, Json{{"n", r.n}, {"check", r.check}, {"ok", r.ok}, {"detail", r.detail}});
            break;
        case Format::Csv:
            out << "n,check,ok,detail\n";
            for (const auto& r : report.results)
                out << r.n << ',' << r.check << ',' << (r.ok ? "true" : "false") << ",\"" << r.detail << "\"\n";
            break;
        case Format::Table:
            for (const auto& r : report.results)
                if (!r.ok) out << "FAIL n=" << r.n << ' ' << r.check << ": " << r.detail << '\n';
            out << report.results.size() << " checks over n in [3, " << c.max_n << "], k <= " << c.max_k << ": "
                << report.failures() << " failed\n";
            break;
    }
    return report.ok() ? kExitOk : kExitMismatch;
}

int run_infinite(const Infinite& c, Format fmt, std::ostream& out) {
    const InfiniteAut theta(-1, c.b);
    const InfiniteSpaces s = spaces_infinite(theta);
    const std::string name = "-x" + (c.b == 0 ? std::string{} : (c.b > 0 ? "+" : "") + std::to_string(c.b));
    const bool even = equivalent_infinite(theta, InfiniteAut(-1, 0));
    const std::string cls = even ? "chi_0" : "chi_1";
    switch (fmt) {
        case Format::Json: {
            Json j{{"theta", name}, {"class", cls}};
            const Json parts = to_json(s);
            for (const auto& [key, value] : parts.items()) j[key] = value;
            out << j.dump() << '\n';
            break;
        }
        case Format::Csv:
            out << "set,description\n"
                << "H,\"" << to_string(s.H) << "\"\nQ,\"" << to_string(s.Q) << "\"\nR,\"" << to_string(s.R) << "\"\n";
            break;
        case Format::Table:
            out << "theta  " << name << " on D_inf, class of " << cls << '\n'
                << "H      " << to_string(s.H) << '\n'
                << "Q      " << to_string(s.Q) << '\n'
                << "R      " << to_string(s.R) << '\n';
            break;
    }
    return kExitOk;
}

}  // namespace

std::variant<Command, int> parse_command_line(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Automorphisms, fixed groups and symmetric spaces of dihedral groups", "dihedral"};
    app.require_subcommand(1);
    app.fallthrough();

    bool json = false, csv = false;
    std::string out_path;
    app.add_flag("--json", json, "JSON output (one object per line for row-valued commands)");
    app.add_flag("--csv", csv, "CSV output")->excludes("--json");
    app.add_option("--out", out_path, "Write output to PATH instead of standard output");

    Int n = 0, k = 1, max_n = 0, verify_max_n = 30, max_k = 4, b = 0;
    std::string theta;
    bool include_identity = false;
    const auto n_range = CLI::Range(Int{3}, Int{1} << 40);
    const auto k_range = CLI::Range(Int{1}, Int{1} << 20);

    auto* aut_list = app.add_subcommand("aut-list", "List Aut_k(D_n)");
    aut_list->add_option("--n", n, "n >= 3")->required()->check(n_range);
    aut_list->add_option("--k", k, "order bound k >= 1")->check(k_range);

    auto* classes = app.add_subcommand("classes", "Equivalence classes in Aut_k(D_n)");
    classes->add_option("--n", n, "n >= 3")->required()->check(n_range);
    classes->add_option("--k", k, "order bound k >= 1")->check(k_range);

    auto* spaces = app.add_subcommand("spaces", "H, Q, R and structure for one automorphism");
    spaces->add_option("--n", n, "n >= 3")->required()->check(n_range);
    spaces->add_option("--theta", theta, "automorphism, e.g. 19x+18")->required();

    auto* orbits = app.add_subcommand("orbits", "H- and G-orbits on Q");
    orbits->add_option("--n", n, "n >= 3")->required()->check(n_range);
    orbits->add_option("--theta", theta, "automorphism, e.g. 5x+4")->required();

    auto* count_inv = app.add_subcommand("count-involutions", "|Aut_2(D_n)| for 3 <= n <= max");
    count_inv->add_option("--max", max_n, "largest n")->required()->check(n_range);
    count_inv->add_flag("--include-identity", include_identity, "count Aut_2 including the identity");

    auto* count_cls = app.add_subcommand("count-classes", "C_n for 3 <= n <= max");
    count_cls->add_option("--max", max_n, "largest n")->required()->check(n_range);

    auto* verify = app.add_subcommand("verify", "Check closed forms against brute force");
    verify->add_option("--max-n", verify_max_n, "largest n")->check(n_range);
    verify->add_option("--max-k", max_k, "largest order bound")->check(k_range);

    auto* inf = app.add_subcommand("infinite", "H, Q, R for -x+b on D_inf");
    inf->add_option("--b", b, "translation part")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    Command cmd{AutList{0, 0}, Format::Table, std::nullopt};
    cmd.format = json ? Format::Json : csv ? Format::Csv : Format::Table;
    if (!out_path.empty()) cmd.out_path = out_path;
    if (aut_list->parsed()) cmd.action = AutList{n, k};
    else if (classes->parsed()) cmd.action = Classes{n, k};
    else if (spaces->parsed()) cmd.action = Spaces{n, theta};
    else if (orbits->parsed()) cmd.action = Orbits{n, theta};
    else if (count_inv->parsed()) cmd.action = CountInvolutions{max_n, include_identity};
    else if (count_cls->parsed()) cmd.action = CountClasses{max_n};
    else if (verify->parsed()) cmd.action = Verify{verify_max_n, max_k};
    else if (inf->parsed()) cmd.action = Infinite{b};
    return cmd;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
    std::ofstream file;
    if (cmd.out_path) {
        file.open(*cmd.out_path);
        if (!file) {
            err << "cannot open " << *cmd.out_path << " for writing\n";
            return kExitUsage;
        }
    }
    std::ostream& sink = cmd.out_path ? file : out;
    try {
        return std::visit(
            [&](const auto& action) -> int {
                using T = std::decay_t<decltype(action)>;
                if constexpr (std::is_same_v<T, AutList>) return run_aut_list(action, cmd.format, sink);
                else if constexpr (std::is_same_v<T, Classes>) return run_classes(action, cmd.format, sink);
                else if constexpr (std::is_same_v<T, Spaces>) return run_spaces(action, cmd.format, sink);
                else if constexpr (std::is_same_v<T, Orbits>) return run_orbits(action, cmd.format, sink);
                else if constexpr (std::is_same_v<T, CountInvolutions>) return run_count_involutions(action, cmd.format, sink);
                else if constexpr (std::is_same_v<T, CountClasses>) return run_count_classes(action, cmd.format, sink);
                else if constexpr (std::is_same_v<T, Verify>) return run_verify(action, cmd.format, sink);
                else return run_infinite(action, cmd.format, sink);
            },
            cmd.action);
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

}  // namespace dihedral::cli
