#pragma once

// Command implementations for the latmw command-line tool. Kept in a header so the
// test suite can run commands in-process and inspect output and exit codes.

#include "latmw.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace latmw::cli {

enum Exit : int { ok = 0, usage = 1, axiom = 2, irregular = 3, inconsistent = 4 };

namespace detail {

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

inline std::int64_t parse_int(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &pos);
    } catch (const std::exception&) {
        throw InvalidArgument(what + ": \"" + s + "\" is not an integer");
    }
    if (pos != s.size()) throw InvalidArgument(what + ": \"" + s + "\" is not an integer");
    return v;
}

/// "a,b,c" -> {a, b, c}
inline std::vector<std::int64_t> int_list(const std::string& s, const std::string& what) {
    std::vector<std::int64_t> out;
    if (s.empty()) return out;
    for (const auto& part : split(s, ',')) out.push_back(parse_int(part, what));
    return out;
}

/// "a,b;c,d" -> {{a, b}, {c, d}}
inline std::vector<std::vector<std::int64_t>> int_rows(const std::string& s, const std::string& what) {
    std::vector<std::vector<std::int64_t>> out;
    if (s.empty()) return out;
    for (const auto& row : split(s, ';')) out.push_back(int_list(row, what));
    return out;
}

inline std::string read_text(const std::string& path_or_json) {
    if (!path_or_json.empty() && path_or_json.front() == '{') return path_or_json;
    std::ifstream in(path_or_json);
    if (!in) throw InvalidArgument("cannot read " + path_or_json);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

inline std::string cell(const Rational& v) { return to_string(v); }

}  // namespace detail

/// Flags shared by commands that operate on a support.
struct SupportOptions {
    std::string kind;
    std::string group;
    std::string file;
    std::optional<int> n, q, k, m, p;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--support", kind, "hamming | rank | chain | lee4 | homogeneous | custom");
        cmd->add_option("--group", group, "cyclic orders, comma separated (e.g. 2 or 2,4)");
        cmd->add_option("--support-file", file, "JSON support descriptor (path or inline object)");
        cmd->add_option("--n", n, "number of coordinates");
        cmd->add_option("--q", q, "field order");
        cmd->add_option("--k", k, "matrix rows");
        cmd->add_option("--m", m, "matrix columns");
        cmd->add_option("--p", p, "prime for the homogeneous support");
    }

    FiniteAbelianGroup parse_group() const {
        std::vector<std::uint32_t> orders;
        for (auto v : detail::int_list(group, "--group")) {
            if (v < 1) throw InvalidArgument("--group orders must be >= 1");
            orders.push_back(static_cast<std::uint32_t>(v));
        }
        if (orders.empty()) throw InvalidArgument("--group is required for --support " + kind);
        return FiniteAbelianGroup(orders);
    }

    void only(std::initializer_list<const char*> allowed) const {
        auto check = [&](bool present, const char* name) {
            if (!present) return;
            for (const char* a : allowed)
                if (std::string(a) == name) return;
            throw InvalidArgument(std::string("--") + name + " does not apply to --support " + kind);
        };
        check(!group.empty(), "group");
        check(n.has_value(), "n");
        check(q.has_value(), "q");
        check(k.has_value(), "k");
        check(m.has_value(), "m");
        check(p.has_value(), "p");
    }

    static int need(const std::optional<int>& v, const char* name) {
        if (!v) throw InvalidArgument(std::string("--") + name + " is required");
        return *v;
    }

    bool wants_custom() const { return !file.empty() && io::is_custom(io::parse(detail::read_text(file))); }

    RegularSupport resolve() const {
        if (!file.empty()) {
            if (!kind.empty() && kind != "custom" && kind != "file")
                throw InvalidArgument("--support-file cannot be combined with --support " + kind);
            only({});
            return io::support_from_json(io::parse(detail::read_text(file)));
        }
        if (kind.empty()) throw InvalidArgument("either --support or --support-file is required");
        if (kind == "hamming") {
            only({"group", "n"});
            return hamming_support(parse_group(), need(n, "n"));
        }
        if (kind == "rank") {
            only({"q", "k", "m"});
            const int qq = need(q, "q");
            if (qq < 2) throw InvalidArgument("--q must be a prime power");
            return rank_support(static_cast<std::uint32_t>(qq), need(k, "k"), need(m, "m"));
        }
        if (kind == "lee4") {
            only({});
            return lee4_support();
        }
        if (kind == "homogeneous") {
            only({"p", "n"});
            const int pp = need(p, "p");
            if (pp < 2) throw InvalidArgument("--p must be a prime >= 3");
            return homogeneous_support(static_cast<std::uint32_t>(pp), need(n, "n"));
        }
        if (kind == "chain") {
            only({"group"});
            const auto G = parse_group();
            if (G.factors() != 1) throw InvalidArgument("--support chain expects a cyclic group; use --support-file otherwise");
            return cyclic_chain_support(G.orders()[0]);
        }
        if (kind == "custom") throw InvalidArgument("--support custom needs --support-file");
        throw InvalidArgument("unknown support kind \"" + kind + "\"");
    }
};

inline void print_table(std::ostream& out, const KrawtchoukTable& t, const std::string& format,
                        const std::string& support, const std::string& orientation, const std::string& labels) {
    if (format == "json") {
        io::Json rows = io::Json::array();
        for (const auto& r : t.k) {
            io::Json row = io::Json::array();
            for (const auto& v : r) row.push_back(detail::cell(v));
            rows.push_back(row);
        }
        out << io::Json{{"support", support}, {"orientation", orientation}, {"labels", labels}, {"table", rows}}.dump()
            << "\n";
        return;
    }
    out << "i\\j";
    for (std::size_t j = 0; j < t.cols(); ++j) out << '\t' << j;
    out << '\n';
    for (std::size_t i = 0; i < t.rows(); ++i) {
        out << i;
        for (std::size_t j = 0; j < t.cols(); ++j) out << '\t' << detail::cell(t.at(i, j));
        out << '\n';
    }
}

inline int cmd_krawtchouk(const SupportOptions& so, bool dual, bool verify, const std::string& format,
                          const std::string& labels, std::ostream& out, std::ostream& err) {
    const auto s = so.resolve();
    KrawtchoukTable table = dual ? krawtchouk_dual_table(s) : krawtchouk_table(s);
    if (verify) {
        const KrawtchoukTable oracle = dual ? krawtchouk_dual_oracle(s) : krawtchouk_oracle(s);
        if (!(oracle == table)) {
            err << "formula and character-sum oracle disagree\nformula: " << to_string(table)
                << "\noracle:  " << to_string(oracle) << "\n";
            return inconsistent;
        }
    }
    std::string used = "rank";
    if (labels == "reference" || (labels == "auto" && s.reference())) {
        table = reference_table(s, dual);
        used = s.reference()->name;
    }
    print_table(out, table, format, s.name(), dual ? "K(omega, omega*)" : "K(omega*, omega)", used);
    return ok;
}

inline int cmd_verify_support(const SupportOptions& so, const std::string& format, std::ostream& out) {
    SupportReport rep;
    std::string name;
    bool custom = so.wants_custom();
    if (custom) {
        if (!so.kind.empty() && so.kind != "custom") throw InvalidArgument("--support-file cannot be combined with --support");
        so.only({});
        const auto spec = io::custom_spec_from_json(io::parse(detail::read_text(so.file)));
        rep = validate_support(spec.group, spec.lattice, spec.sigma);
        name = "custom";
    } else {
        const auto s = so.resolve();
        rep = validate_support(s.group(), s.lattice(), s.sigma_map());
        name = s.name();
    }
    if (format == "json") {
        io::Json axioms = io::Json::object();
        for (std::size_t a = 0; a < rep.violations.size(); ++a)
            axioms[std::string(1, static_cast<char>('A' + a))] =
                rep.violations[a] ? io::Json(*rep.violations[a]) : io::Json("ok");
        io::Json j{{"support", name},
                   {"lattice_regular", rep.lattice.regular},
                   {"axioms", axioms},
                   {"gamma", io::counts_json(rep.gamma)["counts"]}};
        if (!rep.lattice.regular) j["lattice_witness"] = rep.lattice.witness;
        out << j.dump() << "\n";
    } else {
        out << "support\t" << name << "\n";
        out << "lattice\t" << (rep.lattice.regular ? "regular" : "irregular: " + rep.lattice.witness) << "\n";
        for (std::size_t a = 0; a < rep.violations.size(); ++a)
            out << static_cast<char>('A' + a) << '\t' << (rep.violations[a] ? "violated: " + *rep.violations[a] : "ok")
                << "\n";
        if (rep.ok()) {
            out << "gamma";
            for (const auto& g : rep.gamma) out << '\t' << g.str();
            out << "\n";
        }
    }
    if (!rep.lattice.regular) return irregular;
    if (!rep.axioms_hold()) return axiom;
    return ok;
}

inline WeightDistribution parse_distribution(const std::string& text) {
    if (!text.empty() && text.front() == '{') return io::distribution_from_json(io::parse(text));
    WeightDistribution W;
    for (const auto& part : detail::split(text, ',')) {
        try {
            W.counts.emplace_back(part);
        } catch (const std::exception&) {
            throw InvalidArgument("--distribution entry \"" + part + "\" is not an integer");
        }
    }
    if (W.counts.empty()) throw InvalidArgument("--distribution is empty");
    return W;
}

inline int cmd_transform(const SupportOptions& so, const std::string& dist, const std::string& code_size,
                         const std::string& direction, std::ostream& out) {
    const auto s = so.resolve();
    const auto W = parse_distribution(dist);
    Integer size;
    try {
        size = Integer(code_size);
    } catch (const std::exception&) {
        throw InvalidArgument("--code-size must be a positive integer");
    }
    if (size <= 0) throw InvalidArgument("--code-size must be a positive integer");
    if (W.total() != size)
        throw ArithmeticInconsistency("distribution sums to " + W.total().str() + " but --code-size is " + size.str());
    WeightDistribution result;
    if (direction == "forward") result = macwilliams_forward(s, W, size);
    else if (direction == "inverse") result = macwilliams_inverse(s, W, size);
    else throw InvalidArgument("--direction must be forward or inverse");
    out << io::to_json(result).dump() << "\n";
    return ok;
}

struct CountOptions {
    std::optional<int> q, k, m, rank;
    std::string constraint = "none";
    std::string indices, block, diagonal, matrix, request;
    bool brute = false;
};

inline io::CountRequest build_count_request(const CountOptions& o) {
    if (!o.request.empty()) {
        if (o.q || o.k || o.m || o.rank || o.constraint != "none" || !o.indices.empty() || !o.block.empty() ||
            !o.diagonal.empty() || !o.matrix.empty())
            throw InvalidArgument("--request cannot be combined with other count flags");
        return io::count_request_from_json(io::parse(detail::read_text(o.request)));
    }
    io::Json c{{"kind", o.constraint}};
    if (!o.indices.empty()) c["indices"] = detail::int_rows(o.indices, "--indices");
    if (!o.block.empty()) c["block"] = detail::int_list(o.block, "--block");
    if (!o.diagonal.empty()) c["diagonal"] = detail::int_list(o.diagonal, "--diagonal");
    if (!o.matrix.empty()) c["matrix"] = detail::int_rows(o.matrix, "--matrix");
    io::Json j{{"q", SupportOptions::need(o.q, "q")},
               {"k", SupportOptions::need(o.k, "k")},
               {"m", SupportOptions::need(o.m, "m")},
               {"rank", SupportOptions::need(o.rank, "rank")},
               {"constraint", c}};
    return io::count_request_from_json(j);
}

inline int cmd_count(const CountOptions& o, const std::string& format, std::ostream& out) {
    const auto req = build_count_request(o);
    const Integer count = o.brute ? brute_force_count(req.params, req.constraint, req.rank)
                                  : closed_form_count(req.params, req.constraint, req.rank);
    if (format == "tsv") out << count.str() << "\n";
    else out << io::count_json(count).dump() << "\n";
    return ok;
}

inline int cmd_optimal(const SupportOptions& so, const std::string& generators, std::ostream& out) {
    const auto s = so.resolve();
    const auto& G = s.group();
    std::vector<GroupElement> gens;
    for (const auto& row : detail::int_rows(generators, "--generators")) {
        GroupElement g;
        for (auto v : row) {
            if (v < 0) throw InvalidArgument("--generators coordinates must be nonnegative");
            g.coords.push_back(static_cast<std::uint32_t>(v));
        }
        if (!G.contains(g.coords)) throw InvalidArgument("generator " + to_string(g) + " is not in " + G.describe());
        gens.push_back(std::move(g));
    }
    const Code C = subgroup_closure(G, gens);
    if (C.is_zero()) throw InvalidArgument("the zero code has no minimum weight");
    const auto W = weight_distribution(C, s);
    const int d = min_weight(C, s);
    const Rational defect = singleton_defect(C, s);
    io::Json j{{"support", s.name()},
               {"size", std::to_string(C.size())},
               {"min_weight", d},
               {"bound", to_string(Rational(Integer(G.order()), s.gamma()[d - 1]))},
               {"defect", to_string(defect)},
               {"optimal", defect == 0},
               {"distribution", io::to_json(W)["counts"]}};
    int code = ok;
    if (defect == 0 && !C.is_full()) {
        const auto rep = dual_optimality_check(C, s);
        j["dual"] = {{"optimal", rep.dual_optimal},
                     {"min_weight", rep.d_dual},
                     {"distance_bound", rep.distance_bound}};
        const auto solved = optimal_distribution(s, d);
        j["solved_distribution"] = io::to_json(solved)["counts"];
        j["solved_matches"] = solved == W;
        if (!rep.holds() || !(solved == W)) code = inconsistent;
    }
    out << j.dump() << "\n";
    return code;
}

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Krawtchouk coefficients, MacWilliams transforms and matrix counts for regular supports", "latmw"};
    app.require_subcommand(1);

    SupportOptions so;
    bool dual = false, verify = false;
    std::string format = "tsv", labels = "auto";
    auto* kc = app.add_subcommand("krawtchouk", "print the Krawtchouk table of a support");
    so.add_to(kc);
    kc->add_flag("--dual", dual, "table K(omega_sigma, omega_sigma*) instead of K(omega_sigma*, omega_sigma)");
    kc->add_flag("--verify", verify, "cross-check against the character-sum oracle");
    kc->add_option("--format", format)->check(CLI::IsMember({"tsv", "json"}));
    kc->add_option("--labels", labels, "auto | rank | reference")->check(CLI::IsMember({"auto", "rank", "reference"}));

    SupportOptions vo;
    std::string vformat = "tsv";
    auto* vc = app.add_subcommand("verify-support", "check the support axioms and lattice regularity");
    vo.add_to(vc);
    vc->add_option("--format", vformat)->check(CLI::IsMember({"tsv", "json"}));

    SupportOptions to;
    std::string dist, code_size, direction = "forward";
    auto* tc = app.add_subcommand("transform", "MacWilliams transform of a weight distribution");
    to.add_to(tc);
    tc->add_option("--distribution", dist, "comma separated counts or {\"counts\":[...]}")->required();
    tc->add_option("--code-size", code_size)->required();
    tc->add_option("--direction", direction)->check(CLI::IsMember({"forward", "inverse"}));

    CountOptions co;
    std::string cformat = "json";
    auto* cc = app.add_subcommand("count-matrices", "count matrices of a given rank under a linear constraint");
    cc->add_option("--q", co.q);
    cc->add_option("--k", co.k);
    cc->add_option("--m", co.m);
    cc->add_option("--rank", co.rank);
    cc->add_option("--constraint", co.constraint)
        ->check(CLI::IsMember({"none", "sum_zero", "kernel", "zero_block", "zero_diagonal", "symmetric", "skew_symmetric"}));
    cc->add_option("--indices", co.indices, "1-based entries r,c;r,c for sum_zero");
    cc->add_option("--block", co.block, "k',m' for zero_block");
    cc->add_option("--diagonal", co.diagonal, "1-based diagonal positions for zero_diagonal");
    cc->add_option("--matrix", co.matrix, "functional matrix rows a,b;c,d for kernel");
    cc->add_option("--request", co.request, "JSON request (path or inline object)");
    cc->add_flag("--brute-force", co.brute, "enumerate instead of using the closed form");
    cc->add_option("--format", cformat)->check(CLI::IsMember({"tsv", "json"}));

    SupportOptions oo;
    std::string generators;
    auto* oc = app.add_subcommand("optimal", "Singleton defect and optimality checks for a code");
    oo.add_to(oc);
    oc->add_option("--generators", generators, "generator coordinates, e.g. 1,1;0,2")->required();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return usage;
    }

    try {
        if (*kc) return cmd_krawtchouk(so, dual, verify, format, labels, out, err);
        if (*vc) return cmd_verify_support(vo, vformat, out);
        if (*tc) return cmd_transform(to, dist, code_size, direction, out);
        if (*cc) return cmd_count(co, cformat, out);
        if (*oc) return cmd_optimal(oo, generators, out);
    } catch (const AxiomViolation& e) {
        err << e.what() << "\n";
        return axiom;
    } catch (const LatticeIrregular& e) {
        err << e.what() << "\n";
        return irregular;
    } catch (const ArithmeticInconsistency& e) {
        err << e.what() << "\n";
        return inconsistent;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return usage;
    }
    return usage;
}

}  // namespace latmw::cli
