#pragma once

#include "latmw/common.hpp"
#include "latmw/group.hpp"
#include "latmw/lattice.hpp"
#include "latmw/matrix_enum.hpp"
#include "latmw/support.hpp"

#include <json.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace latmw::io {

using Json = nlohmann::json;

inline void require_object(const Json& j, const std::string& what) {
    if (!j.is_object()) throw InvalidArgument(what + " must be a JSON object");
}

/// Rejects keys outside `allowed`.
inline void only_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& what) {
    require_object(j, what);
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || it.key() == a;
        if (!ok) throw InvalidArgument("unknown key \"" + it.key() + "\" in " + what);
    }
}

inline const Json& field(const Json& j, const char* key, const std::string& what) {
    if (!j.contains(key)) throw InvalidArgument(what + " is missing \"" + key + "\"");
    return j.at(key);
}

template <class T>
T get_as(const Json& j, const std::string& what) {
    try {
        return j.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw InvalidArgument(what + " has the wrong type");
    }
}

inline Json parse(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

// {"orders":[n1,...,nk]}
inline FiniteAbelianGroup group_from_json(const Json& j) {
    only_keys(j, {"orders"}, "group descriptor");
    return FiniteAbelianGroup(get_as<std::vector<std::uint32_t>>(field(j, "orders", "group descriptor"), "orders"));
}

inline Json to_json(const FiniteAbelianGroup& G) { return Json{{"orders", G.orders()}}; }

inline std::vector<GroupElement> elements_from_json(const FiniteAbelianGroup& G, const Json& j, const std::string& what) {
    std::vector<GroupElement> out;
    for (const auto& e : get_as<std::vector<std::vector<std::uint32_t>>>(j, what)) {
        if (!G.contains(e)) throw InvalidArgument(what + " contains an element outside the group");
        out.push_back(GroupElement{e});
    }
    return out;
}

// {"group":{...}, "generators":[[..],..]}
inline Code code_from_json(const Json& j) {
    only_keys(j, {"group", "generators"}, "code descriptor");
    const auto G = group_from_json(field(j, "group", "code descriptor"));
    return subgroup_closure(G, elements_from_json(G, field(j, "generators", "code descriptor"), "generators"));
}

// {"elements":m, "leq":[[i,j],...], "rank":[r_0,...], "labels":[...]}; leq pairs are closed
// reflexively and transitively. A supplied rank vector must match the computed one.
inline FiniteLattice lattice_from_json(const Json& j) {
    only_keys(j, {"elements", "leq", "rank", "labels"}, "lattice descriptor");
    const auto n = get_as<std::size_t>(field(j, "elements", "lattice descriptor"), "elements");
    if (n == 0) throw InvalidArgument("lattice needs at least one element");
    std::vector<std::pair<std::size_t, std::size_t>> rel;
    for (const auto& p : get_as<std::vector<std::vector<std::size_t>>>(field(j, "leq", "lattice descriptor"), "leq")) {
        if (p.size() != 2 || p[0] >= n || p[1] >= n) throw InvalidArgument("leq entries must be index pairs below elements");
        rel.emplace_back(p[0], p[1]);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = get_as<std::vector<std::string>>(j.at("labels"), "labels");
    auto L = FiniteLattice::from_relations(n, rel, labels);
    if (j.contains("rank")) {
        const auto given = get_as<std::vector<int>>(j.at("rank"), "rank");
        if (given.size() != n) throw InvalidArgument("rank vector must have one entry per element");
        if (!L.is_graded()) throw LatticeIrregular("lattice is not graded");
        for (std::size_t a = 0; a < n; ++a)
            if (given[a] != L.rank_of(a))
                throw InvalidArgument("supplied rank of element " + std::to_string(a) + " is " + std::to_string(given[a]) +
                                      ", cover relations give " + std::to_string(L.rank_of(a)));
    }
    return L;
}

inline Json to_json(const FiniteLattice& L) {
    Json leq = Json::array();
    for (std::size_t a = 0; a < L.size(); ++a)
        for (std::size_t b = 0; b < L.size(); ++b)
            if (L.covers(a, b)) leq.push_back({a, b});
    Json j{{"elements", L.size()}, {"leq", leq}};
    if (L.is_graded()) j["rank"] = L.ranks();
    return j;
}

/// Parsed but unvalidated custom support, so that callers can report axiom failures.
struct CustomSupportSpec {
    FiniteAbelianGroup group;
    FiniteLattice lattice;
    std::vector<std::size_t> sigma;
};

inline CustomSupportSpec custom_spec_from_json(const Json& j) {
    only_keys(j, {"kind", "params", "sigma"}, "support descriptor");
    const auto& params = field(j, "params", "custom support");
    only_keys(params, {"group", "lattice"}, "custom support params");
    CustomSupportSpec spec{group_from_json(field(params, "group", "custom support params")),
                           lattice_from_json(field(params, "lattice", "custom support params")),
                           get_as<std::vector<std::size_t>>(field(j, "sigma", "custom support"), "sigma")};
    return spec;
}

inline bool is_custom(const Json& j) {
    require_object(j, "support descriptor");
    return get_as<std::string>(field(j, "kind", "support descriptor"), "kind") == "custom";
}

// {"kind":"hamming|rank|chain|lee4|homogeneous|custom", "params":{...}, "sigma":[...]}
inline RegularSupport support_from_json(const Json& j) {
    require_object(j, "support descriptor");
    const auto kind = get_as<std::string>(field(j, "kind", "support descriptor"), "kind");
    if (kind == "custom") {
        auto spec = custom_spec_from_json(j);
        return RegularSupport::create(std::move(spec.group), std::move(spec.lattice), std::move(spec.sigma));
    }
    only_keys(j, {"kind", "params"}, "support descriptor");
    const Json params = j.contains("params") ? j.at("params") : Json::object();
    auto num = [&](const char* key) { return get_as<int>(field(params, key, kind + " params"), key); };
    if (kind == "hamming") {
        only_keys(params, {"group", "n"}, "hamming params");
        return hamming_support(group_from_json(field(params, "group", "hamming params")), num("n"));
    }
    if (kind == "rank") {
        only_keys(params, {"q", "k", "m"}, "rank params");
        return rank_support(static_cast<std::uint32_t>(num("q")), num("k"), num("m"));
    }
    if (kind == "lee4") {
        only_keys(params, {}, "lee4 params");
        return lee4_support();
    }
    if (kind == "homogeneous") {
        only_keys(params, {"p", "n"}, "homogeneous params");
        return homogeneous_support(static_cast<std::uint32_t>(num("p")), num("n"));
    }
    if (kind == "chain") {
        // "chain": generator lists of G_1, ..., G_r; omitted means the full chain of a cyclic group.
        only_keys(params, {"group", "chain"}, "chain params");
        const auto G = group_from_json(field(params, "group", "chain params"));
        if (!params.contains("chain")) {
            if (G.factors() != 1) throw InvalidArgument("chain without explicit subgroups needs a cyclic group");
            return cyclic_chain_support(G.orders()[0]);
        }
        std::vector<Code> chain;
        const auto& levels = params.at("chain");
        if (!levels.is_array()) throw InvalidArgument("chain must be an array of generator lists");
        for (const auto& level : levels) chain.push_back(subgroup_closure(G, elements_from_json(G, level, "chain level")));
        return chain_support(G, chain);
    }
    throw InvalidArgument("unknown support kind \"" + kind + "\"");
}

inline Json counts_json(const std::vector<Integer>& counts) {
    Json a = Json::array();
    for (const auto& c : counts) a.push_back(c.str());
    return Json{{"counts", a}};
}

inline Json to_json(const WeightDistribution& W) { return counts_json(W.counts); }

/// Accepts numbers or decimal strings.
inline Integer integer_from_json(const Json& j, const std::string& what) {
    try {
        if (j.is_string()) return Integer(j.get<std::string>());
        if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
    } catch (const std::exception&) {
    }
    throw InvalidArgument(what + " must be an integer or a decimal string");
}

// {"counts":[...]}
inline WeightDistribution distribution_from_json(const Json& j) {
    only_keys(j, {"counts"}, "distribution");
    const auto& c = field(j, "counts", "distribution");
    if (!c.is_array()) throw InvalidArgument("counts must be an array");
    WeightDistribution W;
    for (const auto& x : c) W.counts.push_back(integer_from_json(x, "count"));
    return W;
}

/// Constraint object; positions are 1-based as in matrix notation.
/// {"kind":"none|sum_zero|kernel|zero_block|zero_diagonal|symmetric|skew_symmetric",
///  "indices":[[r,c],..], "block":[k',m'], "diagonal":[s,..], "matrix":[[..],..]}
inline ConstraintSpec constraint_from_json(const Json& j) {
    only_keys(j, {"kind", "indices", "block", "diagonal", "matrix"}, "constraint");
    const auto kind = get_as<std::string>(field(j, "kind", "constraint"), "kind");
    auto must_not = [&](std::initializer_list<const char*> keys) {
        for (const char* k : keys)
            if (j.contains(k)) throw InvalidArgument(std::string("key \"") + k + "\" does not apply to " + kind);
    };
    if (kind == "none") {
        must_not({"indices", "block", "diagonal", "matrix"});
        return ConstraintSpec::none();
    }
    if (kind == "sum_zero") {
        must_not({"block", "diagonal", "matrix"});
        std::vector<std::pair<int, int>> I;
        for (const auto& p : get_as<std::vector<std::vector<int>>>(field(j, "indices", "sum_zero"), "indices")) {
            if (p.size() != 2) throw InvalidArgument("indices must be [row, column] pairs");
            I.emplace_back(p[0] - 1, p[1] - 1);
        }
        return ConstraintSpec::sum_zero(std::move(I));
    }
    if (kind == "zero_block") {
        must_not({"indices", "diagonal", "matrix"});
        const auto b = get_as<std::vector<int>>(field(j, "block", "zero_block"), "block");
        if (b.size() != 2) throw InvalidArgument("block must be [k', m']");
        return ConstraintSpec::zero_block(b[0], b[1]);
    }
    if (kind == "zero_diagonal") {
        must_not({"indices", "block", "matrix"});
        auto d = get_as<std::vector<int>>(field(j, "diagonal", "zero_diagonal"), "diagonal");
        for (auto& s : d) --s;
        return ConstraintSpec::zero_diagonal(std::move(d));
    }
    if (kind == "kernel") {
        must_not({"indices", "block", "diagonal"});
        const auto rows = get_as<std::vector<std::vector<std::uint32_t>>>(field(j, "matrix", "kernel"), "matrix");
        if (rows.empty() || rows[0].empty()) throw InvalidArgument("functional matrix must be nonempty");
        FieldMatrix A(rows.size(), rows[0].size());
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (rows[r].size() != A.cols) throw InvalidArgument("functional matrix rows differ in length");
            for (std::size_t c = 0; c < A.cols; ++c) A.at(r, c) = rows[r][c];
        }
        return ConstraintSpec::kernel(std::move(A));
    }
    if (kind == "symmetric" || kind == "skew_symmetric") {
        must_not({"indices", "block", "diagonal", "matrix"});
        return kind == "symmetric" ? ConstraintSpec::symmetric() : ConstraintSpec::skew_symmetric();
    }
    throw InvalidArgument("unknown constraint kind \"" + kind + "\"");
}

struct CountRequest {
    MatrixSpaceParams params;
    ConstraintSpec constraint;
    int rank = 0;
};

// {"q":…, "k":…, "m":…, "constraint":{…}, "rank":j}
inline CountRequest count_request_from_json(const Json& j) {
    only_keys(j, {"q", "k", "m", "constraint", "rank"}, "count request");
    CountRequest r;
    r.params.q = get_as<std::uint32_t>(field(j, "q", "count request"), "q");
    r.params.k = get_as<int>(field(j, "k", "count request"), "k");
    r.params.m = get_as<int>(field(j, "m", "count request"), "m");
    r.rank = get_as<int>(field(j, "rank", "count request"), "rank");
    r.constraint = j.contains("constraint") ? constraint_from_json(j.at("constraint")) : ConstraintSpec::none();
    r.params.validate();
    r.constraint.validate(r.params);
    return r;
}

inline Json count_json(const Integer& c) { return Json{{"count", c.str()}}; }

}  // namespace latmw::io
