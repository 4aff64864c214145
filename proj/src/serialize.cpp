#include "keypoly/serialize.hpp"

#include <limits>

namespace keypoly {

namespace {

// Narrow a JSON access failure into a validation_error with the original
// message, so malformed input never surfaces as a library bug.
template <typename Fn>
auto guarded(Fn&& fn) -> decltype(fn()) {
    try {
        return fn();
    } catch (const json::exception& e) {
        throw validation_error(std::string("malformed JSON input: ") + e.what());
    }
}

json cell_json(const Cell& c) {
    return json::array({c.first, c.second});
}

} // namespace

const char* set_kind_name(SetKind k) {
    switch (k) {
    case SetKind::A: return "A";
    case SetKind::B: return "B";
    case SetKind::C: return "C";
    case SetKind::F: return "F";
    case SetKind::G: return "G";
    }
    return "?";
}

json to_json(const Partition& p) {
    return json{{"n", p.n()}, {"parts", p.parts()}};
}

json to_json(const Permutation& p) {
    return json(p.entries());
}

json to_json(const Tableau& t) {
    return json{{"n", t.n()}, {"shape", t.shape().parts()}, {"columns", t.columns()}};
}

json to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
#if defined(KEYPOLY_WIDE_COEFF)
        if (c < static_cast<Coeff>(std::numeric_limits<long long>::min()) ||
            c > static_cast<Coeff>(std::numeric_limits<long long>::max()))
            throw limit_error("coefficient too wide for JSON output");
#endif
        terms.push_back(json{{"exponents", e}, {"coefficient", static_cast<long long>(c)}});
    }
    return json{{"n", p.n()}, {"terms", std::move(terms)}};
}

json to_json(const ScanPath& p) {
    json cells = json::array();
    for (const Cell& c : p.cells) cells.push_back(cell_json(c));
    return json{{"origin", cell_json(p.origin())},
                {"cells", std::move(cells)},
                {"values", p.values},
                {"terminal", p.terminal()}};
}

json to_json(const ConditionSet& s) {
    return json{{"cell", cell_json({s.col, s.row})},
                {"kind", set_kind_name(s.kind)},
                {"values", s.values}};
}

Partition partition_from_json(const json& j) {
    return guarded([&] {
        return Partition(j.at("n").get<int>(), j.at("parts").get<std::vector<int>>());
    });
}

Permutation permutation_from_json(const json& j) {
    return guarded([&] { return Permutation(j.get<std::vector<int>>()); });
}

Tableau tableau_from_json(const json& j) {
    return guarded([&] {
        Partition shape(j.at("n").get<int>(), j.at("shape").get<std::vector<int>>());
        return Tableau(std::move(shape),
                       j.at("columns").get<std::vector<std::vector<int>>>());
    });
}

Polynomial polynomial_from_json(const json& j) {
    return guarded([&] {
        Polynomial p(j.at("n").get<int>());
        for (const json& term : j.at("terms"))
            p.add_term(term.at("exponents").get<std::vector<int>>(),
                       term.at("coefficient").get<long long>());
        return p;
    });
}

} // namespace keypoly
