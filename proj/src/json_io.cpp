#include "wormhole/json_io.hpp"

#include "wormhole/errors.hpp"

#include <charconv>

namespace wormhole {

Json to_json(const Rational& r) {
    if (!r.defined()) return Json{{"undefined", true}};
    return Json{{"num", r.num().str()}, {"den", r.den().str()}};
}

Json to_json(const Chain& c) {
    Json arr = Json::array();
    for (Entry e : c) arr.push_back(e);
    return arr;
}

Json to_json(const ExtZeroChain& c) {
    return Json{{"body", to_json(c.body)}, {"hidden", c.hidden}};
}

Json to_json(const Triangulation& t) {
    Json diags = Json::array();
    for (auto [a, b] : t.diagonals) diags.push_back(Json::array({a, b}));
    return Json{{"size", t.size}, {"diagonals", diags}};
}

Json to_json(const FramedTriangulation& ft) {
    Json j = to_json(ft.tri);
    j["hidden"] = ft.hidden;
    return j;
}

Json to_json(const CoherentGraph& g) {
    return Json{{"weights", to_json(g.weights)}, {"labels", to_json(g.labels)}};
}

Json to_json(const ParametricFamily& f) {
    return Json{{"n", f.n},
                {"m", f.m},
                {"offsets", f.offsets},
                {"param_count", f.param_count},
                {"param_min", f.param_min}};
}

Json to_json(const WWDecomposition& d) {
    return Json{{"alpha", d.alpha}, {"beta", d.beta}, {"chain", to_json(d.chain)}};
}

Json to_json(const ClassifiedPair& p) {
    return Json{{"family", to_json(p.family)},
                {"params", p.params},
                {"first", to_json(p.first)},
                {"second", to_json(p.second)},
                {"valid_reframings", p.valid_reframings}};
}

Json to_json(const PResolutionReport& r) {
    Json decs = Json::array();
    for (const auto& d : r.decompositions) decs.push_back(to_json(d));
    Json j{{"m", r.label.m.str()},
           {"q", r.label.q.str()},
           {"minimal_resolution", to_json(r.minimal_resolution)},
           {"dual", to_json(r.dual)},
           {"count", r.decompositions.size()},
           {"decompositions", decs}};
    j["ww_index"] = r.index ? Json(*r.index) : Json(nullptr);
    j["wormhole"] = r.wormhole;
    j["basic"] = r.basic;
    return j;
}

Json to_json(const HtuOutcome& o) {
    Json trace = Json::array();
    for (const auto& s : o.trace) {
        Json step{{"degenerate", s.degenerate}};
        if (!s.degenerate) {
            step["end"] = s.end == PolygonEnd::front ? "front" : "back";
            step["next"] = to_json(s.next);
        }
        if (!s.note.empty()) step["note"] = s.note;
        trace.push_back(step);
    }
    Json j{{"outcome", o.degenerate ? "degenerate" : "basic"},
           {"sequence", to_json(o.seq)},
           {"decompositions", o.decomposition_count},
           {"trace", trace}};
    if (o.degenerate) j["matches_degenerate_pattern"] = o.matches_degenerate_pattern;
    if (!o.note.empty()) j["note"] = o.note;
    return j;
}

Json to_json(const RecoveredSingularity& r) {
    return Json{{"m", r.label.m.str()},
                {"q", r.label.q.str()},
                {"dual", to_json(r.dual)},
                {"minimal_resolution", to_json(r.minimal_resolution)}};
}

namespace {

Entry parse_entry(std::string_view tok) {
    Entry value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw InvalidInput("malformed integer '" + std::string(tok) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string_view::npos) {
            out.push_back(text.substr(start));
            return out;
        }
        out.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

} // namespace

Chain parse_chain(const std::string& text) {
    if (text.empty()) throw InvalidInput("empty chain");
    Chain out;
    for (auto tok : split(text, ',')) out.push_back(parse_entry(tok));
    return out;
}

ExtZeroChain parse_extended(const std::string& text) {
    auto parts = split(text, '|');
    if (parts.size() != 2) throw InvalidInput("extended chain must look like \"b1,...,bs|b0\"");
    ExtZeroChain c;
    c.body = parse_chain(std::string(parts[0]));
    c.hidden = parse_entry(parts[1]);
    return c;
}

Rational parse_rational(const std::string& text) {
    auto parts = split(text, '/');
    try {
        if (parts.size() == 1) return Rational(BigInt(std::string(parts[0])));
        if (parts.size() == 2)
            return Rational(BigInt(std::string(parts[0])), BigInt(std::string(parts[1])));
    } catch (const std::exception&) {
        throw InvalidInput("malformed rational '" + text + "'");
    }
    throw InvalidInput("malformed rational '" + text + "'");
}

} // namespace wormhole
