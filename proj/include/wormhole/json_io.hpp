#pragma once

// JSON views of the domain types. Chains serialize as arrays of integers,
// rationals as base-10 digit strings, triangulations with lexicographically
// sorted diagonals. Ordered maps keep output byte-stable.

#include "wormhole/coherent.hpp"
#include "wormhole/hj.hpp"
#include "wormhole/triangulation.hpp"
#include "wormhole/ww.hpp"

#include <json.hpp>

namespace wormhole {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& r);
Json to_json(const Chain& c);
Json to_json(const ExtZeroChain& c);
Json to_json(const Triangulation& t);
Json to_json(const FramedTriangulation& ft);
Json to_json(const CoherentGraph& g);
Json to_json(const ParametricFamily& f);
Json to_json(const WWDecomposition& d);
Json to_json(const ClassifiedPair& p);
Json to_json(const PResolutionReport& r);
Json to_json(const HtuOutcome& o);
Json to_json(const RecoveredSingularity& r);

// Parsers for the CLI surface; throw InvalidInput on malformed text.
Chain parse_chain(const std::string& text);          // "2,1,2"
ExtZeroChain parse_extended(const std::string& text); // "b1,...,bs|b0"
Rational parse_rational(const std::string& text);     // "m/q" or integer

} // namespace wormhole
