#pragma once

#include <string>
#include <string_view>

#include "pmv/algebra.hpp"
#include "pmv/json_min.hpp"

namespace pmv {

/// A parsed spec file: the algebra it denotes plus the canonical form of the
/// tree.  Printing the canonical form and parsing it again reproduces the
/// same bytes.
struct ParsedSpec {
    AlgebraPtr algebra;
    JsonValue canonical;
};

/// Parses a UTF-8 JSON-syntax algebra spec:
///   {"kind":"mv_chain","n":4}
///   {"kind":"boolean","dims":2}
///   {"kind":"gamma","group":GROUP,"unit":ELEMENT}
///   {"kind":"product","factors":[SPEC,...]}
///   {"kind":"interval","base":SPEC,"at":ELEMENT}
///   {"kind":"quotient","base":SPEC,"ideal":[ELEMENT,...]}
/// with GROUP one of
///   {"kind":"int_vector","dims":D,"order":"product"|"lex"}
///   {"kind":"rat_vector","dims":D,"order":"product"|"lex"}
///   {"kind":"cocycle_q4"}
///   {"kind":"lex_pair","h":GROUP,"g":GROUP}
/// Scalars are integers or "p/q" strings; floats are rejected.  All errors
/// carry line/column positions.
ParsedSpec parse_spec(std::string_view text);

std::string print_spec(const ParsedSpec& spec);

/// Shape-directed element literal: a bare scalar for one-dimensional group
/// carriers and table indices, an array of scalars for vector carriers, an
/// array of component literals for products.
PmvElement parse_element(const AlgebraPtr& M, const JsonValue& v);

JsonValue element_to_json(const AlgebraPtr& M, const PmvElement& x);

} // namespace pmv
