#pragma once

#include "hsr/coloring.hpp"
#include "hsr/generators.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hsr {

using Json = nlohmann::json;

enum class Format { json, graph6 };

/// {"n": N, "ones": [[i, j], ...]} with i < j, pairs sorted.
Json coloring_to_json(const Coloring & phi);
/// Accepts pairs in any order and orientation. Throws DomainError on
/// out-of-range vertices, loops or duplicate pairs.
Coloring coloring_from_json(const Json & doc);

/// graph6 line; the bit stream is the edge bit-vector in pair-index order.
/// Supports n <= 62 (the single-byte size header).
std::string to_graph6(const Coloring & phi);
Coloring from_graph6(std::string_view line);

/// Throws ParseError (with 1-based line and column) on malformed text and
/// DomainError on well-formed text describing an invalid coloring.
Coloring parse_coloring(std::string_view text, Format format = Format::json);
std::string emit_coloring(const Coloring & phi, Format format = Format::json);

/// {"n": N, "triples": [[i, j, k], ...]}.
Json triple_family_to_json(const TripleFamily & t);
TripleFamily triple_family_from_json(const Json & doc);

/// {"kind": "...", ...fields}; see README for the per-kind fields.
Json spec_to_json(const GeneratorSpec & spec);
GeneratorSpec spec_from_json(const Json & doc);

/// Parses text as JSON, mapping syntax errors to ParseError.
Json parse_json(std::string_view text);

enum class DotMode { ones, zeros, both };

/// Undirected DOT graph with n nodes. In `both` mode 1-pairs are solid and
/// 0-pairs dashed.
std::string emit_dot(const Coloring & phi, DotMode mode = DotMode::ones);

/// 64-bit FNV-1a.
std::uint64_t fnv1a64(std::string_view bytes);

inline constexpr const char * kToolVersion = "0.1.0";

/// Canonical report: sorted keys, compact, one line.
std::string render_report(const std::string & command, const Json & parameters, std::string_view input,
    const Json & result, std::optional<std::uint64_t> seed);

} // namespace hsr
