#include "hsr/io.hpp"

#include "hsr/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

namespace hsr {

namespace {

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t offset)
{
    offset = std::min(offset, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        }
        else
            ++column;
    }
    return {line, column};
}

template <typename T>
T field(const Json & doc, const char * key)
{
    if (!doc.is_object() || !doc.contains(key))
        throw DomainError(std::string("missing field \"") + key + "\"");
    try {
        return doc.at(key).get<T>();
    }
    catch (const nlohmann::json::exception &) {
        throw DomainError(std::string("field \"") + key + "\" has the wrong type");
    }
}

template <typename T>
T field_or(const Json & doc, const char * key, T fallback)
{
    return doc.contains(key) ? field<T>(doc, key) : fallback;
}

std::size_t checked_size(const Json & doc)
{
    auto n = field<std::int64_t>(doc, "n");
    if (n < 0 || static_cast<std::size_t>(n) > kMaxVertices)
        throw DomainError("n must lie in 0.." + std::to_string(kMaxVertices));
    return static_cast<std::size_t>(n);
}

const char * variant_name(PairBlockPartitionSpec::Variant v)
{
    switch (v) {
    case PairBlockPartitionSpec::Variant::a: return "a";
    case PairBlockPartitionSpec::Variant::b: return "b";
    default: return "none";
    }
}

} // namespace

Json coloring_to_json(const Coloring & phi)
{
    std::vector<Pair> ones = phi.ones();
    std::sort(ones.begin(), ones.end());
    Json pairs = Json::array();
    for (const Pair & p : ones)
        pairs.push_back({p.lo, p.hi});
    return {{"n", phi.size()}, {"ones", pairs}};
}

Coloring coloring_from_json(const Json & doc)
{
    std::size_t n = checked_size(doc);
    auto raw = field<std::vector<std::vector<std::int64_t>>>(doc, "ones");
    std::set<Pair> seen;
    for (const auto & p : raw) {
        if (p.size() != 2)
            throw DomainError("each pair must have exactly two vertices");
        for (auto v : p)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw DomainError("pair vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
        if (p[0] == p[1])
            throw DomainError("pair joins vertex " + std::to_string(p[0]) + " to itself");
        if (!seen.emplace(static_cast<Vertex>(p[0]), static_cast<Vertex>(p[1])).second)
            throw DomainError("duplicate pair");
    }
    std::vector<Pair> ones(seen.begin(), seen.end());
    return Coloring::from_ones(n, ones);
}

std::string to_graph6(const Coloring & phi)
{
    std::size_t n = phi.size();
    if (n > 62)
        throw DomainError("graph6 output supports n <= 62");
    std::string out(1, static_cast<char>(63 + n));
    std::size_t bits = phi.pair_count();
    for (std::size_t k = 0; k < bits; k += 6) {
        int chunk = 0;
        for (std::size_t b = 0; b < 6; ++b)
            chunk = (chunk << 1) | (k + b < bits ? phi.bit(k + b) : 0);
        out.push_back(static_cast<char>(63 + chunk));
    }
    return out;
}

Coloring from_graph6(std::string_view line)
{
    if (line.starts_with(">>graph6<<"))
        line.remove_prefix(10);
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r'))
        line.remove_suffix(1);
    if (line.empty())
        throw ParseError("empty graph6 line", 1, 1);
    for (std::size_t i = 0; i < line.size(); ++i)
        if (line[i] < 63 || line[i] > 126)
            throw ParseError("invalid graph6 character", 1, i + 1);
    if (line[0] == 126)
        throw DomainError("graph6 input supports n <= 62");
    std::size_t n = static_cast<std::size_t>(line[0] - 63);
    std::size_t bits = choose2(n);
    std::size_t expected = 1 + (bits + 5) / 6;
    if (line.size() != expected)
        throw ParseError("graph6 line has " + std::to_string(line.size()) + " bytes, expected " + std::to_string(expected), 1,
            std::min(line.size(), expected) + 1);
    std::vector<std::uint64_t> words((bits + 63) / 64, 0);
    for (std::size_t k = 0; k < bits; ++k) {
        int chunk = line[1 + k / 6] - 63;
        if ((chunk >> (5 - k % 6)) & 1)
            words[k / 64] |= std::uint64_t{1} << (k % 64);
    }
    for (std::size_t k = bits; k < 6 * (expected - 1); ++k)
        if (((line[1 + k / 6] - 63) >> (5 - k % 6)) & 1)
            throw ParseError("nonzero padding bits in graph6 line", 1, 1 + k / 6 + 1);
    return Coloring::from_edge_bits(n, words);
}

Json parse_json(std::string_view text)
{
    try {
        return Json::parse(text.begin(), text.end());
    }
    catch (const nlohmann::json::parse_error & e) {
        auto [line, column] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ParseError(std::string("malformed JSON: ") + e.what(), line, column);
    }
}

Coloring parse_coloring(std::string_view text, Format format)
{
    if (format == Format::graph6) {
        auto start = text.find_first_not_of(" \t\r\n");
        if (start == std::string_view::npos)
            throw ParseError("empty input", 1, 1);
        auto [line, column] = line_and_column(text, start);
        std::string_view rest = text.substr(start);
        std::string_view first = rest.substr(0, rest.find('\n'));
        try {
            return from_graph6(first);
        }
        catch (const ParseError & e) {
            throw ParseError(e.what(), line, column + e.offset() - 1);
        }
    }
    return coloring_from_json(parse_json(text));
}

std::string emit_coloring(const Coloring & phi, Format format)
{
    return format == Format::graph6 ? to_graph6(phi) : coloring_to_json(phi).dump();
}

Json triple_family_to_json(const TripleFamily & t)
{
    Json triples = Json::array();
    for (const Triple & x : t.triples())
        triples.push_back({x.a, x.b, x.c});
    return {{"n", t.size()}, {"triples", triples}};
}

TripleFamily triple_family_from_json(const Json & doc)
{
    std::size_t n = checked_size(doc);
    auto raw = field<std::vector<std::vector<std::int64_t>>>(doc, "triples");
    TripleFamily t(n);
    for (const auto & x : raw) {
        if (x.size() != 3)
            throw DomainError("each triple must have exactly three vertices");
        for (auto v : x)
            if (v < 0 || static_cast<std::size_t>(v) >= n)
                throw DomainError("triple vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
        if (x[0] == x[1] || x[0] == x[2] || x[1] == x[2])
            throw DomainError("triple has a repeated vertex");
        t.insert(static_cast<Vertex>(x[0]), static_cast<Vertex>(x[1]), static_cast<Vertex>(x[2]));
    }
    return t;
}

Json spec_to_json(const GeneratorSpec & spec)
{
    Json doc = {{"kind", kind_name(spec)}};
    std::visit(
        [&](const auto & s) {
            using S = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<S, PartitionSpec>)
                doc["blocks"] = s.blocks;
            else if constexpr (std::is_same_v<S, SierpinskiSpec> || std::is_same_v<S, LinearOrderSpec>)
                doc["perm"] = s.perm;
            else if constexpr (std::is_same_v<S, BinaryTreeSpec>)
                doc["depth"] = s.depth;
            else if constexpr (std::is_same_v<S, RandomGraphSpec>) {
                doc["n"] = s.n;
                doc["seed"] = s.seed;
                doc["num"] = s.num;
                doc["den"] = s.den;
            }
            else if constexpr (std::is_same_v<S, ApexPairGadgetSpec> || std::is_same_v<S, TripleAnchorGadgetSpec>)
                doc["inner"] = coloring_to_json(s.inner);
            else if constexpr (std::is_same_v<S, ThreeMaxSpec>)
                doc["sizes"] = {s.a, s.b, s.c};
            else if constexpr (std::is_same_v<S, PairBlockPartitionSpec>) {
                doc["n"] = s.n;
                doc["variant"] = variant_name(s.variant);
            }
            else if constexpr (std::is_same_v<S, RecursiveExtensionSpec>) {
                doc["base"] = coloring_to_json(s.base);
                doc["x0"] = s.x0;
                doc["steps"] = s.steps;
                doc["diag"] = s.diag;
            }
            else
                doc["n"] = s.n;
        },
        spec);
    return doc;
}

GeneratorSpec spec_from_json(const Json & doc)
{
    auto kind = field<std::string>(doc, "kind");
    if (kind == "partition")
        return PartitionSpec{field<std::vector<std::vector<Vertex>>>(doc, "blocks")};
    if (kind == "sierpinski")
        return SierpinskiSpec{field<std::vector<Vertex>>(doc, "perm")};
    if (kind == "linear_order")
        return LinearOrderSpec{field<std::vector<Vertex>>(doc, "perm")};
    if (kind == "binary_tree")
        return BinaryTreeSpec{field<std::size_t>(doc, "depth")};
    if (kind == "random")
        return RandomGraphSpec{field<std::size_t>(doc, "n"), field<std::uint64_t>(doc, "seed"),
            field_or<std::uint64_t>(doc, "num", 1), field_or<std::uint64_t>(doc, "den", 2)};
    if (kind == "bit_predicate")
        return BitPredicateSpec{field<std::size_t>(doc, "n")};
    if (kind == "apex_pair_gadget")
        return ApexPairGadgetSpec{coloring_from_json(field<Json>(doc, "inner"))};
    if (kind == "triple_anchor_gadget")
        return TripleAnchorGadgetSpec{coloring_from_json(field<Json>(doc, "inner"))};
    if (kind == "uncovered_two_max")
        return UncoveredTwoMaxSpec{field<std::size_t>(doc, "n")};
    if (kind == "three_max") {
        auto sizes = field<std::vector<std::size_t>>(doc, "sizes");
        if (sizes.size() != 3)
            throw DomainError("three_max needs exactly three sizes");
        return ThreeMaxSpec{sizes[0], sizes[1], sizes[2]};
    }
    if (kind == "interleaved_two_max")
        return InterleavedTwoMaxSpec{field<std::size_t>(doc, "n")};
    if (kind == "pair_block_partition") {
        auto v = field_or<std::string>(doc, "variant", "none");
        using Variant = PairBlockPartitionSpec::Variant;
        Variant variant = v == "a" ? Variant::a : v == "b" ? Variant::b : Variant::none;
        if (v != "a" && v != "b" && v != "none")
            throw DomainError("variant must be none, a or b");
        return PairBlockPartitionSpec{field<std::size_t>(doc, "n"), variant};
    }
    if (kind == "recursive_extension")
        return RecursiveExtensionSpec{coloring_from_json(field<Json>(doc, "base")), field<Vertex>(doc, "x0"),
            field<std::size_t>(doc, "steps"), field<std::vector<Color>>(doc, "diag")};
    if (kind == "critical_chain")
        return CriticalChainSpec{field<std::size_t>(doc, "n")};
    throw DomainError("unknown generator kind \"" + kind + "\"");
}

std::string emit_dot(const Coloring & phi, DotMode mode)
{
    std::string out = "graph coloring {\n";
    for (Vertex v = 0; v < phi.size(); ++v)
        out += "  " + std::to_string(v) + ";\n";
    for (Vertex j = 1; j < phi.size(); ++j)
        for (Vertex i = 0; i < j; ++i) {
            Color c = phi.at(i, j);
            std::string edge = "  " + std::to_string(i) + " -- " + std::to_string(j);
            if (mode == DotMode::both)
                out += edge + (c ? " [style=solid];\n" : " [style=dashed];\n");
            else if ((mode == DotMode::ones) == (c == 1))
                out += edge + ";\n";
        }
    out += "}\n";
    return out;
}

std::uint64_t fnv1a64(std::string_view bytes)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string render_report(const std::string & command, const Json & parameters, std::string_view input,
    const Json & result, std::optional<std::uint64_t> seed)
{
    char digest[17];
    std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(fnv1a64(input)));
    Json doc = {
        {"command", command},
        {"parameters", parameters},
        {"input_digest", std::string("fnv1a64:") + digest},
        {"result", result},
        {"tool_version", kToolVersion},
    };
    if (seed)
        doc["seed"] = *seed;
    return doc.dump();
}

} // namespace hsr
