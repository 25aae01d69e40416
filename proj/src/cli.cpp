#include "hsr/cli.hpp"

#include "hsr/errors.hpp"
#include "hsr/io.hpp"
#include "hsr/reconstruction.hpp"
#include "hsr/survey.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace hsr {

namespace {

struct Options {
    std::string input = "-";
    std::string format = "json";
    std::string mode = "ones";
    std::string hunt = "no-critical";
    std::size_t limit = 64;
    std::uint64_t seed = 0;
    std::size_t n = 5;
    std::size_t n0 = 4;
    std::size_t n_max = 8;
    std::size_t workers = 1;
    std::size_t samples = 0;
    int color = 1;
    std::size_t max_f = 3;
};

struct Outcome {
    Json result;
    Json parameters = Json::object();
    std::optional<std::uint64_t> seed;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string & path, std::istream & in)
{
    if (path == "-")
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw InputError("cannot open input file " + path);
    return {std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>()};
}

Json pairs_json(const std::vector<Pair> & pairs)
{
    Json out = Json::array();
    for (const Pair & p : pairs)
        out.push_back({p.lo, p.hi});
    return out;
}

Json set_json(const VertexSet & s) { return s.members(); }

Json optional_coloring(const std::optional<Coloring> & phi) { return phi ? coloring_to_json(*phi) : Json(nullptr); }

Format format_of(const Options & o) { return o.format == "graph6" ? Format::graph6 : Format::json; }

DotMode dot_mode_of(const Options & o)
{
    return o.mode == "both" ? DotMode::both : o.mode == "zeros" ? DotMode::zeros : DotMode::ones;
}

Json survey_json(const SurveyResult & s)
{
    Json hist = Json::object();
    for (auto [r, count] : s.r_histogram)
        hist[std::to_string(r)] = count;
    Json violations = Json::array();
    for (const auto & v : s.violations)
        violations.push_back({{"coloring", coloring_to_json(v.coloring)}, {"check", v.check}});
    return {
        {"n", s.n},
        {"exhaustive", s.exhaustive},
        {"samples", s.samples},
        {"total", s.total},
        {"reconstructible", s.reconstructible},
        {"unreconstructible_with_critical", s.unreconstructible_with_critical},
        {"unreconstructible_without_critical", s.unreconstructible_without_critical},
        {"guarded", s.guarded},
        {"r_histogram", hist},
        {"violations", violations},
    };
}

Outcome run_command(const std::string & command, const Options & o, const std::string & text)
{
    Outcome out;
    auto coloring = [&] { return parse_coloring(text, format_of(o)); };

    if (command == "gen") {
        GeneratorSpec spec = spec_from_json(parse_json(text));
        Coloring phi = generate(spec);
        out.result = {{"kind", kind_name(spec)}, {"coloring", coloring_to_json(phi)}};
        if (phi.size() <= 62)
            out.result["graph6"] = to_graph6(phi);
    }
    else if (command == "classify") {
        ReconstructionReport r = classify(coloring());
        out.result = {
            {"reconstructible", r.reconstructible},
            {"solution_count", r.solution_count},
            {"r_value", r.r_value},
            {"critical_pairs", pairs_json(r.critical_pairs)},
            {"witness", optional_coloring(r.witness)},
        };
    }
    else if (command == "reconstructions") {
        SolveResult r = reconstructions(coloring(), o.limit);
        Json list = Json::array();
        for (const Coloring & psi : r.solutions)
            list.push_back(coloring_to_json(psi));
        out.result = {{"solutions", list}, {"count", r.solutions.size()}, {"truncated", r.truncated}};
        out.parameters["limit"] = o.limit;
    }
    else if (command == "critical") {
        out.result = {{"critical_pairs", pairs_json(critical_pairs(coloring()))}};
    }
    else if (command == "rvalue") {
        out.result = {{"r_value", r_value(coloring())}};
    }
    else if (command == "maximal") {
        Json list = Json::array();
        for (const VertexSet & s : maximal_homogeneous(coloring()))
            list.push_back(set_json(s));
        out.result = {{"maximal", list}};
    }
    else if (command == "certify4") {
        Coloring phi = coloring();
        Json entries = Json::array();
        bool total = true;
        for (const auto & e : four_set_certificate(phi)) {
            entries.push_back({{"four", set_json(e.four)}, {"witness", e.witness ? set_json(*e.witness) : Json(nullptr)}});
            total = total && e.witness.has_value();
        }
        out.result = {{"entries", entries}, {"total", total}, {"reconstructible", is_reconstructible(phi)}};
    }
    else if (command == "eprop") {
        ExtensionCheck c = extension_property(coloring(), static_cast<Color>(o.color), o.max_f);
        out.result = {{"holds", c.holds}, {"failing", c.failing ? set_json(*c.failing) : Json(nullptr)}};
        out.parameters = {{"color", o.color}, {"max_f", o.max_f}};
    }
    else if (command == "recognize") {
        RecognitionOutcome r = recognize_triples(triple_family_from_json(parse_json(text)));
        Json witness = nullptr;
        if (r.infeasibility_witness)
            witness = {r.infeasibility_witness->a, r.infeasibility_witness->b, r.infeasibility_witness->c};
        out.result = {
            {"realizable", r.realizable},
            {"canonical_reconstruction", optional_coloring(r.canonical_reconstruction)},
            {"infeasibility_witness", witness},
        };
    }
    else if (command == "survey") {
        SurveyResult s = survey(o.n, {o.workers, o.seed, o.samples});
        out.result = survey_json(s);
        out.parameters = {{"n", o.n}};
        if (!s.exhaustive) {
            out.parameters["samples"] = s.samples;
            out.seed = s.seed;
        }
    }
    else if (command == "hunt") {
        CampaignOptions options{o.workers, o.seed, 0};
        Json list = Json::array();
        if (o.hunt == "no-critical") {
            for (const Coloring & phi : hunt_no_critical(o.n, options))
                list.push_back(coloring_to_json(phi));
            out.parameters = {{"hunt", o.hunt}, {"n", o.n}};
        }
        else {
            for (const SegmentWitness & w : hunt_segment_question(o.n, o.n0, options))
                list.push_back({{"coloring", coloring_to_json(w.coloring)}, {"critical_steps", w.critical_steps}});
            out.parameters = {{"hunt", o.hunt}, {"n", o.n}, {"n0", o.n0}};
        }
        out.result = {{"witnesses", list}, {"count", list.size()}};
        if (list.empty())
            out.result["note"] = "no witness at this scale";
    }
    else if (command == "prefix") {
        Json list = Json::array();
        for (const PrefixEntry & e : prefix_profile(spec_from_json(parse_json(text)), o.n_max))
            list.push_back({
                {"m", e.m},
                {"reconstructible", e.reconstructible},
                {"critical_pairs", pairs_json(e.critical_pairs)},
                {"r_value", e.r_value ? Json(*e.r_value) : Json(nullptr)},
            });
        out.result = {{"prefixes", list}};
        out.parameters = {{"n_max", o.n_max}};
    }
    else if (command == "dot") {
        out.result = {{"dot", emit_dot(coloring(), dot_mode_of(o))}};
        out.parameters = {{"mode", o.mode}};
    }
    if (o.format != "json")
        out.parameters["format"] = o.format;
    return out;
}

int fail(std::ostream & out, std::ostream & err, const std::string & command, int code, const std::string & kind,
    const std::string & message, std::size_t line = 0, std::size_t column = 0)
{
    Json error = {{"kind", kind}, {"message", message}};
    if (line) {
        error["line"] = line;
        error["column"] = column;
    }
    out << Json{{"command", command}, {"error", error}, {"tool_version", kToolVersion}}.dump() << '\n';
    err << "hsr: " << message << '\n';
    return code;
}

} // namespace

int run_cli(const std::vector<std::string> & args, std::istream & in, std::ostream & out, std::ostream & err)
{
    CLI::App app{"Reconstruction of pair-colorings from their homogeneous sets", "hsr"};
    app.require_subcommand(1);
    Options o;

    auto add_input = [&](CLI::App * sub) { sub->add_option("input", o.input, "Input file, or - for stdin"); };
    auto add_format = [&](CLI::App * sub) {
        sub->add_option("--format", o.format, "Coloring input format")->check(CLI::IsMember({"json", "graph6"}));
    };
    auto add_workers = [&](CLI::App * sub) { sub->add_option("--workers", o.workers, "Worker threads"); };

    for (const char * name : {"classify", "critical", "rvalue", "maximal", "certify4"}) {
        auto * sub = app.add_subcommand(name);
        add_input(sub);
        add_format(sub);
    }
    app.get_subcommand("classify")->description("Reconstructibility, r-value, critical pairs");
    app.get_subcommand("critical")->description("Critical pairs");
    app.get_subcommand("rvalue")->description("Distance to the nearest nontrivial reconstruction");
    app.get_subcommand("maximal")->description("Maximal homogeneous sets");
    app.get_subcommand("certify4")->description("Least reconstructible superset of every 4-set");

    auto * gen = app.add_subcommand("gen", "Generate a coloring from a spec document");
    add_input(gen);

    auto * recon = app.add_subcommand("reconstructions", "All colorings with the same homogeneous sets");
    add_input(recon);
    add_format(recon);
    recon->add_option("--limit", o.limit, "Maximum number of solutions")->check(CLI::Range(2, 1 << 30));

    auto * eprop = app.add_subcommand("eprop", "One-point extension property");
    add_input(eprop);
    add_format(eprop);
    eprop->add_option("--color", o.color, "Color of the extension")->check(CLI::Range(0, 1));
    eprop->add_option("--max-f", o.max_f, "Largest finite set size to check");

    auto * recognize = app.add_subcommand("recognize", "Recognize a triple family and rebuild its least coloring");
    add_input(recognize);

    auto * surv = app.add_subcommand("survey", "Classify every small coloring up to relabeling and complement");
    surv->add_option("--n", o.n, "Ground set size")->required();
    surv->add_option("--seed", o.seed, "Sampling seed (n = 7, 8)");
    surv->add_option("--samples", o.samples, "Random draws (n = 7, 8)");
    add_workers(surv);

    auto * hunt = app.add_subcommand("hunt", "Search for witnesses");
    hunt->add_option("--kind", o.hunt, "Which hunt")->check(CLI::IsMember({"no-critical", "segment"}));
    hunt->add_option("--n", o.n, "Ground set size")->required();
    hunt->add_option("--n0", o.n0, "First prefix length required to be non-reconstructible");
    hunt->add_option("--seed", o.seed, "Seed (recorded only)");
    add_workers(hunt);

    auto * prefix_cmd = app.add_subcommand("prefix", "Profile the initial segments of a generated coloring");
    add_input(prefix_cmd);
    prefix_cmd->add_option("--n-max", o.n_max, "Largest prefix");

    auto * dot = app.add_subcommand("dot", "Graphviz rendering");
    add_input(dot);
    add_format(dot);
    dot->add_option("--mode", o.mode, "Which pairs to draw")->check(CLI::IsMember({"ones", "zeros", "both"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    }
    catch (const CLI::CallForHelp &) {
        out << app.help();
        return exit_ok;
    }
    catch (const CLI::ParseError & e) {
        return fail(out, err, "", exit_usage, "usage", e.what());
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        bool needs_input = command != "survey" && command != "hunt";
        std::string text = needs_input ? read_input(o.input, in) : std::string();
        Outcome r = run_command(command, o, text);
        out << render_report(command, r.parameters, text, r.result, r.seed) << '\n';
        return exit_ok;
    }
    catch (const InputError & e) {
        return fail(out, err, command, exit_usage, "usage", e.what());
    }
    catch (const ParseError & e) {
        return fail(out, err, command, exit_validation, "parse", e.what(), e.line(), e.offset());
    }
    catch (const DomainError & e) {
        return fail(out, err, command, exit_validation, "validation", e.what());
    }
    catch (const ResourceError & e) {
        return fail(out, err, command, exit_resource, "resource", e.what());
    }
    catch (const InvariantViolation & e) {
        return fail(out, err, command, exit_invariant, "invariant", e.what());
    }
    catch (const std::exception & e) {
        return fail(out, err, command, exit_invariant, "internal", e.what());
    }
}

} // namespace hsr
