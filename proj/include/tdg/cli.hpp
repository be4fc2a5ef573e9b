/*
 * Copyright 2026 The tdgir Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <fstream>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tdg/io.hpp"
#include "tdg/reductions.hpp"
#include "tdg/solvers.hpp"

namespace tdg::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kBudgetError = 3 };

namespace detail {

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw ParseError("cannot write " + path);
}

/// "reciprocal", "exponential:1/2", "table:1,1/2,1/3" or "bounded:1,1/2"
/// (cutoff = number of values).
inline DistanceFactorFunction parse_dff_spec(const std::string& spec) {
    const auto colon = spec.find(':');
    const std::string kind = spec.substr(0, colon);
    const std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);
    auto values = [&] {
        std::vector<Rational> out;
        std::stringstream ss(params);
        for (std::string part; std::getline(ss, part, ',');) out.push_back(Rational::parse(part));
        return out;
    };
    DistanceFactorFunction dff;
    if (kind == "reciprocal" && params.empty()) dff = DistanceFactorFunction::reciprocal();
    else if (kind == "exponential") dff = DistanceFactorFunction::exponential(Rational::parse(params));
    else if (kind == "table") dff = DistanceFactorFunction::table(values());
    else if (kind == "bounded") {
        auto v = values();
        const std::size_t cutoff = v.size();
        dff = DistanceFactorFunction::bounded(std::move(v), cutoff);
    } else
        throw ParseError("unrecognised --dff value \"" + spec + "\"");
    if (auto v = dff.violations(); !v.empty()) throw ValidationError(std::move(v));
    return dff;
}

inline EquitableVariant parse_variant(const std::string& name) {
    if (name == "bipartite") return EquitableVariant::Bipartite;
    if (name == "instar") return EquitableVariant::InStar;
    if (name == "path") return EquitableVariant::Path;
    throw ParseError("unknown variant \"" + name + "\" (expected bipartite, instar or path)");
}

inline AgentId center_for(const EnmityStructure& es, bool sink) {
    if (es.arcs.empty()) return 0;
    return sink ? es.arcs.front().to : es.arcs.front().from;
}

struct SolveArgs {
    std::string instance;
    std::string algorithm = "auto";
    bool witness = false;
    unsigned threads = 1;
};

inline void solve(const SolveArgs& args, std::ostream& out) {
    const Instance inst = io::parse_instance(read_file(args.instance));
    SolveResult r;
    if (args.algorithm == "brute") {
        r = solve_brute_force(inst, {args.threads});
    } else if (args.algorithm == "single-source" || args.algorithm == "path-instar") {
        const bool sink = args.algorithm == "path-instar";
        if (inst.agent_count() == 0) r = {Answer::Yes, Assignment{}, sink ? Algorithm::PathInstar : Algorithm::SingleSource, 0};
        else {
            const AgentId p = center_for(enmity_structure(inst), sink);
            r = sink ? solve_path_instar(inst, p) : solve_single_source(inst, p);
        }
    } else {
        r = solve_auto(inst, {args.threads});
    }
    io::Json doc = {{"answer", r.yes() ? "yes" : "no"},
                    {"algorithm", to_string(r.algorithm)},
                    {"nodes", r.nodes_explored}};
    if (args.witness && r.witness) doc["witness"] = io::assignment_to_json(*r.witness, inst);
    out << doc.dump() << '\n';
}

inline void check(const std::string& instance_path, const std::string& assignment_path, std::ostream& out) {
    const Instance inst = io::parse_instance(read_file(instance_path));
    const Assignment a = io::parse_assignment(read_file(assignment_path), inst);
    const IrReport report = is_individually_rational(inst, a);
    io::Json utilities = io::Json::array();
    for (const auto& u : report.utilities) utilities.push_back(u.to_string());
    out << io::Json{{"individually_rational", report.individually_rational}, {"utilities", utilities}}.dump() << '\n';
}

inline void classify(const std::string& instance_path, std::ostream& out) {
    const Instance inst = io::parse_instance(read_file(instance_path));
    const auto es = enmity_structure(inst);
    const auto dist = shortest_distances(inst.topology);
    io::Json components = io::Json::array();
    for (const auto& c : connected_components(inst.topology, dist))
        components.push_back({{"vertices", c.vertices}, {"diameter", c.diameter}});
    io::Json doc = {{"classification", to_string(es.classification)},
                    {"arc_count", es.arc_count()},
                    {"agent", es.center ? io::Json(inst.agent_names[*es.center]) : io::Json(nullptr)},
                    {"topology", {{"is_path", is_path(inst.topology)}, {"components", components}}}};
    out << doc.dump() << '\n';
}

struct GenerateArgs {
    std::string family;
    std::string source;
    std::string beta = "1";
    std::string dff = "reciprocal";
    std::string variant = "bipartite";
    bool waive = false;
    std::string output;
    std::string certificate_output;
};

inline void generate(const GenerateArgs& args, std::ostream& out) {
    const SourceProblem src = io::parse_source(read_file(args.source));
    if (family_name(src) != args.family)
        throw ParseError("source document describes " + std::string(family_name(src)) + ", not " + args.family);
    GeneratorOptions options;
    options.dff = parse_dff_spec(args.dff);
    options.beta = Rational::parse(args.beta);
    options.variant = parse_variant(args.variant);
    options.waive_preconditions = args.waive;
    GeneratedInstance gen = generate(src, options);

    if (!args.certificate_output.empty()) {
        const SourceDecision decision = decide_source(src);
        gen.metadata["source-answer"] = decision.yes ? "yes" : "no";
        if (decision.yes) {
            const Assignment a = certificate_to_assignment(gen, *decision.certificate);
            write_file(args.certificate_output, io::assignment_to_json(a, gen.instance).dump(2) + "\n");
        }
    }

    const std::string text = io::serialize_generated(gen);
    if (args.output.empty()) out << text;
    else write_file(args.output, text);
}

}  // namespace detail

/// Entry point of the tdgir command line tool. Exit status 0 means the command
/// ran; yes/no answers are reported on `out`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Individual rationality in topological distance games"};
    app.name("tdgir");
    app.require_subcommand(1);

    detail::SolveArgs solve_args;
    auto* solve = app.add_subcommand("solve", "Decide whether an individually rational assignment exists");
    solve->add_option("instance", solve_args.instance, "Instance document")->required();
    solve->add_option("--algorithm", solve_args.algorithm, "auto, brute, single-source or path-instar")
        ->check(CLI::IsMember({"auto", "brute", "single-source", "path-instar"}));
    solve->add_flag("--witness", solve_args.witness, "Print the assignment found");
    solve->add_option("--threads", solve_args.threads, "Brute-force worker threads")->check(CLI::PositiveNumber);

    std::string check_instance, check_assignment;
    auto* check = app.add_subcommand("check", "Evaluate every agent's utility under an assignment");
    check->add_option("instance", check_instance, "Instance document")->required();
    check->add_option("assignment", check_assignment, "Assignment document")->required();

    std::string classify_instance;
    auto* classify = app.add_subcommand("classify", "Report enmity structure and topology facts");
    classify->add_option("instance", classify_instance, "Instance document")->required();

    detail::GenerateArgs gen_args;
    auto* generate = app.add_subcommand("generate", "Build the reduction instance for a source problem");
    generate->add_option("family", gen_args.family, "Source problem family")
        ->required()
        ->check(CLI::IsMember({"unary-bin-packing", "equitable-partition", "three-partition", "independent-set", "clique"}));
    generate->add_option("source", gen_args.source, "Source problem document")->required();
    generate->add_option("--beta", gen_args.beta, "Scale for the independent-set and clique gadgets");
    generate->add_option("--dff", gen_args.dff, "Distance factor function, e.g. exponential:1/2");
    generate->add_option("--variant", gen_args.variant, "Equitable partition gadget: bipartite, instar or path");
    generate->add_flag("--waive", gen_args.waive, "Generate even when equivalence is not guaranteed");
    generate->add_option("-o,--output", gen_args.output, "Write the document here instead of stdout");
    generate->add_option("--certificate", gen_args.certificate_output,
                         "Solve the source problem and write its certificate assignment here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*solve) detail::solve(solve_args, out);
        else if (*check) detail::check(check_instance, check_assignment, out);
        else if (*classify) detail::classify(classify_instance, out);
        else detail::generate(gen_args, out);
    } catch (const OracleBudgetError& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetError;
    } catch (const DegenerateParameterError& e) {
        err << "error: " << e.what() << '\n';
        return kBudgetError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}

}  // namespace tdg::cli
