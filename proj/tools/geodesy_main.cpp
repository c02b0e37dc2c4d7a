// geodesy: generate, check, draw and analyze geodetic graph families.
//
// Commands compose through pipes; every command reads one JSON document
// (file argument or stdin) and writes one document (stdout or --out).
// Exit codes: 0 success, 1 a checked property failed, 2 bad input or
// parameters. Set GEODESY_LOG=1 for progress diagnostics on stderr.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>

#include "geodesy/analysis.hpp"
#include "geodesy/json_io.hpp"
#include "geodesy/layout.hpp"
#include "geodesy/svg.hpp"

namespace {

constexpr const char* kVersion = "geodesy 1.0.0";

int log_level() {
    static const int level = [] {
        const char* env = std::getenv("GEODESY_LOG");
        return env ? std::atoi(env) : 0;
    }();
    return level;
}

void log_info(const std::string& message) {
    if (log_level() >= 1) std::cerr << "geodesy: " << message << "\n";
}

[[noreturn]] void fail(geodesy::ErrorCode code, const std::string& message) {
    throw geodesy::Error(code, message);
}

std::string read_input(const std::string& path) {
    if (path.empty() || path == "-") {
        std::ostringstream buffer;
        buffer << std::cin.rdbuf();
        return buffer.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(geodesy::ErrorCode::Io, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

geodesy::json parse_json(const std::string& text, const std::string& what) {
    try {
        return geodesy::json::parse(text);
    } catch (const geodesy::json::parse_error& e) {
        fail(geodesy::ErrorCode::Parse, "malformed JSON in " + what + ": " + e.what());
    }
}

// FNV-1a 64, rendered as hex; content fingerprint for run manifests.
std::string fingerprint(const std::string& content) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

struct ManifestSink {
    std::string path;                 // empty: disabled
    std::string command;
    geodesy::json parameters = geodesy::json::object();
    geodesy::json inputs = geodesy::json::object();
    geodesy::json outputs = geodesy::json::array();

    void input(const std::string& name, const std::string& content) {
        if (!path.empty()) inputs[name.empty() ? "<stdin>" : name] = fingerprint(content);
    }
    void output(const std::string& name) {
        if (!path.empty()) outputs.push_back(name.empty() ? "<stdout>" : name);
    }
    void write() const {
        if (path.empty()) return;
        const geodesy::json doc{{"command", command},
                                {"parameters", parameters},
                                {"inputs", inputs},
                                {"version", kVersion},
                                {"outputs", outputs}};
        std::ofstream out(path, std::ios::binary);
        if (!out) fail(geodesy::ErrorCode::Io, "cannot write manifest '" + path + "'");
        out << geodesy::dump_document(doc);
    }
};

void write_output(const std::string& out_path, const std::string& content,
                  ManifestSink& manifest) {
    if (out_path.empty() || out_path == "-") {
        std::cout << content;
        manifest.output("");
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) fail(geodesy::ErrorCode::Io, "cannot write '" + out_path + "'");
        out << content;
        manifest.output(out_path);
    }
    manifest.write();
}

// Bundle input for analyze/witness/export-svg: either a single document with
// "graph" and "drawing" members, or separate --graph/--drawing files.
std::pair<geodesy::Graph, geodesy::Drawing> load_bundle(const std::string& bundle_path,
                                                        const std::string& graph_path,
                                                        const std::string& drawing_path,
                                                        ManifestSink& manifest) {
    if (!graph_path.empty() || !drawing_path.empty()) {
        if (graph_path.empty() || drawing_path.empty())
            fail(geodesy::ErrorCode::Param, "--graph and --drawing must be given together");
        const std::string graph_text = read_input(graph_path);
        const std::string drawing_text = read_input(drawing_path);
        manifest.input(graph_path, graph_text);
        manifest.input(drawing_path, drawing_text);
        return {geodesy::graph_from_json(parse_json(graph_text, "graph document")),
                geodesy::drawing_from_json(parse_json(drawing_text, "drawing document"))};
    }
    const std::string text = read_input(bundle_path);
    manifest.input(bundle_path, text);
    return geodesy::bundle_from_json(parse_json(text, "graph+drawing bundle"));
}

void require_valid(const geodesy::Graph& g, const geodesy::Drawing& d) {
    const geodesy::ValidityReport report = geodesy::validate_drawing(g, d);
    if (!report.valid)
        fail(geodesy::ErrorCode::InvalidDrawing,
             "drawing fails validation with " + std::to_string(report.violations.size()) +
                 " violation(s)");
}

std::optional<std::vector<int>> parse_modulus(const std::string& text) {
    if (text.empty()) return std::nullopt;
    std::vector<int> coeffs;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        try {
            coeffs.push_back(std::stoi(item));
        } catch (const std::exception&) {
            fail(geodesy::ErrorCode::Param, "modulus coefficient '" + item + "' is not an integer");
        }
    }
    if (coeffs.empty()) fail(geodesy::ErrorCode::Param, "empty modulus");
    return coeffs;
}

int run(int argc, char** argv) {
    CLI::App app{"geodetic graph families, drawings and meet analysis"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string out_path, manifest_path;
    int threads = 0;
    long seed = 0; // reserved; no randomized behavior yet
    app.add_option("--threads", threads, "worker threads for the pairwise analysis (0 = all cores)")
        ->capture_default_str();
    app.add_option("--seed", seed, "reserved for future randomized features");

    const auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", out_path, "output file (default: stdout)");
        cmd->add_option("--manifest", manifest_path, "write a run manifest to this file");
        cmd->fallthrough(); // global flags may follow the subcommand
    };

    // gen-kst
    auto* gen_kst = app.add_subcommand("gen-kst", "complete graph with uniformly subdivided edges");
    int opt_s = 0, opt_t = 0;
    gen_kst->add_option("--s", opt_s, "branch vertex count (>= 2)")->required();
    gen_kst->add_option("--t", opt_t, "subdivisions per edge (>= 0)")->required();
    add_common(gen_kst);

    // gen-gk
    auto* gen_gk = app.add_subcommand("gen-gk", "affine-plane incidence graph of prime-power order");
    int opt_k = 0;
    std::string opt_modulus, plane_out;
    gen_gk->add_option("--k", opt_k, "plane order (prime power)")->required();
    gen_gk->add_option("--modulus", opt_modulus,
                       "field modulus coefficients, constant first, comma-separated");
    gen_gk->add_option("--plane-out", plane_out, "also dump the affine plane to this file");
    add_common(gen_gk);

    // check
    auto* check = app.add_subcommand("check", "verify the geodetic property and report the diameter");
    std::string check_input;
    check->add_option("input", check_input, "graph JSON (default: stdin)");
    add_common(check);

    // layout-thm2
    auto* layout = app.add_subcommand("layout-thm2", "convex layout with clustered subdivision vertices");
    std::string layout_input;
    layout->add_option("input", layout_input, "K(s,t) graph JSON, even t (default: stdin)");
    add_common(layout);

    // analyze
    auto* analyze = app.add_subcommand("analyze", "count meets over all unique shortest path pairs");
    std::string analyze_input, analyze_graph, analyze_drawing;
    bool require_philo = false;
    analyze->add_option("input", analyze_input, "graph+drawing bundle JSON (default: stdin)");
    analyze->add_option("--graph", analyze_graph, "graph JSON file");
    analyze->add_option("--drawing", analyze_drawing, "drawing JSON file");
    analyze->add_flag("--require-philogeodetic", require_philo,
                      "exit 1 unless every pair meets at most once");
    add_common(analyze);

    // witness
    auto* witness = app.add_subcommand("witness",
                                       "extract a pair of shortest paths meeting at least four times");
    std::string witness_input, witness_graph, witness_drawing;
    witness->add_option("input", witness_input, "graph+drawing bundle JSON (default: stdin)");
    witness->add_option("--graph", witness_graph, "graph JSON file");
    witness->add_option("--drawing", witness_drawing, "drawing JSON file");
    add_common(witness);

    // export-svg
    auto* export_cmd = app.add_subcommand("export-svg", "render a drawing");
    std::string export_input, export_graph, export_drawing, highlight_path, format = "svg";
    export_cmd->add_option("input", export_input, "graph+drawing bundle JSON (default: stdin)");
    export_cmd->add_option("--graph", export_graph, "graph JSON file");
    export_cmd->add_option("--drawing", export_drawing, "drawing JSON file");
    export_cmd->add_option("--highlight", highlight_path,
                           "witness JSON file; its two paths are stroked bold");
    export_cmd->add_option("--format", format, "svg (image) or json (canonical sidecar bundle)")
        ->check(CLI::IsMember({"svg", "json"}));
    add_common(export_cmd);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error[param]: " << e.what() << "\n";
        return 2;
    }

    ManifestSink manifest;
    manifest.path = manifest_path;

    if (gen_kst->parsed()) {
        manifest.command = "gen-kst";
        manifest.parameters = {{"s", opt_s}, {"t", opt_t}};
        const geodesy::Graph g = geodesy::subdivided_complete({opt_s, opt_t});
        log_info("generated K(" + std::to_string(opt_s) + "," + std::to_string(opt_t) + "): n=" +
                 std::to_string(g.n) + " m=" + std::to_string(g.edge_count()));
        write_output(out_path, geodesy::dump_document(geodesy::graph_to_json(g)), manifest);
        return 0;
    }

    if (gen_gk->parsed()) {
        manifest.command = "gen-gk";
        manifest.parameters = {{"k", opt_k}, {"modulus", opt_modulus}};
        const auto pm = geodesy::prime_power(opt_k);
        if (!pm)
            fail(geodesy::ErrorCode::Param,
                 "order " + std::to_string(opt_k) + " is not a prime power");
        const geodesy::FiniteField field =
            geodesy::FiniteField::make(pm->first, pm->second, parse_modulus(opt_modulus));
        const geodesy::AffinePlane plane = geodesy::affine_plane(field);
        geodesy::Graph g = geodesy::scapellato_graph(plane);
        if (g.meta) {
            g.meta->p = field.characteristic();
            g.meta->m = field.degree();
            g.meta->modulus = field.modulus();
        }
        log_info("generated G_" + std::to_string(opt_k) + ": n=" + std::to_string(g.n) +
                 " m=" + std::to_string(g.edge_count()));
        if (!plane_out.empty()) {
            std::ofstream out(plane_out, std::ios::binary);
            if (!out) fail(geodesy::ErrorCode::Io, "cannot write '" + plane_out + "'");
            out << geodesy::dump_document(geodesy::plane_to_json(plane));
            manifest.output(plane_out);
        }
        write_output(out_path, geodesy::dump_document(geodesy::graph_to_json(g)), manifest);
        return 0;
    }

    if (check->parsed()) {
        manifest.command = "check";
        const std::string text = read_input(check_input);
        manifest.input(check_input, text);
        const geodesy::Graph g =
            geodesy::graph_from_json(parse_json(text, "graph document"));
        const geodesy::GeodeticReport report = geodesy::is_geodetic(g);
        write_output(out_path, geodesy::dump_document(geodesy::geodetic_report_to_json(report)),
                     manifest);
        return report.is_geodetic ? 0 : 1;
    }

    if (layout->parsed()) {
        manifest.command = "layout-thm2";
        const std::string text = read_input(layout_input);
        manifest.input(layout_input, text);
        const geodesy::Graph g =
            geodesy::graph_from_json(parse_json(text, "graph document"));
        const geodesy::Drawing d = geodesy::clustered_convex_layout(g);
        write_output(out_path, geodesy::dump_document(geodesy::bundle_to_json(g, d)), manifest);
        return 0;
    }

    if (analyze->parsed()) {
        manifest.command = "analyze";
        manifest.parameters = {{"require_philogeodetic", require_philo}, {"threads", threads}};
        const auto [g, d] = load_bundle(analyze_input, analyze_graph, analyze_drawing, manifest);
        require_valid(g, d);
        const geodesy::ShortestPathTable table = geodesy::all_pairs_shortest(g);
        const int workers =
            threads > 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
        log_info("analyzing " + std::to_string(g.n) + "-vertex drawing with " +
                 std::to_string(workers) + " thread(s)");
        const geodesy::PhilogeodeticReport report =
            geodesy::certify_philogeodetic(g, d, table, workers);
        write_output(out_path, geodesy::dump_document(geodesy::philo_report_to_json(report)),
                     manifest);
        return require_philo && !report.philogeodetic ? 1 : 0;
    }

    if (witness->parsed()) {
        manifest.command = "witness";
        const auto [g, d] = load_bundle(witness_input, witness_graph, witness_drawing, manifest);
        require_valid(g, d);
        const auto pair = geodesy::find_witness_pair(g, d);
        const geodesy::json doc =
            pair ? geodesy::witness_to_json(*pair) : geodesy::json{{"found", false}};
        write_output(out_path, geodesy::dump_document(doc), manifest);
        return 0;
    }

    if (export_cmd->parsed()) {
        manifest.command = "export-svg";
        manifest.parameters = {{"format", format}};
        const auto [g, d] = load_bundle(export_input, export_graph, export_drawing, manifest);
        require_valid(g, d);
        std::optional<std::pair<geodesy::Path, geodesy::Path>> highlight;
        if (!highlight_path.empty()) {
            const std::string text = read_input(highlight_path);
            manifest.input(highlight_path, text);
            const geodesy::json doc = parse_json(text, "highlight document");
            if (!doc.contains("paths") || !doc.at("paths").is_array() ||
                doc.at("paths").size() != 2)
                fail(geodesy::ErrorCode::Param, "highlight document has no 'paths' pair");
            geodesy::Path a, b;
            for (const auto& v : doc.at("paths")[0]) a.vertices.push_back(v.get<int>());
            for (const auto& v : doc.at("paths")[1]) b.vertices.push_back(v.get<int>());
            highlight = std::make_pair(std::move(a), std::move(b));
        }
        if (format == "json") {
            geodesy::json doc = geodesy::bundle_to_json(g, d);
            if (highlight)
                doc["highlight"] = {geodesy::json(highlight->first.vertices),
                                    geodesy::json(highlight->second.vertices)};
            write_output(out_path, geodesy::dump_document(doc), manifest);
        } else {
            write_output(out_path, geodesy::export_svg(g, d, highlight), manifest);
        }
        return 0;
    }

    return 2; // unreachable: require_subcommand
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const geodesy::Error& e) {
        std::cerr << "error[" << geodesy::error_code_name(e.code()) << "]: " << e.what() << "\n";
        switch (e.code()) {
            case geodesy::ErrorCode::NotGeodetic:
                return 1;
            case geodesy::ErrorCode::Internal:
                return 1;
            default:
                return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error[internal]: " << e.what() << "\n";
        return 1;
    }
}
