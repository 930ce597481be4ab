#include "wormhole/cli.hpp"

#include "wormhole/errors.hpp"
#include "wormhole/json_io.hpp"
#include "wormhole/oracle.hpp"
#include "wormhole/render.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace wormhole::cli {

namespace {

// Relative output paths honor WORMHOLE_OUT_DIR when it is set.
std::filesystem::path resolve_out(const std::string& path) {
    std::filesystem::path p(path);
    if (p.is_absolute()) return p;
    if (const char* dir = std::getenv("WORMHOLE_OUT_DIR")) return std::filesystem::path(dir) / p;
    return p;
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

struct ScanOptions {
    std::int64_t max_m = 1000;
    int jobs = 1;
    std::string out_file;
};

void run_scan(const ScanOptions& opt, std::ostream& out) {
    std::ofstream file;
    std::ostream* target = &out;
    if (!opt.out_file.empty()) {
        auto path = resolve_out(opt.out_file);
        file.open(path);
        if (!file) throw InvalidInput("cannot open output file " + path.string());
        target = &file;
    }
    oracle::scan_wormholes(opt.max_m, opt.jobs,
                           [&](const oracle::ScanRecord& rec) { *target << rec.jsonl() << "\n"; });
}

} // namespace

int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact combinatorics of Hirzebruch-Jung fractions, triangulated polygons "
                 "and wormhole singularities"};
    app.require_subcommand(1);

    // hj eval|expand|dual
    auto* hj = app.add_subcommand("hj", "continued fraction arithmetic");
    hj->require_subcommand(1);
    std::string hj_chain_text, hj_value_text;
    auto* hj_eval = hj->add_subcommand("eval", "evaluate a chain exactly");
    hj_eval->add_option("chain", hj_chain_text, "comma-separated entries")->required();
    auto* hj_expand = hj->add_subcommand("expand", "expand a rational > 1");
    hj_expand->add_option("value", hj_value_text, "rational as m/q")->required();
    auto* hj_dual = hj->add_subcommand("dual", "dual chain via the dot diagram");
    hj_dual->add_option("chain", hj_chain_text, "comma-separated entries >= 2")->required();

    std::string wchain_text;
    auto* wchain = app.add_subcommand("wchain", "recognize a Wahl chain");
    wchain->add_option("chain", wchain_text, "comma-separated entries >= 2")->required();

    std::string pres_m, pres_q;
    auto* pres = app.add_subcommand("pres", "extremal P-resolution report for 1/m(1,q)");
    pres->add_option("m", pres_m)->required();
    pres->add_option("q", pres_q)->required();

    std::string decomp_text;
    auto* decomp = app.add_subcommand("decomp", "WW-decompositions of a sequence");
    decomp->add_option("sequence", decomp_text, "comma-separated entries >= 2")->required();

    std::string reduce_text;
    auto* reduce = app.add_subcommand("reduce", "HTU reduction of a wormhole sequence");
    reduce->add_option("sequence", reduce_text, "comma-separated entries >= 2")->required();

    int classify_n = 0;
    long long classify_t = -1;
    auto* classify = app.add_subcommand("classify", "parametric families with n weights");
    classify->add_option("--weights", classify_n, "number of weights n >= 2")->required();
    classify->add_option("--instantiate", classify_t, "evaluate every family at parameter t");

    ScanOptions scan_opt;
    auto* scan = app.add_subcommand("scan", "scan coprime (m,q) and stream JSONL records");
    scan->add_option("--max-m", scan_opt.max_m, "scan bound, default 1000");
    scan->add_option("--jobs", scan_opt.jobs, "worker count, default 1");
    scan->add_option("--out", scan_opt.out_file, "output file (JSONL)");

    std::int64_t verify_max = 1000;
    int verify_jobs = 1;
    auto* verify = app.add_subcommand("verify", "check the two-resolution bound exhaustively");
    verify->add_option("--max-m", verify_max, "scan bound, default 1000");
    verify->add_option("--jobs", verify_jobs, "worker count, default 1");

    std::string render_chain, render_format = "svg", render_what = "triangulation", render_out;
    auto* render = app.add_subcommand("render", "draw a triangulation or coherent graph");
    render->add_option("--chain", render_chain, "extended chain \"b1,...,bs|b0\"")->required();
    render->add_option("--format", render_format, "svg or ascii");
    render->add_option("--what", render_what, "triangulation or coherent-graph");
    render->add_option("--out", render_out, "output file; stdout when omitted");

    try {
        // CLI11 consumes the argument vector back to front.
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));

        if (*hj_eval) {
            emit(out, Json{{"value", eval_chain(parse_chain(hj_chain_text)).str()}});
        } else if (*hj_expand) {
            emit(out, Json{{"chain", to_json(expand_rational(parse_rational(hj_value_text)))}});
        } else if (*hj_dual) {
            emit(out, Json{{"dual", to_json(dual_chain(parse_chain(hj_chain_text)))}});
        } else if (*wchain) {
            auto na = recognize_w_chain(parse_chain(wchain_text));
            Json j{{"is_w_chain", na.has_value()}};
            if (na) {
                j["n"] = na->first.str();
                j["a"] = na->second.str();
            }
            emit(out, j);
        } else if (*pres) {
            BigInt m(pres_m), q(pres_q);
            emit(out, to_json(p_resolution_report(m, q)));
        } else if (*decomp) {
            Chain seq = parse_chain(decomp_text);
            Json decs = Json::array();
            for (const auto& d : ww_decompositions(seq)) decs.push_back(to_json(d));
            auto idx = ww_index(seq);
            Json j{{"sequence", to_json(seq)}, {"count", decs.size()}, {"decompositions", decs}};
            j["ww_index"] = idx ? Json(*idx) : Json(nullptr);
            emit(out, j);
        } else if (*reduce) {
            emit(out, to_json(htu_reduce(parse_chain(reduce_text))));
        } else if (*classify) {
            Json fams = Json::array();
            for (const auto& base : classify_families(classify_n)) {
                if (classify_t >= 0) {
                    std::vector<long long> params(base.family.param_count, classify_t);
                    fams.push_back(to_json(instantiate_pair(base.family, params)));
                } else {
                    fams.push_back(to_json(base));
                }
            }
            emit(out, Json{{"n", classify_n}, {"families", fams}});
        } else if (*scan) {
            run_scan(scan_opt, out);
        } else if (*verify) {
            auto rep = oracle::verify_theorem_43(verify_max, verify_jobs);
            Json hist = Json::object();
            for (auto [k, v] : rep.count_histogram) hist[std::to_string(k)] = v;
            Json viol = Json::array();
            for (auto [m, q] : rep.violations) viol.push_back(Json::array({m, q}));
            emit(out, Json{{"max_m", rep.m_max},
                           {"max_count", rep.max_count},
                           {"violations", viol},
                           {"count_histogram", hist},
                           {"seconds", rep.seconds}});
            if (!rep.violations.empty()) return 2;
        } else if (*render) {
            ExtZeroChain chain = parse_extended(render_chain);
            FramedTriangulation ft = from_extended_chain(chain);
            std::string drawing;
            if (render_what == "triangulation")
                drawing = render_format == "ascii" ? render_triangulation_ascii(ft)
                                                   : render_triangulation_svg(ft);
            else if (render_what == "coherent-graph")
                drawing = render_format == "ascii" ? render_coherent_graph_ascii(build_coherent_graph(ft))
                                                   : render_coherent_graph_svg(build_coherent_graph(ft));
            else
                throw InvalidInput("render: --what must be triangulation or coherent-graph");
            if (render_format != "ascii" && render_format != "svg")
                throw InvalidInput("render: --format must be svg or ascii");
            if (render_out.empty()) {
                out << drawing;
            } else {
                auto path = resolve_out(render_out);
                std::ofstream file(path);
                if (!file) throw InvalidInput("cannot open output file " + path.string());
                file << drawing;
                emit(out, Json{{"written", path.string()}});
            }
        }
        return 0;
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help and friends
            out << app.help();
            return 0;
        }
        err << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const InvariantFailure& e) {
        err << Json{{"error", e.what()}, {"kind", "invariant"}}.dump() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << Json{{"error", e.what()}}.dump() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << Json{{"error", e.what()}, {"kind", "internal"}}.dump() << "\n";
        return 2;
    }
}

} // namespace wormhole::cli
