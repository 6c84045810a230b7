#include "dentedhex/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dentedhex/determinant.hpp"
#include "dentedhex/error.hpp"
#include "dentedhex/lgv.hpp"
#include "dentedhex/paths.hpp"
#include "dentedhex/poly_io.hpp"
#include "dentedhex/svg.hpp"
#include "dentedhex/tilings.hpp"
#include "dentedhex/verify.hpp"

namespace dentedhex {

namespace {

std::vector<std::int32_t> parse_list(const std::string& text, const char* flag) {
    std::vector<std::int32_t> out;
    if (text == "-") return out;
    std::size_t begin = 0;
    while (true) {
        const std::size_t comma = text.find(',', begin);
        const std::string item = text.substr(begin, comma == std::string::npos ? std::string::npos : comma - begin);
        std::int32_t value = 0;
        const auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (item.empty() || ec != std::errc() || ptr != item.data() + item.size()) {
            throw InvalidArgument(std::string("malformed list for ") + flag + ": '" + text + "'");
        }
        out.push_back(value);
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    return out;
}

std::size_t max_cells_from_env() {
    const char* raw = std::getenv("DENTEDHEX_MAX_CELLS");
    if (raw == nullptr || *raw == '\0') return kDefaultMaxTilingCells;
    std::size_t value = 0;
    const std::string text(raw);
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size()) {
        throw InvalidArgument("DENTEDHEX_MAX_CELLS must be a nonnegative integer");
    }
    return value;
}

void print_poly(std::ostream& out, const LaurentPoly& p, bool json) { out << (json ? to_json(p) : format(p)) << '\n'; }

struct GfArgs {
    std::int32_t a = 0, b = 0, c = 0, d = 0;
    std::string method = "closed";
    bool json = false;
};

int cmd_gf(const GfArgs& args, std::ostream& out) {
    auto enumerate = [&] {
        LaurentPoly sum;
        for (const auto& wp : enumerate_paths(args.a, args.b, args.c, args.d)) sum += wp.weight;
        return sum;
    };
    if (args.method == "all") {
        const LaurentPoly closed = gf_closed(args.a, args.b, args.c, args.d);
        const bool agree = closed == gf_recurrence(args.a, args.b, args.c, args.d) && closed == enumerate();
        print_poly(out, closed, args.json);
        out << (agree ? "MATCH" : "MISMATCH") << '\n';
        return agree ? kExitOk : kExitMismatch;
    }
    LaurentPoly result;
    if (args.method == "closed") {
        result = gf_closed(args.a, args.b, args.c, args.d);
    } else if (args.method == "recurrence") {
        result = gf_recurrence(args.a, args.b, args.c, args.d);
    } else {
        result = enumerate();
    }
    print_poly(out, result, args.json);
    return kExitOk;
}

struct ConfigArgs {
    std::string starts;
    std::string ends;
    std::int32_t k = 0;
    std::string kernel = "cofactor";
    bool json = false;
};

EndpointConfig config_from(const ConfigArgs& args) {
    return EndpointConfig(parse_list(args.starts, "--starts"), parse_list(args.ends, "--ends"));
}

int cmd_det(const ConfigArgs& args, std::ostream& out) {
    if (args.k < 0) throw InvalidArgument("--k must be nonnegative");
    const PolyMatrix m = gf_matrix(config_from(args), args.k);
    if (args.kernel == "both") {
        const LaurentPoly cofactor = determinant(m);
        const bool agree = cofactor == determinant_fraction_free(m);
        print_poly(out, cofactor, args.json);
        out << (agree ? "MATCH" : "MISMATCH") << '\n';
        return agree ? kExitOk : kExitMismatch;
    }
    print_poly(out, args.kernel == "cofactor" ? determinant(m) : determinant_fraction_free(m), args.json);
    return kExitOk;
}

int cmd_ratio(const ConfigArgs& args, std::ostream& out) {
    if (args.k < 0) throw InvalidArgument("--k must be nonnegative");
    const EndpointConfig cfg = config_from(args);
    if (!cfg.is_aligned()) throw InvalidArgument("ratio requires starts[i] <= ends[i]");
    const RatioCheck check = ratio_identity_check(cfg, args.k);
    out << cfg.to_string() << " k=" << args.k << '\n';
    if (check.factors.empty()) out << "empty product\n";
    for (std::size_t l = 0; l < check.factors.size(); ++l) {
        const RatioFactor& f = check.factors[l];
        out << "factor " << l + 1 << " (a=" << f.start << ", c=" << f.end << "): (" << format(f.plain.numer) << ") / ("
            << format(f.plain.denom) << ")\n";
        out << "  pochhammer: " << f.pochhammer.to_string() << '\n';
    }
    out << (check.holds ? "IDENTITY HOLDS" : "IDENTITY FAILS") << '\n';
    return check.holds ? kExitOk : kExitFailed;
}

struct TilingsArgs {
    std::string region;
    std::string mode = "det";
    std::string render;
    std::string out_path;
    std::int32_t tiling_index = 0;
};

void write_file(const std::string& path, const std::string& content) {
    std::ofstream file(path, std::ios::binary);
    if (!file) throw InvalidArgument("cannot open '" + path + "' for writing");
    file << content;
    if (!file) throw InvalidArgument("failed writing '" + path + "'");
}

int cmd_tilings(const TilingsArgs& args, std::ostream& out) {
    const Region r = Region::parse(args.region);
    const std::size_t max_cells = max_cells_from_env();
    const bool run_det = args.mode == "det" || args.mode == "both";
    const bool run_enum = args.mode == "enumerate" || args.mode == "both";

    LaurentPoly det_value, enum_value;
    if (run_det) det_value = nlp_gf(region_endpoints(r));
    if (run_enum) enum_value = gf_tilings(r, max_cells);

    if (args.mode == "both") {
        out << "det: " << format(det_value) << '\n';
        out << "enumerate: " << format(enum_value) << '\n';
    } else {
        out << format(run_det ? det_value : enum_value) << '\n';
    }
    if (run_enum) out << "tilings: " << enum_value.evaluate(1, 1, 1) << '\n';

    if (!args.render.empty()) {
        const std::optional<Tiling> drawn = run_enum ? first_tiling(r, max_cells) : std::nullopt;
        write_file(args.render, render_svg(r, drawn));
    }
    if (args.mode == "both") {
        const bool match = det_value == enum_value;
        out << (match ? "MATCH" : "MISMATCH") << '\n';
        return match ? kExitOk : kExitMismatch;
    }
    return kExitOk;
}

int cmd_render(const TilingsArgs& args, std::ostream& out) {
    const Region r = Region::parse(args.region);
    std::optional<Tiling> drawn;
    if (args.tiling_index >= 0) {
        std::int32_t seen = 0;
        for_each_tiling(
            r,
            [&](const Tiling& t) {
                if (seen++ == args.tiling_index) drawn = t;
            },
            max_cells_from_env());
        if (!drawn && seen > 0) {
            throw InvalidArgument("--tiling " + std::to_string(args.tiling_index) + " out of range (region has " +
                                  std::to_string(seen) + " tilings)");
        }
    }
    write_file(args.out_path, render_svg(r, drawn));
    out << "wrote " << args.out_path << '\n';
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    std::int32_t max = 4;
    std::uint64_t seed = 1;
};

int cmd_verify(const VerifyArgs& args, std::ostream& out) {
    std::vector<std::string> suites;
    if (args.suite == "all") {
        suites = verify_suite_names();
    } else {
        suites.push_back(args.suite);
    }
    bool all_passed = true;
    for (const auto& name : suites) {
        const SuiteReport report = run_verify_suite(name, args.max, args.seed);
        out << "suite " << report.suite << ": " << report.cases << " cases, " << report.failures << " failures\n";
        if (!report.passed()) {
            out << "  counterexample: " << report.counterexample << '\n';
            all_passed = false;
        }
    }
    out << (all_passed ? "ALL PASS" : "FAIL") << '\n';
    return all_passed ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Weighted lozenge tilings of dented half hexagons and their lattice-path determinants", "dentedhex"};
    app.require_subcommand(1);

    GfArgs gf;
    auto* gf_cmd = app.add_subcommand("gf", "generating function of paths (a,b) -> (c,d)");
    gf_cmd->add_option("--a", gf.a)->required();
    gf_cmd->add_option("--b", gf.b)->required();
    gf_cmd->add_option("--c", gf.c)->required();
    gf_cmd->add_option("--d", gf.d)->required();
    gf_cmd->add_option("--method", gf.method)->check(CLI::IsMember({"closed", "recurrence", "enumerate", "all"}));
    gf_cmd->add_flag("--json", gf.json);

    GfArgs diag;
    auto* diag_cmd = app.add_subcommand("gf-diag", "generating function of paths (a,a) -> (c,0)");
    diag_cmd->add_option("--a", diag.a)->required();
    diag_cmd->add_option("--c", diag.c)->required();
    diag_cmd->add_flag("--json", diag.json);

    ConfigArgs det;
    auto* det_cmd = app.add_subcommand("det", "determinant of the shifted path matrix");
    det_cmd->add_option("--starts", det.starts)->required();
    det_cmd->add_option("--ends", det.ends)->required();
    det_cmd->add_option("--k", det.k);
    det_cmd->add_option("--kernel", det.kernel)->check(CLI::IsMember({"cofactor", "fraction-free", "both"}));
    det_cmd->add_flag("--json", det.json);

    ConfigArgs ratio;
    auto* ratio_cmd = app.add_subcommand("ratio", "check the width-shift ratio identity");
    ratio_cmd->add_option("--starts", ratio.starts)->required();
    ratio_cmd->add_option("--ends", ratio.ends)->required();
    ratio_cmd->add_option("--k", ratio.k)->required();

    TilingsArgs tilings;
    auto* tilings_cmd = app.add_subcommand("tilings", "generating function of tilings of a dented region");
    tilings_cmd->add_option("--region", tilings.region)->required();
    tilings_cmd->add_option("--mode", tilings.mode)->check(CLI::IsMember({"det", "enumerate", "both"}));
    tilings_cmd->add_option("--render", tilings.render, "write an SVG drawing to this path");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "run property suites");
    verify_cmd->add_option("--suite", verify.suite)
        ->check(CLI::IsMember({"ring", "paths", "ratio", "lgv", "tilings", "all"}));
    verify_cmd->add_option("--max", verify.max);
    verify_cmd->add_option("--seed", verify.seed);

    TilingsArgs render;
    auto* render_cmd = app.add_subcommand("render", "draw a region and one of its tilings as SVG");
    render_cmd->add_option("--region", render.region)->required();
    render_cmd->add_option("--out", render.out_path)->required();
    render_cmd->add_option("--tiling", render.tiling_index, "index of the tiling to draw, -1 for none");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (gf_cmd->parsed()) return cmd_gf(gf, out);
        if (diag_cmd->parsed()) {
            print_poly(out, gf_diag(diag.a, diag.c), diag.json);
            return kExitOk;
        }
        if (det_cmd->parsed()) return cmd_det(det, out);
        if (ratio_cmd->parsed()) return cmd_ratio(ratio, out);
        if (tilings_cmd->parsed()) return cmd_tilings(tilings, out);
        if (verify_cmd->parsed()) return cmd_verify(verify, out);
        if (render_cmd->parsed()) return cmd_render(render, out);
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << '\n';
        return kExitTooLarge;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace dentedhex
