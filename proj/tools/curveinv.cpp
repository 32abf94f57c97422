// Command-line front end: dispatches one subcommand to the library and prints
// the resulting report in human or JSON form.  All arithmetic lives in the
// library; exit code 2 flags argument/parse errors, 3 domain errors.

#include <iostream>
#include <string>
#include <vector>

#include "curveinv/curveinv.hpp"
#include "curveinv/reports.hpp"

namespace {

constexpr const char* kUsage =
    "usage: curveinv <subcommand> [args] [--json]\n"
    "\n"
    "subcommands:\n"
    "  poly <polynomial>                Newton polygon, genus and gonality bounds\n"
    "                                   (e.g. \"x^3*y^2 - 1\")\n"
    "  dtk <k> <l>                      double twist knot J(k,l) invariants\n"
    "  optb <n>                         once-punctured torus bundle M_n invariants\n"
    "  fill <p/q> [--surface-degree D]  filling locus generators, normalization map,\n"
    "                                   degree/genus bounds (slope may be `p`, `p/q` or `inf`)\n"
    "  fib <kind> <k>                   trace polynomial f_k, g_k or h_k with its\n"
    "                                   closed-form check (kind is f, g or h)\n"
    "  spectral <gamma> <genus>         eigenvalue and injectivity-radius bounds\n";

long long parse_integer(const std::string& text, const std::string& what) {
    std::size_t idx = 0;
    long long v = 0;
    try {
        v = std::stoll(text, &idx);
    } catch (const std::exception&) {
        throw curveinv::ParseError("bad " + what + " '" + text + "'");
    }
    if (idx != text.size()) throw curveinv::ParseError("bad " + what + " '" + text + "'");
    return v;
}

struct Options {
    std::string subcommand;
    std::vector<std::string> args;
    bool json = false;
    long long surface_degree = 1;
};

Options parse_options(int argc, char** argv) {
    Options opt;
    std::vector<std::string> raw(argv + 1, argv + argc);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == "--json") {
            opt.json = true;
        } else if (raw[i] == "--surface-degree") {
            if (i + 1 >= raw.size())
                throw curveinv::ParseError("--surface-degree needs a value");
            opt.surface_degree = parse_integer(raw[++i], "surface degree");
        } else if (opt.subcommand.empty()) {
            opt.subcommand = raw[i];
        } else {
            opt.args.push_back(raw[i]);
        }
    }
    if (opt.subcommand.empty()) throw curveinv::ParseError("missing subcommand");
    return opt;
}

void require_args(const Options& opt, std::size_t count) {
    if (opt.args.size() != count)
        throw curveinv::ParseError("subcommand '" + opt.subcommand + "' expects " +
                                   std::to_string(count) + " argument(s), got " +
                                   std::to_string(opt.args.size()));
}

curveinv::InvariantReport run(const Options& opt) {
    using namespace curveinv;
    if (opt.subcommand == "poly") {
        require_args(opt, 1);
        return poly_report(LaurentPoly2::parse(opt.args[0]));
    }
    if (opt.subcommand == "dtk") {
        require_args(opt, 2);
        return dtk_invariants(make_dtk_params(parse_integer(opt.args[0], "twist parameter k"),
                                              parse_integer(opt.args[1], "twist parameter l")));
    }
    if (opt.subcommand == "optb") {
        require_args(opt, 1);
        return optb_invariants(make_optb_params(parse_integer(opt.args[0], "bundle index n")));
    }
    if (opt.subcommand == "fill") {
        require_args(opt, 1);
        return fill_report(parse_slope(opt.args[0]), opt.surface_degree);
    }
    if (opt.subcommand == "fib") {
        require_args(opt, 2);
        TraceKind kind;
        if (opt.args[0] == "f")
            kind = TraceKind::F;
        else if (opt.args[0] == "g")
            kind = TraceKind::G;
        else if (opt.args[0] == "h")
            kind = TraceKind::H;
        else
            throw ParseError("trace kind must be f, g or h, got '" + opt.args[0] + "'");
        return fib_report(kind, parse_integer(opt.args[1], "index"));
    }
    if (opt.subcommand == "spectral") {
        require_args(opt, 2);
        return spectral_report(parse_integer(opt.args[0], "gonality"),
                               parse_integer(opt.args[1], "genus"));
    }
    throw ParseError("unknown subcommand '" + opt.subcommand + "'");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc == 1) {
        std::cout << kUsage;
        return 2;
    }
    try {
        Options opt = parse_options(argc, argv);
        curveinv::InvariantReport report = run(opt);
        std::cout << (opt.json ? report.to_json_string() : report.to_text());
        return 0;
    } catch (const curveinv::ParseError& e) {
        std::cout << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cout << "error: " << e.what() << "\n";
        return 3;
    }
}
