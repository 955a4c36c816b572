// Command line surface: diagrams, block reports, K/D matrices, characters,
// the recursion oracle and the self-contained verification suite.

#include <CLI11.hpp>

#include <iostream>

#include "ospchar/report.hpp"
#include "ospchar/verify.hpp"

using namespace ospchar;

namespace {

AlgebraDescriptor parse_algebra(const std::string& s) {
    // gl:m:n or osp:M:N
    auto fail = [&] { throw ParseError("algebra must be gl:m:n or osp:M:N, got '" + s + "'"); };
    size_t c1 = s.find(':');
    if (c1 == std::string::npos) fail();
    size_t c2 = s.find(':', c1 + 1);
    if (c2 == std::string::npos) fail();
    std::string kind = s.substr(0, c1);
    int a = 0, b = 0;
    try {
        a = std::stoi(s.substr(c1 + 1, c2 - c1 - 1));
        b = std::stoi(s.substr(c2 + 1));
    } catch (...) {
        fail();
    }
    if (kind == "gl") return make_gl(a, b);
    if (kind == "osp") return make_osp(a, b);
    fail();
    return {};
}

struct CommonArgs {
    std::string algebra;
    std::string weight;
    bool weight_is_lambda = false;
    std::string format = "text";
    int max_position = 6;
    unsigned seed = 1;
};

ExtendedWeight resolve_weight(const AlgebraDescriptor& g, const CommonArgs& a) {
    ExtendedWeight w = parse_weight(a.weight);
    if (a.weight_is_lambda) w = add_weights(w, rho(g), +1);
    if (!is_dominant(g, w))
        throw NotDominant("weight " + render_weight(w) + " (as lambda+rho) is not dominant for " +
                          g.name());
    return w;
}

void add_common(CLI::App* cmd, CommonArgs& a, bool with_weight = true) {
    cmd->add_option("--algebra", a.algebra, "gl:m:n or osp:M:N")->required();
    if (with_weight) {
        cmd->add_option("--weight", a.weight, "\"a1,..|b1,..\" (lambda+rho by default)")->required();
        cmd->add_flag("--weight-is-lambda", a.weight_is_lambda, "interpret --weight as lambda");
    }
    cmd->add_option("--format", a.format, "text | json | dot");
    cmd->add_option("--max-position", a.max_position, "block horizon (unused by most commands)");
    cmd->add_option("--seed", a.seed, "seed for randomized checks");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiplicity matrices and characters for gl(m,n) and osp(m,2n)"};
    app.require_subcommand(1);

    CommonArgs diag_a, block_a, km_a, dm_a, ch_a, dot_a, or_a, ver_a;
    std::string ch_mode = "expr";
    std::string or_lambda, or_mu;

    CLI::App* c_diag = app.add_subcommand("diagram", "weight diagram of a dominant weight");
    add_common(c_diag, diag_a);
    CLI::App* c_block = app.add_subcommand("block", "block report: members, edges, K, D");
    add_common(c_block, block_a);
    CLI::App* c_km = app.add_subcommand("kmatrix", "K matrix of the block");
    add_common(c_km, km_a);
    CLI::App* c_dm = app.add_subcommand("dmatrix", "D = K^{-1} of the block");
    add_common(c_dm, dm_a);
    CLI::App* c_ch = app.add_subcommand("character", "Ch(L_lambda) as Euler characteristics");
    add_common(c_ch, ch_a);
    c_ch->add_option("--mode", ch_mode, "expr | laurent");
    CLI::App* c_dot = app.add_subcommand("export-dot", "move graph of the block in DOT form");
    add_common(c_dot, dot_a);
    CLI::App* c_or = app.add_subcommand("oracle", "K^{lambda,mu}_{G,P^1}(z) by the recursion");
    c_or->add_option("--algebra", or_a.algebra, "osp:M:N (a reduced family)")->required();
    c_or->add_option("--lambda", or_lambda, "lambda+rho")->required();
    c_or->add_option("--mu", or_mu, "mu+rho")->required();
    CLI::App* c_ver = app.add_subcommand("verify", "run the full invariant and differential suite");
    c_ver->add_option("--seed", ver_a.seed, "seed for randomized checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2; // usage errors
    }

    try {
        if (c_diag->parsed()) {
            AlgebraDescriptor g = parse_algebra(diag_a.algebra);
            WeightDiagram f = diagram_of(g, resolve_weight(g, diag_a));
            if (diag_a.format == "json") std::cout << diagram_json(f).dump(2) << "\n";
            else std::cout << render_diagram(f) << "\n";
            return 0;
        }
        if (c_block->parsed() || c_km->parsed() || c_dm->parsed() || c_dot->parsed()) {
            CommonArgs& a = c_block->parsed() ? block_a : c_km->parsed() ? km_a
                            : c_dm->parsed()  ? dm_a
                                              : dot_a;
            AlgebraDescriptor g = parse_algebra(a.algebra);
            BlockIndex b = build_block(g, resolve_weight(g, a));
            if (c_dot->parsed() || a.format == "dot") {
                std::cout << block_dot(b);
                return 0;
            }
            if (c_block->parsed()) {
                if (a.format == "json") std::cout << block_report_json(b).dump(2) << "\n";
                else std::cout << block_report_text(b);
                return 0;
            }
            IntMatrix M = c_km->parsed() ? k_matrix(b) : d_matrix(b);
            if (a.format == "json") std::cout << matrix_json(M).dump() << "\n";
            else std::cout << matrix_text(M);
            return 0;
        }
        if (c_ch->parsed()) {
            AlgebraDescriptor g = parse_algebra(ch_a.algebra);
            ExtendedWeight w = resolve_weight(g, ch_a);
            auto ch = simple_character(g, w);
            if (ch_mode == "laurent") {
                CharContext ctx;
                LaurentPoly full = ctx.expand_full(expand_character(ctx, g, ch));
                std::cout << full.str() << "\n";
            } else {
                std::cout << ch.expr.str() << "\n";
            }
            return 0;
        }
        if (c_or->parsed()) {
            AlgebraDescriptor g = parse_algebra(or_a.algebra);
            RecursionState st;
            ZPoly p = k_poly_recursive(st, g, parse_weight(or_lambda), parse_weight(or_mu));
            std::cout << p.str() << "\n";
            return 0;
        }
        if (c_ver->parsed()) {
            return verify::run_all(std::cout, ver_a.seed) ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
