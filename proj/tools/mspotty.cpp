// Command-line front end: parse ring specs and generator-matrix files, run
// enumeration / dual / transform / verification pipelines, and print the
// resulting tables and polynomials as text or JSON.
//
// Exit status: 0 on success (and on verify PASS), 1 on verify FAIL,
// 2 on usage errors (bad grammar, unreadable input, size limits).

#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "mspotty/io_json.hpp"
#include "mspotty/mspotty.hpp"

namespace {

using namespace mspotty;

struct Options {
    std::string ring_spec;
    std::string input;
    std::size_t b = 0;
    std::size_t t = 0;  // 0 = keep the file's t
    std::size_t l = 0;
    int k = -1, j = -1;
    std::string format = "text";
    std::size_t max_sweep = kDefaultMaxSweep;
};

bool json_output(const Options& o) { return o.format == "json"; }

void emit(const Options& o, const std::string& command, const json& params, const json& result,
          const std::string& text) {
    if (json_output(o)) {
        json out;
        out["command"] = command;
        out["params"] = params;
        out["result"] = result;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << text;
    }
}

struct LoadedCode {
    MatrixFile mf;
    Code code;
};

LoadedCode load_code(const Options& o) {
    if (o.input.empty()) throw Error("this command needs --input FILE");
    std::ifstream in(o.input);
    if (!in) throw Error("cannot open '" + o.input + "'");
    // A body starting with '{' is the JSON variant of the matrix format.
    MatrixFile mf;
    char first = '\0';
    in >> std::ws;
    first = static_cast<char>(in.peek());
    if (first == '{') {
        mf = read_matrix_json(in);
    } else {
        mf = read_matrix_text(in);
    }
    if (!o.ring_spec.empty()) mf.ring_spec = o.ring_spec;
    if (o.t != 0) mf.layout.t = o.t;  // the enumerator depends on t, the code does not
    mf.layout.validate();
    const FiniteRing ring = build(mf.ring_spec, kDefaultMaxOrder);
    LoadedCode lc;
    lc.code = span(ring, mf.layout, mf.rows, o.max_sweep);
    lc.mf = std::move(mf);
    return lc;
}

json layout_params(const LoadedCode& lc) {
    json params;
    params["ring"] = lc.code.ring.name();
    params["n"] = lc.mf.layout.n;
    params["b"] = lc.mf.layout.b;
    params["t"] = lc.mf.layout.t;
    return params;
}

std::string layout_text(const LoadedCode& lc) {
    return "ring: " + lc.code.ring.name() + "  n=" + std::to_string(lc.mf.layout.n) +
           " b=" + std::to_string(lc.mf.layout.b) + " t=" + std::to_string(lc.mf.layout.t) + "\n";
}

int cmd_ring_info(const Options& o) {
    if (o.ring_spec.empty()) throw Error("ring-info needs --ring SPEC");
    const FiniteRing ring = build(o.ring_spec, kDefaultMaxOrder);
    const bool generating = verify_generating_character(ring);
    const std::size_t unit_count = units(ring).size();

    json params, result;
    params["ring"] = ring.name();
    result["order"] = ring.order;
    result["char_modulus"] = ring.char_modulus;
    result["unit_count"] = unit_count;
    result["generating_character"] = generating;

    std::string text = "ring: " + ring.name() + "\n";
    text += "order: " + std::to_string(ring.order) + "\n";
    text += "character modulus: " + std::to_string(ring.char_modulus) + "\n";
    text += "units: " + std::to_string(unit_count) + "\n";
    text += std::string("generating character: ") + (generating ? "yes" : "no") + "\n";
    emit(o, "ring-info", params, result, text);
    return 0;
}

int cmd_enumerate(const Options& o) {
    const LoadedCode lc = load_code(o);
    const DistributionTable dist = distribution(lc.code);
    const Poly w = enumerator(dist);

    json result;
    result["card"] = std::to_string(lc.code.size());
    result["distribution"] = distribution_json(dist);
    result["enumerator"] = poly_json(w);

    std::string text = layout_text(lc);
    text += "|C| = " + std::to_string(lc.code.size()) + "\n";
    text += table_text(dist);
    text += "W(z) = " + w.str() + "\n";
    emit(o, "enumerate", layout_params(lc), result, text);
    return 0;
}

int cmd_dual(const Options& o) {
    const LoadedCode lc = load_code(o);
    const Code dual_code = dual(lc.code, o.max_sweep);
    const Poly w = enumerator(distribution(dual_code));

    json result;
    result["card_dual"] = std::to_string(dual_code.size());
    result["dual_enumerator"] = poly_json(w);

    std::string text = layout_text(lc);
    text += "|C_dual| = " + std::to_string(dual_code.size()) + "\n";
    text += "W_dual(z) = " + w.str() + "\n";
    emit(o, "dual", layout_params(lc), result, text);
    return 0;
}

int cmd_transform(const Options& o) {
    const LoadedCode lc = load_code(o);
    const VTable vt = v_table(lc.code.ring.order, lc.code.layout.b, lc.code.layout.t);
    const Poly w = transform(distribution(lc.code), Int(lc.code.size()), vt);

    json result;
    result["card"] = std::to_string(lc.code.size());
    result["dual_enumerator"] = poly_json(w);

    std::string text = layout_text(lc);
    text += "W_dual(z) = " + w.str() + "\n";
    emit(o, "transform", layout_params(lc), result, text);
    return 0;
}

int cmd_verify(const Options& o) {
    const LoadedCode lc = load_code(o);
    const IdentityReport report = verify_identity(lc.code, o.max_sweep);

    json result;
    result["card"] = report.card_code.str();
    result["card_dual"] = report.card_dual.str();
    result["enumerator"] = poly_json(report.code_enumerator);
    result["via_transform"] = poly_json(report.via_transform);
    result["via_dual"] = poly_json(report.via_dual);
    result["verdict"] = report.pass ? "PASS" : "FAIL";

    std::string text = layout_text(lc);
    text += "|C| = " + report.card_code.str() + "\n";
    text += "|C_dual| = " + report.card_dual.str() + "\n";
    text += "W(z) = " + report.code_enumerator.str() + "\n";
    text += "W_dual via transform:   " + report.via_transform.str() + "\n";
    text += "W_dual via enumeration: " + report.via_dual.str() + "\n";
    text += report.pass ? "PASS\n" : "FAIL\n";
    emit(o, "verify", layout_params(lc), result, text);
    return report.pass ? 0 : 1;
}

int cmd_vtable(const Options& o) {
    if (o.l < 2) throw Error("vtable needs --l L (ring order, >= 2)");
    if (o.b < 1) throw Error("vtable needs --b B");
    const std::size_t t = (o.t == 0) ? 1 : o.t;

    json params;
    params["l"] = o.l;
    params["b"] = o.b;
    params["t"] = t;

    if (o.k >= 0 || o.j >= 0) {
        if (o.k < 0 || o.j < 0) throw Error("vtable needs both --k and --j for a single value");
        const Int s = s_value(o.l, o.b, static_cast<std::size_t>(o.k), static_cast<std::size_t>(o.j));
        json result;
        result["k"] = o.k;
        result["j"] = o.j;
        result["s_value"] = s.str();
        emit(o, "vtable", params, result,
             "S(" + std::to_string(o.k) + ", " + std::to_string(o.j) + ") = " + s.str() + "\n");
        return 0;
    }

    const VTable vt = v_table(o.l, o.b, t);
    json polys = json::array();
    std::string text;
    for (std::size_t jj = 0; jj <= o.b; ++jj) {
        polys.push_back(poly_json(vt.polys[jj]));
        text += "V_" + std::to_string(jj) + "(z) = " + vt.polys[jj].str() + "\n";
    }
    json result;
    result["polys"] = polys;
    emit(o, "vtable", params, result, text);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"m-spotty RT weight enumerators of linear codes over finite commutative "
                 "Frobenius rings, with an exact MacWilliams transform"};
    app.require_subcommand(1);

    Options o;
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        return cmd;
    };
    auto add_matrix_opts = [&](CLI::App* cmd) {
        cmd->add_option("--input", o.input, "generator matrix file (text or JSON)");
        cmd->add_option("--ring", o.ring_spec, "override the file's ring spec");
        cmd->add_option("--t", o.t, "override the file's spotty parameter t");
        cmd->add_option("--max-sweep", o.max_sweep, "bound on brute-force sweeps");
        return add_format(cmd);
    };

    auto* ring_info = add_format(app.add_subcommand("ring-info", "order, character and units of a ring"));
    ring_info->add_option("--ring", o.ring_spec, "ring spec, e.g. Z6 or F(2,2;1,1,1)");

    auto* enumerate = add_matrix_opts(app.add_subcommand("enumerate", "weight distribution and W(z) of a code"));
    auto* dual_cmd = add_matrix_opts(app.add_subcommand("dual", "brute-force dual size and enumerator"));
    auto* transform_cmd = add_matrix_opts(app.add_subcommand("transform", "W_dual(z) via the MacWilliams transform only"));
    auto* verify_cmd = add_matrix_opts(app.add_subcommand("verify", "compare both routes to W_dual(z)"));

    auto* vtable_cmd = add_format(app.add_subcommand("vtable", "the kernel polynomials V_0..V_b"));
    vtable_cmd->add_option("--l", o.l, "ring order");
    vtable_cmd->add_option("--b", o.b, "byte length b");
    vtable_cmd->add_option("--t", o.t, "spotty parameter t (default 1)");
    vtable_cmd->add_option("--k", o.k, "query a single S(k, j)");
    vtable_cmd->add_option("--j", o.j, "query a single S(k, j)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(ring_info)) return cmd_ring_info(o);
        if (app.got_subcommand(enumerate)) return cmd_enumerate(o);
        if (app.got_subcommand(dual_cmd)) return cmd_dual(o);
        if (app.got_subcommand(transform_cmd)) return cmd_transform(o);
        if (app.got_subcommand(verify_cmd)) return cmd_verify(o);
        if (app.got_subcommand(vtable_cmd)) return cmd_vtable(o);
    } catch (const mspotty::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
