#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "coble/coincidence.hpp"
#include "coble/enumeration.hpp"
#include "coble/error.hpp"
#include "coble/json_io.hpp"
#include "coble/lattice.hpp"
#include "coble/picard.hpp"
#include "coble/sextic.hpp"

namespace {

using coble::binary_form;
using coble::blowup_surface;
using coble::divisor_class;
using coble::Int;
using coble::ojson;
using coble::qmat;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) coble::fail("BadInput", "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

// inline JSON, or @path to read a file
ojson arg_json(const std::string& s) {
    if (!s.empty() && s[0] == '@') return coble::parse_json_text(slurp(s.substr(1)));
    return coble::parse_json_text(s);
}

int small_int(const ojson& j, const char* what) {
    if (!j.is_number_integer()) coble::fail("BadInput", std::string(what) + " must be an integer");
    return j.get<int>();
}

blowup_surface surface_for(const divisor_class& c) { return blowup_surface{c.n_points()}; }

std::vector<divisor_class> class_list_from_json(const ojson& j, const char* what) {
    if (!j.is_array()) coble::fail("BadInput", std::string(what) + " must be an array of classes");
    std::vector<divisor_class> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(coble::divisor_class_from_json(x));
    return out;
}

coble::extension_options extension_options_from_json(const ojson& j) {
    coble::extension_options opts;
    if (auto it = j.find("all_solutions"); it != j.end()) {
        if (!it->is_boolean()) coble::fail("BadInput", "all_solutions must be a boolean");
        opts.all_solutions = it->get<bool>();
    }
    if (auto it = j.find("degree_cap"); it != j.end())
        opts.degree_cap = coble::int_from_json(*it, "degree_cap");
    if (auto it = j.find("max_solutions"); it != j.end())
        opts.max_solutions = static_cast<size_t>(small_int(*it, "max_solutions"));
    if (auto it = j.find("node_budget"); it != j.end())
        opts.node_budget = static_cast<size_t>(small_int(*it, "node_budget"));
    return opts;
}

coble::sextic_parametrization parametrization_from_json(const ojson& j) {
    if (!j.is_object()) coble::fail("BadInput", "parametrization input must be a JSON object");
    if (j.contains("lambda") || j.contains("a")) {
        coble::check_object_fields(j, {"a", "b", "c", "lambda"}, "parametrization input");
        if (!j.contains("a") || !j.contains("b") || !j.contains("c") || !j.contains("lambda"))
            coble::fail("BadInput", "factored input needs a, b, c and lambda");
        return coble::build_parametrization(
            coble::binary_form_from_json(j.at("a")), coble::binary_form_from_json(j.at("b")),
            coble::binary_form_from_json(j.at("c")), coble::qmat_from_json(j.at("lambda"), "lambda"));
    }
    coble::check_object_fields(j, {"f0", "f1", "f2"}, "parametrization input");
    if (!j.contains("f0") || !j.contains("f1") || !j.contains("f2"))
        coble::fail("BadInput", "raw input needs f0, f1 and f2");
    return coble::make_parametrization(coble::binary_form_from_json(j.at("f0")),
                                       coble::binary_form_from_json(j.at("f1")),
                                       coble::binary_form_from_json(j.at("f2")));
}

void triple_from_json(const ojson& j, binary_form& a, binary_form& b, binary_form& c) {
    coble::check_object_fields(j, {"a", "b", "c", "grid"}, "triple input");
    if (!j.contains("a") || !j.contains("b") || !j.contains("c"))
        coble::fail("BadInput", "triple input needs a, b and c");
    a = coble::binary_form_from_json(j.at("a"));
    b = coble::binary_form_from_json(j.at("b"));
    c = coble::binary_form_from_json(j.at("c"));
}

bool certified_negative(const std::string& code) {
    return code == "NonExtendable" || code == "NotTenNodal" || code == "NonBirational";
}

struct cli_state {
    std::string output_path;
    std::string report;

    void emit(const ojson& j) { report = j.dump(2) + "\n"; }

    void flush() const {
        if (output_path.empty()) {
            std::cout << report;
            return;
        }
        std::ofstream out(output_path, std::ios::binary);
        if (!out) coble::fail("BadInput", "cannot write " + output_path);
        out << report;
    }
};

} // namespace

int main(int argc, char** argv) {
    // the worker cap must be in the environment before any callback runs
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--threads" && i + 1 < argc) {
            setenv("COBLE_LAB_THREADS", argv[i + 1], 1);
        } else if (a.rfind("--threads=", 0) == 0) {
            setenv("COBLE_LAB_THREADS", a.substr(10).c_str(), 1);
        }
    }

    CLI::App app{"exact arithmetic for Coble surface calculations"};
    app.require_subcommand(1);

    cli_state st;
    int threads = 0;
    app.add_option("--output", st.output_path, "write the report to this file instead of stdout");
    app.add_option("--threads", threads, "cap the worker count for scans and searches");

    // lattice
    auto* lat = app.add_subcommand("lattice", "hyperbolic lattice arithmetic");
    lat->require_subcommand(1);

    std::string lat_root, lat_vec;
    auto* lat_reflect = lat->add_subcommand("reflect", "apply the reflection in a (-2)-vector");
    lat_reflect->add_option("--root", lat_root, "reflection root (JSON or @file)")->required();
    lat_reflect->add_option("--vector", lat_vec, "vector to reflect (JSON or @file)")->required();
    lat_reflect->callback([&] {
        auto alpha = coble::lattice_vector_from_json(arg_json(lat_root));
        auto x = coble::lattice_vector_from_json(arg_json(lat_vec));
        st.emit(coble::lattice_vector_json(coble::reflect(alpha, x)));
    });

    auto* lat_gram = lat->add_subcommand("gram", "Gram matrix of the ten simple roots");
    lat_gram->callback([&] { st.emit(coble::imat_json(coble::root_gram_matrix())); });

    std::string split_vec;
    auto* lat_split = lat->add_subcommand("split", "decompose along k-perp plus Z k");
    lat_split->add_option("--vector", split_vec, "vector in Z^{1,10} (JSON or @file)")->required();
    lat_split->callback([&] {
        auto s = coble::split_along_k(coble::lattice_vector_from_json(arg_json(split_vec)));
        ojson j;
        j["perp"] = coble::lattice_vector_json(s.perp);
        j["k_coefficient"] = coble::int_json(s.k_coefficient);
        st.emit(j);
    });

    // picard
    auto* pic = app.add_subcommand("picard", "divisor classes on blown-up planes");
    pic->require_subcommand(1);

    std::string pic_a, pic_b, pic_cls, pic_classes;
    auto* pic_pair = pic->add_subcommand("pair", "intersection number of two classes");
    pic_pair->add_option("--a", pic_a, "first class (JSON or @file)")->required();
    pic_pair->add_option("--b", pic_b, "second class (JSON or @file)")->required();
    pic_pair->callback([&] {
        auto a = coble::divisor_class_from_json(arg_json(pic_a));
        auto b = coble::divisor_class_from_json(arg_json(pic_b));
        if (a.n_points() != b.n_points())
            coble::fail("BadInput", "classes live on different blow-ups");
        ojson j;
        j["pairing"] = coble::int_json(coble::intersect(surface_for(a), a, b));
        st.emit(j);
    });

    auto* pic_genus = pic->add_subcommand("genus", "arithmetic genus of a class");
    pic_genus->add_option("--class", pic_cls, "divisor class (JSON or @file)")->required();
    pic_genus->callback([&] {
        auto c = coble::divisor_class_from_json(arg_json(pic_cls));
        ojson j;
        j["genus"] = coble::int_json(coble::arithmetic_genus(surface_for(c), c));
        st.emit(j);
    });

    auto* pic_chi = pic->add_subcommand("chi", "Euler characteristic of a class");
    pic_chi->add_option("--class", pic_cls, "divisor class (JSON or @file)")->required();
    pic_chi->callback([&] {
        auto c = coble::divisor_class_from_json(arg_json(pic_cls));
        ojson j;
        j["chi"] = coble::int_json(coble::euler_characteristic(surface_for(c), c));
        st.emit(j);
    });

    std::string audit_override;
    auto* pic_audit = pic->add_subcommand("audit-quintic", "intersection identities of the quintic model class");
    pic_audit->add_option("--class", audit_override, "candidate class to audit instead of the standard one");
    pic_audit->callback([&] {
        std::optional<divisor_class> ov;
        if (!audit_override.empty()) ov = coble::divisor_class_from_json(arg_json(audit_override));
        st.emit(coble::audit_json(coble::quintic_model_audit(blowup_surface{10}, ov)));
    });

    auto* pic_contract = pic->add_subcommand("contract", "isometry contracting ten disjoint (-1)-classes");
    pic_contract->add_option("--classes", pic_classes, "array of ten classes (JSON or @file)")->required();
    pic_contract->callback([&] {
        auto classes = class_list_from_json(arg_json(pic_classes), "classes");
        st.emit(coble::isometry_json(coble::contract_basis(blowup_surface{10}, classes)));
    });

    // enum
    auto* en = app.add_subcommand("enum", "class enumeration and frame extension");
    en->require_subcommand(1);

    int en_n = 10;
    std::string en_preset;
    Int en_bound(-1);
    std::string en_bound_str;
    bool en_verify = false;
    auto* en_classes = en->add_subcommand("classes", "all classes of a preset type inside the degree box");
    en_classes->add_option("--n", en_n, "number of blown-up points")->required();
    en_classes->add_option("--preset", en_preset, "minus-one, root or isotropic")->required();
    en_classes->add_option("--bound", en_bound_str, "override the degree bound");
    en_classes->add_flag("--verify", en_verify, "re-run with the bound raised by one and compare");
    en_classes->callback([&] {
        auto q = coble::preset_query(en_preset, en_n);
        if (!en_bound_str.empty()) q.degree_bound = coble::parse_int(en_bound_str);
        ojson out = ojson::array();
        for (const auto& c : coble::enumerate_classes(q, en_verify))
            out.push_back(coble::divisor_class_json(c));
        st.emit(out);
    });

    std::string en_input;
    auto* en_extend = en->add_subcommand("extend", "complete orthogonal (-1)-classes to a frame of ten");
    en_extend->add_option("--input", en_input, "{given, all_solutions?, degree_cap?, ...} (JSON or @file)")->required();
    en_extend->callback([&] {
        ojson j = arg_json(en_input);
        coble::check_object_fields(
            j, {"given", "all_solutions", "degree_cap", "max_solutions", "node_budget"}, "input");
        if (!j.contains("given")) coble::fail("BadInput", "input needs a given list");
        auto given = class_list_from_json(j.at("given"), "given");
        auto completions = coble::extend_exceptional(given, extension_options_from_json(j));
        ojson out;
        ojson list = ojson::array();
        for (const auto& frame : completions) {
            ojson f = ojson::array();
            for (const auto& c : frame) f.push_back(coble::divisor_class_json(c));
            list.push_back(f);
        }
        out["completions"] = list;
        st.emit(out);
    });

    std::string iso_input;
    auto* en_iso = en->add_subcommand("isotropic-extend", "extend an isotropic sequence");
    en_iso->add_option("--input", iso_input, "{n, seq, degree_cap?, ...} (JSON or @file)")->required();
    en_iso->callback([&] {
        ojson j = arg_json(iso_input);
        coble::check_object_fields(
            j, {"n", "seq", "all_solutions", "degree_cap", "max_solutions", "node_budget"}, "input");
        if (!j.contains("n") || !j.contains("seq"))
            coble::fail("BadInput", "input needs n and seq");
        blowup_surface s{small_int(j.at("n"), "n")};
        auto seq = class_list_from_json(j.at("seq"), "seq");
        auto full = coble::extend_isotropic(s, seq, extension_options_from_json(j));
        ojson out;
        ojson list = ojson::array();
        for (const auto& c : full) list.push_back(coble::divisor_class_json(c));
        out["sequence"] = list;
        st.emit(out);
    });

    std::string fano_input;
    auto* en_fano = en->add_subcommand("fano", "polarization of a full isotropic sequence");
    en_fano->add_option("--input", fano_input, "{n, seq} (JSON or @file)")->required();
    en_fano->callback([&] {
        ojson j = arg_json(fano_input);
        coble::check_object_fields(j, {"n", "seq"}, "input");
        if (!j.contains("n") || !j.contains("seq"))
            coble::fail("BadInput", "input needs n and seq");
        blowup_surface s{small_int(j.at("n"), "n")};
        auto seq = class_list_from_json(j.at("seq"), "seq");
        st.emit(coble::divisor_class_json(coble::fano_polarization(s, seq)));
    });

    std::string phi_input;
    auto* en_phi = en->add_subcommand("phi", "minimal pairing with an isotropic class");
    en_phi->add_option("--input", phi_input, "{n, h, box?} (JSON or @file)")->required();
    en_phi->callback([&] {
        ojson j = arg_json(phi_input);
        coble::check_object_fields(j, {"n", "h", "box"}, "input");
        if (!j.contains("n") || !j.contains("h"))
            coble::fail("BadInput", "input needs n and h");
        blowup_surface s{small_int(j.at("n"), "n")};
        auto h = coble::divisor_class_from_json(j.at("h"));
        Int box(4);
        if (j.contains("box")) box = coble::int_from_json(j.at("box"), "box");
        ojson out;
        out["phi"] = coble::int_json(coble::phi_invariant(s, h, box));
        st.emit(out);
    });

    // binform
    auto* bf = app.add_subcommand("binform", "binary form arithmetic");
    bf->require_subcommand(1);

    std::string bf_f, bf_g;
    auto* bf_jac = bf->add_subcommand("jacobian", "Jacobian determinant of two forms");
    bf_jac->add_option("--f", bf_f, "first form (JSON or @file)")->required();
    bf_jac->add_option("--g", bf_g, "second form (JSON or @file)")->required();
    bf_jac->callback([&] {
        st.emit(coble::binary_form_json(coble::jacobian(
            coble::binary_form_from_json(arg_json(bf_f)), coble::binary_form_from_json(arg_json(bf_g)))));
    });

    auto* bf_res = bf->add_subcommand("resultant", "Sylvester resultant of two forms");
    bf_res->add_option("--f", bf_f, "first form (JSON or @file)")->required();
    bf_res->add_option("--g", bf_g, "second form (JSON or @file)")->required();
    bf_res->callback([&] {
        ojson j;
        j["resultant"] = coble::rat_str(coble::resultant(
            coble::binary_form_from_json(arg_json(bf_f)), coble::binary_form_from_json(arg_json(bf_g))));
        st.emit(j);
    });

    auto* bf_inv = bf->add_subcommand("involution", "involution swapping the roots of a pencil of quadratics");
    bf_inv->add_option("--f", bf_f, "first quadratic (JSON or @file)")->required();
    bf_inv->add_option("--g", bf_g, "second quadratic (JSON or @file)")->required();
    bf_inv->callback([&] {
        st.emit(coble::mobius_json(coble::pencil_involution(
            coble::binary_form_from_json(arg_json(bf_f)), coble::binary_form_from_json(arg_json(bf_g)))));
    });

    // sextic
    auto* sx = app.add_subcommand("sextic", "rational sextic curves and their node data");
    sx->require_subcommand(1);

    std::string sx_input;
    auto* sx_build = sx->add_subcommand("build", "assemble a parametrization from quadrics and lambda");
    sx_build->add_option("--input", sx_input, "{a,b,c,lambda} or {f0,f1,f2} (JSON or @file)")->required();
    sx_build->callback([&] {
        auto g = parametrization_from_json(arg_json(sx_input));
        ojson j;
        j["f0"] = coble::binary_form_json(g.f0);
        j["f1"] = coble::binary_form_json(g.f1);
        j["f2"] = coble::binary_form_json(g.f2);
        st.emit(j);
    });

    auto* sx_w = sx->add_subcommand("w-form", "degree-20 form cutting out the node preimages");
    sx_w->add_option("--input", sx_input, "parametrization (JSON or @file)")->required();
    sx_w->callback([&] {
        auto g = parametrization_from_json(arg_json(sx_input));
        auto w = coble::double_point_form(g);
        ojson j;
        j["w"] = coble::binary_form_json(w);
        j["degree"] = w.degree();
        j["square_free"] = coble::is_square_free(w);
        st.emit(j);
    });

    int sx_m = 0, sx_r = 0;
    auto* sx_dim = sx->add_subcommand("system-dim", "dimension of plane curves with multiplicity r at every node");
    sx_dim->add_option("--input", sx_input, "parametrization (JSON or @file)")->required();
    sx_dim->add_option("--m", sx_m, "curve degree")->required();
    sx_dim->add_option("--r", sx_r, "multiplicity at the nodes")->required();
    sx_dim->callback([&] {
        auto g = parametrization_from_json(arg_json(sx_input));
        ojson j;
        j["dimension"] = coble::nodal_system_dimension(g, sx_m, sx_r);
        st.emit(j);
    });

    auto* sx_imp = sx->add_subcommand("implicitize", "implicit degree-6 equation of the image");
    sx_imp->add_option("--input", sx_input, "parametrization (JSON or @file)")->required();
    sx_imp->callback([&] {
        st.emit(coble::plane_form_json(coble::implicitize(parametrization_from_json(arg_json(sx_input)))));
    });

    bool sx_audit = false;
    auto* sx_check = sx->add_subcommand("coble-check", "full ten-node certification chain");
    sx_check->add_option("--input", sx_input, "parametrization (JSON or @file)")->required();
    sx_check->add_flag("--audit", sx_audit, "include the moduli dimension bookkeeping");
    sx_check->callback([&] {
        st.emit(coble::coble_report_json(coble::coble_check(parametrization_from_json(arg_json(sx_input))), sx_audit));
    });

    // coincide
    auto* co = app.add_subcommand("coincide", "coincidence calculus for quadratic triples");
    co->require_subcommand(1);

    std::string co_input;
    auto* co_mat = co->add_subcommand("matrices", "coefficient matrix and Jacobian companion matrix");
    co_mat->add_option("--input", co_input, "{a,b,c} (JSON or @file)")->required();
    co_mat->callback([&] {
        binary_form a, b, c;
        triple_from_json(arg_json(co_input), a, b, c);
        auto cm = coble::build_matrices(a, b, c);
        ojson j;
        j["M"] = coble::qmat_json(cm.m);
        j["N"] = coble::qmat_json(cm.n);
        j["detM"] = coble::rat_str(coble::det(cm.m));
        j["detN"] = coble::rat_str(coble::det(cm.n));
        st.emit(j);
    });

    auto* co_test = co->add_subcommand("test", "do the three pencil involutions compose to an involution");
    co_test->add_option("--input", co_input, "{a,b,c} (JSON or @file)")->required();
    co_test->callback([&] {
        binary_form a, b, c;
        triple_from_json(arg_json(co_input), a, b, c);
        bool hit = coble::coincidence_condition(a, b, c);
        ojson j;
        j["coincident"] = hit;
        j["detM"] = coble::rat_str(coble::det(coble::build_matrices(a, b, c).m));
        st.emit(j);
    });

    auto* co_res = co->add_subcommand("residual", "square of the composed pencil involutions");
    co_res->add_option("--input", co_input, "{a,b,c} (JSON or @file)")->required();
    co_res->callback([&] {
        binary_form a, b, c;
        triple_from_json(arg_json(co_input), a, b, c);
        auto r = coble::pompilj_residual(a, b, c);
        ojson j = coble::mobius_json(r);
        j["scalar"] = coble::is_scalar(r);
        st.emit(j);
    });

    std::string co_grid;
    auto* co_scan = co->add_subcommand("family-scan", "family coincidence test over a lambda grid");
    co_scan->add_option("--grid", co_grid, "{a,b,c,grid} (JSON or @file)")->required();
    co_scan->callback([&] {
        ojson j = arg_json(co_grid);
        binary_form a, b, c;
        triple_from_json(j, a, b, c);
        if (!j.contains("grid")) coble::fail("BadInput", "scan input needs a grid");
        const ojson& grid = j.at("grid");
        if (!grid.is_array()) coble::fail("BadInput", "grid must be an array of matrices");
        std::vector<qmat> lambdas;
        lambdas.reserve(grid.size());
        for (const auto& g : grid) lambdas.push_back(coble::qmat_from_json(g, "lambda"));
        std::string lines;
        for (const auto& e : coble::family_scan(a, b, c, lambdas))
            lines += coble::scan_entry_json(e).dump() + "\n";
        st.report = lines;
    });

    // let --output / --threads appear after the subcommand as well
    std::function<void(CLI::App*)> allow_parent_opts = [&](CLI::App* cmd) {
        for (CLI::App* sub : cmd->get_subcommands([](const CLI::App*) { return true; })) {
            sub->fallthrough();
            allow_parent_opts(sub);
        }
    };
    allow_parent_opts(&app);

    try {
        app.parse(argc, argv);
        st.flush();
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    } catch (const coble::error& e) {
        ojson j;
        j["error"] = e.code();
        std::string what = e.what();
        std::string prefix = e.code() + ": ";
        j["detail"] = what.rfind(prefix, 0) == 0 ? what.substr(prefix.size()) : what;
        if (!e.payload().empty()) j["certificate"] = coble::parse_json_text(e.payload());
        std::cout << j.dump(2) << "\n";
        return certified_negative(e.code()) ? 3 : 2;
    }
    return 0;
}
