#include "coble/json_io.hpp"

#include <cstdint>

#include "coble/error.hpp"

namespace coble {

namespace {

const ojson& field(const ojson& j, const char* key, const char* what) {
    if (!j.is_object())
        fail("BadInput", std::string(what) + " must be a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        fail("BadInput",
             std::string(what) + " is missing the \"" + key + "\" field");
    return *it;
}

int small_int_from_json(const ojson& j, const char* what) {
    if (!j.is_number_integer())
        fail("BadInput", std::string(what) + " must be an integer");
    return j.get<int>();
}

} // namespace

ojson parse_json_text(const std::string& text) {
    ojson j = ojson::parse(text, nullptr, false);
    if (j.is_discarded()) fail("BadInput", "malformed JSON");
    return j;
}

void check_object_fields(const ojson& j,
                         std::initializer_list<const char*> allowed,
                         const char* what) {
    if (!j.is_object())
        fail("BadInput", std::string(what) + " must be a JSON object");
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* key : allowed)
            if (it.key() == key) {
                known = true;
                break;
            }
        if (!known)
            fail("BadInput", std::string(what) + " has an unknown field \"" +
                                 it.key() + "\"");
    }
}

ojson int_json(const Int& v) {
    if (v.fits_slong_p()) return ojson(static_cast<int64_t>(v.get_si()));
    return ojson(int_str(v));
}

Int int_from_json(const ojson& j, const char* what) {
    if (j.is_number_integer()) {
        if (j.is_number_unsigned())
            return Int(std::to_string(j.get<uint64_t>()));
        return Int(std::to_string(j.get<int64_t>()));
    }
    if (j.is_string()) return parse_int(j.get<std::string>());
    fail("BadInput", std::string(what) + " must be an integer or a string");
}

Rat rat_from_json(const ojson& j, const char* what) {
    if (j.is_number_integer()) return Rat(int_from_json(j, what));
    if (j.is_string()) return parse_rat(j.get<std::string>());
    fail("BadInput",
         std::string(what) + " must be a \"p/q\" string or an integer");
}

namespace {

std::vector<Int> int_array_from_json(const ojson& j, const char* what) {
    if (!j.is_array())
        fail("BadInput", std::string(what) + " must be an array");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(int_from_json(x, what));
    return out;
}

ojson int_array_json(const std::vector<Int>& v) {
    ojson a = ojson::array();
    for (const Int& x : v) a.push_back(int_json(x));
    return a;
}

} // namespace

ojson lattice_vector_json(const lattice_vector& v) {
    ojson j;
    j["basis"] = "standard";
    j["coords"] = int_array_json(v.coords());
    return j;
}

ojson e10_vector_json(const e10_vector& v) {
    ojson j;
    j["basis"] = "root";
    ojson a = ojson::array();
    for (const Int& x : v.root_coords()) a.push_back(int_json(x));
    j["coords"] = a;
    return j;
}

lattice_vector lattice_vector_from_json(const ojson& j) {
    if (j.is_array())
        return lattice_vector(int_array_from_json(j, "vector"));
    check_object_fields(j, {"basis", "coords"}, "vector");
    const ojson& basis = field(j, "basis", "vector");
    if (!basis.is_string()) fail("BadInput", "basis must be a string");
    std::vector<Int> coords =
        int_array_from_json(field(j, "coords", "vector"), "coords");
    std::string b = basis.get<std::string>();
    if (b == "standard") return lattice_vector(coords);
    if (b == "root") {
        if (coords.size() != 10)
            fail("BadInput", "root-basis vectors have 10 coordinates");
        std::array<Int, 10> a;
        for (size_t i = 0; i < 10; ++i) a[i] = coords[i];
        return embed(e10_vector(a));
    }
    fail("BadInput", "basis must be \"standard\" or \"root\"");
}

ojson divisor_class_json(const divisor_class& c) {
    ojson j;
    j["d"] = int_json(c.d);
    j["m"] = int_array_json(c.m);
    return j;
}

divisor_class divisor_class_from_json(const ojson& j) {
    check_object_fields(j, {"d", "m"}, "class");
    divisor_class c;
    c.d = int_from_json(field(j, "d", "class"), "d");
    c.m = int_array_from_json(field(j, "m", "class"), "m");
    return c;
}

ojson binary_form_json(const binary_form& f) {
    ojson j;
    j["deg"] = f.degree();
    ojson a = ojson::array();
    for (const Rat& c : f.coeffs()) a.push_back(rat_str(c));
    j["coeffs"] = a;
    return j;
}

binary_form binary_form_from_json(const ojson& j) {
    check_object_fields(j, {"deg", "coeffs"}, "form");
    int deg = small_int_from_json(field(j, "deg", "form"), "deg");
    const ojson& coeffs = field(j, "coeffs", "form");
    if (!coeffs.is_array()) fail("BadInput", "coeffs must be an array");
    std::vector<Rat> c;
    c.reserve(coeffs.size());
    for (const auto& x : coeffs) c.push_back(rat_from_json(x, "coeffs"));
    if (deg < 0 || c.size() != static_cast<size_t>(deg) + 1)
        fail("BadInput", "a degree-n form needs n+1 coefficients");
    return binary_form(deg, std::move(c));
}

ojson mobius_json(const mobius_map& t) {
    ojson j;
    j["m"] = ojson::array({ojson::array({rat_str(t.a), rat_str(t.b)}),
                           ojson::array({rat_str(t.c), rat_str(t.d)})});
    return j;
}

mobius_map mobius_from_json(const ojson& j) {
    check_object_fields(j, {"m"}, "map");
    const ojson& m = field(j, "m", "map");
    if (!m.is_array() || m.size() != 2 || !m[0].is_array() ||
        !m[1].is_array() || m[0].size() != 2 || m[1].size() != 2)
        fail("BadInput", "map entries must form a 2x2 matrix");
    return make_mobius(
        rat_from_json(m[0][0], "map"), rat_from_json(m[0][1], "map"),
        rat_from_json(m[1][0], "map"), rat_from_json(m[1][1], "map"));
}

ojson qmat_json(const qmat& m) {
    ojson rows = ojson::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(rat_str(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

qmat qmat_from_json(const ojson& j, const char* what) {
    if (!j.is_array() || j.empty())
        fail("BadInput", std::string(what) + " must be a nonempty array of rows");
    size_t cols = 0;
    for (const auto& row : j) {
        if (!row.is_array() || row.empty())
            fail("BadInput", std::string(what) + " rows must be nonempty arrays");
        if (cols == 0) cols = row.size();
        if (row.size() != cols)
            fail("BadInput", std::string(what) + " rows have unequal lengths");
    }
    qmat m(j.size(), cols);
    for (size_t i = 0; i < j.size(); ++i)
        for (size_t k = 0; k < cols; ++k)
            m(i, k) = rat_from_json(j[i][k], what);
    return m;
}

ojson imat_json(const imat& m) {
    ojson rows = ojson::array();
    for (size_t i = 0; i < m.rows(); ++i) {
        ojson row = ojson::array();
        for (size_t k = 0; k < m.cols(); ++k) row.push_back(int_json(m(i, k)));
        rows.push_back(row);
    }
    return rows;
}

ojson plane_form_json(const plane_form& f) {
    ojson j;
    j["deg"] = f.degree();
    ojson terms = ojson::array();
    for (const plane_term& t : f.terms()) {
        ojson term;
        term["e"] = ojson::array({t.e[0], t.e[1], t.e[2]});
        term["c"] = rat_str(t.c);
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

plane_form plane_form_from_json(const ojson& j) {
    check_object_fields(j, {"deg", "terms"}, "plane form");
    int deg = small_int_from_json(field(j, "deg", "plane form"), "deg");
    const ojson& terms = field(j, "terms", "plane form");
    if (!terms.is_array()) fail("BadInput", "terms must be an array");
    std::vector<plane_term> out;
    out.reserve(terms.size());
    for (const auto& t : terms) {
        check_object_fields(t, {"e", "c"}, "term");
        const ojson& e = field(t, "e", "term");
        if (!e.is_array() || e.size() != 3)
            fail("BadInput", "term exponents must be a triple");
        plane_term pt;
        for (size_t i = 0; i < 3; ++i)
            pt.e[i] = small_int_from_json(e[i], "term exponent");
        pt.c = rat_from_json(field(t, "c", "term"), "term coefficient");
        out.push_back(pt);
    }
    return plane_form(deg, std::move(out));
}

ojson audit_json(const std::vector<audit_entry>& entries) {
    ojson j;
    for (const audit_entry& e : entries) {
        ojson row;
        row["pass"] = e.pass;
        row["lhs"] = e.lhs;
        row["rhs"] = e.rhs;
        j[e.name] = row;
    }
    return j;
}

ojson isometry_json(const isometry_map& f) {
    ojson j;
    j["matrix"] = imat_json(f.m);
    return j;
}

ojson coble_report_json(const coble_report& r, bool with_moduli) {
    ojson j;
    j["is_coble"] = r.is_coble;
    if (!r.reason.empty()) j["reason"] = r.reason;
    j["w_ok"] = r.w_ok;
    j["w_degree"] = r.w_degree;
    j["w_square_free"] = r.w_square_free;
    if (r.witness_factors_divide_w.has_value())
        j["witness_factors_divide_w"] = *r.witness_factors_divide_w;
    j["dim_cubics_through_nodes"] = r.dim_cubics_through_nodes;
    j["dim_double_sextics"] = r.dim_double_sextics;
    j["implicit_ok"] = r.implicit_ok;
    if (r.implicit_ok) j["implicit"] = plane_form_json(r.implicit);
    if (with_moduli) {
        ojson m;
        m["net_family_dim"] = r.net_family_dim;
        m["reparametrization_dim"] = r.reparametrization_dim;
        m["moduli_dim"] = r.moduli_dim;
        j["moduli"] = m;
    }
    return j;
}

ojson scan_entry_json(const family_scan_entry& e) {
    ojson j;
    j["lambda"] = qmat_json(e.lambda);
    if (e.singular) {
        j["error"] = "SingularLambda";
        return j;
    }
    j["detM"] = rat_str(e.det_m);
    j["coincident"] = e.coincident;
    j["marked_fix"] = e.marked_fix;
    return j;
}

} // namespace coble
