#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "coble/binform.hpp"
#include "coble/coincidence.hpp"
#include "coble/enumeration.hpp"
#include "coble/lattice.hpp"
#include "coble/linalg.hpp"
#include "coble/picard.hpp"
#include "coble/rational.hpp"
#include "coble/sextic.hpp"

namespace coble {

// Insertion-ordered JSON keeps every report byte-stable.
using ojson = nlohmann::ordered_json;

// BadInput on malformed text
ojson parse_json_text(const std::string& text);

// rejects objects with keys outside the allowed list
void check_object_fields(const ojson& j,
                         std::initializer_list<const char*> allowed,
                         const char* what);

// Integers ride as JSON numbers while they fit in 64 bits and as decimal
// strings beyond that; rationals always as "p/q" strings.
ojson int_json(const Int& v);
Int int_from_json(const ojson& j, const char* what);
Rat rat_from_json(const ojson& j, const char* what);

ojson lattice_vector_json(const lattice_vector& v);
ojson e10_vector_json(const e10_vector& v);
// accepts {"basis":"standard"|"root","coords":[...]} or a bare array,
// which is read in the standard basis
lattice_vector lattice_vector_from_json(const ojson& j);

ojson divisor_class_json(const divisor_class& c);
divisor_class divisor_class_from_json(const ojson& j);

ojson binary_form_json(const binary_form& f);
binary_form binary_form_from_json(const ojson& j);

ojson mobius_json(const mobius_map& t);
mobius_map mobius_from_json(const ojson& j);

ojson qmat_json(const qmat& m);
qmat qmat_from_json(const ojson& j, const char* what);
ojson imat_json(const imat& m);

ojson plane_form_json(const plane_form& f);
plane_form plane_form_from_json(const ojson& j);

ojson audit_json(const std::vector<audit_entry>& entries);
ojson isometry_json(const isometry_map& f);
ojson coble_report_json(const coble_report& r, bool with_moduli);
ojson scan_entry_json(const family_scan_entry& e);

} // namespace coble
