#pragma once

#include <string>

#include "sunit/field.hpp"

namespace sunit {

// Field descriptor JSON:
//   {"kind":"quadratic","d":-5}
//   {"kind":"rational"}
//   {"kind":"table","degree":4,"basis_names":[...],"mult_table":[[[..]]],
//    "signature":[4,0],"class_number":1,"unit_generators":[[..]],
//    "prime_fixtures":[{"p":2,"e":4,"f":1,"uniformizer":[..]}], ...}
// Rationals are strings like "-3/2" or "7".
FieldDescriptor descriptor_from_json(const std::string& json_text);
FieldDescriptor descriptor_from_file(const std::string& path);
std::string descriptor_to_json(const FieldDescriptor& d);

// "rational" | "quad:<d>" | "table:<path>" | a bare fixture name resolved
// against fixtures_dir (e.g. "table:zeta16_plus" or "zeta16_plus")
Field field_from_spec(const std::string& spec, const std::string& fixtures_dir);

}  // namespace sunit
