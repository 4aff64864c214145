#pragma once

#include <json.hpp>

#include "keypoly/characters.hpp"
#include "keypoly/criteria.hpp"
#include "keypoly/scanning.hpp"

namespace keypoly {

using nlohmann::json;

// JSON schemas. Object keys are emitted alphabetically, so serialized output
// is byte stable and round trips exactly.
//
//   partition   {"n": int, "parts": [int...]}
//   permutation [int...]
//   tableau     {"n": int, "shape": [lambda_1..lambda_n], "columns": [[...]...]}
//   polynomial  {"n": int, "terms": [{"coefficient": int, "exponents": [...]}...]}
//               terms in graded lex order
//   path        {"origin": [j,i], "cells": [[j,i]...], "values": [...], "terminal": v}
//   set         {"cell": [l,k], "kind": "A", "values": [...]}

json to_json(const Partition& p);
json to_json(const Permutation& p);
json to_json(const Tableau& t);
json to_json(const Polynomial& p);
json to_json(const ScanPath& p);
json to_json(const ConditionSet& s);

Partition partition_from_json(const json& j);
Permutation permutation_from_json(const json& j);
Tableau tableau_from_json(const json& j);
Polynomial polynomial_from_json(const json& j);

const char* set_kind_name(SetKind k);

} // namespace keypoly
