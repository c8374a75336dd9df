#pragma once

#include <nlohmann/json_fwd.hpp>

#include "mfg/ck_element.hpp"
#include "mfg/lc_function.hpp"
#include "mfg/markov_shift.hpp"
#include "mfg/phase.hpp"
#include "mfg/prefix_table.hpp"
#include "mfg/sweep.hpp"
#include "mfg/tail_map.hpp"

namespace mfg {

using nlohmann::json;

// Matrices: {"n": 2, "rows": [[1,1],[1,0]]}, a bare rows array, or the
// names "A2" / "F".
MarkovShift shift_from_json(const json& j);
json shift_to_json(const MarkovShift& shift);

// Tables: {"shift": ..., "entries": [["111","211"], ...]}.
PrefixExchangeTable table_from_json(const json& j);
json table_to_json(const PrefixExchangeTable& table);

// Elements: {"shift": ..., "M": 4,
//            "terms": [{"alpha":"12","beta":"1","coeff":["1/1","0/1"]}]}.
CKElement element_from_json(const json& j);
json element_to_json(const CKElement& e);

// Phase functions: {"depth": 1, "order": 2, "values": {"1": 1, "2": 0}},
// the value e standing for zeta_M^e.
PhaseFunction phase_from_json(const MarkovShift& shift, const json& j);
json phase_to_json(const PhaseFunction& f);

// Integer tables: {"depth": 1, "values": {"1": 0, "2": 1}}.
LCFunction<int> int_function_from_json(const MarkovShift& shift, const json& j);
json int_function_to_json(const LCFunction<int>& f);

// Tail maps: {"source": ..., "target": ...,
//             "forward": [{"sub": ["21","2"]}], "inverse": [{"sub": ["2","21"]}]};
// prefix-exchange clauses as {"exchange": [["mu","nu"], ...]}.
TailMap tailmap_from_json(const json& j);
json tailmap_to_json(const TailMap& h);

OrbitCocycleData cocycle_data_from_json(const MarkovShift& source, const MarkovShift& target, const json& j);
json cocycle_data_to_json(const OrbitCocycleData& d);

json report_to_json(const VerifyReport& r);

json parse_json_text(const std::string& text);

}  // namespace mfg
