#ifndef HGM_JSON_IO_HPP
#define HGM_JSON_IO_HPP

#include <json.hpp>

#include "hgm/continuation.hpp"

namespace hgm {

using json = nlohmann::ordered_json;

// {"n":, "precision_bits":, "entries":[[re,im],...]} row-major,
// decimal strings with >= 0.3 * precision_bits significant digits
json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const json& j);

json complex_to_json(const Complex& z);

json ghg_params_to_json(const GHGParams& p);
json fc_params_to_json(const FCParams& p);
GHGParams ghg_params_from_json(const json& j);
FCParams fc_params_from_json(const json& j);

json circuit_set_to_json(const CircuitSetGHG& set);
json circuit_set_to_json(const CircuitSetFC& set);

json riemann_scheme_to_json(const RiemannScheme& s);

json report_to_json(const Report& r);

json violations_to_json(const std::vector<Violation>& v);

}  // namespace hgm

#endif
