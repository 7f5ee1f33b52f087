#pragma once

#include "qkp/correspond.hpp"
#include "qkp/psdo.hpp"
#include "qkp/qpsdo.hpp"
#include "qkp/starcalc.hpp"

#include <json.hpp>

#include <string>

namespace qkp {

using Json = nlohmann::ordered_json;

Json to_json(const PhaseSymbol& f);
PhaseSymbol phase_symbol_from_json(const Json& j);

Json to_json(const TorusElement& t);
TorusElement torus_element_from_json(const Json& j);

Json to_json(const XSeries& a);
XSeries xseries_from_json(const Json& j);

Json to_json(const DSeries& a);

Json to_json(const QOperatorSeries& a);
QOperatorSeries qseries_from_json(const Json& j);

Json to_json(const Report& r);

}  // namespace qkp
