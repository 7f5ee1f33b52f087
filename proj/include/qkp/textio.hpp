#pragma once

#include "qkp/dpoly.hpp"
#include "qkp/xlaurent.hpp"

#include <string>

namespace qkp {

/// Parsers for the canonical text renderings produced by XLaurent::str and
/// DPoly::str. Grammar: sum of signed products of factors, where a factor is
/// a rational, x[^int], or u<i> with primes / ^(k) derivative markers, each
/// optionally followed by ^int.
XLaurent parse_xlaurent(const std::string& text);
DPoly parse_dpoly(const std::string& text);

}  // namespace qkp
