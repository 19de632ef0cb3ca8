#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "rdmap/group.hpp"
#include "rdmap/group_ring.hpp"
#include "rdmap/harness.hpp"
#include "rdmap/kernel.hpp"
#include "rdmap/multiplier.hpp"
#include "rdmap/norm.hpp"

// JSON and CSV encodings. Element text encodings: free words as strings over
// a, b, c, ... with uppercase inverses; free-abelian elements as integer
// arrays; cyclic elements as integers. Parsing failures throw ParseError.
namespace rdmap::io {

using Json = nlohmann::json;

// {"kind": "free", "rank": 2} | {"kind": "free-abelian", "rank": d} |
// {"kind": "cyclic", "order": m}; parsing also accepts the string forms of
// GroupDescriptor::parse.
Json to_json(const GroupDescriptor& g);
GroupDescriptor group_from_json(const Json& j);

Json to_json(const GroupDescriptor& g, const GroupElement& x);
GroupElement element_from_json(const GroupDescriptor& g, const Json& j);

// {"group": {...}, "terms": [{"elem": <encoding>, "re": x, "im": y}, ...]}.
Json to_json(const GroupRingElement& f);
GroupRingElement ring_element_from_json(const Json& j);
// Terms array only, for a known group.
Json terms_to_json(const GroupRingElement& f);
GroupRingElement terms_from_json(const GroupDescriptor& g, const Json& terms);

// {"group": optional, "points": [...], "entries": [row-major n*n numbers]}.
// Without a group the points are ignored except for their count.
Json to_json(const KernelMatrix& k);
KernelMatrix kernel_from_json(const Json& j);

// {"kind": "heat"|"truncated"|"scaled"|"table", "r", "n", "U", "terms"}.
// A scaled multiplier is written flat when its inner multiplier is a
// truncated heat multiplier, otherwise with a nested "inner" object.
Json to_json(const Multiplier& phi, const GroupDescriptor& g);
Multiplier multiplier_from_json(const GroupDescriptor& g, const Json& j);

Json to_json(const RdParams& rd);
Json to_json(const NormBracket& b);
Json to_json(const CnVerdict& v);
Json to_json(const PsdVerdict& v);
Json to_json(const ConvergenceRow& row);
Json to_json(const std::vector<ConvergenceRow>& rows);
Json to_json(const RdSampleReport& report, const GroupDescriptor& g);
Json to_json(const LemmaSampleReport& report);

inline constexpr const char* kConvergenceCsvHeader =
    "r,n,U,K_n,defect_lower,defect_upper,runtime_ms";
std::string to_csv(const std::vector<ConvergenceRow>& rows);

// Shortest round-trip decimal form.
std::string format_double(double value);

Json parse_json(const std::string& text);
// Reads text from a path, or treats the argument itself as inline JSON when it
// starts with '{' or '['.
Json load_json(const std::string& path_or_inline);

}  // namespace rdmap::io
