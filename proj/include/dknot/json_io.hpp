#pragma once

#include <string>

#include "../../vendor/json.hpp"
#include "dknot/cobordism.hpp"
#include "dknot/farber_levine.hpp"
#include "dknot/sequiv.hpp"

namespace dknot {

// Order-preserving JSON type so that report output is deterministic and
// round-trips byte-for-byte.
using Json = nlohmann::ordered_json;

// --- Serialization ---------------------------------------------------------

Json laurent_to_json(const IntLaurent& p);
Json laurent_to_json(const RatLaurent& p);
Json rational_function_to_json(const RationalFunction& f);
Json matrix_to_json(const IntMatrix& m);
Json matrix_to_json(const RatMatrix& m);
Json seifert_to_json(const SeifertData& s);
Json qseifert_to_json(const QSeifert& s);
Json move_to_json(const Move& m);
Json trace_to_json(const MoveTrace& t);
Json validity_to_json(const ValidityReport& r);
Json obstruction_to_json(const ObstructionReport& r);
Json blanchfield_to_json(const BlanchfieldForm& b);
Json torsion_module_to_json(const FiniteTorsionModule& m);
Json pairing_table_to_json(const FLPairingTable& t);

// --- Parsing (throws ParseError on malformed input) ------------------------

Json parse_json_text(const std::string& text);
SeifertData seifert_from_json(const Json& j);
QSeifert qseifert_from_json(const Json& j);
Move move_from_json(const Json& j);
MoveTrace trace_from_json(const Json& j);

SeifertData load_seifert_file(const std::string& path);
MoveTrace load_trace_file(const std::string& path);

// Canonical textual rendering of a report (2-space indent, trailing newline);
// parsing and re-rendering the result is byte-identical.
std::string render_report(const Json& j);

}  // namespace dknot
