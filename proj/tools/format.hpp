#pragma once

#include <ostream>

#include "json.hpp"
#include "qgsmooth/corpus.hpp"
#include "qgsmooth/wahl.hpp"

namespace qgs::cli {

// key=value lines; the report block ends with the invariants, pi1 last.
void write_text(std::ostream& os, const Analysis& a);
void write_table_text(std::ostream& os, const VerifyTable& t);
void write_chain_text(std::ostream& os, const Chain& c);

nlohmann::ordered_json to_json(const Analysis& a);
nlohmann::ordered_json to_json(const VerifyTable& t);
nlohmann::ordered_json chain_json(const Chain& c);

}  // namespace qgs::cli
