#pragma once

#include <string>
#include <vector>

#include "rmcoset/rghw.hpp"

namespace rmcoset::tables {

struct Table {
    std::string id;
    std::string caption;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> footnotes;
};

/// fig1, t1 … t18.
std::vector<std::string> table_ids();

/// Regenerates a table from the engine. Throws UnknownTable.
Table make_table(const std::string& id);

/// Caption lines prefixed by "# ", then header and rows, then "# note: " footnotes.
std::string to_csv(const Table& t);
/// Fixed-width columns with the caption above and footnotes below.
std::string to_text(const Table& t);

/// Code pairs behind the scheme tables t7 … t18 (all with s = 2).
struct SchemeTable {
    const char* id;
    int q, u1, u2;
};
const std::vector<SchemeTable>& scheme_tables();

/// Leakage rows t, t', r, r' of an arbitrary pair in the layout of the scheme tables.
Table profile_table(const CodePair& pair, const std::string& id = "profile");

/// "For local error-correction N queries are needed." or the two-count variant.
std::string query_caption(const CodePair& pair);

}  // namespace rmcoset::tables
