#include "rmcoset/tables.hpp"

#include <algorithm>
#include <sstream>

#include "rmcoset/errors.hpp"
#include "rmcoset/monomials.hpp"
#include "rmcoset/scheme.hpp"

namespace rmcoset::tables {

namespace {

std::string num(std::uint64_t v) { return std::to_string(v); }

std::string rm(int q, int u, int s = 2) {
    return "RM_" + std::to_string(q) + "(" + std::to_string(u) + "," + std::to_string(s) + ")";
}

std::string vec(const Exponent& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) out += (i ? "," : "") + std::to_string(a[i]);
    return out + ")";
}

Table figure1() {
    const int q = 5, s = 2, u1 = 5, u2 = 3;
    Table t{"fig1", "Calculation of GHWs and RGHWs for C_1 = RM_5(5,2) and C_2 = RM_5(3,2).",
            {"a", "t", "r", "m", "d_r", "M_m"}, {}, {}};
    for (const auto& a : cube_members(q, s)) {
        const int d = degree(a);
        const std::uint64_t pos = rank_in_cube(a, q);
        std::vector<std::string> row{vec(a), num(pos), "-", "-", "-", "-"};
        if (d <= u1) {
            row[2] = num(rank_in_window(a, 0, u1, q));
            row[4] = num(pos);
        }
        if (d >= u2 + 1 && d <= u1) {
            const std::uint64_t m = rank_in_window(a, u2 + 1, u1, q);
            row[3] = num(m);
            row[5] = num(pos - rank_in_window(a, 0, u1, q) + m);
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table small_table(const std::string& id, int u1) {
    const CodePair pair{5, 2, u1, u1 - 1};
    Table t{id, "C_1 = " + rm(5, u1) + ", C_2 = " + rm(5, u1 - 1) + ".", {"m", "d_r", "M_m"}, {}, {}};
    const auto M = hierarchy(pair);
    for (std::uint64_t m = 1; m <= M.size(); ++m)
        t.rows.push_back({num(m), num(ghw(u1, 2, 5, m)), num(M[m - 1])});
    return t;
}

Table table6() {
    const int q = 16;
    const CodePair pair{q, 2, q - 1, q - 2};
    Table t{"t6",
            "The special case u_2 = q-2 and t = 1 with q = 16, that is C_1 = RM_16(15,2) and C_2 = RM_16(14,2).",
            {"m", "M_m", "d_m", "diff", "printed_M_m", "printed_diff"},
            {},
            {}};
    static const std::uint64_t printed_diff[] = {0, 0, 14, 15, 29, 43, 45, 59, 73, 87, 90, 104, 118, 132, 146, 150};
    const auto M = hierarchy(pair);
    for (std::uint64_t m = 1; m <= M.size(); ++m) {
        const std::uint64_t d = ghw(q - 1, 2, q, m);
        t.rows.push_back({num(m), num(M[m - 1]), num(d), num(M[m - 1] - d), num(15 * m + 1),
                          num(printed_diff[m - 1])});
    }
    t.footnotes.push_back(
        "erratum: the originally printed M_m column reads 15m+1, which disagrees with M_m = m(2q-m+1)/2 and with "
        "the minimum-shadow search for m >= 3; M_m, d_m and diff above are recomputed and printed_* keep the "
        "original values for comparison");
    return t;
}

}  // namespace

Table profile_table(const CodePair& pair, const std::string& id) {
    const LeakageProfile p = profile(pair);
    Table t{id,
            "Scheme based on C_1 = " + rm(pair.q, pair.u1, pair.s) + " and C_2 = " + rm(pair.q, pair.u2, pair.s) +
                ". " + query_caption(pair),
            {"m"},
            {},
            {}};
    std::vector<std::string> rt{"t_m"}, rtg{"t'_m"}, rr{"r_m"}, rrg{"r'_m"};
    for (std::uint64_t m = 1; m <= p.ell; ++m) {
        t.header.push_back(num(m));
        rt.push_back(num(p.t[m - 1]));
        rtg.push_back(num(p.t_ghw[m - 1]));
        rr.push_back(num(p.r[m - 1]));
        rrg.push_back(num(p.r_ghw[m - 1]));
    }
    t.rows = {rt, rtg, rr, rrg};
    return t;
}

namespace {

Table scheme_table(const SchemeTable& spec) { return profile_table(CodePair{spec.q, 2, spec.u1, spec.u2}, spec.id); }

}  // namespace

const std::vector<SchemeTable>& scheme_tables() {
    static const std::vector<SchemeTable> specs = {
        {"t7", 8, 6, 5},     {"t8", 8, 6, 4},     {"t9", 8, 5, 4},     {"t10", 8, 5, 3},
        {"t11", 8, 5, 2},    {"t12", 8, 4, 3},    {"t13", 16, 14, 13}, {"t14", 16, 13, 12},
        {"t15", 16, 12, 11}, {"t16", 16, 11, 10}, {"t17", 16, 10, 9},  {"t18", 16, 9, 8},
    };
    return specs;
}

std::string query_caption(const CodePair& pair) {
    const QueryCounts qc = query_counts(pair);
    if (!qc.a_applicable) return "Neither line decoder applies since u_1 >= q-1.";
    if (qc.decoder_a == qc.decoder_b)
        return "For local error-correction " + num(qc.decoder_b) + " queries are needed.";
    return "For local error-correction " + num(qc.decoder_a) + " or " + num(qc.decoder_b) +
           " queries are needed, depending on the error-probability.";
}

std::vector<std::string> table_ids() {
    std::vector<std::string> ids{"fig1"};
    for (int i = 1; i <= 18; ++i) ids.push_back("t" + std::to_string(i));
    return ids;
}

Table make_table(const std::string& id) {
    if (id == "fig1") return figure1();
    if (id == "t6") return table6();
    for (int i = 1; i <= 5; ++i)
        if (id == "t" + std::to_string(i)) return small_table(id, i + 1);
    for (const auto& spec : scheme_tables())
        if (id == spec.id) return scheme_table(spec);
    fail(Errc::UnknownTable, "unknown table id '" + id + "'");
}

std::string to_csv(const Table& t) {
    std::ostringstream out;
    auto quote = [](const std::string& cell) {
        if (cell.find_first_of(",\"") == std::string::npos) return cell;
        std::string q = "\"";
        for (char c : cell) q += c == '"' ? std::string("\"\"") : std::string(1, c);
        return q + "\"";
    };
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << quote(cells[i]);
        out << '\n';
    };
    out << "# " << t.caption << '\n';
    line(t.header);
    for (const auto& r : t.rows) line(r);
    for (const auto& f : t.footnotes) out << "# note: " << f << '\n';
    return out.str();
}

std::string to_text(const Table& t) {
    std::vector<std::size_t> width(t.header.size(), 0);
    auto widen = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i)
            width[i] = std::max(width[i], cells[i].size());
    };
    widen(t.header);
    for (const auto& r : t.rows) widen(r);
    std::ostringstream out;
    out << t.caption << '\n';
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) out << "  ";
            out << std::string(width[i] - cells[i].size(), ' ') << cells[i];
        }
        out << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    for (const auto& f : t.footnotes) out << "note: " << f << '\n';
    return out.str();
}

}  // namespace rmcoset::tables
