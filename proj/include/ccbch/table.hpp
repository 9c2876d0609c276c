#ifndef CCBCH_TABLE_HPP
#define CCBCH_TABLE_HPP

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ccbch/code_builder.hpp"
#include "ccbch/formulas.hpp"

namespace ccbch {

constexpr const char* kSchemaVersion = "1";

/// One rendered parameter row: classical and quantum code alongside the
/// counting report that produced them.
struct TableRow {
    u64 q = 0, m = 0, n = 0, delta = 0;
    u64 classical_k = 0;
    u64 quantum_k = 0;
    u64 script_n = 0, n1 = 0, n2 = 0, i_star = 0, delta_max = 0;
    std::string branch;
    bool dual_containing = false;
};

inline TableRow make_table_row(const CodeFrame& f, u64 delta) {
    FormulaReport rep = script_n(f, delta);
    TableRow row;
    row.q = f.q;
    row.m = f.m;
    row.n = f.n;
    row.delta = delta;
    row.script_n = rep.script_n;
    row.n1 = rep.n1;
    row.n2 = rep.n2;
    row.i_star = rep.i_star;
    row.delta_max = rep.delta_max;
    row.branch = rep.branch_label();
    row.dual_containing = true; // delta <= delta_max enforced by script_n
    row.classical_k = f.n - rep.script_n;
    row.quantum_k = f.n - 2 * rep.script_n;
    return row;
}

inline nlohmann::ordered_json row_to_json(const TableRow& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["q"] = r.q;
    j["m"] = r.m;
    j["n"] = r.n;
    j["delta"] = r.delta;
    j["classical"] = {{"n", r.n}, {"k", r.classical_k}, {"d_lower", r.delta}};
    j["quantum"] = {{"n", r.n}, {"k", r.quantum_k}, {"d_lower", r.delta}};
    j["counts"] = {{"N", r.script_n}, {"N1", r.n1}, {"N2", r.n2}, {"i_star", r.i_star},
                   {"delta_max", r.delta_max}};
    j["branch"] = r.branch;
    j["dual_containing"] = r.dual_containing;
    return j;
}

inline std::string csv_header() {
    return "q,m,n,delta,classical_n,classical_k,classical_d_lower,quantum_n,quantum_k,"
           "quantum_d_lower,N,N1,N2,i_star,delta_max,branch,dual_containing";
}

inline std::string row_to_csv(const TableRow& r) {
    std::ostringstream os;
    os << r.q << ',' << r.m << ',' << r.n << ',' << r.delta << ',' << r.n << ',' << r.classical_k
       << ',' << r.delta << ',' << r.n << ',' << r.quantum_k << ',' << r.delta << ',' << r.script_n
       << ',' << r.n1 << ',' << r.n2 << ',' << r.i_star << ',' << r.delta_max << ',' << r.branch
       << ',' << (r.dual_containing ? "true" : "false");
    return os.str();
}

inline std::string markdown_header() {
    return "| q | m | delta | classical code | quantum code | N | N1 | N2 | branch |\n"
           "|---|---|-------|----------------|--------------|---|----|----|--------|";
}

inline std::string row_to_markdown(const TableRow& r) {
    std::ostringstream os;
    os << "| " << r.q << " | " << r.m << " | " << r.delta << " | [" << r.n << "," << r.classical_k
       << ",>=" << r.delta << "]_" << r.q * r.q << " | [[" << r.n << "," << r.quantum_k << ",>="
       << r.delta << "]]_" << r.q << " | " << r.script_n << " | " << r.n1 << " | " << r.n2 << " | "
       << r.branch << " |";
    return os.str();
}

} // namespace ccbch

#endif
