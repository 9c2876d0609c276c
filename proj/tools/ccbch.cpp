// Command-line front end: parameter queries, table reproduction, sweep
// verification and generator-polynomial export.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ccbch/code_builder.hpp"
#include "ccbch/cosets.hpp"
#include "ccbch/formulas.hpp"
#include "ccbch/oracle.hpp"
#include "ccbch/table.hpp"

namespace {

using namespace ccbch;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

struct Emit {
    std::ostream* out = &std::cout;
    std::ofstream file;

    void open(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot open output file: " + path);
        out = &file;
    }
    std::ostream& stream() { return *out; }
};

void render_rows(const std::vector<TableRow>& rows, const std::string& format, std::ostream& os) {
    if (format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& r : rows) arr.push_back(row_to_json(r));
        os << arr.dump(2) << "\n";
    } else if (format == "csv") {
        os << csv_header() << "\n";
        for (const auto& r : rows) os << row_to_csv(r) << "\n";
    } else {
        os << markdown_header() << "\n";
        for (const auto& r : rows) os << row_to_markdown(r) << "\n";
    }
}

int cmd_params(u64 q, u64 m, u64 delta, const std::string& format, const std::string& out_path) {
    CodeFrame f = make_frame(q, m);
    u64 dmax = delta_max(f);
    if (delta < 2 || delta > dmax) {
        std::cerr << "DeltaOutOfRange: delta must satisfy 2 <= delta <= delta_max = " << dmax << "\n";
        return kExitUsage;
    }
    Emit e;
    e.open(out_path);
    render_rows({make_table_row(f, delta)}, format, e.stream());
    return kExitOk;
}

int cmd_table(u64 q, u64 m, std::optional<u64> dmin, std::optional<u64> dmax_flag,
              const std::string& format, const std::string& out_path) {
    CodeFrame f = make_frame(q, m);
    u64 dmax = delta_max(f);
    u64 lo = dmin.value_or(2);
    u64 hi = dmax_flag.value_or(dmax);
    if (lo < 2 || hi > dmax || lo > hi) {
        std::cerr << "DeltaOutOfRange: delta range must lie within [2, " << dmax << "]\n";
        return kExitUsage;
    }
    std::vector<TableRow> rows;
    rows.reserve(hi - lo + 1);
    for (u64 d = lo; d <= hi; ++d) rows.push_back(make_table_row(f, d));
    Emit e;
    e.open(out_path);
    render_rows(rows, format, e.stream());
    return kExitOk;
}

int cmd_verify(u64 q, u64 m, const std::string& level, u64 budget, const std::string& format) {
    CodeFrame f = make_frame(q, m);
    nlohmann::ordered_json report;
    report["schema_version"] = kSchemaVersion;
    report["q"] = q;
    report["m"] = m;
    bool ok = true;

    // level "formulas": full-domain formula/oracle sweep + coset-size scan
    SweepReport sw = sweep(f);
    std::cout << "formulas: sweep delta in [2," << sw.delta_max << "] rows=" << sw.rows.size()
              << " mismatches=" << sw.mismatches;
    if (sw.mismatches > 0) std::cout << " first_mismatch_delta=" << sw.first_mismatch_delta;
    std::cout << " boundary=" << (sw.boundary_ok ? "ok" : "FAIL")
              << " witness=" << (sw.witness_ok ? "ok" : "FAIL") << "\n";
    ok = ok && sw.passed();
    report["sweep"] = {{"delta_max", sw.delta_max},
                       {"rows", sw.rows.size()},
                       {"mismatches", sw.mismatches},
                       {"boundary_ok", sw.boundary_ok},
                       {"witness_ok", sw.witness_ok}};

    if (f.nr <= 10000000ull) {
        CosetSizeScan sc = coset_size_scan(f);
        std::cout << "formulas: coset-size scan over " << sc.sizes.size() << " cosets dichotomy="
                  << (sc.dichotomy_ok ? "ok" : "FAIL") << "\n";
        ok = ok && sc.dichotomy_ok;
        report["coset_scan"] = {{"cosets", sc.sizes.size()}, {"dichotomy_ok", sc.dichotomy_ok}};
    } else {
        std::cout << "formulas: coset-size scan skipped (nr > 10^7)\n";
    }

    bool want_matrix = (level == "matrix" || level == "mindist");
    bool want_mindist = (level == "mindist");

    if (want_matrix) {
        u64 tower_order = detail::upow(f.q, 2 * f.m);
        if (f.n > kMatrixLengthCap || tower_order > field_cap() || tower_order > kLogTableLimit) {
            std::cout << "matrix: CapacityExceeded (needs n <= 512 and tower order <= 2^20); "
                         "formulas level still ran\n";
        } else {
            u64 dmax = delta_max(f);
            bool mat_ok = true;
            for (u64 d = 2; d <= dmax + 1 && mat_ok; ++d) {
                GeneratorPolynomial g = generator_polynomial(f, d);
                auto [quo, rem] = divmod(constacyclic_modulus(g), g.poly);
                (void)quo;
                if (!rem.is_zero()) mat_ok = false;
                DefiningSet t = defining_set(f, d);
                if (g.degree() != t.elements.size()) mat_ok = false;
                MatrixCode mc = matrix_from_generator(g);
                if (check_hermitian_dual_containing_matrix(mc) != is_dual_containing(t)) mat_ok = false;
            }
            std::cout << "matrix: generator division + Hermitian dual-containment agreement "
                      << (mat_ok ? "ok" : "FAIL") << " over delta in [2," << dmax + 1 << "]\n";
            ok = ok && mat_ok;
            report["matrix"] = {{"ok", mat_ok}};
        }
    }

    if (want_mindist) {
        u64 tower_order = detail::upow(f.q, 2 * f.m);
        if (f.n > kMatrixLengthCap || tower_order > kLogTableLimit) {
            std::cout << "mindist: CapacityExceeded; skipped\n";
        } else {
            u64 dmax = delta_max(f);
            bool md_ok = true;
            u64 computed = 0;
            for (u64 d = 2; d <= dmax; ++d) {
                GeneratorPolynomial g = generator_polynomial(f, d);
                MatrixCode mc = matrix_from_generator(g);
                auto dist = min_distance_exhaustive(mc, budget);
                if (!dist) continue;
                ++computed;
                std::cout << "mindist: delta=" << d << " [" << mc.n << "," << mc.k << "]_" << f.q * f.q
                          << " d=" << *dist << (*dist >= d ? "" : " FAIL") << "\n";
                if (*dist < d) md_ok = false;
            }
            if (computed == 0) std::cout << "mindist: no instance within budget\n";
            ok = ok && md_ok;
            report["mindist"] = {{"instances", computed}, {"ok", md_ok}};
        }
    }

    report["passed"] = ok;
    if (format == "json") std::cout << report.dump(2) << "\n";
    std::cout << (ok ? "PASS" : "FAIL") << "\n";
    return ok ? kExitOk : kExitVerifyFail;
}

int cmd_genpoly(u64 q, u64 m, u64 delta, const std::string& out_path) {
    CodeFrame f = make_frame(q, m);
    GeneratorPolynomial g = generator_polynomial(f, delta);
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["q"] = f.q;
    j["m"] = f.m;
    j["n"] = f.n;
    j["delta"] = delta;
    j["tower"] = {{"p", f.p},
                  {"e", 2 * f.m * f.s},
                  {"order", g.tower->order()},
                  {"modulus", g.tower->modulus()}};
    j["eta_log"] = g.eta_log;
    j["subfield_order"] = f.q * f.q;
    j["subfield_generator_log"] = (g.tower->order() - 1) / (f.q * f.q - 1);
    j["degree"] = g.degree();
    j["coeff_logs"] = g.coeff_logs; // log base the embedded F_{q^2} generator; -1 for zero
    nlohmann::ordered_json vecs = nlohmann::ordered_json::array();
    for (u64 c : g.poly.coeffs()) vecs.push_back(g.tower->unpack(c));
    j["coeff_vectors"] = vecs; // coefficient vectors over F_p in the tower basis
    Emit e;
    e.open(out_path);
    e.stream() << j.dump(2) << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"narrow-sense Hermitian dual-containing constacyclic BCH codes of length "
                 "(q^{2m}-1)/(q+1) and the derived quantum codes"};
    app.require_subcommand(1);

    u64 q = 0, m = 0, delta = 0, budget = 100000000ull;
    std::optional<u64> dmin, dmax_flag;
    std::string format = "json", out_path, level = "formulas";

    auto* params = app.add_subcommand("params", "one parameter row for (q, m, delta)");
    params->add_option("--q", q)->required();
    params->add_option("--m", m)->required();
    params->add_option("--delta", delta)->required();
    params->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "markdown"}));
    params->add_option("--out", out_path);

    auto* table = app.add_subcommand("table", "all rows for a frame over a delta range");
    table->add_option("--q", q)->required();
    table->add_option("--m", m)->required();
    table->add_option("--delta-min", dmin);
    table->add_option("--delta-max", dmax_flag);
    table->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "markdown"}));
    table->add_option("--out", out_path);

    auto* verify = app.add_subcommand("verify", "formula/oracle audits for a frame");
    verify->add_option("--q", q)->required();
    verify->add_option("--m", m)->required();
    verify->add_option("--level", level)->check(CLI::IsMember({"formulas", "matrix", "mindist"}));
    verify->add_option("--budget", budget);
    verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "markdown"}));

    auto* genpoly = app.add_subcommand("genpoly", "generator polynomial export");
    genpoly->add_option("--q", q)->required();
    genpoly->add_option("--m", m)->required();
    genpoly->add_option("--delta", delta)->required();
    genpoly->add_option("--out", out_path);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (params->parsed()) return cmd_params(q, m, delta, format, out_path);
        if (table->parsed()) return cmd_table(q, m, dmin, dmax_flag, format, out_path);
        if (verify->parsed()) return cmd_verify(q, m, level, budget, format);
        if (genpoly->parsed()) return cmd_genpoly(q, m, delta, out_path);
    } catch (const ccbch::error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
