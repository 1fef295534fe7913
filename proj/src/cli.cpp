#include "cycloskew/cli.hpp"

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "cycloskew/arith.hpp"
#include "cycloskew/constructions.hpp"
#include "cycloskew/cyclotomy.hpp"
#include "cycloskew/error.hpp"
#include "cycloskew/parallel.hpp"
#include "cycloskew/serialize.hpp"
#include "cycloskew/tables.hpp"

namespace cycloskew {

namespace {

struct FieldArgs {
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    std::uint64_t q = 0;
    std::vector<std::uint32_t> poly;
    std::optional<Elem> generator;
    std::string spec;

    void add_to(CLI::App& app)
    {
        app.add_option("--p", p, "characteristic");
        app.add_option("--m", m, "degree");
        app.add_option("--q", q, "field order, in place of --p/--m");
        app.add_option("--poly", poly, "monic primitive polynomial, constant term first")->delimiter(',');
        app.add_option("--gen", generator, "primitive element code");
        app.add_option("--field", spec, "field spec 'p,m,poly=[...],generator=g'");
    }

    FieldPtr build() const
    {
        if (!spec.empty()) {
            return Field::build(FieldSpec::parse(spec));
        }
        std::uint32_t pp = p;
        std::uint32_t mm = m;
        if (q != 0) {
            const auto pm = arith::as_prime_power(q);
            if (!pm) {
                throw Error(ErrorCode::NotPrimePower, std::to_string(q) + " is not a prime power");
            }
            pp = static_cast<std::uint32_t>(pm->first);
            mm = pm->second;
        }
        if (pp == 0) {
            throw Error(ErrorCode::ParseError, "--p, --q or --field is required");
        }
        return Field::build(pp, mm, poly.empty() ? std::nullopt : std::optional(poly), generator);
    }
};

// Inline JSON when it starts with '[', otherwise a file path.
Json read_json_arg(const std::string& arg)
{
    std::string text = arg;
    if (arg.empty() || arg.front() != '[') {
        std::ifstream in(arg);
        if (!in) {
            throw Error(ErrorCode::IOError, "cannot read '" + arg + "'");
        }
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("bad JSON: ") + e.what());
    }
}

std::vector<Elem> as_codes(const Json& j)
{
    try {
        return j.get<std::vector<Elem>>();
    } catch (const Json::exception& e) {
        throw Error(ErrorCode::ParseError, std::string("expected an array of element codes: ") + e.what());
    }
}

Json registry_json()
{
    Json out = Json::array();
    for (const auto& r : registry()) {
        out.push_back({{"id", r.id},
                       {"name", r.name},
                       {"statement", r.statement},
                       {"conditions", r.conditions},
                       {"formulas", r.formulas}});
    }
    return out;
}

int cmd_tables(int table, std::uint64_t bound, std::uint64_t oracle_cap, bool json, std::ostream& out,
               std::ostream& err)
{
    const TableReport report = table == 1 ? table1(bound, oracle_cap) : table2(bound, oracle_cap);
    if (json) {
        Json rows = Json::array();
        for (const auto& row : report.rows) {
            rows.push_back({{"q", row.q},
                            {"representation", row.representation},
                            {"params", format_params(Kind::SkewPDS, row.params)},
                            {"oracle_verified", row.oracle_verified},
                            {"trivial", row.trivial},
                            {"note", row.note}});
        }
        out << Json{{"table", table}, {"bound", bound}, {"rows", rows}, {"problems", report.problems}}.dump(2)
            << "\n";
    } else {
        for (const auto& row : report.rows) {
            out << format_row(row) << "\n";
        }
        out << report.rows.size() << " rows\n";
    }
    for (const auto& p : report.problems) {
        err << "mismatch: " << p << "\n";
    }
    return report.ok() ? 0 : 1;
}

int cmd_scan(const ScanOptions& options, const std::string& out_path, std::ostream& out, std::ostream& err)
{
    const auto found = enumerate_applicable(options);
    const std::string stamp = utc_timestamp();
    std::ofstream file;
    if (!out_path.empty()) {
        file.open(out_path, std::ios::binary);
        if (!file) {
            throw Error(ErrorCode::IOError, "cannot write '" + out_path + "'");
        }
    }
    std::ostream& sink = out_path.empty() ? out : file;
    std::size_t mismatches = 0;
    std::size_t verified = 0;
    for (const auto& c : found) {
        sink << catalog_line(c, stamp) << '\n';
        mismatches += c.hard_mismatches();
        verified += c.oracle_verified ? 1 : 0;
    }
    err << found.size() << " constructions, " << verified << " oracle-verified, " << mismatches
        << " prediction mismatches\n";
    return mismatches == 0 ? 0 : 1;
}

int cmd_verify(const FieldArgs& fa, const std::string& sets_arg, const std::string& mode,
               const std::string& reference_arg, std::ostream& out)
{
    const FieldPtr field = fa.build();
    const Json sets = read_json_arg(sets_arg);
    if (!sets.is_array()) {
        throw Error(ErrorCode::ParseError, "sets must be a JSON array of arrays");
    }
    Family family;
    for (const auto& s : sets) {
        family.push_back(normalize_set(*field, as_codes(s)));
    }
    std::optional<ElemSet> reference;
    if (!reference_arg.empty()) {
        reference = normalize_set(*field, as_codes(read_json_arg(reference_arg)));
    }
    auto single = [&]() -> const ElemSet& {
        if (family.size() != 1) {
            throw Error(ErrorCode::ParseError, "mode '" + mode + "' takes exactly one set");
        }
        return family.front();
    };
    Certificate cert;
    if (mode == "pds") {
        cert = check_pds(*field, single());
    } else if (mode == "skew") {
        cert = check_skew_pds(*field, single());
    } else if (mode == "ads") {
        cert = check_ads(*field, single());
    } else if (mode == "internal") {
        cert = check_family(*field, family, FamilyMode::Internal, reference);
    } else if (mode == "external") {
        cert = check_family(*field, family, FamilyMode::External, reference);
    } else {
        throw Error(ErrorCode::UnknownMode, "unknown mode '" + mode + "'");
    }
    Json j = to_json(cert);
    if (cert.kind == Kind::SkewPDS || cert.kind == Kind::TrivialSkewPDS) {
        j["complement_law"] = complement_law_holds(*field, cert);
    }
    out << j.dump(2) << "\n";
    return cert.kind == Kind::None ? 1 : 0;
}

int cmd_cycnum(const FieldArgs& fa, std::uint32_t e, const std::string& method, std::ostream& out,
               std::ostream& err)
{
    const FieldPtr field = fa.build();
    if (e != 2 && e != 4 && e != 8) {
        throw Error(ErrorCode::OrderDoesNotDivide, "e must be 2, 4 or 8");
    }
    if ((field->order() - 1) % e != 0) {
        throw Error(ErrorCode::OrderDoesNotDivide,
                    std::to_string(e) + " does not divide q-1=" + std::to_string(field->order() - 1));
    }
    if (method == "brute-force") {
        out << format_table(cyclotomic_table_bruteforce(*field, e));
        return 0;
    }
    const CycNumTable closed = cyclotomic_numbers_closed_form(*field, e);
    out << format_table(closed);
    if (method != "compare") {
        return 0;
    }
    const CycNumTable brute = cyclotomic_table_bruteforce(*field, e);
    std::size_t bad = 0;
    for (std::uint32_t i = 0; i < e; ++i) {
        for (std::uint32_t j = 0; j < e; ++j) {
            if (closed.at(i, j) != brute.at(i, j)) {
                ++bad;
                err << "(" << i << "," << j << "): closed form " << closed.at(i, j) << ", brute force "
                    << brute.at(i, j) << "\n";
            }
        }
    }
    out << (bad == 0 ? "agreement" : "DISAGREEMENT") << " (" << e * e - bad << "/" << e * e << " entries)\n";
    return bad == 0 ? 0 : 1;
}

// Vacuous claims carry a None certificate; recompute those by claim mode instead.
bool recheck(const Field& field, const ClaimResult& r)
{
    const Certificate& cert = *r.certificate;
    if (cert.kind != Kind::None) {
        return reverify(field, cert);
    }
    const auto mode = r.claim.mode == ClaimMode::External ? FamilyMode::External : FamilyMode::Internal;
    const Certificate again = check_family(field, cert.sets, mode);
    return again.kind == Kind::None && again.sets == cert.sets && r.status == ClaimStatus::Verified &&
           (mode == FamilyMode::Internal ? family_internal(field, cert.sets)
                                          : family_external(field, cert.sets))
                   .total == 0;
}

int cmd_catalog_check(const std::string& path, std::size_t sample, std::ostream& out, std::ostream& err)
{
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::IOError, "cannot read '" + path + "'");
    }
    std::vector<Construction> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty()) {
            entries.push_back(parse_catalog_line(line));
        }
    }
    std::vector<std::size_t> order(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    if (sample > 0 && sample < order.size()) {
        std::mt19937_64 rng(order.size());
        std::shuffle(order.begin(), order.end(), rng);
        order.resize(sample);
    }
    std::size_t checked = 0;
    std::size_t failed = 0;
    for (std::size_t i : order) {
        const Construction& c = entries[i];
        if (!c.oracle_verified || !c.field) {
            continue;
        }
        const FieldPtr field = Field::build(*c.field);
        for (const auto& r : c.claims) {
            if (!r.certificate) {
                continue;
            }
            ++checked;
            if (!recheck(*field, r)) {
                ++failed;
                err << "re-verification failed: " << c.recipe << " q=" << c.q << " " << r.claim.label << "\n";
            }
        }
    }
    out << entries.size() << " entries, " << checked << " certificates re-verified, " << failed << " failed\n";
    return failed == 0 ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Cyclotomic skew partial difference sets: construction and certification"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned jobs = 0;
    app.add_option("--jobs,-j", jobs, "worker threads (CYCLOSKEW_JOBS takes precedence)");

    auto* tables = app.add_subcommand("tables", "order-4 (1) and order-8 (2) skew PDS tables, checked against reference rows");
    int table_id = 1;
    std::uint64_t bound = 10000;
    std::optional<std::uint64_t> oracle_cap;
    bool tables_json = false;
    tables->add_option("table", table_id, "1 or 2")->required()->check(CLI::IsMember({1, 2}));
    tables->add_option("bound", bound, "largest q")->required();
    tables->add_option("--oracle-cap", oracle_cap, "certify rows with q up to this (default 10^4 / 10^5)");
    tables->add_flag("--json", tables_json);

    auto* scan = app.add_subcommand("scan", "apply recipes to every prime power in a range");
    ScanOptions scan_opts;
    std::vector<std::string> scan_recipes;
    std::string scan_out;
    scan->add_option("q_min", scan_opts.q_min)->required();
    scan->add_option("q_max", scan_opts.q_max)->required()->check(CLI::Range(std::uint64_t{0}, kMaxFieldOrder));
    scan->add_option("recipes", scan_recipes, "recipe ids, or 'all'");
    scan->add_option("--certify-cap", scan_opts.certify_cap, "oracle-certify q up to this");
    scan->add_option("--field-cap", scan_opts.field_cap, "build fields up to this without certifying");
    scan->add_option("--out,-o", scan_out, "JSON-lines catalog (stdout if omitted)");

    auto* verify = app.add_subcommand("verify", "certify user-supplied sets");
    FieldArgs verify_field;
    verify_field.add_to(*verify);
    std::string sets_arg;
    std::string mode;
    std::string reference_arg;
    verify->add_option("--sets", sets_arg, "JSON array of arrays of codes, inline or a file")->required();
    verify->add_option("--mode", mode, "pds|skew|ads|internal|external")->required();
    verify->add_option("--reference", reference_arg, "relative set T, inline JSON or a file");

    auto* cycnum = app.add_subcommand("cycnum", "cyclotomic numbers of order e");
    FieldArgs cyc_field;
    cyc_field.add_to(*cycnum);
    std::uint32_t e = 4;
    cycnum->add_option("--e", e, "order: 2, 4 or 8")->required();
    auto* method_group = cycnum->add_option_group("method");
    bool closed_form = false;
    bool brute = false;
    bool compare = false;
    method_group->add_flag("--closed-form", closed_form);
    method_group->add_flag("--brute-force", brute);
    method_group->add_flag("--compare", compare);
    method_group->require_option(0, 1);

    auto* catalog = app.add_subcommand("catalog", "catalog utilities");
    catalog->require_subcommand(1);
    auto* check = catalog->add_subcommand("check", "re-verify oracle-verified entries");
    std::string catalog_path;
    std::size_t sample = 0;
    check->add_option("file", catalog_path)->required();
    check->add_option("--sample", sample, "check a random subset of this size");
    auto* reg = catalog->add_subcommand("registry", "dump the recipe registry as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (jobs > 0) {
            parallel::set_jobs(jobs);
        }
        if (*tables) {
            const std::uint64_t cap = oracle_cap.value_or(table_id == 1 ? 10000 : 100000);
            return cmd_tables(table_id, bound, cap, tables_json, out, err);
        }
        if (*scan) {
            for (const auto& r : scan_recipes) {
                if (r != "all") {
                    scan_opts.recipes.push_back(r);
                }
            }
            return cmd_scan(scan_opts, scan_out, out, err);
        }
        if (*verify) {
            return cmd_verify(verify_field, sets_arg, mode, reference_arg, out);
        }
        if (*cycnum) {
            const std::string method = brute ? "brute-force" : compare ? "compare" : "closed-form";
            return cmd_cycnum(cyc_field, e, method, out, err);
        }
        if (*check) {
            return cmd_catalog_check(catalog_path, sample, out, err);
        }
        if (*reg) {
            out << registry_json().dump(2) << "\n";
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace cycloskew
