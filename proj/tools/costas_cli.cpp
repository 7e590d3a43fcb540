// Command-line front end: family maxima tables, bound evaluation, theorem
// verification sweeps, grid dumps and permutation checks. All results go
// to stdout (machine-clean, deterministic); diagnostics and progress go
// to stderr. Exit codes: 0 success / all verdicts hold, 1 verification or
// property failure, 2 usage or input error.

#include <algorithm>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "costas/costas.hpp"

namespace {

using costas::FamilyId;
using costas::PrimeContext;
using costas::ShiftFilter;
using costas::TextTable;
using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::uint64_t lo = 5;
    std::uint64_t hi = 277;
    std::vector<FamilyId> families;
    ShiftFilter filter = ShiftFilter::all;
    std::string format = "markdown";
    unsigned workers = 0;  // 0 = auto
    bool table4_compat = false;
    bool progress = false;
    bool inject_fault = false;  // test fixture: corrupts empirical values
};

std::pair<std::uint64_t, std::uint64_t> parse_prime_range(const std::string& text) {
    const auto dots = text.find("..");
    std::uint64_t lo = 0, hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoull(text);
        } else {
            lo = std::stoull(text.substr(0, dots));
            hi = std::stoull(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--primes", "expected LO..HI or a single prime");
    }
    if (lo < 5) throw CLI::ValidationError("--primes", "range must start at 5 or above");
    if (hi < lo) throw CLI::ValidationError("--primes", "upper end below lower end");
    return {lo, hi};
}

std::vector<FamilyId> parse_families(const std::string& list) {
    std::vector<FamilyId> out;
    std::size_t pos = 0;
    while (pos <= list.size()) {
        const auto comma = list.find(',', pos);
        const std::string name = list.substr(
            pos, comma == std::string::npos ? std::string::npos : comma - pos);
        const auto id = costas::family_from_string(name);
        if (!id) throw CLI::ValidationError("--families", "unknown family '" + name + "'");
        if (std::find(out.begin(), out.end(), *id) == out.end()) out.push_back(*id);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    // canonical column order regardless of how the user listed them
    std::sort(out.begin(), out.end(),
              [](FamilyId a, FamilyId b) { return static_cast<int>(a) < static_cast<int>(b); });
    return out;
}

unsigned parse_workers(const std::string& text) {
    if (text == "auto") return 0;
    try {
        const unsigned long w = std::stoul(text);
        if (w < 1) throw std::out_of_range("zero");
        return static_cast<unsigned>(w);
    } catch (const std::exception&) {
        throw CLI::ValidationError("--workers", "expected a positive integer or 'auto'");
    }
}

void warn_large_range(const RunConfig& cfg) {
    if (cfg.hi > 277) {
        std::cerr << "warning: primes above 277 make the exhaustive scans expensive; "
                     "expect long runtimes\n";
    }
}

void progress_note(const RunConfig& cfg, std::uint64_t p) {
    if (cfg.progress) std::cerr << "p=" << p << " done\n";
}

void emit(const RunConfig& cfg, const TextTable& table, const json& as_json) {
    if (cfg.format == "csv") {
        std::cout << costas::render_csv(table);
    } else if (cfg.format == "json") {
        std::cout << as_json.dump(2) << '\n';
    } else {
        std::cout << costas::render_markdown(table);
    }
}

// --- table ------------------------------------------------------------

int cmd_table(const RunConfig& cfg) {
    warn_large_range(cfg);
    TextTable table;
    table.columns.push_back("p");
    for (FamilyId id : cfg.families)
        table.columns.push_back("C(" + std::string(costas::to_string(id)) + ")");

    json rows = json::array();
    for (std::uint64_t p : costas::primes_in_range(cfg.lo, cfg.hi)) {
        const PrimeContext ctx = costas::build_prime_context(p);
        std::vector<std::string> row{std::to_string(p)};
        json jrow;
        jrow["p"] = p;
        for (FamilyId id : cfg.families) {
            const std::string key = "C(" + std::string(costas::to_string(id)) + ")";
            if (!costas::family_enumerable(ctx, id)) {
                row.push_back("-");
                jrow[key] = nullptr;
                continue;
            }
            const auto report =
                costas::family_max(ctx, id, cfg.filter, std::nullopt, cfg.workers);
            row.push_back(std::to_string(report.value));
            jrow[key] = report.value;
        }
        table.rows.push_back(std::move(row));
        rows.push_back(std::move(jrow));
        progress_note(cfg, p);
    }

    json out;
    out["command"] = "table";
    out["primes"] = {cfg.lo, cfg.hi};
    out["filter"] = costas::to_string(cfg.filter);
    json fams = json::array();
    for (FamilyId id : cfg.families) fams.push_back(std::string(costas::to_string(id)));
    out["families"] = fams;
    out["rows"] = rows;
    emit(cfg, table, out);
    return kExitOk;
}

// --- bounds -----------------------------------------------------------

int cmd_bounds(const RunConfig& cfg) {
    warn_large_range(cfg);
    TextTable table;
    json rows = json::array();

    if (cfg.table4_compat) {
        table.columns = {"p", "alpha", "value"};
        for (std::uint64_t p : costas::primes_in_range(std::max(cfg.lo, std::uint64_t{7}), cfg.hi)) {
            const PrimeContext ctx = costas::build_prime_context(p);
            const std::uint64_t alpha = ctx.primitive_roots.front();
            if (!costas::table4_nontrivial(ctx, alpha)) continue;
            const auto value = costas::table4_value(ctx, alpha);
            table.rows.push_back({std::to_string(p), std::to_string(alpha),
                                  std::to_string(value)});
            rows.push_back({{"p", p}, {"alpha", alpha}, {"value", value}});
        }
    } else {
        table.columns = {"p",
                         "alpha_min",
                         "alpha_max",
                         "DG_Wp_V0",
                         "GW_Wp_VNZ",
                         "THM1_Wpel(alpha_min)",
                         "THM1_Wpel(alpha_max)",
                         "ARD_Pp_00",
                         "ARD_Pp_UNZ_V0",
                         "THM2_Pp_U0_VNZ",
                         "THM4_PWp_V0",
                         "Sidon(n)"};
        for (std::uint64_t p : costas::primes_in_range(cfg.lo, cfg.hi)) {
            const PrimeContext ctx = costas::build_prime_context(p);
            const std::uint64_t amin = ctx.primitive_roots.front();
            const std::uint64_t amax = ctx.primitive_roots.back();
            const std::vector<double> vals = {
                costas::bound_dg_wp_v0(ctx),
                costas::bound_gw_wp_vnz(ctx),
                costas::bound_thm1_wpel_family(ctx, amin),
                costas::bound_thm1_wpel_family(ctx, amax),
                costas::bound_ard_pp(ctx, costas::ArdCase::both_zero),
                costas::bound_ard_pp(ctx, costas::ArdCase::u_nonzero_v_zero),
                costas::bound_thm2_pp_u0_vnz(ctx),
                costas::bound_thm4_pwp_v0(ctx),
                costas::sidon_bound(ctx.n)};
            std::vector<std::string> row{std::to_string(p), std::to_string(amin),
                                         std::to_string(amax)};
            json jrow;
            jrow["p"] = p;
            jrow["alpha_min"] = amin;
            jrow["alpha_max"] = amax;
            for (std::size_t i = 0; i < vals.size(); ++i) {
                row.push_back(costas::format_value(vals[i]));
                jrow[table.columns[i + 3]] = vals[i];
            }
            table.rows.push_back(std::move(row));
            rows.push_back(std::move(jrow));
        }
    }

    json out;
    out["command"] = "bounds";
    out["primes"] = {cfg.lo, cfg.hi};
    out["table4_compat"] = cfg.table4_compat;
    out["rows"] = rows;
    emit(cfg, table, out);
    return kExitOk;
}

// --- verify -----------------------------------------------------------

bool recheck_holds(const costas::BoundVerdict& v) {
    if (v.relation == costas::Relation::equal)
        return static_cast<double>(v.empirical_value) == v.bound_value;
    return static_cast<double>(v.empirical_value) <= v.bound_value + 1e-9;
}

int cmd_verify(const RunConfig& cfg) {
    warn_large_range(cfg);
    TextTable table;
    table.columns = {"p",       "theorem",  "family", "filter", "include_auto",
                     "bound",   "empirical", "relation", "holds",  "witness_a",
                     "witness_b", "u",       "v"};
    json primes = json::array();
    bool all_hold = true;

    for (std::uint64_t p : costas::primes_in_range(cfg.lo, cfg.hi)) {
        const PrimeContext ctx = costas::build_prime_context(p);
        json verdicts = json::array();
        for (costas::TheoremId id : costas::applicable_theorems(ctx)) {
            costas::BoundVerdict v = costas::verify_theorem(ctx, id, cfg.workers);
            if (cfg.inject_fault) {
                v.empirical_value += 1;
                v.holds = recheck_holds(v);
            }
            all_hold = all_hold && v.holds;
            const auto& w = v.witness;
            table.rows.push_back({std::to_string(p),
                                  std::string(costas::to_string(id)),
                                  std::string(costas::to_string(v.family)),
                                  std::string(costas::to_string(v.filter)),
                                  v.include_auto ? "true" : "false",
                                  costas::format_value(v.bound_value),
                                  std::to_string(v.empirical_value),
                                  std::string(costas::to_string(v.relation)),
                                  v.holds ? "true" : "false",
                                  w ? w->a : "",
                                  w ? w->b : "",
                                  w ? std::to_string(w->u) : "",
                                  w ? std::to_string(w->v) : ""});
            json jv;
            jv["theorem_id"] = std::string(costas::to_string(id));
            jv["p"] = p;
            jv["family"] = std::string(costas::to_string(v.family));
            jv["filter"] = std::string(costas::to_string(v.filter));
            jv["include_auto"] = v.include_auto;
            jv["bound_value"] = v.bound_value;
            jv["empirical_value"] = v.empirical_value;
            jv["relation_claimed"] = std::string(costas::to_string(v.relation));
            jv["holds"] = v.holds;
            if (w) {
                jv["witness"] = {{"a", w->a}, {"b", w->b}, {"u", w->u}, {"v", w->v}};
            } else {
                jv["witness"] = nullptr;
            }
            verdicts.push_back(std::move(jv));
        }
        primes.push_back({{"p", p}, {"verdicts", verdicts}});
        progress_note(cfg, p);
    }

    json out;
    out["command"] = "verify";
    out["primes"] = {cfg.lo, cfg.hi};
    out["all_hold"] = all_hold;
    out["results"] = primes;
    emit(cfg, table, out);
    return all_hold ? kExitOk : kExitVerificationFailed;
}

// --- grid -------------------------------------------------------------

struct MemberSpec {
    std::string text;
    std::optional<costas::Permutation> literal;
    std::optional<costas::ConstructionLabel> label;
};

MemberSpec parse_member_spec(const std::string& text) {
    MemberSpec spec;
    spec.text = text;
    if (text.find(',') != std::string::npos) {
        spec.literal = costas::parse_permutation(text);
        return spec;
    }
    const auto colon = text.find(':');
    if (colon == std::string::npos)
        throw std::domain_error("member spec must be 'welch-exp:A', 'welch-log:A', "
                                "'power:D' or a comma-separated permutation");
    const std::string kind = text.substr(0, colon);
    std::uint64_t param = 0;
    try {
        param = std::stoull(text.substr(colon + 1));
    } catch (const std::exception&) {
        throw std::domain_error("member spec parameter must be an integer");
    }
    using Kind = costas::ConstructionLabel::Kind;
    if (kind == "welch-exp") {
        spec.label = {Kind::welch_exp, param};
    } else if (kind == "welch-log") {
        spec.label = {Kind::welch_log, param};
    } else if (kind == "power") {
        spec.label = {Kind::power, param};
    } else {
        throw std::domain_error("unknown member spec kind '" + kind + "'");
    }
    return spec;
}

costas::Permutation realize_member(const MemberSpec& spec,
                                   const std::optional<PrimeContext>& ctx) {
    if (spec.literal) return *spec.literal;
    if (!ctx) throw std::domain_error("constructed member specs require --p");
    using Kind = costas::ConstructionLabel::Kind;
    switch (spec.label->kind) {
        case Kind::welch_exp: return costas::welch_exp(*ctx, spec.label->param);
        case Kind::welch_log: return costas::welch_log(*ctx, spec.label->param);
        case Kind::power: return costas::power_perm(*ctx, spec.label->param);
    }
    throw std::domain_error("unreachable member kind");
}

int cmd_grid(const RunConfig& cfg, std::uint64_t p_arg, const std::string& a_text,
             const std::string& b_text) {
    const MemberSpec sa = parse_member_spec(a_text);
    const MemberSpec sb = parse_member_spec(b_text);
    std::optional<PrimeContext> ctx;
    if (p_arg != 0) ctx = costas::build_prime_context(p_arg);
    const costas::Permutation fa = realize_member(sa, ctx);
    const costas::Permutation fb = realize_member(sb, ctx);
    const costas::CorrelationGrid grid = costas::correlation_grid(fa, fb);
    const int n = grid.order();

    TextTable table;
    table.columns.push_back("v\\u");
    for (int u = -(n - 1); u <= n - 1; ++u)
        table.columns.push_back(std::to_string(u));
    for (int v = -(n - 1); v <= n - 1; ++v) {
        std::vector<std::string> row{std::to_string(v)};
        for (int u = -(n - 1); u <= n - 1; ++u) {
            std::string cell = std::to_string(grid.at(u, v));
            if (u == 0 && v == 0 && cfg.format != "csv") cell = "(" + cell + ")";
            row.push_back(std::move(cell));
        }
        table.rows.push_back(std::move(row));
    }

    json out;
    out["command"] = "grid";
    out["a"] = a_text;
    out["b"] = b_text;
    out["order"] = n;
    out["orientation"] = {{"columns", "u"}, {"rows", "v"}};
    out["shift_range"] = {-(n - 1), n - 1};
    out["center"] = {0, 0};
    json counts = json::array();
    for (int v = -(n - 1); v <= n - 1; ++v) {
        json line = json::array();
        for (int u = -(n - 1); u <= n - 1; ++u) line.push_back(grid.at(u, v));
        counts.push_back(std::move(line));
    }
    out["counts"] = counts;

    if (cfg.format == "markdown") {
        std::cout << "grid: " << a_text << " vs " << b_text
                  << "  (u: columns, v: rows; center (0,0) in parentheses)\n";
    }
    emit(cfg, table, out);
    return kExitOk;
}

// --- costas-check -----------------------------------------------------

int cmd_costas_check(const RunConfig& cfg, const std::string& literal) {
    const costas::Permutation f = costas::parse_permutation(literal);
    const bool by_grid = costas::is_costas_grid(f);
    const bool by_triangle = costas::is_costas_difference_triangle(f);
    const auto fixed = costas::fixed_points(f);
    const bool fixed_golomb = costas::is_golomb_ruler(fixed);

    std::string fixed_text;
    for (std::size_t i = 0; i < fixed.size(); ++i) {
        if (i > 0) fixed_text += ',';
        fixed_text += std::to_string(fixed[i]);
    }

    if (cfg.format == "json") {
        json out;
        out["command"] = "costas-check";
        out["permutation"] = literal;
        out["order"] = f.order();
        out["costas_grid"] = by_grid;
        out["costas_difference_triangle"] = by_triangle;
        out["checkers_agree"] = by_grid == by_triangle;
        out["fixed_points"] = fixed;
        out["fixed_points_golomb_ruler"] = fixed_golomb;
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << "permutation: " << costas::to_string(f) << '\n'
                  << "order: " << f.order() << '\n'
                  << "costas (grid): " << (by_grid ? "yes" : "no") << '\n'
                  << "costas (difference-triangle): " << (by_triangle ? "yes" : "no")
                  << '\n'
                  << "checkers agree: " << (by_grid == by_triangle ? "yes" : "no") << '\n'
                  << "fixed points: " << (fixed.empty() ? "none" : fixed_text) << '\n'
                  << "fixed points form golomb ruler: " << (fixed_golomb ? "yes" : "no")
                  << '\n';
    }
    return by_grid ? kExitOk : kExitVerificationFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Costas-array family construction, exhaustive cross-correlation "
                 "search and bound verification over prime fields"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string primes_text = "5..277";
    std::string families_text;
    std::string filter_text = "all";
    std::string workers_text = "auto";
    std::string format_help = "output format: one of {csv, markdown, json}";
    const auto format_check = CLI::IsMember({"csv", "markdown", "json"});

    auto add_common = [&](CLI::App* cmd, bool with_workers) {
        cmd->add_option("--primes", primes_text, "inclusive prime range LO..HI");
        cmd->add_option("--format", cfg.format, format_help)->check(format_check);
        if (with_workers)
            cmd->add_option("--workers", workers_text, "worker threads, or 'auto'");
        cmd->add_flag("--progress", cfg.progress, "report per-prime progress on stderr");
    };

    CLI::App* table_cmd =
        app.add_subcommand("table", "family maxima, one row per prime");
    add_common(table_cmd, true);
    table_cmd->add_option("--families", families_text,
                          "comma-separated families from {Wp,Wpl,Wpel,Pp,PWp,PWpl}");
    table_cmd->add_option("--filter", filter_text,
                          "restrict shifts: all, v_zero, u_zero, v_nonzero, "
                          "u_nonzero_v_zero, u_zero_v_nonzero, origin_only, exclude_origin");

    CLI::App* bounds_cmd =
        app.add_subcommand("bounds", "closed-form bound values, one row per prime");
    add_common(bounds_cmd, false);
    bounds_cmd->add_flag("--table4-compat", cfg.table4_compat,
                         "floor convention and nontrivial-row selection of the "
                         "published mixed-family bound listing");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "check every applicable bound against the exhaustive maxima");
    add_common(verify_cmd, true);
    verify_cmd->add_flag("--inject-fault", cfg.inject_fault)->group("");

    CLI::App* grid_cmd = app.add_subcommand("grid", "print one correlation grid");
    std::uint64_t grid_p = 0;
    std::string grid_a, grid_b;
    grid_cmd->add_option("--p", grid_p, "prime (required for constructed member specs)");
    grid_cmd->add_option("a", grid_a, "member spec or permutation literal")->required();
    grid_cmd->add_option("b", grid_b, "member spec or permutation literal")->required();
    grid_cmd->add_option("--format", cfg.format, format_help)->check(format_check);

    CLI::App* check_cmd = app.add_subcommand(
        "costas-check", "check a permutation for the Costas property");
    std::string check_literal;
    check_cmd->add_option("permutation", check_literal,
                          "comma-separated one-indexed values, e.g. 3,2,6,4,5,1")
        ->required();
    check_cmd->add_option("--format", cfg.format, format_help)->check(format_check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        std::tie(cfg.lo, cfg.hi) = parse_prime_range(primes_text);
        cfg.workers = parse_workers(workers_text);
        if (const auto f = costas::shift_filter_from_string(filter_text)) {
            cfg.filter = *f;
        } else {
            std::cerr << "error: unknown filter '" << filter_text << "'\n";
            return kExitUsage;
        }
        if (*table_cmd) {
            cfg.families = families_text.empty()
                               ? std::vector<FamilyId>{FamilyId::Wp, FamilyId::Wpel}
                               : parse_families(families_text);
            return cmd_table(cfg);
        }
        if (*bounds_cmd) return cmd_bounds(cfg);
        if (*verify_cmd) return cmd_verify(cfg);
        if (*grid_cmd) return cmd_grid(cfg, grid_p, grid_a, grid_b);
        if (*check_cmd) return cmd_costas_check(cfg, check_literal);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 3;
    }
    return kExitUsage;
}
