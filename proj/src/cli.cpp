#include "rackhom/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "rackhom/closed_forms.hpp"
#include "rackhom/cycles.hpp"
#include "rackhom/errors.hpp"
#include "rackhom/homology.hpp"

namespace rackhom::cli {
namespace {

using nlohmann::json;

[[noreturn]] void parse_error(const std::string& what) { throw Error(Errc::ParseError, what); }

std::vector<std::vector<std::int64_t>> integer_rows(const json& value, std::string_view field) {
    if (!value.is_array()) parse_error(std::string(field) + " must be an array of arrays");
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& row : value) {
        if (!row.is_array()) parse_error(std::string(field) + " must be an array of arrays");
        std::vector<std::int64_t> out;
        for (const auto& entry : row) {
            if (!entry.is_number_integer()) {
                parse_error(std::string(field) + " entries must be integers");
            }
            out.push_back(entry.get<std::int64_t>());
        }
        rows.push_back(std::move(out));
    }
    return rows;
}

json integer_json(const Integer& v) {
    if (v.is_small()) return json(v.to_int64());
    return json(v.to_string());
}

std::string command_name(Command c) {
    switch (c) {
        case Command::Validate: return "validate";
        case Command::Homology: return "homology";
        case Command::Betti: return "betti";
        case Command::E2: return "e2";
        case Command::Cycles: return "cycles";
        case Command::Verify: return "verify";
    }
    return "";
}

int exit_code_for(Errc code) {
    switch (code) {
        case Errc::ParseError: return exit_usage;
        case Errc::InfiniteOrbits: return exit_infinite_orbits;
        case Errc::DegreeTooLarge: return exit_degree_too_large;
        case Errc::NotPermutation: return exit_not_permutation;
        default: return exit_validation;
    }
}

struct DegreeRow {
    std::size_t degree = 0;
    std::optional<HomologyGroup> homology;
    std::optional<Integer> closed_form;
    std::optional<Integer> e2_total;
    std::optional<std::size_t> bn_size;
    std::optional<std::size_t> independence_rank;
};

struct Report {
    Command command = Command::Validate;
    json rack;
    std::vector<DegreeRow> rows;
    json extra = json::object();
    bool ok = true;
};

const FiniteRack& need_rack(const ResolvedRack& r) {
    if (!r.rack) {
        throw Error(Errc::InfiniteOrbits,
                    "brute-force commands need a finite rack; the description has " +
                        std::to_string(r.description.free_orbits) + " free orbits");
    }
    return *r.rack;
}

const PermutationSpec& need_spec(const ResolvedRack& r) {
    if (!r.spec) throw Error(Errc::NotPermutation, "closed forms need a permutation rack");
    return *r.spec;
}

std::string orbits_text(const OrbitDecomposition& orbits) {
    std::ostringstream os;
    for (const auto& cycle : orbits.orbits) {
        os << "(";
        for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
        os << ")";
    }
    return os.str();
}

void fill_validate(const ResolvedRack& r, Report& report) {
    auto& e = report.extra;
    e["size"] = r.rack ? json(r.rack->size()) : json(nullptr);
    e["permutation_rack"] = r.spec.has_value();
    if (r.orbits) {
        e["orbits"] = r.orbits->orbits;
    } else {
        e["orbits"] = nullptr;
    }
    if (r.spec) {
        e["orbit_count"] = r.spec->orbit_count();
        e["finite_orbit_count"] = r.spec->finite_orbit_count();
        e["free_orbit_count"] = r.spec->free_orbit_count;
        e["structure_group_rank"] = structure_group_rank(*r.spec);
    }
}

void fill_homology(const ResolvedRack& r, const RunConfig& config, Report& report) {
    const auto table = homology_table(need_rack(r), config.max_degree, config.basis_cap);
    for (std::size_t n = 0; n < table.size(); ++n) {
        report.rows.push_back(DegreeRow{n, table[n], {}, {}, {}, {}});
    }
}

void fill_betti(const ResolvedRack& r, const RunConfig& config, Report& report) {
    const PermutationSpec& spec = need_spec(r);
    if (config.series_terms == 0) parse_error("--terms must be positive");
    const auto beta = betti_numbers(spec, config.series_terms);
    const IntPolynomial series = poincare_series(spec, config.series_terms);
    json coefficients = json::array();
    for (std::size_t n = 0; n < beta.size(); ++n) {
        report.rows.push_back(DegreeRow{n, {}, beta[n], {}, {}, {}});
        coefficients.push_back(integer_json(series.coefficient(n)));
        if (series.coefficient(n) != beta[n]) report.ok = false;
    }
    report.extra["poincare_series"] = coefficients;
}

void fill_e2(const ResolvedRack& r, const RunConfig& config, Report& report) {
    const PermutationSpec& spec = need_spec(r);
    json page = json::array();
    for (std::size_t n = 0; n <= config.max_degree; ++n) {
        report.rows.push_back(DegreeRow{n, {}, {}, e2_total(spec, n), {}, {}});
    }
    for (std::size_t q = 0; q <= config.max_degree; ++q) {
        for (std::size_t p = 0; p + q <= config.max_degree; ++p) {
            page.push_back({{"p", p}, {"q", q}, {"rank", integer_json(e2_rank(spec, p, q))}});
        }
    }
    report.extra["e2_page"] = page;
}

void fill_cycles(const ResolvedRack& r, const RunConfig& config, Report& report,
                 bool add_recipes) {
    (void)need_spec(r);
    const FiniteRack& rack = need_rack(r);
    json recipes = json::array();
    for (std::size_t n = 0; n <= config.max_degree; ++n) {
        const auto level = basis_recipes(rack, n, config.basis_cap);
        std::vector<Chain> chains;
        json names = json::array();
        for (const auto& recipe : level) {
            chains.push_back(realize(rack, recipe));
            if (!is_cycle(rack, chains.back())) report.ok = false;
            std::ostringstream os;
            os << recipe;
            names.push_back(os.str());
        }
        const auto certificate = independence_certificate(rack, chains);
        if (!certificate.independent) report.ok = false;
        recipes.push_back({{"degree", n}, {"recipes", names}});
        if (n < report.rows.size()) {
            report.rows[n].bn_size = chains.size();
            report.rows[n].independence_rank = certificate.rank;
        } else {
            report.rows.push_back(DegreeRow{n, {}, {}, {}, chains.size(), certificate.rank});
        }
    }
    if (add_recipes) report.extra["basis"] = recipes;
}

void fill_verify(const ResolvedRack& r, const RunConfig& config, Report& report) {
    const PermutationSpec& spec = need_spec(r);
    fill_homology(r, config, report);
    fill_cycles(r, config, report, false);
    for (auto& row : report.rows) {
        row.closed_form = betti(spec, row.degree);
        row.e2_total = e2_total(spec, row.degree);
        const Integer brute(row.homology->free_rank);
        const bool agree = brute == *row.closed_form && brute == *row.e2_total &&
                           brute == Integer(*row.bn_size) &&
                           brute == Integer(*row.independence_rank) &&
                           row.homology->torsion.empty();
        if (!agree) report.ok = false;
    }
}

json row_json(const DegreeRow& row) {
    json j;
    j["degree"] = row.degree;
    if (row.homology) {
        j["free_rank"] = row.homology->free_rank;
        json torsion = json::array();
        for (const auto& t : row.homology->torsion) torsion.push_back(integer_json(t));
        j["torsion"] = torsion;
    } else {
        j["free_rank"] = nullptr;
        j["torsion"] = nullptr;
    }
    j["closed_form"] = row.closed_form ? integer_json(*row.closed_form) : json(nullptr);
    j["e2_total"] = row.e2_total ? integer_json(*row.e2_total) : json(nullptr);
    j["bn_size"] = row.bn_size ? json(*row.bn_size) : json(nullptr);
    j["independence_rank"] =
        row.independence_rank ? json(*row.independence_rank) : json(nullptr);
    return j;
}

std::string torsion_text(const HomologyGroup& h, std::string_view separator) {
    std::string out;
    for (std::size_t i = 0; i < h.torsion.size(); ++i) {
        if (i) out += separator;
        out += h.torsion[i].to_string();
    }
    return out;
}

template <typename T>
std::string cell(const std::optional<T>& v) {
    if (!v) return "";
    std::ostringstream os;
    os << *v;
    return os.str();
}

void emit_json(const Report& report, std::ostream& out) {
    json doc = report.extra;
    doc["command"] = command_name(report.command);
    doc["rack"] = report.rack;
    json results = json::array();
    for (const auto& row : report.rows) results.push_back(row_json(row));
    doc["results"] = results;
    doc["status"] = report.ok ? "ok" : "mismatch";
    out << doc.dump(2) << "\n";
}

void emit_csv(const Report& report, std::ostream& out) {
    if (report.command == Command::Validate) {
        out << "field,value\n";
        for (const auto& [key, value] : report.extra.items()) {
            std::string text = value.dump();
            if (text.find(',') != std::string::npos) text = "\"" + text + "\"";
            out << key << "," << text << "\n";
        }
        return;
    }
    out << "degree,free_rank,torsion,closed_form_rank,e2_total,bn_size\n";
    for (const auto& row : report.rows) {
        out << row.degree << ",";
        if (row.homology) out << row.homology->free_rank << "," << torsion_text(*row.homology, ";");
        else out << ",";
        out << "," << cell(row.closed_form) << "," << cell(row.e2_total) << ","
            << cell(row.bn_size) << "\n";
    }
}

void emit_table(const Report& report, const ResolvedRack& resolved, std::ostream& out) {
    out << "rack: ";
    if (resolved.rack) out << resolved.rack->size() << " elements";
    else out << "no finite elements";
    if (resolved.spec) {
        out << ", permutation rack " << orbits_text(*resolved.orbits);
        if (resolved.spec->free_orbit_count > 0) {
            out << " + " << resolved.spec->free_orbit_count << " free orbit(s)";
        }
        out << ", r = " << resolved.spec->orbit_count()
            << ", r_fin = " << resolved.spec->finite_orbit_count();
    } else {
        out << ", not a permutation rack";
    }
    out << "\n";
    if (report.command == Command::Validate) {
        out << "rack axioms: ok\n";
    } else {
        out << std::left << std::setw(8) << "degree" << std::setw(11) << "free_rank"
            << std::setw(10) << "torsion" << std::setw(13) << "closed_form" << std::setw(10)
            << "e2_total" << std::setw(9) << "bn_size" << "independence_rank\n";
        for (const auto& row : report.rows) {
            out << std::setw(8) << row.degree << std::setw(11)
                << (row.homology ? std::to_string(row.homology->free_rank) : "")
                << std::setw(10)
                << (row.homology ? (row.homology->torsion.empty()
                                        ? std::string("-")
                                        : torsion_text(*row.homology, ","))
                                 : "")
                << std::setw(13) << cell(row.closed_form) << std::setw(10) << cell(row.e2_total)
                << std::setw(9) << cell(row.bn_size) << cell(row.independence_rank) << "\n";
        }
        out << std::right;
    }
    if (report.extra.contains("e2_page")) {
        out << "E2 page (rows q, columns p):\n";
        std::size_t max_q = 0;
        for (const auto& e : report.extra["e2_page"]) max_q = std::max(max_q, e["q"].get<std::size_t>());
        for (std::size_t q = max_q + 1; q-- > 0;) {
            out << "  q=" << q << ":";
            for (const auto& e : report.extra["e2_page"]) {
                if (e["q"].get<std::size_t>() == q) out << " " << e["rank"].dump();
            }
            out << "\n";
        }
    }
    if (report.extra.contains("poincare_series")) {
        out << "Poincare series:";
        for (const auto& c : report.extra["poincare_series"]) out << " " << c.dump();
        out << "\n";
    }
    if (report.extra.contains("basis")) {
        for (const auto& level : report.extra["basis"]) {
            out << "B_" << level["degree"].get<std::size_t>() << ":";
            for (const auto& name : level["recipes"]) out << " [" << name.get<std::string>() << "]";
            out << "\n";
        }
    }
    out << "status: " << (report.ok ? "ok" : "mismatch") << "\n";
}

}  // namespace

RackDescription parse_description(const json& doc) {
    if (!doc.is_object()) parse_error("rack description must be a JSON object");
    if (!doc.contains("kind") || !doc["kind"].is_string()) {
        parse_error("missing string field \"kind\"");
    }
    const std::string kind = doc["kind"].get<std::string>();
    RackDescription out;
    if (kind == "table") {
        out.kind = RackDescription::Kind::Table;
        for (const auto& [key, value] : doc.items()) {
            if (key != "kind" && key != "table") parse_error("unexpected field \"" + key + "\" for kind table");
        }
        if (!doc.contains("table")) parse_error("kind table requires field \"table\"");
        out.table = integer_rows(doc["table"], "table");
    } else if (kind == "permutation") {
        out.kind = RackDescription::Kind::Permutation;
        for (const auto& [key, value] : doc.items()) {
            if (key != "kind" && key != "cycles" && key != "free_orbits") {
                parse_error("unexpected field \"" + key + "\" for kind permutation");
            }
        }
        if (!doc.contains("cycles")) parse_error("kind permutation requires field \"cycles\"");
        out.cycles = integer_rows(doc["cycles"], "cycles");
        if (doc.contains("free_orbits")) {
            const auto& f = doc["free_orbits"];
            if (!f.is_number_integer() || f.get<std::int64_t>() < 0) {
                parse_error("free_orbits must be a nonnegative integer");
            }
            out.free_orbits = f.get<std::size_t>();
        }
    } else {
        parse_error("unknown kind \"" + kind + "\"");
    }
    return out;
}

RackDescription parse_description_text(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        parse_error(std::string("malformed JSON: ") + e.what());
    }
    return parse_description(doc);
}

json to_json(const RackDescription& description) {
    json j;
    if (description.kind == RackDescription::Kind::Table) {
        j["kind"] = "table";
        j["table"] = description.table;
    } else {
        j["kind"] = "permutation";
        j["cycles"] = description.cycles;
        j["free_orbits"] = description.free_orbits;
    }
    return j;
}

ResolvedRack resolve(const RackDescription& description) {
    ResolvedRack out{description, std::nullopt, std::nullopt, std::nullopt};
    try {
        if (description.kind == RackDescription::Kind::Table) {
            out.rack = validate_rack(description.table);
            if (auto phi = as_permutation(*out.rack)) {
                out.orbits = orbit_decomposition(*phi);
                out.spec = spec_of(*out.orbits);
            }
            return out;
        }
        std::size_t n = 0;
        for (const auto& cycle : description.cycles) {
            if (cycle.empty()) throw Error(Errc::ValidationError, "empty cycle");
            n += cycle.size();
        }
        if (n == 0 && description.free_orbits == 0) {
            throw Error(Errc::ValidationError, "permutation has no orbits");
        }
        constexpr Element unset = static_cast<Element>(-1);
        Permutation phi(n, unset);
        for (const auto& cycle : description.cycles) {
            for (std::size_t i = 0; i < cycle.size(); ++i) {
                const std::int64_t x = cycle[i];
                if (x < 0 || static_cast<std::uint64_t>(x) >= n || phi[static_cast<std::size_t>(x)] != unset) {
                    throw Error(Errc::ValidationError,
                                "cycles must partition the ids 0.." + std::to_string(n - 1) +
                                    " (offending id " + std::to_string(x) + ")");
                }
                phi[static_cast<std::size_t>(x)] =
                    static_cast<Element>(cycle[(i + 1) % cycle.size()]);
            }
        }
        out.orbits = orbit_decomposition(phi);
        out.spec = spec_of(*out.orbits);
        out.spec->free_orbit_count = description.free_orbits;
        if (n > 0 && description.free_orbits == 0) out.rack = permutation_rack(phi);
        return out;
    } catch (const Error& e) {
        if (e.code() == Errc::ValidationError) throw;
        throw Error(Errc::ValidationError, e.what());
    }
}

int run(Command command, const RackDescription& description, const RunConfig& config,
        std::ostream& out, std::ostream& err) {
    try {
        if (config.basis_cap == 0) parse_error("--basis-cap must be at least 1");
        const ResolvedRack resolved = resolve(description);
        Report report;
        report.command = command;
        report.rack = to_json(description);
        switch (command) {
            case Command::Validate: fill_validate(resolved, report); break;
            case Command::Homology: fill_homology(resolved, config, report); break;
            case Command::Betti: fill_betti(resolved, config, report); break;
            case Command::E2: fill_e2(resolved, config, report); break;
            case Command::Cycles: fill_cycles(resolved, config, report, true); break;
            case Command::Verify: fill_verify(resolved, config, report); break;
        }
        switch (config.output_format) {
            case OutputFormat::Json: emit_json(report, out); break;
            case OutputFormat::Csv: emit_csv(report, out); break;
            case OutputFormat::Table: emit_table(report, resolved, out); break;
        }
        return report.ok ? exit_ok : exit_mismatch;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Integral rack homology: brute force and closed forms for permutation racks",
                 "rackhom"};
    std::string command_text;
    std::string input;
    RunConfig config;
    std::string format = "table";
    app.add_option("command", command_text, "validate | homology | betti | e2 | cycles | verify")
        ->required()
        ->check(CLI::IsMember({"validate", "homology", "betti", "e2", "cycles", "verify"}));
    app.add_option("--input", input, "rack description (JSON file, '-' for stdin)")->required();
    app.add_option("--max-degree", config.max_degree, "highest degree to compute")
        ->capture_default_str();
    app.add_option("--terms", config.series_terms, "number of Betti numbers for 'betti'")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--format", format, "output format")
        ->capture_default_str()
        ->check(CLI::IsMember({"table", "csv", "json"}));
    app.add_option("--basis-cap", config.basis_cap, "largest admissible chain group basis")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    const Command command = command_text == "validate"   ? Command::Validate
                            : command_text == "homology" ? Command::Homology
                            : command_text == "betti"    ? Command::Betti
                            : command_text == "e2"       ? Command::E2
                            : command_text == "cycles"   ? Command::Cycles
                                                         : Command::Verify;
    config.output_format = format == "json"  ? OutputFormat::Json
                           : format == "csv" ? OutputFormat::Csv
                                             : OutputFormat::Table;

    std::string text;
    if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else {
        std::ifstream file(input);
        if (!file) {
            err << "error: ParseError: cannot read " << input << "\n";
            return exit_usage;
        }
        text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
    }
    RackDescription description;
    try {
        description = parse_description_text(text);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e.code());
    }
    return run(command, description, config, out, err);
}

}  // namespace rackhom::cli
