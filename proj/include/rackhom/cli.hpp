#ifndef RACKHOM_CLI_HPP
#define RACKHOM_CLI_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "rackhom/chain.hpp"
#include "rackhom/rack.hpp"

namespace rackhom::cli {

/// Input document:
///   {"kind": "table", "table": [[...], ...]}
///   {"kind": "permutation", "cycles": [[...], ...], "free_orbits": k}
/// free_orbits is optional and only usable by the closed-form commands.
struct RackDescription {
    enum class Kind { Table, Permutation };

    Kind kind = Kind::Table;
    std::vector<std::vector<std::int64_t>> table;
    std::vector<std::vector<std::int64_t>> cycles;
    std::size_t free_orbits = 0;

    friend bool operator==(const RackDescription&, const RackDescription&) = default;
};

/// Throws Error(ParseError) on schema violations.
[[nodiscard]] RackDescription parse_description(const nlohmann::json& doc);
[[nodiscard]] RackDescription parse_description_text(std::string_view text);
[[nodiscard]] nlohmann::json to_json(const RackDescription& description);

/// A description checked against the rack axioms.  The finite rack is absent
/// exactly when there are free orbits; the spec is absent for racks that are
/// not permutation racks.
struct ResolvedRack {
    RackDescription description;
    std::optional<FiniteRack> rack;
    std::optional<OrbitDecomposition> orbits;
    std::optional<PermutationSpec> spec;
};

/// Throws Error(ValidationError) when the axioms fail.
[[nodiscard]] ResolvedRack resolve(const RackDescription& description);

enum class Command { Validate, Homology, Betti, E2, Cycles, Verify };
enum class OutputFormat { Table, Csv, Json };

struct RunConfig {
    std::size_t max_degree = 3;
    std::size_t series_terms = 8;
    std::size_t basis_cap = default_basis_cap;
    OutputFormat output_format = OutputFormat::Table;
};

/// Process exit codes.
enum ExitStatus : int {
    exit_ok = 0,
    exit_mismatch = 1,
    exit_usage = 2,
    exit_validation = 3,
    exit_infinite_orbits = 4,
    exit_degree_too_large = 5,
    exit_not_permutation = 6,
};

/// Runs one command and writes its report to out; diagnostics go to err.
int run(Command command, const RackDescription& description, const RunConfig& config,
        std::ostream& out, std::ostream& err);

/// Entry point behind the rackhom executable; args excludes the program name.
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

}  // namespace rackhom::cli

#endif  // RACKHOM_CLI_HPP
