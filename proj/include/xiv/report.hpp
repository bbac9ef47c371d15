// Report records, serialization (JSON / CSV / text), and the zero cache.
// The only module with side effects: all file I/O in the project goes
// through emit/load functions here, from a single sequential phase.
#ifndef XIV_REPORT_HPP
#define XIV_REPORT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "xiv/types.hpp"

namespace xiv {

// One verified identity: both sides as computed, signed residual, inputs.
struct IdentityReport {
    std::string id;
    cplx lhs{};
    cplx rhs{};
    double abs_residual = 0.0;
    double rel_residual = 0.0;
    std::map<std::string, double> params;
    std::string note;
    bool asserted = true; // false: reported-only (suspected defect in the source form)

    static IdentityReport make(std::string id, cplx lhs, cplx rhs,
                               std::map<std::string, double> params = {},
                               std::string note = {}, bool asserted = true);
};

// One certified critical-line zero.
struct ZeroRecord {
    int n = 0;
    double tau = 0.0;
    double bracket_width = 0.0;
    double criterion_residual = 0.0;          // full theta sum
    double criterion_residual_one_term = 0.0; // psi truncated to one exponential
    double tau_asymptotic = 0.0;
    double asymptotic_error = 0.0;
};

// One cell of the off-line strip scan.
struct StripScanCell {
    double sigma = 0.0;
    double tau = 0.0;
    double residual_system = 0.0;    // joint residual of the two real equations
    double residual_sum_form = 0.0;  // closed form with alpha^2 + beta^2
    double residual_diff_form = 0.0; // closed form with alpha^2 - beta^2 (as printed)
};

// One cell of the one-exponential conjecture scan.
struct ConjectureCell {
    double s = 0.0;
    double t = 0.0;
    double value = 0.0;
};

enum class OutputFormat { json, csv, text };
std::optional<OutputFormat> parse_format(const std::string& name);

// Aggregate document: everything a run wants to persist or print.
struct ReportDocument {
    std::string generated_at; // excluded from determinism comparisons
    std::map<std::string, double> config;
    std::vector<IdentityReport> identities;
    std::vector<ZeroRecord> zeros;
    std::vector<StripScanCell> scans;
    std::vector<ConjectureCell> conjecture;
    std::vector<std::string> findings;
};

std::string emit_report(const ReportDocument& doc, OutputFormat format);

// Zero cache file: {"schema_version": 1, "records": [...]}, UTF-8, LF.
inline constexpr int kZeroCacheSchemaVersion = 1;

void save_zero_cache(const std::string& path, const std::vector<ZeroRecord>& records);

// Returns records if the file exists, parses, carries the right schema
// version, and its record count matches its own header; otherwise nullopt
// (caller recomputes).  `warning` receives a message when a file was present
// but rejected.
std::optional<std::vector<ZeroRecord>> load_zero_cache(const std::string& path,
                                                       std::string* warning = nullptr);

// Round-trip helpers used by tests and the `report` subcommand.
std::string zero_records_to_json(const std::vector<ZeroRecord>& records);
std::vector<ZeroRecord> zero_records_from_json(const std::string& text);

std::string identities_to_json(const std::vector<IdentityReport>& reports);
std::vector<IdentityReport> identities_from_json(const std::string& text);

void write_text_file(const std::string& path, const std::string& contents);
std::optional<std::string> read_text_file(const std::string& path);

} // namespace xiv

#endif
