#pragma once

#include <reversor/classify.hpp>
#include <reversor/hireal.hpp>
#include <reversor/rat.hpp>

#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace reversor {

/// Named invariants run by sweep_properties.
enum class Check {
    gap_bounds,            // 1/2 < b - a < 1 and n - b < 1/2 (AcuteScalene)
    gap_identity,          // b - a = log k_{n-1} / log z
    k_squared_above_z,     // AcuteScalene
    interval_nonempty,     // z^n / p_{n-1} > k_{n-1}
    lambda_nondegenerate,  // z / k_{n-1} > phi
    k_monotone,            // y < k_i < x, k_i increasing, i <= n (y < x)
    squared_last_triangle, // z^{2n-2} > p_{2n-2} (n > 2)
    growth_domination,     // z^i > p_i for n <= i <= n + 16
    solver_ordering,       // a <= s <= b, residual certificate
};

inline constexpr Check kAllChecks[] = {
    Check::gap_bounds,        Check::gap_identity,         Check::k_squared_above_z,
    Check::interval_nonempty, Check::lambda_nondegenerate, Check::k_monotone,
    Check::squared_last_triangle, Check::growth_domination, Check::solver_ordering,
};

std::string_view check_name(Check c) noexcept;
std::optional<Check> parse_check(std::string_view name) noexcept;

enum class ScanMode { equalities, properties };

struct ScanConfig {
    unsigned z_max = 20;
    unsigned n_max = 6;
    std::optional<std::vector<TripletTag>> class_filter;
    std::vector<Check> checks; // empty means every check
    unsigned chunk_size = 8;   // z values per chunk
    int digits = kDefaultDigits;
    double solver_tolerance = 1e-12;
    int identity_tolerance_exp = -40; // gap identity residual <= 10^exp
    bool emit_rows = false;

    /// Throws std::invalid_argument unless z_max >= 3, n_max >= 2, chunk_size >= 1.
    void validate() const;
    std::vector<Check> effective_checks() const;
};

struct EqualityRecord {
    unsigned y, x, z, n;
    friend bool operator==(const EqualityRecord &, const EqualityRecord &) = default;
};

struct Violation {
    unsigned y, x, z;
    std::string invariant;
    std::string details;
};

/// One CSV row per triplet; empty strings for fields that do not apply.
struct TripletRow {
    unsigned y = 0, x = 0, z = 0;
    std::string tag;
    std::string n, strict;
    std::string phi_num, phi_den, k_num, k_den, lambda_max_num, lambda_max_den;
    std::string a, b, gap, s;
    std::string checks;
};

inline constexpr std::size_t kGapBins = 20;

struct ScanReport {
    ScanMode mode = ScanMode::equalities;
    ScanConfig config;
    bool complete = false;
    std::uint64_t triplets_checked = 0;
    std::vector<EqualityRecord> equalities;
    std::vector<Violation> violations;
    std::array<std::uint64_t, kGapBins> gap_histogram{};
    std::map<std::string, std::uint64_t> outcomes;
    std::vector<TripletRow> rows;

    // bookkeeping, not part of the canonical report
    std::uint64_t chunks_total = 0;
    std::uint64_t chunks_restored = 0;
    std::uint64_t chunks_computed = 0;
    std::chrono::duration<double> elapsed{};
};

struct RunOptions {
    unsigned workers = 1;
    /// Checkpoint file; progress is appended after every chunk.
    std::optional<std::filesystem::path> state_path;
    /// Stop handing out chunks after this many were computed in this run.
    std::optional<std::uint64_t> stop_after_chunks;
    const std::atomic<bool> *cancel = nullptr;
};

/// Number of triples 1 <= y <= x <= z <= z_max.
std::uint64_t triple_count(unsigned z_max);

/// Every exact equality z^n = x^n + y^n with n <= n_max. Any with n >= 3 is
/// also a violation.
ScanReport scan_equalities(const ScanConfig &cfg, const RunOptions &opts = {});

/// Runs the selected invariant checks over the range.
ScanReport sweep_properties(const ScanConfig &cfg, const RunOptions &opts = {});

/// Continues the run recorded in `state_path`. When `expected` is given its
/// hash must match the saved one (DomainError config_mismatch otherwise).
ScanReport resume(const std::filesystem::path &state_path, RunOptions opts = {},
                  const std::optional<ScanConfig> &expected = std::nullopt,
                  std::optional<ScanMode> expected_mode = std::nullopt);

std::uint64_t config_hash(const ScanConfig &cfg, ScanMode mode);

/// Canonical JSON report: identical for identical configs regardless of
/// workers, chunking, or interruption.
std::string report_json(const ScanReport &report);

void write_csv(std::ostream &os, const ScanReport &report);

} // namespace reversor
