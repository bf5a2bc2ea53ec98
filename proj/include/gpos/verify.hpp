#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gpos/metric.hpp"

namespace gpos {

enum class RecordStatus { pass, fail, investigate };

const char* to_string(RecordStatus s);

/// One checked claim. pass <=> expected == computed; a failed record whose
/// claim is an open conjecture is marked `investigate` instead of `fail`.
struct VerificationRecord {
    std::string theorem;
    std::string quantity;
    std::vector<std::int64_t> params;
    std::optional<std::size_t> expected;
    std::optional<std::size_t> computed;
    bool pass = false;
    RecordStatus status = RecordStatus::fail;
    std::chrono::duration<double> runtime{0};
    std::string detail;
};

/// Monophonic sweeps include 19-vertex blow-ups, above the library default.
inline constexpr std::size_t kSweepMonophonicCap = 20;

struct SweepOptions {
    /// Overrides the theorem's main size parameter (see theorem_ranges()).
    std::optional<std::size_t> max_n;
    Execution execution = Execution::parallel;
    std::size_t monophonic_cap = kSweepMonophonicCap;
    std::uint64_t seed = 0x5eed2024;
};

const std::vector<std::string>& theorem_names();

/// Human-readable default range per theorem, for --help.
std::string theorem_ranges();

/// Records in deterministic parameter order. Throws InputError for an
/// unknown theorem; CapacityError propagates from the solvers.
std::vector<VerificationRecord> run_theorem(std::string_view name, const SweepOptions& opt = {});

nlohmann::json to_json(const VerificationRecord& r);

}  // namespace gpos
