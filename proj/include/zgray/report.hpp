#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zgray/additive_code.hpp"
#include "zgray/linearity.hpp"

namespace zgray {

// Full analysis of one code, mirroring the classification table columns.
// Field names of the JSON form are stable.
struct ReportRecord {
    std::string source;
    int level = 0;
    std::size_t length = 0;
    std::uint64_t cardinality = 0;
    std::uint64_t d_lee = 0;
    std::uint64_t d_hamming_gray = 0;
    std::vector<bool> schur_chain_levels;  // C_i o C_i in C_{i+1}, i = 1..L-1
    bool schur_chain_closed = false;
    bool r_subset_b = false;
    bool linear = false;
    std::optional<std::pair<RingVector, RingVector>> witness;
    double wall_time_ms = 0.0;

    bool operator==(const ReportRecord& o) const;
};

// Runs distances, the Schur chain and the decomposition criterion; rejects
// the trivial code {0} (its distances are undefined).
ReportRecord analyze(const AdditiveCode& code, const std::string& source,
                     std::uint64_t budget = kDefaultBudget);

std::string report_to_json(const ReportRecord& r, bool pretty = true);
ReportRecord report_from_json(const std::string& text);

std::string report_to_text(const ReportRecord& r, bool show_witness = true);

}  // namespace zgray
