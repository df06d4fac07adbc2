#include "zgray/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"

#include "zgray/gray.hpp"

namespace zgray {

using nlohmann::json;

bool ReportRecord::operator==(const ReportRecord& o) const {
    return source == o.source && level == o.level && length == o.length &&
           cardinality == o.cardinality && d_lee == o.d_lee &&
           d_hamming_gray == o.d_hamming_gray && schur_chain_levels == o.schur_chain_levels &&
           schur_chain_closed == o.schur_chain_closed && r_subset_b == o.r_subset_b &&
           linear == o.linear && witness == o.witness && wall_time_ms == o.wall_time_ms;
}

ReportRecord analyze(const AdditiveCode& code, const std::string& source, std::uint64_t budget) {
    const auto t0 = std::chrono::steady_clock::now();
    ReportRecord r;
    r.source = source;
    r.level = code.level();
    r.length = code.length();
    r.cardinality = code.cardinality_u64();
    if (r.cardinality == 1) throw std::invalid_argument("analyze: trivial code {0}");
    if (code.level() < 2) throw std::invalid_argument("analyze: Gray map needs L >= 2");

    const GrayTable table = GrayTable::build(code.level());
    r.d_lee = min_lee_distance(code, budget);
    r.d_hamming_gray = min_hamming_distance(code, table, budget);

    const auto view = decomposition_view(code, budget);
    const auto chain = schur_closed_chain(view);
    r.schur_chain_levels.assign(chain.level_ok.begin(), chain.level_ok.end());
    r.schur_chain_closed = chain.closed;

    const auto verdict = linear_by_decomposition(code, budget);
    r.linear = verdict.linear;
    r.r_subset_b = verdict.linear;  // R in B iff gray(C) linear
    r.witness = verdict.witness;

    const auto t1 = std::chrono::steady_clock::now();
    r.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return r;
}

std::string report_to_json(const ReportRecord& r, bool pretty) {
    json j;
    j["source"] = r.source;
    j["level"] = r.level;
    j["length"] = r.length;
    j["cardinality"] = r.cardinality;
    j["d_lee"] = r.d_lee;
    j["d_hamming_gray"] = r.d_hamming_gray;
    j["schur_chain_levels"] = r.schur_chain_levels;
    j["schur_chain_closed"] = r.schur_chain_closed;
    j["r_subset_b"] = r.r_subset_b;
    j["linear"] = r.linear;
    if (r.witness) {
        j["witness"] = {{"c", r.witness->first.entries()}, {"d", r.witness->second.entries()}};
    } else {
        j["witness"] = nullptr;
    }
    j["wall_time_ms"] = r.wall_time_ms;
    return pretty ? j.dump(2) : j.dump();
}

ReportRecord report_from_json(const std::string& text) {
    const json j = json::parse(text);
    ReportRecord r;
    r.source = j.at("source").get<std::string>();
    r.level = j.at("level").get<int>();
    r.length = j.at("length").get<std::size_t>();
    r.cardinality = j.at("cardinality").get<std::uint64_t>();
    r.d_lee = j.at("d_lee").get<std::uint64_t>();
    r.d_hamming_gray = j.at("d_hamming_gray").get<std::uint64_t>();
    r.schur_chain_levels = j.at("schur_chain_levels").get<std::vector<bool>>();
    r.schur_chain_closed = j.at("schur_chain_closed").get<bool>();
    r.r_subset_b = j.at("r_subset_b").get<bool>();
    r.linear = j.at("linear").get<bool>();
    if (!j.at("witness").is_null()) {
        auto c = j.at("witness").at("c").get<std::vector<std::uint32_t>>();
        auto d = j.at("witness").at("d").get<std::vector<std::uint32_t>>();
        r.witness = std::make_pair(RingVector(r.level, std::move(c)),
                                   RingVector(r.level, std::move(d)));
    }
    r.wall_time_ms = j.at("wall_time_ms").get<double>();
    return r;
}

namespace {

std::string ring_vector_str(const RingVector& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.length(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

}  // namespace

std::string report_to_text(const ReportRecord& r, bool show_witness) {
    std::ostringstream os;
    os << "code:        " << r.source << "\n";
    os << "ring:        Z_" << (1u << r.level) << "  length " << r.length << "  |C| = "
       << r.cardinality << "\n";
    os << "d_lee:       " << r.d_lee << "\n";
    os << "d_H(gray):   " << r.d_hamming_gray << "\n";
    os << "schur chain: ";
    for (std::size_t i = 0; i < r.schur_chain_levels.size(); ++i)
        os << (i ? " " : "") << "C" << i + 1 << (r.schur_chain_levels[i] ? "+" : "-");
    os << (r.schur_chain_closed ? "  (closed)" : "  (violated)") << "\n";
    os << "R subset B:  " << (r.r_subset_b ? "yes" : "no") << "\n";
    os << "gray image:  " << (r.linear ? "linear" : "nonlinear") << "\n";
    if (show_witness && r.witness) {
        os << "witness:     c = " << ring_vector_str(r.witness->first)
           << "  d = " << ring_vector_str(r.witness->second) << "\n";
    }
    os << "wall time:   " << r.wall_time_ms << " ms\n";
    return os.str();
}

}  // namespace zgray
