// Command-line front end: analyze additive codes over Z_{2^L}, dump Gray
// images, build nested / cyclic constructions, and regenerate the embedded
// classification tables.
//
// Exit codes for `analyze`: 0 = linear image, 1 = nonlinear image, 2 = error.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "zgray/cyclic.hpp"
#include "zgray/families.hpp"
#include "zgray/gray.hpp"
#include "zgray/linearity.hpp"
#include "zgray/nested.hpp"
#include "zgray/report.hpp"
#include "zgray/tables.hpp"

using namespace zgray;

namespace {

// Code file format: a header line "L n k", then k generator rows of n
// integers in [0, 2^L - 1]. Lines starting with '#' are comments.
AdditiveCode read_code_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::vector<std::vector<std::uint32_t>> rows;
    int level = 0;
    std::size_t n = 0, k = 0;
    std::string line;
    bool have_header = false;
    while (std::getline(in, line)) {
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        std::istringstream ls(line);
        if (!have_header) {
            if (!(ls >> level >> n >> k)) throw std::runtime_error("bad header in " + path);
            have_header = true;
            continue;
        }
        std::vector<std::uint32_t> row;
        std::int64_t v;
        while (ls >> v) {
            if (v < 0) throw std::runtime_error("negative entry in " + path);
            row.push_back(std::uint32_t(v));
        }
        if (!row.empty()) rows.push_back(std::move(row));
    }
    if (!have_header) throw std::runtime_error("missing header in " + path);
    if (rows.size() != k) throw std::runtime_error("expected " + std::to_string(k) + " rows");
    std::vector<RingVector> gens;
    for (auto& r : rows) {
        if (r.size() != n) throw std::runtime_error("row length mismatch in " + path);
        gens.emplace_back(level, std::move(r));
    }
    return AdditiveCode(level, n, std::move(gens));
}

// Key=value pairs separated by commas; list values use ':' between items,
// e.g. "t=1:0:1" or "n=7,I=1:2:4".
std::map<std::string, std::string> parse_params(const std::string& s) {
    std::map<std::string, std::string> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad parameter item: " + item);
        out[item.substr(0, eq)] = item.substr(eq + 1);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ':')) out.push_back(std::stoi(item));
    return out;
}

AdditiveCode build_family(const std::string& family, int level,
                          const std::map<std::string, std::string>& p) {
    auto geti = [&](const std::string& key) {
        auto it = p.find(key);
        if (it == p.end()) throw std::runtime_error("missing parameter " + key);
        return std::stoi(it->second);
    };
    if (family == "hadamard") {
        auto it = p.find("t");
        if (it == p.end()) throw std::runtime_error("hadamard needs t=t1:t2:...:tL");
        return hadamard_code(level, parse_int_list(it->second));
    }
    if (family == "simplex_alpha") return simplex_alpha(level, geti("k"));
    if (family == "simplex_beta") return simplex_beta(level, geti("k"));
    if (family == "macdonald_alpha") return macdonald_alpha(level, geti("k"), geti("u"));
    if (family == "macdonald_beta") return macdonald_beta(level, geti("k"), geti("u"));
    throw std::runtime_error("unknown family " + family);
}

std::string describe_params(const std::map<std::string, std::string>& p) {
    std::string s;
    for (const auto& [k, v] : p) s += (s.empty() ? "" : ",") + k + "=" + v;
    return s;
}

int run_analyze(const AdditiveCode& code, const std::string& source, std::uint64_t budget,
                bool as_json, bool show_witness) {
    const ReportRecord rec = analyze(code, source, budget);
    if (as_json)
        std::cout << report_to_json(rec) << "\n";
    else
        std::cout << report_to_text(rec, show_witness);
    return rec.linear ? 0 : 1;
}

int run_selftest(std::uint64_t seed, std::uint64_t budget) {
    std::mt19937_64 rng(seed);
    int checked = 0, failures = 0;
    for (int round = 0; round < 60; ++round) {
        const int level = 2 + int(rng() % 3);
        const std::size_t n = 1 + std::size_t(rng() % 4);
        const std::size_t k = 1 + std::size_t(rng() % 2);
        std::vector<RingVector> gens;
        for (std::size_t i = 0; i < k; ++i) {
            std::vector<std::uint32_t> e(n);
            for (auto& x : e) x = std::uint32_t(rng()) & ((std::uint32_t(1) << level) - 1);
            gens.emplace_back(level, std::move(e));
        }
        AdditiveCode code(level, n, std::move(gens));
        const bool via_pairs = linear_by_decomposition(code, budget).linear;
        const bool via_b = linear_by_schur_sum(code, budget).linear;
        const bool via_oracle = brute_force_linear(gray_image(code, GrayTable::build(level), budget));
        ++checked;
        if (via_pairs != via_oracle || via_b != via_oracle) {
            ++failures;
            std::cout << "selftest: disagreement at round " << round << "\n";
        }
    }
    std::cout << "selftest: " << checked << " random codes, " << failures << " disagreements\n";
    return failures == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Z_{2^L}-additive codes, generalized Gray images and their linearity"};
    app.require_subcommand(1);

    std::string file, family, params;
    int level = 0;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t seed = 0;
    bool as_json = false;
    bool show_witness = false;
    bool large = false;

    auto add_common = [&](CLI::App* cmd, bool with_input) {
        cmd->add_option("--budget", budget, "codeword enumeration budget");
        cmd->add_flag("--json", as_json, "machine-readable output");
        cmd->add_flag("--witness", show_witness, "print the nonlinearity witness");
        cmd->add_option("--seed", seed, "seed for randomized commands");
        if (with_input) {
            cmd->add_option("--file", file, "code file (header 'L n k', then k rows)");
            cmd->add_option("--family", family,
                            "hadamard | simplex_alpha | simplex_beta | macdonald_alpha | macdonald_beta");
            cmd->add_option("--level", level, "L of Z_{2^L} (family input)");
            cmd->add_option("--params", params, "family/construction parameters, e.g. k=2,u=1 or t=1:0:1");
        }
    };

    auto* analyze_cmd = app.add_subcommand("analyze", "full report for one code");
    add_common(analyze_cmd, true);
    auto* gray_cmd = app.add_subcommand("gray", "dump the Gray image words");
    add_common(gray_cmd, true);
    auto* nested_cmd = app.add_subcommand("nested", "Reed-Muller nested construction");
    add_common(nested_cmd, false);
    nested_cmd->add_option("--params", params, "kind=low-order,m=3 or kind=even,l=2 or kind=odd,l=2")
        ->required();
    auto* cyclic_cmd = app.add_subcommand("cyclic", "cyclic squaring chain report");
    add_common(cyclic_cmd, false);
    cyclic_cmd->add_option("--params", params, "n=7,I=1:2:4,l=3")->required();
    cyclic_cmd->add_flag("--large", large, "allow fields beyond GF(2^24)");
    auto* family_cmd = app.add_subcommand("family", "verify the family theorems on the grid");
    add_common(family_cmd, false);
    auto* table1_cmd = app.add_subcommand("table1", "regenerate the classification table");
    add_common(table1_cmd, false);
    auto* table2_cmd = app.add_subcommand("table2", "regenerate the length-125 squaring table");
    add_common(table2_cmd, false);
    auto* selftest_cmd = app.add_subcommand("selftest", "random cross-check of the deciders");
    add_common(selftest_cmd, false);

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze_cmd->parsed() || gray_cmd->parsed()) {
            std::optional<AdditiveCode> code;
            std::string source;
            if (!file.empty()) {
                code = read_code_file(file);
                source = file;
            } else if (!family.empty()) {
                if (level < 2) throw std::runtime_error("--level is required with --family");
                code = build_family(family, level, parse_params(params));
                source = family + "(" + describe_params(parse_params(params)) + ")";
            } else {
                throw std::runtime_error("need --file or --family");
            }
            if (analyze_cmd->parsed()) return run_analyze(*code, source, budget, as_json, show_witness);
            const auto image = gray_image(*code, GrayTable::build(code->level()), budget);
            for (const auto& w : image.words) std::cout << w.to_string() << "\n";
            return 0;
        }

        if (nested_cmd->parsed()) {
            auto p = parse_params(params);
            const std::string kind = p.count("kind") ? p["kind"] : "";
            NestedSpec spec = [&] {
                if (kind == "low-order") return rm_chain(RmChainKind::low_order, std::stoi(p.at("m")));
                if (kind == "even") return rm_chain(RmChainKind::even, std::stoi(p.at("l")));
                if (kind == "odd") return rm_chain(RmChainKind::odd, std::stoi(p.at("l")));
                throw std::runtime_error("kind must be low-order, even or odd");
            }();
            const AdditiveCode code = nested_code(spec);
            std::cout << "layers:";
            for (const auto& c : spec.layers) std::cout << " [" << c.length() << "," << c.dimension() << "]";
            std::cout << "\nlog2 |C| = " << code.cardinality_log2() << "\n";
            if (code.cardinality_log2() <= 20) {
                const bool lin =
                    xor_closed_rank(gray_image(code, GrayTable::build(code.level()), budget).words);
                std::cout << "gray image: " << (lin ? "linear" : "nonlinear") << "\n";
                return lin ? 0 : 1;
            }
            std::cout << "gray image: linear (nested construction)\n";
            return 0;
        }

        if (cyclic_cmd->parsed()) {
            auto p = parse_params(params);
            const int n = std::stoi(p.at("n"));
            const int L = std::stoi(p.at("l"));
            const auto I1 = parse_int_list(p.at("I"));
            const auto cosets = cyclotomic_cosets(n);
            const auto field = build_field_for(n, large);
            CyclicCodeSpec spec = code_from_I(I1, cosets, field);
            nlohmann::json chain = nlohmann::json::array();
            for (int t = 1; t <= L; ++t) {
                nlohmann::json level_j;
                level_j["level"] = t;
                level_j["I_size"] = spec.I.size();
                level_j["g"] = spec.g.pretty();
                level_j["g_coeffs"] = spec.g.coeff_string();
                chain.push_back(level_j);
                if (!as_json)
                    std::cout << "C_" << t << ": [" << n << "," << spec.I.size() << "]  g = "
                              << spec.g.pretty() << "\n";
                if (t < L) spec = square_cyclic(spec, cosets, field);
            }
            std::cout << (as_json ? chain.dump(2) + "\n" : "");
            if (!as_json)
                std::cout << "stabilizes at level " << stabilization_level(I1, n) << "\n";
            return 0;
        }

        if (family_cmd->parsed()) {
            const auto rows = verify_family_theorems(budget);
            bool all_ok = true;
            for (const auto& r : rows) {
                std::cout << (r.ok ? "ok   " : "FAIL ") << r.family << " L=" << r.level << " (";
                for (std::size_t i = 0; i < r.params.size(); ++i)
                    std::cout << (i ? "," : "") << r.params[i];
                std::cout << "): " << (r.computed_linear ? "linear" : "nonlinear") << " via "
                          << r.method << "\n";
                all_ok = all_ok && r.ok;
            }
            return all_ok ? 0 : 2;
        }

        if (table1_cmd->parsed()) {
            const auto outcomes = run_table1(budget);
            bool all_ok = true;
            for (const auto& o : outcomes) {
                const auto& row = table1_rows()[o.row];
                std::cout << (o.mismatches.empty() ? "ok   " : "FAIL ") << row.label << ": "
                          << (o.record.linear ? "L " : "NL") << "  d_lee=" << o.record.d_lee
                          << " d_H=" << o.record.d_hamming_gray << "\n";
                for (const auto& m : o.mismatches) {
                    std::cout << "     " << m << "\n";
                    all_ok = false;
                }
            }
            return all_ok ? 0 : 2;
        }

        if (table2_cmd->parsed()) {
            const auto outcomes = run_table2();
            bool all_ok = true;
            for (const auto& o : outcomes) {
                std::cout << (o.mismatches.empty() ? "ok   " : "FAIL ") << "row " << o.row + 1
                          << ": g1=" << o.g1 << "  g2=" << o.g2 << "  g3=" << o.g3 << "\n";
                for (const auto& m : o.mismatches) {
                    std::cout << "     " << m << "\n";
                    all_ok = false;
                }
            }
            return all_ok ? 0 : 2;
        }

        if (selftest_cmd->parsed()) return run_selftest(seed, budget);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
