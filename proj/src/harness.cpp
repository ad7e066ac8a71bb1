#include "ghseq/harness.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "ghseq/gh_core.hpp"

namespace ghseq {

namespace {

const char* offsets_comment_key(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::Gh: return "# gh_offsets=";
    case ExperimentKind::PnSame: return "# pn_same_offsets=";
    case ExperimentKind::PnDiff: return "# pn_diff_offsets=";
    }
    throw std::logic_error("unreachable experiment kind");
}

std::vector<std::uint8_t> effective_seed(const BinaryPolynomial& poly,
                                         const std::string& seed_text) {
    if (seed_text.empty()) return all_ones_seed(poly.degree());
    return parse_bits(seed_text);
}

void require_non_negative(const char* name,
                          const std::optional<OffsetPair>& offsets) {
    if (!offsets) return;
    if (offsets->first < 0 || offsets->second < 0)
        throw std::invalid_argument(std::string(name) +
                                    " offsets must be non-negative");
}

} // namespace

ExperimentKind parse_kind(std::string_view text) {
    if (text == "gh") return ExperimentKind::Gh;
    if (text == "pn-same") return ExperimentKind::PnSame;
    if (text == "pn-diff") return ExperimentKind::PnDiff;
    throw std::invalid_argument("unknown experiment kind '" +
                                std::string(text) +
                                "' (expected gh, pn-same or pn-diff)");
}

std::string_view kind_cli_name(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::Gh: return "gh";
    case ExperimentKind::PnSame: return "pn-same";
    case ExperimentKind::PnDiff: return "pn-diff";
    }
    throw std::logic_error("unreachable experiment kind");
}

std::string_view kind_token(ExperimentKind kind) {
    switch (kind) {
    case ExperimentKind::Gh: return "gh";
    case ExperimentKind::PnSame: return "pn_same";
    case ExperimentKind::PnDiff: return "pn_diff";
    }
    throw std::logic_error("unreachable experiment kind");
}

void ExperimentConfig::validate() const {
    if (lengths.empty())
        throw std::invalid_argument("config needs at least one length");
    for (std::int64_t length : lengths)
        if (length < 2)
            throw std::invalid_argument("fragment lengths must be >= 2, got " +
                                        std::to_string(length));
    require_non_negative("gh", gh_offsets);
    require_non_negative("pn-same", pn_same_offsets);
    require_non_negative("pn-diff", pn_diff_offsets);
    if (!lfsr_seed.empty()) parse_bits(lfsr_seed);
}

OffsetPair effective_offsets(ExperimentKind kind, std::int64_t length,
                             const ExperimentConfig& config) {
    switch (kind) {
    case ExperimentKind::Gh:
        return config.gh_offsets.value_or(OffsetPair{0, length});
    case ExperimentKind::PnSame:
        return config.pn_same_offsets.value_or(OffsetPair{0, 10});
    case ExperimentKind::PnDiff:
        return config.pn_diff_offsets.value_or(OffsetPair{0, 0});
    }
    throw std::logic_error("unreachable experiment kind");
}

CorrelationSeries run_ccf_experiment(ExperimentKind kind, std::int64_t length,
                                     const ExperimentConfig& config) {
    config.validate();
    if (length < 2)
        throw std::invalid_argument("fragment length must be >= 2, got " +
                                    std::to_string(length));
    const auto [off_a, off_b] = effective_offsets(kind, length, config);
    const auto len = static_cast<std::size_t>(length);

    switch (kind) {
    case ExperimentKind::Gh: {
        const std::size_t required =
            static_cast<std::size_t>(std::max(off_a, off_b)) + len;
        BipolarSequence prefix = [&] {
            try {
                return b_sequence(required);
            } catch (const std::invalid_argument&) {
                throw std::invalid_argument(
                    "gh experiment needs a prime-class prefix of " +
                    std::to_string(required) +
                    " primes, beyond the supported enumeration range");
            }
        }();
        return ccf(prefix.window(static_cast<std::size_t>(off_a), len),
                   prefix.window(static_cast<std::size_t>(off_b), len));
    }
    case ExperimentKind::PnSame: {
        const auto seed = effective_seed(config.pn_same_poly, config.lfsr_seed);
        return ccf(pn_fragment(config.pn_same_poly, seed,
                               static_cast<std::size_t>(off_a), len),
                   pn_fragment(config.pn_same_poly, seed,
                               static_cast<std::size_t>(off_b), len));
    }
    case ExperimentKind::PnDiff: {
        const auto seed_a = effective_seed(config.pn_same_poly, config.lfsr_seed);
        const auto seed_b = effective_seed(config.pn_diff_poly2, config.lfsr_seed);
        return ccf(pn_fragment(config.pn_same_poly, seed_a,
                               static_cast<std::size_t>(off_a), len),
                   pn_fragment(config.pn_diff_poly2, seed_b,
                               static_cast<std::size_t>(off_b), len));
    }
    }
    throw std::logic_error("unreachable experiment kind");
}

std::vector<ComparisonRow> run_table1(const ExperimentConfig& config) {
    config.validate();
    if (config.output_dir.empty())
        throw std::invalid_argument("table1 needs an output directory");

    std::vector<ComparisonRow> rows;
    rows.reserve(config.lengths.size());
    for (std::int64_t length : config.lengths) {
        ComparisonRow row;
        row.length = length;
        row.gh_peak = peak_ccf(
            run_ccf_experiment(ExperimentKind::Gh, length, config), false);
        row.pn_same_peak = peak_ccf(
            run_ccf_experiment(ExperimentKind::PnSame, length, config), false);
        row.pn_diff_peak = peak_ccf(
            run_ccf_experiment(ExperimentKind::PnDiff, length, config), false);
        rows.push_back(row);
    }

    std::filesystem::create_directories(config.output_dir);
    const std::filesystem::path csv_path = config.output_dir / kTable1CsvName;
    std::ofstream out(csv_path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write " + csv_path.string());

    // Record the windows each column used. Only the gh default tracks the
    // row's length, written symbolically as L; every other case is one fixed
    // pair across all rows.
    for (ExperimentKind kind : {ExperimentKind::Gh, ExperimentKind::PnSame,
                                ExperimentKind::PnDiff}) {
        out << offsets_comment_key(kind);
        if (kind == ExperimentKind::Gh && !config.gh_offsets) {
            out << "0,L\n";
        } else {
            const auto [a, b] = effective_offsets(kind, config.lengths.front(),
                                                  config);
            out << a << ',' << b << '\n';
        }
    }
    out << kTable1Header << '\n';
    for (const ComparisonRow& row : rows)
        out << row.length << ',' << format_fixed6(row.gh_peak) << ','
            << format_fixed6(row.pn_same_peak) << ','
            << format_fixed6(row.pn_diff_peak) << '\n';
    if (!out.flush())
        throw std::invalid_argument("cannot write " + csv_path.string());
    return rows;
}

std::string series_csv_name(ExperimentKind kind, std::int64_t length) {
    return "ccf_" + std::string(kind_token(kind)) + "_" +
           std::to_string(length) + ".csv";
}

} // namespace ghseq
