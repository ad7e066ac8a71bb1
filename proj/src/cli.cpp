#include "ghseq/cli.hpp"

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "ghseq/correlation.hpp"
#include "ghseq/errors.hpp"
#include "ghseq/gh_core.hpp"
#include "ghseq/harness.hpp"
#include "ghseq/lfsr.hpp"
#include "ghseq/svg.hpp"

namespace ghseq::cli {

namespace {

OffsetPair parse_offset_pair(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
        throw std::invalid_argument("offsets must be two comma-separated "
                                    "integers, e.g. 0,100");
    std::int64_t a = 0, b = 0;
    try {
        std::size_t used = 0;
        a = std::stoll(text.substr(0, comma), &used);
        if (used != comma) throw std::invalid_argument("");
        const std::string rest = text.substr(comma + 1);
        b = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("offsets must be two comma-separated "
                                    "integers, e.g. 0,100");
    }
    if (a < 0 || b < 0)
        throw std::invalid_argument("offsets must be non-negative");
    return {a, b};
}

std::filesystem::path prepare_output_dir(const std::string& dir) {
    if (dir.empty())
        throw std::invalid_argument(
            "no output directory (--out flag or GHSEQ_OUT)");
    std::filesystem::path path(dir);
    std::filesystem::create_directories(path);
    return path;
}

void write_ccf_outputs(std::ostream& out, ExperimentKind kind,
                       std::int64_t length, const ExperimentConfig& config,
                       const CorrelationSeries& series, bool svg) {
    const std::filesystem::path dir = config.output_dir;
    const std::filesystem::path csv_path = dir / series_csv_name(kind, length);
    std::ofstream file(csv_path, std::ios::binary);
    if (!file)
        throw std::invalid_argument("cannot write " + csv_path.string());
    const auto [off_a, off_b] = effective_offsets(kind, length, config);
    write_series_csv(file, series,
                     "# offsets=" + std::to_string(off_a) + ',' +
                         std::to_string(off_b) + '\n');
    if (!file.flush())
        throw std::invalid_argument("cannot write " + csv_path.string());
    out << "wrote " << csv_path.string() << '\n';

    if (svg) {
        std::filesystem::path svg_path = csv_path;
        svg_path.replace_extension(".svg");
        const std::string title = "ccf " + std::string(kind_cli_name(kind)) +
                                  " length " + std::to_string(length);
        emit_svg_plot(series, title, svg_path);
        out << "wrote " << svg_path.string() << '\n';
    }
}

void report_fixture_deviation(std::ostream& out,
                              const std::vector<ComparisonRow>& rows) {
    const ExperimentConfig defaults;
    const bool default_lengths =
        rows.size() == defaults.lengths.size() &&
        [&] {
            for (std::size_t i = 0; i < rows.size(); ++i)
                if (rows[i].length != defaults.lengths[i]) return false;
            return true;
        }();
    if (!default_lengths) {
        out << "no reference peaks for these lengths; deviation report "
               "skipped\n";
        return;
    }
    out << "deviation from reference peaks (|computed - reference|):\n";
    for (std::size_t i = 0; i < rows.size(); ++i) {
        out << "length " << rows[i].length << ": gh "
            << format_fixed6(std::abs(rows[i].gh_peak - kReferenceGhPeaks[i]))
            << " pn-same "
            << format_fixed6(
                   std::abs(rows[i].pn_same_peak - kReferencePnSamePeaks[i]))
            << " pn-diff "
            << format_fixed6(
                   std::abs(rows[i].pn_diff_peak - kReferencePnDiffPeaks[i]))
            << '\n';
    }
    for (const ComparisonRow& row : rows) {
        if (row.length >= 100 && (row.gh_peak < 0.1 || row.gh_peak > 0.4))
            out << "note: gh peak " << format_fixed6(row.gh_peak)
                << " at length " << row.length
                << " lies outside the expected band [0.1, 0.4]\n";
    }
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"GH residue sequences, LFSR pseudo-noise sequences and "
                 "their cross-correlation"};
    app.name("ghseq");
    app.require_subcommand(1);
    app.set_config("--config", "",
                   "key-value file mirroring the flags; flags override it");

    // --- period ---------------------------------------------------------
    std::int64_t modulus = 0, seed_a = 1, seed_b = 1;
    auto* period = app.add_subcommand(
        "period", "period and class of the residue sequence mod M");
    period->add_option("--modulus", modulus, "modulus M >= 2")->required();
    period->add_option("--seed-a", seed_a, "first seed (default 1)");
    period->add_option("--seed-b", seed_b, "second seed (default 1)");
    period->callback([&] {
        const PeriodReport report =
            period_report(GHParams(seed_a, seed_b, modulus));
        out << kPeriodCsvHeader << '\n' << to_csv_row(report) << '\n';
    });

    // --- sweep ----------------------------------------------------------
    std::int64_t sweep_max = 0;
    auto* sweep = app.add_subcommand(
        "sweep", "verify the period bound and class theorem up to --max");
    sweep->add_option("--max", sweep_max, "largest modulus to check")
        ->required();
    sweep->callback([&] {
        const auto reports = composite_bound_sweep(sweep_max);
        if (sweep_max >= 3) theorem_sweep(sweep_max);
        out << kPeriodCsvHeader << '\n';
        for (const PeriodReport& report : reports)
            out << to_csv_row(report) << '\n';
    });

    // --- bn -------------------------------------------------------------
    std::int64_t bn_count = 0;
    auto* bn = app.add_subcommand(
        "bn", "bipolar prime-class sequence B(n) over ascending primes");
    bn->add_option("--count", bn_count, "number of terms")->required();
    bn->callback([&] {
        if (bn_count < 1)
            throw std::invalid_argument("--count must be >= 1");
        out << format_bipolar(b_sequence(static_cast<std::size_t>(bn_count)))
            << '\n';
    });

    // --- pn -------------------------------------------------------------
    std::string pn_poly_text = "45,4,3,1,0";
    std::string pn_seed_text;
    std::int64_t pn_offset = 0, pn_length = 0;
    auto* pn = app.add_subcommand(
        "pn", "bipolar fragment of an LFSR pseudo-noise sequence");
    pn->add_option("--poly", pn_poly_text,
                   "feedback polynomial, descending exponents");
    pn->add_option("--seed", pn_seed_text,
                   "register bits, most significant stage first "
                   "(default all ones)");
    pn->add_option("--offset", pn_offset, "bits to skip (default 0)");
    pn->add_option("--length", pn_length, "fragment length")->required();
    pn->callback([&] {
        if (pn_offset < 0)
            throw std::invalid_argument("--offset must be non-negative");
        if (pn_length < 1)
            throw std::invalid_argument("--length must be >= 1");
        const BinaryPolynomial poly = BinaryPolynomial::parse(pn_poly_text);
        const auto seed = pn_seed_text.empty()
                              ? all_ones_seed(poly.degree())
                              : parse_bits(pn_seed_text);
        out << format_bipolar(
                   pn_fragment(poly, seed,
                               static_cast<std::size_t>(pn_offset),
                               static_cast<std::size_t>(pn_length)))
            << '\n';
    });

    // --- ccf ------------------------------------------------------------
    std::string ccf_kind_text;
    std::int64_t ccf_length = 0;
    std::string ccf_offsets_text, ccf_poly2_text, ccf_out_dir;
    bool ccf_svg = false;
    auto* ccf_cmd = app.add_subcommand(
        "ccf", "cross-correlation series of two sequence fragments");
    ccf_cmd->add_option("--kind", ccf_kind_text, "gh | pn-same | pn-diff")
        ->required();
    ccf_cmd->add_option("--length", ccf_length, "fragment length")->required();
    ccf_cmd->add_option("--offsets", ccf_offsets_text,
                        "window offsets A,B (default per kind)");
    ccf_cmd->add_option("--poly2", ccf_poly2_text,
                        "second generator polynomial for pn-diff");
    ccf_cmd->add_option("--out", ccf_out_dir, "output directory")
        ->envname("GHSEQ_OUT")
        ->required();
    ccf_cmd->add_flag("--svg", ccf_svg, "also render an SVG plot");
    ccf_cmd->callback([&] {
        const ExperimentKind kind = parse_kind(ccf_kind_text);
        ExperimentConfig config;
        config.output_dir = prepare_output_dir(ccf_out_dir);
        if (!ccf_offsets_text.empty()) {
            const OffsetPair offsets = parse_offset_pair(ccf_offsets_text);
            switch (kind) {
            case ExperimentKind::Gh: config.gh_offsets = offsets; break;
            case ExperimentKind::PnSame: config.pn_same_offsets = offsets; break;
            case ExperimentKind::PnDiff: config.pn_diff_offsets = offsets; break;
            }
        }
        if (!ccf_poly2_text.empty())
            config.pn_diff_poly2 = BinaryPolynomial::parse(ccf_poly2_text);
        const CorrelationSeries series =
            run_ccf_experiment(kind, ccf_length, config);
        write_ccf_outputs(out, kind, ccf_length, config, series, ccf_svg);
    });

    // --- table1 ---------------------------------------------------------
    std::vector<std::int64_t> table_lengths{25, 50, 100, 150, 200};
    std::string table_out_dir;
    bool table_svg = false;
    auto* table1 = app.add_subcommand(
        "table1", "peak-ccf comparison across fragment lengths");
    table1
        ->add_option("--lengths", table_lengths,
                     "fragment lengths (default 25,50,100,150,200)")
        ->delimiter(',');
    table1->add_option("--out", table_out_dir, "output directory")
        ->envname("GHSEQ_OUT")
        ->required();
    table1->add_flag("--svg", table_svg, "also render an SVG plot");
    table1->callback([&] {
        ExperimentConfig config;
        config.lengths = table_lengths;
        config.output_dir = prepare_output_dir(table_out_dir);
        const std::vector<ComparisonRow> rows = run_table1(config);
        out << "wrote " << (config.output_dir / kTable1CsvName).string()
            << '\n';
        if (table_svg) {
            const std::filesystem::path svg_path =
                config.output_dir / "table1.svg";
            emit_svg_plot(rows, "peak ccf by fragment length", svg_path);
            out << "wrote " << svg_path.string() << '\n';
        }
        report_fixture_deviation(out, rows);
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    } catch (const invariant_error& e) {
        err << "ghseq: invariant violation: " << e.what() << '\n';
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        err << "ghseq: error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "ghseq: internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitOk;
}

} // namespace ghseq::cli
