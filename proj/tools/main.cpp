#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "meander/errors.hpp"
#include "meander/meander.hpp"
#include "meander/partition.hpp"
#include "meander/series.hpp"
#include "meander/stats.hpp"
#include "meander/winding.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitMismatch = 3;
constexpr int kExitInternal = 4;

enum class Format { Text, Csv, Json };

Format parse_format(const std::string& name) {
    if (name == "text") return Format::Text;
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("unknown format '" + name + "'");
}

void require_tabular(Format f, const char* subcommand) {
    if (f == Format::Csv)
        throw std::invalid_argument(std::string(subcommand) + " supports --format text|json only");
}

std::string csv_join(const std::vector<std::int64_t>& values) {
    std::string out;
    for (std::size_t k = 0; k < values.size(); ++k) {
        if (k > 0) out.push_back(',');
        out += std::to_string(values[k]);
    }
    return out;
}

int cell_width(const std::vector<std::vector<std::int64_t>>& rows, int minimum) {
    std::size_t width = static_cast<std::size_t>(minimum);
    for (const auto& row : rows)
        for (std::int64_t v : row)
            width = std::max(width, std::to_string(v).size());
    return static_cast<int>(width);
}

// ---------------------------------------------------------------------------

int run_index(const std::string& type_text, Format format, std::ostream& out) {
    require_tabular(format, "index");
    const meander::SeaweedType s = meander::parse_seaweed_type(type_text);
    const meander::Meander m = meander::build_meander(s);
    const meander::ComponentSummary c = meander::components(m);
    const int index = meander::index_dk(s);

    if (format == Format::Json) {
        nlohmann::json arcs_top = nlohmann::json::array();
        for (const auto& [a, b] : m.top_arcs) arcs_top.push_back({a, b});
        nlohmann::json arcs_bottom = nlohmann::json::array();
        for (const auto& [a, b] : m.bottom_arcs) arcs_bottom.push_back({a, b});
        nlohmann::json j{{"type", meander::to_string(s)}, {"index", index},
                         {"cycles", c.cycles},            {"paths", c.paths},
                         {"top_arcs", arcs_top},          {"bottom_arcs", arcs_bottom}};
        out << j.dump() << '\n';
        return kExitOk;
    }

    auto arc_list = [](const std::vector<std::pair<int, int>>& arcs) {
        std::string text;
        for (std::size_t k = 0; k < arcs.size(); ++k) {
            if (k > 0) text.push_back(' ');
            text += std::to_string(arcs[k].first) + "-" + std::to_string(arcs[k].second);
        }
        return text;
    };
    out << "type: " << meander::to_string(s) << '\n'
        << "index: " << index << '\n'
        << "cycles: " << c.cycles << '\n'
        << "paths: " << c.paths << '\n'
        << "top_arcs: " << arc_list(m.top_arcs) << '\n'
        << "bottom_arcs: " << arc_list(m.bottom_arcs) << '\n';
    return kExitOk;
}

int run_wind(const std::string& type_text, Format format, std::ostream& out) {
    require_tabular(format, "wind");
    const meander::SeaweedType s = meander::parse_seaweed_type(type_text);
    const meander::WindingTrace trace = meander::wind_down(s);
    const int index = meander::index_via_winding(s);

    if (format == Format::Json) {
        nlohmann::json j{{"start", meander::to_string(s)},
                         {"steps", nlohmann::json::parse(meander::trace_to_json(trace))},
                         {"index", index}};
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << meander::trace_to_text(trace);
    out << "index: " << index << '\n';
    return kExitOk;
}

int run_ones_table(int n_max, int i_max, Format format, std::ostream& out) {
    const meander::OnesTable table = meander::ones_table(n_max, i_max);

    if (format == Format::Json) {
        nlohmann::json j{{"n_max", table.n_max}, {"i_max", table.i_max}, {"cells", table.cells}};
        out << j.dump() << '\n';
        return kExitOk;
    }
    if (format == Format::Csv) {
        out << "n";
        for (int i = 0; i < i_max; ++i) out << ",i=" << i;
        out << '\n';
        for (int n = 1; n <= n_max; ++n) {
            out << n << ',' << csv_join(table.cells[static_cast<std::size_t>(n - 1)]) << '\n';
        }
        return kExitOk;
    }
    const int width = cell_width(table.cells, 4);
    out << std::setw(width) << "n";
    for (int i = 0; i < i_max; ++i)
        out << ' ' << std::setw(width) << ("i=" + std::to_string(i));
    out << '\n';
    for (int n = 1; n <= n_max; ++n) {
        out << std::setw(width) << n;
        for (std::int64_t v : table.cells[static_cast<std::size_t>(n - 1)])
            out << ' ' << std::setw(width) << v;
        out << '\n';
    }
    return kExitOk;
}

int run_frobenius(int d, int n_max, Format format, std::ostream& out) {
    const std::vector<std::int64_t> counts = meander::frobenius_counts(d, n_max);

    if (format == Format::Json) {
        nlohmann::json rows = nlohmann::json::array();
        for (int n = 1; n <= n_max; ++n)
            rows.push_back({{"n", n}, {"d", d}, {"count", counts[static_cast<std::size_t>(n - 1)]}});
        out << rows.dump() << '\n';
        return kExitOk;
    }
    if (format == Format::Csv) {
        out << "n,count\n";
        for (int n = 1; n <= n_max; ++n)
            out << n << ',' << counts[static_cast<std::size_t>(n - 1)] << '\n';
        return kExitOk;
    }
    out << "Frobenius partition counts for part bound d=" << d << '\n';
    for (int n = 1; n <= n_max; ++n)
        out << std::setw(6) << n << ' ' << counts[static_cast<std::size_t>(n - 1)] << '\n';
    return kExitOk;
}

int run_period(int d, int n_max, int min_repeats, Format format, std::ostream& out) {
    require_tabular(format, "period");
    const auto report = meander::frobenius_period(d, n_max, min_repeats);
    if (!report) {
        std::cerr << "no periodic tail detected for d=" << d << " up to n=" << n_max << '\n';
        return kExitMismatch;
    }
    if (format == Format::Json) {
        nlohmann::json j{{"d", report->d},
                         {"onset", report->onset},
                         {"period", report->period},
                         {"values", report->values},
                         {"verified_up_to", report->verified_up_to}};
        out << j.dump() << '\n';
        return kExitOk;
    }
    out << "d: " << report->d << '\n'
        << "onset: " << report->onset << '\n'
        << "period: " << report->period << '\n'
        << "values: " << csv_join(report->values) << '\n'
        << "verified_up_to: " << report->verified_up_to << '\n';
    return kExitOk;
}

int run_conjecture(int n_max, Format format, std::ostream& out) {
    const meander::TruncatedSeries product = meander::a300574_gf(n_max);
    bool all_match = true;

    struct Row {
        int n;
        std::int64_t even_count, odd_count, abs_diff, coefficient;
        bool match;
    };
    std::vector<Row> rows;
    for (int n = 1; n <= n_max; ++n) {
        const meander::ParityTally t = meander::conjecture_tally(n);
        const std::int64_t diff = std::abs(t.even_count - t.odd_count);
        const std::int64_t coeff = product.coeff(n);
        const bool match = diff == coeff;
        all_match = all_match && match;
        rows.push_back({n, t.even_count, t.odd_count, diff, coeff, match});
    }

    if (format == Format::Json) {
        nlohmann::json j = nlohmann::json::array();
        for (const Row& r : rows)
            j.push_back({{"n", r.n},
                         {"even_count", r.even_count},
                         {"odd_count", r.odd_count},
                         {"abs_diff", r.abs_diff},
                         {"coefficient", r.coefficient},
                         {"match", r.match ? "MATCH" : "MISMATCH"}});
        out << j.dump() << '\n';
    } else if (format == Format::Csv) {
        out << "n,even_count,odd_count,abs_diff,coefficient,match\n";
        for (const Row& r : rows)
            out << r.n << ',' << r.even_count << ',' << r.odd_count << ',' << r.abs_diff << ','
                << r.coefficient << ',' << (r.match ? "MATCH" : "MISMATCH") << '\n';
    } else {
        out << std::setw(6) << "n" << std::setw(12) << "even" << std::setw(12) << "odd"
            << std::setw(12) << "|e-o|" << std::setw(12) << "coeff" << "  result\n";
        for (const Row& r : rows)
            out << std::setw(6) << r.n << std::setw(12) << r.even_count << std::setw(12)
                << r.odd_count << std::setw(12) << r.abs_diff << std::setw(12) << r.coefficient
                << "  " << (r.match ? "MATCH" : "MISMATCH") << '\n';
    }
    return all_match ? kExitOk : kExitMismatch;
}

// verification oracles for the stat subcommand, independent of the index path
std::int64_t divisor_count(int n) {
    std::int64_t count = 0;
    for (int k = 1; k <= n; ++k)
        if (n % k == 0) ++count;
    return count;
}

std::int64_t self_conjugate_count(int n) {
    std::int64_t count = 0;
    meander::for_each_partition(n, n, [&](const std::vector<int>& parts) {
        const meander::Partition p{std::vector<int>(parts)};
        if (meander::conjugate(p) == p) ++count;
    });
    return count;
}

int run_stat(const std::string& kind, int n_max, Format format, std::ostream& out) {
    struct Row {
        int n;
        std::int64_t count, expected;
        bool match;
    };
    std::vector<Row> rows;
    bool all_match = true;
    for (int n = 1; n <= n_max; ++n) {
        const std::int64_t count =
            kind == "rev" ? meander::rev_statistic(n) : meander::conj_statistic(n);
        const std::int64_t expected =
            kind == "rev" ? divisor_count(n) : 2 * self_conjugate_count(n);
        const bool match = count == expected;
        all_match = all_match && match;
        rows.push_back({n, count, expected, match});
    }

    if (format == Format::Json) {
        nlohmann::json j = nlohmann::json::array();
        for (const Row& r : rows)
            j.push_back({{"n", r.n},
                         {"count", r.count},
                         {"expected", r.expected},
                         {"match", r.match ? "MATCH" : "MISMATCH"}});
        out << j.dump() << '\n';
    } else if (format == Format::Csv) {
        out << "n,count,expected,match\n";
        for (const Row& r : rows)
            out << r.n << ',' << r.count << ',' << r.expected << ','
                << (r.match ? "MATCH" : "MISMATCH") << '\n';
    } else {
        out << std::setw(6) << "n" << std::setw(12) << "count" << std::setw(12) << "expected"
            << "  result\n";
        for (const Row& r : rows)
            out << std::setw(6) << r.n << std::setw(12) << r.count << std::setw(12) << r.expected
                << "  " << (r.match ? "MATCH" : "MISMATCH") << '\n';
    }
    return all_match ? kExitOk : kExitMismatch;
}

int run_series(const std::string& which, int order, Format format, std::ostream& out) {
    const meander::TruncatedSeries series =
        which == "two-colored" ? meander::two_colored_gf(order) : meander::a300574_gf(order);

    if (format == Format::Json) {
        out << nlohmann::json(series.coeffs()).dump() << '\n';
        return kExitOk;
    }
    if (format == Format::Csv) {
        out << "n,coefficient\n";
        for (int n = 0; n <= order; ++n)
            out << n << ',' << series.coeff(n) << '\n';
        return kExitOk;
    }
    for (int n = 0; n <= order; ++n)
        out << std::setw(6) << n << ' ' << series.coeff(n) << '\n';
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"seaweed meanders, winding moves, and partition index statistics"};
    app.require_subcommand(1);

    std::string type_text;
    std::string format_name = "text";
    std::string output_path;
    std::string stat_kind;
    std::string series_which;
    int n_max = 10;
    int i_max = 10;
    int d = 1;
    int order = 10;
    int min_repeats = 3;

    const auto range = CLI::Range(1, 200);

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", format_name, "output format: text, csv, or json")
            ->check(CLI::IsMember({"text", "csv", "json"}));
        cmd->add_option("--output", output_path, "write output to this file instead of stdout");
    };

    CLI::App* cmd_index = app.add_subcommand("index", "index and components of a seaweed type");
    cmd_index->add_option("type", type_text, "seaweed type, e.g. \"2|4/1|2|3\"")->required();
    add_common(cmd_index);

    CLI::App* cmd_wind = app.add_subcommand("wind", "wind a seaweed type down to the empty type");
    cmd_wind->add_option("type", type_text, "seaweed type, e.g. \"17|3/10|4|6\"")->required();
    add_common(cmd_wind);

    CLI::App* cmd_table = app.add_subcommand("ones-table",
                                             "counts of partitions of n by all-ones index");
    cmd_table->add_option("--n-max", n_max, "largest weight n")->required()->check(range);
    cmd_table->add_option("--i-max", i_max, "number of index columns")->required()->check(range);
    add_common(cmd_table);

    CLI::App* cmd_frob = app.add_subcommand("frobenius",
                                            "Frobenius partition counts with bounded parts");
    cmd_frob->add_option("--d", d, "part bound")->required()->check(range);
    cmd_frob->add_option("--n-max", n_max, "largest weight n")->required()->check(range);
    add_common(cmd_frob);

    CLI::App* cmd_period = app.add_subcommand("period",
                                              "periodic tail of the Frobenius counts");
    cmd_period->add_option("--d", d, "part bound")->required()->check(range);
    cmd_period->add_option("--n-max", n_max, "largest weight n")->required()->check(range);
    cmd_period->add_option("--min-repeats", min_repeats,
                           "full repetitions required to accept a period")
        ->check(CLI::Range(1, 100));
    add_common(cmd_period);

    CLI::App* cmd_conj = app.add_subcommand("conjecture",
                                            "parity tallies of odd-part partitions vs. the "
                                            "alternating product series");
    cmd_conj->add_option("--n-max", n_max, "largest weight n")->required()->check(range);
    add_common(cmd_conj);

    CLI::App* cmd_stat = app.add_subcommand("stat",
                                            "partitions whose index against their reverse or "
                                            "conjugate is n-1");
    cmd_stat->add_option("--kind", stat_kind, "rev or conjugate")
        ->required()
        ->check(CLI::IsMember({"rev", "conjugate"}));
    cmd_stat->add_option("--n-max", n_max, "largest weight n")->required()->check(range);
    add_common(cmd_stat);

    CLI::App* cmd_series = app.add_subcommand("series", "generating function coefficients");
    cmd_series->add_option("--which", series_which, "two-colored or a300574")
        ->required()
        ->check(CLI::IsMember({"two-colored", "a300574"}));
    cmd_series->add_option("--order", order, "truncation order")->required()->check(range);
    add_common(cmd_series);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    try {
        std::ofstream file;
        std::ostream* out = &std::cout;
        if (!output_path.empty()) {
            file.open(output_path);
            if (!file) {
                std::cerr << "error: cannot open '" << output_path << "' for writing\n";
                return kExitUsage;
            }
            out = &file;
        }
        const Format format = parse_format(format_name);

        if (cmd_index->parsed()) return run_index(type_text, format, *out);
        if (cmd_wind->parsed()) return run_wind(type_text, format, *out);
        if (cmd_table->parsed()) return run_ones_table(n_max, i_max, format, *out);
        if (cmd_frob->parsed()) return run_frobenius(d, n_max, format, *out);
        if (cmd_period->parsed()) return run_period(d, n_max, min_repeats, format, *out);
        if (cmd_conj->parsed()) return run_conjecture(n_max, format, *out);
        if (cmd_stat->parsed()) return run_stat(stat_kind, n_max, format, *out);
        if (cmd_series->parsed()) return run_series(series_which, order, format, *out);
        std::cerr << "error: no subcommand selected\n";
        return kExitUsage;
    } catch (const meander::invariant_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const meander::verification_error& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kExitMismatch;
    } catch (const std::overflow_error& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
}
