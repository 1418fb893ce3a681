#pragma once

// Command-line front end. Kept in a header so the test suite can drive
// `run` with in-memory streams.

#include <edgemetric/edgemetric.hpp>
#include <edgemetric/json.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

namespace edgemetric::cli {

enum exit_status : int {
    exit_ok = 0,
    exit_parse = 1,
    exit_validation = 2,
    exit_length = 3,
    exit_budget = 4,
    exit_disagreement = 5,
    exit_usage = 64,
};

inline int exit_status_for(errc code) {
    switch (code) {
    case errc::parse_error:
    case errc::unbalanced_bracket:
    case errc::invalid_character: return exit_parse;
    case errc::length_mismatch:
    case errc::heterogeneous_lengths: return exit_length;
    case errc::budget_exceeded: return exit_budget;
    default: return exit_validation;
    }
}

/// `d3` … `d6`, or `dm:K` for any K.
inline std::uint64_t parse_metric(const std::string& text) {
    std::string_view digits;
    if (text.size() == 2 && text[0] == 'd') {
        digits = std::string_view(text).substr(1);
    } else if (text.rfind("dm:", 0) == 0) {
        digits = std::string_view(text).substr(3);
    }
    std::uint64_t m = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), m);
    if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size() ||
        (text.size() == 2 && (m < 3 || m > 6))) {
        throw error(errc::invalid_metric_index, "metric must be d3, d4, d5, d6 or dm:K, got '" + text + "'");
    }
    return m;
}

enum class output_format { json, tsv };

struct run_config {
    std::string metric = "d4";
    input_format format = input_format::dotbracket;
    std::optional<output_format> output;
    bool raw = false;
    bool exact = false;
    bool force_hilbert = false;
    hilbert_method method = hilbert_method::generic;
    std::uint64_t max_degree = 6;
    std::uint64_t max_m = 6;
    std::optional<std::uint64_t> budget;
    unsigned threads = 0;
};

/// --budget wins over EDGEMETRIC_BUDGET, which wins over the default.
inline enumeration_budget resolve_budget(const run_config& config) {
    enumeration_budget budget;
    if (config.budget) {
        budget.max_monomials = *config.budget;
    } else if (const char* env = std::getenv("EDGEMETRIC_BUDGET"); env != nullptr && *env != '\0') {
        const std::string_view text(env);
        std::uint64_t value = 0;
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc() || ptr != text.data() + text.size()) {
            throw error(errc::precondition_violated, std::string("EDGEMETRIC_BUDGET is not a non-negative integer: ") + env);
        }
        budget.max_monomials = value;
    }
    return budget;
}

inline void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

inline json envelope(const char* command) { return json{{"schema", schema_version}, {"command", command}}; }

inline std::string cell(const metric_value& v, const run_config& config) {
    if (config.raw) {
        return v.raw.str();
    }
    return config.exact ? to_fraction_string(v.normalized) : to_decimal_string(v.normalized);
}

// ---------------------------------------------------------------------------

inline int cmd_dist(const run_config& config, const std::string& a_text, const std::string& b_text,
                    std::ostream& out) {
    const auto m = parse_metric(config.metric);
    const auto a = parse_structure(a_text, config.format);
    const auto b = parse_structure(b_text, config.format);
    const auto v = evaluate(a, b, m, metric_options{config.force_hilbert});
    if (config.output.value_or(output_format::json) == output_format::json) {
        auto doc = envelope("dist");
        doc.update(to_json(v));
        write_json(out, doc);
    } else if (config.raw || config.exact) {
        out << cell(v, config) << '\n';
    } else {
        out << to_fraction_string(v.normalized) << '\t' << to_decimal_string(v.normalized) << '\n';
    }
    return exit_ok;
}

/// All pairwise values; pairs are spread over worker threads but every
/// result lands in its fixed slot, so output never depends on scheduling.
inline std::vector<std::vector<metric_value>> distance_matrix(const std::vector<contact_structure>& ensemble,
                                                              std::uint64_t m, const metric_options& options,
                                                              unsigned threads = 0) {
    const std::size_t k = ensemble.size();
    std::vector<std::vector<metric_value>> matrix(k, std::vector<metric_value>(k));
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < k; ++i) {
        matrix[i][i] = evaluate(ensemble[i], ensemble[i], m, options);
        for (std::size_t j = i + 1; j < k; ++j) {
            pairs.emplace_back(i, j);
        }
    }
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(pairs.size(), 1)));

    std::vector<std::exception_ptr> failures(pairs.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t p = next++; p < pairs.size(); p = next++) {
            const auto [i, j] = pairs[p];
            try {
                matrix[i][j] = evaluate(ensemble[i], ensemble[j], m, options);
                matrix[j][i] = matrix[i][j];
            } catch (...) {
                failures[p] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) {
        pool.emplace_back(work);
    }
    work();
    for (auto& t : pool) {
        t.join();
    }
    for (const auto& f : failures) {
        if (f) {
            std::rethrow_exception(f);
        }
    }
    return matrix;
}

inline int cmd_matrix(const run_config& config, const std::string& path, std::ostream& out) {
    const auto m = parse_metric(config.metric);
    std::vector<contact_structure> ensemble;
    if (path == "-") {
        ensemble = read_ensemble(std::cin, config.format);
    } else {
        std::ifstream in(path);
        if (!in) {
            throw error(errc::parse_error, "cannot open '" + path + "'");
        }
        ensemble = read_ensemble(in, config.format);
    }
    if (ensemble.size() < 2) {
        throw error(errc::precondition_violated, "an ensemble needs at least two structures");
    }
    const auto matrix = distance_matrix(ensemble, m, metric_options{config.force_hilbert}, config.threads);

    if (config.output.value_or(output_format::tsv) == output_format::tsv) {
        for (const auto& row : matrix) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                out << (j == 0 ? "" : "\t") << cell(row[j], config);
            }
            out << '\n';
        }
        return exit_ok;
    }
    json raw = json::array();
    json normalized = json::array();
    json decimal = json::array();
    for (const auto& row : matrix) {
        json r = json::array();
        json q = json::array();
        json d = json::array();
        for (const auto& v : row) {
            r.push_back(v.raw.str());
            q.push_back(to_fraction_string(v.normalized));
            d.push_back(to_decimal_string(v.normalized));
        }
        raw.push_back(std::move(r));
        normalized.push_back(std::move(q));
        decimal.push_back(std::move(d));
    }
    auto doc = envelope("matrix");
    doc["m"] = m;
    doc["n"] = ensemble.front().length();
    doc["size"] = ensemble.size();
    doc["raw"] = std::move(raw);
    doc["normalized"] = std::move(normalized);
    doc["decimal"] = std::move(decimal);
    write_json(out, doc);
    return exit_ok;
}

inline int cmd_hilbert(const run_config& config, const std::string& text, std::ostream& out) {
    const auto s = parse_structure(text, config.format);
    const auto table = compute_hilbert_table(s, config.max_degree, config.method, resolve_budget(config));
    if (config.output.value_or(output_format::tsv) == output_format::tsv) {
        out << "m\tH(m)\n";
        for (std::size_t m = 0; m < table.values.size(); ++m) {
            out << m << '\t' << table.values[m] << '\n';
        }
        return exit_ok;
    }
    static const char* const names[] = {"generic", "closed", "enumerate"};
    auto doc = envelope("hilbert");
    doc["method"] = names[static_cast<int>(config.method)];
    doc.update(to_json(table));
    write_json(out, doc);
    return exit_ok;
}

inline int cmd_orbits(const run_config& config, const std::string& a_text, const std::string& b_text,
                      std::ostream& out) {
    const auto a = parse_structure(a_text, config.format);
    const auto b = parse_structure(b_text, config.format);
    const auto d = decompose(a, b);
    if (config.output.value_or(output_format::json) == output_format::json) {
        auto doc = envelope("orbits");
        doc["n"] = a.length();
        doc.update(to_json(d));
        write_json(out, doc);
        return exit_ok;
    }
    out << "kind\tlength\tnodes\n";
    for (const auto& o : d.orbits) {
        out << to_string(o.kind) << '\t' << o.length() << '\t';
        for (std::size_t k = 0; k < o.nodes.size(); ++k) {
            out << (k == 0 ? "" : ",") << o.nodes[k];
        }
        out << '\n';
    }
    out << "\nstatistic\tvalue\n";
    for (const auto& [m, count] : d.stats.lambda) {
        out << "lambda(" << m << ")\t" << count << '\n';
    }
    for (const auto& [m, count] : d.stats.theta) {
        out << "theta(" << m << ")\t" << count << '\n';
    }
    for (std::size_t k = 2; k <= 6; ++k) {
        out << "lambda_geq(" << k << ")\t" << d.stats.lambda_geq(k) << '\n';
    }
    return exit_ok;
}

inline int cmd_check(const run_config& config, const std::string& a_text, const std::string& b_text,
                     std::ostream& out) {
    const auto a = parse_structure(a_text, config.format);
    const auto b = parse_structure(b_text, config.format);
    check_options options;
    options.max_m = config.max_m;
    options.budget = resolve_budget(config);
    if (options.max_m < 3 || options.max_m > metric_options{}.max_m) {
        throw error(errc::invalid_metric_index, "--max-m must lie in [3, " + std::to_string(metric_options{}.max_m) + "]");
    }
    const auto report = run_check(a, b, options);
    auto doc = envelope("check");
    doc["n"] = a.length();
    doc["max_m"] = options.max_m;
    doc["budget"] = {{"max_monomials", options.budget.max_monomials}, {"max_path_steps", options.paths.max_steps}};
    doc.update(to_json(report));
    write_json(out, doc);
    return report.all_agree() ? exit_ok : exit_disagreement;
}

// ---------------------------------------------------------------------------

/// Runs one invocation; `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Edge-ideal distances between contact structures and RNA secondary structures", "edgemetric"};
    app.require_subcommand(1);
    run_config config;
    std::string first;
    std::string second;

    const std::map<std::string, input_format> formats{{"dotbracket", input_format::dotbracket},
                                                      {"pairs", input_format::pairs}};
    const std::map<std::string, output_format> outputs{{"json", output_format::json}, {"tsv", output_format::tsv}};
    const std::map<std::string, hilbert_method> methods{{"generic", hilbert_method::generic},
                                                        {"closed", hilbert_method::closed},
                                                        {"enumerate", hilbert_method::enumerate}};

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", config.format, "Input encoding: dotbracket or pairs")
            ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", config.output, "Output format: json or tsv")
            ->transform(CLI::CheckedTransformer(outputs, CLI::ignore_case));
    };
    auto add_metric = [&](CLI::App* sub) {
        sub->add_option("--metric", config.metric, "d3, d4, d5, d6 or dm:K")->capture_default_str();
        sub->add_flag("--raw", config.raw, "Print the raw integer d'_m");
        sub->add_flag("--exact", config.exact, "Print normalized values as p/q only");
        sub->add_flag("--force-hilbert", config.force_hilbert, "Bypass closed forms");
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", config.budget, "Maximum monomials to enumerate (env EDGEMETRIC_BUDGET)");
    };

    auto* dist = app.add_subcommand("dist", "Distance between two structures");
    add_metric(dist);
    add_format(dist);
    add_output(dist);
    dist->add_option("a", first, "First structure")->required();
    dist->add_option("b", second, "Second structure")->required();

    auto* matrix = app.add_subcommand("matrix", "Pairwise distance matrix of an ensemble file");
    add_metric(matrix);
    add_format(matrix);
    add_output(matrix);
    matrix->add_option("--threads", config.threads, "Worker threads, 0 for all cores")->capture_default_str();
    matrix->add_option("file", first, "Ensemble file, one structure per line, '-' for stdin")->required();

    auto* hilbert = app.add_subcommand("hilbert", "Affine Hilbert function table of an edge ideal");
    add_format(hilbert);
    add_output(hilbert);
    add_budget(hilbert);
    hilbert->add_option("--method", config.method, "generic, closed or enumerate")
        ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));
    hilbert->add_option("--max-degree", config.max_degree, "Largest degree m")->capture_default_str();
    hilbert->add_option("structure", first, "Structure")->required();

    auto* orbits = app.add_subcommand("orbits", "Orbit decomposition of the union of two secondary structures");
    add_format(orbits);
    add_output(orbits);
    orbits->add_option("a", first, "First structure")->required();
    orbits->add_option("b", second, "Second structure")->required();

    auto* check = app.add_subcommand("check", "Cross-check fast paths against brute-force oracles");
    add_format(check);
    add_budget(check);
    check->add_option("--max-m", config.max_m, "Largest metric index to check")->capture_default_str();
    check->add_option("a", first, "First structure")->required();
    check->add_option("b", second, "Second structure")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? exit_ok : exit_usage;
    }

    try {
        if (dist->parsed()) return cmd_dist(config, first, second, out);
        if (matrix->parsed()) return cmd_matrix(config, first, out);
        if (hilbert->parsed()) return cmd_hilbert(config, first, out);
        if (orbits->parsed()) return cmd_orbits(config, first, second, out);
        return cmd_check(config, first, second, out);
    } catch (const error& e) {
        err << "edgemetric: " << e.what() << '\n';
        return exit_status_for(e.code());
    }
}

} // namespace edgemetric::cli
