// Command-line front end: configuration loading, the expression grammar,
// command dispatch, and stable text output for every engine operation and
// the verification suite.
//
// Exit codes: 0 success, 1 verification-check failure, 2 usage/parse error.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "segring/segring.hpp"

namespace {

using namespace segring;

LineTable resolve_table(const std::string& config_flag) {
    if (!config_flag.empty()) return load_config_file(config_flag);
    if (const char* env = std::getenv("SEGRING_CONFIG"); env && *env)
        return load_config_file(env);
    return default_table();
}

void print_tensor(const LineTable& table, const TensorElem& t) {
    for (const std::string& line : format_tensor_lines(table, t)) std::cout << line << "\n";
}

void print_words(const LineTable& table, const WordSum& words) {
    for (const std::string& line : format_word_lines(table, words)) std::cout << line << "\n";
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

int run_verify(const LineTable& table, const InstanceWindow& window,
               const std::string& suites) {
    std::vector<std::string> names;
    if (suites.empty() || suites == "all") {
        names = suite_names();
    } else {
        const auto& known = suite_names();
        for (auto part : detail::split(suites, ',')) {
            std::string name(detail::trim(part));
            if (name.empty()) continue;
            if (std::find(known.begin(), known.end(), name) == known.end())
                throw DomainError("unknown check '" + name + "'");
            names.push_back(name);
        }
    }
    bool all_passed = true;
    for (const CheckReport& report : run_suite(table, window, names)) {
        if (report.passed()) {
            std::cout << "PASS " << report.check_id << " (" << report.instances_run
                      << " instances)\n";
        } else {
            all_passed = false;
            std::cout << "FAIL " << report.check_id << " (" << report.instances_run
                      << " instances, " << report.failures.size() << " failures)\n";
            std::size_t shown = 0;
            for (const CheckFailure& f : report.failures) {
                if (++shown > 5) break;
                std::cout << "  " << f.instance << ": expected " << f.expected << ", got "
                          << f.actual << "\n";
            }
        }
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"segring: exact segment combinatorics in the ring R"};
    app.require_subcommand(1);

    std::string config_flag;
    app.add_option("--config", config_flag,
                   "line declaration file (overrides SEGRING_CONFIG; built-in default: one "
                   "self-dual line rho with size 1, s = 1)");

    std::string expr_text, level, kind, label_text, profile_text, window_text, suites;
    std::string seg1_text, seg2_text, points_text, word_text;
    std::vector<std::string> seg_list;

    auto* cmd_mstar = app.add_subcommand("mstar", "arity-2 comultiplication of an expression");
    cmd_mstar->add_option("expr", expr_text)->required();

    auto* cmd_jacquet = app.add_subcommand("jacquet", "Jacquet expansion of an expression");
    cmd_jacquet->add_option("--level", level)->required()->check(CLI::IsMember({"one", "cuspidal"}));
    cmd_jacquet->add_option("expr", expr_text)->required();

    auto* cmd_filter = app.add_subcommand("filter", "filtered comultiplication terms");
    cmd_filter->add_option("--kind", kind)
        ->required()
        ->check(CLI::IsMember({"bottom", "left", "right", "supp"}));
    cmd_filter->add_option("--label", label_text, "multisegment label for --kind left|right");
    cmd_filter->add_option("--profile", profile_text,
                           "';'-separated point multisets for --kind supp");
    cmd_filter->add_option("expr", expr_text)->required();

    auto* cmd_decide = app.add_subcommand("decide", "irreducibility of a product of two deltas");
    cmd_decide->add_option("seg1", seg1_text)->required();
    cmd_decide->add_option("seg2", seg2_text)->required();

    auto* cmd_classify = app.add_subcommand("classify-si",
                                            "square-integrable support classification");
    cmd_classify->add_option("points", points_text)->required();

    auto* cmd_tempered = app.add_subcommand("tempered", "tempered product class");
    cmd_tempered->add_option("segments", seg_list)->required();

    auto* cmd_casselman = app.add_subcommand("casselman", "square-integrability test on a word");
    cmd_casselman->add_option("word", word_text)->required();

    auto* cmd_verify = app.add_subcommand("verify", "run verification suites");
    cmd_verify->add_option("--suite", suites, "comma-separated check names, or 'all'");
    cmd_verify->add_option("--window", window_text, "instance window spec");

    auto* cmd_enumerate = app.add_subcommand("enumerate", "list window basis labels");
    cmd_enumerate->add_option("--window", window_text, "instance window spec");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const LineTable table = resolve_table(config_flag);

        if (app.got_subcommand(cmd_mstar)) {
            print_tensor(table, mstar(parse_expr(expr_text, table)));
        } else if (app.got_subcommand(cmd_jacquet)) {
            RElem x = parse_expr(expr_text, table);
            if (level == "one")
                print_tensor(table, mstar(x));
            else
                print_words(table, cuspidal_jacquet(x));
        } else if (app.got_subcommand(cmd_filter)) {
            RElem x = parse_expr(expr_text, table);
            if (kind == "bottom") {
                print_tensor(table, mstar_bottom(x));
            } else if (kind == "left" || kind == "right") {
                if (label_text.empty())
                    throw DomainError("--kind " + kind + " requires --label");
                RElem label_elem = parse_expr(label_text, table);
                if (label_elem.terms().size() != 1 || label_elem.terms().begin()->second != 1)
                    throw DomainError("--label must be a single multisegment label");
                Multisegment label = label_elem.terms().begin()->first;
                FilterSpec spec = kind == "left" ? FilterSpec::left_equals(label)
                                                 : FilterSpec::right_equals(label);
                print_tensor(table, filter(x, spec));
            } else {
                if (profile_text.empty()) throw DomainError("--kind supp requires --profile");
                auto profile = parse_profile_arg(profile_text, table);
                print_tensor(table, filter(x, FilterSpec::supp_profile(profile)));
            }
        } else if (app.got_subcommand(cmd_decide)) {
            Segment d1 = parse_segment_arg(seg1_text, table);
            Segment d2 = parse_segment_arg(seg2_text, table);
            PairDecision decision = decide_pair(d1, d2);
            if (decision.status == PairDecision::Status::irreducible) {
                std::cout << "irreducible: " << format_multisegment(table, decision.class_label)
                          << "\n";
            } else {
                std::cout << "length-two: L = " << format_relem(table, decision.langlands_class)
                          << "; other = " << format_multisegment(table, *decision.other_summand)
                          << "\n";
            }
        } else if (app.got_subcommand(cmd_classify)) {
            PointMultiset points = parse_point_multiset_arg(points_text, table);
            SIClassification result = classify_square_integrable(table, points);
            if (result.segment)
                std::cout << "segment " << format_segment(table, *result.segment) << "\n";
            else if (result.essentially_only)
                std::cout << "none (essentially square integrable only)\n";
            else
                std::cout << "none\n";
        } else if (app.got_subcommand(cmd_tempered)) {
            std::vector<Segment> segments;
            for (const std::string& text : seg_list)
                segments.push_back(parse_segment_arg(text, table));
            Multisegment label = tempered_product_class(table, segments);
            std::cout << "irreducible: " << format_multisegment(table, label) << "\n";
        } else if (app.got_subcommand(cmd_casselman)) {
            Word w = parse_word_arg(word_text, table);
            CasselmanVerdict verdict = casselman(table, w);
            std::cout << "word: " << format_word(table, w) << "\n"
                      << "raw-sum: " << format_rational(verdict.raw_sum) << "\n"
                      << "weighted-sum: " << format_rational(verdict.weighted_sum) << "\n"
                      << "sum-zero: " << yesno(verdict.sum_zero) << "\n"
                      << "partials-positive: " << yesno(verdict.partials_positive) << "\n"
                      << "square-integrable: " << yesno(verdict.square_integrable) << "\n"
                      << "essentially: " << yesno(verdict.essentially) << "\n";
        } else if (app.got_subcommand(cmd_verify)) {
            InstanceWindow window = parse_window_arg(window_text, table);
            return run_verify(table, window, suites);
        } else if (app.got_subcommand(cmd_enumerate)) {
            InstanceWindow window = parse_window_arg(window_text, table);
            for (const Multisegment& label : enumerate_labels(table, window))
                std::cout << format_multisegment(table, label) << "\n";
        }
        return 0;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
