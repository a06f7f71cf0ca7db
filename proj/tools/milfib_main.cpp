#include "milfib/analysis.hpp"
#include "milfib/corpus.hpp"
#include "milfib/errors.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw milfib::Error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<int> read_signs_file(const std::string& path) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error& e) {
        throw milfib::ParseError("signs file: invalid JSON: " + std::string(e.what()));
    }
    if (!j.is_array())
        throw milfib::ParseError("signs file: expected an array of +1/-1");
    std::vector<int> signs;
    for (const auto& v : j) {
        if (!v.is_number_integer())
            throw milfib::ParseError("signs file: entries must be integers +1 or -1");
        signs.push_back(v.get<int>());
    }
    return signs;
}

struct CliOptions {
    std::string mode = "bounds";
    std::uint64_t mod = 0;
    std::string format = "text";
    std::vector<std::string> checks;
    std::string signs_file;
};

milfib::AnalysisConfig build_config(const CliOptions& opt) {
    milfib::AnalysisConfig config;
    auto mode = milfib::mode_from_name(opt.mode);
    if (!mode)
        throw milfib::ArgumentError("unknown mode '" + opt.mode +
                                    "' (choose bounds, exact, oracle or all)");
    config.mode = *mode;
    if (opt.mod != 0)
        config.ring = milfib::Ring::prime_field(opt.mod);
    auto format = milfib::format_from_name(opt.format);
    if (!format)
        throw milfib::ArgumentError("unknown format '" + opt.format +
                                    "' (choose text or structured)");
    config.format = *format;
    for (const std::string& name : opt.checks) {
        auto c = milfib::check_from_name(name);
        if (!c)
            throw milfib::ArgumentError("unknown check '" + name + "'");
        config.selected_checks.insert(*c);
    }
    if (!opt.signs_file.empty())
        config.j2_signs = read_signs_file(opt.signs_file);
    return config;
}

void print_report(const milfib::Report& report, const milfib::AnalysisConfig& config) {
    if (config.format == milfib::OutputFormat::Structured)
        std::cout << milfib::serialize_report(report);
    else
        std::cout << milfib::render_report_text(report);
}

int cmd_analyze(const std::string& file, const CliOptions& opt) {
    milfib::AnalysisConfig config = build_config(opt);
    milfib::Report report = milfib::analyze_text(read_file(file), config);
    print_report(report, config);
    return 0;
}

int cmd_examples_list() {
    for (const milfib::CorpusEntry& e : milfib::corpus()) {
        std::cout << e.name << ": " << e.headline << "\n";
        std::cout << "    " << e.description << "\n";
        for (const std::string& a : e.annotations)
            std::cout << "    note: " << a << "\n";
    }
    return 0;
}

int cmd_examples_run(const std::string& name, const CliOptions& opt) {
    std::vector<const milfib::CorpusEntry*> entries;
    if (name == "all") {
        for (const milfib::CorpusEntry& e : milfib::corpus())
            entries.push_back(&e);
    } else {
        const milfib::CorpusEntry* e = milfib::find_corpus_entry(name);
        if (!e) {
            std::cerr << "error: no bundled example named '" << name
                      << "' (try 'examples list')\n";
            return 1;
        }
        entries.push_back(e);
    }

    bool all_ok = true;
    for (const milfib::CorpusEntry* e : entries) {
        milfib::CorpusRunOutcome outcome = milfib::run_corpus_entry(*e);
        if (entries.size() == 1) {
            milfib::AnalysisConfig config = e->config;
            CliOptions local = opt;
            config.format = *milfib::format_from_name(local.format);
            print_report(outcome.report, config);
        }
        if (outcome.ok()) {
            std::cout << "[ok] " << e->name << ": " << e->headline << "\n";
        } else {
            all_ok = false;
            std::cout << "[MISMATCH] " << e->name << "\n";
            for (const std::string& m : outcome.mismatches)
                std::cout << "    " << m << "\n";
        }
    }
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "homological invariants of Milnor fibres with one-dimensional singular locus, "
        "computed from deformation diagram files"};
    app.require_subcommand(1);

    CliOptions opt;

    CLI::App* analyze = app.add_subcommand("analyze", "analyze a diagram file");
    std::string file;
    analyze->add_option("file", file, "diagram file (canonical JSON schema)")->required();
    analyze->add_option("--mode", opt.mode, "bounds | exact | oracle | all (default bounds)");
    analyze->add_option("--mod", opt.mod, "compute the exact mode over F_p for this prime");
    analyze->add_option("--format", opt.format, "text | structured (default text)");
    analyze->add_option("--check", opt.checks,
                        "restrict to the named checks (repeatable): euler, vertical_bound, "
                        "special_bound, concentration, bouquet, nonsplitting, cross_validate");
    analyze->add_option("--signs", opt.signs_file,
                        "JSON file with one +1/-1 per local loop (exact mode orientation signs)");

    CLI::App* examples = app.add_subcommand("examples", "bundled example deformations");
    examples->require_subcommand(1);
    CLI::App* list = examples->add_subcommand("list", "list the bundled examples");
    CLI::App* run = examples->add_subcommand("run", "re-compute a bundled example (or 'all') "
                                                    "and verify its headline numbers");
    std::string run_name;
    run->add_option("name", run_name, "example name or 'all'")->required();
    run->add_option("--format", opt.format, "text | structured (default text)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (analyze->parsed())
            return cmd_analyze(file, opt);
        if (list->parsed())
            return cmd_examples_list();
        if (run->parsed())
            return cmd_examples_run(run_name, opt);
    } catch (const milfib::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
