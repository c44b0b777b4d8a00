#include "equicorr/cli.hpp"

#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "equicorr/classes.hpp"
#include "equicorr/compose.hpp"
#include "equicorr/literal.hpp"
#include "equicorr/search.hpp"
#include "equicorr/seq.hpp"
#include "equicorr/table.hpp"

namespace equicorr {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;
constexpr int kDeskScaleMax = 25;

struct SearchArgs {
    int n = 0;
    int threads = 1;
    int ceiling = 30;
    bool force = false;
    bool verify = false;
    bool members = false;
    bool json_out = false;
    std::string checkpoint_dir;
    std::string csv_path;
    int abort_after_shards = 0;
};

void add_search_options(CLI::App* cmd, SearchArgs& args) {
    cmd->add_option("n", args.n, "sequence length")->required();
    cmd->add_option("-t,--threads", args.threads, "worker thread count");
    cmd->add_option("--ceiling", args.ceiling,
                    "largest length accepted without --force");
    cmd->add_flag("--force", args.force, "override the length ceiling");
    cmd->add_flag("--verify", args.verify, "compare against the published table");
    cmd->add_flag("--members", args.members, "print the members of each class");
    cmd->add_flag("--json", args.json_out, "emit a JSON document");
    cmd->add_option("--checkpoint-dir", args.checkpoint_dir,
                    "directory for per-shard checkpoint files");
    cmd->add_option("--csv", args.csv_path, "write the distribution as CSV");
    cmd->add_option("--abort-after-shards", args.abort_after_shards, "")->group("");
}

SearchOptions to_options(const SearchArgs& args) {
    SearchOptions opts;
    opts.threads = args.threads;
    opts.ceiling = args.ceiling;
    opts.force = args.force;
    opts.keep_members = args.members;
    opts.checkpoint_dir = args.checkpoint_dir;
    opts.abort_after_shards = args.abort_after_shards;
    return opts;
}

std::string display(const std::string& rendered) {
    return rendered.empty() ? "(none)" : rendered;
}

void write_csv(const std::string& path,
               const std::vector<VolumeDistribution>& dists) {
    std::ofstream out(path, std::ios::trunc);
    out << "length,volume,count\n";
    for (const auto& d : dists)
        for (const auto& [volume, count] : d.entries)
            out << d.length << "," << volume << "," << count << "\n";
    if (!out) throw std::runtime_error("failed to write CSV file " + path);
}

json distribution_json(const VolumeDistribution& dist) {
    json entries = json::array();
    for (const auto& [volume, count] : dist.entries)
        entries.push_back({{"volume", volume}, {"count", count}});
    return entries;
}

json classes_json(const std::vector<NontrivialClass>& classes) {
    json out = json::array();
    for (const auto& cls : classes) {
        json members = json::array();
        for (const auto& m : cls.members) members.push_back(format_sequence(m));
        out.push_back({{"correlations", cls.correlations}, {"members", members}});
    }
    return out;
}

int cmd_search(const SearchArgs& args, bool is_resume, std::ostream& out) {
    if (is_resume && args.checkpoint_dir.empty())
        throw std::invalid_argument("resume needs --checkpoint-dir");

    const SearchResult result = search_binary(args.n, to_options(args));
    const std::string rendered = render_distribution(result.distribution);

    std::optional<std::string> expected;
    if (args.verify) {
        const auto& table = known_table();
        const auto row = table.find(args.n);
        expected = row == table.end() ? std::string() : row->second;
    }
    const bool match = !expected || *expected == rendered;

    if (!args.csv_path.empty()) write_csv(args.csv_path, {result.distribution});

    if (args.json_out) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = is_resume ? "resume" : "search";
        doc["length"] = args.n;
        doc["equivocal"] = result.distribution.equivocal;
        doc["distribution"] = distribution_json(result.distribution);
        doc["rendered"] = rendered;
        if (args.members) doc["classes"] = classes_json(result.classes);
        if (expected) {
            doc["expected"] = *expected;
            doc["match"] = match;
        }
        out << doc.dump(2) << "\n";
    } else {
        out << display(rendered) << "\n";
        if (args.members) {
            std::size_t i = 0;
            for (const auto& cls : result.classes) {
                out << "class " << ++i << " (volume " << cls.members.size() << "):";
                for (const auto& m : cls.members) out << " " << format_sequence(m);
                out << "\n";
            }
        }
        if (expected)
            out << "published: " << display(*expected)
                << (match ? " (match)" : " (MISMATCH)") << "\n";
    }
    return match ? 0 : 1;
}

json factor_json(const IrreducibleFactorization& fact) {
    json factors = json::array();
    for (const auto& f : fact.factors)
        factors.push_back({{"poly", format_sequence(f.poly)},
                           {"multiplicity", f.multiplicity}});
    return {{"sign", fact.sign},
            {"shift", fact.shift},
            {"content", fact.content.get_str()},
            {"factors", factors}};
}

json split_json(const PalindromicSplit& split) {
    json palindromic = json::array();
    for (const auto& f : split.palindromic)
        palindromic.push_back({{"poly", format_sequence(f.poly)},
                               {"multiplicity", f.multiplicity}});
    json pairs = json::array();
    for (const auto& p : split.pairs)
        pairs.push_back({{"g", format_sequence(p.g)},
                         {"conjugate", format_sequence(p.conj_g)},
                         {"b", p.b},
                         {"c", p.c}});
    return {{"palindromic", palindromic}, {"pairs", pairs}};
}

int cmd_classify(const std::string& literal, bool json_out, std::ostream& out) {
    const IntLaurentSeq f = parse_sequence(literal);

    if (f.is_zero()) {
        if (json_out) {
            json doc;
            doc["schema_version"] = kSchemaVersion;
            doc["command"] = "classify";
            doc["input"] = format_sequence(f);
            doc["zero"] = true;
            doc["class_count"] = 1;
            doc["nontrivial"] = false;
            doc["equivocal"] = false;
            doc["trivial_representatives"] = json::array({"0"});
            out << doc.dump(2) << "\n";
        } else {
            out << "zero sequence: only 0 shares its autocorrelation\n";
        }
        return 0;
    }

    const IrreducibleFactorization fact = factor(f);
    const PalindromicSplit split = palindromic_split(fact);
    const EquicorrClassReport report = enumerate_class(split);
    const bool equivocal = report.binary_members.size() >= 2;

    if (json_out) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "classify";
        doc["input"] = format_sequence(f);
        doc["zero"] = false;
        doc["sequence"] = format_sequence(f);
        doc["factorization"] = factor_json(fact);
        doc["split"] = split_json(split);
        doc["class_count"] = report.N.get_si();
        doc["nontrivial"] = report.nontrivial;
        doc["equivocal"] = equivocal;
        json trivial = json::array();
        for (const auto& t : report.trivial_reps) trivial.push_back(format_sequence(t));
        doc["trivial_representatives"] = trivial;
        doc["self_conjugate"] =
            report.self_conjugate_rep
                ? json(format_sequence(*report.self_conjugate_rep))
                : json(nullptr);
        json members = json::array();
        for (const auto& m : report.binary_members) members.push_back(format_sequence(m));
        doc["binary_members"] = members;
        out << doc.dump(2) << "\n";
    } else {
        out << "input: " << format_sequence(f) << "\n";
        out << "factorization: sign " << fact.sign << ", shift " << fact.shift
            << ", content " << fact.content.get_str() << "\n";
        for (const auto& fc : fact.factors)
            out << "  factor " << format_sequence(fc.poly) << " ^" << fc.multiplicity
                << "\n";
        out << "palindromic part:" << (split.palindromic.empty() ? " (none)" : "")
            << "\n";
        for (const auto& fc : split.palindromic)
            out << "  " << format_sequence(fc.poly) << " ^" << fc.multiplicity << "\n";
        out << "conjugate pairs:" << (split.pairs.empty() ? " (none)" : "") << "\n";
        for (const auto& p : split.pairs)
            out << "  g " << format_sequence(p.g) << "  conjugate "
                << format_sequence(p.conj_g) << "  b " << p.b << "  c " << p.c << "\n";
        out << "class count: " << report.N.get_str() << "\n";
        out << "nontrivial: " << (report.nontrivial ? "yes" : "no") << "\n";
        out << "equivocal: " << (equivocal ? "yes" : "no") << "\n";
        out << "trivial representatives:\n";
        for (const auto& t : report.trivial_reps)
            out << "  " << format_sequence(t) << "\n";
        if (report.self_conjugate_rep)
            out << "self-conjugate: " << format_sequence(*report.self_conjugate_rep)
                << "\n";
        out << "binary members:" << (report.binary_members.empty() ? " (none)" : "")
            << "\n";
        for (const auto& m : report.binary_members)
            out << "  " << format_sequence(m) << "\n";
    }
    return 0;
}

int cmd_compose(const std::vector<std::string>& literals, bool json_out,
                std::ostream& out) {
    if (literals.size() != 2 && literals.size() != 4)
        throw std::invalid_argument("compose takes two literals (a b) or four (a b c d)");

    const IntLaurentSeq a = parse_sequence(literals[0]);
    const IntLaurentSeq b = parse_sequence(literals[1]);
    if (b.is_zero()) throw std::invalid_argument("the inner sequence must be nonzero");
    const long m = static_cast<long>(b.length());
    const IntLaurentSeq f = compose(a, b, m);

    if (literals.size() == 2) {
        if (json_out) {
            json doc;
            doc["schema_version"] = kSchemaVersion;
            doc["command"] = "compose";
            doc["composite"] = format_sequence(f);
            doc["length"] = f.length();
            out << doc.dump(2) << "\n";
        } else {
            out << format_sequence(f) << "\n";
        }
        return 0;
    }

    const IntLaurentSeq c = parse_sequence(literals[2]);
    const IntLaurentSeq d = parse_sequence(literals[3]);
    const IntLaurentSeq g = compose(c, d, m);
    const bool trivial = composition_is_trivial(a, b, c, d, m);

    if (json_out) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "compose";
        doc["composites"] = json::array({format_sequence(f), format_sequence(g)});
        doc["trivial"] = trivial;
        out << doc.dump(2) << "\n";
    } else {
        out << "composite 1: " << format_sequence(f) << "\n";
        out << "composite 2: " << format_sequence(g) << "\n";
        out << "verdict: " << (trivial ? "trivial" : "nontrivial") << "\n";
    }
    return 0;
}

std::pair<int, int> parse_range(const std::string& text) {
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            const int n = std::stoi(text);
            return {n, n};
        }
        return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range \"" + text + "\": use A..B or a single length");
    }
}

int cmd_verify_table(const std::string& range, int threads, bool force,
                     bool json_out, const std::string& csv_path,
                     const std::vector<std::string>& row_overrides,
                     std::ostream& out) {
    const auto [lo, hi] = parse_range(range);
    if (lo < 1 || hi < lo) throw std::invalid_argument("range must satisfy 1 <= A <= B");
    if (hi > kDeskScaleMax && !force)
        throw ResourceLimitError("lengths above " + std::to_string(kDeskScaleMax) +
                                 " are extended scale; pass --force to run them");

    std::map<int, std::string> table = known_table();
    for (const auto& o : row_overrides) {
        const auto eq = o.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad row override \"" + o + "\": use N=expected");
        table[std::stoi(o.substr(0, eq))] = o.substr(eq + 1);
    }

    SearchOptions opts;
    opts.threads = threads;
    opts.force = force;

    json results = json::array();
    std::vector<VolumeDistribution> dists;
    int mismatches = 0;
    std::ostringstream text;
    for (int n = lo; n <= hi; ++n) {
        const VolumeDistribution dist = volume_distribution(n, opts);
        const std::string rendered = render_distribution(dist);
        const auto row = table.find(n);
        const std::string expected = row == table.end() ? std::string() : row->second;
        const bool match = rendered == expected;
        if (!match) ++mismatches;
        dists.push_back(dist);
        if (json_out) {
            results.push_back({{"length", n},
                               {"computed", rendered},
                               {"expected", expected},
                               {"match", match}});
        } else {
            text << "length " << n << ": " << display(rendered);
            if (!match) text << " (MISMATCH: expected " << display(expected) << ")";
            text << "\n";
        }
    }

    if (!csv_path.empty()) write_csv(csv_path, dists);

    if (json_out) {
        json doc;
        doc["schema_version"] = kSchemaVersion;
        doc["command"] = "verify-table";
        doc["from"] = lo;
        doc["to"] = hi;
        doc["extended"] = hi > kDeskScaleMax;
        doc["results"] = results;
        doc["mismatches"] = mismatches;
        out << doc.dump(2) << "\n";
    } else {
        out << text.str();
        out << "verified " << (hi - lo + 1) << " lengths, " << mismatches
            << " mismatch" << (mismatches == 1 ? "" : "es") << "\n";
    }
    return mismatches == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"exact equicorrelationality toolkit for integer sequences"};
    app.require_subcommand(1);

    SearchArgs search_args;
    auto* search = app.add_subcommand(
        "search", "find the nontrivial binary classes at one length");
    add_search_options(search, search_args);

    SearchArgs resume_args;
    auto* resume = app.add_subcommand(
        "resume", "continue a checkpointed search (needs --checkpoint-dir)");
    add_search_options(resume, resume_args);

    std::string classify_literal;
    bool classify_json = false;
    auto* classify =
        app.add_subcommand("classify", "factor a sequence and enumerate its classes");
    classify->add_option("sequence", classify_literal, "sequence literal")->required();
    classify->add_flag("--json", classify_json, "emit a JSON document");

    std::vector<std::string> compose_literals;
    bool compose_json = false;
    auto* compose_cmd = app.add_subcommand(
        "compose", "compose sequences and judge composite triviality");
    compose_cmd->add_option("literals", compose_literals, "a b, or a b c d");
    compose_cmd->add_flag("--json", compose_json, "emit a JSON document");

    std::string range = "1..21";
    int table_threads = 1;
    bool table_force = false;
    bool table_json = false;
    std::string table_csv;
    std::vector<std::string> row_overrides;
    auto* verify_table = app.add_subcommand(
        "verify-table", "recompute a length range and diff the published table");
    verify_table->add_option("range", range, "A..B or a single length");
    verify_table->add_option("-t,--threads", table_threads, "worker thread count");
    verify_table->add_flag("--force", table_force, "allow extended-scale lengths");
    verify_table->add_flag("--json", table_json, "emit a JSON document");
    verify_table->add_option("--csv", table_csv, "write all distributions as CSV");
    verify_table->add_option("--expect-row", row_overrides, "")->group("");

    // CLI11 reserves the bare token "++" as a subcommand terminator; in this
    // grammar it can only be the all-ones pair, so rewrite it to the
    // equivalent comma-form literal before parsing.
    std::vector<std::string> cooked(args);
    for (auto& a : cooked)
        if (a == "++") a = "1,1";

    std::vector<const char*> argv;
    argv.reserve(cooked.size() + 1);
    argv.push_back("equicorr");
    for (const auto& a : cooked) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        if (search->parsed()) return cmd_search(search_args, false, out);
        if (resume->parsed()) return cmd_search(resume_args, true, out);
        if (classify->parsed()) return cmd_classify(classify_literal, classify_json, out);
        if (compose_cmd->parsed())
            return cmd_compose(compose_literals, compose_json, out);
        if (verify_table->parsed())
            return cmd_verify_table(range, table_threads, table_force, table_json,
                                    table_csv, row_overrides, out);
        err << "no command selected\n";
        return 2;
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e, out, err);
        return rc == 0 ? 0 : 2;
    } catch (const SearchAborted& e) {
        err << "search aborted: " << e.what() << "\n";
        return 75;
    } catch (const ResourceLimitError& e) {
        err << "resource guard: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace equicorr
