// arcnest: statistics, the triple-reverse involution, verification sweeps,
// counting series, and rendering for arc annotated diagrams.
#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <chrono>
#include <future>
#include <iostream>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "arcnest/bijection.hpp"
#include "arcnest/diagram.hpp"
#include "arcnest/enumerate.hpp"
#include "arcnest/format.hpp"
#include "arcnest/render.hpp"
#include "arcnest/stats.hpp"
#include "arcnest/structure.hpp"

using nlohmann::json;

namespace {

int sweep_cap() {
    const char* env = std::getenv("ARCNEST_MAX_N");
    if (!env || !*env) return 10;
    return std::max(0, std::atoi(env));
}

// Inline argument, or one diagram per non-blank line when reading stdin.
std::vector<std::string> gather_inputs(const std::string& arg) {
    std::vector<std::string> lines;
    if (arg != "-") {
        lines.push_back(arg);
        return lines;
    }
    std::string line;
    while (std::getline(std::cin, line))
        if (line.find_first_not_of(" \t\r") != std::string::npos) lines.push_back(line);
    return lines;
}

json label_json(const arcnest::Label& l) {
    return json{{"nest", l.nest}, {"cross", l.cross}};
}

json intervals_json(const arcnest::AdmissibilityReport& report, bool layered) {
    json arr = json::array();
    for (const auto& item : report.intervals) {
        json entry;
        if (layered) entry["layer"] = item.layer == arcnest::Layer::Upper ? "upper" : "lower";
        entry["interval"] = {item.interval.lo, item.interval.hi};
        entry["type"] = arcnest::to_string(item.type.kind);
        if (item.type.kind == arcnest::BlockKind::OC) entry["arcs"] = item.type.n;
        if (item.type.kind == arcnest::BlockKind::OCOC) {
            entry["n"] = item.type.n;
            entry["k"] = item.type.k;
            entry["j"] = item.type.j;
        }
        if (item.type.kind == arcnest::BlockKind::Inadmissible) entry["reason"] = item.type.reason;
        arr.push_back(entry);
    }
    return arr;
}

int cmd_stats(const std::string& input, bool enhanced) {
    for (const std::string& line : gather_inputs(input)) {
        auto [cls, d] = arcnest::parse(line);
        const bool perm = cls == arcnest::ObjectClass::Permutation;
        if (perm && enhanced) {
            std::cerr << "error: --enhanced does not apply to permutations "
                         "(the upper layer is always counted enhanced)\n";
            return 1;
        }
        json out;
        out["class"] = arcnest::to_string(cls);
        out["n"] = d.n;
        if (!perm) out["enhanced"] = enhanced;

        auto label = arcnest::label_of(cls, d, enhanced);
        if (const auto* pl = std::get_if<arcnest::PermLabel>(&label)) {
            out["upper"] = label_json(pl->upper);
            out["lower"] = label_json(pl->lower);
        } else {
            const auto& l = std::get<arcnest::Label>(label);
            out["nest"] = l.nest;
            out["cross"] = l.cross;
        }
        out["cr"] = arcnest::max_crossing(cls, d, enhanced);
        out["ne"] = arcnest::max_nesting(cls, d, enhanced);

        auto role_names = [&](arcnest::Layer layer) {
            json arr = json::array();
            auto rs = arcnest::roles(d, layer);
            for (int v = 1; v <= d.n; ++v) arr.push_back(arcnest::to_string(rs[static_cast<size_t>(v)]));
            return arr;
        };
        if (perm)
            out["roles"] = {{"upper", role_names(arcnest::Layer::Upper)},
                            {"lower", role_names(arcnest::Layer::Lower)}};
        else
            out["roles"] = role_names(arcnest::Layer::Upper);

        auto report = arcnest::is_admissible(cls, d, enhanced);
        out["admissible"] = report.admissible;
        out["intervals"] = intervals_json(report, perm);
        if (!report.admissible) out["reason"] = report.reason;

        std::cout << out.dump() << "\n";
    }
    return 0;
}

int cmd_ptr(const std::string& input, bool enhanced, const std::string& semantics,
            bool step4_openers, bool verify) {
    arcnest::PtrOptions opts;
    opts.step4_openers = step4_openers;
    opts.semantics = semantics == "def2" ? arcnest::ColourSemantics::PerClass
                                         : arcnest::ColourSemantics::Global;
    for (const std::string& line : gather_inputs(input)) {
        auto [cls, d] = arcnest::parse(line);
        if (cls == arcnest::ObjectClass::Permutation && enhanced) {
            std::cerr << "error: --enhanced does not apply to permutations\n";
            return 1;
        }
        arcnest::PtrResult r = arcnest::ptr(cls, d, enhanced, opts);
        if (verify) {
            arcnest::PtrResult back = arcnest::ptr(r.cls, r.diagram, enhanced, opts);
            arcnest::ArcDiagram orig = d;
            arcnest::canonicalize(orig);
            if (!(back.diagram == orig)) {
                std::cerr << "internal error: applying the transform twice did not "
                             "return the input\n";
                return 3;
            }
        }
        std::cout << arcnest::serialize(r.cls, r.diagram) << "\n";
    }
    return 0;
}

struct ShardTally {
    std::uint64_t scanned = 0;
    std::uint64_t admissible = 0;
    std::uint64_t involution_failures = 0;
    std::uint64_t swap_failures = 0;
    std::uint64_t first_failure_idx = UINT64_MAX;
    std::string first_failure;
};

ShardTally run_shard(arcnest::ObjectClass cls, int n, bool enhanced, unsigned shard,
                     unsigned nshards) {
    ShardTally t;
    std::uint64_t idx = 0;
    arcnest::for_each_object(cls, n, [&](const arcnest::ArcDiagram& d) {
        const std::uint64_t my = idx++;
        if (my % nshards != shard) return;
        ++t.scanned;
        if (!arcnest::is_admissible(cls, d, enhanced).admissible) return;
        ++t.admissible;
        auto note_failure = [&](const char* what) {
            if (my < t.first_failure_idx) {
                t.first_failure_idx = my;
                t.first_failure = std::string(what) + ": " + arcnest::serialize(cls, d);
            }
        };
        arcnest::PtrResult r1 = arcnest::ptr(cls, d, enhanced);
        arcnest::PtrResult r2 = arcnest::ptr(r1.cls, r1.diagram, enhanced);
        if (!(r2.diagram == d)) {
            ++t.involution_failures;
            note_failure("involution");
        }
        auto l0 = arcnest::label_of(cls, d, enhanced);
        auto l1 = arcnest::label_of(r1.cls, r1.diagram, enhanced);
        bool ok;
        if (const auto* p0 = std::get_if<arcnest::PermLabel>(&l0))
            ok = std::get<arcnest::PermLabel>(l1) == p0->swapped();
        else
            ok = std::get<arcnest::Label>(l1) == std::get<arcnest::Label>(l0).swapped();
        if (!ok) {
            ++t.swap_failures;
            note_failure("label-swap");
        }
    });
    return t;
}

int cmd_check(const std::string& cls_name, bool enhanced, int max_n) {
    const auto start = std::chrono::steady_clock::now();
    arcnest::ObjectClass cls = cls_name == "matching" ? arcnest::ObjectClass::Matching
                               : cls_name == "set-partition" ? arcnest::ObjectClass::SetPartition
                                                             : arcnest::ObjectClass::Permutation;
    if (cls == arcnest::ObjectClass::Permutation && enhanced) {
        std::cerr << "error: --enhanced does not apply to permutations\n";
        return 1;
    }
    const int cap = sweep_cap();
    const int maxn = std::min(max_n < 0 ? cap : max_n, cap);

    unsigned nshards = std::thread::hardware_concurrency();
    if (nshards == 0) nshards = 1;
    nshards = std::min(nshards, 16u);

    json sizes = json::array();
    std::uint64_t scanned = 0, admissible = 0, inv_fail = 0, swap_fail = 0;
    std::string first_failure;

    for (int n = 0; n <= maxn; ++n) {
        std::vector<std::future<ShardTally>> futures;
        for (unsigned s = 0; s < nshards; ++s)
            futures.push_back(std::async(std::launch::async, run_shard, cls, n, enhanced, s, nshards));
        std::uint64_t n_scanned = 0, n_admissible = 0;
        std::uint64_t best_idx = UINT64_MAX;
        for (auto& f : futures) {
            ShardTally t = f.get();
            n_scanned += t.scanned;
            n_admissible += t.admissible;
            inv_fail += t.involution_failures;
            swap_fail += t.swap_failures;
            if (t.first_failure_idx < best_idx) {
                best_idx = t.first_failure_idx;
                if (first_failure.empty()) first_failure = t.first_failure;
            }
        }
        scanned += n_scanned;
        admissible += n_admissible;
        sizes.push_back({{"n", n},
                         {"objects", n_scanned},
                         {"admissible", n_admissible}});
    }

    json out;
    out["class"] = cls_name;
    out["enhanced"] = enhanced;
    out["min_n"] = 0;
    out["max_n"] = maxn;
    out["objects_scanned"] = scanned;
    out["admissible"] = admissible;
    out["involution_failures"] = inv_fail;
    out["label_swap_failures"] = swap_fail;
    out["sizes"] = sizes;
    if (!first_failure.empty()) out["first_failure"] = first_failure;
    std::cout << out.dump() << "\n";

    const auto elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    std::cerr << "elapsed: " << elapsed.count() << " ms\n";
    return (inv_fail || swap_fail) ? 3 : 0;
}

int cmd_enum(const std::string& cls_name, bool enhanced, int terms, int oracle_up_to, bool oeis,
             bool as_json, bool ratio) {
    if (cls_name == "permutation") {
        std::cerr << "error: permutations have no closed counting series; use 'check'\n";
        return 1;
    }
    if (terms < 1) {
        std::cerr << "error: --terms must be at least 1\n";
        return 1;
    }
    const arcnest::ObjectClass cls = cls_name == "matching" ? arcnest::ObjectClass::Matching
                                                            : arcnest::ObjectClass::SetPartition;
    const arcnest::Family fam =
        cls == arcnest::ObjectClass::Matching
            ? (enhanced ? arcnest::Family::EnhancedMatchings : arcnest::Family::Matchings)
            : (enhanced ? arcnest::Family::EnhancedSetPartitions : arcnest::Family::SetPartitions);

    const std::vector<arcnest::BigInt> seq = arcnest::admissible_counts(fam, terms - 1);

    if (oracle_up_to >= 0) {
        const int k = std::min({oracle_up_to, terms - 1, sweep_cap()});
        for (int n = 0; n <= k; ++n) {
            arcnest::BigInt brute = arcnest::count_admissible(cls, n, enhanced);
            if (brute != seq[static_cast<size_t>(n)]) {
                std::cerr << "internal error: series term " << seq[static_cast<size_t>(n)]
                          << " and exhaustive count " << brute << " disagree at n=" << n << "\n";
                return 3;
            }
        }
        std::cerr << "oracle check passed for n <= " << k << "\n";
    }

    if (as_json) {
        std::string out = "[";
        for (size_t i = 0; i < seq.size(); ++i) {
            if (i) out += ", ";
            out += seq[i].str();
        }
        std::cout << out << "]\n";
        return 0;
    }
    for (size_t i = 0; i < seq.size(); ++i) {
        if (oeis) {
            std::cout << i << " " << seq[i] << "\n";
        } else if (ratio) {
            const arcnest::BigInt total = arcnest::count_objects(cls, static_cast<int>(i));
            const double r = total == 0 ? 0.0
                                        : seq[i].convert_to<double>() / total.convert_to<double>();
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.6f", r);
            std::cout << i << " " << seq[i] << " " << total << " " << buf << "\n";
        } else {
            std::cout << seq[i] << "\n";
        }
    }
    return 0;
}

int cmd_render(const std::string& input, const std::string& format) {
    for (const std::string& line : gather_inputs(input)) {
        auto [cls, d] = arcnest::parse(line);
        (void)cls;
        std::cout << (format == "svg" ? arcnest::render_svg(d) : arcnest::render_ascii(d));
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"arc annotated diagrams: crossing/nesting statistics and the "
                 "triple-reverse involution"};
    app.require_subcommand(1);

    std::string input, semantics = "def1", cls_name, format = "ascii";
    bool enhanced = false, step4_openers = false, verify = false;
    bool oeis = false, as_json = false, ratio = false;
    int max_n = -1, terms = 15, oracle_up_to = -1;

    auto* stats = app.add_subcommand("stats", "crossing/nesting label, roles, admissibility");
    stats->add_option("input", input, "diagram text, or - for one per stdin line")->required();
    stats->add_flag("--enhanced", enhanced, "count loops/shared endpoints (matchings, partitions)");

    auto* ptrc = app.add_subcommand("ptr", "apply the involution and print the image");
    ptrc->add_option("input", input, "diagram text, or - for one per stdin line")->required();
    ptrc->add_flag("--enhanced", enhanced, "enhanced reading for matchings and partitions");
    ptrc->add_option("--coloured-semantics", semantics, "def1: relabel globally; def2: per colour class")
        ->check(CLI::IsMember({"def1", "def2"}));
    ptrc->add_flag("--step4-openers", step4_openers,
                   "experimental: reverse connecting openers instead of closers");
    ptrc->add_flag("--verify", verify, "re-apply and require the original back");

    auto* check = app.add_subcommand("check", "exhaustive involution and label-swap sweep");
    check->add_option("--class", cls_name, "matching | set-partition | permutation")
        ->required()
        ->check(CLI::IsMember({"matching", "set-partition", "permutation"}));
    check->add_flag("--enhanced", enhanced, "enhanced reading (not valid for permutations)");
    check->add_option("--max-n", max_n, "largest size to sweep (capped by ARCNEST_MAX_N)");

    auto* enumc = app.add_subcommand("enum", "terms of the admissible-count series");
    enumc->add_option("--class", cls_name, "matching | set-partition")
        ->required()
        ->check(CLI::IsMember({"matching", "set-partition", "permutation"}));
    enumc->add_flag("--enhanced", enhanced, "enhanced variant of the series");
    enumc->add_option("--terms", terms, "number of terms, starting at n=0");
    enumc->add_option("--oracle-check-up-to", oracle_up_to,
                      "cross-check terms against exhaustive counts for n <= K");
    enumc->add_flag("--oeis", oeis, "b-file style: index and value per line");
    enumc->add_flag("--json", as_json, "print one JSON array");
    enumc->add_flag("--ratio", ratio, "also print total objects and admissible/total");

    auto* render = app.add_subcommand("render", "draw the diagram");
    render->add_option("input", input, "diagram text, or - for one per stdin line")->required();
    render->add_option("--format", format, "ascii | svg")->check(CLI::IsMember({"ascii", "svg"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(stats)) return cmd_stats(input, enhanced);
        if (app.got_subcommand(ptrc)) return cmd_ptr(input, enhanced, semantics, step4_openers, verify);
        if (app.got_subcommand(check)) return cmd_check(cls_name, enhanced, max_n);
        if (app.got_subcommand(enumc)) return cmd_enum(cls_name, enhanced, terms, oracle_up_to, oeis, as_json, ratio);
        if (app.got_subcommand(render)) return cmd_render(input, format);
    } catch (const arcnest::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const arcnest::InadmissibleError& e) {
        std::cerr << "inadmissible: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
