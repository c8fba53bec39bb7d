#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "clonelab/axioms.hpp"
#include "clonelab/clones.hpp"
#include "clonelab/core.hpp"
#include "clonelab/pqtree.hpp"
#include "clonelab/set_family.hpp"
#include "clonelab/single_crossing.hpp"
#include "clonelab/single_peaked.hpp"
#include "clonelab/synthesis.hpp"

using namespace clonelab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // analytic "no" verdicts
constexpr int kExitUsage = 2;     // bad flags, unreadable or malformed input

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Profile read_profile(const std::string& path) {
    std::string text = read_input(path);
    // Accept either the text format or the JSON mirror.
    for (char ch : text) {
        if (std::isspace(static_cast<unsigned char>(ch))) continue;
        if (ch == '{') return profile_from_json(text);
        break;
    }
    return parse_profile(text);
}

std::string family_text(const SetFamily& f) {
    std::string out;
    for (const auto& s : f.sets) {
        out += '{';
        for (size_t i = 0; i < s.size(); ++i) {
            if (i) out += ',';
            out += std::to_string(s[i]);
        }
        out += "}\n";
    }
    return out;
}

std::string profile_output(const Profile& p, const std::string& format) {
    return format == "text" ? serialize_profile(p) : profile_to_json(p) + "\n";
}

std::string order_list(const std::vector<int>& xs) {
    std::string out;
    for (size_t i = 0; i < xs.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(xs[i]);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string cur;
    for (char ch : text + ",") {
        if (ch == ',' || ch == ' ') {
            if (!cur.empty()) out.push_back(std::stoi(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"clonelab: clone structures in preference profiles"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string format = "json";
    bool oracle = false;
    bool dot = false;

    auto add_common = [&](CLI::App* sub, bool with_input = true) {
        if (with_input) sub->add_option("input", input, "input file, or - for stdin");
        sub->add_option("--format", format, "output format: json or text")
            ->check(CLI::IsMember({"json", "text"}));
        return sub;
    };

    auto* cmd_clones = add_common(app.add_subcommand("clones", "list all clone sets of a profile"));
    cmd_clones->add_flag("--oracle", oracle, "use the exhaustive subset oracle");

    auto* cmd_family =
        add_common(app.add_subcommand("check-family", "test whether a set family is a clone structure"));

    auto* cmd_pqtree = add_common(app.add_subcommand("pqtree", "PQ-tree of a profile's clone structure"));
    bool input_is_family = false;
    cmd_pqtree->add_flag("--family", input_is_family, "input is a set family, not a profile");
    cmd_pqtree->add_flag("--dot", dot, "emit Graphviz instead of JSON");

    auto* cmd_implement =
        add_common(app.add_subcommand("implement", "synthesize a profile with a given clone structure"));
    bool want_sc = false, want_sp = false;
    cmd_implement->add_flag("--single-crossing", want_sc, "produce a single-crossing profile");
    cmd_implement->add_flag("--single-peaked", want_sp,
                            "produce a single-peaked profile (restricted trees only)");

    auto* cmd_spcheck = add_common(app.add_subcommand("sp-check", "single-peakedness with witness axis"));
    cmd_spcheck->add_flag("--oracle", oracle, "use the all-axes oracle");

    auto* cmd_spdeclone =
        add_common(app.add_subcommand("sp-declone", "declone toward a single-peaked profile"));
    std::string algorithm = "full";
    cmd_spdeclone->add_option("--algorithm", algorithm, "basic (subtrees only) or full")
        ->check(CLI::IsMember({"basic", "full"}));
    cmd_spdeclone->add_flag("--dot", dot, "emit the colored PQ-tree (basic algorithm)");

    auto* cmd_sccheck = add_common(app.add_subcommand("sc-check", "single-crossingness with witness order"));
    cmd_sccheck->add_flag("--oracle", oracle, "use the all-orders oracle");

    auto* cmd_scfixed = add_common(
        app.add_subcommand("sc-declone-fixed", "optimal decloning for a fixed voter order"));
    std::string order_text;
    cmd_scfixed->add_option("--order", order_text, "voter order as comma-separated indices (default identity)");

    auto* cmd_scexact = add_common(
        app.add_subcommand("sc-declone-exact", "exhaustive decloning toward single-crossing"));
    int target_k = 1;
    int max_states = 100000;
    cmd_scexact->add_option("--k", target_k, "required candidate count")->required();
    cmd_scexact->add_option("--max-states", max_states, "search state cap");

    auto* cmd_gen = app.add_subcommand("gen", "generate profiles and reduction instances");
    cmd_gen->require_subcommand(1);
    int gen_m = 4;
    auto* gen_string = cmd_gen->add_subcommand("string", "one voter over m candidates");
    gen_string->add_option("--m", gen_m, "candidate count")->required();
    add_common(gen_string, false);
    auto* gen_fat = cmd_gen->add_subcommand("fat", "minimal profile with the fat sausage structure");
    gen_fat->add_option("--m", gen_m, "candidate count")->required();
    add_common(gen_fat, false);
    auto* gen_slide = cmd_gen->add_subcommand("slide", "slide profile over m candidates");
    gen_slide->add_option("--m", gen_m, "candidate count")->required();
    add_common(gen_slide, false);
    auto* gen_tree = add_common(cmd_gen->add_subcommand(
        "compose-from-tree", "three-voter implementation of a PQ-tree's clone structure"));
    auto* gen_x3c = cmd_gen->add_subcommand("x3c", "decloning instance from an X3C instance");
    std::string x3c_file;
    int x3c_k = 0, x3c_sets = 0;
    uint64_t seed = 0;
    int x3c_base = -1;
    gen_x3c->add_option("--instance", x3c_file, "X3C instance file (one set 'b1 b2 b3' per line)");
    gen_x3c->add_option("--base", x3c_base, "base set size 3k (default: inferred)");
    gen_x3c->add_option("--k", x3c_k, "generate a random instance with |B| = 3k");
    gen_x3c->add_option("--sets", x3c_sets, "number of random sets to generate");
    gen_x3c->add_option("--seed", seed, "seed for random instance generation");
    add_common(gen_x3c, false);
    auto* gen_random = cmd_gen->add_subcommand("random", "uniformly random profile");
    int gen_n = 1;
    gen_random->add_option("--m", gen_m, "candidate count")->required();
    gen_random->add_option("--n", gen_n, "voter count")->required();
    gen_random->add_option("--seed", seed, "rng seed");
    add_common(gen_random, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (cmd_clones->parsed()) {
            Profile p = read_profile(input);
            SetFamily fam = oracle ? brute_force_clone_sets(p) : all_clone_sets(p);
            std::cout << (format == "text" ? family_text(fam) : family_to_json(fam) + "\n");
            return kExitOk;
        }
        if (cmd_family->parsed()) {
            SetFamily fam = family_from_json(read_input(input));
            AxiomReport rep = is_clone_structure(fam);
            if (format == "text") {
                std::cout << (rep.verdict ? "clone structure\n" : "not a clone structure\n");
                for (const auto& v : rep.violations)
                    std::cout << axiom_name(v.axiom) << ": " << v.detail << "\n";
            } else {
                std::cout << report_to_json(rep) << "\n";
            }
            return rep.verdict ? kExitOk : kExitNegative;
        }
        if (cmd_pqtree->parsed()) {
            SetFamily fam = input_is_family ? family_from_json(read_input(input))
                                            : all_clone_sets(read_profile(input));
            AxiomReport rep = is_clone_structure(fam);
            if (!rep.verdict) {
                std::cerr << "input family is not a clone structure\n";
                std::cout << report_to_json(rep) << "\n";
                return kExitNegative;
            }
            PQTree t = build_tree(fam);
            std::cout << (dot ? tree_to_dot(t) : tree_to_json(t) + "\n");
            return kExitOk;
        }
        if (cmd_implement->parsed()) {
            if (want_sc && want_sp)
                throw std::invalid_argument("choose at most one of --single-crossing, --single-peaked");
            SetFamily fam = family_from_json(read_input(input));
            AxiomReport rep = is_clone_structure(fam);
            if (!rep.verdict) {
                std::cout << report_to_json(rep) << "\n";
                return kExitNegative;
            }
            Profile p;
            if (want_sc) {
                p = implement_single_crossing(fam);
            } else if (want_sp) {
                try {
                    p = implement_single_peaked_tree(build_tree(fam));
                } catch (const std::invalid_argument& e) {
                    std::cerr << e.what() << "\n";
                    return kExitNegative;
                }
            } else {
                p = implement_family(fam);
            }
            std::cout << profile_output(p, format);
            return kExitOk;
        }
        if (cmd_spcheck->parsed()) {
            Profile p = read_profile(input);
            auto ax = oracle ? brute_force_axis(p) : is_single_peaked(p);
            nlohmann::ordered_json j;
            j["single_peaked"] = ax.has_value();
            if (ax) j["axis"] = ax->order;
            if (format == "text")
                std::cout << (ax ? "single-peaked, axis: " + order_list(ax->order)
                                 : std::string("not single-peaked"))
                          << "\n";
            else
                std::cout << j.dump(2) << "\n";
            return ax ? kExitOk : kExitNegative;
        }
        if (cmd_spdeclone->parsed()) {
            Profile p = read_profile(input);
            if (algorithm == "basic") {
                auto out = basic_declone_sp(p);
                if (dot) {
                    std::cout << tree_to_dot(out.tree, &out.black);
                } else if (format == "text") {
                    std::cout << serialize_profile(out.result.profile);
                } else {
                    std::cout << declone_result_to_json(out.result) << "\n";
                }
            } else {
                auto res = declone_sp(p);
                std::cout << (format == "text" ? serialize_profile(res.profile)
                                               : declone_result_to_json(res) + "\n");
            }
            return kExitOk;
        }
        if (cmd_sccheck->parsed()) {
            Profile p = read_profile(input);
            auto ord = oracle ? brute_force_sc(p) : is_single_crossing(p);
            nlohmann::ordered_json j;
            j["single_crossing"] = ord.has_value();
            if (ord) j["order"] = ord->order;
            if (format == "text")
                std::cout << (ord ? "single-crossing, order: " + order_list(ord->order)
                                  : std::string("not single-crossing"))
                          << "\n";
            else
                std::cout << j.dump(2) << "\n";
            return ord ? kExitOk : kExitNegative;
        }
        if (cmd_scfixed->parsed()) {
            Profile p = read_profile(input);
            VoterOrder ord;
            if (order_text.empty())
                for (int i = 0; i < p.voters(); ++i) ord.order.push_back(i);
            else
                ord.order = parse_int_list(order_text);
            auto res = sc_declone_fixed(p, ord);
            std::cout << (format == "text" ? serialize_profile(res.profile)
                                           : declone_result_to_json(res) + "\n");
            return kExitOk;
        }
        if (cmd_scexact->parsed()) {
            Profile p = read_profile(input);
            auto res = sc_declone_exact(p, target_k, max_states);
            if (!res) {
                std::cout << (format == "text" ? "infeasible\n" : "{\n  \"feasible\": false\n}\n");
                return kExitNegative;
            }
            std::cout << (format == "text" ? serialize_profile(res->profile)
                                           : declone_result_to_json(*res) + "\n");
            return kExitOk;
        }
        if (gen_string->parsed()) {
            std::cout << profile_output(implement_string(gen_m), format);
            return kExitOk;
        }
        if (gen_fat->parsed()) {
            std::cout << profile_output(implement_fat(gen_m), format);
            return kExitOk;
        }
        if (gen_slide->parsed()) {
            std::cout << profile_output(slide(gen_m), format);
            return kExitOk;
        }
        if (gen_tree->parsed()) {
            PQTree t = tree_from_json(read_input(input));
            std::cout << profile_output(implement_family(tree_to_family(t)), format);
            return kExitOk;
        }
        if (gen_x3c->parsed()) {
            X3CInstance inst;
            if (!x3c_file.empty()) {
                std::istringstream in(read_input(x3c_file));
                inst = parse_x3c(in, x3c_base);
            } else {
                if (x3c_k < 1 || x3c_sets < 1)
                    throw std::invalid_argument("gen x3c needs --instance, or --k and --sets");
                inst.k = x3c_k;
                std::mt19937_64 rng(seed);
                while (static_cast<int>(inst.sets.size()) < x3c_sets) {
                    std::array<int, 3> s;
                    s[0] = static_cast<int>(rng() % (3 * x3c_k));
                    do s[1] = static_cast<int>(rng() % (3 * x3c_k));
                    while (s[1] == s[0]);
                    do s[2] = static_cast<int>(rng() % (3 * x3c_k));
                    while (s[2] == s[0] || s[2] == s[1]);
                    std::sort(s.begin(), s.end());
                    inst.sets.push_back(s);
                }
            }
            auto red = x3c_reduction(inst);
            if (format == "text") {
                std::cout << "# target: " << red.target << "\n";
                for (size_t j = 0; j < red.groups.size(); ++j)
                    std::cout << "# group " << j << ": " << red.groups[j].front() << ".."
                              << red.groups[j].back() << "\n";
                std::cout << serialize_profile(red.profile);
            } else {
                nlohmann::ordered_json j;
                j["target"] = red.target;
                auto& sets = j["instance"] = nlohmann::ordered_json::array();
                for (const auto& s : inst.sets) sets.push_back(s);
                j["groups"] = red.groups;
                j["profile"] = nlohmann::ordered_json::parse(profile_to_json(red.profile));
                std::cout << j.dump(2) << "\n";
            }
            return kExitOk;
        }
        if (gen_random->parsed()) {
            std::mt19937_64 rng(seed);
            Profile p;
            p.m = gen_m;
            if (gen_m < 1 || gen_n < 1) throw std::invalid_argument("gen random: m and n must be positive");
            for (int v = 0; v < gen_n; ++v) {
                LinearOrder r;
                for (CandidateId c = 0; c < gen_m; ++c) r.ranking.push_back(c);
                std::shuffle(r.ranking.begin(), r.ranking.end(), rng);
                p.orders.push_back(std::move(r));
            }
            std::cout << profile_output(p, format);
            return kExitOk;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
