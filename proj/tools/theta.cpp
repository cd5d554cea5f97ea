#include <algorithm>
#include <array>
#include <future>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "theta/io.hpp"
#include "theta/monoid.hpp"
#include "theta/ring.hpp"
#include "theta/tropical.hpp"

using namespace theta;

namespace {

std::map<std::string, Int> parse_weights(const Geometry& g, const std::string& text,
                                         Int def) {
    std::map<std::string, Int> w;
    for (auto& d : g.complex.divisors) w[d] = def;
    if (text.empty()) return w;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw std::runtime_error("weights syntax: label=int,...");
        w[item.substr(0, eq)] = std::stoll(item.substr(eq + 1));
    }
    return w;
}

std::string class_str(const Vec& a) {
    std::string s = "[";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(a[i]);
    }
    return s + "]";
}

struct Options {
    std::string geometry, table_path, format = "text";
    unsigned jobs = 1;
    unsigned long long seed = 0;
};

void print_element(const Options& opt, const ThetaElement& e) {
    if (opt.format == "json") std::cout << io::element_json(e) << "\n";
    else std::cout << e.str() << "\n";
}

InvariantTable load_table_opt(const Geometry& g, const Options& opt) {
    if (opt.table_path.empty()) {
        InvariantTable t;
        t.policy = TablePolicy::Complete;
        return t;
    }
    return io::load_table(g, opt.table_path);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact theta-ring and tropical-map calculator"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--geometry", opt.geometry, "geometry JSON file");
    app.add_option("--table", opt.table_path, "invariant table JSON-lines file");
    app.add_option("--format", opt.format, "output format: text|json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_option("--jobs", opt.jobs, "parallel workers for --all sweeps");
    app.add_option("--seed", opt.seed, "seed for randomized suites");

    std::string p1s, p2s, p3s, class_s, phis, ss_weights, pres_path, fam_path, op,
        monoid_path, eval_points;
    Int bound = 3;
    bool all = false;
    size_t edge_index = 1;

    auto* cbuild = app.add_subcommand("build", "load and validate a scenario");
    auto* cskel = app.add_subcommand("skeleton", "print the skeleton");
    auto* cpoints = app.add_subcommand("points", "enumerate skeleton points");
    cpoints->add_option("--bound", bound);
    cpoints->add_option("--phi", phis, "per-label weights label=int,...");
    auto* ccand = app.add_subcommand("candidates", "candidate output points");
    ccand->add_option("--p1", p1s)->required();
    ccand->add_option("--p2", p2s)->required();
    ccand->add_option("--class", class_s)->required();
    auto* cmul = app.add_subcommand("multiply", "product of two theta generators");
    cmul->add_option("--p1", p1s)->required();
    cmul->add_option("--p2", p2s)->required();
    auto* cassoc = app.add_subcommand("assoc", "associativity check");
    cassoc->add_option("--p1", p1s);
    cassoc->add_option("--p2", p2s);
    cassoc->add_option("--p3", p3s);
    cassoc->add_flag("--all", all, "all triples of points with phi <= bound");
    cassoc->add_option("--bound", bound);
    cassoc->add_option("--phi", phis);
    auto* cunit = app.add_subcommand("unit", "unit axiom on enumerated points");
    cunit->add_option("--bound", bound);
    cunit->add_option("--phi", phis);
    auto* cgrade = app.add_subcommand("grading", "grading + commutativity sweep");
    cgrade->add_option("--bound", bound);
    cgrade->add_option("--phi", phis);
    auto* crees = app.add_subcommand("rees", "Rees inequality sweep and generators");
    crees->add_option("--s", ss_weights, "nef functional label=int,...");
    crees->add_option("--bound", bound);
    crees->add_option("--phi", phis);
    auto* cpres = app.add_subcommand("presentation", "presentation operations");
    cpres->add_option("--pres", pres_path, "presentation JSON")->required();
    cpres->add_option("--op", op, "check|eval|find|derive")->required();
    cpres->add_option("--points", eval_points, "semicolon-separated points for eval");
    cpres->add_option("--bound", bound);
    cpres->add_option("--phi", phis);
    auto* ctrop = app.add_subcommand("trop", "tropical family operations");
    ctrop->add_option("--family", fam_path)->required();
    ctrop->add_option("--op", op, "validate|classify|split|ucone")->required();
    ctrop->add_option("--edge", edge_index, "1-based chain index for split");
    auto* cmono = app.add_subcommand("monoid", "monoid operations");
    cmono->add_option("--file", monoid_path)->required();
    cmono->add_option("--op", op, "saturate|hilbert|info")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmono->parsed()) {
            ToricMonoid m = io::load_monoid(monoid_path);
            if (op == "info") {
                std::cout << "rank " << m.rank << " group-rank " << m.group_rank()
                          << " sharp " << (m.is_sharp() ? "yes" : "no") << "\n";
            } else {
                std::vector<Vec> gens =
                    (op == "hilbert") ? hilbert_basis_oracle(m) : saturate(m).generators;
                for (auto& g : gens) std::cout << class_str(g) << "\n";
            }
            return 0;
        }
        if (ctrop->parsed()) {
            TropFamily fam = io::load_tropical(fam_path);
            if (op == "validate") {
                auto rep = validate_family(fam);
                for (auto& e : rep.errors) std::cout << "error: " << e << "\n";
                std::cout << (rep.ok ? "valid" : "invalid") << "\n";
                return rep.ok ? 0 : 1;
            }
            auto rep = validate_family(fam);
            if (!rep.ok) throw std::runtime_error("invalid family: " + rep.errors[0]);
            if (op == "classify") {
                std::cout << "boundary " << boundary_class_name(boundary_class(fam)) << "\n";
                std::cout << "terminal-tail " << (has_terminal_tail(fam) ? "yes" : "no")
                          << "\n";
                if (!has_terminal_tail(fam)) {
                    std::cout << "tails " << tail_class_name(classify_tails(fam)) << "\n";
                    if (classify_tails(fam) == TailClass::TailFree)
                        std::cout << "splitting-edge " << find_splitting_edge(fam) << "\n";
                }
                return 0;
            }
            if (op == "ucone") {
                auto uc = universal_cone(fam);
                std::cout << "dimension " << uc.dimension << "\n";
                std::cout << "miniversal " << (uc.miniversal ? "yes" : "no") << "\n";
                for (auto& v : uc.variables) std::cout << "var " << v << "\n";
                return uc.miniversal ? 0 : 1;
            }
            if (op == "split") {
                auto res = split_at_edge(fam, edge_index);
                std::cout << "cut " << res.cut_edge << " contact "
                          << class_str(res.s) << "\n";
                for (auto* f : {&res.first, &res.second}) {
                    std::cout << "component:";
                    for (auto& l : f->legs) std::cout << " " << l.label;
                    std::cout << "\n";
                }
                return 0;
            }
            throw std::runtime_error("unknown trop op " + op);
        }

        if (opt.geometry.empty()) throw std::runtime_error("--geometry is required");
        Geometry g = io::load_geometry(opt.geometry);
        InvariantTable table = load_table_opt(g, opt);

        if (cbuild->parsed()) {
            std::cout << "divisors " << g.complex.divisors.size() << "\n";
            std::cout << "strata " << g.complex.strata.size() << "\n";
            std::cout << "skeleton-cones " << g.skeleton.cones.size() << "\n";
            std::cout << "classes-outside-ideal " << complement(g.pmonoid, g.ideal).size()
                      << "\n";
            std::cout << "table-entries " << table.entries.size() << "\n";
            return 0;
        }
        if (cskel->parsed()) {
            for (auto& [d, good] : g.skeleton.good)
                std::cout << "label " << d << " " << (good ? "good" : "bad") << "\n";
            for (auto& c : g.skeleton.cones) std::cout << "cone " << c << "\n";
            return 0;
        }
        auto phi = parse_weights(g, phis, 1);
        if (cpoints->parsed()) {
            for (auto& p : enumerate_points(g.skeleton, phi, bound))
                std::cout << p.str() << "\n";
            return 0;
        }
        if (ccand->parsed()) {
            Vec a;
            std::stringstream cs(class_s);
            std::string item;
            while (std::getline(cs, item, ',')) a.push_back(std::stoll(item));
            for (auto& r : candidate_outputs(g, io::parse_point(g, p1s),
                                             io::parse_point(g, p2s), a))
                std::cout << r.str() << "\n";
            return 0;
        }
        if (cmul->parsed()) {
            auto rep = multiply(g, table, io::parse_point(g, p1s), io::parse_point(g, p2s));
            print_element(opt, rep.result);
            return 0;
        }
        if (cunit->parsed()) {
            auto pts = enumerate_points(g.skeleton, phi, bound);
            pts.push_back(zero_point(g.complex));
            for (auto& p : pts)
                if (!check_unit(g, table, p)) {
                    std::cout << "unit FAIL at " << p.str() << "\n";
                    return 1;
                }
            std::cout << "unit pass (" << pts.size() << " points)\n";
            return 0;
        }
        if (cgrade->parsed()) {
            auto pts = enumerate_points(g.skeleton, phi, bound);
            for (auto& p : pts)
                for (auto& q : pts) {
                    auto rep = multiply(g, table, p, q);
                    if (!check_torus_grading(g, rep)) {
                        std::cout << "torus grading FAIL " << p.str() << " " << q.str() << "\n";
                        return 1;
                    }
                    if (!check_degree_grading(g, rep)) {
                        std::cout << "degree grading FAIL " << p.str() << " " << q.str() << "\n";
                        return 1;
                    }
                    if (!check_commutativity(g, table, p, q)) {
                        std::cout << "commutativity FAIL " << p.str() << " " << q.str() << "\n";
                        return 1;
                    }
                }
            std::cout << "grading pass (" << pts.size() << " points)\n";
            return 0;
        }
        if (crees->parsed()) {
            auto s = parse_weights(g, ss_weights, 1);
            auto pts = enumerate_points(g.skeleton, phi, bound);
            for (auto& p : pts)
                for (auto& q : pts)
                    if (!check_rees(g, multiply(g, table, p, q), s)) {
                        std::cout << "rees FAIL " << p.str() << " " << q.str() << "\n";
                        return 1;
                    }
            for (auto& [d, p] : rees_generators(g, s, phi, bound))
                std::cout << "u^" << d << " " << p.str() << "\n";
            return 0;
        }
        if (cassoc->parsed()) {
            std::vector<std::array<IntegralPoint, 3>> triples;
            if (all) {
                auto pts = enumerate_points(g.skeleton, phi, bound);
                for (size_t i = 0; i < pts.size(); ++i)
                    for (size_t j = i; j < pts.size(); ++j)
                        for (size_t k = j; k < pts.size(); ++k)
                            triples.push_back({pts[i], pts[j], pts[k]});
            } else {
                triples.push_back({io::parse_point(g, p1s), io::parse_point(g, p2s),
                                   io::parse_point(g, p3s)});
            }
            unsigned jobs = std::max(1u, opt.jobs);
            std::vector<std::future<std::vector<std::string>>> futs;
            for (unsigned w = 0; w < jobs; ++w)
                futs.push_back(std::async(std::launch::async, [&, w] {
                    std::vector<std::string> fails;
                    for (size_t i = w; i < triples.size(); i += jobs) {
                        auto rep = check_associativity(g, table, triples[i][0], triples[i][1],
                                                       triples[i][2]);
                        if (!rep.ok) fails.push_back(rep.detail);
                    }
                    return fails;
                }));
            std::vector<std::string> fails;
            for (auto& f : futs)
                for (auto& d : f.get()) fails.push_back(d);
            std::sort(fails.begin(), fails.end());
            for (auto& d : fails) std::cout << "assoc FAIL: " << d << "\n";
            if (!fails.empty()) return 1;
            std::cout << "assoc pass (" << triples.size() << " triples)\n";
            return 0;
        }
        if (cpres->parsed()) {
            RingPresentation pres = io::load_presentation(g, pres_path);
            if (op == "check") {
                confluence_check(g, pres, bound);
                std::cout << "confluent to degree " << bound << "\n";
                return 0;
            }
            if (op == "eval") {
                std::vector<IntegralPoint> pts;
                std::stringstream ss(eval_points);
                std::string item;
                while (std::getline(ss, item, ';')) pts.push_back(io::parse_point(g, item));
                print_element(opt, presentation_eval(g, pres, pts));
                return 0;
            }
            if (op == "derive") {
                auto t = derive_table(g, pres, phi, bound);
                for (auto& [key, val] : t.entries)
                    std::cout << "N" << class_str(key.a_class) << " " << key.p1.str() << " "
                              << key.p2.str() << " -> " << key.r.str() << " = " << val.str()
                              << "\n";
                return 0;
            }
            if (op == "find") {
                RingPresentation gens = pres;
                gens.relations.clear();
                for (auto& rel : find_presentation(g, table, gens, bound)) {
                    std::cout << "relation";
                    for (auto& [v, e] : rel.lead) std::cout << " " << v << "^" << e;
                    std::cout << " ->";
                    if (rel.replacement.empty()) std::cout << " 0";
                    for (auto& [c, m] : rel.replacement) {
                        std::cout << " + (" << c.str() << ")";
                        for (auto& [v, e] : m) std::cout << " " << v << "^" << e;
                    }
                    std::cout << "\n";
                }
                return 0;
            }
            throw std::runtime_error("unknown presentation op " + op);
        }
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    }
    return 2;
}
