#include "theta/tropical.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

namespace theta {

namespace {

size_t divisor_index(const ConeComplex& cx, const std::string& d) {
    for (size_t i = 0; i < cx.divisors.size(); ++i)
        if (cx.divisors[i] == d) return i;
    throw std::runtime_error("unknown divisor label " + d);
}

Mat outer(const Vec& col, const Vec& row) {
    Mat m(col.size(), Vec(row.size(), 0));
    for (size_t i = 0; i < col.size(); ++i)
        for (size_t j = 0; j < row.size(); ++j) m[i][j] = checked_mul(col[i], row[j]);
    return m;
}

// components of the (tree) graph after deleting one edge; returns the set of
// vertex names on the same side as `start`
std::set<std::string> component_without(const TropFamily& fam, const std::string& cut,
                                        const std::string& start) {
    std::set<std::string> seen{start};
    std::vector<std::string> stack{start};
    while (!stack.empty()) {
        std::string v = stack.back();
        stack.pop_back();
        for (auto& e : fam.edges) {
            if (e.name == cut) continue;
            std::string other;
            if (e.src == v) other = e.dst;
            else if (e.dst == v) other = e.src;
            else continue;
            if (seen.insert(other).second) stack.push_back(other);
        }
    }
    return seen;
}

size_t edge_degree(const TropFamily& fam, const std::string& v,
                   const std::set<std::string>& alive_edges) {
    size_t d = 0;
    for (auto& e : fam.edges)
        if (alive_edges.count(e.name) && (e.src == v || e.dst == v)) ++d;
    return d;
}

bool vertex_has_leg(const TropFamily& fam, const std::string& v) {
    for (auto& l : fam.legs)
        if (l.vertex == v) return true;
    return false;
}

std::map<std::string, std::string> leg_vertex_by_label(const TropFamily& fam) {
    std::map<std::string, std::string> m;
    for (auto& l : fam.legs) m[l.label] = l.vertex;
    return m;
}

bool proportional(const Vec& a, const Vec& b) {
    Mat m{a, b};
    return mat_rank(m) <= 1;
}

} // namespace

const TropVertex& TropFamily::vertex(const std::string& name) const {
    for (auto& v : vertices)
        if (v.name == name) return v;
    throw std::runtime_error("unknown vertex " + name);
}

const TropEdgeData& TropFamily::edge(const std::string& name) const {
    for (auto& e : edges)
        if (e.name == name) return e;
    throw std::runtime_error("unknown edge " + name);
}

const TropLeg& TropFamily::leg_by_label(const std::string& label) const {
    for (auto& l : legs)
        if (l.label == label) return l;
    throw std::runtime_error("no leg labeled " + label);
}

TropValidation validate_family(const TropFamily& fam) {
    TropValidation rep;
    auto fail = [&](const std::string& msg) {
        rep.ok = false;
        rep.errors.push_back(msg);
    };
    size_t nd = fam.complex.divisors.size();
    size_t rank = fam.base_rank();
    if (fam.vertices.empty()) {
        fail("family has no vertices");
        return rep;
    }
    std::set<std::string> vnames;
    for (auto& v : fam.vertices) {
        if (!vnames.insert(v.name).second) fail("duplicate vertex name " + v.name);
        if (!fam.complex.has_stratum(v.bsigma))
            fail("vertex " + v.name + " references unknown stratum " + v.bsigma);
    }
    // tree shape
    if (fam.edges.size() + 1 != fam.vertices.size())
        fail("graph is not a tree (edge count)");
    std::set<std::string> enames;
    for (auto& e : fam.edges) {
        if (!enames.insert(e.name).second) fail("duplicate edge name " + e.name);
        if (!vnames.count(e.src) || !vnames.count(e.dst)) {
            fail("edge " + e.name + " references unknown vertex");
            continue;
        }
        if (!fam.complex.has_stratum(e.bsigma)) {
            fail("edge " + e.name + " references unknown stratum " + e.bsigma);
            continue;
        }
    }
    if (rep.ok && !fam.edges.empty()) {
        auto comp = component_without(fam, "", fam.vertices[0].name);
        if (comp.size() != fam.vertices.size()) fail("graph is not connected");
    }
    if (!rep.ok) return rep;

    // vertex maps: shape, nonnegativity, support inside the assigned stratum
    for (auto& v : fam.vertices) {
        auto it = fam.nu.find(v.name);
        if (it == fam.nu.end()) {
            fail("vertex " + v.name + " has no position matrix");
            continue;
        }
        const Mat& m = it->second;
        if (m.size() != nd || (nd > 0 && m[0].size() != rank)) {
            fail("vertex " + v.name + " position matrix has wrong shape");
            continue;
        }
        const Stratum& s = fam.complex.stratum(v.bsigma);
        for (size_t d = 0; d < nd; ++d) {
            bool row_zero = true;
            for (size_t k = 0; k < rank; ++k) {
                if (m[d][k] < 0)
                    fail("vertex " + v.name + " leaves its cone along coordinate " +
                         fam.complex.divisors[d]);
                if (m[d][k] != 0) row_zero = false;
            }
            if (!row_zero && std::find(s.labels.begin(), s.labels.end(),
                                       fam.complex.divisors[d]) == s.labels.end())
                fail("vertex " + v.name + " has support outside stratum " + v.bsigma);
        }
    }

    // edge displacement identities
    for (auto& e : fam.edges) {
        const TropVertex& a = fam.vertex(e.src);
        const TropVertex& b = fam.vertex(e.dst);
        if (!fam.complex.is_face_of(a.bsigma, e.bsigma) ||
            !fam.complex.is_face_of(b.bsigma, e.bsigma))
            fail("edge " + e.name + " cone does not contain both endpoint strata");
        if (e.u.size() != nd) {
            fail("edge " + e.name + " contact vector has wrong size");
            continue;
        }
        const Stratum& s = fam.complex.stratum(e.bsigma);
        for (size_t d = 0; d < nd; ++d)
            if (e.u[d] != 0 && std::find(s.labels.begin(), s.labels.end(),
                                         fam.complex.divisors[d]) == s.labels.end())
                fail("edge " + e.name + " contact leaves stratum " + e.bsigma);
        auto lit = fam.lengths.find(e.name);
        if (lit == fam.lengths.end() || lit->second.size() != rank) {
            fail("edge " + e.name + " has no length");
            continue;
        }
        const Vec& ell = lit->second;
        bool lzero = vec_is_zero(ell);
        for (Int x : ell)
            if (x < 0) fail("edge " + e.name + " has a negative length coordinate");
        if (lzero) fail("edge " + e.name + " has zero length");
        if (!fam.nu.count(e.src) || !fam.nu.count(e.dst)) continue;
        Mat want = outer(e.u, ell);
        const Mat& ms = fam.nu.at(e.src);
        const Mat& md = fam.nu.at(e.dst);
        if (ms.size() != nd || md.size() != nd) continue;
        for (size_t d = 0; d < nd; ++d)
            for (size_t k = 0; k < rank; ++k)
                if (md[d][k] - ms[d][k] != want[d][k]) {
                    fail("edge " + e.name + " displacement identity fails");
                    d = nd;
                    break;
                }
    }

    // legs
    std::set<std::string> reserved_seen;
    for (auto& l : fam.legs) {
        if (!vnames.count(l.vertex)) {
            fail("leg " + l.label + " attached to unknown vertex");
            continue;
        }
        if (!fam.complex.has_stratum(l.bsigma)) {
            fail("leg " + l.label + " references unknown stratum");
            continue;
        }
        if (l.label == "x1" || l.label == "x2" || l.label == "x3" || l.label == "out")
            if (!reserved_seen.insert(l.label).second)
                fail("duplicate leg label " + l.label);
        if (!fam.complex.is_face_of(fam.vertex(l.vertex).bsigma, l.bsigma))
            fail("leg " + l.label + " cone does not contain its vertex stratum");
        if (l.u.size() != nd) {
            fail("leg " + l.label + " contact vector has wrong size");
            continue;
        }
        const Stratum& s = fam.complex.stratum(l.bsigma);
        for (size_t d = 0; d < nd; ++d)
            if (l.u[d] != 0 && std::find(s.labels.begin(), s.labels.end(),
                                         fam.complex.divisors[d]) == s.labels.end())
                fail("leg " + l.label + " contact leaves stratum " + l.bsigma);
    }

    // constraint data
    if (fam.delta) {
        if (fam.delta->size() != rank) fail("delta has wrong size");
        else
            for (Int x : *fam.delta)
                if (x < 0) fail("delta has a negative coordinate");
    }
    if (fam.r) {
        if (!fam.delta) fail("constraint point given without delta");
        if (fam.r->size() != nd) fail("constraint point has wrong size");
        bool have_out = false;
        for (auto& l : fam.legs)
            if (l.label == "out") {
                have_out = true;
                if (l.u.size() == nd && fam.r->size() == nd &&
                    !(vec_neg(*fam.r) == l.u))
                    fail("out leg contact is not the negated constraint point");
                if (fam.delta && fam.delta->size() == rank &&
                    fam.nu.count(l.vertex) && fam.r->size() == nd) {
                    Mat want = outer(*fam.r, *fam.delta);
                    if (!(fam.nu.at(l.vertex) == want))
                        fail("output vertex position violates the constraint");
                }
            }
        if (!have_out) fail("constraint given but no out leg");
    }
    return rep;
}

Spine spine(const TropFamily& fam) {
    std::set<std::string> av;
    std::set<std::string> ae;
    for (auto& v : fam.vertices) av.insert(v.name);
    for (auto& e : fam.edges) ae.insert(e.name);
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& v : fam.vertices) {
            if (!av.count(v.name) || vertex_has_leg(fam, v.name)) continue;
            if (edge_degree(fam, v.name, ae) == 1) {
                av.erase(v.name);
                for (auto& e : fam.edges)
                    if (ae.count(e.name) && (e.src == v.name || e.dst == v.name))
                        ae.erase(e.name);
                changed = true;
            }
        }
    }
    Spine s;
    for (auto& v : fam.vertices)
        if (av.count(v.name)) s.vertices.push_back(v.name);
    for (auto& e : fam.edges)
        if (ae.count(e.name)) s.edges.push_back(e.name);
    return s;
}

std::string boundary_class_name(BoundaryClass c) {
    switch (c) {
        case BoundaryClass::Interior: return "interior";
        case BoundaryClass::D_x1x2_x3out: return "D(x1x2|x3,out)";
        case BoundaryClass::D_x2x3_x1out: return "D(x2x3|x1,out)";
        case BoundaryClass::D_x1x3_x2out: return "D(x1x3|x2,out)";
        case BoundaryClass::D_x1x2x3_out: return "D(x1x2x3|out)";
    }
    return "?";
}

BoundaryClass boundary_class(const TropFamily& fam) {
    auto lv = leg_vertex_by_label(fam);
    for (auto& need : {"x1", "x2", "x3", "out"})
        if (!lv.count(need)) throw std::runtime_error(std::string("missing leg ") + need);
    Spine sp = spine(fam);
    bool out_alone = false;
    for (auto& en : sp.edges) {
        const TropEdgeData& e = fam.edge(en);
        auto side = component_without(fam, en, e.src);
        std::set<std::string> a, b;
        for (auto& [label, v] : lv) (side.count(v) ? a : b).insert(label);
        if (a.size() == 2) {
            const std::set<std::string>& pair = a.count("out") ? b : a;
            if (pair == std::set<std::string>{"x1", "x2"}) return BoundaryClass::D_x1x2_x3out;
            if (pair == std::set<std::string>{"x2", "x3"}) return BoundaryClass::D_x2x3_x1out;
            if (pair == std::set<std::string>{"x1", "x3"}) return BoundaryClass::D_x1x3_x2out;
        }
        if ((a.size() == 1 && *a.begin() == "out") || (b.size() == 1 && *b.begin() == "out"))
            out_alone = true;
    }
    return out_alone ? BoundaryClass::D_x1x2x3_out : BoundaryClass::Interior;
}

SpineChain spine_chain(const TropFamily& fam) {
    SpineChain out;
    out.cls = boundary_class(fam);
    std::set<std::string> pair_labels;
    switch (out.cls) {
        case BoundaryClass::D_x1x2_x3out: pair_labels = {"x1", "x2"}; break;
        case BoundaryClass::D_x2x3_x1out: pair_labels = {"x2", "x3"}; break;
        case BoundaryClass::D_x1x3_x2out: pair_labels = {"x1", "x3"}; break;
        default:
            throw std::runtime_error("family is not in a two-junction boundary class");
    }
    auto lv = leg_vertex_by_label(fam);
    Spine sp = spine(fam);
    // chain edges are exactly the spine edges realizing the 2|2 split
    std::set<std::string> chain;
    for (auto& en : sp.edges) {
        const TropEdgeData& e = fam.edge(en);
        auto side = component_without(fam, en, e.src);
        std::set<std::string> a;
        for (auto& [label, v] : lv)
            if (side.count(v)) a.insert(label);
        if (a == pair_labels || [&] {
                std::set<std::string> b;
                for (auto& [label, v] : lv)
                    if (!side.count(v)) b.insert(label);
                return b == pair_labels;
            }())
            chain.insert(en);
    }
    if (chain.empty()) throw std::runtime_error("no chain edge found");
    // walk the chain starting from the junction on the out side: with all
    // chain edges removed, the out leg's component contains exactly one
    // chain endpoint
    std::map<std::string, std::vector<std::string>> adj; // vertex -> chain edges
    for (auto& en : chain) {
        const TropEdgeData& e = fam.edge(en);
        adj[e.src].push_back(en);
        adj[e.dst].push_back(en);
    }
    std::vector<std::string> ends;
    for (auto& [v, es] : adj)
        if (es.size() == 1) ends.push_back(v);
    if (ends.size() != 2) throw std::runtime_error("chain edges do not form a path");
    auto reach_out = [&](const std::string& from) {
        // reachable from `from` without using chain edges
        std::set<std::string> seen{from};
        std::vector<std::string> stack{from};
        while (!stack.empty()) {
            std::string v = stack.back();
            stack.pop_back();
            for (auto& e : fam.edges) {
                if (chain.count(e.name)) continue;
                std::string other;
                if (e.src == v) other = e.dst;
                else if (e.dst == v) other = e.src;
                else continue;
                if (seen.insert(other).second) stack.push_back(other);
            }
        }
        return seen.count(lv.at("out")) > 0;
    };
    std::string v = reach_out(ends[0]) ? ends[0] : ends[1];
    if (!reach_out(v)) throw std::runtime_error("out leg not attached along the chain");
    out.chain_vertices.push_back(v);
    std::set<std::string> used;
    std::string cur = v;
    while (used.size() < chain.size()) {
        bool advanced = false;
        for (auto& en : adj[cur]) {
            if (used.count(en)) continue;
            const TropEdgeData& e = fam.edge(en);
            std::string next = (e.src == cur) ? e.dst : e.src;
            out.chain_edges.push_back(en);
            out.oriented_u.push_back(e.src == cur ? e.u : vec_neg(e.u));
            out.chain_vertices.push_back(next);
            used.insert(en);
            cur = next;
            advanced = true;
            break;
        }
        if (!advanced) throw std::runtime_error("chain edges do not form a path");
    }
    return out;
}

bool has_terminal_tail(const TropFamily& fam) {
    BoundaryClass c = boundary_class(fam);
    if (c != BoundaryClass::D_x1x2_x3out && c != BoundaryClass::D_x2x3_x1out &&
        c != BoundaryClass::D_x1x3_x2out)
        return false;
    SpineChain ch = spine_chain(fam);
    return leg_vertex_by_label(fam).at("out") != ch.chain_vertices.front();
}

std::vector<size_t> splitting_edges(const TropFamily& fam) {
    if (!fam.delta) throw std::runtime_error("delta is required to test splitting type");
    SpineChain ch = spine_chain(fam);
    std::vector<size_t> out;
    for (size_t i = 0; i < ch.chain_edges.size(); ++i)
        if (!proportional(fam.lengths.at(ch.chain_edges[i]), *fam.delta))
            out.push_back(i + 1);
    return out;
}

std::string tail_class_name(TailClass c) {
    switch (c) {
        case TailClass::TailFree: return "tail_free";
        case TailClass::Terminal: return "terminal";
        case TailClass::Internal: return "internal";
    }
    return "?";
}

TailClass classify_tails(const TropFamily& fam) {
    if (has_terminal_tail(fam)) return TailClass::Terminal;
    auto se = splitting_edges(fam);
    if (se.empty())
        throw std::runtime_error(
            "every chain edge length is proportional to delta (assumption violation)");
    return se.size() > 1 ? TailClass::Internal : TailClass::TailFree;
}

size_t find_splitting_edge(const TropFamily& fam) {
    if (has_terminal_tail(fam)) throw std::runtime_error("terminal tail present");
    if (!fam.delta) throw std::runtime_error("delta is required");
    SpineChain ch = spine_chain(fam);
    size_t n = ch.chain_edges.size();
    std::vector<size_t> tangent;
    for (size_t i = 0; i < n; ++i) {
        // linear span of the image of the next chain vertex
        const Mat& m = fam.nu.at(ch.chain_vertices[i + 1]);
        Mat cols = mat_transpose(m); // rows = image generators
        size_t r0 = mat_rank(cols);
        Mat with = cols;
        with.push_back(ch.oriented_u[i]);
        bool tan = (r0 == 0) ? vec_is_zero(ch.oriented_u[i]) : (mat_rank(with) == r0);
        if (tan) tangent.push_back(i + 1);
    }
    if (tangent.empty()) throw std::runtime_error("no tangent chain edge found");
    if (tangent.size() > 1) {
        std::ostringstream os;
        os << "multiple tangent chain edges (assumption violation): indices";
        for (auto i : tangent) os << " " << i;
        throw std::runtime_error(os.str());
    }
    size_t i = tangent[0];
    for (size_t j = 1; j < i; ++j)
        if (!proportional(fam.lengths.at(ch.chain_edges[j - 1]), *fam.delta))
            throw std::runtime_error("earlier chain edge length not proportional to delta");
    if (proportional(fam.lengths.at(ch.chain_edges[i - 1]), *fam.delta))
        throw std::runtime_error("splitting edge length is proportional to delta");
    // oriented contact direction lies in the edge's assigned cone
    const TropEdgeData& e = fam.edge(ch.chain_edges[i - 1]);
    const Stratum& s = fam.complex.stratum(e.bsigma);
    const Vec& u = ch.oriented_u[i - 1];
    for (size_t d = 0; d < fam.complex.divisors.size(); ++d) {
        if (u[d] < 0) throw std::runtime_error("splitting contact leaves its cone");
        if (u[d] > 0 && std::find(s.labels.begin(), s.labels.end(),
                                  fam.complex.divisors[d]) == s.labels.end())
            throw std::runtime_error("splitting contact leaves its cone");
    }
    return i;
}

UniversalCone universal_cone(const TropFamily& fam) {
    UniversalCone out;
    // coordinate layout: per-vertex stratum coordinates, then edge lengths,
    // then delta
    std::map<std::pair<std::string, std::string>, size_t> hidx;
    for (auto& v : fam.vertices)
        for (auto& l : fam.complex.stratum(v.bsigma).labels) {
            hidx[{v.name, l}] = out.variables.size();
            out.variables.push_back("h:" + v.name + ":" + l);
        }
    std::map<std::string, size_t> eidx;
    for (auto& e : fam.edges) {
        eidx[e.name] = out.variables.size();
        out.variables.push_back("l:" + e.name);
    }
    size_t didx = out.variables.size();
    out.variables.push_back("delta");
    size_t dim = out.variables.size();
    std::vector<Vec> ineqs;
    for (size_t i = 0; i < dim; ++i) {
        Vec v(dim, 0);
        v[i] = 1;
        ineqs.push_back(v);
    }
    std::vector<Vec> eqs;
    auto hcoord = [&](const std::string& vn, const std::string& label) -> std::optional<size_t> {
        auto it = hidx.find({vn, label});
        if (it == hidx.end()) return std::nullopt;
        return it->second;
    };
    for (auto& e : fam.edges) {
        for (size_t d = 0; d < fam.complex.divisors.size(); ++d) {
            Vec row(dim, 0);
            bool nontrivial = false;
            if (auto i = hcoord(e.dst, fam.complex.divisors[d])) {
                row[*i] += 1;
                nontrivial = true;
            }
            if (auto i = hcoord(e.src, fam.complex.divisors[d])) {
                row[*i] -= 1;
                nontrivial = true;
            }
            if (e.u[d] != 0) {
                row[eidx[e.name]] -= e.u[d];
                nontrivial = true;
            }
            if (nontrivial) eqs.push_back(row);
        }
    }
    if (fam.r) {
        std::string vout = leg_vertex_by_label(fam).at("out");
        for (size_t d = 0; d < fam.complex.divisors.size(); ++d) {
            Vec row(dim, 0);
            bool nontrivial = false;
            if (auto i = hcoord(vout, fam.complex.divisors[d])) {
                row[*i] += 1;
                nontrivial = true;
            }
            if ((*fam.r)[d] != 0) {
                row[didx] -= (*fam.r)[d];
                nontrivial = true;
            }
            if (nontrivial) eqs.push_back(row);
        }
    }
    out.cone = cone_from_inequalities(dim, ineqs, eqs);
    out.dimension = out.cone.cone_dim();
    out.miniversal = (out.dimension == fam.base_rank());
    return out;
}

SplitResult split_at_edge(const TropFamily& fam, size_t i) {
    if (!fam.delta) throw std::runtime_error("delta is required");
    SpineChain ch = spine_chain(fam);
    if (i == 0 || i > ch.chain_edges.size())
        throw std::runtime_error("chain index out of range");
    const std::string& en = ch.chain_edges[i - 1];
    if (proportional(fam.lengths.at(en), *fam.delta))
        throw std::runtime_error("not a splitting edge");
    const TropEdgeData& cut = fam.edge(en);
    Vec s = ch.oriented_u[i - 1]; // oriented toward the leg-pair side
    std::string a = ch.chain_vertices[i - 1];
    std::string b = ch.chain_vertices[i];

    auto pick = [&](const std::set<std::string>& keep, const std::string& attach,
                    const Vec& leg_u, bool with_constraint) {
        TropFamily f;
        f.complex = fam.complex;
        f.base_gens = fam.base_gens;
        for (auto& v : fam.vertices)
            if (keep.count(v.name)) {
                f.vertices.push_back(v);
                f.nu[v.name] = fam.nu.at(v.name);
            }
        for (auto& e : fam.edges)
            if (e.name != en && keep.count(e.src) && keep.count(e.dst)) {
                f.edges.push_back(e);
                f.lengths[e.name] = fam.lengths.at(e.name);
            }
        for (auto& l : fam.legs)
            if (keep.count(l.vertex)) f.legs.push_back(l);
        TropLeg nl;
        nl.label = "cut:" + en;
        nl.vertex = attach;
        nl.bsigma = cut.bsigma;
        nl.u = leg_u;
        f.legs.push_back(nl);
        if (with_constraint) {
            f.delta = fam.delta;
            f.r = fam.r;
        }
        return f;
    };
    auto side_b = component_without(fam, en, b);
    auto side_a = component_without(fam, en, a);
    SplitResult res;
    res.cut_edge = en;
    res.s = s;
    res.new_leg = "cut:" + en;
    res.first = pick(side_b, b, vec_neg(s), false);
    res.second = pick(side_a, a, s, true);
    for (auto* f : {&res.first, &res.second}) {
        auto rep = validate_family(*f);
        if (!rep.ok) throw std::runtime_error("split produced an invalid family: " + rep.errors[0]);
    }
    return res;
}

TropFamily glue(const SplitResult& split, const Vec& length) {
    TropFamily f;
    f.complex = split.second.complex;
    f.base_gens = split.second.base_gens;
    std::string a, b, bsigma;
    for (auto& l : split.second.legs)
        if (l.label == split.new_leg) {
            a = l.vertex;
            bsigma = l.bsigma;
        }
    for (auto& l : split.first.legs)
        if (l.label == split.new_leg) b = l.vertex;
    if (a.empty() || b.empty()) throw std::runtime_error("missing cut legs");
    for (auto* part : {&split.second, &split.first}) {
        for (auto& v : part->vertices) {
            f.vertices.push_back(v);
            f.nu[v.name] = part->nu.at(v.name);
        }
        for (auto& e : part->edges) {
            f.edges.push_back(e);
            f.lengths[e.name] = part->lengths.at(e.name);
        }
        for (auto& l : part->legs)
            if (l.label != split.new_leg) f.legs.push_back(l);
    }
    TropEdgeData e;
    e.name = split.cut_edge;
    e.src = a;
    e.dst = b;
    e.bsigma = bsigma;
    e.u = split.s;
    f.edges.push_back(e);
    f.lengths[e.name] = length;
    f.delta = split.second.delta;
    f.r = split.second.r;
    return f;
}

bool families_equal(const TropFamily& a, const TropFamily& b) {
    auto vkey = [](const TropVertex& v) { return std::make_pair(v.name, v.bsigma); };
    auto vs = [&](const TropFamily& f) {
        std::vector<std::pair<std::string, std::string>> out;
        for (auto& v : f.vertices) out.push_back(vkey(v));
        std::sort(out.begin(), out.end());
        return out;
    };
    auto es = [&](const TropFamily& f) {
        std::vector<std::tuple<std::string, std::string, std::string, std::string, Vec>> out;
        for (auto& e : f.edges) {
            // normalize orientation: smaller endpoint name first
            if (e.src <= e.dst) out.push_back({e.name, e.src, e.dst, e.bsigma, e.u});
            else out.push_back({e.name, e.dst, e.src, e.bsigma, vec_neg(e.u)});
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    auto ls = [&](const TropFamily& f) {
        std::vector<std::tuple<std::string, std::string, std::string, Vec>> out;
        for (auto& l : f.legs) out.push_back({l.label, l.vertex, l.bsigma, l.u});
        std::sort(out.begin(), out.end());
        return out;
    };
    return vs(a) == vs(b) && es(a) == es(b) && ls(a) == ls(b) && a.nu == b.nu &&
           a.lengths == b.lengths && a.base_gens == b.base_gens && a.delta == b.delta &&
           a.r == b.r;
}

} // namespace theta
