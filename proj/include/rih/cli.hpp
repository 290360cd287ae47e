#pragma once

// Command-line front end: file loading, expectation checking, and the
// commands of the `rih` tool. run() never exits the process.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "rih/corpus.hpp"
#include "rih/duality.hpp"
#include "rih/engine.hpp"
#include "rih/resolution.hpp"
#include "rih/scx.hpp"
#include "rih/subdivide.hpp"

namespace rih::cli {

enum Exit : int { ok = 0, mismatch = 1, input_error = 2 };

// Reads a file from disk; a bare bundled name such as "node.scx" falls back
// to the built-in corpus.
inline std::string read_input(const std::string& path) {
    std::ifstream in(path);
    if (in) {
        std::ostringstream s;
        s << in.rdbuf();
        return s.str();
    }
    for (auto& e : corpus::all())
        if (e.file == path || e.file == std::filesystem::path(path).filename().string()) return e.text;
    throw Error(ErrorKind::ParseError, "cannot read '" + path + "'");
}

inline scx::Workspace load_file(const std::string& path) {
    try {
        return scx::load(scx::parse_scx(read_input(path)));
    } catch (const Error& e) {
        throw Error(e.kind(), path + ": " + e.detail());
    }
}

inline std::vector<int> parse_ints(const std::string& s) {
    std::vector<int> out;
    for (auto& t : scx::detail::split(s, ',')) {
        try {
            std::size_t used = 0;
            int v = std::stoi(t, &used);
            if (used != t.size()) throw std::invalid_argument(t);
            out.push_back(v);
        } catch (const std::exception&) {
            throw Error(ErrorKind::InvalidPair, "'" + s + "' is not a comma list of integers");
        }
    }
    return out;
}

inline PerversityPair make_pair(int n, const std::string& p, const std::string& q) {
    PerversityPair pp = default_pair(n);
    if (!p.empty()) pp.p.values = parse_ints(p);
    if (!q.empty()) pp.q.values = parse_ints(q);
    if (pp.p.size() != static_cast<std::size_t>(n + 1) || pp.q.size() != static_cast<std::size_t>(n + 1))
        throw Error(ErrorKind::InvalidPair, "perversities need n + 1 = " + std::to_string(n + 1) + " entries");
    auto v = validate_pair(pp);
    if (!v.ok) throw Error(ErrorKind::InvalidPair, v.violations.front());
    return pp;
}

inline LooseMode parse_mode(const std::string& s) {
    if (s == "primary") return LooseMode::primary;
    if (s == "literal") return LooseMode::literal;
    throw Error(ErrorKind::ParseError, "loose mode must be 'primary' or 'literal'");
}

// "star:v,w" (open star of vertices), "strata:0,2" (union of strata), "all".
inline CellMask parse_open(const Space& sp, const std::string& spec) {
    if (spec == "all") return full_mask(sp.x);
    auto colon = spec.find(':');
    if (colon == std::string::npos) throw Error(ErrorKind::ParseError, "open set '" + spec + "' needs a 'star:' or 'strata:' prefix");
    std::string kind = spec.substr(0, colon), body = spec.substr(colon + 1);
    if (kind == "star") {
        std::vector<VertexId> vs;
        for (auto& nm : scx::detail::split(body, ',')) {
            auto v = sp.x.vertex_id(nm);
            if (!v) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + nm + "'");
            vs.push_back(*v);
        }
        return open_star(sp.x, vs);
    }
    if (kind == "strata") {
        CellMask m = empty_mask(sp.x);
        for (int id : parse_ints(body)) {
            if (id < 0 || id >= static_cast<int>(sp.s.strata.size()))
                throw Error(ErrorKind::ParseError, "no stratum " + std::to_string(id));
            for (auto& c : sp.s.strata[static_cast<std::size_t>(id)].cells)
                m[static_cast<std::size_t>(c.k)][c.i] = 1;
        }
        return m;
    }
    throw Error(ErrorKind::ParseError, "unknown open-set kind '" + kind + "'");
}

inline std::string dims_line(const std::string& label, const std::vector<std::size_t>& d) {
    std::string s = label + ":";
    for (std::size_t k = 0; k < d.size(); ++k) s += " k=" + std::to_string(k) + ":" + std::to_string(d[k]);
    return s;
}

inline void print_dims(std::ostream& out, const std::string& label, const std::vector<std::size_t>& d, bool tsv) {
    if (!tsv) {
        out << dims_line(label, d) << "\n";
        return;
    }
    out << "degree\tdim\n";
    for (std::size_t k = 0; k < d.size(); ++k) out << k << "\t" << d[k] << "\n";
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline Chain primal_chain(const SimplicialComplex& x, const scx::CycleDecl& c) {
    Chain out = Chain::zero(x, c.k);
    for (auto& e : c.entries) {
        CellRef r = x.cell_of(e.front());
        if (r.k != c.k) throw Error(ErrorKind::DegreeOutOfRange, "cycle '" + c.name + "' mixes degrees");
        out.cells.flip(r.i);
    }
    return out;
}

inline ResolutionDatum resolution_named(const scx::Workspace& ws, const std::string& name) {
    const auto& mm = ws.map(name);
    return ResolutionDatum::make(mm.map, mm.exceptional);
}

// The first map into cx that declares an exceptional set.
inline std::optional<ResolutionDatum> resolution_for(const scx::Workspace& ws, const std::string& cx) {
    for (auto& md : ws.doc.maps)
        if (md.to == cx && !md.exceptional.empty()) return resolution_named(ws, md.name);
    return std::nullopt;
}

inline std::vector<PairingReport> declared_pairings(const scx::Workspace& ws, const std::string& cx,
                                                    const PerversityPair& pp, LooseMode mode = LooseMode::primary) {
    const Space& sp = ws.space(cx);
    std::vector<PairingReport> out;
    std::optional<DualBlockDecomposition> d;
    for (int k = 0; k <= sp.n(); ++k) {
        auto prim = ws.cycles_in(cx, false, k);
        auto dual = ws.cycles_in(cx, true, sp.n() - k);
        if (prim.empty() || dual.empty()) continue;
        if (!d) d = dual_blocks(sp.x);
        std::vector<NamedChain> a, b;
        for (auto* c : prim) a.push_back({c->name, primal_chain(sp.x, *c)});
        for (auto* c : dual) b.push_back({c->name, dual_chain(*d, c->k, c->entries)});
        out.push_back(pairing_report(sp, pp, k, a, b, mode));
    }
    return out;
}

struct ExpectOutcome {
    std::string complex;
    int line = 0;
    std::string text;
    bool ok = false;
    std::string got;
};

// Evaluates every `expect` line of a workspace under the default pair.
inline std::vector<ExpectOutcome> check_expectations(const scx::Workspace& ws) {
    std::vector<ExpectOutcome> out;
    for (auto& cd : ws.doc.complexes) {
        const Space& sp = ws.space(cd.name);
        const PerversityPair pp = default_pair(sp.n());
        std::map<std::string, std::vector<std::size_t>> memo;
        auto cached = [&](const std::string& key, const std::function<std::vector<std::size_t>()>& f) {
            auto it = memo.find(key);
            if (it == memo.end()) it = memo.emplace(key, f()).first;
            return it->second;
        };
        auto at = [](const std::vector<std::size_t>& v, int k) -> std::size_t {
            return k >= 0 && k < static_cast<int>(v.size()) ? v[static_cast<std::size_t>(k)] : 0;
        };
        for (auto& ex : cd.expects) {
            ExpectOutcome o{cd.name, ex.line, scx::detail::trim([&] {
                                std::string s;
                                for (auto& t : ex.tokens) s += t + " ";
                                return s;
                            }()),
                            false, ""};
            const auto& t = ex.tokens;
            auto want = [&](std::size_t i) { return i < t.size() ? t[i] : std::string(); };
            auto bad = [&] { throw Error(ErrorKind::ParseError, "line " + std::to_string(ex.line) + ": malformed expectation"); };
            auto num = [&](std::size_t i) {
                if (i >= t.size()) bad();
                return parse_ints(t[i]).at(0);
            };
            try {
                if (t[0] == "h") {
                    if (want(2) != "=") bad();
                    auto d = cached("h", [&] { return homology(sp.x).dims(); });
                    std::size_t g = at(d, num(1));
                    o.got = std::to_string(g);
                    o.ok = static_cast<int>(g) == num(3);
                } else if (t[0] == "ih") {
                    bool compact = want(1) == "c";
                    if (!compact && want(1) != "cl") bad();
                    std::size_t i = 2;
                    std::string open;
                    if (want(2) == "open") {
                        open = want(3);
                        i = 4;
                    }
                    if (want(i + 1) != "=") bad();
                    auto d = cached("ih " + want(1) + " " + open, [&] {
                        if (open.empty())
                            return compact ? ih_compact(sp, pp).dims() : ih_closed(sp, pp, full_mask(sp.x)).dims();
                        CellMask v = parse_open(sp, open);
                        return compact ? ih_open_compact(sp, pp, v).dims() : ih_open_closed(sp, pp, v).dims();
                    });
                    std::size_t g = at(d, num(i));
                    o.got = std::to_string(g);
                    o.ok = static_cast<int>(g) == num(i + 2);
                } else if (t[0] == "small") {
                    if (want(2) != "=") bad();
                    auto r = resolution_named(ws, want(1));
                    bool s = check_small(r, ws.space(ws.map(want(1)).to)).small;
                    o.got = yes_no(s);
                    o.ok = o.got == want(3);
                } else if (t[0] == "smallres") {
                    if (want(2) != "=") bad();
                    auto r = resolution_named(ws, want(1));
                    const Space& base = ws.space(ws.map(want(1)).to);
                    bool p = verify_smallres(r, base, default_pair(base.n())).pass();
                    o.got = p ? "pass" : "fail";
                    o.ok = o.got == want(3);
                } else if (t[0] == "formula") {
                    if (want(3) != "=") bad();
                    std::string m = want(1);
                    auto d = cached("formula " + m, [&] {
                        std::optional<ResolutionDatum> r;
                        if (m != "none") r = resolution_named(ws, m);
                        return ih_isolated_formula(sp, r, pp);
                    });
                    std::size_t g = at(d, num(2));
                    o.got = std::to_string(g);
                    o.ok = static_cast<int>(g) == num(4);
                } else if (t[0] == "mv") {
                    if (want(1) != "=") bad();
                    long g = mv_consistency(sp, pp);
                    o.got = std::to_string(g);
                    o.ok = g == num(2);
                } else if (t[0] == "duality") {
                    if (want(1) != "=") bad();
                    bool p = duality_check(sp, pp, declared_pairings(ws, cd.name, pp)).pass();
                    o.got = p ? "pass" : "fail";
                    o.ok = o.got == want(2);
                } else if (t[0] == "pairing") {
                    if (want(2) != "rank" || want(3) != "=") bad();
                    int k = num(1);
                    std::optional<std::size_t> g;
                    for (auto& r : declared_pairings(ws, cd.name, pp))
                        if (r.k == k) g = r.rank;
                    if (!g) throw Error(ErrorKind::UnknownName, "no declared cycles pair in degree " + std::to_string(k));
                    o.got = std::to_string(*g);
                    o.ok = static_cast<int>(*g) == num(4);
                } else {
                    bad();
                }
            } catch (const Error& e) {
                o.ok = false;
                o.got = e.what();
            }
            out.push_back(std::move(o));
        }
    }
    return out;
}

namespace detail {

struct Options {
    std::string file, complex, map, cycle, vertex, open, dir;
    std::string p, q, mode = "primary", supports = "compact";
    int k = -1;
    bool tsv = false, reps = false, emit = false;
};

inline const scx::ComplexDecl& pick_complex(const scx::Workspace& ws, const std::string& name) {
    if (!name.empty()) {
        auto* c = ws.doc.complex(name);
        if (!c) throw Error(ErrorKind::UnknownName, "no complex named '" + name + "'");
        return *c;
    }
    return ws.doc.complexes.front();
}

inline std::string pick_map(const scx::Workspace& ws, const std::string& name, const std::string& cx) {
    if (!name.empty()) return name;
    for (auto& md : ws.doc.maps)
        if ((cx.empty() || md.to == cx) && !md.exceptional.empty()) return md.name;
    throw Error(ErrorKind::UnknownName, "no resolution map in the file; pass --map");
}

inline std::string interval(const Interval& i) {
    return i.exact() ? std::to_string(i.lo) : "[" + std::to_string(i.lo) + "," + std::to_string(i.hi) + "]";
}

inline int cmd_homology(const Options& o, std::ostream& out) {
    auto ws = load_file(o.file);
    const Space& sp = ws.space(pick_complex(ws, o.complex).name);
    auto r = homology(sp.x);
    print_dims(out, "H", r.dims(), o.tsv);
    if (o.reps)
        for (std::size_t k = 0; k < r.degrees.size(); ++k)
            for (auto& c : r.degrees[k].reps) out << "  k=" << k << ": " << chain_label(sp.x, c) << "\n";
    return ok;
}

inline int cmd_ih(const Options& o, std::ostream& out) {
    auto ws = load_file(o.file);
    const Space& sp = ws.space(pick_complex(ws, o.complex).name);
    PerversityPair pp = make_pair(sp.n(), o.p, o.q);
    LooseMode mode = parse_mode(o.mode);
    bool compact = o.supports == "compact";
    if (!compact && o.supports != "closed") throw Error(ErrorKind::ParseError, "--supports must be compact or closed");
    IHResult r;
    if (o.open.empty()) {
        r = compact ? ih_compact(sp, pp, mode) : ih_closed(sp, pp, full_mask(sp.x), mode);
    } else {
        CellMask v = parse_open(sp, o.open);
        r = compact ? ih_open_compact(sp, pp, v, mode) : ih_open_closed(sp, pp, v, mode);
    }
    print_dims(out, compact ? "IH^c" : "IH^cl", r.dims(), o.tsv);
    if (o.reps && o.open.empty())
        for (std::size_t k = 0; k < r.degrees.size(); ++k)
            for (auto& c : r.degrees[k].reps) out << "  k=" << k << ": " << chain_label(sp.x, c) << "\n";
    return ok;
}

inline int cmd_check_strat(const Options& o, std::ostream& out) {
    auto ws = load_file(o.file);
    const Space& sp = ws.space(pick_complex(ws, o.complex).name);
    for (auto& st : sp.s.strata) {
        std::vector<std::string> cells;
        for (auto& c : st.cells)
            if (cells.size() < 6) cells.push_back(sp.x.label(c.k, c.i));
        out << "S" << st.id << " dim " << st.dim << " codim " << st.codim << " cells " << st.cells.size() << ": "
            << join(cells, " | ") << (st.cells.size() > 6 ? " | ..." : "") << "\n";
    }
    auto fr = check_frontier(sp.x, sp.f);
    for (auto& [a, b] : fr.violations) out << "frontier violation: S" << a << " meets cl(S" << b << ")\n";
    out << "frontier: " << (fr.ok ? "ok" : "violated") << "\n";
    return fr.ok ? ok : mismatch;
}

inline int cmd_check_small(const Options& o, std::ostream& out) {
    auto ws = load_file(o.file);
    std::string m = pick_map(ws, o.map, "");
    auto r = resolution_named(ws, m);
    auto rep = check_small(r, ws.space(ws.map(m).to));
    for (auto& s : rep.strata)
        out << "S" << s.stratum << " dim " << s.dim << " codim " << s.codim << " fibre " << s.fiber_dim
            << (s.small ? " small" : " too large") << "\n";
    for (auto& [i, d] : rep.locus_dims) out << "fibre >= " << i << ": locus dim " << d << "\n";
    out << "small: " << yes_no(rep.small) << "\n";
    out << "small (locus form): " << yes_no(rep.small_by_locus) << "\n";
    return ok;
}

inline int cmd_strict_transform(const Options& o, std::ostream& out) {
    auto ws = load_file(o.file);
    std::string m = pick_map(ws, o.map, "");
    auto r = resolution_named(ws, m);
    const scx::CycleDecl* cyc = nullptr;
    for (auto& c : ws.doc.cycles)
        if (c.name == o.cycle && !c.dual) cyc = &c;
    if (!cyc) throw Error(ErrorKind::UnknownName, "no cycle named '" + o.cycle + "'");
    if (cyc->cx != ws.map(m).to) throw Error(ErrorKind::MismatchedComplex, "cycle does not live on the map's target");
    Chain c = primal_chain(r.target(), *cyc);
    Chain s = strict_transform(r, c);
    Chain back = pushforward(r.map, s);
    out << "C: " << chain_label(r.target(), c) << "\n";
    out << "s(C): " << chain_label(r.source(), s) << "\n";
    out << "pi_* s(C): " << chain_label(r.target(), back) << "\n";
    out << "pi_* s(C) = C: " << yes_no(back == c) << "\n";
    out << "s(C) is a cycle: " << yes_no(boundary(r.source(), s).is_zero()) << "\n";
    return ok;
}

inline int cmd_verify_smallres(const Options& o, std::ostream& out) {
    auto ws = load_file(o.file);
    std::string m = pick_map(ws, o.map, "");
    auto r = resolution_named(ws, m);
    const Space& base = ws.space(ws.map(m).to);
    auto rep = verify_smallres(r, base, make_pair(base.n(), o.p, o.q), parse_mode(o.mode));
    for (auto& d : rep.degrees) {
        out << "k=" << d.k << " H=" << d.h_dim << " IH=" << d.ih_dim << " forward=" << d.forward_generic << "/"
            << d.h_dim << " backward=" << d.backward_generic << "/" << d.ih_dim << " iso=" << yes_no(d.forward_iso)
            << "/" << yes_no(d.backward_iso) << (d.pass() ? " ok" : " FAIL") << "\n";
        for (auto& n : d.notes) out << "  " << n << "\n";
    }
    out << "smallres: " << (rep.pass() ? "pass" : "fail") << "\n";
    return rep.pass() ? ok : mismatch;
}

inline int cmd_local(const Options& o, std::ostream& out) {
    auto ws = load_file(o.file);
    const auto& cd = pick_complex(ws, o.complex);
    const Space& sp = ws.space(cd.name);
    PerversityPair pp = make_pair(sp.n(), o.p, o.q);
    std::vector<VertexId> pts;
    if (!o.vertex.empty()) {
        auto v = sp.x.vertex_id(o.vertex);
        if (!v) throw Error(ErrorKind::UnknownVertex, "unknown vertex '" + o.vertex + "'");
        pts.push_back(*v);
    } else {
        pts = isolated_singular_points(sp);
    }
    std::optional<ResolutionDatum> res;
    if (sp.n() % 2 == 1) {
        if (!o.map.empty()) res = resolution_named(ws, o.map);
        else res = resolution_for(ws, cd.name);
    }
    bool all = true;
    for (auto v : pts) {
        LocalCone c = LocalCone::make(sp.x, v);
        LocalOracle orc = local_ih_oracle(c, sp.n());
        LocalEngine e = local_ih_engine(sp, c, pp, parse_mode(o.mode));
        out << "vertex " << sp.x.vertex_name(v) << ": " << dims_line("H(link)", homology(c.link).dims()) << "\n";
        bool good = true;
        for (int k = 0; k <= sp.n(); ++k) {
            auto ku = static_cast<std::size_t>(k);
            bool a = orc.compact[ku].contains(e.compact[ku]), b = orc.closed[ku].contains(e.closed[ku]);
            good = good && a && b;
            out << "  k=" << k << " IH^c(N)=" << e.compact[ku] << " oracle " << interval(orc.compact[ku])
                << (a ? "" : " MISMATCH") << "  IH^cl(N)=" << e.closed[ku] << " oracle " << interval(orc.closed[ku])
                << (b ? "" : " MISMATCH") << "\n";
        }
        if (res) {
            auto t = odd_local_check(sp, *res, v, pp, parse_mode(o.mode));
            out << "  degree " << t.m + 1 << " closed: engine " << t.engine_closed << ", image of pi " << t.image_pi
                << ", image of boundary " << t.image_dtilde << "\n";
            out << "  degree " << t.m << " compact: engine " << t.engine_compact << ", cokernel " << t.coker_dtilde
                << "\n";
            good = good && t.consistent();
        }
        all = all && good;
    }
    out << "local: " << (all ? "pass" : "fail") << "\n";
    return all ? ok : mismatch;
}

inline int cmd_formulas(const Options& o, std::ostream& out) {
    auto ws = load_file(o.file);
    const auto& cd = pick_complex(ws, o.complex);
    const Space& sp = ws.space(cd.name);
    PerversityPair pp = make_pair(sp.n(), o.p, o.q);
    std::optional<ResolutionDatum> r;
    if (!o.map.empty()) r = resolution_named(ws, o.map);
    else if (sp.n() % 2 == 1) r = resolution_for(ws, cd.name);
    auto f = ih_isolated_formula(sp, r, pp);
    auto e = ih_compact(sp, pp, parse_mode(o.mode)).dims();
    out << dims_line("formula", f) << "\n" << dims_line("IH^c", e) << "\n";
    out << "formulas: " << (f == e ? "match" : "differ") << "\n";
    return f == e ? ok : mismatch;
}

inline void print_pairing(std::ostream& out, const PairingReport& r) {
    out << "pairing k=" << r.k << " rank " << r.rank << " of IH^c dim " << r.ih_dim << (r.full() ? " full" : " degenerate")
        << "\n";
    for (std::size_t i = 0; i < r.primal.size(); ++i) {
        out << "  " << std::left << std::setw(12) << r.primal[i];
        for (std::size_t j = 0; j < r.dual.size(); ++j) out << " " << (r.matrix.get(i, j) ? 1 : 0);
        out << "\n";
    }
    out << "  columns: " << join(r.dual, " ") << "\n";
}

inline int cmd_pair(const Options& o, std::ostream& out) {
    auto ws = load_file(o.file);
    const auto& cd = pick_complex(ws, o.complex);
    const Space& sp = ws.space(cd.name);
    auto reps = declared_pairings(ws, cd.name, make_pair(sp.n(), o.p, o.q), parse_mode(o.mode));
    bool any = false;
    for (auto& r : reps)
        if (o.k < 0 || r.k == o.k) {
            print_pairing(out, r);
            any = true;
        }
    if (!any) throw Error(ErrorKind::UnknownName, "no declared cycle pairs for that degree");
    return ok;
}

inline int cmd_duality(const Options& o, std::ostream& out) {
    auto ws = load_file(o.file);
    const auto& cd = pick_complex(ws, o.complex);
    const Space& sp = ws.space(cd.name);
    PerversityPair pp = make_pair(sp.n(), o.p, o.q);
    LooseMode mode = parse_mode(o.mode);
    auto rep = duality_check(sp, pp, declared_pairings(ws, cd.name, pp, mode), mode);
    for (int k = 0; k <= rep.n; ++k)
        out << "k=" << k << " IH^c_k=" << rep.compact[static_cast<std::size_t>(k)] << " IH^cl_" << rep.n - k << "="
            << rep.closed[static_cast<std::size_t>(rep.n - k)] << "\n";
    for (auto& r : rep.pairings) print_pairing(out, r);
    out << "mv: " << mv_consistency(sp, pp, mode) << "\n";
    out << "duality: " << (rep.pass() ? "pass" : "fail") << "\n";
    return rep.pass() ? ok : mismatch;
}

inline int cmd_verify_corpus(const Options& o, std::ostream& out) {
    std::vector<corpus::Entry> files;
    if (o.dir.empty()) {
        files = corpus::all();
    } else {
        std::vector<std::filesystem::path> paths;
        for (auto& e : std::filesystem::directory_iterator(o.dir))
            if (e.path().extension() == ".scx") paths.push_back(e.path());
        std::sort(paths.begin(), paths.end());
        for (auto& p : paths) files.push_back({p.filename().string(), read_input(p.string())});
    }
    std::size_t pass = 0, fail = 0;
    for (auto& f : files) {
        std::vector<ExpectOutcome> res;
        try {
            res = check_expectations(scx::load(scx::parse_scx(f.text)));
        } catch (const Error& e) {
            out << "FAIL " << f.file << ": " << e.what() << "\n";
            ++fail;
            continue;
        }
        for (auto& r : res) {
            out << (r.ok ? "PASS " : "FAIL ") << f.file << ":" << r.line << " " << r.complex << ": " << r.text;
            if (!r.ok) out << " (got " << r.got << ")";
            out << "\n";
            ++(r.ok ? pass : fail);
        }
    }
    out << "expectations: " << pass << " passed, " << fail << " failed\n";
    return fail ? mismatch : ok;
}

inline int cmd_corpus(const Options& o, std::ostream& out) {
    auto files = corpus::canonical();
    if (!o.dir.empty()) std::filesystem::create_directories(o.dir);
    for (auto& f : files) {
        if (!o.dir.empty()) {
            std::ofstream w(std::filesystem::path(o.dir) / f.file);
            if (!w) throw Error(ErrorKind::ParseError, "cannot write into '" + o.dir + "'");
            w << f.text;
        }
        out << f.file << "\n";
    }
    return ok;
}

}  // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    detail::Options o;
    CLI::App app{"Intersection homology of stratified simplicial complexes over GF(2)", "rih"};
    app.require_subcommand(1);
    std::string which;

    auto file_cmd = [&](const std::string& name, const std::string& help) {
        auto* c = app.add_subcommand(name, help);
        c->add_option("file", o.file, "SCX file, or the name of a bundled fixture")->required();
        c->add_option("--complex", o.complex, "complex to use (default: the first)");
        c->callback([&which, name] { which = name; });
        return c;
    };
    auto perv = [&](CLI::App* c) {
        c->add_option("--p", o.p, "lower perversity as a comma list");
        c->add_option("--q", o.q, "upper perversity as a comma list");
        c->add_option("--loose-mode", o.mode, "primary or literal");
    };

    auto* h = file_cmd("homology", "ordinary homology");
    h->add_flag("--tsv", o.tsv, "tab-separated degree/dim rows");
    h->add_flag("--reps", o.reps, "print representatives");
    auto* ih = file_cmd("ih", "intersection homology");
    ih->add_option("--supports", o.supports, "compact or closed");
    ih->add_option("--open", o.open, "open set: star:v,..., strata:i,..., or all");
    ih->add_flag("--tsv", o.tsv, "tab-separated degree/dim rows");
    ih->add_flag("--reps", o.reps, "print representatives");
    perv(ih);
    file_cmd("check-strat", "strata and the frontier condition");
    file_cmd("check-small", "fibre dimensions of a resolution")->add_option("--map", o.map, "resolution map");
    auto* st = file_cmd("strict-transform", "strict transform of a declared cycle");
    st->add_option("--map", o.map, "resolution map");
    st->add_option("--cycle", o.cycle, "cycle name")->required();
    auto* vs = file_cmd("verify-smallres", "compare H of a small resolution with IH of the base");
    vs->add_option("--map", o.map, "resolution map");
    perv(vs);
    auto* lc = file_cmd("local", "local cone dimensions against the link formulas");
    lc->add_option("--vertex", o.vertex, "cone point (default: every isolated singular point)");
    lc->add_option("--map", o.map, "resolution for the odd-dimensional cross-check");
    perv(lc);
    auto* fm = file_cmd("formulas", "isolated-singularity formulas against the engine");
    fm->add_option("--map", o.map, "resolution map (odd dimension)");
    perv(fm);
    auto* pr = file_cmd("pair", "intersection pairing of declared cycles");
    pr->add_option("--k", o.k, "degree of the compact cycles");
    perv(pr);
    auto* du = file_cmd("duality", "duality dimensions, pairings and Mayer-Vietoris sum");
    perv(du);
    auto* vc = app.add_subcommand("verify-corpus", "check every expectation in the corpus");
    vc->add_option("--dir", o.dir, "directory of .scx files (default: bundled corpus)");
    vc->callback([&] { which = "verify-corpus"; });
    auto* cp = app.add_subcommand("corpus", "list or write the bundled fixtures");
    cp->add_option("--emit", o.dir, "directory to write the .scx files into");
    cp->callback([&] { which = "corpus"; });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? ok : input_error;
    }

    static const std::map<std::string, int (*)(const detail::Options&, std::ostream&)> table{
        {"homology", detail::cmd_homology},
        {"ih", detail::cmd_ih},
        {"check-strat", detail::cmd_check_strat},
        {"check-small", detail::cmd_check_small},
        {"strict-transform", detail::cmd_strict_transform},
        {"verify-smallres", detail::cmd_verify_smallres},
        {"local", detail::cmd_local},
        {"formulas", detail::cmd_formulas},
        {"pair", detail::cmd_pair},
        {"duality", detail::cmd_duality},
        {"verify-corpus", detail::cmd_verify_corpus},
        {"corpus", detail::cmd_corpus},
    };
    try {
        return table.at(which)(o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return input_error;
    }
}

}  // namespace rih::cli
