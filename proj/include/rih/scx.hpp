#pragma once

// SCX: a line-oriented text format for stratified complexes, sheet pairings,
// simplicial maps, representative cycles and expected results.
//
//   complex <name> dim <n>
//   top <v,...>
//   skeleton <j> <v,...>; <v,...>; ...
//   pair <d> face <v,...> : <sheet>|<sheet> ...
//   map <name> from <cx> to <cx> : <v>-><w> ...
//   exceptional <v,...>; ...
//   compatible
//   cycle <name> in <cx> deg <k> : <v,...>; ...
//   dualcycle <name> in <cx> deg <k> : <v,...>; <v,...> < <v,...>; ...
//   expect <tokens...>
//
// `top`, `skeleton`, `pair` and `expect` belong to the latest `complex`;
// `exceptional` and `compatible` to the latest `map`. Names used by `map` and
// `cycle` lines are resolved after the whole file is read.

#include <algorithm>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rih/chains.hpp"
#include "rih/error.hpp"
#include "rih/scomplex.hpp"
#include "rih/space.hpp"
#include "rih/strat.hpp"

namespace rih::scx {

using Names = std::vector<std::string>;

struct PairDecl {
    int d = 0;
    Names face;
    std::vector<std::pair<Names, Names>> pairs;
    int line = 0;
    friend bool operator==(const PairDecl& a, const PairDecl& b) {
        return a.d == b.d && a.face == b.face && a.pairs == b.pairs;
    }
};

struct Expectation {
    std::vector<std::string> tokens;
    int line = 0;
    friend bool operator==(const Expectation& a, const Expectation& b) { return a.tokens == b.tokens; }
};

struct ComplexDecl {
    std::string name;
    int dim = 0;
    std::vector<Names> tops;
    std::map<int, std::vector<Names>> skeleta;
    std::vector<PairDecl> pairs;
    std::vector<Expectation> expects;
    int line = 0;
    friend bool operator==(const ComplexDecl& a, const ComplexDecl& b) {
        return a.name == b.name && a.dim == b.dim && a.tops == b.tops && a.skeleta == b.skeleta &&
               a.pairs == b.pairs && a.expects == b.expects;
    }
};

struct MapDecl {
    std::string name, from, to;
    std::vector<std::pair<std::string, std::string>> vmap;
    std::vector<Names> exceptional;
    bool compatible = false;
    int line = 0;
    friend bool operator==(const MapDecl& a, const MapDecl& b) {
        return a.name == b.name && a.from == b.from && a.to == b.to && a.vmap == b.vmap &&
               a.exceptional == b.exceptional && a.compatible == b.compatible;
    }
};

// A dual-cycle entry is either one base simplex (its whole top dual block) or
// a flag of base simplices naming one subdivision cell.
struct CycleDecl {
    std::string name, cx;
    int k = 0;
    bool dual = false;
    std::vector<std::vector<Names>> entries;  // primal: one simplex each
    int line = 0;
    friend bool operator==(const CycleDecl& a, const CycleDecl& b) {
        return a.name == b.name && a.cx == b.cx && a.k == b.k && a.dual == b.dual && a.entries == b.entries;
    }
};

struct Document {
    std::vector<ComplexDecl> complexes;
    std::vector<MapDecl> maps;
    std::vector<CycleDecl> cycles;
    friend bool operator==(const Document&, const Document&) = default;

    const ComplexDecl* complex(const std::string& n) const {
        for (auto& c : complexes)
            if (c.name == n) return &c;
        return nullptr;
    }
};

namespace detail {

inline std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(trim(cur));
    return out;
}

inline std::vector<std::string> words(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string w; in >> w;) out.push_back(w);
    return out;
}

[[noreturn]] inline void fail(int line, const std::string& why, ErrorKind kind = ErrorKind::ParseError) {
    throw Error(kind, "line " + std::to_string(line) + ": " + why);
}

inline int to_int(const std::string& s, int line) {
    try {
        std::size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) fail(line, "expected an integer, got '" + s + "'");
        return v;
    } catch (const std::logic_error&) {
        fail(line, "expected an integer, got '" + s + "'");
    }
}

inline Names simplex_names(const std::string& s, int line) {
    Names out;
    for (auto& v : split(s, ',')) {
        if (v.empty()) fail(line, "empty vertex name in '" + s + "'");
        if (v.find_first_of(" \t;|:") != std::string::npos) fail(line, "bad vertex name '" + v + "'");
        out.push_back(v);
    }
    return out;
}

inline std::vector<Names> simplex_list(const std::string& s, int line) {
    std::vector<Names> out;
    for (auto& part : split(s, ';')) {
        if (part.empty()) continue;
        out.push_back(simplex_names(part, line));
    }
    return out;
}

// "head : tail" with exactly one colon
inline std::pair<std::string, std::string> colon(const std::string& s, int line) {
    auto c = s.find(':');
    if (c == std::string::npos) fail(line, "missing ':'");
    return {trim(s.substr(0, c)), trim(s.substr(c + 1))};
}

}  // namespace detail

inline Document parse_structure(const std::string& text) {
    using namespace detail;
    Document doc;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    // indices, since the vectors grow while parsing
    long cur_ix = -1, map_ix = -1;
    bool any = false;
    while (std::getline(in, raw)) {
        ++line;
        auto hash = raw.find('#');
        std::string ln = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (ln.empty()) continue;
        any = true;
        auto w = words(ln);
        const std::string& kw = w[0];
        if (kw == "complex") {
            if (w.size() != 4 || w[2] != "dim") fail(line, "expected 'complex <name> dim <n>'");
            if (doc.complex(w[1])) fail(line, "complex '" + w[1] + "' declared twice");
            doc.complexes.push_back({w[1], to_int(w[3], line), {}, {}, {}, {}, line});
            cur_ix = static_cast<long>(doc.complexes.size()) - 1;
            map_ix = -1;
        } else if (kw == "top" || kw == "skeleton" || kw == "pair" || kw == "expect") {
            if (cur_ix < 0) fail(line, "'" + kw + "' before any complex");
            ComplexDecl* cur = &doc.complexes[static_cast<std::size_t>(cur_ix)];
            std::string rest = trim(ln.substr(kw.size()));
            if (kw == "top") {
                if (rest.empty()) fail(line, "empty top simplex");
                cur->tops.push_back(simplex_names(rest, line));
            } else if (kw == "skeleton") {
                if (w.size() < 2) fail(line, "expected 'skeleton <j> ...'");
                int j = to_int(w[1], line);
                if (j < 0 || j >= cur->dim) fail(line, "skeleton index out of range");
                std::string body = trim(rest.substr(w[1].size()));
                auto& sk = cur->skeleta[j];
                for (auto& s : simplex_list(body, line)) sk.push_back(s);
            } else if (kw == "pair") {
                auto [head, tail] = colon(rest, line);
                auto hw = words(head);
                if (hw.size() != 3 || hw[1] != "face") fail(line, "expected 'pair <d> face <v,...> : ...'");
                PairDecl pd{to_int(hw[0], line), simplex_names(hw[2], line), {}, line};
                for (auto& tok : words(tail)) {
                    auto sides = split(tok, '|');
                    if (sides.size() != 2) fail(line, "sheet pair must look like 'a,b|c,d'");
                    pd.pairs.push_back({simplex_names(sides[0], line), simplex_names(sides[1], line)});
                }
                cur->pairs.push_back(std::move(pd));
            } else {
                if (w.size() < 2) fail(line, "empty expectation");
                cur->expects.push_back({{w.begin() + 1, w.end()}, line});
            }
        } else if (kw == "map") {
            auto [head, tail] = colon(ln, line);
            auto hw = words(head);
            if (hw.size() != 6 || hw[2] != "from" || hw[4] != "to")
                fail(line, "expected 'map <name> from <cx> to <cx> : ...'");
            for (auto& m : doc.maps)
                if (m.name == hw[1]) fail(line, "map '" + hw[1] + "' declared twice");
            MapDecl md{hw[1], hw[3], hw[5], {}, {}, false, line};
            for (auto& tok : words(tail)) {
                auto arrow = tok.find("->");
                if (arrow == std::string::npos || arrow == 0 || arrow + 2 >= tok.size())
                    fail(line, "vertex assignment must look like 'u->v'");
                md.vmap.push_back({tok.substr(0, arrow), tok.substr(arrow + 2)});
            }
            doc.maps.push_back(std::move(md));
            map_ix = static_cast<long>(doc.maps.size()) - 1;
            cur_ix = -1;
        } else if (kw == "exceptional" || kw == "compatible") {
            if (map_ix < 0) fail(line, "'" + kw + "' must follow a map");
            MapDecl* cur_map = &doc.maps[static_cast<std::size_t>(map_ix)];
            if (kw == "compatible") {
                if (w.size() != 1) fail(line, "'compatible' takes no arguments");
                cur_map->compatible = true;
            } else {
                for (auto& s : simplex_list(trim(ln.substr(kw.size())), line)) cur_map->exceptional.push_back(s);
            }
        } else if (kw == "cycle" || kw == "dualcycle") {
            auto [head, tail] = colon(ln, line);
            auto hw = words(head);
            if (hw.size() != 6 || hw[2] != "in" || hw[4] != "deg")
                fail(line, "expected '" + kw + " <name> in <cx> deg <k> : ...'");
            CycleDecl cd{hw[1], hw[3], to_int(hw[5], line), kw == "dualcycle", {}, line};
            for (auto& part : split(tail, ';')) {
                if (part.empty()) continue;
                std::vector<Names> entry;
                for (auto& piece : split(part, '<')) entry.push_back(simplex_names(piece, line));
                if (!cd.dual && entry.size() != 1) fail(line, "flags are only allowed in dual cycles");
                cd.entries.push_back(std::move(entry));
            }
            for (auto& c : doc.cycles)
                if (c.name == cd.name) fail(line, "cycle '" + cd.name + "' declared twice");
            doc.cycles.push_back(std::move(cd));
        } else {
            fail(line, "unknown keyword '" + kw + "'");
        }
    }
    if (!any) throw Error(ErrorKind::EmptyInput, "line 0: empty SCX input");
    return doc;
}

// Everything a document describes, as library objects.
struct MapModel {
    SimplicialMap map;
    std::string from, to;
    CellMask exceptional;  // closed subcomplex of the source
    bool compatible = false;
};

struct Workspace {
    Document doc;
    std::map<std::string, std::shared_ptr<const Space>> spaces;
    std::map<std::string, MapModel> maps;

    const Space& space(const std::string& name) const {
        auto it = spaces.find(name);
        if (it == spaces.end()) throw Error(ErrorKind::UnknownName, "no complex named '" + name + "'");
        return *it->second;
    }
    const MapModel& map(const std::string& name) const {
        auto it = maps.find(name);
        if (it == maps.end()) throw Error(ErrorKind::UnknownName, "no map named '" + name + "'");
        return it->second;
    }
    std::vector<const CycleDecl*> cycles_in(const std::string& cx, bool dual, int k) const {
        std::vector<const CycleDecl*> out;
        for (auto& c : doc.cycles)
            if (c.cx == cx && c.dual == dual && c.k == k) out.push_back(&c);
        return out;
    }
};

namespace detail {

inline CellRef resolve(const SimplicialComplex& x, const Names& s, int line) {
    try {
        return x.cell_of(s);
    } catch (const Error& e) {
        fail(line, e.what(), e.kind() == ErrorKind::UnknownVertex ? ErrorKind::UnknownVertex : ErrorKind::ParseError);
    }
}

inline Space build_space(const ComplexDecl& cd) {
    if (cd.tops.empty()) fail(cd.line, "complex '" + cd.name + "' has no top simplices");
    SimplicialComplex x;
    try {
        x = SimplicialComplex::from_maximal(cd.tops);
    } catch (const Error& e) {
        fail(cd.line, e.what());
    }
    if (x.dim() > cd.dim) fail(cd.line, "complex '" + cd.name + "' exceeds its declared dimension");
    std::map<int, std::vector<CellRef>> sk;
    int sk_line = cd.line;
    for (auto& [j, list] : cd.skeleta) {
        auto& out = sk[j];
        for (auto& s : list) out.push_back(resolve(x, s, cd.line));
    }
    Filtration f;
    try {
        f = Filtration::from_skeleta(x, cd.dim, sk);
    } catch (const Error& e) {
        fail(sk_line, e.what(),
             e.kind() == ErrorKind::NonNestedSkeleton ? ErrorKind::NonNestedSkeleton : ErrorKind::ParseError);
    }
    SheetPairing p;
    for (auto& pd : cd.pairs) {
        if (static_cast<int>(pd.face.size()) != pd.d) fail(pd.line, "face of a pair block must have d vertices");
        CellRef face = resolve(x, pd.face, pd.line);
        std::vector<std::pair<std::size_t, std::size_t>> prs;
        for (auto& [a, b] : pd.pairs) {
            CellRef ca = resolve(x, a, pd.line), cb = resolve(x, b, pd.line);
            if (ca.k != pd.d || cb.k != pd.d) fail(pd.line, "sheets must be " + std::to_string(pd.d) + "-simplices");
            prs.push_back({ca.i, cb.i});
        }
        if (p.has_explicit(face)) fail(pd.line, "face paired twice");
        try {
            p.set(x, face, std::move(prs));
        } catch (const Error& e) {
            fail(pd.line, e.what(), e.kind());
        }
    }
    return Space::make(std::move(x), std::move(f), std::move(p));
}

}  // namespace detail

inline Workspace load(const Document& doc) {
    using namespace detail;
    Workspace ws;
    ws.doc = doc;
    for (auto& cd : doc.complexes) ws.spaces[cd.name] = std::make_shared<const Space>(build_space(cd));
    for (auto& md : doc.maps) {
        auto src = ws.spaces.find(md.from), tgt = ws.spaces.find(md.to);
        if (src == ws.spaces.end() || tgt == ws.spaces.end())
            fail(md.line, "map '" + md.name + "' refers to an unknown complex", ErrorKind::UnknownName);
        std::map<std::string, std::string> vm;
        for (auto& [a, b] : md.vmap)
            if (!vm.emplace(a, b).second) fail(md.line, "vertex '" + a + "' mapped twice");
        MapModel mm;
        mm.from = md.from;
        mm.to = md.to;
        mm.compatible = md.compatible;
        // aliasing constructors keep the spaces alive with the map
        std::shared_ptr<const SimplicialComplex> sx(src->second, &src->second->x);
        std::shared_ptr<const SimplicialComplex> tx(tgt->second, &tgt->second->x);
        try {
            mm.map = SimplicialMap::make(sx, tx, vm);
        } catch (const Error& e) {
            fail(md.line, e.what(), e.kind());
        }
        mm.exceptional = empty_mask(*sx);
        for (auto& s : md.exceptional) {
            CellRef c = resolve(*sx, s, md.line);
            mm.exceptional[static_cast<std::size_t>(c.k)][c.i] = 1;
        }
        mm.exceptional = closure(*sx, mm.exceptional);
        ws.maps.emplace(md.name, std::move(mm));
    }
    for (auto& cy : doc.cycles) {
        auto it = ws.spaces.find(cy.cx);
        if (it == ws.spaces.end()) fail(cy.line, "cycle '" + cy.name + "' refers to an unknown complex", ErrorKind::UnknownName);
        const auto& x = it->second->x;
        for (auto& entry : cy.entries) {
            int prev = -1;
            for (auto& s : entry) {
                CellRef c = resolve(x, s, cy.line);
                if (!cy.dual && c.k != cy.k) fail(cy.line, "cycle simplices must have dimension " + std::to_string(cy.k));
                if (c.k <= prev) fail(cy.line, "flag entries must increase in dimension");
                prev = c.k;
            }
        }
    }
    return ws;
}

inline Document parse_scx(const std::string& text) {
    Document d = parse_structure(text);
    load(d);  // validates every reference
    return d;
}

inline std::string emit_scx(const Document& doc) {
    std::ostringstream out;
    auto simp = [](const Names& s) { return join(s, ","); };
    auto list = [&](const std::vector<Names>& ss) {
        std::vector<std::string> parts;
        for (auto& s : ss) parts.push_back(simp(s));
        return join(parts, "; ");
    };
    bool first = true;
    for (auto& c : doc.complexes) {
        if (!first) out << "\n";
        first = false;
        out << "complex " << c.name << " dim " << c.dim << "\n";
        for (auto& t : c.tops) out << "top " << simp(t) << "\n";
        for (auto& [j, ss] : c.skeleta) out << "skeleton " << j << " " << list(ss) << "\n";
        for (auto& p : c.pairs) {
            out << "pair " << p.d << " face " << simp(p.face) << " :";
            for (auto& [a, b] : p.pairs) out << " " << simp(a) << "|" << simp(b);
            out << "\n";
        }
        for (auto& e : c.expects) out << "expect " << join(e.tokens, " ") << "\n";
    }
    for (auto& m : doc.maps) {
        out << "\nmap " << m.name << " from " << m.from << " to " << m.to << " :";
        for (auto& [a, b] : m.vmap) out << " " << a << "->" << b;
        out << "\n";
        if (!m.exceptional.empty()) out << "exceptional " << list(m.exceptional) << "\n";
        if (m.compatible) out << "compatible\n";
    }
    if (!doc.cycles.empty()) out << "\n";
    for (auto& c : doc.cycles) {
        out << (c.dual ? "dualcycle " : "cycle ") << c.name << " in " << c.cx << " deg " << c.k << " :";
        std::vector<std::string> parts;
        for (auto& e : c.entries) {
            std::vector<std::string> fl;
            for (auto& s : e) fl.push_back(simp(s));
            parts.push_back(join(fl, " < "));
        }
        out << " " << join(parts, "; ") << "\n";
    }
    return out.str();
}

}  // namespace rih::scx
