#pragma once

// Bundled fixtures, produced as SCX text.

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "rih/scx.hpp"

namespace rih::corpus {

struct Entry {
    std::string file;
    std::string text;
};

namespace detail {

inline std::string s(std::initializer_list<std::string> vs) {
    return join(std::vector<std::string>(vs), ",");
}

// The figure eight: two triangle petals through the node v0.
inline std::string figure_eight(const std::string& pairing, int ih0) {
    std::ostringstream o;
    o << "complex figure8 dim 1\n"
         "top v0,a\ntop a,b\ntop b,v0\n"
         "top v0,c\ntop c,d\ntop d,v0\n"
         "skeleton 0 v0\n"
      << pairing << "expect ih c 0 = " << ih0 << "\n"
      << "expect h 0 = 1\nexpect h 1 = 2\n";
    return o.str();
}

inline std::string t(int i, int j) { return "t" + std::to_string((i % 3 + 3) % 3) + std::to_string((j % 3 + 3) % 3); }

// 3x3 product triangulation of the torus, staircase order 0 < 1 < 2 on both axes.
inline std::vector<std::vector<std::string>> torus33() {
    std::vector<std::vector<std::string>> tri;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            int i2 = (i + 1) % 3, j2 = (j + 1) % 3;
            int la = std::min(i, i2), ha = std::max(i, i2), lb = std::min(j, j2), hb = std::max(j, j2);
            tri.push_back({t(la, lb), t(ha, lb), t(ha, hb)});
            tri.push_back({t(la, lb), t(la, hb), t(ha, hb)});
        }
    return tri;
}

}  // namespace detail

inline Entry node() {
    std::string text =
        "# Node curve: a figure eight whose branches cross at v0.\n" +
        detail::figure_eight("pair 1 face v0 : v0,a|v0,c v0,b|v0,d\n", 1) +
        "expect ih c 1 = 1\n"
        "expect ih cl 0 = 1\nexpect ih cl 1 = 1\n"
        "expect small node_pi = yes\n"
        "expect smallres node_pi = pass\n"
        "expect formula node_pi 0 = 1\nexpect formula node_pi 1 = 1\n"
        "expect mv = 0\n"
        "expect duality = pass\n"
        "expect pairing 0 rank = 1\nexpect pairing 1 rank = 1\n"
        "\n"
        "complex node_res dim 1\n"
        "top n1,a\ntop a,b\ntop b,n2\ntop n2,d\ntop d,c\ntop c,n1\n"
        "expect h 0 = 1\nexpect h 1 = 1\n"
        "\n"
        "map node_pi from node_res to figure8 : n1->v0 n2->v0 a->a b->b c->c d->d\n"
        "exceptional n1; n2\n"
        "compatible\n"
        "\n"
        "cycle fund in figure8 deg 1 : v0,a; a,b; b,v0; v0,c; c,d; d,v0\n"
        "cycle pt in figure8 deg 0 : a\n"
        "dualcycle pt_dual in figure8 deg 0 : a,b\n"
        "dualcycle fund_dual in figure8 deg 1 : v0; a; b; c; d\n";
    return {"node.scx", text};
}

inline Entry tacnode() {
    std::string text =
        "# Tacnode: the same figure eight, each petal continuing into itself at v0.\n" +
        detail::figure_eight("pair 1 face v0 : v0,a|v0,b v0,c|v0,d\n", 2) +
        "expect ih c 1 = 2\n"
        "expect small tacnode_pi = yes\n"
        "expect smallres tacnode_pi = pass\n"
        "expect formula tacnode_pi 0 = 2\nexpect formula tacnode_pi 1 = 2\n"
        "expect mv = 0\n"
        "expect duality = pass\n"
        "expect pairing 0 rank = 2\nexpect pairing 1 rank = 2\n"
        "\n"
        "complex tacnode_res dim 1\n"
        "top n1,a\ntop a,b\ntop b,n1\n"
        "top n2,c\ntop c,d\ntop d,n2\n"
        "expect h 0 = 2\nexpect h 1 = 2\n"
        "\n"
        "map tacnode_pi from tacnode_res to figure8 : n1->v0 n2->v0 a->a b->b c->c d->d\n"
        "exceptional n1; n2\n"
        "compatible\n"
        "\n"
        "cycle circle_a in figure8 deg 1 : v0,a; a,b; b,v0\n"
        "cycle circle_c in figure8 deg 1 : v0,c; c,d; d,v0\n"
        "cycle pt_a in figure8 deg 0 : a\n"
        "cycle pt_c in figure8 deg 0 : c\n"
        "dualcycle cross_a in figure8 deg 0 : a,b\n"
        "dualcycle cross_c in figure8 deg 0 : c,d\n"
        "dualcycle around_a in figure8 deg 1 : a; b; v0 < v0,a; v0 < v0,b\n"
        "dualcycle around_c in figure8 deg 1 : c; d; v0 < v0,c; v0 < v0,d\n";
    return {"tacnode.scx", text};
}

inline Entry segment() {
    return {"segment.scx",
            "# A closed segment. Its 1-chain is not arc-symmetric at either end.\n"
            "complex segment dim 1\n"
            "top a,b\n"
            "expect h 0 = 1\nexpect h 1 = 0\n"
            "expect ih c 0 = 1\nexpect ih c 1 = 0\n"
            "\n"
            "cycle whole in segment deg 1 : a,b\n"};
}

// The plane closed up at infinity, cut into four quadrants by two lines that
// pass straight through every vertex on them.
inline Entry quadrant() {
    return {"quadrant.scx",
            "complex plane dim 2\n"
            "top o,e,n\ntop o,n,w\ntop o,w,s\ntop o,s,e\n"
            "top inf,e,n\ntop inf,n,w\ntop inf,w,s\ntop inf,s,e\n"
            "pair 1 face o : o,e|o,w o,n|o,s\n"
            "pair 1 face inf : inf,e|inf,w inf,n|inf,s\n"
            "pair 1 face e : o,e|e,inf e,n|e,s\n"
            "pair 1 face w : o,w|inf,w n,w|s,w\n"
            "pair 1 face n : o,n|inf,n e,n|n,w\n"
            "pair 1 face s : o,s|inf,s e,s|s,w\n"
            "expect h 0 = 1\nexpect h 1 = 0\nexpect h 2 = 1\n"
            "expect ih c 0 = 1\nexpect ih c 1 = 0\nexpect ih c 2 = 1\n"
            "\n"
            "cycle quadrant in plane deg 2 : o,e,n; inf,e,n\n"};
}

inline Entry circle() {
    return {"circle.scx",
            "complex circle dim 1\n"
            "top a,b\ntop b,c\ntop a,c\n"
            "expect h 0 = 1\nexpect h 1 = 1\n"
            "expect ih c 0 = 1\nexpect ih c 1 = 1\n"
            "\n"
            "complex circle_pt dim 1\n"
            "top a,b\ntop b,c\ntop a,c\n"
            "skeleton 0 a\n"
            "expect ih c 0 = 1\nexpect ih c 1 = 1\n"};
}

inline std::string torus7_tops() {
    std::ostringstream o;
    for (int i = 0; i < 7; ++i) {
        auto v = [&](int d) { return "v" + std::to_string((i + d) % 7); };
        o << "top " << v(0) << "," << v(1) << "," << v(3) << "\n";
        o << "top " << v(0) << "," << v(2) << "," << v(3) << "\n";
    }
    return o.str();
}

inline Entry torus() {
    std::string tops = torus7_tops();
    return {"torus.scx",
            "# Seven-vertex torus, once plain and once with an artificial point stratum.\n"
            "complex torus dim 2\n" + tops +
                "expect h 0 = 1\nexpect h 1 = 2\nexpect h 2 = 1\n"
                "expect ih c 0 = 1\nexpect ih c 1 = 2\nexpect ih c 2 = 1\n"
                "expect mv = 0\n"
                "\n"
                "complex torus_pt dim 2\n" +
                tops +
                "skeleton 0 v0\n"
                "expect ih c 0 = 1\nexpect ih c 1 = 2\nexpect ih c 2 = 1\n"
                "expect formula none 0 = 1\nexpect formula none 1 = 2\nexpect formula none 2 = 1\n"
                "expect mv = 0\n"
                "expect duality = pass\n"};
}

inline Entry rp2() {
    return {"rp2.scx",
            "complex rp2 dim 2\n"
            "top 1,2,3\ntop 1,3,4\ntop 1,4,5\ntop 1,5,6\ntop 1,2,6\n"
            "top 2,3,5\ntop 3,4,6\ntop 2,4,5\ntop 3,5,6\ntop 2,4,6\n"
            "expect h 0 = 1\nexpect h 1 = 1\nexpect h 2 = 1\n"
            "expect ih c 0 = 1\nexpect ih c 1 = 1\nexpect ih c 2 = 1\n"};
}

inline Entry sphere() {
    return {"sphere.scx",
            "# Octahedron boundary.\n"
            "complex sphere dim 2\n"
            "top px,py,pz\ntop px,py,nz\ntop px,ny,pz\ntop px,ny,nz\n"
            "top nx,py,pz\ntop nx,py,nz\ntop nx,ny,pz\ntop nx,ny,nz\n"
            "expect h 0 = 1\nexpect h 1 = 0\nexpect h 2 = 1\n"
            "expect ih c 0 = 1\nexpect ih c 1 = 0\nexpect ih c 2 = 1\n"};
}

inline std::string pinched_sphere_block(bool with_expects) {
    std::string b =
        "complex pinched dim 2\n"
        "top N,c0,c1\ntop N,c1,c2\ntop N,c0,c2\n"
        "top S,c0,c1\ntop S,c1,c2\ntop S,c0,c2\n"
        "skeleton 0 N; S\n";
    if (with_expects)
        b += "expect ih c 0 = 1\nexpect ih c 1 = 0\nexpect ih c 2 = 1\n"
             "expect h 0 = 1\nexpect h 1 = 0\nexpect h 2 = 1\n"
             "expect formula none 0 = 1\nexpect formula none 1 = 0\nexpect formula none 2 = 1\n"
             "expect mv = 0\n"
             "expect duality = pass\n"
             "expect pairing 0 rank = 1\nexpect pairing 2 rank = 1\n";
    return b;
}

// Suspension of a circle: a sphere whose poles are cone points.
inline Entry pinched_sphere() {
    return {"pinched_sphere.scx",
            pinched_sphere_block(true) +
                "\n"
                "cycle pt in pinched deg 0 : c0\n"
                "cycle fund in pinched deg 2 : N,c0,c1; N,c1,c2; N,c0,c2; S,c0,c1; S,c1,c2; S,c0,c2\n"
                "dualcycle fund_dual in pinched deg 2 : N; S; c0; c1; c2\n"
                "dualcycle pt_dual in pinched deg 0 : N,c0,c1\n"};
}

inline Entry cone_circle() {
    std::ostringstream o;
    o << "# Cone on a hexagon; the rim is its own stratum so the open cone is a union of strata.\n";
    o << "complex cone dim 2\n";
    for (int i = 0; i < 6; ++i) o << "top o,r" << i << ",r" << (i + 1) % 6 << "\n";
    o << "skeleton 0 o\n";
    o << "skeleton 1 o";
    for (int i = 0; i < 6; ++i) o << "; r" << i << ",r" << (i + 1) % 6;
    o << "\n";
    o << "expect ih c open star:o 0 = 1\nexpect ih c open star:o 1 = 0\nexpect ih c open star:o 2 = 0\n"
         "expect ih cl open star:o 0 = 0\nexpect ih cl open star:o 1 = 0\nexpect ih cl open star:o 2 = 1\n"
         "expect h 0 = 1\nexpect h 1 = 0\nexpect h 2 = 0\n";
    return {"cone_circle.scx", o.str()};
}

// Suspension of the 3x3 torus, resolved by the product of a circle with the
// suspension of the other circle.
inline Entry suspended_torus() {
    using detail::t;
    std::ostringstream o;
    o << "# Suspension of a torus: two isolated singular points x0, x1 of codimension 3.\n";
    o << "complex susp_torus dim 3\n";
    for (const char* p : {"x0", "x1"})
        for (auto& tri : detail::torus33()) o << "top " << p << "," << join(tri, ",") << "\n";
    o << "skeleton 0 x0; x1\n";
    // sheets around each cone edge continue along the a-direction
    for (const char* p : {"x0", "x1"})
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                o << "pair 2 face " << p << "," << t(i, j) << " : " << p << "," << t(i, j) << "," << t(i - 1, j)
                  << "|" << p << "," << t(i, j) << "," << t(i + 1, j) << "\n";
    o << "expect h 0 = 1\nexpect h 1 = 0\nexpect h 2 = 2\nexpect h 3 = 1\n";
    for (int k = 0; k <= 3; ++k) o << "expect ih c " << k << " = 1\n";
    o << "expect small susp_pi = yes\n";
    o << "expect smallres susp_pi = pass\n";
    for (int k = 0; k <= 3; ++k) o << "expect formula susp_pi " << k << " = 1\n";
    o << "expect mv = 0\n";
    o << "expect duality = pass\n";

    // resolution: circle b times the suspension of circle a
    auto sv = [](int j, const std::string& u) { return "s" + std::to_string(j) + "_" + u; };
    const std::vector<std::string> order{"c0", "c1", "0", "1", "2"};
    auto rank = [&](const std::string& u) { return std::find(order.begin(), order.end(), u) - order.begin(); };
    std::vector<std::vector<std::string>> susp_a;
    for (const char* c : {"c0", "c1"})
        for (int i = 0; i < 3; ++i) susp_a.push_back({c, std::to_string(i), std::to_string((i + 1) % 3)});
    o << "\ncomplex susp_res dim 3\n";
    for (int j = 0; j < 3; ++j) {
        int lb = std::min(j, (j + 1) % 3), hb = std::max(j, (j + 1) % 3);
        for (auto tri : susp_a) {
            std::sort(tri.begin(), tri.end(), [&](auto& a, auto& b) { return rank(a) < rank(b); });
            // the b-step happens after position `at` of the triangle
            for (int at = 0; at < 3; ++at) {
                std::vector<std::string> tet;
                for (int q = 0; q <= at; ++q) tet.push_back(sv(lb, tri[static_cast<std::size_t>(q)]));
                for (int q = at; q < 3; ++q) tet.push_back(sv(hb, tri[static_cast<std::size_t>(q)]));
                o << "top " << join(tet, ",") << "\n";
            }
        }
    }
    o << "expect h 0 = 1\nexpect h 1 = 1\nexpect h 2 = 1\nexpect h 3 = 1\n";
    o << "\nmap susp_pi from susp_res to susp_torus :";
    for (int j = 0; j < 3; ++j) {
        o << " " << sv(j, "c0") << "->x0 " << sv(j, "c1") << "->x1";
        for (int i = 0; i < 3; ++i) o << " " << sv(j, std::to_string(i)) << "->" << t(i, j);
    }
    o << "\nexceptional ";
    std::vector<std::string> ex;
    for (const char* c : {"c0", "c1"})
        for (int j = 0; j < 3; ++j) ex.push_back(sv(j, c) + "," + sv((j + 1) % 3, c));
    o << join(ex, "; ") << "\n";
    o << "compatible\n";
    return {"suspended_torus.scx", o.str()};
}

// A blow-up of both cone points of the pinched sphere: an annulus whose two
// boundary circles collapse. The fibres are circles over codimension-2 points.
inline Entry blowup() {
    std::ostringstream o;
    o << pinched_sphere_block(false);
    o << "expect small blowup_pi = no\n";
    o << "\ncomplex annulus dim 2\n";
    auto v = [](char r, int i) { return std::string(1, r) + std::to_string(i % 3); };
    for (auto [a, b] : {std::pair{'t', 'm'}, std::pair{'m', 'b'}})
        for (int i = 0; i < 3; ++i) {
            o << "top " << v(a, i) << "," << v(a, i + 1) << "," << v(b, i + 1) << "\n";
            o << "top " << v(a, i) << "," << v(b, i) << "," << v(b, i + 1) << "\n";
        }
    o << "expect h 0 = 1\nexpect h 1 = 1\nexpect h 2 = 0\n";
    o << "\nmap blowup_pi from annulus to pinched :";
    for (int i = 0; i < 3; ++i) o << " t" << i << "->N m" << i << "->c" << i << " b" << i << "->S";
    o << "\nexceptional t0,t1; t1,t2; t0,t2; b0,b1; b1,b2; b0,b2\n";
    return {"blowup.scx", o.str()};
}

inline Entry double_cover() {
    std::ostringstream o;
    o << "complex hexagon dim 1\n";
    for (int i = 0; i < 6; ++i) o << "top h" << i << ",h" << (i + 1) % 6 << "\n";
    o << "expect h 1 = 1\n";
    o << "\ncomplex triangle dim 1\ntop d0,d1\ntop d1,d2\ntop d0,d2\nexpect h 1 = 1\n";
    o << "\nmap cover from hexagon to triangle :";
    for (int i = 0; i < 6; ++i) o << " h" << i << "->d" << i % 3;
    o << "\ncompatible\n";
    o << "\ncycle loop in hexagon deg 1 : ";
    std::vector<std::string> es;
    for (int i = 0; i < 6; ++i) es.push_back("h" + std::to_string(i) + ",h" + std::to_string((i + 1) % 6));
    o << join(es, "; ") << "\n";
    return {"double_cover.scx", o.str()};
}

inline std::vector<Entry> all() {
    return {node(),   tacnode(), segment(),        quadrant(),    circle(),       torus(), rp2(),
            sphere(), pinched_sphere(), cone_circle(), suspended_torus(), blowup(), double_cover()};
}

// Canonical text: the generated documents pass through the parser and emitter.
inline std::vector<Entry> canonical() {
    std::vector<Entry> out;
    for (auto& e : all()) out.push_back({e.file, scx::emit_scx(scx::parse_scx(e.text))});
    return out;
}

}  // namespace rih::corpus
