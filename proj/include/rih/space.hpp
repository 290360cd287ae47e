#pragma once

#include <utility>

#include "rih/chains.hpp"
#include "rih/scomplex.hpp"
#include "rih/strat.hpp"

namespace rih {

// A complex together with its filtration and sheet pairing; strata cached.
struct Space {
    SimplicialComplex x;
    Filtration f;
    SheetPairing pairing;
    Stratification s;

    static Space make(SimplicialComplex x, Filtration f, SheetPairing pairing = {}) {
        Space sp{std::move(x), std::move(f), std::move(pairing), {}};
        sp.s = strata(sp.x, sp.f);
        return sp;
    }
    static Space plain(SimplicialComplex x) {
        Filtration f = Filtration::trivial(x);
        return make(std::move(x), std::move(f));
    }

    int n() const { return f.n(); }
    int codim(CellRef c) const { return s.codim(c); }
};

}  // namespace rih
