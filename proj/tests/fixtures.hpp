#pragma once

#include <string>

#include "rih/chains.hpp"
#include "rih/corpus.hpp"
#include "rih/scx.hpp"

namespace fx {

inline rih::scx::Workspace load(const rih::corpus::Entry& e) { return rih::scx::load(rih::scx::parse_scx(e.text)); }

// A declared primal cycle, built from its vertex names.
inline rih::Chain cycle(const rih::scx::Workspace& ws, const std::string& name) {
    for (auto& c : ws.doc.cycles)
        if (c.name == name && !c.dual) {
            std::vector<std::vector<std::string>> simplices;
            for (auto& e : c.entries) simplices.push_back(e.front());
            return rih::Chain::of_names(ws.space(c.cx).x, simplices);
        }
    throw std::out_of_range("no cycle " + name);
}

}  // namespace fx
