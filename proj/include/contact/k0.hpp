#pragma once

#include <map>

#include "contact/bypass.hpp"
#include "contact/presented_category.hpp"
#include "contact/resolution.hpp"

namespace contact {

// K0 of the disk with 2n marked points: one generator per matching, one
// relation [g0] + [g1] + [g2] per essential bypass triangle. Terms carrying
// closed circles are zero objects and drop out. Graded by Euler number.
inline K0Result k0_disk(int n) {
    if (n < 1 || n > 8) throw InvalidInput("k0_disk needs 1 <= n <= 8");
    auto ms = enumerate_matchings(n);
    std::map<std::vector<Chord>, std::size_t> idx;
    std::vector<int> grading;
    for (auto& d : ms) {
        idx.emplace(d.pairs(), idx.size());
        grading.push_back(euler_number(d));
    }
    std::vector<BitVector> rel;
    for (auto& d : ms)
        for (auto& e : enumerate_equators(d)) {
            if (!e.essential()) continue;
            auto t = bypass_triangle(d, e);
            BitVector v(ms.size());
            for (auto* x : {&t.gamma0, &t.gamma1, &t.gamma2})
                if (!x->is_zero()) v.flip(idx.at(x->pairs()));
            if (v.any()) rel.push_back(v);
        }
    return k0(ms.size(), rel, grading);
}

}  // namespace contact
