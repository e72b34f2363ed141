#pragma once

#include <vector>

#include "lfactor/lfun.hpp"
#include "lfactor/registry.hpp"
#include "lfactor/segment.hpp"

namespace lfactor {

// Formal Weil-Deligne parameter phi = phi_1 + ... + phi_t, each summand standing for
// the segment attached to it under the correspondence (unramified case: GL_1 labels
// with Satake value tau^{-1}).
struct FormalParam {
    std::vector<Segment> summands;

    friend bool operator==(const FormalParam&, const FormalParam&) = default;
};

// Arithmetic-side assembly of L(s, ext^2(phi)) through the decomposition
// ext^2(sum phi_k) = sum_k ext^2(phi_k) + sum_{i<j} phi_i (x) phi_j, with the
// discrete-series blocks equated to the analytic segment factors. Direct sums
// commute, so no ordering is applied.
inline EulerFactor galois_ext(const Registry& reg, const FormalParam& phi) {
    std::vector<EulerFactor> parts;
    for (const Segment& d : phi.summands)
        parts.push_back(l_seg_ext(reg, d));
    for (std::size_t i = 0; i < phi.summands.size(); ++i)
        for (std::size_t j = i + 1; j < phi.summands.size(); ++j)
            parts.push_back(l_seg_rs(reg, phi.summands[i], phi.summands[j]));
    return ef_product(parts);
}

// L(s, ext^2(phi)) == L(s, pi(phi), ext^2): both assembly paths must canonicalize
// identically; a false return indicates a canonicalization bug.
inline bool langlands_agree(const Registry& reg, const FormalParam& phi) {
    return galois_ext(reg, phi) == l_rep_ext(reg, Representation{phi.summands});
}

} // namespace lfactor
