#pragma once

#include <vector>

#include "hecke/forms.hpp"
#include "hecke/moebius.hpp"

namespace hecke {

struct ReductionResult {
    long level = 1;
    std::vector<ProjForm> preperiod; // F_0 .. F_m; only F_m is reduced
    std::vector<ProjForm> period;    // F_{m+1} .. F_{m+p}, pairwise distinct, all reduced
    ProjMatrix conjugator;           // h_m with F_m = h_m^{-1}.F_0
    std::vector<long> period_word;   // a_p = g_{k_1}^{-1} ... g_{k_p}^{-1}
    ProjMatrix hyperbolic_element;   // h_m a_p^level h_m^{-1} = psi2(F_0)
};

/// Index k with g_k^{-1}.0 < x < g_k^{-1}.inf. Boundary hits and x <= 0 are
/// domain errors; they cannot occur for zeros of Gamma-forms.
long interval_of(const Surd& x, const Generators& gen);
long interval_of(const Surd& x, const ContextPtr& ctx);

/// Gauss-style reduction: walks F through the g_k action until reduced,
/// then around the cycle of reduced forms until the zero pair repeats,
/// and finally determines the level. Requires a valid Gamma-form.
ReductionResult reduce(const ProjForm& F);

/// True iff the reduction cycle is rotation-invariant: reducing from any
/// form of the period yields the same cyclic sequence.
bool reduced_cycle_rotation_check(const ProjForm& F);

} // namespace hecke
