#pragma once

#include <gmpxx.h>

#include <vector>

#include "hecke/forms.hpp"

namespace hecke {

struct EnumeratedForm {
    ProjForm form;
    std::vector<long> word; // psi2(form) = g_{k_1}^{-1} ... g_{k_n}^{-1}
    RingInt discriminant;
};

struct EnumerationReport {
    mpq_class dmax;
    long word_length_cap = 0; // n_0
    std::vector<EnumeratedForm> forms; // sorted by word length, then lexicographic
    unsigned long long explored = 0;   // search nodes constructed
};

/// All reduced Gamma_q-forms with discriminant <= dmax, found by depth-first
/// search over generator words with exact per-prefix trace pruning. The word
/// length never exceeds the finiteness cap
///   n_0 = ceil(2 sqrt(dmax+4)/lambda + sqrt(dmax+4)/delta),
/// delta = 2(lambda - 1), the second term omitted for q = 3 where no interior
/// generator indices exist. dmax <= 0 yields an empty report.
EnumerationReport enumerate_reduced(const mpq_class& dmax, const ContextPtr& ctx,
                                    int threads = 1);

/// Same search with an explicit word-length cap (cap stability checks).
EnumerationReport enumerate_reduced_capped(const mpq_class& dmax, const ContextPtr& ctx,
                                           long cap, int threads = 1);

/// The finiteness cap n_0 used by enumerate_reduced.
long enumeration_word_cap(const mpq_class& dmax, const ContextPtr& ctx);

/// True iff the report is closed under the reduction cycle: for every listed
/// form, every form of its reduce() period is again listed.
bool cross_check_cycles(const EnumerationReport& report);

} // namespace hecke
