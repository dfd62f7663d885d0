#pragma once

#include <string>
#include <vector>

#include "hecke/moebius.hpp"
#include "hecke/ring.hpp"

namespace hecke {

/// Letter of the certificate alphabet {S, T, T^-1, g_k^-1}.
struct WordToken {
    enum class Kind { S, T, TInv, GInv };
    Kind kind = Kind::S;
    long k = 0; // generator index, only for GInv

    std::string str() const;
    static WordToken parse(const std::string& text);

    friend bool operator==(const WordToken& a, const WordToken& b) {
        return a.kind == b.kind && (a.kind != Kind::GInv || a.k == b.k);
    }
};

struct DecisionResult {
    bool member = false;
    std::vector<WordToken> word; // empty unless member; product reproduces the input
    long iterations = 0;         // main loop passes
    long bound = 0;              // ceil(Sigma(h_2) / lambda)
};

/// Index k with x in the half-open interval [g_k^{-1}.0, g_k^{-1}.inf).
/// Throws DomainError when no interval contains x (negative or infinite x).
long bd_interval_of(const ProjPoint& x, const Generators& gen);
long bd_interval_of(const ProjPoint& x, const ContextPtr& ctx);

/// Membership of g in the Hecke triangle group Gamma_q, with a generator
/// word certificate for positive answers. The loop is bounded by
/// ceil(Sigma(h_2)/lambda) + q; exceeding that raises DiagnosticError.
DecisionResult decide(const ProjMatrix& g);

/// Product of the tokens' matrices; verifies every positive decision.
ProjMatrix word_multiply(const std::vector<WordToken>& word, const ContextPtr& ctx);

} // namespace hecke
