#pragma once

#include <optional>
#include <vector>

#include "hulltop/hull.hpp"
#include "hulltop/monoid.hpp"
#include "hulltop/pseudonorm.hpp"
#include "hulltop/zerofilter.hpp"

namespace hulltop {

// Dyadic level set of a string: for a positive dyadic q with denominator
// dividing 2^N write q = k_0 + sum k_i 2^{-i} with binary digits k_i; the
// level set is k_0 U_0 + sum_{k_i = 1} U_i, taken over the tail-extended
// string, and then saturated by adding the tail T once more. The
// T-saturation makes the finite grid computation exact: every digit beyond
// the prefix contributes T, and T + T = T absorbs them all.
Subset dyadic_level_set(const QString& s, const Dyadic& q, unsigned grid_exp);

// Pseudo-norm of an additive-hull string:
//   rho(e) = 0 on the tail, else the least grid value q <= 1 whose level set
//   contains e, else 1.
// This equals the exact infimum over all positive dyadics, clipped at 1.
// Construction verifies, exhaustively: subadditivity, lower H-continuity,
// the sandwich rho^{-1}[0,2^-n) <= U_n <= rho^{-1}[0,2^-n] at every level,
// and ker rho = T. A failed verification is a falsification, not an error.
PseudoNorm synth_additive(const MonoidPtr& m, const HullStructure& h, const QString& s,
                          unsigned grid_exp = 0);

// Pseudo-norm of a translation-invariant-hull string: the powerset
// pseudo-norm of the same string, lower-regularized against H. Verifies the
// same postconditions as the additive case plus theta <= rho.
PseudoNorm synth_translation(const MonoidPtr& m, const HullPtr& h, const QString& s,
                             unsigned grid_exp = 0);

// Upper regularization of a pseudo-norm against a basic hull structure
// (1-algebraic, additive, with {0} a member). The result is again a
// pseudo-norm, verified exhaustively, and is lower R-continuous.
PseudoNorm regularize_pnorm(const MonoidPtr& m, const HullPtr& r, const PseudoNorm& rho);

// Full pipeline: refine a Q-string out of the filter subordinate to W,
// synthesize along Q (additive or translation-invariant path, decided by
// the certificates), then regularize against basic R. The result is lower
// continuous against the intersection of Q and R, its open balls
// rho^{-1}[0,2^-n) sit inside W_n, and every closed ball down to the grid
// step is a filter member.
PseudoNorm synth_QR(const ZeroFilter& f, const HullPtr& q, const HullPtr& r,
                    const std::vector<Subset>& w, unsigned grid_exp = 0);

// rho_S(g) = max(rho(g), rho(-g)).
PseudoNorm symmetrize(const MonoidPtr& m, const PseudoNorm& rho);

// max_n of (rho_n clipped at 1) / 2^n, n = 1..k. Each input is continuous
// with respect to the result.
PseudoNorm combine(const std::vector<PseudoNorm>& list);

struct RhoContinuity {
    bool holds = false;
    Dyadic delta; // a witnessing delta when holds
    explicit operator bool() const { return holds; }
};

// lambda is rho-continuous iff ker rho is contained in ker lambda; on a
// finite carrier this is equivalent to the epsilon-delta formulation, with
// delta = the least positive value of rho.
RhoContinuity is_rho_continuous(const PseudoNorm& lambda, const PseudoNorm& rho);

// Filter with base rho^{-1}[0, 2^-n], n = 0..N. The depth is extended
// automatically until the smallest ball equals the kernel, so the halving
// invariant always holds. Requires rho symmetric on groups.
ZeroFilter induced_filter(const PseudoNorm& rho, unsigned depth);

struct GeneratedFamily {
    std::vector<PseudoNorm> family;       // one per base member of the filter
    std::optional<PseudoNorm> combined;   // single generating pseudo-norm
};

// One symmetric pseudo-norm per base member (via the pipeline against the
// intersection of R with the symmetric sets), verified to regenerate the
// filter both as a family and combined into a single pseudo-norm.
GeneratedFamily generate_family(const ZeroFilter& f, const HullPtr& q, const HullPtr& r);

// Builds the target sequence W_n = f^{-1}[0, 2^-n) from a function vanishing
// at zero and continuous there (every such sublevel is a filter member), and
// runs the pipeline. The result dominates f: ker rho <= ker f.
PseudoNorm continuity_transfer(const GradedFunction& f, const ZeroFilter& filter, const HullPtr& q,
                               const HullPtr& r);

} // namespace hulltop
