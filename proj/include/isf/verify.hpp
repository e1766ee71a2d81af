#pragma once

#include "isf/forest.hpp"
#include "isf/json_io.hpp"
#include "isf/oracle.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace isf {

/// Result of one exhaustive check. Failures are counted in full but at most
/// three are rendered with both sides as JSON.
struct VerificationReport {
    std::string name;
    int max_n = 0;
    long cases = 0;
    long failure_count = 0;
    std::vector<json> failures;  // first three, fully rendered
    std::string comparison;      // basis/representation used for equality
    json notes;                  // neutral observations (never affect pass/fail)
    double elapsed_seconds = 0.0;

    bool passed() const { return failure_count == 0; }
    void record_failure(json failure);
    json to_json() const;
};

/// Seed for the single-mutation fault injector: perturbs one coefficient in
/// one deterministic pseudo-randomly chosen case, to prove the check can fail.
using FaultSeed = std::optional<std::uint64_t>;

/// omega(csf_q(G)) equals the weighted forest sum in the rho basis, for every
/// Hessenberg function with n <= max_n; compared in MonomialSym.
VerificationReport verify_forest_csf(int max_n, FaultSeed fault = {});

/// LLT(G) equals the forest sum with y = (q-1)^{n-1} e_n; every c_lambda in
/// N[q]; the q -> q+1 shift of every e-coefficient non-negative.
VerificationReport verify_forest_llt(int max_n, FaultSeed fault = {});

enum class ModularTarget { XRho, XQe, Csf, Llt };
ModularTarget modular_target_from_string(const std::string& s);

/// (1+q) f(m1) = q f(m0) + f(m2) on every generated triple.
VerificationReport verify_modular(int max_n, ModularTarget target);

/// LLT(G)[(q-1)X] / (q-1)^n = csf_q(G), divisions exact.
VerificationReport verify_plethystic(int max_n);

/// Orientation sum equals X_qe at q -> q+1.
VerificationReport verify_orientations(int max_n, FaultSeed fault = {});

/// Vertical strips: oracle vs X_qe(m,S), recursion vs inclusion-exclusion,
/// the forest-level (q-1)^k formula, shifted positivity, and a neutral tally
/// of whether c_lambda(m,S) happens to lie in N[q].
VerificationReport verify_vertical(int max_n);

/// e-coefficients of csf_q from the c's through domino weights, plus the
/// closed special cases for one-row, two-row and distinct-part shapes.
VerificationReport verify_remark_coeffs(int max_n);

/// The three rho_n expansion routes agree and match the frozen small cases.
VerificationReport verify_rho_expansions(int max_n);

/// The five h/rho identities, including both determinant forms (capped at
/// det_max_n) and the domino-tabloid expansion; also the q=1 / q=0
/// specializations of rho and the cycle-count form of n! h_n.
VerificationReport verify_identities(int max_n, int det_max_n);

/// Complete graphs: recursion = closed form = enumeration; X_rho(K_n) in h
/// equals n!_q h_n; the LLT(K_n) recurrence (monomial-expanded) up to
/// llt_max_n.
VerificationReport verify_complete_graphs(int max_n, int llt_max_n);

/// sum_{l(lambda)=k} c_lambda(K_n) = s_q(n,k).
VerificationReport verify_stirling(int max_n);

/// sum q^{wt} = prod (1 + [m(i)-i]_q) for every m.
VerificationReport verify_weights_product(int max_n);

/// forest_from_permutation is a weight- and partition-preserving bijection.
VerificationReport verify_bijection(int max_n);

/// q=1: the signed p-sum over increasing forests equals csf for every graph
/// whose natural order is a PEO, and its epsilon image matches chromatic
/// counts.
VerificationReport verify_peo_chromatic(int max_n);

}  // namespace isf
