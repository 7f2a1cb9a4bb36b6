#pragma once

/**
 * @file scenario.hpp
 * @brief Built-in fibrations with frozen expected values, used as golden
 *        regression data and exposed through the CLI.
 *
 * Two scenarios ship with the library:
 *
 *   lefschetz-quartic   genus-3 pencil of plane quartics blown up in its
 *                       16 base points; 27 nodal fibers, 60 smooth fibers
 *                       with a hyperflex
 *   genus2-bielliptic   genus-2 double cover of a quadric branched over a
 *                       general curve of bidegree (N, 6); 10N nodal fibers
 *                       and 15N smooth fibers meeting the bielliptic locus
 */

#include "locsig/fibration.hpp"
#include "locsig/picard.hpp"
#include "locsig/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace locsig {

struct NamedRep {
    std::string name;
    DivisorRep rep;
};

/**
 * Expected-value keys understood by run_scenario():
 *   "chi_f", "e_f", "K_f_sq", "Sign"
 *   "degree(REP)"        divisor degree of the named representative
 *   "lambda(REP,GERM)"   local lambda of GERM under REP
 *   "sigma(REP,GERM)"    local signature of GERM under REP
 *
 * germ_table may contain germ types that occur with multiplicity zero in
 * the fibration; their local values are still regression-checked.
 */
struct Scenario {
    std::string name;
    Fibration fibration;
    std::vector<NamedRep> reps;
    std::map<std::string, FiberGerm> germ_table;
    std::map<std::string, Rational> expected;
    std::vector<std::string> notes;
};

struct DoubleCoverInvariants {
    long long chi_O = 0;
    long long euler_top = 0;
    long long canonical_sq = 0;
    long long fiber_genus = 0;
};

/// Invariants of the double cover of P1 x P1 branched over a smooth
/// general member of bidegree (m, n), fibered via the first projection.
/// Both degrees must be even and positive.
DoubleCoverInvariants double_cover_invariants(long long m, long long n);

Scenario lefschetz_quartic_pencil();

/// Requires even N > 0.
Scenario genus2_bielliptic_scenario(long long N);

std::vector<std::string> scenario_names();

struct ScenarioCheckRow {
    std::string key;
    Rational expected;
    Rational computed;
    bool match = false;
};

struct ScenarioRunResult {
    std::vector<ScenarioCheckRow> rows;
    std::vector<std::pair<std::string, LocalizationReport>> reports;
    bool all_match = false;   // every expected value reproduced exactly
    bool all_pass = false;    // every localization identity holds
};

/// Recomputes every expected value from the scenario data and runs
/// verify_localization for every representative.
ScenarioRunResult run_scenario(const Scenario& scenario);

} // namespace locsig
