#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "committee_lab/rng.hpp"
#include "committee_lab/scores.hpp"

namespace committee_lab {

enum class RuleId { sntv, bloc, k_borda, cc, greedy_monroe, stv, fpp, district_borda };

inline constexpr std::array<RuleId, 8> all_rules = {
    RuleId::sntv, RuleId::bloc,          RuleId::k_borda, RuleId::cc,
    RuleId::stv,  RuleId::greedy_monroe, RuleId::fpp,     RuleId::district_borda,
};

std::string_view to_string(RuleId);
std::optional<RuleId> parse_rule(std::string_view);

enum class CcSolver { greedy, exact };

struct RuleSpec {
    RuleId id = RuleId::sntv;
    CcSolver cc_solver = CcSolver::greedy;  // only consulted for RuleId::cc

    // What the solver column reports: "exact" for rules computed exactly,
    // "greedy" for the approximations.
    std::string_view solver_label() const;
};

// Dispatch one rule invocation. Throws coded_error subclasses for the
// documented failure modes (quota exhaustion, solver budget, bad k).
Committee run_rule(const RuleSpec&, const PreferenceProfile&, int k, Rng&);

}  // namespace committee_lab
