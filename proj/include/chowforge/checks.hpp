#pragma once

// Identity checks over parameter grids, run by `chowforge verify` and the
// acceptance suite.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chowforge/catalog.hpp"

namespace chowforge {

enum class Verdict { Pass, Fail, Skipped };

const char* verdict_name(Verdict v);

struct CheckOutcome {
    bool pass = false;
    std::string witness;  // required on failure
};

struct CheckReport {
    std::string check_id;
    Params params;
    Verdict verdict = Verdict::Skipped;
    std::string witness;
    long elapsed_ms = 0;
};

struct CheckTask {
    std::string check_id;
    Params params;
    std::function<CheckOutcome()> run;
};

// Individual checks.
CheckOutcome check_rh_even_derivation(const Params& p);
CheckOutcome check_wrh_odd_derivation(const Params& p);
/// Per-degree quotient invariants agree between the closed-form presentation
/// and the derived one, degrees 0..deg_max.
CheckOutcome check_graded_agreement(const Params& p, long deg_max);
CheckOutcome check_superfluity(long j);
CheckOutcome check_m2_reduction(const Params& p);
CheckOutcome check_m2_nonredundant(const Params& p);
/// The excised-pair ideal equals the ideal of the seven pushforward classes.
CheckOutcome check_envelope_equality(const Params& p);
/// Rows 2 and 4 of the excised-pair presentation equal F_{1*}(xi_1), G_{1*}(xi_1).
CheckOutcome check_squaring_coefficients(const Params& p);
/// (2 xi1 - c1)^2 + (4 c2 - c1^2) = 4 (xi1^2 - c1 xi1 + c2).
CheckOutcome check_tau_pullback();
/// Chern classes of the twisted dual bundle with roots -t1 - t, -t2 - t.
CheckOutcome check_chern_twist();
/// Degree-1 piece of the rigidified ring at g=2, n=1 is (Z/2)^2.
CheckOutcome check_graded_base_case();
/// The two square-root extension of a user-supplied ideal (g odd, n even)
/// contains the original relations and 2*t2a - xi2a, 2*t2b - xi2b.
CheckOutcome check_external_root_gerbe(const Params& p, const Presentation& external);

enum class Suite { All, Derivations, Superfluity, M2Generator, Identities };

Suite parse_suite(const std::string& name);

/// All checks of a suite over the valid grid: even g in [2, g_max] with
/// 1 <= n <= g/2, odd g in [3, g_max] with odd n <= (g-1)/2, and a, b in
/// [1, ab_max].
std::vector<CheckTask> build_suite(Suite suite, long g_max, long ab_max);

/// Checks on a user-supplied ideal; the root-gerbe check needs (g, n).
std::vector<CheckTask> external_checks(const Presentation& external, std::optional<Params> p);

/// Runs tasks on `jobs` workers; the result is sorted by check id, then params.
std::vector<CheckReport> run_checks(const std::vector<CheckTask>& tasks, unsigned jobs);

/// One NDJSON record: {check_id, params:{g,n,a,b}, verdict, witness, elapsed_ms}.
std::string report_json(const CheckReport& r);
std::string report_text(const CheckReport& r);
std::string params_text(const Params& p);

}  // namespace chowforge
