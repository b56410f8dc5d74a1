#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sombor/enumerate.hpp"
#include "sombor/extremal.hpp"

namespace sombor {

inline constexpr const char* kToolName = "sombor-cacti";
inline constexpr const char* kToolVersion = "1.0.0";

enum class CellStatus { Ok, Vacuous, Error };

// Outcome of checking one extremal claim at one parameter cell: the
// enumerated maximum against the closed-form bound, plus argmax identity and
// uniqueness. Argmax detection shortlists by float tolerance, then settles
// exact attainment by degree-pair multiset equality against the constructed
// extremal graph, then isomorphism by canonical form.
struct VerificationReport {
    std::string theorem;   // "max-cacti" or "max-pm-cacti"
    int n = 0;             // vertex count (2*beta in pm mode)
    int t = 0;
    std::optional<int> beta;
    CellStatus status = CellStatus::Ok;
    std::string error;     // set when status == Error
    bool informative = false; // cell below the claim's stated range (n < 5)
    int enumerated_count = 0;
    double max_value = 0.0;
    double bound_value = 0.0;
    std::vector<std::string> argmax; // canonical keys within tolerance of max
    bool matches_bound = false;
    bool bound_is_upper = false;     // no enumerated value exceeds bound + tol
    bool argmax_is_extremal = false;
    bool argmax_unique = false;
    double tolerance = 1e-9;
    double elapsed_seconds = 0.0; // reported on stderr, never in the JSON body

    bool pass() const;
};

VerificationReport verify_max_cacti(int n, int t, double tolerance = 1e-9);
VerificationReport verify_max_pm_cacti(int beta, int t, double tolerance = 1e-9);

// Shared-enumerator variants used by sweeps and the acceptance suite.
VerificationReport verify_max_cacti(CactusEnumerator& enumerator, int n, int t,
                                    double tolerance = 1e-9);
VerificationReport verify_max_pm_cacti(CactusEnumerator& enumerator, int beta,
                                       int t, double tolerance = 1e-9);

// One case of the minimum-degree / support-degree partition of the
// perfect-matching class.
struct PartitionCase {
    std::string name;
    int count = 0;
    bool bound_holds = true; // strict for the delta >= 2 case
    double min_gap = 0.0;    // min of phi - SO over members (0 when empty)
    std::vector<std::string> equality; // canonical keys attaining phi exactly
    bool equality_is_extremal = true;
};

// Partitions every G in the perfect-matching class C(2*beta, t) into three
// exhaustive, disjoint cases — delta(G) >= 2; delta = 1 with some degree-2
// support vertex; delta = 1 with all support degrees >= 3 — and checks that
// the first case sits strictly below Phi while the other two attain Phi only
// at H*(2*beta, t).
struct LemmaPartitionReport {
    int beta = 0;
    int t = 0;
    CellStatus status = CellStatus::Ok;
    std::string error;
    int enumerated_count = 0;
    double phi = 0.0;
    PartitionCase min_degree_ge2;
    PartitionCase degree2_support;
    PartitionCase supports_ge3;
    bool coverage_ok = true; // every enumerated graph fell in exactly one case
    double tolerance = 1e-9;
    double elapsed_seconds = 0.0;

    bool pass() const;
};

LemmaPartitionReport verify_lemma_partitions(int beta, int t,
                                             double tolerance = 1e-9);
LemmaPartitionReport verify_lemma_partitions(CactusEnumerator& enumerator,
                                             int beta, int t,
                                             double tolerance = 1e-9);

enum class SweepMode { Cacti, PmCacti };

struct SweepRequest {
    SweepMode mode = SweepMode::Cacti;
    int lo = 3;  // n range for cacti, beta range for pm-cacti
    int hi = 9;
    std::optional<std::pair<int, int>> t_range; // default: every feasible t
    double tolerance = 1e-9;
};

struct SweepReport {
    SweepRequest request;
    std::vector<VerificationReport> cells; // grid order
    bool all_pass = true;
    double elapsed_seconds = 0.0;
};

SweepReport run_sweep(const SweepRequest& request);

// One monotonicity scan plus the direction the source material states for it
// and the direction the suite expects to observe. The two differ for g, whose
// stated direction is contradicted by evaluation; the scan records the
// observation and the run does not fail because of the mismatch.
struct ScanCheck {
    ScanReport report;
    Direction stated = Direction::StrictlyIncreasing;
    Direction expected = Direction::StrictlyIncreasing;
    bool pass = false; // observed == expected
};

struct ConvexityCheck {
    ScanGrid grid;
    double h = 0.5;
    bool positive = false; // finite-difference f'' > 0 at every grid point
    double min_value = 0.0;
    std::optional<double> witness_x;
};

struct ScanSuiteReport {
    std::vector<ScanCheck> scans;
    ConvexityCheck f_convexity;
    bool all_pass = false;
    double elapsed_seconds = 0.0;
};

// The standard scan grids: f1 over d in 2..10, r in 1..d, x in [0.5, 50];
// f2 over r in 0..5, x in [r, 50]; f3 and g over [2, 50]; all step 0.5;
// plus the convexity check on f.
ScanSuiteReport run_lemma_scans();

struct PartitionSuiteReport {
    std::vector<LemmaPartitionReport> cells;
    bool all_pass = true;
    double elapsed_seconds = 0.0;
};

PartitionSuiteReport run_lemma_partitions(int beta_lo, int beta_hi,
                                          std::optional<std::pair<int, int>> t_range,
                                          double tolerance = 1e-9);

struct LemmaSuiteReport {
    ScanSuiteReport scans;
    PartitionSuiteReport partitions;
    bool all_pass = true;
};

// Serialization. JSON bodies are deterministic: numbers are emitted as
// 12-significant-digit decimal strings and elapsed times are excluded.
std::string to_json(const VerificationReport& report);
std::string to_json(const SweepReport& report);
std::string to_json(const LemmaSuiteReport& report);
std::string to_table(const VerificationReport& report);
std::string to_table(const SweepReport& report);
std::string to_table(const LemmaSuiteReport& report);

const char* cell_status_name(CellStatus status);

} // namespace sombor
