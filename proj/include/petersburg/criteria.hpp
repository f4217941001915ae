#pragma once

#include <string>

#include "petersburg/games.hpp"
#include "petersburg/log_amount.hpp"

namespace petersburg {

// The four decision rules evaluated against each game:
//   I   expected net wealth change, <D> - P
//   II  time-average exponential growth rate,
//       sum_n 2^-n ln((W - P + D(n))/W)
//   III expected utility gain minus utility loss at purchase,
//       sum_n 2^-n ln((W + D(n))/W) - ln(W/(W - P))
//   IV  expected utility gain alone (criterion III without the cost term)
enum class CriterionId { I, II, III, IV };

std::string to_string(CriterionId id);
CriterionId criterion_from_string(const std::string& s);

enum class ValueTag { Finite, PositiveDivergent, NegativeDivergent, Undefined };
enum class Recommendation { Play, Indifferent, Reject };
enum class SeriesClass { Convergent, Divergent };

// RefundTicket: a truncated game returns the ticket price when no heads
// occurs within n_max tosses. ForfeitTicket: the truncated game keeps it.
// Either way the tail event disburses no winnings, so the criterion-III
// value is the partial gain sum minus the full cost term; the policy is
// carried through to output for provenance.
enum class TruncationPolicy { RefundTicket, ForfeitTicket };

std::string to_string(ValueTag tag);
std::string to_string(Recommendation rec);
std::string to_string(TruncationPolicy policy);
std::string to_string(SeriesClass cls);

struct EvalConfig {
    double tail_tolerance = 1e-12;   // target certified series tail
    int n_cap = 60;                  // enumeration cap on waiting times
    int divergence_probe_terms = 40; // terms sampled by the numeric probe
    double root_tolerance = 1e-12;   // absolute x-tolerance for bisection

    void validate() const;
};

// A criterion evaluation: either a finite value with a certified series
// truncation bound, or a certified divergence/undefinedness tag. Undefined
// means some positive-probability outcome requires the log of a nonpositive
// quantity. tail_bound certifies series truncation only; floating-point
// rounding (well below any configured tolerance here) is outside it.
struct CriterionValue {
    ValueTag tag = ValueTag::Undefined;
    double value = 0.0;       // meaningful only when tag == Finite
    double tail_bound = 0.0;  // certified |true - value|, only when Finite

    static CriterionValue finite(double v, double bound) { return {ValueTag::Finite, v, bound}; }
    static CriterionValue positive_divergent() { return {ValueTag::PositiveDivergent, 0.0, 0.0}; }
    static CriterionValue negative_divergent() { return {ValueTag::NegativeDivergent, 0.0, 0.0}; }
    static CriterionValue undefined() { return {ValueTag::Undefined, 0.0, 0.0}; }

    bool is_finite() const { return tag == ValueTag::Finite; }
};

// Dominance algebra for gain - cost. An undefined operand poisons the
// result; opposing divergences cannot be ranked and yield Undefined;
// otherwise a divergent side dominates any finite one.
CriterionValue subtract(CriterionValue gain, CriterionValue cost);

// Play iff positively divergent or finite above the indifference band;
// Reject iff negatively divergent, undefined, or finite below it. The band
// is 10x the configured tail tolerance.
Recommendation recommend(const CriterionValue& v, const EvalConfig& cfg = {});

// ln((W - P + D(n))/W), the per-outcome log growth factor. Evaluated in log
// domain for games B and C so that n up to 60 stays representable. Throws if
// the inside is nonpositive (ruin), which can only happen at n = 1.
double net_log_growth(GameId game, double wealth, double price, int n);

// Worst-case ruin predicate: W - P + D(1) <= 0. Criterion II is undefined
// and repeated play refuses exactly when this holds.
bool is_ruinous(GameId game, double wealth, double price);

// Least price at which the worst case ruins the player: W + D(1).
double ruin_threshold(GameId game, double wealth);

// sum_n 2^-n ln((W + D(n))/W): expected utility gain at a free ticket.
// Game A: Finite with a closed-form tail bound. Game B: every term is
// exactly 1, PositiveDivergent. Game C: terms approach 1, PositiveDivergent.
CriterionValue gain_term(GameId game, double wealth, const EvalConfig& cfg = {});

// ln(W/(W - P)): utility loss at purchase. Undefined for P >= W; exact
// closed form otherwise (tail_bound 0).
CriterionValue cost_term(double wealth, double price);

CriterionValue eval_criterion(CriterionId criterion, GameId game, double wealth, double price,
                              const EvalConfig& cfg = {});

// Criterion III for the game truncated at n_max tosses. For game B this is
// exactly n_max - ln(W/(W - P)). Undefined for P >= W; n_max must be in
// [1, n_cap].
CriterionValue truncated_criterion_iii(GameId game, double wealth, double price, int n_max,
                                       TruncationPolicy policy, const EvalConfig& cfg = {});

// Analytic per-game classification of sum_n 2^-n ln D(n), cross-checked by a
// numeric probe over cfg.divergence_probe_terms terms. A probe/tag mismatch
// signals a broken payout model and throws logic_error.
SeriesClass classify_divergence(GameId game, double wealth, const EvalConfig& cfg = {});

// Truncated expectation sum_{n<=n_terms} 2^-n D(n), in log domain. Criterion
// I diagnostics: doubling n_terms shows the linear growth of the divergent
// expectation (game A gains exactly 1/2 per term).
LogAmount truncated_expectation(GameId game, double wealth, int n_terms);

}  // namespace petersburg
