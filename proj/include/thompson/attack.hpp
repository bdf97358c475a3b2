#ifndef THOMPSON_ATTACK_HPP
#define THOMPSON_ATTACK_HPP

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "thompson/kex.hpp"

namespace thompson {

// Length-based attack on Alice's token: bidirectional shortest-first search
// over the graph whose edges multiply by one generator of S_A^{±1} on the
// left or one of S_B^{±1} on the right. Recovering a path from w to
// w' = a_1 w b_1 yields words x_1 over S_A^{±1} and x_2 over S_B^{±1} with
// x_1 w x_2 = w'.

struct AttackBudget {
  /// Cap on vertices stored across both search sides (the dominant cost).
  std::uint64_t max_nodes = 1'000'000;
  double max_seconds = 3600.0;
};

enum class AttackOutcome { Success, BudgetExhausted };

const char* to_string(AttackOutcome outcome);

struct AttackReport {
  AttackOutcome outcome = AttackOutcome::BudgetExhausted;
  Word left_factor;   // product of S_A^{±1} two-letter blocks (on success)
  Word right_factor;  // product of S_B^{±1} letters (on success)
  std::uint64_t nodes_expanded = 0;
  std::uint64_t nodes_stored = 0;
  std::uint64_t expanded_from_source = 0;
  std::uint64_t expanded_from_target = 0;
  /// Unexpanded vertices per side after each expansion round.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> frontier_sizes;
  double wall_seconds = 0.0;
};

AttackReport length_attack(const NormalWord& w, const NormalWord& w_prime,
                           std::uint32_t s, const AttackBudget& budget);

/// Least-squares slope of log(total frontier) per round; exp(slope) estimates
/// the per-round growth factor.
double frontier_growth_exponent(const AttackReport& report);

struct SweepPoint {
  std::uint32_t s;
  std::uint64_t M;
};

struct SweepRow {
  std::uint32_t s;
  std::uint64_t M;
  std::uint32_t trial;
  AttackOutcome outcome;
  std::uint64_t nodes;
  double seconds;
  double growth_exponent;  // per-round frontier growth of this trial
};

/// Fresh keys per trial (seeds derived from base_seed, s, M, trial), one
/// attack per trial; trials may run on parallel threads without affecting
/// the rows.
std::vector<SweepRow> attack_sweep(std::span<const SweepPoint> grid,
                                   std::uint32_t trials,
                                   const AttackBudget& budget,
                                   std::uint64_t base_seed,
                                   unsigned parallel = 1);

std::string sweep_csv(std::span<const SweepRow> rows);

/// Per-grid-point aggregates of a sweep.
struct SweepSummary {
  std::uint32_t s = 0;
  std::uint64_t M = 0;
  std::uint32_t trials = 0;
  std::uint32_t successes = 0;
  std::uint64_t median_nodes_to_success = 0;  // 0 when nothing succeeded
  double mean_growth_exponent = 0.0;
};

std::vector<SweepSummary> summarize_sweep(std::span<const SweepRow> rows);
std::string summary_text(std::span<const SweepSummary> summaries);

}  // namespace thompson

#endif
