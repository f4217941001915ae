#pragma once

#include <string>

#include "petersburg/log_amount.hpp"

namespace petersburg {

// The three St. Petersburg-type games, identified by their payout functions:
//   A: D(n) = 2^(n-1)
//   B: D(n) = W * exp(2^n) - W   (the only wealth-coupled game)
//   C: D(n) = exp(2^n)
enum class GameId { A, B, C };

std::string to_string(GameId game);
GameId game_from_string(const std::string& s);

// Index of the first heads in a run of fair coin tosses; support {1, 2, ...},
// P(n) = 2^-n. Enumerations cap at kMaxWaitingTime; the mass beyond the cap
// (2^-60 ~ 8.7e-19) is accounted for, never silently folded in.
inline constexpr int kMaxWaitingTime = 60;

struct WaitingTime {
    int value = 1;
};

struct PlayerState {
    double wealth = 1.0;  // W > 0
    double price = 0.0;   // P >= 0

    void validate() const;
};

// P(first heads on toss n) = 2^-n, exact dyadic value.
double waiting_prob(int n);

// log D(n) per the game's payout function. W is used only by game B and must
// be positive there. Closed forms in log domain:
//   log D_A = (n-1) ln 2
//   log D_B = ln W + 2^n + log1p(-exp(-2^n))
//   log D_C = 2^n
LogAmount payout_log(GameId game, int n, double wealth = 1.0);

// Worst-case final wealth W - P + D(1). For game B this is W e^2 - P: the
// minimum payout already exceeds the player's whole wealth by a wide margin.
double worst_case_net(GameId game, double wealth, double price);

// q (x^(1/q) - 1); converges to ln x from above as q grows. Evaluated as
// q * expm1(ln(x)/q), which keeps the error monotone in q instead of drowning
// it in cancellation noise.
double log_limit(double x, double q);

}  // namespace petersburg
