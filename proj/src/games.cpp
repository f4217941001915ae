#include "petersburg/games.hpp"

#include <cmath>
#include <stdexcept>

namespace petersburg {

std::string to_string(GameId game) {
    switch (game) {
        case GameId::A: return "A";
        case GameId::B: return "B";
        case GameId::C: return "C";
    }
    throw std::logic_error("unreachable game id");
}

GameId game_from_string(const std::string& s) {
    if (s == "A" || s == "a") return GameId::A;
    if (s == "B" || s == "b") return GameId::B;
    if (s == "C" || s == "c") return GameId::C;
    throw std::domain_error("game must be one of A, B, C");
}

void PlayerState::validate() const {
    if (!(wealth > 0.0)) throw std::domain_error("wealth must be positive");
    if (!(price >= 0.0)) throw std::domain_error("price must be nonnegative");
}

double waiting_prob(int n) {
    if (n < 1) throw std::domain_error("waiting time must be >= 1");
    return std::ldexp(1.0, -n);
}

LogAmount payout_log(GameId game, int n, double wealth) {
    if (n < 1) throw std::domain_error("waiting time must be >= 1");
    if (n > kMaxWaitingTime) throw std::domain_error("waiting time exceeds enumeration cap");
    switch (game) {
        case GameId::A:
            return LogAmount::from_log((n - 1) * 0.6931471805599453094);
        case GameId::B: {
            if (!(wealth > 0.0)) throw std::domain_error("wealth must be positive");
            const double t = std::ldexp(1.0, n);  // 2^n, exact
            // exp(-t) underflows to 0 for t > ~745; log1p then contributes
            // nothing, which is the documented drop of a term below e^-745.
            return LogAmount::from_log(std::log(wealth) + t + std::log1p(-std::exp(-t)));
        }
        case GameId::C:
            return LogAmount::from_log(std::ldexp(1.0, n));
    }
    throw std::logic_error("unreachable game id");
}

double worst_case_net(GameId game, double wealth, double price) {
    if (!(wealth > 0.0)) throw std::domain_error("wealth must be positive");
    switch (game) {
        case GameId::A: return wealth - price + 1.0;
        case GameId::B: return wealth * std::exp(2.0) - price;
        case GameId::C: return wealth - price + std::exp(2.0);
    }
    throw std::logic_error("unreachable game id");
}

double log_limit(double x, double q) {
    if (!(x > 0.0)) throw std::domain_error("log_limit requires x > 0");
    if (!(q > 0.0)) throw std::domain_error("log_limit requires q > 0");
    return q * std::expm1(std::log(x) / q);
}

}  // namespace petersburg
