#pragma once

#include <cmath>
#include <compare>
#include <limits>
#include <stdexcept>

namespace petersburg {

// A nonnegative monetary amount stored as its natural logarithm.
//
// Payouts like exp(2^60) cannot be held in a double, so every quantity that
// can reach game-B/C magnitudes travels through this type. The exact zero
// amount is represented by log() == -infinity.
class LogAmount {
public:
    LogAmount() : log_(-inf()) {}

    static LogAmount zero() { return LogAmount(); }

    // amount must be >= 0; negative amounts are a domain error, never a NaN.
    static LogAmount from_amount(double amount) {
        if (std::isnan(amount) || amount < 0.0)
            throw std::domain_error("LogAmount: amount must be nonnegative");
        return LogAmount(amount == 0.0 ? -inf() : std::log(amount));
    }

    // log_value may be any real; -infinity denotes the zero amount.
    static LogAmount from_log(double log_value) {
        if (std::isnan(log_value))
            throw std::domain_error("LogAmount: log value must not be NaN");
        return LogAmount(log_value);
    }

    double log() const { return log_; }

    bool is_zero() const { return log_ == -inf(); }

    // exp(log); saturates to +infinity when the amount exceeds double range.
    double amount() const { return is_zero() ? 0.0 : std::exp(log_); }

    // Stable log-sum-exp; exact when one side is zero.
    friend LogAmount operator+(LogAmount a, LogAmount b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        const double hi = std::max(a.log_, b.log_);
        const double lo = std::min(a.log_, b.log_);
        return LogAmount(hi + std::log1p(std::exp(lo - hi)));
    }

    // a - b with b <= a required; b > a is a domain error.
    // When the log-values differ by more than kDropGap the smaller term is
    // dropped outright; the induced relative error is below e^-50.
    friend LogAmount operator-(LogAmount a, LogAmount b) {
        if (b.is_zero()) return a;
        if (b.log_ > a.log_)
            throw std::domain_error("LogAmount: subtraction would produce a negative amount");
        const double gap = a.log_ - b.log_;
        if (gap == 0.0) return zero();
        if (gap > kDropGap) return a;
        // log(e^a - e^b) = a + log(1 - e^-gap); switch formulas at ln 2 so the
        // argument of log/log1p stays well conditioned on both sides.
        const double rest = gap < kLn2 ? std::log(-std::expm1(-gap))
                                       : std::log1p(-std::exp(-gap));
        return LogAmount(a.log_ + rest);
    }

    LogAmount& operator+=(LogAmount rhs) { return *this = *this + rhs; }
    LogAmount& operator-=(LogAmount rhs) { return *this = *this - rhs; }

    friend auto operator<=>(LogAmount a, LogAmount b) { return a.log_ <=> b.log_; }
    friend bool operator==(LogAmount a, LogAmount b) { return a.log_ == b.log_; }

    static constexpr double kDropGap = 50.0;

private:
    explicit LogAmount(double log_value) : log_(log_value) {}

    static constexpr double inf() { return std::numeric_limits<double>::infinity(); }
    static constexpr double kLn2 = 0.6931471805599453;

    double log_;
};

}  // namespace petersburg
