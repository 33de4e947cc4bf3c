#pragma once

#include <cmath>
#include <limits>
#include <numbers>
#include <string_view>

namespace irs {

/// A probability (or density) carried as its natural logarithm.
///
/// Tail probabilities in this library routinely fall below 1e-300, and the
/// prefactors of the asymptotic formulas overflow long before that, so every
/// estimator works on `log_value` and converts only at output boundaries.
struct LogProb {
    double log_value = -std::numeric_limits<double>::infinity();

    static LogProb from_linear(double p) { return LogProb{std::log(p)}; }
    static LogProb one() { return LogProb{0.0}; }
    static LogProb zero() { return LogProb{}; }

    double linear() const { return std::exp(log_value); }
    double log10() const { return log_value / std::numbers::ln10; }

    friend bool operator==(const LogProb&, const LogProb&) = default;
};

enum class Method { Chernoff, Saddlepoint, SaddlepointLeading, Clt, MonteCarlo };

std::string_view method_name(Method m);

/// A log-domain tail probability tagged with the method that produced it.
/// `valid` is false when the method is applied outside its regime (for the
/// asymptotic formulas, s >= 2N/e).
struct TailValue {
    LogProb value;
    Method method = Method::Saddlepoint;
    bool valid = true;
};

}  // namespace irs
