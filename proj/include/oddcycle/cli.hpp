#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "oddcycle/optimizer.hpp"

namespace oddcycle {

enum class RoundMode { Ceil, Floor, Nearest };

RoundMode parse_round_mode(const std::string& s);

/// Exact value of a decimal literal such as "0.47" or "1e-2"; throws ArgumentError.
Rational parse_decimal(const std::string& text);

/// Bias from a fraction of n, rounded exactly (nearest rounds halves up).
int resolve_bias(int n, const std::string& fraction, RoundMode mode);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;  // invariant violation, digest or fixture mismatch
inline constexpr int kExitUsage = 2;    // bad arguments, unreadable input, capacity guard

/// Runs the command line tool; args[0] is the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace oddcycle
