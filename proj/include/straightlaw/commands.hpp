#pragma once

/// @file commands.hpp
/// @brief Subcommands of the straightlaw tool. Each returns the process
/// exit code: 0 verified, 1 usage, parse or bound error, 2 a mathematical
/// check failed.

#include <iosfwd>
#include <optional>
#include <string>

#include "straightlaw/relation_sweep.hpp"

namespace straightlaw::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitFailure = 2;

enum class Format { Json, Text };

struct Dims {
    std::optional<unsigned> m;
    std::optional<unsigned> n;
};

/// Normal form of the expression plus certificate.
int straighten(const std::string& expression, Dims dims, Format format, std::ostream& out, std::ostream& err);
/// Rechecks a certificate read from `in`.
int verify(std::istream& in, Format format, std::ostream& out, std::ostream& err);
/// Sweeps one family, or all of them when `family` is empty.
int relations(unsigned n, std::optional<RelationFamily> family, Format format, std::ostream& out, std::ostream& err);
int independence(unsigned m, unsigned n, unsigned max_factors, Format format, std::ostream& out, std::ostream& err);
/// Leading witness of every word of the expression under X = YZ.
int leading(const std::string& expression, Dims dims, Format format, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace straightlaw::cli
