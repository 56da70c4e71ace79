#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "f5c/polynomial.hpp"
#include "f5c/stats.hpp"

namespace f5c {

inline constexpr std::uint32_t kDefaultCharacteristic = 32003;

struct ParsedSystem {
  Ring ring;
  std::vector<Polynomial> polys;
};

/// Parses the line-oriented system format:
///
///     ring: x,y,z,t
///     char: 32003
///     order: grevlex
///     polys:
///     x*z^2 - y^2*t
///
/// `#` starts a comment. `char` and `order` are optional (32003, grevlex);
/// `char_override`, when set, replaces the declared characteristic.
/// Throws ParseError with the 1-based line and column of the problem.
ParsedSystem parse_system(std::string_view text,
                          std::optional<std::uint32_t> char_override = std::nullopt);

/// Parses one polynomial over `ring`; `line` is only used in error messages.
Polynomial parse_polynomial(std::string_view text, const Ring& ring, std::size_t line = 1);

/// Terms in descending order, e.g. "x*z^2 - y^2*t". Coefficients use the
/// symmetric representative.
std::string render(const Polynomial& p, const Ring& ring);

/// Stats in the JSON export format. Pretty-printed, deterministic.
std::string stats_json(const RunStats& stats, const Ring& ring, bool agrees_with_oracle);

}  // namespace f5c
