#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "borel/monomial.hpp"

namespace borel {

// Ideal text format:
//
//   n=3
//   x1^2
//   x1*x2
//
// One generator per line, factors `x<i>` or `x<i>^<e>` joined by `*`.
// The literal `1` is the unit ideal; no generator lines is the zero ideal.
// Corpora concatenate ideals separated by lines holding `---`.

std::string format_monomial(const Monomial& m);
std::string format_ideal(const MonomialIdeal& ideal);
std::string format_corpus(const std::vector<MonomialIdeal>& ideals);

/// `line` is only used for error positions.
Monomial parse_monomial(std::string_view text, int n, int line = 1);
MonomialIdeal parse_ideal(std::string_view text);
std::vector<MonomialIdeal> parse_corpus(std::string_view text);

/// Comma-separated generators, e.g. "x1^2, x1*x2".
MonomialIdeal parse_inline_ideal(std::string_view text, int n);
std::vector<Monomial> parse_monomial_list(std::string_view text, int n);

}  // namespace borel
