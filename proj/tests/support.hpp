#pragma once

#include <random>
#include <string>

#include "pimenov/element.hpp"
#include "pimenov/expr_io.hpp"

namespace testing {

inline pimenov::Element E(const std::string& text, int n) { return pimenov::parse(text, n); }

inline pimenov::Scalar Q(long num, long den = 1) { return pimenov::Scalar(pimenov::Rational(num, den)); }

}  // namespace testing
