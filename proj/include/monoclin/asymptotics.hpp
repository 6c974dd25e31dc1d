#pragma once

#include "monoclin/rational.hpp"
#include "monoclin/sparams.hpp"

namespace monoclin {

/// One-parameter sequence whose skew angle tends to a right angle from the
/// obtuse side. Requires n >= 2 (n = 1 zeroes s1). obtuse_t(n) is the
/// cuboid-closeness measure and equals s3 - s4 of obtuse(n) exactly; it is
/// negative for all valid n.
SParams obtuse(const Integer& n);
Rational obtuse_t(const Integer& n);

/// Two-parameter sequence approaching the right angle from the acute side:
/// s1 = 1/d and n indexes the sequence for that d. Requires d >= 2, n >= 2.
/// acute_t(d, n) equals s3 - s4 exactly and is positive.
SParams acute(const Integer& d, const Integer& n);
Rational acute_t(const Integer& d, const Integer& n);

/// Leading prefactor 4d/((d-1)(d+1)) of the s1 = 1/d sequence, in lowest
/// terms. Requires d >= 2.
Rational acute_coefficient(const Integer& d);

}  // namespace monoclin
