#pragma once

#include <vector>

#include "hypermoment/rational.hpp"

namespace hypermoment {

/// Stirling number of the second kind {n, k}: the number of ways to
/// partition an n-set into k nonempty blocks. {0,0} = 1 and {n,k} = 0 for
/// k > n. Values are memoized in a triangular table shared process-wide;
/// the cache is guarded for concurrent callers.
Rational stirling2(unsigned n, unsigned k);

/// Rising factorial (a)_n = a (a+1) ... (a+n-1), with (a)_0 = 1.
Rational pochhammer(const Rational& a, unsigned n);

/// Product of (a_i)_n over a parameter vector.
Rational pochhammer_all(const std::vector<Rational>& as, unsigned n);

/// Elementary symmetric polynomial e_k of the given values (e_0 = 1).
/// Throws InvalidParameter unless 0 <= k <= values.size().
Rational elementary_symmetric(unsigned k, const std::vector<Rational>& values);

Integer binomial(unsigned n, unsigned k);
Integer factorial(unsigned n);

}  // namespace hypermoment
