#pragma once

#include <stdexcept>
#include <string>

namespace hypermoment {

/// Base class for all recoverable errors raised by the library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// A series that is neither convergent nor terminating was requested.
class DivergentSeries : public Error {
 public:
  explicit DivergentSeries(const std::string& what) : Error(what) {}
};

/// A parameter is outside the operation's domain (bad text form, vanishing
/// bottom Pochhammer factor, out-of-range index, ...).
class InvalidParameter : public Error {
 public:
  explicit InvalidParameter(const std::string& what) : Error(what) {}
};

/// The scalar prefactor lambda + c*tau vanishes at the requested point, so
/// the polynomial-vector route for the moments is undefined.
class SingularPrefactor : public Error {
 public:
  explicit SingularPrefactor(const std::string& what) : Error(what) {}
};

/// A Hankel determinant needed for orthogonal-polynomial construction could
/// not be bounded away from zero.
class SingularHankel : public Error {
 public:
  explicit SingularHankel(const std::string& what) : Error(what) {}
};

/// Fewer moments were supplied than the requested construction needs.
class InsufficientMoments : public Error {
 public:
  explicit InsufficientMoments(const std::string& what) : Error(what) {}
};

/// A named family was given parameters outside its stated domain.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error(what) {}
};

}  // namespace hypermoment
