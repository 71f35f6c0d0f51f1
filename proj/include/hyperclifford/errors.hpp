#pragma once

#include <stdexcept>
#include <string>

namespace hyperclifford {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The element lies on (or numerically next to) the null cone and has no inverse.
class ZeroDivisor : public Error {
public:
    using Error::Error;
};

class SingularMatrix : public Error {
public:
    using Error::Error;
};

class IndexOutOfRange : public Error {
public:
    using Error::Error;
};

class DimensionMismatch : public Error {
public:
    using Error::Error;
};

class RepresentationMismatch : public Error {
public:
    using Error::Error;
};

class SpaceMismatch : public Error {
public:
    using Error::Error;
};

/// Blade matrices of a representation are not pairwise orthogonal under the real trace pairing.
class NonOrthogonalBasis : public Error {
public:
    using Error::Error;
};

/// A matrix does not lie in the real span of the algebra (or paravector space) it was decomposed against.
class OutsideSpan : public Error {
public:
    using Error::Error;
};

class ResultOutsideParavectorSpan : public OutsideSpan {
public:
    using OutsideSpan::OutsideSpan;
};

class SeriesNonConvergence : public Error {
public:
    using Error::Error;
};

/// g ḡ = 1 or ĝ⁻¹ = g† failed beyond tolerance.
class NotASpinElement : public Error {
public:
    using Error::Error;
};

class DomainError : public Error {
public:
    using Error::Error;
};

class DegenerateAmplitude : public Error {
public:
    using Error::Error;
};

} // namespace hyperclifford
