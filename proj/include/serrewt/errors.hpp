#ifndef SERREWT_ERRORS_HPP_
#define SERREWT_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace swt {

/* Base class for all library errors. */
struct SwtError : std::runtime_error {
    explicit SwtError(const std::string &msg) : std::runtime_error(msg) {}
};

#define SWT_DEFINE_ERROR(NAME)                                          \
    struct NAME : SwtError {                                            \
        explicit NAME(const std::string &msg) : SwtError(#NAME ": " + msg) {} \
    }

// finite_field
SWT_DEFINE_ERROR(NotPrime);
SWT_DEFINE_ERROR(ReducibleModulus);
SWT_DEFINE_ERROR(ZeroInput);
SWT_DEFINE_ERROR(EvenCharacteristic);
SWT_DEFINE_ERROR(NotGenerator);

// padic
SWT_DEFINE_ERROR(PrecisionLoss);
SWT_DEFINE_ERROR(InexactDivision);
SWT_DEFINE_ERROR(IdentityFailed);
SWT_DEFINE_ERROR(ValuationTooSmall);

// local_field
SWT_DEFINE_ERROR(BadRamification);
SWT_DEFINE_ERROR(BadUnramifiedDegree);
SWT_DEFINE_ERROR(PrecisionExceeded);

// norm_group
SWT_DEFINE_ERROR(ZeroElement);

// cohomology
SWT_DEFINE_ERROR(TowerTooSmall);
SWT_DEFINE_ERROR(LevelMismatch);
SWT_DEFINE_ERROR(IndexMismatch);
SWT_DEFINE_ERROR(AmbiguousKernel);
SWT_DEFINE_ERROR(BasisMismatch);

// serre_combinatorics
SWT_DEFINE_ERROR(WeightNotInRecipe);
SWT_DEFINE_ERROR(ReducibleInput);

// hecke_match
SWT_DEFINE_ERROR(BadNorm);
SWT_DEFINE_ERROR(NoMatch);

// cli
SWT_DEFINE_ERROR(SchemaError);
SWT_DEFINE_ERROR(FixtureError);

#undef SWT_DEFINE_ERROR

} // namespace swt

#endif
