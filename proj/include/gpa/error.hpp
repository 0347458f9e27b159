#pragma once

#include <stdexcept>
#include <string>

namespace gpa {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define GPA_DEFINE_ERROR(Name)                                                 \
    struct Name : Error {                                                      \
        using Error::Error;                                                    \
    }

// Cartan data validation
GPA_DEFINE_ERROR(NotGcm);
GPA_DEFINE_ERROR(NotSymmetrizer);
GPA_DEFINE_ERROR(BadOrientation);
GPA_DEFINE_ERROR(Disconnected);
GPA_DEFINE_ERROR(NotDynkin);
GPA_DEFINE_ERROR(NotFound);

// Weyl group generation
GPA_DEFINE_ERROR(NotFinite);

// Rewriting engine
GPA_DEFINE_ERROR(DegreeBoundExceeded);
GPA_DEFINE_ERROR(RelationViolation);

// Module calculus
GPA_DEFINE_ERROR(NotLocallyFree);
GPA_DEFINE_ERROR(CharacteristicUnsupported);

// Ideal calculus / lattice verification
GPA_DEFINE_ERROR(WordMismatch);
GPA_DEFINE_ERROR(FormulaMismatch);
GPA_DEFINE_ERROR(BijectionFailure);
GPA_DEFINE_ERROR(PairInvariantFailure);
GPA_DEFINE_ERROR(OrderMismatch);
GPA_DEFINE_ERROR(DualityFailure);

// I/O
GPA_DEFINE_ERROR(ConfigError);
GPA_DEFINE_ERROR(CacheError);

#undef GPA_DEFINE_ERROR

} // namespace gpa
