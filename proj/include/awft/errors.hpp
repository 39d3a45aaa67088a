#ifndef AWFT_ERRORS_HPP
#define AWFT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace awft {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}

    /// Stable machine-readable error name (used by the CLI's structured errors).
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

#define AWFT_DEFINE_ERROR(Name)                                                       \
    class Name : public Error {                                                       \
    public:                                                                           \
        explicit Name(const std::string& what) : Error(#Name, what) {}                \
    }

AWFT_DEFINE_ERROR(InvalidParameters);
AWFT_DEFINE_ERROR(NonConvergent);
AWFT_DEFINE_ERROR(PoleInLowerParams);
AWFT_DEFINE_ERROR(PoleInParams);
AWFT_DEFINE_ERROR(PoleAtX);
AWFT_DEFINE_ERROR(PoleAtGamma);
AWFT_DEFINE_ERROR(NearZeroTheta);
AWFT_DEFINE_ERROR(RepresentationUnavailable);
AWFT_DEFINE_ERROR(NegativeRadicand);
AWFT_DEFINE_ERROR(NotInSupport);
AWFT_DEFINE_ERROR(TruncationNotConverged);
AWFT_DEFINE_ERROR(DualTruncationNotConverged);
AWFT_DEFINE_ERROR(DegenerateSpectralPair);

#undef AWFT_DEFINE_ERROR

}  // namespace awft

#endif  // AWFT_ERRORS_HPP
