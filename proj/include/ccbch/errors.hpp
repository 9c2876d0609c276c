#ifndef CCBCH_ERRORS_HPP
#define CCBCH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ccbch {

enum class errc {
    not_prime,
    not_prime_power,
    capacity_exceeded,
    not_a_subfield,
    mixed_fields,
    divisor_zero,
    odd_m,
    m_too_small,
    out_of_range,
    delta_out_of_range,
    internal_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::not_prime: return "NotPrime";
        case errc::not_prime_power: return "NotPrimePower";
        case errc::capacity_exceeded: return "CapacityExceeded";
        case errc::not_a_subfield: return "NotASubfield";
        case errc::mixed_fields: return "MixedFields";
        case errc::divisor_zero: return "DivisorZero";
        case errc::odd_m: return "OddM";
        case errc::m_too_small: return "MTooSmall";
        case errc::out_of_range: return "OutOfRange";
        case errc::delta_out_of_range: return "DeltaOutOfRange";
        case errc::internal_error: return "InternalError";
    }
    return "Unknown";
}

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const { return code_; }
    const char* name() const { return errc_name(code_); }

  private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& what) { throw error(code, what); }

} // namespace ccbch

#endif
