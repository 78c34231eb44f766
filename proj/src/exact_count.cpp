#include "pinnacle/exact_count.hpp"

#include <stdexcept>

namespace pinnacle {

ExactCount pow2(unsigned long exponent) {
    ExactCount r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
    return r;
}

ExactCount scale_pow2(const ExactCount& value, long exponent) {
    ExactCount r;
    if (exponent >= 0) {
        mpz_mul_2exp(r.get_mpz_t(), value.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
        return r;
    }
    const auto shift = static_cast<mp_bitcnt_t>(-exponent);
    if (value != 0 && mpz_scan1(value.get_mpz_t(), 0) < shift)
        throw std::logic_error("scale_pow2: value is not divisible by 2^" + std::to_string(-exponent));
    mpz_tdiv_q_2exp(r.get_mpz_t(), value.get_mpz_t(), shift);
    return r;
}

ExactCount exact_divide(const ExactCount& value, const ExactCount& divisor) {
    if (divisor == 0 || !mpz_divisible_p(value.get_mpz_t(), divisor.get_mpz_t()))
        throw std::logic_error("exact_divide: " + value.get_str() + " / " + divisor.get_str() + " is not exact");
    ExactCount r;
    mpz_divexact(r.get_mpz_t(), value.get_mpz_t(), divisor.get_mpz_t());
    return r;
}

ExactCount factorial(unsigned long n) {
    ExactCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

std::string to_decimal(const ExactCount& value) { return value.get_str(10); }

ExactCount from_decimal(std::string_view text) {
    std::string_view digits = text;
    if (!digits.empty() && digits.front() == '-')
        digits.remove_prefix(1);
    if (digits.empty())
        throw std::invalid_argument("empty decimal string");
    for (char c : digits)
        if (c < '0' || c > '9')
            throw std::invalid_argument("not a decimal integer: " + std::string(text));
    return ExactCount(std::string(text), 10);
}

}  // namespace pinnacle
