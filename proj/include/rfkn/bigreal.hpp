#pragma once

#include <mpfr.h>
#include <functional>
#include <string>
#include <utility>
#include "rfkn/nat.hpp"

namespace rfkn {

// thin RAII wrapper over mpfr_t; every value carries its precision.
// default precision comes from RFKN_PRECISION_BITS (>= 256).
class BigReal {
  public:
    explicit BigReal(mpfr_prec_t prec = default_precision()) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    BigReal(const BigReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    BigReal(BigReal&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    BigReal& operator=(const BigReal& o) {
        if (this != &o) { mpfr_set_prec(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
        return *this;
    }
    BigReal& operator=(BigReal&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
    ~BigReal() { mpfr_clear(v_); }

    static mpfr_prec_t default_precision();

    static BigReal from_ui(unsigned long x, mpfr_prec_t prec = default_precision());
    static BigReal from_nat(const Nat& x, mpfr_prec_t prec = default_precision());
    static BigReal from_ratio(const mpq_class& x, mpfr_prec_t prec = default_precision());
    static BigReal from_string(const std::string& dec, mpfr_prec_t prec = default_precision());

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

    BigReal add(const BigReal& o) const;
    BigReal sub(const BigReal& o) const;
    BigReal mul(const BigReal& o) const;
    BigReal div(const BigReal& o) const;
    BigReal pow(const BigReal& e) const;
    BigReal log() const;
    BigReal log10() const;
    int cmp(const BigReal& o) const { return mpfr_cmp(v_, o.v_); }
    int cmp_nat(const Nat& o) const { return mpfr_cmp_z(v_, o.get_mpz_t()); }
    int sign() const { return mpfr_sgn(v_); }
    bool is_finite() const { return mpfr_number_p(v_) != 0; }

    // scientific-notation decimal string with the given significant digits
    std::string str(size_t digits = 20) const;
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

  private:
    mpfr_t v_;
};

// the value printed in the source is the ceiling of the exact threshold at the
// printed precision: "ceil_int" for whole numbers, "ceil_sigN" for N significant
// digits in scientific notation. returns the printed-form string.
std::string ceil_to_printed(const BigReal& x, const std::string& rounding);

enum class stable_order { below, equal_or_boundary, above };

// evaluates lhs/rhs at increasing precision (doubling from `start` to `max`)
// until the comparison is farther from equality than 2^-32 relative, following
// the precision policy for threshold comparisons. returns `above` for lhs > rhs.
stable_order stable_compare(const std::function<std::pair<BigReal, BigReal>(mpfr_prec_t)>& eval,
                            mpfr_prec_t start = 0, mpfr_prec_t max_prec = 4096,
                            mpfr_prec_t* used = nullptr);

} // namespace rfkn
