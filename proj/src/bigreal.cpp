#include "rfkn/bigreal.hpp"

#include <cstdlib>
#include <sstream>
#include "rfkn/error.hpp"

namespace rfkn {

mpfr_prec_t BigReal::default_precision() {
    static mpfr_prec_t prec = [] {
        const char* env = std::getenv("RFKN_PRECISION_BITS");
        long p = env ? std::atol(env) : 0;
        return mpfr_prec_t(p >= 256 ? p : 256);
    }();
    return prec;
}

BigReal BigReal::from_ui(unsigned long x, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_ui(r.v_, x, MPFR_RNDN);
    return r;
}

BigReal BigReal::from_nat(const Nat& x, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_z(r.v_, x.get_mpz_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_ratio(const mpq_class& x, mpfr_prec_t prec) {
    BigReal r(prec);
    mpfr_set_q(r.v_, x.get_mpq_t(), MPFR_RNDN);
    return r;
}

BigReal BigReal::from_string(const std::string& dec, mpfr_prec_t prec) {
    BigReal r(prec);
    if (mpfr_set_str(r.v_, dec.c_str(), 10, MPFR_RNDN) != 0)
        fail(errc::bad_input, "not a decimal number: " + dec);
    return r;
}

#define RFKN_BR_BINOP(name, fn)                                     \
    BigReal BigReal::name(const BigReal& o) const {                 \
        BigReal r(std::max(precision(), o.precision()));            \
        fn(r.v_, v_, o.v_, MPFR_RNDN);                              \
        return r;                                                   \
    }

RFKN_BR_BINOP(add, mpfr_add)
RFKN_BR_BINOP(sub, mpfr_sub)
RFKN_BR_BINOP(mul, mpfr_mul)
RFKN_BR_BINOP(div, mpfr_div)
RFKN_BR_BINOP(pow, mpfr_pow)

#undef RFKN_BR_BINOP

BigReal BigReal::log() const {
    BigReal r(precision());
    mpfr_log(r.v_, v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::log10() const {
    BigReal r(precision());
    mpfr_log10(r.v_, v_, MPFR_RNDN);
    return r;
}

std::string BigReal::str(size_t digits) const {
    if (!is_finite()) return mpfr_nan_p(v_) ? "nan" : (sign() > 0 ? "inf" : "-inf");
    if (mpfr_zero_p(v_)) return "0";
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, digits, v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    bool neg = !mant.empty() && mant[0] == '-';
    std::string dig = neg ? mant.substr(1) : mant;
    std::ostringstream out;
    if (neg) out << '-';
    out << dig[0];
    if (dig.size() > 1) out << '.' << dig.substr(1);
    out << 'e' << (e - 1);
    return out.str();
}

std::string ceil_to_printed(const BigReal& x, const std::string& rounding) {
    if (rounding == "ceil_int") {
        BigReal c(x.precision());
        mpfr_ceil(c.raw(), x.raw());
        Nat z;
        mpfr_get_z(z.get_mpz_t(), c.raw(), MPFR_RNDZ);
        return z.get_str();
    }
    if (rounding.rfind("ceil_sig", 0) == 0) {
        size_t sig = std::stoul(rounding.substr(8));
        mpfr_exp_t e;
        char* raw = mpfr_get_str(nullptr, &e, 10, sig + 12, x.raw(), MPFR_RNDN);
        std::string dig(raw);
        mpfr_free_str(raw);
        if (dig.empty() || dig[0] == '-') fail(errc::bad_input, "ceil_to_printed needs a positive value");
        // round the digit string up at position `sig` unless the tail is zero
        bool tail = false;
        for (size_t i = sig; i < dig.size(); i++) tail |= dig[i] != '0';
        std::string head = dig.substr(0, sig);
        if (tail) {
            size_t i = head.size();
            while (i-- > 0) {
                if (head[i] != '9') { head[i]++; break; }
                head[i] = '0';
                if (i == 0) { head.insert(head.begin(), '1'); e++; head.pop_back(); }
            }
        }
        std::ostringstream out;
        out << head[0];
        if (head.size() > 1) out << '.' << head.substr(1);
        out << 'e' << (e - 1);
        return out.str();
    }
    fail(errc::bad_input, "unknown rounding rule: " + rounding);
}

stable_order stable_compare(const std::function<std::pair<BigReal, BigReal>(mpfr_prec_t)>& eval,
                            mpfr_prec_t start, mpfr_prec_t max_prec, mpfr_prec_t* used) {
    mpfr_prec_t prec = start > 0 ? start : BigReal::default_precision();
    while (true) {
        auto [lhs, rhs] = eval(prec);
        if (used) *used = prec;
        BigReal diff = lhs.sub(rhs);
        if (diff.sign() != 0) {
            // |lhs - rhs| must clear rhs * 2^-32 to be trusted
            BigReal scale = rhs;
            mpfr_abs(scale.raw(), scale.raw(), MPFR_RNDN);
            mpfr_mul_2si(scale.raw(), scale.raw(), -32, MPFR_RNDN);
            BigReal mag = diff;
            mpfr_abs(mag.raw(), mag.raw(), MPFR_RNDN);
            if (mag.cmp(scale) > 0) return diff.sign() > 0 ? stable_order::above : stable_order::below;
        }
        if (prec >= max_prec) return stable_order::equal_or_boundary;
        prec = std::min(max_prec, prec * 2);
    }
}

} // namespace rfkn
