#pragma once

#include <mpfr.h>

#include <cstdint>
#include <string>
#include <utility>

#include "tlq/rational.hpp"

namespace tlq {

// Value-semantic wrapper over mpfr_t. Every Real carries its own precision;
// binary operations round to the wider of the two operands. Rounding mode is
// always MPFR_RNDN.
class Real {
  public:
    static mpfr_prec_t bits_for_digits(int digits);

    Real() { mpfr_init2(v_, 64); mpfr_set_zero(v_, 1); }
    explicit Real(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
    Real(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
    Real(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
    Real(const Rat& q, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
    }
    Real(const Int& z, mpfr_prec_t prec) {
        mpfr_init2(v_, prec);
        mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
    }
    // Parses decimal text at the given precision.
    Real(const std::string& s, mpfr_prec_t prec);

    Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
    Real(Real&& o) noexcept { mpfr_init2(v_, 64); mpfr_swap(v_, o.v_); }
    Real& operator=(const Real& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        if (this != &o) mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Real() { mpfr_clear(v_); }

    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }

    int sign() const { return mpfr_sgn(v_); }
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

    // Decimal rendering with the requested number of significant digits.
    std::string to_string(int digits) const;

    friend Real operator+(const Real& a, const Real& b);
    friend Real operator-(const Real& a, const Real& b);
    friend Real operator*(const Real& a, const Real& b);
    friend Real operator/(const Real& a, const Real& b);
    Real operator-() const;

    Real& operator+=(const Real& b) { *this = *this + b; return *this; }
    Real& operator-=(const Real& b) { *this = *this - b; return *this; }
    Real& operator*=(const Real& b) { *this = *this * b; return *this; }
    Real& operator/=(const Real& b) { *this = *this / b; return *this; }

    friend bool operator<(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
    friend bool operator==(const Real& a, const Real& b) { return mpfr_cmp(a.v_, b.v_) == 0; }

    static Real sqrt(const Real& a);
    static Real exp(const Real& a);
    static Real log(const Real& a);
    static Real abs(const Real& a);
    static Real pow_ui(const Real& a, unsigned long e);
    // (num/den)^e computed exactly from the rational then rounded once.
    static Real pow_rat(const Rat& base, unsigned long e, mpfr_prec_t prec);

    static Real pi(mpfr_prec_t prec);
    static Real euler_gamma(mpfr_prec_t prec);

  private:
    mpfr_t v_;
};

}  // namespace tlq
