#include "tlq/real.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <vector>

namespace tlq {

mpfr_prec_t Real::bits_for_digits(int digits) {
    // 1 decimal digit ~ log2(10) bits, plus slack so the last digit is honest.
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.3219280948873626)) + 16;
}

Real::Real(const std::string& s, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
        mpfr_clear(v_);
        throw ParseError("not a decimal number: '" + s + "'");
    }
}

namespace {
mpfr_prec_t joint_prec(const Real& a, const Real& b) {
    return std::max(a.prec(), b.prec());
}
}  // namespace

Real operator+(const Real& a, const Real& b) {
    Real r(joint_prec(a, b));
    mpfr_add(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator-(const Real& a, const Real& b) {
    Real r(joint_prec(a, b));
    mpfr_sub(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator*(const Real& a, const Real& b) {
    Real r(joint_prec(a, b));
    mpfr_mul(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real operator/(const Real& a, const Real& b) {
    Real r(joint_prec(a, b));
    mpfr_div(r.raw(), a.raw(), b.raw(), MPFR_RNDN);
    return r;
}
Real Real::operator-() const {
    Real r(prec());
    mpfr_neg(r.raw(), v_, MPFR_RNDN);
    return r;
}

Real Real::sqrt(const Real& a) {
    Real r(a.prec());
    mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
Real Real::exp(const Real& a) {
    Real r(a.prec());
    mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
Real Real::log(const Real& a) {
    Real r(a.prec());
    mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
Real Real::abs(const Real& a) {
    Real r(a.prec());
    mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
    return r;
}
Real Real::pow_ui(const Real& a, unsigned long e) {
    Real r(a.prec());
    mpfr_pow_ui(r.raw(), a.raw(), e, MPFR_RNDN);
    return r;
}

Real Real::pow_rat(const Rat& base, unsigned long e, mpfr_prec_t prec) {
    Rat acc = 1;
    Rat sq = base;
    unsigned long k = e;
    while (k) {
        if (k & 1) acc *= sq;
        k >>= 1;
        if (k) sq *= sq;
    }
    return Real(acc, prec);
}

namespace {
// mpfr_const_* mutate a shared cache; serialize them so worker threads can
// request constants safely.
std::mutex g_const_mutex;
}  // namespace

Real Real::pi(mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lock(g_const_mutex);
    Real r(prec);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}
Real Real::euler_gamma(mpfr_prec_t prec) {
    std::lock_guard<std::mutex> lock(g_const_mutex);
    Real r(prec);
    mpfr_const_euler(r.raw(), MPFR_RNDN);
    return r;
}

std::string Real::to_string(int digits) const {
    if (digits < 2) digits = 2;
    if (mpfr_zero_p(v_)) return "0";
    if (!mpfr_number_p(v_)) return mpfr_nan_p(v_) ? "nan" : (mpfr_sgn(v_) > 0 ? "inf" : "-inf");
    mpfr_exp_t e;
    char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);
    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    // mant is the digit string with implied decimal point before the first
    // digit and exponent e (value = 0.mant * 10^e).
    std::string out;
    if (e >= 1 && e <= static_cast<mpfr_exp_t>(mant.size()) + 4 && e <= 40) {
        if (static_cast<size_t>(e) >= mant.size()) {
            out = mant + std::string(static_cast<size_t>(e) - mant.size(), '0');
        } else {
            out = mant.substr(0, static_cast<size_t>(e)) + "." + mant.substr(static_cast<size_t>(e));
        }
    } else if (e <= 0 && e >= -4) {
        out = "0." + std::string(static_cast<size_t>(-e), '0') + mant;
    } else {
        out = mant.substr(0, 1);
        if (mant.size() > 1) out += "." + mant.substr(1);
        out += "e" + std::to_string(static_cast<long>(e - 1));
    }
    // strip trailing zeros after a decimal point (but keep "x.0" style short)
    if (out.find('.') != std::string::npos && out.find('e') == std::string::npos) {
        size_t last = out.find_last_not_of('0');
        if (out[last] == '.') last--;
        out.erase(last + 1);
    }
    return neg ? "-" + out : out;
}

}  // namespace tlq
