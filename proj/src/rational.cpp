#include "tlq/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace tlq {

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    return true;
}

}  // namespace

ProbValue parse_probability(const std::string& text) {
    if (text.empty()) throw ParseError("empty probability");
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        std::string num = text.substr(0, slash), den = text.substr(slash + 1);
        if (!all_digits(num) || !all_digits(den))
            throw ParseError("malformed rational '" + text + "' (want a/b with integer a, b)");
        Rat r(Int(num), Int(den));
        if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
        r.canonicalize();
        return {r, true, text};
    }
    // decimal: [digits][.digits]
    auto dot = text.find('.');
    std::string ip = dot == std::string::npos ? text : text.substr(0, dot);
    std::string fp = dot == std::string::npos ? "" : text.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw ParseError("malformed probability '" + text + "'");
    if ((!ip.empty() && !all_digits(ip)) || (!fp.empty() && !all_digits(fp)))
        throw ParseError("malformed probability '" + text + "'");
    Int num(ip.empty() ? "0" : ip);
    Int den = 1;
    for (char c : fp) {
        num = num * 10 + (c - '0');
        den *= 10;
    }
    Rat r(num, den);
    r.canonicalize();
    return {r, false, text};
}

std::uint64_t parse_count(const std::string& text) {
    if (text.empty()) throw ParseError("empty count");
    std::string mant = text;
    long exp10 = 0;
    auto epos = text.find_first_of("eE");
    if (epos != std::string::npos) {
        mant = text.substr(0, epos);
        std::string es = text.substr(epos + 1);
        if (es.empty()) throw ParseError("malformed count '" + text + "'");
        size_t pos = 0;
        exp10 = std::stol(es, &pos);
        if (pos != es.size()) throw ParseError("malformed count '" + text + "'");
    }
    auto dot = mant.find('.');
    std::string ip = dot == std::string::npos ? mant : mant.substr(0, dot);
    std::string fp = dot == std::string::npos ? "" : mant.substr(dot + 1);
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !all_digits(ip)) ||
        (!fp.empty() && !all_digits(fp)))
        throw ParseError("malformed count '" + text + "'");
    exp10 -= static_cast<long>(fp.size());
    Int v(ip + fp);
    if (exp10 < 0) {
        Int scale = 1;
        for (long i = 0; i < -exp10; i++) scale *= 10;
        if (!mpz_divisible_p(v.get_mpz_t(), scale.get_mpz_t()))
            throw ParseError("count '" + text + "' is not an integer");
        v /= scale;
    } else {
        for (long i = 0; i < exp10; i++) v *= 10;
    }
    if (v < 0 || !v.fits_ulong_p()) {
        if (sgn(v) < 0) throw ParseError("count '" + text + "' is negative");
        // fits_ulong_p is 64-bit on LP64; anything above is out of range anyway
        throw ParseError("count '" + text + "' out of 64-bit range");
    }
    return static_cast<std::uint64_t>(v.get_ui());
}

std::string to_string(const Rat& r) { return r.get_str(); }

}  // namespace tlq
