#ifndef TORICMON_NUMERIC_HPP
#define TORICMON_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <vector>

namespace toricmon {

/// Arbitrary-precision integer. All lattice arithmetic is exact; the library
/// never touches floating point.
using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored in lowest terms.
using Rat = boost::multiprecision::cpp_rational;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// Thrown when mathematical validation of an input fails. Carries the
/// itemized list of failed conditions for reporting.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::string condition)
        : std::runtime_error(condition), conditions_{std::move(condition)} {}
    explicit ValidationError(std::vector<std::string> conditions)
        : std::runtime_error(join(conditions)), conditions_(std::move(conditions)) {}

    const std::vector<std::string>& conditions() const { return conditions_; }

private:
    static std::string join(const std::vector<std::string>& cs) {
        std::string s;
        for (const auto& c : cs) {
            if (!s.empty()) s += "; ";
            s += c;
        }
        return s;
    }
    std::vector<std::string> conditions_;
};

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Binomial coefficient C(n, k), exact. Returns 0 for k < 0 or k > n.
inline Int binomial(const Int& n, const Int& k) {
    if (k < 0 || k > n) return 0;
    Int r = 1;
    for (Int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1; // exact at every step
    }
    return r;
}

/// x^e for integer e (negative allowed); 0^0 = 1, 0^negative is an error.
inline Rat rat_pow(const Rat& x, const Int& e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e > 0) return Rat(0);
        throw std::domain_error("rat_pow: zero base with negative exponent");
    }
    Rat base = e > 0 ? x : Rat(1) / x;
    Int m = abs_int(e);
    Rat r(1);
    while (m > 0) {
        if ((m & 1) != 0) r *= base;
        base *= base;
        m >>= 1;
    }
    return r;
}

inline std::string rat_to_string(const Rat& r) {
    const Int num = boost::multiprecision::numerator(r);
    const Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on junk.
inline Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        const Int num(s.substr(0, slash));
        const Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator");
        return Rat(num, den);
    } catch (const std::runtime_error& e) {
        throw std::invalid_argument("bad rational literal '" + s + "': " + e.what());
    }
}

} // namespace toricmon

#endif
