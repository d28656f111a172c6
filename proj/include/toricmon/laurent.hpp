#ifndef TORICMON_LAURENT_HPP
#define TORICMON_LAURENT_HPP

#include "toricmon/lattice.hpp"

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace toricmon {

/// Exact Laurent polynomial with exponents in a fixed-rank lattice. Terms
/// are kept in a sorted map with no zero coefficients, so equality of
/// canonical forms is plain equality.
class LaurentPoly {
public:
    explicit LaurentPoly(std::size_t rank) : rank_(rank) {}

    static LaurentPoly zero(std::size_t rank) { return LaurentPoly(rank); }
    static LaurentPoly one(std::size_t rank);
    static LaurentPoly monomial(std::size_t rank, const IntVec& exp, const Rat& coeff = Rat(1));

    std::size_t rank() const { return rank_; }
    const std::map<IntVec, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const IntVec& exp, const Rat& coeff);

    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly scaled(const Rat& c) const;
    bool operator==(const LaurentPoly& other) const = default;

    std::string to_string() const;

private:
    std::size_t rank_ = 0;
    std::map<IntVec, Rat> terms_;
};

/// Element of the `legs`-fold tensor power of the Laurent algebra; a term
/// with key (u_1,...,u_legs) encodes the pure tensor of the chi^{u_i}.
class TensorPoly {
public:
    TensorPoly(std::size_t rank, std::size_t legs) : rank_(rank), legs_(legs) {}

    static TensorPoly one(std::size_t rank, std::size_t legs);
    static TensorPoly monomial(std::size_t rank, std::vector<IntVec> exps,
                               const Rat& coeff = Rat(1));

    std::size_t rank() const { return rank_; }
    std::size_t legs() const { return legs_; }
    const std::map<std::vector<IntVec>, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const std::vector<IntVec>& exps, const Rat& coeff);

    TensorPoly operator+(const TensorPoly& other) const;
    TensorPoly operator-(const TensorPoly& other) const;
    TensorPoly operator*(const TensorPoly& other) const;
    TensorPoly scaled(const Rat& c) const;
    bool operator==(const TensorPoly& other) const = default;

    std::string to_string() const;

private:
    std::size_t rank_ = 0;
    std::size_t legs_ = 2;
    std::map<std::vector<IntVec>, Rat> terms_;
};

/// Replaces leg `leg` of every term by the two legs of fn(exponent),
/// multiplying coefficients through; the result has one more leg. This is
/// how (Delta x id) and (id x Delta) act on tensor elements.
TensorPoly expand_leg(const TensorPoly& t, std::size_t leg,
                      const std::function<TensorPoly(const IntVec&)>& fn);

/// Removes leg `leg`, multiplying each term's coefficient by fn(exponent);
/// realizes (epsilon x id) and (id x epsilon).
TensorPoly contract_leg(const TensorPoly& t, std::size_t leg,
                        const std::function<Rat(const IntVec&)>& fn);

/// One-leg tensor back to an ordinary Laurent polynomial.
LaurentPoly to_laurent(const TensorPoly& t);

/// Substitutes coordinate values exactly: chi^u evaluates to the product of
/// values[i]^{u_i}. A negative exponent over a zero value is an error.
Rat evaluate(const LaurentPoly& f, const RatVec& values);

} // namespace toricmon

#endif
