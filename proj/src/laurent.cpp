#include "toricmon/laurent.hpp"

#include <sstream>

namespace toricmon {

namespace {

std::string exp_to_string(const IntVec& e) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i)
            os << ",";
        os << e[i];
    }
    os << ")";
    return os.str();
}

} // namespace

LaurentPoly LaurentPoly::one(std::size_t rank) {
    return monomial(rank, IntVec(rank, 0));
}

LaurentPoly LaurentPoly::monomial(std::size_t rank, const IntVec& exp, const Rat& coeff) {
    LaurentPoly p(rank);
    p.add_term(exp, coeff);
    return p;
}

void LaurentPoly::add_term(const IntVec& exp, const Rat& coeff) {
    if (exp.size() != rank_)
        throw ValidationError("laurent: exponent length differs from rank");
    if (coeff == 0)
        return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        terms_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    if (rank_ != other.rank_)
        throw ValidationError("laurent: rank mismatch");
    LaurentPoly out = *this;
    for (const auto& [e, c] : other.terms_)
        out.add_term(e, c);
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const {
    return *this + other.scaled(Rat(-1));
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    if (rank_ != other.rank_)
        throw ValidationError("laurent: rank mismatch");
    LaurentPoly out(rank_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_)
            out.add_term(vec_add(e1, e2), c1 * c2);
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rat& c) const {
    LaurentPoly out(rank_);
    if (c == 0)
        return out;
    for (const auto& [e, coeff] : terms_)
        out.terms_.emplace(e, coeff * c);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << rat_to_string(c) << "*x^" << exp_to_string(e);
    }
    return os.str();
}

TensorPoly TensorPoly::one(std::size_t rank, std::size_t legs) {
    return monomial(rank, std::vector<IntVec>(legs, IntVec(rank, 0)));
}

TensorPoly TensorPoly::monomial(std::size_t rank, std::vector<IntVec> exps, const Rat& coeff) {
    TensorPoly t(rank, exps.size());
    t.add_term(exps, coeff);
    return t;
}

void TensorPoly::add_term(const std::vector<IntVec>& exps, const Rat& coeff) {
    if (exps.size() != legs_)
        throw ValidationError("tensor: wrong number of legs");
    for (const IntVec& e : exps)
        if (e.size() != rank_)
            throw ValidationError("tensor: exponent length differs from rank");
    if (coeff == 0)
        return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, coeff);
        return;
    }
    it->second += coeff;
    if (it->second == 0)
        terms_.erase(it);
}

TensorPoly TensorPoly::operator+(const TensorPoly& other) const {
    if (rank_ != other.rank_ || legs_ != other.legs_)
        throw ValidationError("tensor: shape mismatch");
    TensorPoly out = *this;
    for (const auto& [e, c] : other.terms_)
        out.add_term(e, c);
    return out;
}

TensorPoly TensorPoly::operator-(const TensorPoly& other) const {
    return *this + other.scaled(Rat(-1));
}

TensorPoly TensorPoly::operator*(const TensorPoly& other) const {
    if (rank_ != other.rank_ || legs_ != other.legs_)
        throw ValidationError("tensor: shape mismatch");
    TensorPoly out(rank_, legs_);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : other.terms_) {
            std::vector<IntVec> e(legs_);
            for (std::size_t i = 0; i < legs_; ++i)
                e[i] = vec_add(e1[i], e2[i]);
            out.add_term(e, c1 * c2);
        }
    return out;
}

TensorPoly TensorPoly::scaled(const Rat& c) const {
    TensorPoly out(rank_, legs_);
    if (c == 0)
        return out;
    for (const auto& [e, coeff] : terms_)
        out.terms_.emplace(e, coeff * c);
    return out;
}

std::string TensorPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first)
            os << " + ";
        first = false;
        os << rat_to_string(c) << "*";
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (i)
                os << "(x)";
            os << "x^" << exp_to_string(e[i]);
        }
    }
    return os.str();
}

TensorPoly expand_leg(const TensorPoly& t, std::size_t leg,
                      const std::function<TensorPoly(const IntVec&)>& fn) {
    if (leg >= t.legs())
        throw ValidationError("expand_leg: leg out of range");
    TensorPoly out(t.rank(), t.legs() + 1);
    for (const auto& [e, c] : t.terms()) {
        TensorPoly image = fn(e[leg]);
        if (image.legs() != 2 || image.rank() != t.rank())
            throw ValidationError("expand_leg: expansion must produce two legs");
        for (const auto& [ie, ic] : image.terms()) {
            std::vector<IntVec> key;
            key.reserve(t.legs() + 1);
            for (std::size_t i = 0; i < leg; ++i)
                key.push_back(e[i]);
            key.push_back(ie[0]);
            key.push_back(ie[1]);
            for (std::size_t i = leg + 1; i < t.legs(); ++i)
                key.push_back(e[i]);
            out.add_term(key, c * ic);
        }
    }
    return out;
}

TensorPoly contract_leg(const TensorPoly& t, std::size_t leg,
                        const std::function<Rat(const IntVec&)>& fn) {
    if (leg >= t.legs())
        throw ValidationError("contract_leg: leg out of range");
    if (t.legs() < 2)
        throw ValidationError("contract_leg: need at least two legs");
    TensorPoly out(t.rank(), t.legs() - 1);
    for (const auto& [e, c] : t.terms()) {
        Rat scale = fn(e[leg]);
        if (scale == 0)
            continue;
        std::vector<IntVec> key;
        key.reserve(t.legs() - 1);
        for (std::size_t i = 0; i < t.legs(); ++i)
            if (i != leg)
                key.push_back(e[i]);
        out.add_term(key, c * scale);
    }
    return out;
}

LaurentPoly to_laurent(const TensorPoly& t) {
    if (t.legs() != 1)
        throw ValidationError("to_laurent: tensor must have one leg");
    LaurentPoly out(t.rank());
    for (const auto& [e, c] : t.terms())
        out.add_term(e[0], c);
    return out;
}

Rat evaluate(const LaurentPoly& f, const RatVec& values) {
    if (values.size() != f.rank())
        throw ValidationError("evaluate: wrong number of coordinate values");
    Rat total(0);
    for (const auto& [e, c] : f.terms()) {
        Rat term = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0)
                continue;
            if (values[i] == 0 && e[i] < 0)
                throw ValidationError("evaluate: negative exponent at a zero coordinate");
            term *= rat_pow(values[i], e[i]);
        }
        total += term;
    }
    return total;
}

} // namespace toricmon
