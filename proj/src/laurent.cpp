#include "cluster/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cluster {

LaurentPoly LaurentPoly::constant(std::size_t varCount, Int c) {
    LaurentPoly p(varCount);
    p.insertTerm(Exponents(varCount, 0), c);
    return p;
}

LaurentPoly LaurentPoly::variable(std::size_t varCount, std::size_t idx, int power) {
    if (idx >= varCount) throw IndexOutOfRange("variable index out of range");
    LaurentPoly p(varCount);
    Exponents e(varCount, 0);
    e[idx] = power;
    p.insertTerm(e, Int(1));
    return p;
}

LaurentPoly LaurentPoly::monomial(Exponents e, Int c) {
    LaurentPoly p(e.size());
    p.insertTerm(e, c);
    return p;
}

bool LaurentPoly::isOne() const {
    if (terms_.size() != 1) return false;
    const auto& [e, c] = *terms_.begin();
    return c == 1 && std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

void LaurentPoly::insertTerm(const Exponents& e, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void LaurentPoly::requireSameVars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.varCount_ != b.varCount_)
        throw VarCountMismatch("operands have different variable counts");
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    requireSameVars(*this, o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insertTerm(e, c);
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    requireSameVars(*this, o);
    LaurentPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.insertTerm(e, -c);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    requireSameVars(*this, o);
    LaurentPoly r(varCount_);
    Exponents e(varCount_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : o.terms_) {
            for (std::size_t i = 0; i < varCount_; ++i) e[i] = ea[i] + eb[i];
            r.insertTerm(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r = constant(varCount_, 1);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1u) r = r * base;
        base = k > 1 ? base * base : base;
        k >>= 1u;
    }
    return r;
}

bool LaurentPoly::operator<(const LaurentPoly& o) const {
    // Descending-lex term sequences compared lexicographically.
    auto it = terms_.rbegin();
    auto jt = o.terms_.rbegin();
    for (; it != terms_.rend() && jt != o.terms_.rend(); ++it, ++jt) {
        if (it->first != jt->first) return it->first < jt->first;
        if (it->second != jt->second) return it->second < jt->second;
    }
    return it == terms_.rend() && jt != o.terms_.rend();
}

Rat LaurentPoly::evalRational(const std::vector<Rat>& point) const {
    if (point.size() != varCount_)
        throw VarCountMismatch("evaluation point has wrong dimension");
    Rat sum = 0;
    for (const auto& [e, c] : terms_) {
        Rat prod(c);
        for (std::size_t i = 0; i < varCount_; ++i) {
            if (e[i] == 0) continue;
            if (point[i] == 0) {
                if (e[i] < 0)
                    throw ZeroAtNegativeExponent("zero coordinate at negative exponent");
                prod = 0;
                break;
            }
            Rat base = e[i] > 0 ? point[i] : Rat(1) / point[i];
            for (int k = 0; k < std::abs(e[i]); ++k) prod *= base;
        }
        sum += prod;
    }
    return sum;
}

Exponents LaurentPoly::minExponents() const {
    if (terms_.empty()) throw ZeroPolynomial("zero polynomial has no exponents");
    Exponents mins = terms_.begin()->first;
    for (const auto& [e, c] : terms_)
        for (std::size_t i = 0; i < varCount_; ++i) mins[i] = std::min(mins[i], e[i]);
    return mins;
}

bool LaurentPoly::allCoefficientsNonNegative() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.second >= 0; });
}

std::string LaurentPoly::toString() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        const auto& [e, c] = *it;
        bool hasVar = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        bool coeffShown = !hasVar || c != 1;
        if (coeffShown) os << c.str();
        bool needStar = coeffShown;
        for (std::size_t i = 0; i < varCount_; ++i) {
            if (e[i] == 0) continue;
            if (needStar) os << "*";
            needStar = true;
            os << "x" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;
    std::size_t varCount;

    void skipWs() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eat(char c) {
        skipWs();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skipWs();
        return pos < s.size() ? s[pos] : '\0';
    }

    Int parseInt() {
        skipWs();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        std::size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected integer at position " + std::to_string(start));
        return Int(s.substr(start, pos - start));
    }

    // factor := integer | 'x' digits ['^' integer]
    // Accumulates into (coeff, exps).
    void parseFactor(Int& coeff, Exponents& exps) {
        char c = peek();
        if (c == 'x') {
            ++pos;
            Int idx = parseInt();
            if (idx < 1 || idx > Int(varCount))
                throw ParseError("variable index out of range: x" + idx.str());
            int e = 1;
            if (eat('^')) e = static_cast<int>(parseInt());
            exps[static_cast<std::size_t>(idx - 1)] += e;
        } else {
            coeff *= parseInt();
        }
    }

    LaurentPoly parseTerm() {
        Int coeff = 1;
        while (true) {
            char c = peek();
            if (c == '-') {
                coeff = -coeff;
                ++pos;
            } else if (c == '+') {
                ++pos;
            } else {
                break;
            }
        }
        Exponents exps(varCount, 0);
        parseFactor(coeff, exps);
        while (eat('*')) parseFactor(coeff, exps);
        return LaurentPoly::monomial(exps, coeff);
    }

    LaurentPoly parse() {
        LaurentPoly acc(varCount);
        acc = acc + parseTerm();
        while (peek() == '+' || peek() == '-') acc = acc + parseTerm();
        skipWs();
        if (pos != s.size()) throw ParseError("trailing characters in polynomial: " + s.substr(pos));
        return acc;
    }
};

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& s, std::size_t varCount) {
    Parser p{s, 0, varCount};
    return p.parse();
}

std::size_t LaurentPoly::hashValue() const {
    std::size_t h = 0x9e3779b97f4a7c15ull ^ varCount_;
    auto mix = [&h](std::size_t v) {
        h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    };
    std::hash<std::string> sh;
    for (const auto& [e, c] : terms_) {
        for (int x : e) mix(static_cast<std::size_t>(x) * 0x100000001b3ull);
        mix(sh(c.str()));
    }
    return h;
}

LaurentPoly exactDiv(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.isZero()) throw DivisionByZero("division by zero polynomial");
    if (num.isZero()) return LaurentPoly(num.varCount());
    if (num.varCount() != den.varCount())
        throw VarCountMismatch("operands have different variable counts");

    // Shift both operands into the polynomial world.  Per-variable minimum
    // degrees are additive over products, so the quotient, if it exists,
    // is the polynomial quotient shifted back by minNum - minDen.
    const std::size_t m = num.varCount();
    Exponents minNum = num.minExponents();
    Exponents minDen = den.minExponents();

    using Terms = std::map<Exponents, Rat>;
    Terms rem, divisor;
    for (const auto& [e, c] : num.terms()) {
        Exponents s(m);
        for (std::size_t i = 0; i < m; ++i) s[i] = e[i] - minNum[i];
        rem.emplace(s, Rat(c));
    }
    for (const auto& [e, c] : den.terms()) {
        Exponents s(m);
        for (std::size_t i = 0; i < m; ++i) s[i] = e[i] - minDen[i];
        divisor.emplace(s, Rat(c));
    }

    const Exponents& leadDenExp = divisor.rbegin()->first;
    const Rat& leadDenCoeff = divisor.rbegin()->second;

    Terms quot;
    while (!rem.empty()) {
        const Exponents& leadRemExp = rem.rbegin()->first;
        Exponents t(m);
        for (std::size_t i = 0; i < m; ++i) {
            t[i] = leadRemExp[i] - leadDenExp[i];
            if (t[i] < 0) throw NonExactDivision("leading monomial not divisible");
        }
        Rat tc = rem.rbegin()->second / leadDenCoeff;
        quot.emplace(t, tc);
        for (const auto& [e, c] : divisor) {
            Exponents s(m);
            for (std::size_t i = 0; i < m; ++i) s[i] = e[i] + t[i];
            auto it = rem.find(s);
            Rat delta = tc * c;
            if (it == rem.end()) {
                rem.emplace(std::move(s), -delta);
            } else {
                it->second -= delta;
                if (it->second == 0) rem.erase(it);
            }
        }
    }

    LaurentPoly q(m);
    for (const auto& [e, c] : quot) {
        if (boost::multiprecision::denominator(c) != 1)
            throw NonExactDivision("quotient has non-integer coefficient");
        Exponents s(m);
        for (std::size_t i = 0; i < m; ++i) s[i] = e[i] + minNum[i] - minDen[i];
        q = q + LaurentPoly::monomial(s, boost::multiprecision::numerator(c));
    }
    return q;
}

DenominatorVector denominatorVector(const LaurentPoly& y,
                                    const std::vector<std::size_t>& clusterIdx) {
    if (y.isZero()) throw ZeroPolynomial("denominator vector of zero");
    Exponents mins = y.minExponents();
    DenominatorVector d;
    d.entries.reserve(clusterIdx.size());
    for (std::size_t idx : clusterIdx) {
        if (idx >= mins.size()) throw IndexOutOfRange("cluster index out of range");
        d.entries.push_back(-mins[idx]);
    }
    return d;
}

}  // namespace cluster
