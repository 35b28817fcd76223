#include "takagi/dyadic.hpp"

#include <map>
#include <sstream>

namespace takagi {

DyadicExpansion DyadicExpansion::from_rational(const Rat& x) {
    if (x < 0 || x >= 1) throw std::invalid_argument("expansion domain is [0, 1)");
    DyadicExpansion e;
    Int p = numerator(x);
    const Int q = denominator(x);
    std::map<Int, std::size_t> seen;  // remainder -> digit index
    std::vector<std::uint8_t> digits;
    while (p != 0) {
        auto it = seen.find(p);
        if (it != seen.end()) {
            e.prefix_.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
            e.period_.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
            return e;
        }
        seen.emplace(p, digits.size());
        p *= 2;
        if (p >= q) {
            digits.push_back(1);
            p -= q;
        } else {
            digits.push_back(0);
        }
    }
    e.prefix_ = std::move(digits);
    return e;
}

DyadicExpansion DyadicExpansion::from_digits(std::vector<std::uint8_t> prefix,
                                             std::vector<std::uint8_t> period) {
    for (auto d : prefix)
        if (d > 1) throw std::invalid_argument("binary digits are 0/1");
    bool all_ones = !period.empty();
    for (auto d : period) {
        if (d > 1) throw std::invalid_argument("binary digits are 0/1");
        if (d == 0) all_ones = false;
    }
    if (all_ones)
        throw NonCanonicalExpansion("the all-ones period is forbidden; carry the expansion");
    DyadicExpansion raw;
    raw.prefix_ = std::move(prefix);
    raw.period_ = std::move(period);
    // normalize (minimal period, shortest prefix) through the exact value
    return from_rational(raw.to_rational());
}

Rat DyadicExpansion::to_rational() const {
    Rat acc(0);
    Int scale(1);
    for (auto d : prefix_) {
        scale *= 2;
        if (d) acc += Rat(1, scale);
    }
    if (!period_.empty()) {
        Int num(0);
        for (auto d : period_) num = num * 2 + static_cast<int>(d);
        Int den = (Int(1) << static_cast<unsigned>(period_.size())) - 1;
        acc += Rat(num, den) / Rat(scale);
    }
    return acc;
}

std::uint8_t DyadicExpansion::digit(std::size_t i) const {
    if (i < prefix_.size()) return prefix_[i];
    if (period_.empty()) return 0;
    return period_[(i - prefix_.size()) % period_.size()];
}

std::vector<std::uint8_t> DyadicExpansion::digits(std::size_t len) const {
    std::vector<std::uint8_t> out(len);
    for (std::size_t i = 0; i < len; ++i) out[i] = digit(i);
    return out;
}

std::string DyadicExpansion::to_string() const {
    std::ostringstream os;
    os << "0.";
    for (auto d : prefix_) os << static_cast<int>(d);
    if (!period_.empty()) {
        os << "(";
        for (auto d : period_) os << static_cast<int>(d);
        os << ")";
    }
    return os.str();
}

DyadicExpansion DyadicExpansion::parse(const std::string& s) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '0') ++i;
    if (i >= s.size() || s[i] != '.') throw std::invalid_argument("expected '0.'");
    ++i;
    std::vector<std::uint8_t> prefix, period;
    bool in_period = false;
    for (; i < s.size(); ++i) {
        char ch = s[i];
        if (ch == '0' || ch == '1') {
            (in_period ? period : prefix).push_back(static_cast<std::uint8_t>(ch - '0'));
        } else if (ch == '(') {
            if (in_period) throw std::invalid_argument("nested period");
            in_period = true;
        } else if (ch == ')') {
            if (!in_period) throw std::invalid_argument("unmatched ')'");
            in_period = false;
            if (i + 1 != s.size()) throw std::invalid_argument("digits after the period");
        } else {
            throw std::invalid_argument("unexpected character in expansion");
        }
    }
    if (in_period) throw std::invalid_argument("unterminated period");
    return from_digits(std::move(prefix), std::move(period));
}

}  // namespace takagi
