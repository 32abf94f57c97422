#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curveinv/numeric.hpp"

namespace curveinv {

/// Exponent vector of a monomial x^a * y^b.
struct ExpPair {
    long long a = 0;
    long long b = 0;

    friend bool operator==(const ExpPair& lhs, const ExpPair& rhs) {
        return lhs.a == rhs.a && lhs.b == rhs.b;
    }
    friend ExpPair operator+(const ExpPair& lhs, const ExpPair& rhs) {
        return {lhs.a + rhs.a, lhs.b + rhs.b};
    }
};

/// Graded lexicographic order: total degree first, then the x exponent.
struct GradedLexLess {
    bool operator()(const ExpPair& lhs, const ExpPair& rhs) const {
        if (lhs.a + lhs.b != rhs.a + rhs.b) return lhs.a + lhs.b < rhs.a + rhs.b;
        if (lhs.a != rhs.a) return lhs.a < rhs.a;
        return lhs.b < rhs.b;
    }
};

/// Integer 2x2 exponent matrix acting on monomials.
///
/// Columns are the exponent vectors of the images of x and y, so the map reads
/// (x, y) -> (x^m11 * y^m21, x^m12 * y^m22).  Determinant +-1 makes the induced
/// substitution a ring automorphism of the Laurent ring.
class MonomialMap {
public:
    MonomialMap(long long m11, long long m12, long long m21, long long m22)
        : m11_(m11), m12_(m12), m21_(m21), m22_(m22) {
        if (determinant() == 0) throw std::domain_error("monomial map must have nonzero determinant");
    }

    static MonomialMap identity() { return {1, 0, 0, 1}; }

    static MonomialMap from_columns(ExpPair image_of_x, ExpPair image_of_y) {
        return {image_of_x.a, image_of_y.a, image_of_x.b, image_of_y.b};
    }

    long long determinant() const { return m11_ * m22_ - m12_ * m21_; }
    bool unimodular() const { return determinant() == 1 || determinant() == -1; }

    ExpPair apply(const ExpPair& e) const {
        return {m11_ * e.a + m12_ * e.b, m21_ * e.a + m22_ * e.b};
    }

    /// Exact integer inverse; only defined for unimodular maps.
    MonomialMap inverse() const {
        long long det = determinant();
        if (det != 1 && det != -1)
            throw std::domain_error("monomial map is not invertible over the integers");
        return {det * m22_, det * -m12_, det * -m21_, det * m11_};
    }

    long long m11() const { return m11_; }
    long long m12() const { return m12_; }
    long long m21() const { return m21_; }
    long long m22() const { return m22_; }

    friend bool operator==(const MonomialMap& lhs, const MonomialMap& rhs) {
        return lhs.m11_ == rhs.m11_ && lhs.m12_ == rhs.m12_ && lhs.m21_ == rhs.m21_ &&
               lhs.m22_ == rhs.m22_;
    }

private:
    long long m11_, m12_, m21_, m22_;
};

/// Exact Laurent polynomial in two variables with arbitrary-precision integer
/// coefficients.  Zero coefficients are never stored; the zero polynomial is
/// the empty term map.  Values are immutable in spirit: all operations return
/// new polynomials.
class LaurentPoly2 {
public:
    using TermMap = std::map<ExpPair, BigInt, GradedLexLess>;

    LaurentPoly2() = default;
    explicit LaurentPoly2(std::string xname, std::string yname)
        : xname_(std::move(xname)), yname_(std::move(yname)) {}

    static LaurentPoly2 zero() { return LaurentPoly2{}; }

    static LaurentPoly2 constant(BigInt c) { return monomial(0, 0, std::move(c)); }

    static LaurentPoly2 monomial(long long a, long long b, BigInt c) {
        LaurentPoly2 p;
        if (c != 0) p.terms_[{a, b}] = std::move(c);
        return p;
    }

    static LaurentPoly2 var_x() { return monomial(1, 0, 1); }
    static LaurentPoly2 var_y() { return monomial(0, 1, 1); }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    const std::string& xname() const { return xname_; }
    const std::string& yname() const { return yname_; }

    LaurentPoly2 with_names(std::string xname, std::string yname) const {
        LaurentPoly2 p = *this;
        p.xname_ = std::move(xname);
        p.yname_ = std::move(yname);
        return p;
    }

    BigInt coeff(long long a, long long b) const {
        auto it = terms_.find({a, b});
        return it == terms_.end() ? BigInt(0) : it->second;
    }

    /// Exponent pairs carrying nonzero coefficients, in graded-lex order.
    std::vector<ExpPair> support() const {
        std::vector<ExpPair> s;
        s.reserve(terms_.size());
        for (const auto& [e, c] : terms_) s.push_back(e);
        return s;
    }

    long long min_deg_x() const { return extremal_exp(true, true); }
    long long max_deg_x() const { return extremal_exp(true, false); }
    long long min_deg_y() const { return extremal_exp(false, true); }
    long long max_deg_y() const { return extremal_exp(false, false); }

    friend LaurentPoly2 operator+(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
        LaurentPoly2 out = lhs;
        for (const auto& [e, c] : rhs.terms_) out.add_term(e, c);
        return out;
    }

    friend LaurentPoly2 operator-(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
        LaurentPoly2 out = lhs;
        for (const auto& [e, c] : rhs.terms_) out.add_term(e, -c);
        return out;
    }

    LaurentPoly2 operator-() const {
        LaurentPoly2 out = *this;
        for (auto& [e, c] : out.terms_) c = -c;
        return out;
    }

    friend LaurentPoly2 operator*(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
        LaurentPoly2 out;
        out.xname_ = lhs.xname_;
        out.yname_ = lhs.yname_;
        for (const auto& [e1, c1] : lhs.terms_)
            for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
        return out;
    }

    friend bool operator==(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
        return lhs.terms_ == rhs.terms_;
    }

    /// Replaces each monomial by its image under the exponent map; for a
    /// unimodular map this is the ring isomorphism of the Laurent ring induced
    /// by the corresponding birational monomial change of variables.
    LaurentPoly2 substitute_monomial(const MonomialMap& m) const {
        LaurentPoly2 out;
        out.xname_ = xname_;
        out.yname_ = yname_;
        for (const auto& [e, c] : terms_) out.add_term(m.apply(e), c);
        return out;
    }

    /// Divides out the monomial-unit content: shifts exponents so both minimal
    /// degrees are zero and flips the sign so the graded-lex leading
    /// coefficient is positive.
    LaurentPoly2 unit_normal_form() const {
        if (is_zero()) return *this;
        long long sa = min_deg_x(), sb = min_deg_y();
        LaurentPoly2 out;
        out.xname_ = xname_;
        out.yname_ = yname_;
        bool negate = terms_.rbegin()->second < 0;
        for (const auto& [e, c] : terms_) out.terms_[{e.a - sa, e.b - sb}] = negate ? -c : c;
        return out;
    }

    friend bool equal_up_to_monomial_unit(const LaurentPoly2& lhs, const LaurentPoly2& rhs) {
        return lhs.unit_normal_form() == rhs.unit_normal_form();
    }

    /// Canonical display: terms in descending graded-lex order, `*` between
    /// factors, exponents after `^`.  parse() reads this form back exactly.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string out;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const BigInt& c = it->second;
            bool neg = c < 0;
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            out += term_string(it->first, neg ? BigInt(-c) : c);
        }
        return out;
    }

    static LaurentPoly2 parse(const std::string& text);

private:
    void add_term(const ExpPair& e, const BigInt& c) {
        if (c == 0) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_[e] = c;
        } else {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    long long extremal_exp(bool x_axis, bool minimum) const {
        if (terms_.empty()) throw std::domain_error("zero polynomial has no degrees");
        bool first = true;
        long long best = 0;
        for (const auto& [e, c] : terms_) {
            long long v = x_axis ? e.a : e.b;
            if (first || (minimum ? v < best : v > best)) best = v;
            first = false;
        }
        return best;
    }

    std::string term_string(const ExpPair& e, const BigInt& abs_coeff) const {
        std::vector<std::string> parts;
        if (abs_coeff != 1 || (e.a == 0 && e.b == 0)) parts.push_back(abs_coeff.str());
        if (e.a != 0) parts.push_back(e.a == 1 ? xname_ : xname_ + "^" + std::to_string(e.a));
        if (e.b != 0) parts.push_back(e.b == 1 ? yname_ : yname_ + "^" + std::to_string(e.b));
        std::string out;
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i > 0) out += "*";
            out += parts[i];
        }
        return out;
    }

    TermMap terms_;
    std::string xname_ = "x";
    std::string yname_ = "y";
};

namespace detail {

class PolyTextReader {
public:
    explicit PolyTextReader(const std::string& text) : text_(text) {}

    LaurentPoly2 read() {
        LaurentPoly2 out;
        skip_ws();
        if (eof()) throw ParseError("empty polynomial text");
        bool first = true;
        while (true) {
            int sign = 1;
            if (first) {
                if (peek() == '+' || peek() == '-') {
                    if (get() == '-') sign = -1;
                    skip_ws();
                }
            } else {
                char op = get();
                if (op != '+' && op != '-')
                    throw ParseError(std::string("expected '+' or '-' before '") + op + "'");
                sign = op == '-' ? -1 : 1;
                skip_ws();
            }
            out = out + read_term(sign);
            skip_ws();
            if (eof()) break;
            first = false;
        }
        return out;
    }

private:
    LaurentPoly2 read_term(int sign) {
        BigInt coeff = sign;
        long long ea = 0, eb = 0;
        bool saw_factor = false;
        while (true) {
            if (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
                coeff *= read_integer();
                saw_factor = true;
            } else if (!eof() && (peek() == 'x' || peek() == 'y')) {
                char v = get();
                long long e = 1;
                if (!eof() && peek() == '^') {
                    get();
                    e = read_signed_exponent();
                }
                (v == 'x' ? ea : eb) += e;
                saw_factor = true;
            } else {
                break;
            }
            std::size_t mark = pos_;
            skip_ws();
            if (!eof() && peek() == '*') {
                get();
                skip_ws();
                if (eof() || (!std::isdigit(static_cast<unsigned char>(peek())) && peek() != 'x' &&
                              peek() != 'y'))
                    throw ParseError("dangling '*' in polynomial text");
            } else if (!eof() && (peek() == 'x' || peek() == 'y' ||
                                  std::isdigit(static_cast<unsigned char>(peek())))) {
                // implicit product, e.g. "2x" or "x^3y^2"
            } else {
                pos_ = mark;
                break;
            }
        }
        if (!saw_factor) throw ParseError("expected a term in polynomial text");
        return LaurentPoly2::monomial(ea, eb, coeff);
    }

    BigInt read_integer() {
        std::string digits;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) digits += get();
        if (digits.empty()) throw ParseError("expected an integer");
        return BigInt(digits);
    }

    long long read_signed_exponent() {
        long long sign = 1;
        if (!eof() && (peek() == '+' || peek() == '-'))
            if (get() == '-') sign = -1;
        if (eof() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected an integer exponent after '^'");
        long long v = 0;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > (1LL << 40)) throw ParseError("exponent out of range");
        }
        return sign * v;
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char get() { return text_[pos_++]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    const std::string& text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline LaurentPoly2 LaurentPoly2::parse(const std::string& text) {
    return detail::PolyTextReader(text).read();
}

}  // namespace curveinv
