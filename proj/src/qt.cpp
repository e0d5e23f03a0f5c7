#include "expcon/qt.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace expcon {

QTLaurent::QTLaurent(const mpq_class& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

QTLaurent::QTLaurent(long num, long den) {
    if (den == 0) throw ZeroDenominator("rational with zero denominator");
    mpq_class c(num, den);
    c.canonicalize();
    if (c != 0) terms_[{0, 0}] = c;
}

QTLaurent QTLaurent::q(int e) { return monomial(1, e, 0); }
QTLaurent QTLaurent::t(int e) { return monomial(1, 0, e); }

QTLaurent QTLaurent::monomial(const mpq_class& c, int eq, int et) {
    QTLaurent f;
    if (c != 0) f.terms_[{eq, et}] = c;
    return f;
}

bool QTLaurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0} &&
           terms_.begin()->second == 1;
}

bool QTLaurent::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{0, 0});
}

mpq_class QTLaurent::coeff(int eq, int et) const {
    auto it = terms_.find({eq, et});
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void QTLaurent::add_term(int eq, int et, const mpq_class& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.try_emplace({eq, et}, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

QTLaurent QTLaurent::operator-() const {
    QTLaurent r(*this);
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

QTLaurent& QTLaurent::operator+=(const QTLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
    return *this;
}

QTLaurent& QTLaurent::operator-=(const QTLaurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
    return *this;
}

QTLaurent operator*(const QTLaurent& a, const QTLaurent& b) {
    QTLaurent r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
    return r;
}

QTLaurent& QTLaurent::scale(const mpq_class& c) {
    if (c == 0) {
        terms_.clear();
    } else {
        for (auto& [e, v] : terms_) v *= c;
    }
    return *this;
}

QTLaurent QTLaurent::pow(unsigned k) const {
    QTLaurent r = one();
    QTLaurent base(*this);
    while (k > 0) {
        if (k & 1u) r = r * base;
        k >>= 1u;
        if (k > 0) base = base * base;
    }
    return r;
}

QTLaurent::Exponents QTLaurent::min_exponents() const {
    if (terms_.empty()) return {0, 0};
    int mq = terms_.begin()->first.first; // map is sorted by (eq, et)
    int mt = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) mt = std::min(mt, e.second);
    return {mq, mt};
}

QTLaurent::Exponents QTLaurent::max_exponents() const {
    if (terms_.empty()) return {0, 0};
    int mq = terms_.rbegin()->first.first;
    int mt = terms_.begin()->first.second;
    for (const auto& [e, c] : terms_) mt = std::max(mt, e.second);
    return {mq, mt};
}

QTLaurent QTLaurent::shifted(int dq, int dt) const {
    QTLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[{e.first + dq, e.second + dt}] = c;
    return r;
}

QTLaurent QTLaurent::exponent_scaled(int kq, int kt) const {
    QTLaurent r;
    for (const auto& [e, c] : terms_) r.terms_[{e.first * kq, e.second * kt}] = c;
    return r;
}

namespace {

mpq_class rational_pow(const mpq_class& x, int e) {
    if (e == 0) return mpq_class(1);
    if (x == 0 && e < 0) throw ZeroDenominator("0 raised to a negative power");
    mpz_class num_pow, den_pow;
    unsigned k = static_cast<unsigned>(e < 0 ? -e : e);
    mpz_pow_ui(num_pow.get_mpz_t(), x.get_num().get_mpz_t(), k);
    mpz_pow_ui(den_pow.get_mpz_t(), x.get_den().get_mpz_t(), k);
    mpq_class r(num_pow, den_pow);
    if (e < 0) r = 1 / r;
    r.canonicalize();
    return r;
}

} // namespace

mpq_class QTLaurent::eval(const mpq_class& q0, const mpq_class& t0) const {
    mpq_class acc(0);
    for (const auto& [e, c] : terms_) acc += c * rational_pow(q0, e.first) * rational_pow(t0, e.second);
    return acc;
}

// ---------------------------------------------------------------------------
// printing / parsing
// ---------------------------------------------------------------------------

namespace {

std::string monomial_string(int eq, int et) {
    std::string s;
    if (eq != 0) {
        s += 'q';
        if (eq != 1) s += '^' + std::to_string(eq);
    }
    if (et != 0) {
        if (!s.empty()) s += '*';
        s += 't';
        if (et != 1) s += '^' + std::to_string(et);
    }
    return s;
}

} // namespace

std::string QTLaurent::to_string() const {
    if (terms_.empty()) return "0";
    // canonical print order: descending total degree, then descending q-exponent
    std::vector<std::pair<Exponents, mpq_class>> v(terms_.begin(), terms_.end());
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        int da = a.first.first + a.first.second, db = b.first.first + b.first.second;
        if (da != db) return da > db;
        return a.first.first > b.first.first;
    });
    std::string s;
    bool first = true;
    for (const auto& [e, c] : v) {
        bool neg = c < 0;
        mpq_class ac = neg ? mpq_class(-c) : c;
        if (first) {
            if (neg) s += '-';
            first = false;
        } else {
            s += neg ? " - " : " + ";
        }
        std::string mono = monomial_string(e.first, e.second);
        if (mono.empty()) {
            s += ac.get_str();
        } else if (ac == 1) {
            s += mono;
        } else {
            s += ac.get_str() + "*" + mono;
        }
    }
    return s;
}

namespace {

struct TermCursor {
    const std::string& s;
    std::size_t i = 0;
    explicit TermCursor(const std::string& str) : s(str) {}
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

int parse_int(TermCursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start || (c.i == start + 1 && !std::isdigit(static_cast<unsigned char>(c.s[start]))))
        throw ParseError("expected integer at position " + std::to_string(start) + " in '" + c.s + "'");
    return std::stoi(c.s.substr(start, c.i - start));
}

mpq_class parse_rational(TermCursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == start) throw ParseError("expected number in '" + c.s + "'");
    std::string num = c.s.substr(start, c.i - start);
    if (c.i < c.s.size() && c.s[c.i] == '/') {
        ++c.i;
        std::size_t dstart = c.i;
        while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
        if (c.i == dstart) throw ParseError("expected denominator in '" + c.s + "'");
        num += '/' + c.s.substr(dstart, c.i - dstart);
    }
    mpq_class r(num);
    r.canonicalize();
    return r;
}

} // namespace

QTLaurent QTLaurent::parse(const std::string& s) {
    QTLaurent result;
    TermCursor c(s);
    if (c.done()) throw ParseError("empty polynomial string");
    bool any = false;
    while (!c.done()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            if (ch == '-') sign = -1;
            ++c.i;
        } else if (any) {
            throw ParseError("expected '+' or '-' between terms in '" + s + "'");
        }
        mpq_class coeff(1);
        int eq = 0, et = 0;
        bool saw_factor = false;
        while (true) {
            char f = c.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                coeff *= parse_rational(c);
            } else if (f == 'q' || f == 't') {
                ++c.i;
                int e = 1;
                if (c.peek() == '^') {
                    ++c.i;
                    e = parse_int(c);
                }
                (f == 'q' ? eq : et) += e;
            } else {
                if (!saw_factor) throw ParseError("expected term in '" + s + "'");
                break;
            }
            saw_factor = true;
            if (c.peek() == '*') {
                ++c.i;
            } else {
                break;
            }
        }
        result.add_term(eq, et, sign * coeff);
        any = true;
    }
    return result;
}

// ---------------------------------------------------------------------------
// exact division and gcd
// ---------------------------------------------------------------------------

QTLaurent exact_div(const QTLaurent& f, const QTLaurent& g) {
    if (g.is_zero()) throw NotDivisible("division by zero polynomial");
    if (f.is_zero()) return QTLaurent::zero();
    auto [fq, ft] = f.min_exponents();
    auto [gq, gt] = g.min_exponents();
    QTLaurent r = f.shifted(-fq, -ft);
    QTLaurent d = g.shifted(-gq, -gt);
    QTLaurent quot;
    // single-divisor division in lex order; exactness means zero remainder
    while (!r.is_zero()) {
        auto lt_r = r.terms().rbegin();
        auto lt_d = d.terms().rbegin();
        int dq = lt_r->first.first - lt_d->first.first;
        int dt = lt_r->first.second - lt_d->first.second;
        if (dq < 0 || dt < 0) throw NotDivisible("'" + g.to_string() + "' does not divide '" + f.to_string() + "'");
        mpq_class c = lt_r->second / lt_d->second;
        quot.add_term(dq, dt, c);
        r -= d * QTLaurent::monomial(c, dq, dt);
    }
    return quot.shifted(fq - gq, ft - gt);
}

namespace {

// Univariate polynomials over Q, coefficient vector by ascending degree.
using UPoly = std::vector<mpq_class>;

void utrim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly umul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    utrim(r);
    return r;
}

UPoly usub(UPoly a, const UPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), mpq_class(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    utrim(a);
    return a;
}

UPoly uscale(UPoly a, const mpq_class& c) {
    for (auto& x : a) x *= c;
    if (c == 0) a.clear();
    return a;
}

// remainder of a by b (b nonzero), standard division over Q
UPoly urem(UPoly a, const UPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        utrim(a);
    }
    return a;
}

// exact quotient a/b; callers guarantee divisibility
UPoly udiv_exact(UPoly a, const UPoly& b) {
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpq_class(0));
    while (a.size() >= b.size() && !a.empty()) {
        mpq_class c = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        utrim(a);
    }
    utrim(q);
    return q;
}

// monic gcd over Q
UPoly ugcd(UPoly a, const UPoly& b0) {
    UPoly b = b0;
    utrim(a);
    utrim(b);
    while (!b.empty()) {
        UPoly r = urem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        mpq_class lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

// Bivariate polynomial as coefficients in Q[q] indexed by t-degree.
using BPoly = std::vector<UPoly>;

void btrim(BPoly& p) {
    while (!p.empty() && p.back().empty()) p.pop_back();
}

BPoly to_bpoly(const QTLaurent& f) {
    auto [mq, mt] = f.max_exponents();
    BPoly p(static_cast<std::size_t>(mt) + 1);
    for (const auto& [e, c] : f.terms()) {
        UPoly& row = p[static_cast<std::size_t>(e.second)];
        if (row.size() <= static_cast<std::size_t>(e.first)) row.resize(e.first + 1, mpq_class(0));
        row[static_cast<std::size_t>(e.first)] = c;
    }
    for (auto& row : p) utrim(row);
    btrim(p);
    return p;
}

QTLaurent from_bpoly(const BPoly& p) {
    QTLaurent f;
    for (std::size_t et = 0; et < p.size(); ++et)
        for (std::size_t eq = 0; eq < p[et].size(); ++eq)
            f.add_term(static_cast<int>(eq), static_cast<int>(et), p[et][eq]);
    return f;
}

UPoly bcontent(const BPoly& p) {
    UPoly g;
    for (const auto& row : p)
        if (!row.empty()) g = ugcd(g.empty() ? row : g, row);
    return g;
}

BPoly bdiv_content(const BPoly& p, const UPoly& cont) {
    BPoly r(p.size());
    for (std::size_t i = 0; i < p.size(); ++i)
        if (!p[i].empty()) r[i] = udiv_exact(p[i], cont);
    return r;
}

// pseudo-remainder of a by b in the main variable t
BPoly bpseudo_rem(BPoly a, const BPoly& b) {
    const UPoly& lcb = b.back();
    while (a.size() >= b.size()) {
        btrim(a);
        if (a.size() < b.size()) break;
        const UPoly lca = a.back();
        std::size_t shift = a.size() - b.size();
        // a <- lcb*a - lca * t^shift * b; kills the leading t-term
        for (auto& row : a) row = umul(row, lcb);
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = usub(a[shift + i], umul(lca, b[i]));
        btrim(a);
    }
    return a;
}

} // namespace

QTLaurent poly_gcd(const QTLaurent& a, const QTLaurent& b) {
    if (a.is_zero() || b.is_zero()) throw Error("poly_gcd of zero polynomial");
    auto [aq, at] = a.min_exponents();
    auto [bq, bt] = b.min_exponents();
    int gq = std::min(aq < 0 ? 0 : aq, bq < 0 ? 0 : bq);
    int gt = std::min(at < 0 ? 0 : at, bt < 0 ? 0 : bt);
    // strip monomial factors entirely; gcd carries the common monomial part
    BPoly pa = to_bpoly(a.shifted(-aq, -at));
    BPoly pb = to_bpoly(b.shifted(-bq, -bt));
    UPoly ca = bcontent(pa), cb = bcontent(pb);
    BPoly ppa = bdiv_content(pa, ca), ppb = bdiv_content(pb, cb);
    if (ppa.size() < ppb.size()) std::swap(ppa, ppb);
    // primitive PRS in t
    while (!ppb.empty()) {
        BPoly r = bpseudo_rem(ppa, ppb);
        btrim(r);
        if (!r.empty()) r = bdiv_content(r, bcontent(r));
        ppa = std::move(ppb);
        ppb = std::move(r);
    }
    UPoly cg = ugcd(ca, cb);
    BPoly g(ppa.size());
    for (std::size_t i = 0; i < ppa.size(); ++i)
        if (!ppa[i].empty()) g[i] = umul(ppa[i], cg);
    QTLaurent result = from_bpoly(g).shifted(gq, gt);
    // normalize: integer-primitive with positive leading coefficient
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : result.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    mpq_class scale_by(den_lcm, num_gcd);
    scale_by.canonicalize();
    if (result.terms().rbegin()->second < 0) scale_by = -scale_by;
    result.scale(scale_by);
    return result;
}

// ---------------------------------------------------------------------------
// substitution
// ---------------------------------------------------------------------------

QTLaurent substitute_poly(const QTLaurent& f, const QTLaurent& q_image, const QTLaurent& t_image) {
    QTFraction r = substitute(f, QTFraction(q_image), QTFraction(t_image));
    return r.as_polynomial();
}

QTFraction substitute(const QTLaurent& f, const QTFraction& q_image, const QTFraction& t_image) {
    QTFraction acc = QTFraction::zero();
    std::map<int, QTFraction> q_pows, t_pows;
    auto power = [](std::map<int, QTFraction>& cache, const QTFraction& base, int e) {
        auto it = cache.find(e);
        if (it != cache.end()) return it->second;
        QTFraction p = base.pow(e);
        cache.emplace(e, p);
        return p;
    };
    for (const auto& [e, c] : f.terms()) {
        QTFraction term = QTFraction(mpq_class(c));
        if (e.first != 0) term *= power(q_pows, q_image, e.first);
        if (e.second != 0) term *= power(t_pows, t_image, e.second);
        acc += term;
    }
    return acc;
}

QTFraction substitute(const QTFraction& f, const QTFraction& q_image, const QTFraction& t_image) {
    QTFraction n = substitute(f.num(), q_image, t_image);
    QTFraction d = substitute(f.den(), q_image, t_image);
    if (d.is_zero()) throw ZeroDenominator("denominator vanishes under substitution");
    return n / d;
}

// ---------------------------------------------------------------------------
// q-integers
// ---------------------------------------------------------------------------

QTLaurent q_integer(int k) {
    if (k < 1) throw Error("q_integer requires k >= 1");
    QTLaurent r;
    for (int i = 0; i < k; ++i) r.add_term(i, 0, 1);
    return r;
}

QTLaurent q_factorial(int k) {
    if (k < 1) throw Error("q_factorial requires k >= 1");
    QTLaurent r = QTLaurent::one();
    for (int i = 2; i <= k; ++i) r = r * q_integer(i);
    return r;
}

QTLaurent pi_factorial(const std::vector<int>& pi) {
    QTLaurent r = QTLaurent::one();
    for (int part : pi) {
        if (part < 1) throw BadComposition("composition parts must be positive");
        r = r * q_factorial(part);
    }
    return r;
}

// ---------------------------------------------------------------------------
// QTFraction
// ---------------------------------------------------------------------------

QTFraction::QTFraction(const QTLaurent& n, const QTLaurent& d) : num_(n), den_(d) {
    if (den_.is_zero()) throw ZeroDenominator("fraction with zero denominator");
    normalize();
}

void QTFraction::normalize() {
    if (num_.is_zero()) {
        den_ = QTLaurent::one();
        return;
    }
    // shift the denominator's lowest exponents to (0,0)
    auto [dq, dt] = den_.min_exponents();
    if (dq != 0 || dt != 0) {
        den_ = den_.shifted(-dq, -dt);
        num_ = num_.shifted(-dq, -dt);
    }
    if (!den_.is_monomial()) {
        auto [nq, nt] = num_.min_exponents();
        QTLaurent g = poly_gcd(num_.shifted(-nq, -nt), den_);
        if (!g.is_constant()) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
            auto [eq2, et2] = den_.min_exponents();
            if (eq2 != 0 || et2 != 0) {
                den_ = den_.shifted(-eq2, -et2);
                num_ = num_.shifted(-eq2, -et2);
            }
        }
    }
    // make the denominator integer-primitive with positive leading coefficient
    mpz_class num_gcd(0), den_lcm(1);
    for (const auto& [e, c] : den_.terms()) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    mpq_class scale_by(den_lcm, num_gcd);
    scale_by.canonicalize();
    if (den_.terms().rbegin()->second < 0) scale_by = -scale_by;
    if (scale_by != 1) {
        den_.scale(scale_by);
        num_.scale(scale_by);
    }
}

QTFraction QTFraction::operator-() const {
    QTFraction r(*this);
    r.num_ = -r.num_;
    return r;
}

QTFraction operator+(const QTFraction& a, const QTFraction& b) {
    if (a.den_ == b.den_) return QTFraction(a.num_ + b.num_, a.den_);
    return QTFraction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

QTFraction operator-(const QTFraction& a, const QTFraction& b) {
    if (a.den_ == b.den_) return QTFraction(a.num_ - b.num_, a.den_);
    return QTFraction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

QTFraction operator*(const QTFraction& a, const QTFraction& b) {
    return QTFraction(a.num_ * b.num_, a.den_ * b.den_);
}

QTFraction operator/(const QTFraction& a, const QTFraction& b) {
    if (b.is_zero()) throw ZeroDenominator("division by zero fraction");
    return QTFraction(a.num_ * b.den_, a.den_ * b.num_);
}

QTFraction QTFraction::inverse() const {
    if (is_zero()) throw ZeroDenominator("inverse of zero");
    return QTFraction(den_, num_);
}

QTFraction QTFraction::pow(int k) const {
    if (k == 0) return one();
    if (k < 0) return inverse().pow(-k);
    QTFraction r = one();
    QTFraction base(*this);
    unsigned e = static_cast<unsigned>(k);
    while (e > 0) {
        if (e & 1u) r *= base;
        e >>= 1u;
        if (e > 0) base *= base;
    }
    return r;
}

bool operator==(const QTFraction& a, const QTFraction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
}

QTLaurent QTFraction::as_polynomial() const {
    if (den_.is_one()) return num_;
    return exact_div(num_, den_);
}

bool QTFraction::is_polynomial() const {
    try {
        (void)as_polynomial();
        return true;
    } catch (const NotDivisible&) {
        return false;
    }
}

mpq_class QTFraction::eval(const mpq_class& q0, const mpq_class& t0) const {
    mpq_class d = den_.eval(q0, t0);
    if (d == 0) throw ZeroDenominator("denominator vanishes at evaluation point");
    return num_.eval(q0, t0) / d;
}

std::string QTFraction::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QTFraction QTFraction::parse(const std::string& s) {
    std::size_t first = s.find_first_not_of(" \t");
    if (first == std::string::npos) throw ParseError("empty fraction string");
    if (s[first] != '(') return QTFraction(QTLaurent::parse(s));
    int depth = 0;
    std::size_t close = std::string::npos;
    for (std::size_t i = first; i < s.size(); ++i) {
        if (s[i] == '(') ++depth;
        if (s[i] == ')' && --depth == 0) {
            close = i;
            break;
        }
    }
    if (close == std::string::npos) throw ParseError("unbalanced parentheses in '" + s + "'");
    std::size_t slash = s.find_first_not_of(" \t", close + 1);
    if (slash == std::string::npos || s[slash] != '/')
        throw ParseError("expected '/' in fraction '" + s + "'");
    std::size_t open2 = s.find_first_not_of(" \t", slash + 1);
    if (open2 == std::string::npos || s[open2] != '(' || s.back() != ')')
        throw ParseError("expected '(den)' in fraction '" + s + "'");
    QTLaurent n = QTLaurent::parse(s.substr(first + 1, close - first - 1));
    QTLaurent d = QTLaurent::parse(s.substr(open2 + 1, s.size() - open2 - 2));
    return QTFraction(n, d);
}

} // namespace expcon
