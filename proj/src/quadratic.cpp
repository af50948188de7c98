#include "hfdlab/quadratic.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>

namespace hfdlab {

namespace {

long long isqrt_ll(long long n) {
    if (n < 0) return -1;
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

void check_same_ring(const QuadraticInteger& x, const QuadraticInteger& y) {
    if (x.d != y.d) throw IncompatibleRingError("radicands differ");
}

// Nonunit divisors of v, one representative per pair {y, -y}.
std::vector<QuadraticInteger> nonunit_divisors(const QuadraticInteger& v) {
    std::vector<QuadraticInteger> out;
    const long long n = qi_norm(v);
    for (long long m = 2; m <= n; ++m) {
        if (n % m != 0) continue;
        for (const auto& y : norm_representations(m, v.d)) {
            if (qi_divides(y, v)) out.push_back(y);
        }
    }
    return out;
}

QuadraticPolynomial poly_neg(const QuadraticPolynomial& p) {
    QuadraticPolynomial out = p;
    for (auto& c : out.coefficients) c = qi_neg(c);
    return out;
}

bool polys_associated(const QuadraticPolynomial& p, const QuadraticPolynomial& q) {
    return p == q || p == poly_neg(q);
}

QuadraticPolynomial constant_poly(const QuadraticInteger& c) {
    return make_polynomial({c}, c.d);
}

} // namespace

QuadraticInteger make_quadratic(long long a, long long b, int d) {
    if (d < 2) throw InvalidParameterError("radicand must be at least 2");
    for (int p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) throw InvalidParameterError("radicand must be squarefree");
    }
    return QuadraticInteger{a, b, d};
}

long long qi_norm(const QuadraticInteger& x) { return x.a * x.a + x.d * x.b * x.b; }

QuadraticInteger qi_conj(const QuadraticInteger& x) { return {x.a, -x.b, x.d}; }

QuadraticInteger qi_neg(const QuadraticInteger& x) { return {-x.a, -x.b, x.d}; }

QuadraticInteger qi_add(const QuadraticInteger& x, const QuadraticInteger& y) {
    check_same_ring(x, y);
    return {x.a + y.a, x.b + y.b, x.d};
}

QuadraticInteger qi_sub(const QuadraticInteger& x, const QuadraticInteger& y) {
    check_same_ring(x, y);
    return {x.a - y.a, x.b - y.b, x.d};
}

QuadraticInteger qi_mul(const QuadraticInteger& x, const QuadraticInteger& y) {
    check_same_ring(x, y);
    return {x.a * y.a - x.d * x.b * y.b, x.a * y.b + y.a * x.b, x.d};
}

bool qi_is_zero(const QuadraticInteger& x) { return x.a == 0 && x.b == 0; }

bool qi_is_unit(const QuadraticInteger& x) { return qi_norm(x) == 1; }

std::optional<QuadraticInteger> qi_div(const QuadraticInteger& value,
                                       const QuadraticInteger& divisor) {
    check_same_ring(value, divisor);
    const long long n = qi_norm(divisor);
    if (n == 0) return std::nullopt;
    const QuadraticInteger num = qi_mul(value, qi_conj(divisor));
    if (num.a % n != 0 || num.b % n != 0) return std::nullopt;
    return QuadraticInteger{num.a / n, num.b / n, value.d};
}

bool qi_divides(const QuadraticInteger& divisor, const QuadraticInteger& value) {
    return qi_div(value, divisor).has_value();
}

std::vector<QuadraticInteger> norm_representations(long long n, int d) {
    if (n < 1) throw InvalidParameterError("norm must be positive");
    std::vector<QuadraticInteger> out;
    for (long long b = 0; d * b * b <= n; ++b) {
        const long long rem = n - d * b * b;
        const long long a = isqrt_ll(rem);
        if (a * a != rem) continue;
        if (b == 0) {
            out.push_back({a, 0, d});
        } else if (a == 0) {
            out.push_back({0, b, d});
        } else {
            out.push_back({a, b, d});
            out.push_back({a, -b, d});
        }
    }
    return out;
}

bool qi_is_atom(const QuadraticInteger& x) {
    const long long n = qi_norm(x);
    if (n == 0) throw ZeroOrUnitError("zero is not an atom candidate");
    if (n == 1) throw ZeroOrUnitError("units are not atom candidates");
    for (long long m = 2; m < n; ++m) {
        if (n % m != 0) continue;
        for (const auto& y : norm_representations(m, x.d)) {
            if (qi_divides(y, x)) return false;
        }
    }
    return true;
}

EqualityReport verify_atomic_equality(const std::vector<QuadraticInteger>& lhs,
                                      const std::vector<QuadraticInteger>& rhs) {
    if (lhs.empty() || rhs.empty()) {
        throw InvalidParameterError("both sides need at least one factor");
    }
    if (lhs.size() > 16 || rhs.size() > 16) {
        throw InvalidParameterError("too many factors for the sub-multiset search");
    }
    const int d = lhs.front().d;
    for (const auto& f : lhs) check_same_ring(lhs.front(), f);
    for (const auto& f : rhs) check_same_ring(lhs.front(), f);
    for (const auto* side : {&lhs, &rhs}) {
        for (const auto& f : *side) {
            if (qi_is_zero(f)) throw ZeroOrUnitError("zero factor");
            if (qi_is_unit(f)) throw ZeroOrUnitError("unit factor");
        }
    }

    EqualityReport report;
    report.lhs_length = static_cast<int>(lhs.size());
    report.rhs_length = static_cast<int>(rhs.size());
    report.balanced = report.lhs_length == report.rhs_length;

    auto product = [d](const std::vector<QuadraticInteger>& fs, unsigned mask) {
        QuadraticInteger p{1, 0, d};
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (mask & (1U << i)) p = qi_mul(p, fs[i]);
        }
        return p;
    };

    report.equal = product(lhs, (1U << lhs.size()) - 1) == product(rhs, (1U << rhs.size()) - 1);
    report.all_atoms = true;
    for (const auto* side : {&lhs, &rhs}) {
        for (const auto& f : *side) {
            if (!qi_is_atom(f)) report.all_atoms = false;
        }
    }

    report.irredundant = true;
    const unsigned lfull = (1U << lhs.size()) - 1;
    const unsigned rfull = (1U << rhs.size()) - 1;
    for (unsigned lm = 1; lm < lfull && report.irredundant; ++lm) {
        const QuadraticInteger lp = product(lhs, lm);
        for (unsigned rm = 1; rm < rfull; ++rm) {
            const QuadraticInteger rp = product(rhs, rm);
            if (lp == rp || lp == qi_neg(rp)) {
                report.irredundant = false;
                break;
            }
        }
    }
    return report;
}

QuadraticPolynomial make_polynomial(std::vector<QuadraticInteger> coefficients, int d) {
    for (const auto& c : coefficients) {
        if (c.d != d) throw IncompatibleRingError("coefficient radicand differs");
    }
    while (!coefficients.empty() && qi_is_zero(coefficients.back())) coefficients.pop_back();
    return QuadraticPolynomial{std::move(coefficients), d};
}

int poly_degree(const QuadraticPolynomial& p) {
    return static_cast<int>(p.coefficients.size()) - 1;
}

QuadraticPolynomial poly_mul(const QuadraticPolynomial& p, const QuadraticPolynomial& q) {
    if (p.d != q.d) throw IncompatibleRingError("radicands differ");
    if (p.coefficients.empty() || q.coefficients.empty()) return make_polynomial({}, p.d);
    std::vector<QuadraticInteger> out(p.coefficients.size() + q.coefficients.size() - 1,
                                      QuadraticInteger{0, 0, p.d});
    for (std::size_t i = 0; i < p.coefficients.size(); ++i) {
        for (std::size_t j = 0; j < q.coefficients.size(); ++j) {
            out[i + j] = qi_add(out[i + j], qi_mul(p.coefficients[i], q.coefficients[j]));
        }
    }
    return make_polynomial(std::move(out), p.d);
}

bool poly_is_zero(const QuadraticPolynomial& p) { return p.coefficients.empty(); }

bool poly_is_unit(const QuadraticPolynomial& p) {
    return poly_degree(p) == 0 && qi_is_unit(p.coefficients[0]);
}

bool poly_is_atom(const QuadraticPolynomial& p) {
    if (poly_is_zero(p)) throw ZeroOrUnitError("zero is not an atom candidate");
    if (poly_is_unit(p)) throw ZeroOrUnitError("units are not atom candidates");
    const int deg = poly_degree(p);
    if (deg > 2) throw InvalidParameterError("polynomial atom test limited to degree at most 2");

    if (deg == 0) return qi_is_atom(p.coefficients[0]);

    if (deg == 1) {
        const QuadraticInteger& c0 = p.coefficients[0];
        const QuadraticInteger& c1 = p.coefficients[1];
        // c0 = 0 means p = c1 * X; that is an atom only for unit c1.
        if (qi_is_zero(c0)) return qi_is_unit(c1);
        for (const auto& y : nonunit_divisors(c0)) {
            if (qi_divides(y, c1)) return false;
        }
        return true;
    }

    const QuadraticInteger& c0 = p.coefficients[0];
    const QuadraticInteger& c1 = p.coefficients[1];
    const QuadraticInteger& c2 = p.coefficients[2];
    // Constant times degree-2 cofactor: a nonunit dividing every coefficient.
    for (const auto& y : nonunit_divisors(c2)) {
        if (qi_divides(y, c1) && qi_divides(y, c0)) return false;
    }
    // x * (linear) split.
    if (qi_is_zero(c0)) return false;
    // (alpha X + beta)(gamma X + delta): alpha | c2, beta | c0, cross terms
    // must add up to c1.  Signs: the pair may be negated jointly, so alpha
    // runs over sign representatives and beta over both signs.
    std::vector<QuadraticInteger> alphas = nonunit_divisors(c2);
    alphas.push_back(QuadraticInteger{1, 0, p.d});
    std::vector<QuadraticInteger> betas;
    for (const auto& y : nonunit_divisors(c0)) {
        betas.push_back(y);
        betas.push_back(qi_neg(y));
    }
    betas.push_back(QuadraticInteger{1, 0, p.d});
    betas.push_back(QuadraticInteger{-1, 0, p.d});
    for (const auto& alpha : alphas) {
        const auto gamma = qi_div(c2, alpha);
        if (!gamma) continue;
        for (const auto& beta : betas) {
            const auto delta = qi_div(c0, beta);
            if (!delta) continue;
            if (qi_add(qi_mul(alpha, *delta), qi_mul(beta, *gamma)) == c1) return false;
        }
    }
    return true;
}

PolynomialIdentityReport verify_polynomial_identity() {
    const int d = 3;
    const QuadraticInteger one = make_quadratic(1, 0, d);
    const QuadraticInteger two = make_quadratic(2, 0, d);
    const QuadraticPolynomial ptwo = constant_poly(two);
    const QuadraticPolynomial quadratic_factor = make_polynomial({one, one, one}, d);
    const QuadraticPolynomial lin_plus =
        make_polynomial({make_quadratic(1, 1, d), two}, d);
    const QuadraticPolynomial lin_minus =
        make_polynomial({make_quadratic(1, -1, d), two}, d);

    const std::vector<QuadraticPolynomial> lhs{ptwo, ptwo, quadratic_factor};
    const std::vector<QuadraticPolynomial> rhs{lin_plus, lin_minus};

    auto product = [d](const std::vector<QuadraticPolynomial>& fs, unsigned mask) {
        QuadraticPolynomial p = constant_poly(make_quadratic(1, 0, d));
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (mask & (1U << i)) p = poly_mul(p, fs[i]);
        }
        return p;
    };

    PolynomialIdentityReport report;
    report.lhs_length = static_cast<int>(lhs.size());
    report.rhs_length = static_cast<int>(rhs.size());
    report.unbalanced = report.lhs_length != report.rhs_length;
    report.product_equal =
        product(lhs, (1U << lhs.size()) - 1) == product(rhs, (1U << rhs.size()) - 1);

    report.factors_are_atoms = true;
    for (const auto* side : {&lhs, &rhs}) {
        for (const auto& f : *side) {
            if (!poly_is_atom(f)) report.factors_are_atoms = false;
        }
    }

    report.irredundant = true;
    const unsigned lfull = (1U << lhs.size()) - 1;
    const unsigned rfull = (1U << rhs.size()) - 1;
    for (unsigned lm = 1; lm < lfull && report.irredundant; ++lm) {
        for (unsigned rm = 1; rm < rfull; ++rm) {
            if (polys_associated(product(lhs, lm), product(rhs, rm))) {
                report.irredundant = false;
                break;
            }
        }
    }

    report.two_is_bad = report.product_equal && report.factors_are_atoms &&
                        report.irredundant && report.unbalanced;
    return report;
}

namespace {

struct Scanner {
    std::string s;
    std::size_t i = 0;

    bool done() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    bool eat(char c) {
        if (!done() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    std::optional<long long> number() {
        if (done() || !std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
        long long v = 0;
        while (!done() && std::isdigit(static_cast<unsigned char>(s[i]))) {
            v = v * 10 + (s[i] - '0');
            ++i;
        }
        return v;
    }
};

std::string strip_spaces(const std::string& text) {
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

[[noreturn]] void parse_fail(const std::string& text) {
    throw InvalidParameterError("cannot parse quadratic expression '" + text + "'");
}

// Term: [INT] ['i' INT] ['X' ['^' INT]].  At least one part must appear;
// the radicand after 'i' must equal d.
struct Term {
    QuadraticInteger coefficient;
    int exponent = 0;
};

Term parse_term(Scanner& sc, int d, const std::string& original) {
    Term t;
    t.coefficient = make_quadratic(0, 0, d);
    bool have_coef = false;

    const auto lead = sc.number();
    bool lead_used = false;
    if (!sc.done() && sc.peek() == 'i') {
        ++sc.i;
        const auto rad = sc.number();
        if (!rad) parse_fail(original);
        if (*rad != d) {
            throw InvalidParameterError("radicand in '" + original + "' does not match " +
                                        std::to_string(d));
        }
        t.coefficient.b = lead.value_or(1);
        lead_used = true;
        have_coef = true;
    } else if (lead) {
        t.coefficient.a = *lead;
        lead_used = true;
        have_coef = true;
    }
    if (lead && !lead_used) parse_fail(original);

    if (sc.eat('X')) {
        t.exponent = 1;
        if (sc.eat('^')) {
            const auto e = sc.number();
            if (!e || *e < 0) parse_fail(original);
            t.exponent = static_cast<int>(*e);
        }
        if (!have_coef) {
            t.coefficient.a = 1;
            have_coef = true;
        }
    }
    if (!have_coef) parse_fail(original);
    return t;
}

std::vector<Term> parse_terms(const std::string& text, int d) {
    make_quadratic(0, 0, d); // validates the radicand once
    Scanner sc{strip_spaces(text)};
    if (sc.done()) parse_fail(text);
    std::vector<Term> terms;
    bool first = true;
    while (!sc.done()) {
        long long sign = 1;
        if (sc.eat('-')) {
            sign = -1;
        } else if (sc.eat('+')) {
            if (first) parse_fail(text);
        } else if (!first) {
            parse_fail(text);
        }
        Term t = parse_term(sc, d, text);
        t.coefficient.a *= sign;
        t.coefficient.b *= sign;
        terms.push_back(t);
        first = false;
    }
    return terms;
}

} // namespace

QuadraticInteger parse_quadratic(const std::string& text, int d) {
    QuadraticInteger out = make_quadratic(0, 0, d);
    for (const auto& t : parse_terms(text, d)) {
        if (t.exponent != 0) {
            throw InvalidParameterError("unexpected X in scalar expression '" + text + "'");
        }
        out = qi_add(out, t.coefficient);
    }
    return out;
}

QuadraticPolynomial parse_quadratic_polynomial(const std::string& text, int d) {
    std::map<int, QuadraticInteger> by_exp;
    int max_exp = 0;
    for (const auto& t : parse_terms(text, d)) {
        auto [it, inserted] = by_exp.try_emplace(t.exponent, t.coefficient);
        if (!inserted) it->second = qi_add(it->second, t.coefficient);
        max_exp = std::max(max_exp, t.exponent);
    }
    std::vector<QuadraticInteger> coeffs(static_cast<std::size_t>(max_exp) + 1,
                                         make_quadratic(0, 0, d));
    for (const auto& [e, c] : by_exp) coeffs[static_cast<std::size_t>(e)] = c;
    return make_polynomial(std::move(coeffs), d);
}

} // namespace hfdlab
