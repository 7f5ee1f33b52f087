#include "qkp/starcalc.hpp"

#include <sstream>

namespace qkp {

long PhaseSymbol::min_x_exp() const {
    if (terms_.empty()) throw std::logic_error("PhaseSymbol: min_x_exp of zero symbol");
    long m = terms_.begin()->first.first;
    for (const auto& [k, c] : terms_) m = std::min(m, k.first);
    return m;
}

long PhaseSymbol::max_x_exp() const {
    if (terms_.empty()) throw std::logic_error("PhaseSymbol: max_x_exp of zero symbol");
    long m = terms_.begin()->first.first;
    for (const auto& [k, c] : terms_) m = std::max(m, k.first);
    return m;
}

void PhaseSymbol::add(long xe, long pe, const Rational& c) {
    if (c.is_zero()) return;
    Key k{xe, pe};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

PhaseSymbol operator+(const PhaseSymbol& a, const PhaseSymbol& b) {
    PhaseSymbol out = a;
    for (const auto& [k, c] : b.terms_) out.add(k.first, k.second, c);
    return out;
}

PhaseSymbol operator-(const PhaseSymbol& a, const PhaseSymbol& b) {
    PhaseSymbol out = a;
    for (const auto& [k, c] : b.terms_) out.add(k.first, k.second, -c);
    return out;
}

PhaseSymbol PhaseSymbol::operator-() const {
    PhaseSymbol out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
    return out;
}

PhaseSymbol operator*(const PhaseSymbol& a, const PhaseSymbol& b) {
    PhaseSymbol out;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

PhaseSymbol operator*(const Rational& c, const PhaseSymbol& f) {
    PhaseSymbol out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : f.terms_) out.terms_.emplace(k, c * v);
    return out;
}

PhaseSymbol PhaseSymbol::dx() const {
    PhaseSymbol out;
    for (const auto& [k, c] : terms_)
        if (k.first != 0) out.add(k.first - 1, k.second, Rational(k.first) * c);
    return out;
}

PhaseSymbol PhaseSymbol::dp() const {
    PhaseSymbol out;
    for (const auto& [k, c] : terms_)
        if (k.second != 0) out.add(k.first, k.second - 1, Rational(k.second) * c);
    return out;
}

std::string PhaseSymbol::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, coeff] : terms_) {
        Rational c = coeff;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (k.first == 0 && k.second == 0) {
            os << c.str();
            continue;
        }
        bool printed = false;
        if (!c.is_one()) {
            os << c.str();
            printed = true;
        }
        if (k.first != 0) {
            if (printed) os << "*";
            os << "x";
            if (k.first != 1) os << "^" << k.first;
            printed = true;
        }
        if (k.second != 0) {
            if (printed) os << "*";
            os << "p";
            if (k.second != 1) os << "^" << k.second;
        }
    }
    return os.str();
}

namespace {

void require_x_polynomial(const PhaseSymbol& f, const char* who) {
    if (!f.is_zero() && f.min_x_exp() < 0)
        throw std::invalid_argument(std::string(who) +
                                    ": negative x powers need a truncation window; "
                                    "use the windowed momentum series instead");
}

/// sum_j (-1)^j C(s,j) (dx^j dp^{s-j} f)(dx^{s-j} dp^j g)
PhaseSymbol moyal_term(const std::vector<PhaseSymbol>& fgrid, const std::vector<PhaseSymbol>& ggrid,
                       int s) {
    // fgrid[j] = dx^j f etc.; p-derivatives applied on the fly
    PhaseSymbol acc;
    for (int j = 0; j <= s; ++j) {
        PhaseSymbol df = fgrid[static_cast<std::size_t>(j)];
        for (int t = 0; t < s - j; ++t) df = df.dp();
        PhaseSymbol dg = ggrid[static_cast<std::size_t>(s - j)];
        for (int t = 0; t < j; ++t) dg = dg.dp();
        PhaseSymbol prod = binom_generalized(s, j) * (df * dg);
        acc = (j % 2 == 0) ? acc + prod : acc - prod;
    }
    return acc;
}

std::vector<PhaseSymbol> dx_grid(const PhaseSymbol& f, int upto) {
    std::vector<PhaseSymbol> g;
    g.reserve(static_cast<std::size_t>(upto) + 1);
    g.push_back(f);
    for (int i = 1; i <= upto; ++i) g.push_back(g.back().dx());
    return g;
}

int x_degree_budget(const PhaseSymbol& f, const PhaseSymbol& g) {
    if (f.is_zero() || g.is_zero()) return 0;
    return static_cast<int>(f.max_x_exp() + g.max_x_exp());
}

}  // namespace

PhaseSymbol moyal_star(const PhaseSymbol& f, const PhaseSymbol& g, const Rational& kappa) {
    require_x_polynomial(f, "moyal_star");
    require_x_polynomial(g, "moyal_star");
    if (f.is_zero() || g.is_zero()) return PhaseSymbol();
    const int smax = x_degree_budget(f, g);
    auto fg = dx_grid(f, smax), gg = dx_grid(g, smax);
    PhaseSymbol out;
    Rational w(1);
    for (int s = 0; s <= smax; ++s) {
        if (s > 0) w *= kappa / Rational(s);
        if (w.is_zero()) break;
        out = out + w * moyal_term(fg, gg, s);
    }
    return out;
}

PhaseSymbol moyal_bracket(const PhaseSymbol& f, const PhaseSymbol& g, const Rational& kappa) {
    require_x_polynomial(f, "moyal_bracket");
    require_x_polynomial(g, "moyal_bracket");
    if (f.is_zero() || g.is_zero()) return PhaseSymbol();
    const int smax = x_degree_budget(f, g);
    auto fg = dx_grid(f, smax), gg = dx_grid(g, smax);
    PhaseSymbol out;
    // odd-order half of the star sum: sum_r kappa^{2r}/(2r+1)! T_{2r+1}(f,g)
    for (int s = 1; s <= smax; s += 2) {
        Rational w = kappa.pow(s - 1) / factorial(s);
        out = out + w * moyal_term(fg, gg, s);
    }
    return out;
}

PhaseSymbol poisson_dkp(const PhaseSymbol& f, const PhaseSymbol& g) {
    return f.dp() * g.dx() - f.dx() * g.dp();
}

PhaseSymbol circ_product(const PhaseSymbol& f, const PhaseSymbol& g, const Rational& kappa) {
    require_x_polynomial(g, "circ_product");
    PhaseSymbol out;
    PhaseSymbol df = f;
    PhaseSymbol dg = g;
    Rational w(1);
    for (int n = 0;; ++n) {
        if (n > 0) {
            df = df.dp();
            dg = dg.dx();
            w *= kappa / Rational(n);
            if (df.is_zero() || dg.is_zero()) break;
        }
        out = out + w * (df * dg);
    }
    return out;
}

PhaseSymbol circ_commutator_bracket(const PhaseSymbol& f, const PhaseSymbol& g, const Rational& kappa) {
    if (kappa.is_zero()) throw std::invalid_argument("circ_commutator_bracket: kappa must be nonzero");
    return kappa.inverse() * (circ_product(f, g, kappa) - circ_product(g, f, kappa));
}

PhaseSymbol bracket_prime_kappa(const PhaseSymbol& f, const PhaseSymbol& g, const Rational& kappa) {
    require_x_polynomial(f, "bracket_prime_kappa");
    require_x_polynomial(g, "bracket_prime_kappa");
    if (f.is_zero() || g.is_zero()) return PhaseSymbol();
    const int nmax = x_degree_budget(f, g);
    PhaseSymbol out;
    for (int k = 1; k <= nmax; k += 2) {
        Rational w = kappa.pow(k) / factorial(k);
        PhaseSymbol df = f, dg = g;
        for (int t = 0; t < k; ++t) { df = df.dp(); dg = dg.dx(); }
        PhaseSymbol ef = f, eg = g;
        for (int t = 0; t < k; ++t) { eg = eg.dp(); ef = ef.dx(); }
        out = out + w * (df * dg - eg * ef);
    }
    return out;
}

namespace {

/// Bilinear extension of a monomial phase rule q^{phase(n_f, a_g, m_f, b_g)}.
template <typename Phase>
PhaseSymbol phase_star(const PhaseSymbol& f, const PhaseSymbol& g, Phase&& phase) {
    PhaseSymbol out;
    for (const auto& [kf, cf] : f.terms())
        for (const auto& [kg, cg] : g.terms())
            out.add(kf.first + kg.first, kf.second + kg.second,
                    phase(kf.first, kf.second, kg.first, kg.second) * cf * cg);
    return out;
}

}  // namespace

PhaseSymbol qplane_star(const PhaseSymbol& f, const PhaseSymbol& g, const QValue& q) {
    return phase_star(f, g, [&](long, long n, long a, long) { return q.value().pow(-n * a); });
}

PhaseSymbol qstandard_star(const PhaseSymbol& f, const PhaseSymbol& g, const QValue& q) {
    return phase_star(f, g, [&](long, long n, long a, long) { return q.value().pow(n * a); });
}

PhaseSymbol qantistandard_star(const PhaseSymbol& f, const PhaseSymbol& g, const QValue& q) {
    return phase_star(f, g, [&](long m, long, long, long b) { return q.value().pow(-m * b); });
}

PhaseSymbol qweyl_star(const PhaseSymbol& f, const PhaseSymbol& g, const QValue& q) {
    Rational root = q.value().sqrt_exact();  // throws unless q is a rational square
    return phase_star(f, g, [&](long m, long n, long a, long b) { return root.pow(n * a - m * b); });
}

PhaseSymbol qplane_dx(const PhaseSymbol& f, const QValue& q) {
    PhaseSymbol out;
    for (const auto& [k, c] : f.terms())
        if (k.first != 0) out.add(k.first - 1, k.second, qint(k.first, q) * c);
    return out;
}

PhaseSymbol qplane_dp(const PhaseSymbol& f, const QValue& q) {
    PhaseSymbol out;
    for (const auto& [k, c] : f.terms())
        if (k.second != 0)
            out.add(k.first, k.second - 1, q.value().pow(k.first) * qint(k.second, q) * c);
    return out;
}

bool qplane_compat_check(const QValue& q) {
    PhaseSymbol x = PhaseSymbol::monomial(1, 0);
    PhaseSymbol p = PhaseSymbol::monomial(0, 1);
    for (long m = -3; m <= 3; ++m)
        for (long n = -3; n <= 3; ++n) {
            PhaseSymbol f = PhaseSymbol::monomial(m, n);
            // D_x p = q^-1 p D_x
            PhaseSymbol l1 = qplane_dx(qplane_star(p, f, q), q);
            PhaseSymbol r1 = q.value().inverse() * qplane_star(p, qplane_dx(f, q), q);
            if (l1 != r1) return false;
            // D_p x = q x D_p
            PhaseSymbol l2 = qplane_dp(qplane_star(x, f, q), q);
            PhaseSymbol r2 = q.value() * qplane_star(x, qplane_dp(f, q), q);
            if (l2 != r2) return false;
        }
    return true;
}

void TorusElement::add(long m, long n, const Rational& c) {
    if (c.is_zero()) return;
    Key k{m, n};
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

TorusElement operator+(const TorusElement& a, const TorusElement& b) {
    TorusElement out = a;
    for (const auto& [k, c] : b.terms_) out.add(k.first, k.second, c);
    return out;
}

TorusElement operator-(const TorusElement& a, const TorusElement& b) {
    TorusElement out = a;
    for (const auto& [k, c] : b.terms_) out.add(k.first, k.second, -c);
    return out;
}

TorusElement operator*(const Rational& c, const TorusElement& f) {
    TorusElement out;
    if (c.is_zero()) return out;
    for (const auto& [k, v] : f.terms_) out.terms_.emplace(k, c * v);
    return out;
}

std::string TorusElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, coeff] : terms_) {
        Rational c = coeff;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        if (k.first == 0 && k.second == 0) {
            os << c.str();
            continue;
        }
        bool printed = false;
        if (!c.is_one()) { os << c.str(); printed = true; }
        if (k.first != 0) {
            if (printed) os << "*";
            os << "z";
            if (k.first != 1) os << "^" << k.first;
            printed = true;
        }
        if (k.second != 0) {
            if (printed) os << "*";
            os << "zeta";
            if (k.second != 1) os << "^" << k.second;
        }
    }
    return os.str();
}

void FormalLambdaSeries::add(int k, const TorusElement& t) {
    if (k < 0 || k > order_) return;  // beyond stored order
    coeffs_[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)] + t;
}

bool FormalLambdaSeries::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

FormalLambdaSeries operator+(const FormalLambdaSeries& a, const FormalLambdaSeries& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("FormalLambdaSeries: order mismatch");
    FormalLambdaSeries out(a.order_);
    for (int k = 0; k <= a.order_; ++k)
        out.coeffs_[static_cast<std::size_t>(k)] =
            a.coeffs_[static_cast<std::size_t>(k)] + b.coeffs_[static_cast<std::size_t>(k)];
    return out;
}

FormalLambdaSeries operator-(const FormalLambdaSeries& a, const FormalLambdaSeries& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("FormalLambdaSeries: order mismatch");
    FormalLambdaSeries out(a.order_);
    for (int k = 0; k <= a.order_; ++k)
        out.coeffs_[static_cast<std::size_t>(k)] =
            a.coeffs_[static_cast<std::size_t>(k)] - b.coeffs_[static_cast<std::size_t>(k)];
    return out;
}

FormalLambdaSeries sine_bracket(const TorusElement& a, const TorusElement& b, int S) {
    FormalLambdaSeries out(2 * S);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            long w = ka.second * kb.first - ka.first * kb.second;  // n a' - m b'
            if (w == 0) continue;
            // (1/lambda) Sin(lambda w) = sum_r (-1)^r w^{2r+1} lambda^{2r}/(2r+1)!
            Rational wr(w);
            Rational coeff = wr;
            for (int r = 0; 2 * r <= 2 * S; ++r) {
                if (r > 0) coeff = -coeff * wr * wr / Rational((2 * r) * (2 * r + 1));
                out.add(2 * r, TorusElement::monomial(ka.first + kb.first, ka.second + kb.second,
                                                      ca * cb * coeff));
            }
        }
    return out;
}

FormalLambdaSeries sine_bracket(const FormalLambdaSeries& a, const TorusElement& b, int S) {
    FormalLambdaSeries out(2 * S);
    for (int k = 0; k <= a.order(); ++k) {
        if (a.coeff(k).is_zero()) continue;
        FormalLambdaSeries partial = sine_bracket(a.coeff(k), b, S);
        for (int r = 0; r + k <= 2 * S; ++r) out.add(r + k, partial.coeff(r));
    }
    return out;
}

bool sine_jacobi_check(const TorusElement& f, const TorusElement& g, const TorusElement& h, int S) {
    FormalLambdaSeries sum = sine_bracket(sine_bracket(f, g, S), h, S) +
                             sine_bracket(sine_bracket(h, f, S), g, S) +
                             sine_bracket(sine_bracket(g, h, S), f, S);
    return sum.is_zero();
}

PhaseSymbol apply_star(StarProduct star, const PhaseSymbol& f, const PhaseSymbol& g,
                       const Rational& kappa, const QValue& q) {
    switch (star) {
        case StarProduct::moyal: return moyal_star(f, g, kappa);
        case StarProduct::qplane: return qplane_star(f, g, q);
        case StarProduct::qweyl: return qweyl_star(f, g, q);
        case StarProduct::qstandard: return qstandard_star(f, g, q);
        case StarProduct::qantistandard: return qantistandard_star(f, g, q);
        case StarProduct::circ: return circ_product(f, g, kappa);
    }
    throw std::logic_error("apply_star: unknown product");
}

bool associativity_check(StarProduct star, const PhaseSymbol& f, const PhaseSymbol& g,
                         const PhaseSymbol& h, const Rational& kappa, const QValue& q) {
    PhaseSymbol l = apply_star(star, apply_star(star, f, g, kappa, q), h, kappa, q);
    PhaseSymbol r = apply_star(star, f, apply_star(star, g, h, kappa, q), kappa, q);
    return l == r;
}

bool jacobi_check(BracketKind bracket, const PhaseSymbol& f, const PhaseSymbol& g,
                  const PhaseSymbol& h, const Rational& kappa) {
    auto br = [&](const PhaseSymbol& a, const PhaseSymbol& b) {
        switch (bracket) {
            case BracketKind::moyal: return moyal_bracket(a, b, kappa);
            case BracketKind::poisson: return poisson_dkp(a, b);
            case BracketKind::circ_commutator: return circ_commutator_bracket(a, b, kappa);
        }
        throw std::logic_error("jacobi_check: unknown bracket");
    };
    PhaseSymbol sum = br(br(f, g), h) + br(br(h, f), g) + br(br(g, h), f);
    return sum.is_zero();
}

bool classical_limit_check(const PhaseSymbol& f, const PhaseSymbol& g) {
    return moyal_bracket(f, g, Rational(0)) == poisson_dkp(f, g);
}

}  // namespace qkp
