#include "qkp/times_poly.hpp"

#include <functional>
#include <sstream>

namespace qkp {

TimesPoly TimesPoly::variable(int arity, int index, Rational coeff) {
    if (index < 0 || index >= arity) throw std::invalid_argument("TimesPoly: variable index out of range");
    TimesPoly p(arity);
    Monomial m(static_cast<std::size_t>(arity), 0);
    m[static_cast<std::size_t>(index)] = 1;
    if (!coeff.is_zero()) p.terms_.emplace(std::move(m), std::move(coeff));
    return p;
}

void TimesPoly::add_term(const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.size()) != arity_) throw std::invalid_argument("TimesPoly: arity mismatch in term");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

namespace {
void require_same_arity(const TimesPoly& a, const TimesPoly& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("TimesPoly: arity mismatch");
}
}  // namespace

TimesPoly operator+(const TimesPoly& a, const TimesPoly& b) {
    require_same_arity(a, b);
    TimesPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, c);
    return out;
}

TimesPoly operator-(const TimesPoly& a, const TimesPoly& b) {
    require_same_arity(a, b);
    TimesPoly out = a;
    for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
    return out;
}

TimesPoly TimesPoly::operator-() const {
    TimesPoly out(arity_);
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

TimesPoly operator*(const TimesPoly& a, const TimesPoly& b) {
    require_same_arity(a, b);
    TimesPoly out(a.arity_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            TimesPoly::Monomial m = ma;
            for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
            out.add_term(m, ca * cb);
        }
    return out;
}

TimesPoly operator*(const Rational& c, const TimesPoly& f) {
    TimesPoly out(f.arity_);
    if (c.is_zero()) return out;
    for (const auto& [m, v] : f.terms_) out.terms_.emplace(m, c * v);
    return out;
}

TimesPoly TimesPoly::derivative(int index) const {
    if (index < 0 || index >= arity_) throw std::invalid_argument("TimesPoly: derivative index out of range");
    TimesPoly out(arity_);
    auto idx = static_cast<std::size_t>(index);
    for (const auto& [m, c] : terms_) {
        int e = m[idx];
        if (e == 0) continue;
        Monomial d = m;
        d[idx] = e - 1;
        out.add_term(d, Rational(e) * c);
    }
    return out;
}

TimesPoly TimesPoly::shifted(const std::vector<Rational>& shift) const {
    if (static_cast<int>(shift.size()) != arity_) throw std::invalid_argument("TimesPoly: shift arity mismatch");
    TimesPoly out(arity_);
    for (const auto& [m, c] : terms_) {
        // expand prod_k (t_k + shift_k)^{m_k}
        TimesPoly term = TimesPoly::constant(arity_, c);
        for (int k = 0; k < arity_; ++k) {
            int e = m[static_cast<std::size_t>(k)];
            if (e == 0) continue;
            TimesPoly base = TimesPoly::variable(arity_, k) + TimesPoly::constant(arity_, shift[static_cast<std::size_t>(k)]);
            for (int i = 0; i < e; ++i) term = term * base;
        }
        out = out + term;
    }
    return out;
}

std::string TimesPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, coeff] : terms_) {
        Rational c = coeff;
        if (first) {
            if (c.sign() < 0) { os << "-"; c = -c; }
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
            if (c.sign() < 0) c = -c;
        }
        first = false;
        bool any_var = false;
        for (int e : m) any_var = any_var || e != 0;
        if (!any_var) {
            os << c.str();
            continue;
        }
        bool printed = false;
        if (!c.is_one()) {
            os << c.str();
            printed = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (printed) os << "*";
            os << "t" << (i + 1);
            if (m[i] != 1) os << "^" << m[i];
            printed = true;
        }
    }
    return os.str();
}

TimesPoly hirota_apply(const TimesPoly& a, const TimesPoly& b, const std::vector<int>& multi) {
    require_same_arity(a, b);
    if (static_cast<int>(multi.size()) != a.arity())
        throw std::invalid_argument("hirota_apply: multi-index arity mismatch");
    for (int m : multi)
        if (m < 0) throw std::invalid_argument("hirota_apply: negative derivative order");

    // D^m a.b = sum_{0<=alpha<=m} prod_j C(m_j,alpha_j) (-1)^{|m-alpha|}
    //           (d^alpha a)(d^{m-alpha} b)
    TimesPoly out(a.arity());
    std::vector<int> alpha(multi.size(), 0);
    auto advance = [&]() {
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            if (alpha[j] < multi[j]) {
                ++alpha[j];
                return true;
            }
            alpha[j] = 0;
        }
        return false;
    };
    while (true) {
        Rational weight(1);
        long rest = 0;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            weight *= binom_generalized(multi[j], alpha[j]);
            rest += multi[j] - alpha[j];
        }
        if (rest % 2 == 1) weight = -weight;
        TimesPoly da = a, db = b;
        for (std::size_t j = 0; j < alpha.size(); ++j) {
            for (int i = 0; i < alpha[j]; ++i) da = da.derivative(static_cast<int>(j));
            for (int i = 0; i < multi[j] - alpha[j]; ++i) db = db.derivative(static_cast<int>(j));
        }
        out = out + weight * (da * db);
        if (!advance()) break;
    }
    return out;
}

TimesPoly schur_p(int j, int arity) {
    if (j < 0) return TimesPoly(arity);  // p_j = 0 for negative index
    std::vector<TimesPoly> p;
    p.push_back(TimesPoly::constant(arity, Rational(1)));
    for (int n = 1; n <= j; ++n) {
        // n p_n = sum_{k=1}^{min(n, arity)} k t_k p_{n-k}
        TimesPoly acc(arity);
        for (int k = 1; k <= std::min(n, arity); ++k)
            acc = acc + TimesPoly::variable(arity, k - 1, Rational(k)) * p[static_cast<std::size_t>(n - k)];
        p.push_back(Rational(1, n) * acc);
    }
    return p[static_cast<std::size_t>(j)];
}

TimesPoly schur_partition(const std::vector<int>& partition, int arity) {
    const int l = static_cast<int>(partition.size());
    if (l == 0) return TimesPoly::constant(arity, Rational(1));
    // Laplace expansion of det(p_{lambda_i - i + j})_{1<=i,j<=l}; partitions
    // used here are short, so the factorial cost is irrelevant.
    std::vector<int> cols(static_cast<std::size_t>(l));
    for (int i = 0; i < l; ++i) cols[static_cast<std::size_t>(i)] = i;
    TimesPoly det(arity);
    std::vector<bool> used(static_cast<std::size_t>(l), false);
    std::vector<int> perm;
    auto parity = [](const std::vector<int>& p) {
        int inv = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            for (std::size_t j = i + 1; j < p.size(); ++j)
                if (p[i] > p[j]) ++inv;
        return inv % 2;
    };
    std::function<void()> rec = [&]() {
        if (static_cast<int>(perm.size()) == l) {
            TimesPoly prod = TimesPoly::constant(arity, Rational(parity(perm) ? -1 : 1));
            for (int i = 0; i < l; ++i) {
                int idx = partition[static_cast<std::size_t>(i)] - (i + 1) + (perm[static_cast<std::size_t>(i)] + 1);
                prod = prod * schur_p(idx, arity);
            }
            det = det + prod;
            return;
        }
        for (int c = 0; c < l; ++c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            used[static_cast<std::size_t>(c)] = true;
            perm.push_back(c);
            rec();
            perm.pop_back();
            used[static_cast<std::size_t>(c)] = false;
        }
    };
    rec();
    return det;
}

TimesPoly kp_hirota_residual(const TimesPoly& tau) {
    if (tau.arity() < 3) throw std::invalid_argument("kp_hirota_residual: arity must be >= 3");
    auto multi = [&](int a, int b, int c) {
        std::vector<int> m(static_cast<std::size_t>(tau.arity()), 0);
        m[0] = a;
        m[1] = b;
        m[2] = c;
        return m;
    };
    TimesPoly r = hirota_apply(tau, tau, multi(4, 0, 0));
    r = r + Rational(3) * hirota_apply(tau, tau, multi(0, 2, 0));
    r = r - Rational(4) * hirota_apply(tau, tau, multi(1, 0, 1));
    return r;
}

TimesPoly qtau_shift(const TimesPoly& tau, const Rational& x, const QValue& q) {
    std::vector<Rational> shift;
    shift.reserve(static_cast<std::size_t>(tau.arity()));
    Rational one_minus_q = Rational(1) - q.value();
    for (int k = 1; k <= tau.arity(); ++k) {
        Rational num = one_minus_q.pow(k) * x.pow(k);
        Rational den = Rational(k) * (Rational(1) - q.value().pow(k));
        shift.push_back(num / den);
    }
    return tau.shifted(shift);
}

}  // namespace qkp
