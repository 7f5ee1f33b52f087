#pragma once

#include "qkp/rational.hpp"

#include <map>
#include <stdexcept>

namespace qkp {

/// Truncated formal series in one symbol power with coefficients in C.
///
/// Window contract: powers above top() are known to be exactly zero, powers
/// in [low(), top()] are stored (absent means zero), powers below low() are
/// unknown — they were truncated away. Every product first fixes the window
/// it can guarantee and discards source terms that cannot reach it, so
/// equality is always "modulo tail": two series agree iff they agree on the
/// intersection of their known windows.
template <typename C>
class WindowSeries {
public:
    WindowSeries(int top, int depth) : top_(top), low_(top - depth + 1) {
        if (depth < 1) throw std::invalid_argument("WindowSeries: depth must be positive");
    }
    static WindowSeries with_window(int top, int low) {
        if (low > top) throw std::invalid_argument("WindowSeries: empty window");
        return WindowSeries(top, top - low + 1);
    }

    [[nodiscard]] int top() const { return top_; }
    [[nodiscard]] int low() const { return low_; }
    [[nodiscard]] int depth() const { return top_ - low_ + 1; }

    /// Highest stored nonzero power; falls back to low() for the zero series.
    [[nodiscard]] int effective_top() const { return c_.empty() ? low_ : c_.rbegin()->first; }

    [[nodiscard]] bool is_zero() const { return c_.empty(); }
    [[nodiscard]] const std::map<int, C>& coeffs() const { return c_; }

    [[nodiscard]] C coeff(int power) const {
        if (power < low_)
            throw std::logic_error("WindowSeries: coefficient below truncation window");
        auto it = c_.find(power);
        return it == c_.end() ? C{} : it->second;
    }

    void set(int power, C value) {
        if (power < low_ || power > top_)
            throw std::logic_error("WindowSeries: power outside window");
        if (value == C{}) c_.erase(power);
        else c_[power] = std::move(value);
    }

    void add(int power, const C& value) {
        if (power > top_ || power < low_) throw std::logic_error("WindowSeries: power outside window");
        auto it = c_.find(power);
        if (it == c_.end()) {
            if (!(value == C{})) c_.emplace(power, value);
            return;
        }
        it->second += value;
        if (it->second == C{}) c_.erase(it);
    }

    /// Shrinks top to the highest stored power (sound: absent slots inside
    /// the window are exact zeros). Keeps low fixed.
    void tighten() {
        if (!c_.empty()) top_ = c_.rbegin()->first;
    }

    /// Extends the window downward, asserting that the series is exact (the
    /// padded slots really are zero). Only callers that built the series from
    /// finite data may use this.
    [[nodiscard]] WindowSeries deepened(int new_low) const {
        WindowSeries out = *this;
        if (new_low < out.low_) out.low_ = new_low;
        return out;
    }

    /// Restricts the window floor upward (forgets lower slots).
    [[nodiscard]] WindowSeries restricted(int new_low) const {
        if (new_low <= low_) return *this;
        WindowSeries out = with_window(top_ < new_low ? new_low : top_, new_low);
        for (const auto& [p, v] : c_)
            if (p >= new_low) out.c_.emplace(p, v);
        out.tighten();
        return out;
    }

    friend WindowSeries operator+(const WindowSeries& a, const WindowSeries& b) {
        WindowSeries out = with_window(std::max(a.effective_top(), b.effective_top()),
                                       std::max(a.low_, b.low_));
        for (const auto& [p, v] : a.c_)
            if (p >= out.low_) out.add(p, v);
        for (const auto& [p, v] : b.c_)
            if (p >= out.low_) out.add(p, v);
        out.tighten();
        return out;
    }
    friend WindowSeries operator-(const WindowSeries& a, const WindowSeries& b) {
        return a + b.negated();
    }

    [[nodiscard]] WindowSeries negated() const {
        WindowSeries out = *this;
        for (auto& [p, v] : out.c_) v = -v;
        return out;
    }

    template <typename Scalar>
    [[nodiscard]] WindowSeries scaled(const Scalar& s) const {
        WindowSeries out = with_window(top_, low_);
        for (const auto& [p, v] : c_) {
            C sv = s * v;
            if (!(sv == C{})) out.c_.emplace(p, std::move(sv));
        }
        out.tighten();
        return out;
    }

    /// Keeps powers >= 0 (differential part). Window bounds are unchanged.
    [[nodiscard]] WindowSeries plus_part() const {
        WindowSeries out = with_window(top_, low_);
        for (const auto& [p, v] : c_)
            if (p >= 0) out.c_.emplace(p, v);
        out.tighten();
        return out;
    }

    /// Keeps powers < 0 (integral tail). Window bounds are unchanged.
    [[nodiscard]] WindowSeries minus_part() const {
        WindowSeries out = with_window(top_, low_);
        for (const auto& [p, v] : c_)
            if (p < 0) out.c_.emplace(p, v);
        out.tighten();
        return out;
    }

    /// Coefficient of the (-1) power. The window must cover it.
    [[nodiscard]] C residue() const {
        if (low_ > -1) throw std::logic_error("WindowSeries: residue below truncation window");
        return coeff(-1);
    }

    /// Equality modulo tail: agreement on every power both windows know.
    friend bool equal_mod_tail(const WindowSeries& a, const WindowSeries& b) {
        int floor = std::max(a.low_, b.low_);
        int ceil = std::max(a.effective_top(), b.effective_top());
        for (int p = floor; p <= ceil; ++p) {
            C va = p < a.low_ ? C{} : a.coeff(p);
            C vb = p < b.low_ ? C{} : b.coeff(p);
            if (!(va == vb)) return false;
        }
        return true;
    }

    /// True iff every known slot is zero.
    [[nodiscard]] bool is_zero_mod_tail() const { return c_.empty(); }

private:
    int top_;
    int low_;
    std::map<int, C> c_;
};

}  // namespace qkp
