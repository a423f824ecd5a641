#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>

namespace zxw {

class Phase;
using Valuation = std::map<std::string, Phase>;

// c + sum n_i a_i, c an exact multiple p/q of pi or float radians
class Phase {
public:
    Phase() = default;

    static Phase pi(std::int64_t p, std::int64_t q = 1);
    static Phase pi4(std::int64_t k) { return pi(k, 4); }
    static Phase radians(double r);
    static Phase var(const std::string& name, std::int64_t coeff = 1);

    bool is_exact() const { return exact_; }
    bool is_closed() const { return coeffs_.empty(); }
    std::int64_t num() const { return p_; }
    std::int64_t den() const { return q_; }
    const std::map<std::string, std::int64_t>& coeffs() const { return coeffs_; }

    // k with value k*pi/4, only for closed exact phases
    std::optional<int> pi4_multiple() const;
    bool is_pi4_exact() const { return pi4_multiple().has_value(); }
    double constant_radians() const;
    double to_radians() const;
    bool is_zero() const { return is_closed() && exact_ && p_ == 0; }

    Phase operator-() const;
    Phase& operator+=(const Phase& o);
    Phase& operator-=(const Phase& o) { return *this += -o; }
    Phase& operator*=(std::int64_t k);
    friend Phase operator+(Phase a, const Phase& b) { return a += b; }
    friend Phase operator-(Phase a, const Phase& b) { return a -= b; }
    friend Phase operator*(Phase a, std::int64_t k) { return a *= k; }
    friend Phase operator*(std::int64_t k, Phase a) { return a *= k; }

    // structural equality; float constants compare bitwise
    friend bool operator==(const Phase& a, const Phase& b);
    friend bool operator!=(const Phase& a, const Phase& b) { return !(a == b); }
    friend bool operator<(const Phase& a, const Phase& b);

    Phase substitute(const Valuation& v) const;
    void collect_vars(std::set<std::string>& out) const;

    std::string str() const;

private:
    void normalize();

    bool exact_ = true;
    std::int64_t p_ = 0;
    std::int64_t q_ = 1;
    double rad_ = 0.0;
    std::map<std::string, std::int64_t> coeffs_;
};

} // namespace zxw
