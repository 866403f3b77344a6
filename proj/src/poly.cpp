#include "a2w/poly.hpp"

#include "a2w/errors.hpp"

#include <sstream>

namespace a2w {

Poly::Poly(const Rat& constant) {
    if (constant != 0) c_.push_back(constant);
}

Poly::Poly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly::Poly(std::initializer_list<Rat> coeffs) : c_(coeffs) { trim(); }

Poly Poly::variable() { return Poly({Rat(0), Rat(1)}); }

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rat& Poly::coeff(int k) const {
    static const Rat zero = 0;
    if (k < 0 || k >= static_cast<int>(c_.size())) return zero;
    return c_[static_cast<std::size_t>(k)];
}

Rat Poly::leading() const {
    return c_.empty() ? Rat(0) : c_.back();
}

Rat Poly::eval(const Rat& x) const {
    Rat v = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Rat> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rat(k) * c_[k];
    return Poly(std::move(d));
}

Poly Poly::compose(const Poly& inner) const {
    Poly r;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * inner + Poly(*it);
    return r;
}

Poly Poly::operator-() const {
    std::vector<Rat> d(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) d[k] = -c_[k];
    return Poly(std::move(d));
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Rat> d(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(d));
}

Poly operator*(const Rat& s, const Poly& p) {
    if (s == 0) return Poly();
    std::vector<Rat> d(p.c_.size());
    for (std::size_t k = 0; k < p.c_.size(); ++k) d[k] = s * p.c_[k];
    return Poly(std::move(d));
}

Poly Poly::divided_by(const Rat& s) const {
    if (s == 0) throw InvalidParameter("polynomial division by zero scalar");
    return Rat(1) / s * *this;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rat& ck = coeff(k);
        if (ck == 0) continue;
        if (!first) os << (ck > 0 ? " + " : " - ");
        else if (ck < 0) os << "-";
        Rat mag = ck > 0 ? ck : Rat(-ck);
        if (k == 0 || mag != 1) os << rat_to_string(mag);
        if (k > 0) {
            if (mag != 1) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
        first = false;
    }
    return os.str();
}

Poly interpolate_quadratic(const Rat& v0, const Rat& v1, const Rat& vlead) {
    return Poly({v0, v1 - v0 - vlead, vlead});
}

}  // namespace a2w
