#pragma once

#include "a2w/rat.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>

namespace a2w {

// Projective point of P^2 in canonical form: the first nonzero coordinate
// equals 1, so equality of representatives is plain field equality.
class PPoint {
public:
    PPoint(const Rat& x0, const Rat& x1, const Rat& x2);
    explicit PPoint(const std::array<Rat, 3>& x) : PPoint(x[0], x[1], x[2]) {}

    const Rat& operator[](int i) const { return x_[i]; }
    const std::array<Rat, 3>& coords() const { return x_; }

    friend bool operator==(const PPoint&, const PPoint&) = default;

    // On the anti-canonical triangle x0 (x0 - x2) x2 = 0?
    bool on_triangle() const;

    // Chart views of a moduli point: (q,p) = (x0/x2, x1/x2) when x2 != 0,
    // (q',p') = (x2/x0, x1/x0) when x0 != 0. Off the triangle both apply and
    // q' = 1/q, p' = p/q.
    std::optional<std::pair<Rat, Rat>> chart1() const;
    std::optional<std::pair<Rat, Rat>> chart2() const;

    std::string to_string() const;

private:
    std::array<Rat, 3> x_;
};

inline PPoint point_from_chart1(const Rat& q, const Rat& p) { return PPoint(q, p, 1); }

// A point of M(nu) ~ S_nu minus the anti-canonical triangle. Construction
// rejects on-triangle points, so q != 0,1 in chart 1 and q' != 0,1 in chart 2.
class MPoint {
public:
    explicit MPoint(PPoint p);
    MPoint(const Rat& q, const Rat& p) : MPoint(PPoint(q, p, 1)) {}

    const PPoint& point() const { return p_; }
    std::pair<Rat, Rat> chart1() const { return *p_.chart1(); }
    std::pair<Rat, Rat> chart2() const { return *p_.chart2(); }

    friend bool operator==(const MPoint&, const MPoint&) = default;

private:
    PPoint p_;
};

}  // namespace a2w
