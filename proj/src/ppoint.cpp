#include "a2w/ppoint.hpp"

#include "a2w/errors.hpp"

namespace a2w {

PPoint::PPoint(const Rat& x0, const Rat& x1, const Rat& x2) : x_{x0, x1, x2} {
    for (auto& c : x_) {
        if (c != 0) {
            Rat inv = Rat(1) / c;
            for (auto& d : x_) d *= inv;
            return;
        }
    }
    throw InvalidParameter("projective point (0:0:0)");
}

bool PPoint::on_triangle() const {
    return x_[0] == 0 || x_[2] == 0 || x_[0] == x_[2];
}

std::optional<std::pair<Rat, Rat>> PPoint::chart1() const {
    if (x_[2] == 0) return std::nullopt;
    return std::pair<Rat, Rat>{x_[0] / x_[2], x_[1] / x_[2]};
}

std::optional<std::pair<Rat, Rat>> PPoint::chart2() const {
    if (x_[0] == 0) return std::nullopt;
    return std::pair<Rat, Rat>{x_[2] / x_[0], x_[1] / x_[0]};
}

std::string PPoint::to_string() const {
    return "(" + rat_to_string(x_[0]) + " : " + rat_to_string(x_[1]) + " : " +
           rat_to_string(x_[2]) + ")";
}

MPoint::MPoint(PPoint p) : p_(std::move(p)) {
    if (p_.on_triangle())
        throw InvalidParameter("moduli point " + p_.to_string() + " lies on the anti-canonical triangle");
}

}  // namespace a2w
