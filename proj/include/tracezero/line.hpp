#ifndef TRACEZERO_LINE_HPP
#define TRACEZERO_LINE_HPP

#include <optional>
#include <string>
#include <utility>

#include "tracezero/curve.hpp"

namespace tracezero {

/// Compressed representation of a T3 conjugacy class: the coefficients
/// (alpha0, alpha1) of the line y = alpha1 x + alpha0 through a point and its
/// two Frobenius conjugates, or a distinguished identity value for the
/// neutral element.
class Line {
public:
    Line() = default;  // identity
    static Line identity() { return {}; }
    static Line of(FqElem alpha0, FqElem alpha1) {
        Line l;
        l.ab_.emplace(std::move(alpha0), std::move(alpha1));
        return l;
    }

    bool is_identity() const { return !ab_.has_value(); }
    const FqElem& alpha0() const { return ab_->first; }
    const FqElem& alpha1() const { return ab_->second; }

    bool operator==(const Line& o) const {
        if (is_identity() || o.is_identity())
            return is_identity() == o.is_identity();
        return alpha0() == o.alpha0() && alpha1() == o.alpha1();
    }
    bool operator!=(const Line& o) const { return !(*this == o); }
    /// Total order so lines can key maps (identity first, then by value).
    bool operator<(const Line& o) const {
        if (is_identity() != o.is_identity()) return is_identity();
        if (is_identity()) return false;
        if (alpha0().value() != o.alpha0().value())
            return alpha0().value() < o.alpha0().value();
        return alpha1().value() < o.alpha1().value();
    }

private:
    std::optional<std::pair<FqElem, FqElem>> ab_;
};

/// Compress a trace-zero point; throws NotTraceZero otherwise.
Line compress(const Subgroup& sub, const Point& p);

/// Recover one of the three conjugate points of a line (which one is
/// unspecified); throws InvalidLine when the line is not a valid compressed
/// T3 element.
Point decompress(const Subgroup& sub, const Line& l);

Line negate_line(const Line& l);

/// True iff decompression succeeds and the point passes the trace-zero and
/// order checks.
bool validate_line(const Subgroup& sub, const Line& l);

}  // namespace tracezero

#endif
