#include "ncplane/curvezoo.hpp"

namespace ncplane {

std::string to_string(QuadricTag tag) {
    switch (tag) {
        case QuadricTag::Smooth: return "Smooth";
        case QuadricTag::QuantumPlane: return "QuantumPlane";
        case QuadricTag::TwoLines: return "TwoLines";
        case QuadricTag::DoubleLine: return "DoubleLine";
        case QuadricTag::SimpleLine: return "SimpleLine";
        case QuadricTag::Weyl: return "Weyl";
        case QuadricTag::AffinePlane: return "AffinePlane";
    }
    return "?";
}

NCPoly subst_generators(const NCPoly& f, const std::vector<NCPoly>& images) {
    if (images.size() != static_cast<std::size_t>(f.generators()))
        throw precondition_error("one image per generator required");
    const int m = images.empty() ? f.generators() : images.front().generators();
    const ParamList& ctx = images.empty() ? f.params() : images.front().params();
    NCPoly acc(m, ctx);
    for (const auto& [w, c] : f.terms()) {
        NCPoly prod = NCPoly::constant(m, ctx, Rational(1));
        for (int letter : w) prod *= images[static_cast<std::size_t>(letter)];
        acc += prod.scaled(c.params() == ctx ? c : c.lift_to(ctx));
    }
    return acc;
}

namespace {

/// The quadric with the given coefficients as an exact NCPoly (no symbols).
NCPoly quadric_poly(const Rational& l1, const Rational& l2, const Rational& delta,
                    const Rational& e, const Rational& f, const Rational& g) {
    const ParamList none;
    const NCPoly x = NCPoly::generator(2, none, 0), y = NCPoly::generator(2, none, 1);
    return (x * x).scaled(l1) + (y * y).scaled(l2) + commutator(x, y).scaled(delta) +
           x.scaled(e) + y.scaled(f) + NCPoly::constant(2, none, g);
}

}  // namespace

QuadricClass classify_quadric(const Rational& lambda1, const Rational& lambda2,
                              const Rational& delta, const Rational& e, const Rational& f,
                              const Rational& g) {
    if (lambda1.is_zero() && lambda2.is_zero() && delta.is_zero() && e.is_zero() &&
        f.is_zero() && g.is_zero())
        throw precondition_error("the zero polynomial is not a quadric");

    QuadricClass out;
    out.shift = AffineShift{};

    // rank 0 quadratic part
    if (lambda1.is_zero() && lambda2.is_zero()) {
        if (!e.is_zero() || !f.is_zero()) {
            // simple line: send e x + f y + g to the first coordinate
            out.tag = QuadricTag::SimpleLine;
            Rational dprime;
            if (!e.is_zero()) {
                // x = (X - f Y - g)/e, y = Y
                out.shift.x_image = GenImage{Rational(1) / e, -f / e, -g / e};
                out.shift.y_image = GenImage{0, 1, 0};
                dprime = delta / e;
            } else {
                // x = Y, y = (X - g)/f; [x,y] = -(1/f)[X,Y]
                out.shift.x_image = GenImage{0, 1, 0};
                out.shift.y_image = GenImage{Rational(1) / f, 0, -g / f};
                dprime = -delta / f;
            }
            out.normal_form = quadric_poly(0, 0, dprime, 1, 0, 0);
            return out;
        }
        if (!delta.is_zero() && !g.is_zero()) {
            out.tag = QuadricTag::Weyl;
            out.shift.scale = Rational(1) / g;
            out.normal_form = quadric_poly(0, 0, delta / g, 0, 0, 1);
            return out;
        }
        if (!delta.is_zero()) {
            out.tag = QuadricTag::AffinePlane;
            out.shift.scale = Rational(1) / delta;
            out.normal_form = quadric_poly(0, 0, 1, 0, 0, 0);
            return out;
        }
        throw precondition_error(
            "outside the quadric taxonomy: residual form is the nonzero constant " + g.str());
    }

    // rank 1: arrange the quadratic part on the first new coordinate
    if (lambda1.is_zero() || lambda2.is_zero()) {
        const bool swapped = lambda1.is_zero();  // the square sits on the original y
        const Rational l = swapped ? lambda2 : lambda1;
        const Rational lin_sq = swapped ? f : e;     // linear term on the square carrier
        const Rational lin_other = swapped ? e : f;  // transverse linear term
        const Rational d = swapped ? -delta : delta;
        if (!lin_other.is_zero())
            throw precondition_error(
                "outside the quadric taxonomy: parabola-type residual x^2 with a transverse "
                "linear term");
        // complete the square (carrier -> X + s), then scale by 1/l
        const Rational s = -lin_sq / (Rational(2) * l);
        const Rational c = (g - lin_sq * lin_sq / (Rational(4) * l)) / l;
        const Rational dp = d / l;
        GenImage sq_image{1, 0, s};     // square carrier = X + s
        GenImage other_image{0, 1, 0};  // other generator = Y
        out.shift.scale = Rational(1) / l;
        if (c.is_zero()) {
            out.tag = QuadricTag::DoubleLine;
            out.normal_form = quadric_poly(1, 0, dp, 0, 0, 0);
        } else {
            out.tag = QuadricTag::TwoLines;
            const auto root = (-c).sqrt_exact();
            if (root.has_value()) {
                // X -> X + r turns X^2 + c into X^2 + 2 r X
                sq_image.t += *root;
                out.normal_form = quadric_poly(1, 0, dp, Rational(2) * (*root), 0, 0);
            } else {
                out.shift.exact = false;
                out.note = "two lines over an extension field: residual form x^2 + " +
                           dp.str() + "*[x,y] + " + c.str();
                out.normal_form = quadric_poly(1, 0, dp, 0, 0, c);
            }
        }
        out.shift.x_image = swapped ? other_image : sq_image;
        out.shift.y_image = swapped ? sq_image : other_image;
        return out;
    }

    // rank 2: complete both squares
    const Rational c =
        g - e * e / (Rational(4) * lambda1) - f * f / (Rational(4) * lambda2);
    out.shift.x_image = GenImage{1, 0, -e / (Rational(2) * lambda1)};
    out.shift.y_image = GenImage{0, 1, -f / (Rational(2) * lambda2)};
    if (c.is_zero()) {
        out.tag = QuadricTag::QuantumPlane;
        const auto s2 = (lambda2 / lambda1).sqrt_exact();
        if (s2.has_value() && !s2->is_zero()) {
            // y = Y/s embeds lambda2 y^2 as lambda1 Y^2
            out.shift.scale = Rational(1) / lambda1;
            out.shift.y_image.b = out.shift.y_image.b / *s2;
            out.normal_form = quadric_poly(1, 1, delta / (lambda1 * *s2), 0, 0, 0);
        } else {
            out.shift.exact = false;
            out.shift.scale = Rational(1) / lambda1;
            out.note = "quantum plane up to a quadratic rescaling of y";
            out.normal_form = quadric_poly(1, lambda2 / lambda1, delta / lambda1, 0, 0, 0);
        }
        return out;
    }
    out.tag = QuadricTag::Smooth;
    const auto sx = (-c / lambda1).sqrt_exact();
    const auto sy = (-c / lambda2).sqrt_exact();
    if (sx.has_value() && sy.has_value() && !sx->is_zero() && !sy->is_zero()) {
        out.shift.scale = -Rational(1) / c;
        out.shift.x_image.a = out.shift.x_image.a * *sx;
        out.shift.y_image.b = out.shift.y_image.b * *sy;
        const Rational dprime = -delta * *sx * *sy / c;
        out.normal_form = quadric_poly(1, 1, dprime, 0, 0, -1);
    } else {
        out.shift.exact = false;
        out.shift.scale = Rational(1) / lambda1;
        out.note = "smooth conic up to a quadratic rescaling: residual form x^2 + " +
                   (lambda2 / lambda1).str() + "*y^2 + " + (delta / lambda1).str() +
                   "*[x,y] + " + (c / lambda1).str();
        out.normal_form =
            quadric_poly(1, lambda2 / lambda1, delta / lambda1, 0, 0, c / lambda1);
    }
    return out;
}

DegeneratePairs degenerate_ext_pairs_simple_line(const Rational& delta, const Rational& beta) {
    if (delta.is_zero()) throw precondition_error("delta must be nonzero");
    DegeneratePairs out;
    out.relation = quadric_poly(0, 0, delta, 1, 0, 0);
    out.pairs.push_back({Point<Rational>(Rational(0), beta),
                         Point<Rational>(Rational(0), beta + Rational(1) / delta)});
    return out;
}

DegeneratePairs degenerate_ext_pairs_two_lines(const Rational& e, const Rational& delta,
                                               const Rational& beta) {
    if (delta.is_zero()) throw precondition_error("delta must be nonzero");
    DegeneratePairs out;
    out.relation = quadric_poly(1, 0, delta, e, 0, 0);
    out.pairs.push_back({Point<Rational>(Rational(0), beta),
                         Point<Rational>(Rational(0), beta + e / delta)});
    // second line x = -e; the Jacobi criterion gives the -e/delta step (the
    // published pair [(e,beta),(e,beta+3e/delta)] does not lie on the curve)
    out.pairs.push_back({Point<Rational>(-e, beta), Point<Rational>(-e, beta - e / delta)});
    out.note = "second family derived from the Jacobi criterion; deviates from the published "
               "display";
    return out;
}

std::pair<Mat<CoefPoly>, Mat<CoefPoly>> cusp_versal_family() {
    const ParamList ctx{"t", "mu"};
    const CoefPoly t = CoefPoly::param(ctx, "t");
    const CoefPoly mu1 = CoefPoly::param(ctx, "mu") + CoefPoly::constant(ctx, Rational(1));
    const CoefPoly zero(ctx);
    Mat<CoefPoly> x(2, 2), y(2, 2);
    x << t, mu1, zero, t;
    y << zero, zero, mu1, zero;
    return {x, y};
}

bool cusp_versal_reduces(const Mat<CoefPoly>& x, const Mat<CoefPoly>& y) {
    const Mat<CoefPoly> r = (y * y - x * x * x).eval();
    const ParamList ctx{"t", "mu"};
    for (Eigen::Index i = 0; i < 2; ++i)
        for (Eigen::Index j = 0; j < 2; ++j) {
            const CoefPoly entry =
                r(i, j).params() == ctx ? r(i, j) : r(i, j).lift_to(ctx);
            // split by t-degree: coefficients of t^0, t^1 must vanish and the
            // t^2 layer must be divisible by (mu + 1); t^3 and beyond lie in
            // the ideal outright
            Rational at_minus_one(0);
            for (const auto& [exp, c] : entry.terms()) {
                const std::uint32_t tdeg = exp[0], mudeg = exp[1];
                if (tdeg <= 1) return false;
                if (tdeg == 2) at_minus_one += c * pow(Rational(-1), mudeg);
            }
            if (!at_minus_one.is_zero()) return false;
        }
    return true;
}

bool cusp_versal_check() {
    auto [x, y] = cusp_versal_family();
    return cusp_versal_reduces(x, y);
}

}  // namespace ncplane
