#include "sigmasum/addsum.hpp"

namespace sigmasum {

std::string_view to_string(SeriesClass c) {
    switch (c) {
        case SeriesClass::Algebraic: return "algebraic";
        case SeriesClass::Infinite: return "infinite";
        case SeriesClass::NoRelationKnown: return "no_relation_known";
    }
    return "unknown";
}

std::string_view to_string(SumStatus s) {
    switch (s) {
        case SumStatus::Summed: return "summed";
        case SumStatus::NotUnivalent: return "not_univalent";
        case SumStatus::NotAbsolutelyAlgebraic: return "not_absolutely_algebraic";
        case SumStatus::Infinite: return "infinite";
        case SumStatus::NoRelationKnown: return "no_relation_known";
    }
    return "unknown";
}

ScalarPolynomial scalar_polynomial(const AlgebraicSeries& a) { return monic(apply_add(a.ann())); }

bool absolutely_algebraic(const AlgebraicSeries& a) {
    AnnPoly unit_ann = a.ann();
    const Series& x = a.expansion();
    if (x.order() == 0 || x[0].is_zero()) unit_ann = prepend_head(a.ann(), one_minus_sigma(), 2);
    const AnnPoly inverse_ann = primitive_part(strip_one_minus_sigma(reflected(unit_ann)).first).first;
    return !monic(apply_add(inverse_ann)).eval(Scalar(0)).is_zero();
}

bool degree_sufficiency(const AlgebraicSeries& a) {
    return scalar_polynomial(a).degree() == a.ann().degree();
}

Classification classify(const AlgebraicSeries& a) {
    Classification c;
    c.scalar_poly = scalar_polynomial(a);
    c.sum_degree = static_cast<std::size_t>(a.ann().degree());
    c.scalar_degree = static_cast<std::size_t>(c.scalar_poly.degree());
    if (c.scalar_degree == 0) {
        c.kind = SeriesClass::Infinite;
        return c;
    }
    c.kind = SeriesClass::Algebraic;
    c.univalent = is_linear_power(c.scalar_poly);
    c.absolutely_algebraic = absolutely_algebraic(a);
    c.practically_zero = c.univalent && c.univalent->root.is_zero() && *c.absolutely_algebraic;
    return c;
}

Certificate certificate_of(const AlgebraicSeries& a) {
    return {a.ann(), scalar_polynomial(a), a.stripped_power(), a.certified_order(), a.minimality()};
}

SumResult univalent_sum(const AlgebraicSeries& a) {
    SumResult r;
    r.certificate = certificate_of(a);
    const Classification c = classify(a);
    if (c.kind == SeriesClass::Infinite) {
        r.status = SumStatus::Infinite;
    } else if (!c.univalent) {
        r.status = SumStatus::NotUnivalent;
    } else if (!*c.absolutely_algebraic) {
        r.status = SumStatus::NotAbsolutelyAlgebraic;
    } else {
        r.status = SumStatus::Summed;
        r.value = c.univalent->root;
    }
    return r;
}

Scalar telescope_eval(const SigmaPoly& a, const SigmaPoly& f) {
    if (f.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "telescope denominator is zero");
    SigmaPoly num = a, den = f;
    const SigmaPoly lin = one_minus_sigma();
    while (add_sum(den).is_zero() && add_sum(num).is_zero()) {
        den = exact_div(den, lin);
        if (!num.is_zero()) num = exact_div(num, lin);
    }
    const Scalar f1 = add_sum(den);
    if (f1.is_zero()) throw Error(ErrorKind::TelescopeDegenerate, "F(1) = 0 after removing common (1-s) factors");
    return add_sum(num) / f1;
}

RootReport zeroes(const AlgebraicSeries& a) { return rational_roots(scalar_polynomial(a)); }

}  // namespace sigmasum
