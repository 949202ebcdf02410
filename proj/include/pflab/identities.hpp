#ifndef PFLAB_IDENTITIES_HPP
#define PFLAB_IDENTITIES_HPP

#include <string>
#include <vector>

#include "pflab/extended.hpp"
#include "pflab/matrix.hpp"
#include "pflab/pfaffian.hpp"
#include "pflab/report.hpp"

namespace pflab {

namespace detail {

template <Field S>
CheckCase residual_case(std::string params, const S& residual) {
    ResidualTracker<S> t;
    t.observe(residual, "-");
    return t.as_case(std::move(params));
}

} // namespace detail

// Pf(B A B^T) - det(B) Pf(A); zero for every square B of matching order.
template <Field S>
VerificationReport check_congruence(const SkewMatrix<S>& a, const Matrix<S>& b) {
    if (b.rows() != b.cols() || b.rows() != a.order())
        throw ShapeError("check_congruence requires square B of order matching A");
    VerificationReport rep;
    rep.suite = "congruence";
    S lhs = pfaffian_expansion(congruence_transform(a, b));
    S rhs = determinant(b) * pfaffian_expansion(a);
    rep.add(detail::residual_case("order=" + std::to_string(a.order()), S(lhs - rhs)));
    return rep;
}

namespace detail {

inline void require_distinct(const std::vector<Label>& labels) {
    for (std::size_t i = 0; i < labels.size(); ++i)
        for (std::size_t j = i + 1; j < labels.size(); ++j)
            if (labels[i] == labels[j]) throw LabelError("repeated label " + labels[i].str());
}

} // namespace detail

// Even bilinear identity:
//   Pf(a1..am, *) Pf(*) = sum_{j=2}^{m} (-1)^j Pf(a1, aj, *) Pf(a2..^aj..am, *)
// for any skew array; |a| and |*| both even.
template <Field S>
VerificationReport check_bilinear_even(const ExtendedSkewArray<S>& e,
                                       const std::vector<Label>& a_labels,
                                       const std::vector<Label>& star_labels) {
    if (a_labels.size() % 2 != 0 || star_labels.size() % 2 != 0)
        throw ShapeError("bilinear (even) needs even label counts");
    detail::require_distinct(concat(a_labels, star_labels));

    S lhs = e.pf(concat(a_labels, star_labels)) * e.pf(star_labels);
    S rhs(0);
    for (std::size_t j = 1; j < a_labels.size(); ++j) {
        std::vector<Label> pair{a_labels[0], a_labels[j]};
        std::vector<Label> rest;
        for (std::size_t t = 1; t < a_labels.size(); ++t)
            if (t != j) rest.push_back(a_labels[t]);
        S term = e.pf(concat(pair, star_labels)) * e.pf(concat(rest, star_labels));
        // paper position is 1-based: label a_{j+1} carries (-1)^(j+1)
        rhs = (j % 2 == 1) ? rhs + term : rhs - term;
    }

    VerificationReport rep;
    rep.suite = "bilinear-even";
    rep.add(detail::residual_case(
        "m=" + std::to_string(a_labels.size()) + ",star=" + std::to_string(star_labels.size()),
        S(lhs - rhs)));
    return rep;
}

// Odd bilinear identity:
//   Pf(a1..am, #) Pf(#, z) = sum_{j=1}^{m} (-1)^(j-1) Pf(aj, #) Pf(a1..^aj..am, #, z)
// with |a| and |#| odd and an extra closing label z.
template <Field S>
VerificationReport check_bilinear_odd(const ExtendedSkewArray<S>& e,
                                      const std::vector<Label>& a_labels,
                                      const std::vector<Label>& ast_labels,
                                      const Label& last_label) {
    if (a_labels.size() % 2 != 1 || ast_labels.size() % 2 != 1)
        throw ShapeError("bilinear (odd) needs odd label counts");
    detail::require_distinct(concat(concat(a_labels, ast_labels), {last_label}));

    S lhs = e.pf(concat(a_labels, ast_labels)) * e.pf(concat(ast_labels, {last_label}));
    S rhs(0);
    for (std::size_t j = 0; j < a_labels.size(); ++j) {
        std::vector<Label> rest;
        for (std::size_t t = 0; t < a_labels.size(); ++t)
            if (t != j) rest.push_back(a_labels[t]);
        S term = e.pf(concat({a_labels[j]}, ast_labels)) *
                 e.pf(concat(concat(rest, ast_labels), {last_label}));
        rhs = (j % 2 == 0) ? rhs + term : rhs - term;
    }

    VerificationReport rep;
    rep.suite = "bilinear-odd";
    rep.add(detail::residual_case(
        "m=" + std::to_string(a_labels.size()) + ",ast=" + std::to_string(ast_labels.size()),
        S(lhs - rhs)));
    return rep;
}

// Gram-type discrete Pfaffian. The seed provides Pf(i,j) over 0..2n-1 plus
// rows a and b with Pf(a,b) = 0. Starred entries are constructed as
//   Pf(i*,j*) = Pf(i,j) + lambda Pf(a,b,i,j),
//   Pf(a,i*)  = Pf(a,i) + lambda Pf(b,i),
// and both closed forms are verified by expansion:
//   Pf(0*..2n-1*)   = Pf(0..2n-1)   + lambda Pf(a,b,0..2n-1)
//   Pf(a,0*..2n-2*) = Pf(a,0..2n-2) + lambda Pf(b,0..2n-2)
template <Field S>
VerificationReport check_gram_identities(const ExtendedSkewArray<S>& seed, const S& lambda,
                                         int n) {
    if (n < 1) throw ShapeError("gram check needs n >= 1");
    if (!ScalarTraits<S>::is_zero(seed.at(Label::a(), Label::b())))
        throw PreconditionError("gram seed requires Pf(a,b) = 0");
    const int m = 2 * n;

    std::vector<Label> ext_labels{Label::a(), Label::b()};
    for (int i = 0; i < m; ++i) ext_labels.push_back(Label::star(i));
    ExtendedSkewArray<S> starred(ext_labels);
    starred.set(Label::a(), Label::b(), S(0));
    for (int i = 0; i < m; ++i) {
        starred.set(Label::a(), Label::star(i),
                    seed.at(Label::a(), Label::base(i)) + lambda * seed.at(Label::b(), Label::base(i)));
        for (int j = i + 1; j < m; ++j) {
            S quad = seed.pf({Label::a(), Label::b(), Label::base(i), Label::base(j)});
            starred.set(Label::star(i), Label::star(j),
                        seed.at(Label::base(i), Label::base(j)) + lambda * quad);
        }
    }

    std::vector<Label> stars;
    for (int i = 0; i < m; ++i) stars.push_back(Label::star(i));

    S g1 = starred.pf(stars) -
           (seed.pf(base_range(0, m)) +
            lambda * seed.pf(concat({Label::a(), Label::b()}, base_range(0, m))));

    std::vector<Label> stars_odd(stars.begin(), stars.end() - 1);
    S g2 = starred.pf(concat({Label::a()}, stars_odd)) -
           (seed.pf(concat({Label::a()}, base_range(0, m - 1))) +
            lambda * seed.pf(concat({Label::b()}, base_range(0, m - 1))));

    VerificationReport rep;
    rep.suite = "gram";
    rep.add(detail::residual_case("gram1 n=" + std::to_string(n), g1));
    rep.add(detail::residual_case("gram2 n=" + std::to_string(n), g2));
    return rep;
}

// Wronski-type discrete Pfaffian (addition formula). The seed provides
// Pf(i,j) over 0..2n and a d row; the c row is (-lambda)^i with Pf(d,c) = 0.
// Starred entries follow
//   Pf(i*,j*) = lambda^2 Pf(i,j) + lambda Pf(i+1,j) + lambda Pf(i,j+1) + Pf(i+1,j+1),
//   Pf(d,i*)  = lambda Pf(d,i) + Pf(d,i+1),
// and the two addition formulas are verified:
//   Pf(0*..2n-1*)   = Pf(c,0..2n)
//   Pf(d,0*..2n-2*) = Pf(d,c,0..2n-1)
template <Field S>
VerificationReport check_wronski_identities(const ExtendedSkewArray<S>& seed, const S& lambda,
                                            int n) {
    if (n < 1) throw ShapeError("wronski check needs n >= 1");
    const int m = 2 * n;

    std::vector<Label> ext_labels{Label::d()};
    for (int i = 0; i < m; ++i) ext_labels.push_back(Label::star(i));
    ExtendedSkewArray<S> starred(ext_labels);
    for (int i = 0; i < m; ++i) {
        starred.set(Label::d(), Label::star(i),
                    lambda * seed.at(Label::d(), Label::base(i)) +
                        seed.at(Label::d(), Label::base(i + 1)));
        for (int j = i + 1; j < m; ++j) {
            S v = lambda * lambda * seed.at(Label::base(i), Label::base(j)) +
                  lambda * seed.at(Label::base(i + 1), Label::base(j)) +
                  lambda * seed.at(Label::base(i), Label::base(j + 1)) +
                  seed.at(Label::base(i + 1), Label::base(j + 1));
            starred.set(Label::star(i), Label::star(j), v);
        }
    }

    // Seed copy extended by the synthetic c row, Pf(c,i) = (-lambda)^i.
    std::vector<Label> with_c{Label::c(), Label::d()};
    for (int i = 0; i <= m; ++i) with_c.push_back(Label::base(i));
    ExtendedSkewArray<S> ext(with_c);
    S cpow(1);
    for (int i = 0; i <= m; ++i) {
        ext.set(Label::c(), Label::base(i), cpow);
        ext.set(Label::d(), Label::base(i), seed.at(Label::d(), Label::base(i)));
        for (int j = i + 1; j <= m; ++j)
            ext.set(Label::base(i), Label::base(j), seed.at(Label::base(i), Label::base(j)));
        cpow = cpow * (-lambda);
    }

    std::vector<Label> stars;
    for (int i = 0; i < m; ++i) stars.push_back(Label::star(i));

    S w1 = starred.pf(stars) - ext.pf(concat({Label::c()}, base_range(0, m + 1)));

    std::vector<Label> stars_odd(stars.begin(), stars.end() - 1);
    S w2 = starred.pf(concat({Label::d()}, stars_odd)) -
           ext.pf(concat({Label::d(), Label::c()}, base_range(0, m)));

    VerificationReport rep;
    rep.suite = "wronski";
    rep.add(detail::residual_case("wronski1 n=" + std::to_string(n), w1));
    rep.add(detail::residual_case("wronski2 n=" + std::to_string(n), w2));
    return rep;
}

} // namespace pflab

#endif
