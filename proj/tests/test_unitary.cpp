#include <doctest.h>

#include "support.hpp"
#include "takagi/consistency.hpp"
#include "takagi/signseq.hpp"

using namespace takagi;
using test::close;

namespace {

SignSeq random_unitary_poly(std::size_t max_deg) {
    std::vector<std::int8_t> s{1};
    auto deg = static_cast<std::size_t>(test::uniform_int(1, static_cast<long>(max_deg)));
    for (std::size_t i = 0; i < deg; ++i)
        s.push_back(test::uniform_int(0, 1) ? 1 : static_cast<std::int8_t>(-1));
    return SignSeq::polynomial(std::move(s));
}

}  // namespace

TEST_CASE("lexicographic comparison") {
    SignSeq f = SignSeq::from_closed_form(ClosedForm::two_to_one());  // 1-x-x^2-...
    SignSeq g = SignSeq::from_closed_form(ClosedForm::alt_geom());    // 1-x+x^2-...
    auto r = lex_compare(f, g, 64);
    CHECK(r.order == LexOrder::Less);
    CHECK(r.index == 2);

    SignSeq p = SignSeq::polynomial({1, -1, -1});
    CHECK(lex_compare(p, p, 64).order == LexOrder::EqualUpTo);

    // attached series around two construction points: F_a^+ < F_b^-
    auto fa = construct(RealPoint::rational(Rat(52, 100)), Mode::Consistent, 96);
    auto fb = construct(RealPoint::rational(Rat(98, 100)), Mode::Consistent, 96);
    auto cmp = lex_compare(attached_series(fa.func, AttachSign::Plus),
                           attached_series(fb.func, AttachSign::Minus), 64);
    CHECK(cmp.order == LexOrder::Less);
}

TEST_CASE("closed-form evaluation at 1/2") {
    CHECK(ClosedForm::geom().eval(Rat(1, 2)) == Rat(2));
    CHECK(ClosedForm::alt_geom().eval(Rat(1, 2)) == Rat(2, 3));
    CHECK(ClosedForm::pair_alt().eval(Rat(1, 2)) == Rat(6, 5));
    CHECK(ClosedForm::two_to_one().eval(Rat(1, 2)) == Rat(0));
}

TEST_CASE("attached series block patterns") {
    SignSeq p = SignSeq::polynomial({1, -1});

    auto plus = attached_series(p, AttachSign::Plus);
    for (std::size_t i = 0; i < 32; ++i)
        CHECK(static_cast<int>(plus.coeff(i)) == ClosedForm::alt_geom().coeff(i));

    auto minus = attached_series(p, AttachSign::Minus);
    std::vector<int> expected{1, -1, -1, 1, -1, 1, -1, 1};  // 1-x-x^2+x^3-x^4+x^5-...
    for (std::size_t i = 0; i < expected.size(); ++i)
        CHECK(static_cast<int>(minus.coeff(i)) == expected[i]);

    auto ones = attached_series(SignSeq::polynomial({1, 1}), AttachSign::Plus);
    for (std::size_t i = 0; i < 16; ++i) CHECK(ones.coeff(i) == 1);
}

TEST_CASE("intermediate series recognition") {
    SignSeq p = SignSeq::polynomial({1, -1, -1});
    CHECK(is_intermediate(attached_series(p, AttachSign::Plus), p, 128));
    CHECK(is_intermediate(attached_series(p, AttachSign::Minus), p, 128));
    CHECK_FALSE(is_intermediate(SignSeq::from_closed_form(ClosedForm::alt_geom()), p, 6));

    // random +- block patterns are intermediate; a flipped digit is not
    for (int trial = 0; trial < 50; ++trial) {
        SignSeq q = random_unitary_poly(6);
        auto block = q.prefix(static_cast<std::size_t>(q.degree()) + 1);
        std::vector<std::int8_t> mixed;
        std::vector<int> sign_of_block{1};
        for (int b = 1; b < 8; ++b) sign_of_block.push_back(test::uniform_int(0, 1) ? 1 : -1);
        for (int s : sign_of_block)
            for (auto c : block) mixed.push_back(static_cast<std::int8_t>(s * c));
        SignSeq f = SignSeq::series(mixed, [](std::size_t) -> std::int8_t { return 1; });
        CHECK(is_intermediate(f, q, mixed.size()));

        auto flipped = mixed;
        auto at = static_cast<std::size_t>(
            test::uniform_int(1, static_cast<long>(block.size()) - 1));
        std::size_t blk = static_cast<std::size_t>(test::uniform_int(0, 7)) * block.size();
        flipped[blk + at] = static_cast<std::int8_t>(-flipped[blk + at]);
        SignSeq g = SignSeq::series(flipped, [](std::size_t) -> std::int8_t { return 1; });
        CHECK_FALSE(is_intermediate(g, q, flipped.size()));
    }
}

TEST_CASE("attached series sum to P(x)/(1-x^{N+1}) and P(x)(1-2x^{N+1})/(1-x^{N+1})") {
    for (int trial = 0; trial < 60; ++trial) {
        SignSeq p = random_unitary_poly(7);
        const auto n1 = static_cast<unsigned>(p.degree()) + 1;
        Rat x = test::random_rational(-0.9, 0.9);
        if (x == 0) continue;
        Rat px = p.to_poly(n1).eval(x);
        Rat xn1 = pow_rat(x, n1);

        Rat plus_exact = px / (1 - xn1);
        Rat minus_exact = px * (1 - 2 * xn1) / (1 - xn1);

        Real tol("1e-30");
        auto [pv, pe] = eval(attached_series(p, AttachSign::Plus), to_real(x), tol);
        CHECK(abs(pv - to_real(plus_exact)) <= pe + tol);
        auto [mv, me] = eval(attached_series(p, AttachSign::Minus), to_real(x), tol);
        CHECK(abs(mv - to_real(minus_exact)) <= me + tol);
    }
}

TEST_CASE("attached values at one half") {
    SignSeq p = SignSeq::polynomial({1, -1});
    CHECK(attached_value_at_half(p, AttachSign::Plus) == Rat(2, 3));
    CHECK(attached_value_at_half(p, AttachSign::Minus) == Rat(1, 3));
    for (int trial = 0; trial < 20; ++trial) {
        SignSeq q = random_unitary_poly(9);
        const auto n1 = static_cast<unsigned>(q.degree()) + 1;
        Rat ph = q.to_poly(n1).eval(Rat(1, 2));
        Rat xn1 = Rat(1, pow2(n1));
        CHECK(attached_value_at_half(q, AttachSign::Plus) == ph / (1 - xn1));
        CHECK(attached_value_at_half(q, AttachSign::Minus) == ph * (1 - 2 * xn1) / (1 - xn1));
    }
}

TEST_CASE("lex sandwich F- <= F <= F+") {
    for (int trial = 0; trial < 40; ++trial) {
        SignSeq p = random_unitary_poly(8);
        auto plus = attached_series(p, AttachSign::Plus);
        auto minus = attached_series(p, AttachSign::Minus);
        CHECK(lex_compare(minus, p, 96).order != LexOrder::Greater);
        CHECK(lex_compare(p, plus, 96).order != LexOrder::Greater);
    }
}

TEST_CASE("coefficient-wise convergence controls pointwise values") {
    // two series sharing a prefix of length L differ by at most
    // 2 |x|^L / (1-|x|)
    SignSeq a = SignSeq::from_closed_form(ClosedForm::two_to_one());
    for (std::size_t L : {4u, 8u, 16u, 32u}) {
        auto pre = a.prefix(L);
        SignSeq b = SignSeq::series(pre, [](std::size_t) -> std::int8_t { return 1; });
        for (int i = 0; i < 10; ++i) {
            Real x(test::uniform(-0.8, 0.8));
            Real tol("1e-25");
            auto [va, ea] = eval(a, x, tol);
            auto [vb, eb] = eval(b, x, tol);
            Real lim = 2 * pow(abs(x), static_cast<unsigned>(L)) / (1 - abs(x));
            CHECK(abs(va - vb) <= lim + ea + eb + tol);
        }
    }
}

TEST_CASE("closed form coefficients match their sums") {
    for (unsigned k : {1u, 2u, 3u}) {
        SignSeq f = SignSeq::from_closed_form(ClosedForm::neg_k(k));
        Real x("0.37");
        auto [val, err] = eval(f, x, Real("1e-28"));
        CHECK(err == 0);  // closed form used directly
        // against the plain truncated sum of the generated coefficients
        Real acc(0), xp(1);
        for (std::size_t i = 0; i < 300; ++i, xp *= x) acc += static_cast<int>(f.coeff(i)) * xp;
        CHECK(abs(val - acc) <= Real("1e-25"));
    }
    ClosedForm lifted = ClosedForm::sqrt_lift(ClosedForm::two_to_one());
    SignSeq f = SignSeq::from_closed_form(lifted);
    Real x("0.41");
    Real acc(0), xp(1);
    for (std::size_t i = 0; i < 300; ++i, xp *= x) acc += static_cast<int>(f.coeff(i)) * xp;
    CHECK(abs(lifted.eval(x) - acc) <= Real("1e-25"));
    // (1-2x^2)/(1+x) is the lifted two-to-one sum
    CHECK(abs(lifted.eval(x) - (1 - 2 * x * x) / (1 + x)) <= Real("1e-40"));
}

TEST_CASE("rendering round trips") {
    SignSeq p = SignSeq::polynomial({1, -1, -1, 1});
    CHECK(to_sign_string(p, 4) == "+--+");
    CHECK(to_polynomial_string(p, 4) == "1 - x - x^2 + x^3");
    CHECK(parse_sign_string("+--+") == std::vector<std::int8_t>({1, -1, -1, 1}));
    CHECK(parse_polynomial_string("1 - x - x^2 + x^3") ==
          std::vector<std::int8_t>({1, -1, -1, 1}));

    for (int trial = 0; trial < 30; ++trial) {
        SignSeq q = random_unitary_poly(12);
        auto len = static_cast<std::size_t>(q.degree()) + 1;
        CHECK(parse_sign_string(to_sign_string(q, len)) == q.prefix(len));
        CHECK(parse_polynomial_string(to_polynomial_string(q, len)) == q.prefix(len));
    }
    CHECK_THROWS_AS((void)parse_sign_string("-+-"), std::invalid_argument);
}

TEST_CASE("series prefixes evaluate exactly over rationals") {
    SignSeq geom = SignSeq::from_closed_form(ClosedForm::geom());
    CHECK(eval_prefix(geom, Rat(1, 2), 10) == Rat(2) - Rat(1, 512));
    CHECK(*eval_exact(geom, Rat(1, 3)) == Rat(3, 2));
    SignSeq p = SignSeq::polynomial({1, -1, -1});
    CHECK(*eval_exact(p, Rat(1, 2)) == Rat(1, 4));
}
