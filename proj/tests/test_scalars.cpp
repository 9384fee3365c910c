#include <doctest.h>

#include "epw/random.hpp"
#include "epw/scalar.hpp"
#include "oracles.hpp"

using namespace epw;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const MathError& e) {
        return e.code();
    }
    FAIL("expected a MathError");
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("rational arithmetic") {
    CHECK(Rational::parse("1/2") + Rational::parse("1/3") == Rational::parse("5/6"));
    CHECK(Rational::parse("-4/6").str() == "-2/3");
    CHECK(Rational(7).str() == "7");
    CHECK(code_of([] { (void)(Rational(1) / Rational(0)); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { (void)Rational::parse("1/x"); }) == ErrorCode::ParseError);
}

TEST_CASE("prime field arithmetic") {
    auto r = field_arith(Fp{3, 7}, Fp{5, 7}, ArithOp::Mul);
    CHECK(std::get<Fp>(r) == Fp{1, 7});
    CHECK(code_of([] { (void)field_arith(Fp{3, 7}, Fp{0, 7}, ArithOp::Div); }) == ErrorCode::DivisionByZero);
    CHECK(code_of([] { (void)field_arith(Fp{3, 7}, Rational(1), ArithOp::Add); }) == ErrorCode::MixedFields);

    // inverses against Fermat's little theorem
    for (std::uint32_t p : {2u, 3u, 101u, 2147483647u}) {
        PrimeField f(p);
        Rng rng(p);
        for (int i = 0; i < 50; ++i) {
            auto a = 1 + rng.below(p - 1);
            CHECK(f.inv(a) == oracle::powmod(a, p - 2, p));
        }
    }
}

TEST_CASE("reduction mod p") {
    CHECK(reduce_mod_p(Rational::parse("5/6"), 7) == 2);
    CHECK(reduce_mod_p(Rational(0), 13) == 0);
    CHECK(reduce_mod_p(Rational(-1), 13) == 12);
    CHECK(code_of([] { (void)reduce_mod_p(Rational::parse("1/3"), 3); }) == ErrorCode::BadReduction);
}

TEST_CASE("CRT and rational reconstruction") {
    auto x = Rational::parse("5/6");
    std::vector<Residue> res;
    for (std::uint32_t p : {101u, 103u, 107u}) res.push_back({reduce_mod_p(x, p), p});
    CHECK(crt_lift(res, mpz_class(100)) == x);

    std::vector<Residue> zero{{0, 101}, {0, 103}};
    CHECK(crt_lift(zero, mpz_class(50)) == Rational(0));

    // 5/6 mod 101 combined with 3/7 mod 103 has no reconstruction with tiny bound
    std::vector<Residue> bad{{reduce_mod_p(x, 101), 101}, {reduce_mod_p(Rational::parse("3/7"), 103), 103}};
    CHECK(code_of([&] { (void)crt_lift(bad, mpz_class(5)); }) == ErrorCode::NoReconstruction);
}

TEST_CASE("CRT accumulator over large primes") {
    Rng rng(5);
    std::vector<Rational> values;
    for (int i = 0; i < 20; ++i) values.push_back(Rational(mpz_class(rng.uniform(-1000000, 1000000)), mpz_class(rng.uniform(1, 999))));
    CrtAccumulator acc(values.size());
    for (auto p : large_primes(3)) {
        std::vector<std::uint32_t> r;
        for (const auto& v : values) r.push_back(reduce_mod_p(v, p));
        acc.add(r, p);
    }
    auto back = acc.reconstruct();
    REQUIRE(back);
    CHECK(*back == values);

    CrtAccumulator ints(3);
    std::vector<Rational> big{Rational(-123456789), Rational(0), Rational(987654321)};
    for (auto p : large_primes(2)) {
        std::vector<std::uint32_t> r;
        for (const auto& v : big) r.push_back(reduce_mod_p(v, p));
        ints.add(r, p);
    }
    CHECK(ints.lift_integers() == big);
}

TEST_CASE("large primes") {
    auto ps = large_primes(5);
    CHECK(ps.front() == 2147483647u);
    for (std::size_t i = 1; i < ps.size(); ++i) CHECK(ps[i] < ps[i - 1]);
    for (auto p : ps) {
        bool prime = true;
        for (std::uint64_t d = 2; d * d <= p; ++d)
            if (p % d == 0) {
                prime = false;
                break;
            }
        CHECK(prime);
    }
}
