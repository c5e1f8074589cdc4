#include "doctest.h"

#include <random>

#include "mzv/words.hpp"

using namespace mzv;

namespace {

WordSumQ ws(const Word& w) { return WordSumQ(w); }
WordSumQ x(const char* bits) { return ws(parse_x_word(bits)); }
WordSumQ z(const char* comp) { return ws(parse_z_word(comp)); }

// Shuffle by scanning every subset of positions for the first word.
WordSumQ brute_shuffle(const Word& a, const Word& b) {
    const int n = static_cast<int>(a.size() + b.size());
    WordSumQ out;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != static_cast<int>(a.size())) continue;
        Word w;
        std::size_t i = 0, j = 0;
        for (int p = 0; p < n; ++p) w.push_back(mask & (1u << p) ? a[i++] : b[j++]);
        out.add(w, Rational(1));
    }
    return out;
}

Word random_word(std::mt19937& rng, Letter::Kind kind, int max_len, int min_len = 0) {
    std::uniform_int_distribution<int> len(min_len, max_len), s(1, 3), bit(0, 1), g(1, 4);
    Word w;
    const int n = len(rng);
    for (int i = 0; i < n; ++i) {
        switch (kind) {
        case Letter::Kind::Z: w.push_back(Letter::z(s(rng))); break;
        case Letter::Kind::X: w.push_back(Letter::x(bit(rng))); break;
        case Letter::Kind::ZR: w.push_back(Letter::zr(-s(rng), RatFunc(Rational(s(rng), 2)))); break;
        case Letter::Kind::GEN: w.push_back(Letter::gen(g(rng))); break;
        }
    }
    return w;
}

int counter = 0;
Word distinct_gen_word(int len) {
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(Letter::gen(++counter));
    return w;
}

} // namespace

TEST_CASE("shuffle examples") {
    CHECK(shuffle(x("01"), x("1")) == x("101") + x("011").scaled(Rational(2)));
    CHECK(shuffle(x("0101"), WordSumQ::unit()) == x("0101"));
    CHECK(shuffle(x("01"), x("01")) == x("0101").scaled(Rational(2)) + x("0011").scaled(Rational(4)));
    CHECK(render(shuffle(x("01"), x("1"))) == "101 + 2·011");
    CHECK_THROWS_AS(shuffle(x("01"), z("2")), AlphabetMismatch);
}

TEST_CASE("shuffle agrees with subset enumeration") {
    std::mt19937 rng(3);
    for (int i = 0; i < 100; ++i) {
        Word a = random_word(rng, Letter::Kind::X, 4), b = random_word(rng, Letter::Kind::X, 4);
        CHECK(shuffle(ws(a), ws(b)) == brute_shuffle(a, b));
    }
}

TEST_CASE("quasi-shuffle examples") {
    CHECK(stuffle(z("2"), z("3")) == z("2,3") + z("3,2") + z("5"));
    CHECK(render(stuffle(z("2"), z("3"))) == "z2z3 + z3z2 + z5");

    const Rational lam(2, 3);
    Word a1 = distinct_gen_word(1), b = distinct_gen_word(2);
    WordSumQ expect;
    expect.add(Word{a1[0], b[0], b[1]}, Rational(1));
    expect.add(Word{b[0], a1[0], b[1]}, Rational(1));
    expect.add(Word{b[0], b[1], a1[0]}, Rational(1));
    expect.add(Word{merge(a1[0], b[0]), b[1]}, lam);
    expect.add(Word{b[0], merge(a1[0], b[1])}, lam);
    CHECK(mixable_shuffle(ws(a1), ws(b), lam) == expect);
    CHECK(mixable_shuffle(ws(a1), ws(b), lam, MixMethod::Enumerative) == expect);

    CHECK(mixable_shuffle(x("011"), x("10"), Rational(0)) == shuffle(x("011"), x("10")));
    CHECK_THROWS_AS(mixable_shuffle(x("01"), x("1"), Rational(1)), UnsupportedMerge);
}

TEST_CASE("stuffle pair enumeration") {
    CHECK(stuffle_pairs(1, 1, 0).size() == 2);
    CHECK(stuffle_pairs(1, 1, 1).size() == 1);
    CHECK(stuffle_pairs(2, 1, 0).size() == 3);
    CHECK_THROWS_AS(stuffle_pairs(2, 1, 2), DomainError);
    for (int k = 1; k <= 5; ++k)
        for (int l = 1; l <= 5; ++l) {
            CHECK(stuffle_pairs(k, l, 0).size() == binomial(k + l, k).get_ui());
            for (int r = 0; r <= std::min(k, l); ++r) {
                auto pairs = stuffle_pairs(k, l, r);
                // |I_{k,l,r}| = (k+l-r)! / ((k-r)! (l-r)! r!)
                mpz_class expect = factorial(k + l - r) / (factorial(k - r) * factorial(l - r) * factorial(r));
                CHECK(mpz_class(static_cast<unsigned long>(pairs.size())) == expect);
                std::set<StufflePair> uniq(pairs.begin(), pairs.end());
                CHECK(uniq.size() == pairs.size());
                for (const auto& p : pairs) {
                    std::set<int> img(p.phi.begin(), p.phi.end());
                    img.insert(p.psi.begin(), p.psi.end());
                    CHECK(static_cast<int>(img.size()) == k + l - r);
                    CHECK(std::is_sorted(p.phi.begin(), p.phi.end()));
                    CHECK(std::is_sorted(p.psi.begin(), p.psi.end()));
                }
            }
        }
}

TEST_CASE("pairs with a merged or unmerged last position give the binomial counts") {
    // Pairs in I(r, s) whose last slot comes from psi alone, grouped by where phi ends.
    for (int r = 1; r <= 5; ++r)
        for (int s = 1; s <= 5; ++s) {
            auto pairs = stuffle_pairs(r, s, 0);
            int from_psi = 0, from_phi = 0;
            for (const auto& p : pairs) {
                if (p.psi.back() == r + s) ++from_psi;
                if (p.phi.back() == r + s) ++from_phi;
            }
            CHECK(from_psi == binomial(r + s - 1, r).get_si());
            CHECK(from_phi == binomial(r + s - 1, s).get_si());
        }
}

TEST_CASE("recursion and enumeration agree term for term") {
    const Rational lambdas[] = {Rational(0), Rational(1), Rational(-1), Rational(2, 3)};
    std::mt19937 rng(17);
    for (const auto& lam : lambdas)
        for (int k = 0; k <= 6; ++k)
            for (int l = 0; k + l <= 6; ++l)
                for (auto kind : {Letter::Kind::Z, Letter::Kind::GEN, Letter::Kind::ZR}) {
                    Word a = random_word(rng, kind, k, k), b = random_word(rng, kind, l, l);
                    CHECK(mixable_shuffle(ws(a), ws(b), lam) ==
                          mixable_shuffle(ws(a), ws(b), lam, MixMethod::Enumerative));
                }
}

TEST_CASE("commutativity, associativity and term mass") {
    std::mt19937 rng(23);
    for (auto kind : {Letter::Kind::Z, Letter::Kind::GEN, Letter::Kind::ZR}) {
        for (int i = 0; i < 100; ++i) {
            WordSumQ a = ws(random_word(rng, kind, 3)), b = ws(random_word(rng, kind, 3));
            CHECK(shuffle(a, b) == shuffle(b, a));
            CHECK(stuffle(a, b) == stuffle(b, a));
            CHECK(mixable_shuffle(a, b, Rational(-1)) == mixable_shuffle(b, a, Rational(-1)));
        }
        for (int i = 0; i < 40; ++i) {
            WordSumQ a = ws(random_word(rng, kind, 2)), b = ws(random_word(rng, kind, 2)),
                     c = ws(random_word(rng, kind, 2));
            CHECK(shuffle(shuffle(a, b), c) == shuffle(a, shuffle(b, c)));
            CHECK(stuffle(stuffle(a, b), c) == stuffle(a, stuffle(b, c)));
            CHECK(mixable_shuffle(mixable_shuffle(a, b, Rational(2, 3)), c, Rational(2, 3)) ==
                  mixable_shuffle(a, mixable_shuffle(b, c, Rational(2, 3)), Rational(2, 3)));
        }
    }
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
            WordSumQ a = ws(distinct_gen_word(k)), b = ws(distinct_gen_word(l));
            CHECK(shuffle(a, b).mass() == Rational(binomial(k + l, k)));
            Rational pairs;
            for (int r = 0; r <= std::min(k, l); ++r) pairs += Rational(static_cast<long>(stuffle_pairs(k, l, r).size()));
            CHECK(stuffle(a, b).mass() == pairs);
            CHECK(static_cast<long>(stuffle(a, b).size()) == pairs.num().get_si());
        }
}

TEST_CASE("deconcatenation coproduct") {
    auto d = coproduct(z("2"));
    TensorSum<Rational> e;
    e.add(Word{}, z_word({2}), Rational(1));
    e.add(z_word({2}), Word{}, Rational(1));
    CHECK(d == e);
    auto d2 = coproduct(z("2,1"));
    CHECK(d2.terms().size() == 3);
    CHECK(d2.terms().count({z_word({2}), z_word({1})}) == 1);
    CHECK(counit(z("2,1")) == Rational(0));
    CHECK(counit(WordSumQ::unit()) == Rational(1));

    std::mt19937 rng(31);
    for (int i = 0; i < 30; ++i) {
        Word w = random_word(rng, Letter::Kind::Z, 4);
        // coassociativity via triples
        std::map<std::array<Word, 3>, int> left, right;
        for (auto& [p, s] : deconcat(w))
            for (auto& [p1, p2] : deconcat(p)) ++left[{p1, p2, s}];
        for (auto& [p, s] : deconcat(w))
            for (auto& [s1, s2] : deconcat(s)) ++right[{p, s1, s2}];
        CHECK(left == right);
        for (auto& [l, r] : deconcat(w)) CHECK(weight(l) + weight(r) == weight(w));
    }
}

TEST_CASE("coproduct is an algebra map for every weight") {
    std::mt19937 rng(37);
    for (const Rational lam : {Rational(0), Rational(1), Rational(-1), Rational(2, 3)}) {
        for (int i = 0; i < 25; ++i) {
            WordSumQ a = ws(random_word(rng, Letter::Kind::Z, 2)), b = ws(random_word(rng, Letter::Kind::Z, 2));
            CHECK(coproduct(mixable_shuffle(a, b, lam)) == tensor_mixable(coproduct(a), coproduct(b), lam));
        }
    }
}

TEST_CASE("Hoffman exponential and logarithm") {
    CHECK(hoffman_exp(z("1")) == z("1"));
    CHECK(hoffman_exp(z("1,1")) == z("1,1") + z("2").scaled(Rational(1, 2)));
    std::mt19937 rng(41);
    for (int i = 0; i < 40; ++i) {
        WordSumQ w = ws(random_word(rng, Letter::Kind::GEN, 4));
        CHECK(hoffman_log(hoffman_exp(w)) == w);
        CHECK(hoffman_exp(hoffman_log(w)) == w);
    }
    for (int i = 0; i < 40; ++i) {
        WordSumQ u = ws(random_word(rng, Letter::Kind::Z, 2)), v = ws(random_word(rng, Letter::Kind::Z, 2));
        CHECK(hoffman_exp(shuffle(u, v)) == stuffle(hoffman_exp(u), hoffman_exp(v)));
    }
}

TEST_CASE("binary and composition words") {
    CHECK(x_to_z(parse_x_word("01")) == z_word({2}));
    CHECK(x_to_z(parse_x_word("0011")) == z_word({3, 1}));
    CHECK_THROWS_AS(x_to_z(parse_x_word("010")), DomainError);
    std::mt19937 rng(43);
    for (int i = 0; i < 50; ++i) {
        Word w = random_word(rng, Letter::Kind::Z, 4);
        CHECK(x_to_z(z_to_x(w)) == w);
        CHECK(static_cast<int>(z_to_x(w).size()) == weight(w));
    }
    CHECK(transported_shuffle(z("2"), z("2")) == z("2,2").scaled(Rational(2)) + z("3,1").scaled(Rational(4)));
    CHECK(transported_shuffle(WordSumQ::unit(), z("3,1")) == z("3,1"));
}

TEST_CASE("transported shuffle of two letters matches the closed form") {
    for (int r = 2; r <= 6; ++r)
        for (int s = 2; s <= 6; ++s) {
            WordSumQ rhs;
            for (int k = 0; k <= s - 1; ++k)
                rhs.add(z_word({r + k, s - k}), Rational(binomial(r + k - 1, k)));
            for (int k = 0; k <= r - 1; ++k)
                rhs.add(z_word({s + k, r - k}), Rational(binomial(s + k - 1, k)));
            CHECK(transported_shuffle(ws(z_word({r})), ws(z_word({s}))) == rhs);
        }
}

TEST_CASE("duality involution") {
    CHECK(tau_dual({3}) == std::vector<int>{2, 1});
    CHECK(tau_dual({2}) == std::vector<int>{2});
    CHECK(tau_dual({4}) == std::vector<int>{2, 1, 1});
    CHECK(tau_dual({2, 1, 1}) == std::vector<int>{4});
    CHECK_THROWS_AS(tau_dual({1, 2}), DomainError);
    std::mt19937 rng(47);
    for (int i = 0; i < 60; ++i) {
        std::vector<int> s = composition_of(random_word(rng, Letter::Kind::Z, 4, 1));
        s[0] += 1;
        auto t = tau_dual(s);
        CHECK(tau_dual(t) == s);
        int ws_ = 0, wt = 0;
        for (int v : s) ws_ += v;
        for (int v : t) wt += v;
        CHECK(ws_ == wt);
    }
}

TEST_CASE("word derivation") {
    RatFunc d = RatFunc::delta();
    Word w{Letter::zr(0, d)};
    CHECK(word_d(w) == WordSum<RatFunc>(Word{Letter::zr(-1, d)}, d));
    CHECK(word_d(Word{}).is_zero());
    std::mt19937 rng(53);
    for (int i = 0; i < 30; ++i) {
        Word v = random_word(rng, Letter::Kind::ZR, 3);
        // Delta(d w) = (d x id + id x d) Delta(w)
        TensorSum<RatFunc> lhs = coproduct(word_d(v)), rhs;
        for (auto& [l, r] : deconcat(v)) {
            const auto dl_sum = word_d(l), dr_sum = word_d(r);
            for (auto& [dl, c] : dl_sum.terms()) rhs.add(dl, r, c);
            for (auto& [dr, c] : dr_sum.terms()) rhs.add(l, dr, c);
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("text forms") {
    CHECK(render_word(parse_z_word("2,1,1")) == "z2z1z1");
    CHECK(render_word(parse_x_word("0011")) == "0011");
    Word m = parse_zr_word("(-2|3/2)(-1|1/2)");
    REQUIRE(m.size() == 2);
    CHECK(m[0].s == -2);
    CHECK(m[0].r == RatFunc(Rational(3, 2)));
    CHECK(render_word(m) == "(-2|3/2)(-1|1/2)");
    CHECK(parse_zr_word("(0|2+d)")[0].r == RatFunc::delta() + RatFunc(2));
    CHECK_THROWS_AS(parse_z_word("2,,1"), ParseError);
    CHECK_THROWS_AS(parse_x_word("012"), ParseError);
    CHECK_THROWS_AS(parse_zr_word("(1 2)"), ParseError);
    CHECK(render(z("2") - z("3").scaled(Rational(2))) == "-2·z3 + z2");
}
