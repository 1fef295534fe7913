#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cycloskew/arith.hpp"
#include "cycloskew/constructions.hpp"
#include "cycloskew/cyclotomy.hpp"
#include "cycloskew/error.hpp"
#include "cycloskew/numtheory.hpp"

using namespace cycloskew;

namespace {

std::vector<Elem> generators(const Field& f)
{
    std::vector<Elem> out;
    const std::uint32_t n = f.order() - 1;
    for (std::uint32_t k = 1; k < n; ++k) {
        if (arith::gcd(k, n) == 1) {
            out.push_back(f.exp(k));
        }
    }
    return out;
}

const ClaimResult& claim(const Construction& c, Kind kind)
{
    for (const auto& r : c.claims) {
        if (r.certificate && r.certificate->kind == kind) {
            return r;
        }
    }
    FAIL("no claim of kind " << to_string(kind));
    return c.claims.front();
}

std::set<ElemSet> as_set(const Family& f) { return {f.begin(), f.end()}; }

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::ParseError;
}

}  // namespace

TEST_CASE("registry")
{
    const auto& reg = registry();
    REQUIRE(reg.size() == 25);
    for (std::size_t i = 0; i < reg.size(); ++i) {
        CHECK(reg[i].id == "R" + std::to_string(i + 1));
        CHECK(&recipe_by_id(reg[i].id) == &reg[i]);
        CHECK(&recipe_by_id(reg[i].name) == &reg[i]);
        CHECK_FALSE(reg[i].formulas.empty());
    }
    CHECK(code_of([] { recipe_by_id("R99"); }) == ErrorCode::ParseError);
}

TEST_CASE("GF(13): both generators")
{
    const auto f2 = Field::build(13, 1, std::nullopt, Elem{2});
    const auto f7 = Field::build(13, 1, std::nullopt, Elem{7});
    const Construction a = cycloskew::apply(recipe_by_id("R1"), f2);
    const Certificate& ca = *claim(a, Kind::SkewPDS).certificate;
    CHECK(ca.sets.front() == ElemSet{1, 3, 7, 8, 9, 11});
    CHECK(ca.reference_set == ElemSet{1, 3, 4, 9, 10, 12});

    const Construction b = cycloskew::apply(recipe_by_id("R1"), f7);
    const Certificate& cb = *claim(b, Kind::SkewPDS).certificate;
    CHECK(cb.sets.front() == ElemSet{1, 2, 3, 5, 6, 9});
    CHECK(cb.reference_set == ElemSet{2, 5, 6, 7, 8, 11});
    CHECK(format_params(cb.kind, cb.params) == "(13,6,2,3)");
}

TEST_CASE("changing the generator swaps the reference of the order-4 skew sets")
{
    std::size_t checked = 0;
    // from 13: at q = 5 the skew set is a translate of its PDS
    for (auto [p, m] : prime_powers_in(13, 500)) {
        const std::uint64_t q = arith::ipow(p, m);
        if (q % 8 != 5) {
            continue;
        }
        const auto base = Field::build(p, m);
        if (std::abs(two_squares_abs(q, p, m).t) != 2) {
            continue;
        }
        for (Elem g : generators(*base)) {
            const auto f = base->with_generator(g);
            const std::int64_t t = two_squares_rep(*f).t;
            const ElemSet squares = ClassPartition(f, 2).members(0);
            const auto r1 = cycloskew::apply(recipe_by_id("R1"), f);
            const auto r2 = cycloskew::apply(recipe_by_id("R2"), f);
            const auto& c1 = *claim(r1, Kind::SkewPDS).certificate;
            const auto& c2 = *claim(r2, Kind::SkewPDS).certificate;
            CHECK((c1.reference_set == squares) == (t == -2));
            CHECK((c2.reference_set == squares) == (t == 2));
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("shifted order-8 pairs are skew for the shifted quartic class")
{
    std::size_t fields = 0;
    // GF(9) is skipped: its classes of order 8 are singletons and every such pair is trivial
    for (auto [p, m] : prime_powers_in(10, 2000)) {
        const auto f = Field::build(p, m);
        if (recipe_by_id("R5").applicable(reps_for(*f), f.get()) != Applicability::Yes) {
            continue;
        }
        ++fields;
        const ClassPartition c8(f, 8);
        const ClassPartition c4(f, 4);
        for (std::int64_t i = 0; i < 8; ++i) {
            const Certificate cert = check_skew_pds(*f, c8.union_of({i, i + 2}));
            CHECK(cert.kind == Kind::SkewPDS);
            CHECK(cert.reference_set == c4.members(i + 1));
        }
    }
    CHECK(fields >= 1);
}

TEST_CASE("GF(361) order-8 skew PDS")
{
    const auto f = Field::build(19, 2);
    const Construction c = cycloskew::apply(recipe_by_id("R5"), f);
    CHECK(c.oracle_verified);
    CHECK(format_params(Kind::SkewPDS, claim(c, Kind::SkewPDS).certificate->params) == "(361,90,29,20)");
}

TEST_CASE("pairs {i, 2i} on GF(13)")
{
    const auto f = Field::build(13, 1, std::nullopt, Elem{2});
    const Construction c = cycloskew::apply(recipe_by_id("R14"), f);
    CHECK(c.oracle_verified);
    const auto& edf = *claim(c, Kind::EDF).certificate;
    CHECK(as_set(edf.sets) == std::set<ElemSet>{{1, 2}, {3, 6}, {5, 9}});
    CHECK(format_params(edf.kind, edf.params) == "(13,3,2,2)");
    const auto& dpdf = *claim(c, Kind::RelativeDPDF).certificate;
    CHECK(format_params(dpdf.kind, dpdf.params) == "(13,3,2;1,0)");
    CHECK(dpdf.reference_set == ClassPartition(f, 2).members(0));
}

TEST_CASE("order-8 external families on GF(17) and GF(9)")
{
    const auto f17 = Field::build(17, 1, std::nullopt, Elem{3});
    const Construction a = cycloskew::apply(recipe_by_id("R22"), f17);
    const auto& epdf = *claim(a, Kind::RelativeEPDF).certificate;
    CHECK(format_params(epdf.kind, epdf.params) == "(17,4,2;4,2)");
    CHECK(as_set(epdf.sets) == std::set<ElemSet>{{1, 16}, {3, 14}, {4, 13}, {5, 12}});

    const auto f9 = Field::build(3, 2);
    const Construction b = cycloskew::apply(recipe_by_id("R23"), f9);
    const auto& e9 = *claim(b, Kind::RelativeEPDF).certificate;
    CHECK(format_params(e9.kind, e9.params) == "(9,2,1,2;0,1)");
    const DiffMultiset ext = family_external(*f9, e9.sets);
    const ClassPartition c2(f9, 2);
    for (Elem x : f9->nonzero()) {
        CHECK(ext.counts[x] == (c2.index_of(x) == 1 ? 1u : 0u));
    }
}

TEST_CASE("gamma = -1 gives the even classes of order (q-1)/2")
{
    for (auto [p, m] : prime_powers_in(5, 600)) {
        const std::uint64_t q = arith::ipow(p, m);
        if (q % 8 != 5) {
            continue;
        }
        const auto f = Field::build(p, m);
        const Family fam = gamma_pair_family(*f, f->neg(1));
        const ClassPartition half(f, (f->order() - 1) / 2);
        Family even;
        for (std::uint32_t j = 0; j < half.order(); j += 2) {
            even.push_back(half.members(j));
        }
        CHECK(as_set(fam) == as_set(even));
    }
}

TEST_CASE("pairs {i, gamma i} with gamma = 4 on GF(13)")
{
    const auto f = Field::build(13, 1, std::nullopt, Elem{2});
    const Family fam = gamma_pair_family(*f, 4);
    CHECK(as_set(fam) == std::set<ElemSet>{{1, 4}, {3, 12}, {9, 10}});
    const ElemSet squares = ClassPartition(f, 2).members(0);
    const Certificate ex = check_family(*f, fam, FamilyMode::External, squares);
    CHECK(format_params(ex.kind, ex.params) == "(13,3,2;1,3)");
    const Certificate in = check_family(*f, fam, FamilyMode::Internal, squares);
    CHECK(format_params(in.kind, in.params) == "(13,3,2;1,0)");
}

TEST_CASE("quadruples {±i, ±gamma i} on GF(25)")
{
    const auto f = Field::build(5, 2, std::vector<std::uint32_t>{3, 2, 1});
    const auto gammas = admissible_gammas(*f);
    CHECK(std::find(gammas.begin(), gammas.end(), Elem{3}) != gammas.end());
    const Family fam = symmetric_gamma_family(*f, 3);
    // D_1 = {1,2,3,4}, D_{a+3} = {a+3, 2a+1, 3a+4, 4a+2}, D_{a+4} = {a+4, 2a+3, 3a+2, 4a+1}
    CHECK(as_set(fam) == std::set<ElemSet>{{1, 2, 3, 4}, {8, 11, 19, 22}, {9, 13, 17, 21}});
    const Certificate ex = check_family(*f, fam, FamilyMode::External, ClassPartition(f, 2).members(0));
    CHECK(format_params(ex.kind, ex.params) == "(25,3,4;2,6)");
    CHECK(admissible_gammas(*Field::build(17, 1)).empty());
}

TEST_CASE("combining a skew PDS and a PDS into a relative DPDF")
{
    for (auto [p, m] : prime_powers_in(9, 2000)) {
        const auto f = Field::build(p, m);
        const Reps reps = reps_for(*f);
        if (recipe_by_id("R12").applicable(reps, f.get()) != Applicability::Yes) {
            continue;
        }
        const ClassPartition c8(f, 8);
        const ClassPartition c4(f, 4);
        const Certificate cert =
            swap_combinator(*f, {{c8.union_of({3, 5}), c4.members(0)}, {c8.union_of({2, 6}), c4.members(2)}});
        const std::int64_t q = f->order();
        const std::int64_t x = *reps.x;
        CHECK(cert.kind == Kind::RelativeDPDF);
        CHECK(cert.reference_set == ClassPartition(f, 2).members(0));
        CHECK(cert.params.lambda == (q - 7 - 2 * x) / 8);
        CHECK(cert.params.mu == (q - 3 + 2 * x) / 8);
    }
}

TEST_CASE("skew PDS from a DPDF and EDF pair")
{
    const auto f = Field::build(13, 1, std::nullopt, Elem{2});
    const ClassPartition c2(f, 2);
    const Certificate cert = skew_from_families(*f, {{1, 2}, {3, 6}, {5, 9}}, c2.members(0));
    CHECK(cert.kind == Kind::SkewPDS);
    CHECK(cert.sets.front() == ElemSet{1, 2, 3, 5, 6, 9});
    CHECK(cert.reference_set == c2.members(1));

    const Certificate trivial = skew_from_families(*f, {c2.members(0)}, c2.members(0));
    CHECK(trivial.kind == Kind::TrivialSkewPDS);

    CHECK(code_of([&] { skew_from_families(*f, {{1, 2}, {3, 4}}, c2.members(0)); }) == ErrorCode::HypothesisNotMet);
}

TEST_CASE("applicability and errors")
{
    CHECK(code_of([] { cycloskew::apply(recipe_by_id("R1"), Field::build(7, 1)); }) == ErrorCode::NotApplicable);
    const Construction pred = predict(recipe_by_id("R10"), 6563, 2);
    CHECK(pred.claims.size() >= 1);
    CHECK(pred.claims.front().status == ClaimStatus::Unverified);
    CHECK(format_params(pred.claims.front().claim.kind, pred.claims.front().claim.params) ==
          "(43072969,21536484,10768241,10768242)");
}

TEST_CASE("enumeration")
{
    CHECK(enumerate_applicable({14, 16, {}, 5000}).empty());
    CHECK(enumerate_applicable({100, 10, {}, 5000}).empty());

    std::vector<std::uint64_t> qs;
    for (const auto& c : enumerate_applicable({1, 9999, {"R1"}, 0})) {
        qs.push_back(c.q);
    }
    // q = 5 is applicable but its skew set is trivial, so the table omits it
    CHECK(qs == std::vector<std::uint64_t>{5, 13, 29, 53, 125, 173, 229, 293, 733, 1093, 1229, 1373, 2029, 2213,
                                           3253, 4229, 4493, 5333, 7229, 7573, 9029, 9413});

    std::vector<std::uint64_t> ells;
    for (const auto& c : enumerate_applicable({1, 100000000, {"R10"}, 0, 0})) {
        ells.push_back(c.q);
    }
    CHECK(ells == std::vector<std::uint64_t>{9, 121, 729, 6889, 51529, 196249, 1190281, 2319529, 4108729,
                                             10569001, 43072969, 96098809});

    const auto scan = enumerate_applicable({9, 400, {}, 5000});
    for (std::size_t i = 1; i < scan.size(); ++i) {
        const bool ordered = scan[i - 1].q < scan[i].q ||
                             (scan[i - 1].q == scan[i].q &&
                              std::stoi(scan[i - 1].recipe.substr(1)) < std::stoi(scan[i].recipe.substr(1)));
        CHECK(ordered);
    }
    const bool has361 = std::any_of(scan.begin(), scan.end(), [](const Construction& c) {
        return c.q == 361 && c.recipe == "R5" && c.oracle_verified;
    });
    CHECK(has361);
}

TEST_CASE("enumeration finds every applicable recipe")
{
    std::vector<std::pair<std::uint64_t, std::string>> expected;
    for (auto [p, m] : prime_powers_in(3, 2000)) {
        const auto f = Field::build(p, m);
        const Reps reps = reps_for(*f);
        for (const auto& r : registry()) {
            if (r.applicable(reps, f.get()) == Applicability::Yes) {
                expected.emplace_back(f->order(), r.id);
            }
        }
    }
    std::vector<std::pair<std::uint64_t, std::string>> found;
    for (const auto& c : enumerate_applicable({3, 2000, {}, 0})) {
        found.emplace_back(c.q, c.recipe);
    }
    CHECK(found == expected);
}

TEST_CASE("prime powers in a range")
{
    const auto pp = prime_powers_in(1, 30);
    std::vector<std::uint64_t> qs;
    for (auto [p, m] : pp) {
        qs.push_back(arith::ipow(p, m));
    }
    CHECK(qs == std::vector<std::uint64_t>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29});
}
