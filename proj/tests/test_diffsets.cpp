#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "cycloskew/arith.hpp"
#include "cycloskew/cyclotomy.hpp"
#include "cycloskew/diffsets.hpp"
#include "cycloskew/error.hpp"
#include "oracle.hpp"

using namespace cycloskew;

namespace {

FieldPtr gf13() { return Field::build(13, 1, std::nullopt, Elem{2}); }

std::vector<FieldPtr> fields_with(std::uint64_t hi, std::uint32_t e)
{
    std::vector<FieldPtr> out;
    for (std::uint64_t q = 3; q <= hi; ++q) {
        if ((q - 1) % e != 0) {
            continue;
        }
        if (const auto pm = arith::as_prime_power(q)) {
            out.push_back(Field::build(static_cast<std::uint32_t>(pm->first), pm->second));
        }
    }
    return out;
}

ErrorCode code_of(const std::function<void()>& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::ParseError;
}

// Union of the classes whose bit is set in mask.
ElemSet union_by_mask(const ClassPartition& part, std::uint32_t mask)
{
    std::vector<std::int64_t> idx;
    for (std::uint32_t i = 0; i < part.order(); ++i) {
        if (mask >> i & 1) {
            idx.push_back(i);
        }
    }
    return part.union_of(idx);
}

std::set<oracle::Code> to_set(const ElemSet& s) { return {s.begin(), s.end()}; }

ElemSet with_zero(ElemSet s)
{
    s.insert(s.begin(), 0);
    return s;
}

ElemSet without_zero(ElemSet s)
{
    if (!s.empty() && s.front() == 0) {
        s.erase(s.begin());
    }
    return s;
}

}  // namespace

TEST_CASE("internal differences")
{
    const auto f = gf13();
    const DiffMultiset pair = internal_differences(*f, {1, 2});
    CHECK(pair.total == 2);
    CHECK(pair.counts[1] == 1);
    CHECK(pair.counts[12] == 1);

    const ClassPartition c2(f, 2);
    const DiffMultiset paley = internal_differences(*f, c2.members(0));
    for (Elem x : c2.members(0)) {
        CHECK(paley.counts[x] == 2);
    }
    for (Elem x : c2.members(1)) {
        CHECK(paley.counts[x] == 3);
    }

    // GF(9) as GF(3)[x]/(x^2+2x+2); D = {1, a, a+1, 2a}
    const auto f9 = Field::build(3, 2, std::vector<std::uint32_t>{2, 2, 1});
    const ClassPartition c9(f9, 2);
    const DiffMultiset d9 = internal_differences(*f9, {1, 3, 4, 6});
    for (Elem x : c9.members(0)) {
        CHECK(d9.counts[x] == 1);
    }
    for (Elem x : c9.members(1)) {
        CHECK(d9.counts[x] == 2);
    }
}

TEST_CASE("cross differences")
{
    const auto f = gf13();
    const DiffMultiset a = cross_differences(*f, {1, 2}, {3, 6});
    for (Elem x : {8u, 9u, 11u, 12u}) {
        CHECK(a.counts[x] == 1);
    }
    CHECK(a.total == 4);
    const DiffMultiset b = cross_differences(*f, {9, 5}, {3, 6});
    for (Elem x : {2u, 3u, 6u, 12u}) {
        CHECK(b.counts[x] == 1);
    }
    const DiffMultiset c = cross_differences(*f, {4}, {4});
    CHECK(c.counts[0] == 1);
    CHECK(c.total == 1);
}

TEST_CASE("family differences")
{
    const auto f = gf13();
    const Family fam = {{1, 2}, {3, 6}, {5, 9}};
    const ClassPartition c2(f, 2);
    const DiffMultiset in = family_internal(*f, fam);
    const DiffMultiset ex = family_external(*f, fam);
    for (Elem x : f->nonzero()) {
        const bool square = c2.index_of(x) == 0;
        CHECK(in.counts[x] == (square ? 1u : 0u));
        CHECK(ex.counts[x] == 2);
    }
    CHECK(family_external(*f, {{1, 2}}).total == 0);
}

TEST_CASE("set validation")
{
    const auto f = gf13();
    CHECK(normalize_set(*f, {9, 1, 3}) == ElemSet{1, 3, 9});
    CHECK(code_of([&] { normalize_set(*f, {1, 1}); }) == ErrorCode::DuplicateElement);
    CHECK(code_of([&] { normalize_set(*f, {13}); }) == ErrorCode::ElementOutOfRange);
    CHECK(code_of([&] { validate_family(*f, {{1, 2}, {2, 3}}); }) == ErrorCode::NotDisjoint);
    CHECK(code_of([&] { validate_family(*f, {{0, 2}, {3}}); }) == ErrorCode::ContainsZero);
}

TEST_CASE("PDS certificates")
{
    const auto f = gf13();
    const Certificate paley = check_pds(*f, ClassPartition(f, 2).members(0));
    CHECK(paley.kind == Kind::PDS);
    CHECK(format_params(paley.kind, paley.params) == "(13,6,2,3)");
    CHECK(paley.pds_type == PdsType::Paley);
    CHECK(paley.regular);

    const auto f9 = Field::build(3, 2);
    const Certificate ls = check_pds(*f9, ClassPartition(f9, 4).members(0));
    CHECK(format_params(ls.kind, ls.params) == "(9,2,1,0)");
    CHECK(ls.pds_type == PdsType::LatinSquare);
    CHECK(ls.ls_n == 3);
    CHECK(ls.ls_r == 1);

    const auto f81 = Field::build(3, 4);
    const Certificate nls = check_pds(*f81, ClassPartition(f81, 4).members(0));
    CHECK(format_params(nls.kind, nls.params) == "(81,20,1,6)");
    CHECK(nls.pds_type == PdsType::NegativeLatinSquare);
    CHECK(nls.ls_n == 9);
    CHECK(nls.ls_r == 2);

    CHECK(check_pds(*f, {1, 2}).kind == Kind::None);
}

TEST_CASE("skew PDS certificates")
{
    const auto f = gf13();
    const Certificate skew = check_skew_pds(*f, {1, 3, 7, 8, 9, 11});
    CHECK(skew.kind == Kind::SkewPDS);
    CHECK_FALSE(skew.trivial);
    CHECK(format_params(skew.kind, skew.params) == "(13,6,2,3)");
    CHECK(skew.reference_set == ElemSet{1, 3, 4, 9, 10, 12});

    const Certificate itself = check_skew_pds(*f, {1, 3, 4, 9, 10, 12});
    CHECK(itself.kind == Kind::TrivialSkewPDS);
    CHECK(itself.trivial);

    const auto f361 = Field::build(19, 2);
    const ClassPartition c8(f361, 8);
    const Certificate big = check_skew_pds(*f361, c8.union_of({3, 5}));
    CHECK(big.kind == Kind::SkewPDS);
    CHECK(format_params(big.kind, big.params) == "(361,90,29,20)");
    CHECK(big.reference_set == ClassPartition(f361, 4).members(0));

    CHECK(check_skew_pds(*f, {1, 2, 3}).kind == Kind::None);
}

TEST_CASE("difference family certificates")
{
    const auto f89 = Field::build(89, 1);
    const ClassPartition c8(f89, 8);
    const Certificate rel =
        check_family(*f89, {c8.members(0), c8.members(2)}, FamilyMode::Internal, ClassPartition(f89, 2).members(0));
    CHECK(rel.kind == Kind::RelativeDPDF);
    CHECK(format_params(rel.kind, rel.params) == "(89,2,11;1,4)");

    const auto f41 = Field::build(41, 1);
    const ClassPartition d8(f41, 8);
    const Certificate ddf = check_family(*f41, {d8.members(0), d8.members(2)}, FamilyMode::Internal);
    CHECK(ddf.kind == Kind::DDF);
    CHECK(format_params(ddf.kind, ddf.params) == "(41,2,5,1)");

    const auto f = gf13();
    const Family fam = {{1, 2}, {3, 6}, {5, 9}};
    const Certificate edf = check_family(*f, fam, FamilyMode::External);
    CHECK(edf.kind == Kind::EDF);
    CHECK(format_params(edf.kind, edf.params) == "(13,3,2,2)");
    const Certificate dpdf = check_family(*f, fam, FamilyMode::Internal, ClassPartition(f, 2).members(0));
    CHECK(dpdf.kind == Kind::RelativeDPDF);
    CHECK(format_params(dpdf.kind, dpdf.params) == "(13,3,2;1,0)");

    CHECK(check_family(*f, {{1}}, FamilyMode::Internal).kind == Kind::None);
}

TEST_CASE("almost difference sets")
{
    const auto f = gf13();
    const Certificate a = check_ads(*f, {1, 3, 4, 9, 10, 12});
    CHECK(a.kind == Kind::ADS);
    CHECK(format_params(a.kind, a.params) == "(13,6,2,6)");
    const Certificate b = check_ads(*f, {1, 3, 7, 8, 9, 11});
    CHECK(b.kind == Kind::ADS);
    CHECK(b.params == a.params);

    const auto f9 = Field::build(3, 2);
    const Certificate c = check_ads(*f9, ClassPartition(f9, 4).members(0));
    CHECK(c.kind == Kind::ADS);
    CHECK(format_params(c.kind, c.params) == "(9,2,0,6)");
}

TEST_CASE("difference counts match the map oracle and are symmetric")
{
    std::mt19937 rng(3);
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{13, 1}, {3, 3}, {5, 2}, {2, 6}, {97, 1}}) {
        const auto f = Field::build(p, m);
        const oracle::NaiveField ref(p, f->spec().poly);
        std::vector<Elem> all(f->order());
        std::iota(all.begin(), all.end(), 0);
        for (int trial = 0; trial < 40; ++trial) {
            std::shuffle(all.begin(), all.end(), rng);
            const std::size_t k = 1 + rng() % (f->order() - 1);
            ElemSet d(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(k));
            std::sort(d.begin(), d.end());
            const DiffMultiset dm = internal_differences(*f, d);
            const auto expected = oracle::internal(ref, d);
            CHECK(dm.total == k * (k - 1));
            for (Elem g = 0; g < f->order(); ++g) {
                const auto it = expected.find(g);
                CHECK(dm.counts[g] == (it == expected.end() ? 0 : it->second));
                CHECK(dm.counts[g] == dm.counts[f->neg(g)]);
            }
        }
    }
}

TEST_CASE("PDS detection agrees with the oracle; counting identity and A = -A")
{
    for (std::uint32_t e : {2u, 4u, 8u}) {
        for (const auto& f : fields_with(200, e)) {
            const ClassPartition part(f, e);
            const oracle::NaiveField ref(f->characteristic(), f->spec().poly);
            for (std::uint32_t mask = 1; mask + 1 < (1u << e); ++mask) {
                const ElemSet a = union_by_mask(part, mask);
                const Certificate cert = check_pds(*f, a);
                const auto lv = oracle::levels(ref, oracle::internal(ref, a), to_set(a));
                CHECK((cert.kind == Kind::PDS) == (lv.in >= 0));
                if (cert.kind != Kind::PDS) {
                    continue;
                }
                const std::int64_t v = f->order();
                const auto k = static_cast<std::int64_t>(a.size());
                CHECK(cert.params.lambda == lv.in);
                CHECK(cert.params.mu == lv.out);
                CHECK(k * (k - 1) == cert.params.lambda * k + cert.params.mu * (v - 1 - k));
                if (cert.params.lambda != cert.params.mu) {
                    CHECK(negate(*f, a) == a);
                }
            }
        }
    }
}

TEST_CASE("symmetric PDS variants are PDSs")
{
    std::size_t seen = 0;
    for (std::uint32_t e : {2u, 4u, 8u}) {
        for (const auto& f : fields_with(200, e)) {
            const ClassPartition part(f, e);
            for (std::uint32_t mask = 1; mask + 1 < (1u << e); ++mask) {
                const ElemSet a = union_by_mask(part, mask);
                if (negate(*f, a) != a || check_pds(*f, a).kind != Kind::PDS) {
                    continue;
                }
                ++seen;
                const ElemSet rest = complement(*f, a, true);
                for (const ElemSet& variant :
                     {without_zero(a), with_zero(a), rest, without_zero(rest), with_zero(without_zero(rest))}) {
                    CHECK(check_pds(*f, variant).kind == Kind::PDS);
                }
            }
        }
    }
    CHECK(seen > 100);
}

TEST_CASE("skew detection agrees with the oracle")
{
    std::size_t nontrivial = 0;
    for (std::uint32_t e : {4u, 8u}) {
        for (const auto& f : fields_with(120, e)) {
            const ClassPartition part(f, e);
            const oracle::NaiveField ref(f->characteristic(), f->spec().poly);
            for (std::uint32_t mask = 1; mask + 1 < (1u << e); ++mask) {
                if (std::popcount(mask) * 2 != static_cast<int>(e)) {
                    continue;
                }
                const ElemSet d = union_by_mask(part, mask);
                const Certificate cert = check_skew_pds(*f, d);
                // oracle: two-valued profile, lambda-set is a PDS with the same parameters
                const auto dm = oracle::internal(ref, d);
                std::map<std::uint64_t, std::set<oracle::Code>> by_value;
                for (Elem g = 1; g < f->order(); ++g) {
                    const auto it = dm.find(g);
                    by_value[it == dm.end() ? 0 : it->second].insert(g);
                }
                bool skewish = false;
                if (by_value.size() == 2) {
                    for (const auto& [lambda, aset] : by_value) {
                        if (aset.size() != d.size()) {
                            continue;
                        }
                        const std::vector<oracle::Code> av(aset.begin(), aset.end());
                        const auto lv = oracle::levels(ref, oracle::internal(ref, av), aset);
                        if (lv.in == static_cast<std::int64_t>(lambda) && lv.out >= 0 && lv.in != lv.out) {
                            skewish = true;
                            CHECK(cert.reference_set == ElemSet(av));
                        }
                    }
                }
                CHECK((cert.kind == Kind::SkewPDS || cert.kind == Kind::TrivialSkewPDS) == skewish);
                nontrivial += cert.kind == Kind::SkewPDS ? 1 : 0;
                if (cert.kind == Kind::SkewPDS || cert.kind == Kind::TrivialSkewPDS) {
                    CHECK(complement_law_holds(*f, cert));
                    CHECK(reverify(*f, cert));
                }
            }
        }
    }
    CHECK(nontrivial > 10);
}

TEST_CASE("internal plus external differences of a disjoint family equal those of its union")
{
    std::mt19937 rng(17);
    std::vector<FieldPtr> fields;
    for (std::uint64_t q = 3; q <= 500; ++q) {
        if (const auto pm = arith::as_prime_power(q)) {
            fields.push_back(Field::build(static_cast<std::uint32_t>(pm->first), pm->second));
        }
    }
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& f = fields[rng() % fields.size()];
        std::vector<Elem> all = f->nonzero();
        std::shuffle(all.begin(), all.end(), rng);
        const std::size_t sets = 1 + rng() % 5;
        Family fam;
        std::size_t used = 0;
        for (std::size_t i = 0; i < sets && used < all.size(); ++i) {
            const std::size_t k = 1 + rng() % std::max<std::size_t>(1, std::min<std::size_t>(12, (all.size() - used)));
            ElemSet s(all.begin() + static_cast<std::ptrdiff_t>(used),
                      all.begin() + static_cast<std::ptrdiff_t>(std::min(all.size(), used + k)));
            used += s.size();
            std::sort(s.begin(), s.end());
            fam.push_back(std::move(s));
        }
        ElemSet u;
        for (const auto& s : fam) {
            u.insert(u.end(), s.begin(), s.end());
        }
        std::sort(u.begin(), u.end());
        DiffMultiset sum = family_internal(*f, fam);
        sum += family_external(*f, fam);
        CHECK(sum == internal_differences(*f, u));
    }
}

TEST_CASE("two-level profiles")
{
    const auto f = gf13();
    const ElemSet squares = ClassPartition(f, 2).members(0);
    const auto lv = two_level_profile(*f, internal_differences(*f, squares), squares);
    REQUIRE(lv);
    CHECK(lv->inside == 2);
    CHECK(lv->outside == 3);
    CHECK_FALSE(two_level_profile(*f, internal_differences(*f, {1, 2}), squares));
}

TEST_CASE("kind names round trip")
{
    for (Kind k : {Kind::None, Kind::PDS, Kind::TrivialSkewPDS, Kind::SkewPDS, Kind::ADS, Kind::DDF, Kind::EDF,
                   Kind::DPDF, Kind::EPDF, Kind::RelativeDPDF, Kind::RelativeEPDF}) {
        CHECK(kind_from_string(to_string(k)) == k);
    }
    for (PdsType t : {PdsType::None, PdsType::Paley, PdsType::DS, PdsType::LatinSquare,
                      PdsType::NegativeLatinSquare, PdsType::Other}) {
        CHECK(pds_type_from_string(to_string(t)) == t);
    }
}
