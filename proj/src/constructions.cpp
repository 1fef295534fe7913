#include "cycloskew/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "cycloskew/arith.hpp"
#include "cycloskew/cyclotomy.hpp"
#include "cycloskew/error.hpp"
#include "cycloskew/numtheory.hpp"
#include "cycloskew/parallel.hpp"

namespace cycloskew {

namespace {

using I = std::int64_t;

I exact(I num, I den)
{
    const auto v = arith::exact_div(num, den);
    if (!v) {
        throw Error(ErrorCode::PredictionMismatch,
                    "formula " + std::to_string(num) + "/" + std::to_string(den) + " is not integral");
    }
    return *v;
}

// C_i^e in increasing code order.
ElemSet class_members(const Field& field, std::uint32_t e, std::uint32_t i)
{
    ElemSet out;
    const std::uint64_t f = (field.order() - 1) / e;
    out.reserve(f);
    for (std::uint64_t k = 0; k < f; ++k) {
        out.push_back(field.exp(static_cast<std::int64_t>(k * e + i)));
    }
    std::sort(out.begin(), out.end());
    return out;
}

// A union of cyclotomic classes of one order, optionally with 0.
struct ClassSet {
    std::uint32_t e = 2;
    std::vector<I> idx;
    bool zero = false;
};

std::string describe(const ClassSet& set)
{
    std::ostringstream out;
    for (std::size_t i = 0; i < set.idx.size(); ++i) {
        out << (i ? " ∪ " : "") << "C_" << arith::mod(set.idx[i], set.e) << "^" << set.e;
    }
    if (set.zero) {
        out << " ∪ {0}";
    }
    return out.str();
}

std::string describe(const std::vector<ClassSet>& sets)
{
    std::string out = "{";
    for (std::size_t i = 0; i < sets.size(); ++i) {
        out += (i ? ", " : "") + describe(sets[i]);
    }
    return out + "}";
}

class Builder {
public:
    Builder(const Reps& reps, FieldPtr field) : reps_(reps), field_(std::move(field)) {}

    bool has_field() const { return field_ != nullptr; }
    I q() const { return static_cast<I>(reps_.q); }

    ElemSet build(const ClassSet& set)
    {
        if (!field_) {
            return {};
        }
        ElemSet out = partition(set.e).union_of(std::span<const I>(set.idx));
        if (set.zero) {
            out.insert(out.begin(), 0);
        }
        return out;
    }

    const ClassPartition& partition(std::uint32_t e)
    {
        auto it = parts_.find(e);
        if (it == parts_.end()) {
            it = parts_.emplace(e, std::make_unique<ClassPartition>(field_, e)).first;
        }
        return *it->second;
    }

    Params single_params(I k, I lambda, I mu) const
    {
        Params p;
        p.v = q();
        p.k = {k};
        p.lambda = lambda;
        p.mu = mu;
        return p;
    }

    Params family_params(std::vector<I> k, I lambda, I mu) const
    {
        Params p;
        p.v = q();
        p.m = static_cast<I>(k.size());
        p.k = std::move(k);
        p.lambda = lambda;
        p.mu = mu;
        return p;
    }

    Params paley() const { return single_params((q() - 1) / 2, (q() - 5) / 4, (q() - 1) / 4); }

    Claim skew(std::string label, const ClassSet& d, const ClassSet& a, Params params)
    {
        Claim c;
        c.label = std::move(label);
        c.mode = ClaimMode::Skew;
        c.kind = Kind::SkewPDS;
        c.params = std::move(params);
        c.sets_desc = describe(d);
        c.reference_desc = describe(a);
        if (field_) {
            c.sets = {build(d)};
            c.reference = build(a);
        }
        return c;
    }

    // Relative family when t is given; DDF/EDF when lambda == mu.
    Claim family(std::string label, ClaimMode mode, const std::vector<ClassSet>& sets,
                 const std::optional<ClassSet>& t, Params params)
    {
        Claim c;
        c.label = std::move(label);
        c.mode = mode;
        c.params = std::move(params);
        c.sets_desc = describe(sets);
        const bool internal = mode == ClaimMode::Internal;
        if (c.params.lambda == c.params.mu) {
            c.kind = internal ? Kind::DDF : Kind::EDF;
        } else {
            c.kind = internal ? Kind::RelativeDPDF : Kind::RelativeEPDF;
            c.reference_desc = t ? describe(*t) : "";
        }
        if (field_) {
            for (const auto& s : sets) {
                c.sets.push_back(build(s));
            }
            if (t && (c.kind == Kind::RelativeDPDF || c.kind == Kind::RelativeEPDF)) {
                c.reference = build(*t);
            }
        }
        return c;
    }

    // Standard DPDF/EPDF measured against S = union of the family.
    Claim standard_family(std::string label, ClaimMode mode, Family sets, std::string desc, Params params)
    {
        Claim c;
        c.label = std::move(label);
        c.mode = mode;
        c.params = std::move(params);
        c.sets_desc = std::move(desc);
        const bool internal = mode == ClaimMode::Internal;
        if (c.params.lambda == c.params.mu) {
            c.kind = internal ? Kind::DDF : Kind::EDF;
        } else {
            c.kind = internal ? Kind::DPDF : Kind::EPDF;
            c.reference_desc = "union of the family";
            for (const auto& s : sets) {
                c.reference.insert(c.reference.end(), s.begin(), s.end());
            }
            std::sort(c.reference.begin(), c.reference.end());
        }
        c.sets = std::move(sets);
        return c;
    }

private:
    const Reps& reps_;
    FieldPtr field_;
    std::map<std::uint32_t, std::unique_ptr<ClassPartition>> parts_;
};

ClassSet cs(std::uint32_t e, std::vector<I> idx, bool zero = false)
{
    return ClassSet{e, std::move(idx), zero};
}

Applicability yes_if(bool cond)
{
    return cond ? Applicability::Yes : Applicability::No;
}

bool q5mod8(const Reps& r)
{
    return r.q % 8 == 5;
}

bool t_is_two(const Reps& r)
{
    return q5mod8(r) && r.t && std::llabs(*r.t) == 2;
}

bool ternary_eight(const Reps& r)
{
    return r.p % 8 == 3 && r.m % 4 == 2;
}

// ell with q = ell^2, ell a prime power.
std::optional<I> ell_of(const Reps& r)
{
    if (r.m % 2 != 0) {
        return std::nullopt;
    }
    return static_cast<I>(arith::ipow(r.p, r.m / 2));
}

bool ell_half_square(const Reps& r)
{
    const auto ell = ell_of(r);
    return ell && *ell % 8 == 3 && arith::is_square(static_cast<std::uint64_t>(2 * (*ell - 1)));
}

bool ell_square_plus_two(const Reps& r)
{
    const auto ell = ell_of(r);
    return ell && *ell % 8 == 3 && arith::is_square(static_cast<std::uint64_t>(*ell - 2));
}

// t = -2 picks the first reference, t = 2 the second.
I by_t(const Reps& r, I if_minus, I if_plus)
{
    return r.t.value_or(2) < 0 ? if_minus : if_plus;
}

std::vector<Claim> skew_c0c3(const Reps& r, const FieldPtr& f, std::vector<I> classes, bool minus_gets_c0)
{
    Builder b(r, f);
    const I ref = by_t(r, minus_gets_c0 ? 0 : 1, minus_gets_c0 ? 1 : 0);
    return {b.skew("D", cs(4, std::move(classes)), cs(2, {ref}), b.paley())};
}

std::vector<Claim> skew_c3c5_main(const Reps& r, const FieldPtr& f, I x)
{
    Builder b(r, f);
    const I q = b.q();
    const Params params = b.single_params((q - 1) / 4, exact(q - 11 - 6 * x, 16), exact(q - 3 + 2 * x, 16));
    return {b.skew("D", cs(8, {3, 5}), cs(4, {0}), params)};
}

std::vector<Claim> skew_c3c5(const Reps& r, const FieldPtr& f)
{
    std::vector<Claim> out = skew_c3c5_main(r, f, *r.x);
    Builder b(r, f);
    const Params params = out.front().params;
    for (I i = 0; i < 8; ++i) {
        out.push_back(b.skew("shift i=" + std::to_string(i), cs(8, {i, i + 2}), cs(4, {i + 1}), params));
    }
    return out;
}

std::vector<Claim> paley_c0c1c2c5(const Reps& r, const FieldPtr& f)
{
    Builder b(r, f);
    return {b.skew("D", cs(8, {0, 1, 2, 5}), cs(2, {0}), b.paley())};
}

// Smallest gamma in C_2^4 of each kind (1 - gamma in C_0^2 or not).
std::pair<std::optional<Elem>, std::optional<Elem>> gamma_split(const Field& field)
{
    std::optional<Elem> outside;
    std::optional<Elem> inside;
    for (Elem g : class_members(field, 4, 2)) {
        const Elem one_minus = field.sub(1, g);
        const bool square = one_minus != 0 && field.log(one_minus) % 2 == 0;
        if (square && !inside) {
            inside = g;
        }
        if (!square && !outside) {
            outside = g;
        }
    }
    return {outside, inside};
}

std::vector<Recipe> make_registry()
{
    std::vector<Recipe> reg;

    reg.push_back({"R1", "skew-c0c3-order4", "C_0^4 ∪ C_3^4 is a Paley skew PDS",
                   "q = 5 mod 8, t = ±2", {"(q,(q-1)/2,(q-5)/4,(q-1)/4)", "reference C_0^2 if t=-2, C_1^2 if t=2"},
                   [](const Reps& r, const Field*) { return yes_if(t_is_two(r)); },
                   [](const Reps& r, const FieldPtr& f) { return skew_c0c3(r, f, {0, 3}, true); }});

    reg.push_back({"R2", "skew-c0c1-order4", "C_0^4 ∪ C_1^4 is a Paley skew PDS",
                   "q = 5 mod 8, t = ±2", {"(q,(q-1)/2,(q-5)/4,(q-1)/4)", "reference C_1^2 if t=-2, C_0^2 if t=2"},
                   [](const Reps& r, const Field*) { return yes_if(t_is_two(r)); },
                   [](const Reps& r, const FieldPtr& f) { return skew_c0c3(r, f, {0, 1}, false); }});

    reg.push_back({"R3", "skew-c1c2-order4", "-D = G^* minus D = C_1^4 ∪ C_2^4 is a Paley skew PDS",
                   "q = 5 mod 8, t = ±2", {"(q,(q-1)/2,(q-5)/4,(q-1)/4)", "reference C_0^2 if t=-2, C_1^2 if t=2"},
                   [](const Reps& r, const Field*) { return yes_if(t_is_two(r)); },
                   [](const Reps& r, const FieldPtr& f) { return skew_c0c3(r, f, {1, 2}, true); }});

    reg.push_back({"R4", "skew-complement-order4", "G minus D = C_1^4 ∪ C_2^4 ∪ {0} is a skew PDS",
                   "q = 5 mod 8, t = ±2",
                   {"(q,(q+1)/2,(q+3)/4,(q-1)/4)", "reference C_1^2 ∪ {0} if t=-2, C_0^2 ∪ {0} if t=2"},
                   [](const Reps& r, const Field*) { return yes_if(t_is_two(r)); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       Claim c = b.skew("G minus D", cs(4, {1, 2}, true), cs(2, {by_t(r, 1, 0)}, true),
                                        b.single_params((q + 1) / 2, (q + 3) / 4, (q - 1) / 4));
                       c.suspect = "claimed (q-1)/4 and (q+3)/4 are in the other order; "
                                   "the complement law gives (q+3)/4 on the reference";
                       return std::vector<Claim>{c};
                   }});

    reg.push_back({"R5", "skew-c3c5-order8", "C_3^8 ∪ C_5^8 is a skew PDS for C_0^4; C_i^8 ∪ C_{i+2}^8 for C_{i+1}^4",
                   "p = 3 mod 8, m = 2 mod 4, x + a = -2",
                   {"(q,(q-1)/4,(q-11-6x)/16,(q-3+2x)/16)"},
                   [](const Reps& r, const Field*) { return yes_if(ternary_eight(r) && *r.x + *r.a == -2); },
                   skew_c3c5});

    reg.push_back({"R6", "skew-c3c5-complement-negative",
                   "G minus (C_3^8 ∪ C_5^8) and -(C_3^8 ∪ C_5^8) = C_1^8 ∪ C_7^8 are skew PDSs",
                   "p = 3 mod 8, m = 2 mod 4, x + a = -2",
                   {"(q,(3q+1)/4,(9q+2x+5)/16,(9q-6x-3)/16) for C_1^4 ∪ C_2^4 ∪ C_3^4 ∪ {0}",
                    "(q,(q-1)/4,(q-11-6x)/16,(q-3+2x)/16) for C_0^4"},
                   [](const Reps& r, const Field*) { return yes_if(ternary_eight(r) && *r.x + *r.a == -2); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       const I x = *r.x;
                       std::vector<Claim> out;
                       out.push_back(b.skew("G minus D", cs(8, {0, 1, 2, 4, 6, 7}, true), cs(4, {1, 2, 3}, true),
                                            b.single_params((3 * q + 1) / 4, exact(9 * q + 2 * x + 5, 16),
                                                            exact(9 * q - 6 * x - 3, 16))));
                       out.push_back(b.skew("-D", cs(8, {1, 7}), cs(4, {0}),
                                            b.single_params((q - 1) / 4, exact(q - 11 - 6 * x, 16),
                                                            exact(q - 3 + 2 * x, 16))));
                       return out;
                   }});

    reg.push_back({"R7", "skew-c3c5-from-ell", "C_3^8 ∪ C_5^8 is a skew PDS for C_0^4 when q = ell^2, ell = c^2/2 + 1",
                   "q = ell^2, ell = 3 mod 8 a prime power, 2(ell-1) a square",
                   {"(q,(q-1)/4,(q-11+6 ell)/16,(q-3-2 ell)/16)"},
                   [](const Reps& r, const Field*) { return yes_if(ell_half_square(r)); },
                   [](const Reps& r, const FieldPtr& f) { return skew_c3c5_main(r, f, -*ell_of(r)); }});

    reg.push_back({"R8", "skew-paley-c0c1c2c5", "C_0^8 ∪ C_1^8 ∪ C_2^8 ∪ C_5^8 is a skew Paley PDS for C_0^2",
                   "p = 3 mod 8, m = 2 mod 4, a = x + 4", {"(q,(q-1)/2,(q-5)/4,(q-1)/4)"},
                   [](const Reps& r, const Field*) { return yes_if(ternary_eight(r) && *r.a == *r.x + 4); },
                   paley_c0c1c2c5});

    reg.push_back({"R9", "skew-paley-c0c1c2c5-complement-negative",
                   "G minus D = C_3^8 ∪ C_4^8 ∪ C_6^8 ∪ C_7^8 ∪ {0} and -D = C_1^8 ∪ C_4^8 ∪ C_5^8 ∪ C_6^8 are skew PDSs",
                   "p = 3 mod 8, m = 2 mod 4, a = x + 4",
                   {"(q,(q+1)/2,(q+3)/4,(q-1)/4) for C_1^2 ∪ {0}", "(q,(q-1)/2,(q-5)/4,(q-1)/4) for C_0^2"},
                   [](const Reps& r, const Field*) { return yes_if(ternary_eight(r) && *r.a == *r.x + 4); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       std::vector<Claim> out;
                       out.push_back(b.skew("G minus D", cs(8, {3, 4, 6, 7}, true), cs(2, {1}, true),
                                            b.single_params((q + 1) / 2, (q + 3) / 4, (q - 1) / 4)));
                       out.push_back(b.skew("-D", cs(8, {1, 4, 5, 6}), cs(2, {0}), b.paley()));
                       return out;
                   }});

    reg.push_back({"R10", "skew-paley-c0c1c2c5-from-ell",
                   "C_0^8 ∪ C_1^8 ∪ C_2^8 ∪ C_5^8 is a skew Paley PDS for C_0^2 when q = ell^2, ell = d^2 + 2",
                   "q = ell^2, ell = d^2 + 2 = 3 mod 8 a prime power", {"(q,(q-1)/2,(q-5)/4,(q-1)/4)"},
                   [](const Reps& r, const Field*) { return yes_if(ell_square_plus_two(r)); },
                   paley_c0c1c2c5});

    reg.push_back({"R11", "dpdf-single-c0-order8", "{C_0^8} is a one-set DPDF relative to C_0^2",
                   "q = 9 mod 16, 2 a quartic residue, a = 1", {"(q,1,(q-1)/8;(q-15-2x)/64,(q-3+2x)/64)"},
                   [](const Reps& r, const Field*) { return yes_if(r.q % 16 == 9 && *r.two_quartic && *r.a == 1); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       const I x = *r.x;
                       Claim c = b.family("{C_0^8}", ClaimMode::Internal, {cs(8, {0})}, cs(2, {0}),
                                          b.family_params({(q - 1) / 8}, exact(q - 15 - 2 * x, 64),
                                                          exact(q - 3 + 2 * x, 64)));
                       c.suspect = "claimed frequency formula does not hold; values taken from the cyclotomic numbers";
                       return std::vector<Claim>{c};
                   }});

    reg.push_back({"R12", "dpdf-c3c5-c2c6", "{C_3^8 ∪ C_5^8, C_2^8 ∪ C_6^8} and {C_0^8 ∪ C_2^8, C_3^8 ∪ C_7^8} are DPDFs",
                   "p = 3 mod 8, m = 2 mod 4, x + a = -2",
                   {"(q,2,(q-1)/4;(q-7-2x)/8,(q-3+2x)/8) rel C_0^2", "(q,2,(q-1)/4;(q-3+2x)/8,(q-7-2x)/8) rel C_0^2"},
                   [](const Reps& r, const Field*) { return yes_if(ternary_eight(r) && *r.x + *r.a == -2); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       const I x = *r.x;
                       const I lo = exact(q - 7 - 2 * x, 8);
                       const I hi = exact(q - 3 + 2 * x, 8);
                       const I k = (q - 1) / 4;
                       std::vector<Claim> out;
                       out.push_back(b.family("D1", ClaimMode::Internal, {cs(8, {3, 5}), cs(8, {2, 6})}, cs(2, {0}),
                                              b.family_params({k, k}, lo, hi)));
                       out.push_back(b.family("D2", ClaimMode::Internal, {cs(8, {0, 2}), cs(8, {3, 7})}, cs(2, {0}),
                                              b.family_params({k, k}, hi, lo)));
                       return out;
                   }});

    Recipe r13{"R13", "epdf-ddf-c0-c3-order4", "{C_0^4, C_3^4} is a DDF and an EPDF relative to C_0^2",
               "q = 5 mod 8, t = ±2",
               {"Int: (q,2,(q-1)/4,(q-5)/8)", "Ext: (q,2,(q-1)/4;(q-5)/8,(q+3)/8) if t=-2, reversed if t=2"},
               [](const Reps& r, const Field*) { return yes_if(t_is_two(r)); },
               [](const Reps& r, const FieldPtr& f) {
                   Builder b(r, f);
                   const I q = b.q();
                   const I k = (q - 1) / 4;
                   const std::vector<ClassSet> sets{cs(4, {0}), cs(4, {3})};
                   const I lo = exact(q - 5, 8);
                   const I hi = exact(q + 3, 8);
                   std::vector<Claim> out;
                   out.push_back(b.family("Int", ClaimMode::Internal, sets, std::nullopt, b.family_params({k, k}, lo, lo)));
                   Claim ext = b.family("Ext", ClaimMode::External, sets, cs(2, {0}),
                                        b.family_params({k, k}, by_t(r, lo, hi), by_t(r, hi, lo)));
                   ext.suspect = "claimed (q+3)/5; the class count gives (q+3)/8";
                   out.push_back(ext);
                   return out;
               }};
    reg.push_back(r13);

    reg.push_back({"R14", "pairs-i-2i", "{{i, 2i} : i in C_0^4}",
                   "q = 5 mod 8, t = ±2",
                   {"Int: (q,(q-1)/4,2;1,0) rel C_0^2",
                    "Ext: (q,(q-1)/4,2,(q-5)/4)-EDF if (2 in C_1^4, t=-2) or (2 in C_3^4, t=2)",
                    "Ext: (q,(q-1)/4,2;(q-9)/4,(q-1)/4) rel C_0^2 otherwise"},
                   [](const Reps& r, const Field*) { return yes_if(t_is_two(r)); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       const I m = (q - 1) / 4;
                       Family family;
                       ElemSet c02;
                       bool edf = true;
                       if (f) {
                           family = gamma_pair_family(*f, f->from_int(2));
                           c02 = b.partition(2).members(0);
                           const std::uint32_t two_class = b.partition(4).index_of(f->from_int(2));
                           edf = (two_class == 1 && *r.t == -2) || (two_class == 3 && *r.t == 2);
                       }
                       std::vector<Claim> out;
                       Claim in = b.family("Int", ClaimMode::Internal, {}, std::nullopt, b.family_params({}, 1, 0));
                       in.kind = Kind::RelativeDPDF;
                       Claim ex;
                       if (edf) {
                           ex = b.family("Ext", ClaimMode::External, {}, std::nullopt,
                                         b.family_params({}, (q - 5) / 4, (q - 5) / 4));
                       } else {
                           ex = b.family("Ext", ClaimMode::External, {}, std::nullopt,
                                         b.family_params({}, (q - 9) / 4, (q - 1) / 4));
                           ex.kind = Kind::RelativeEPDF;
                       }
                       for (Claim* c : {&in, &ex}) {
                           c->params.m = m;
                           c->params.k.assign(static_cast<std::size_t>(m), 2);
                           c->sets_desc = "{{i, 2i} : i in C_0^4}";
                           c->sets = family;
                           if (c->kind == Kind::RelativeDPDF || c->kind == Kind::RelativeEPDF) {
                               c->reference_desc = "C_0^2";
                               c->reference = c02;
                           }
                       }
                       if (!f) {
                           ex.reference_desc = "EDF or EPDF by the class of 2 and the sign of t";
                       }
                       out.push_back(in);
                       out.push_back(ex);
                       return out;
                   }});

    reg.push_back({"R15", "dpdf-c0-c2-order8", "{C_0^8, C_2^8} is a DPDF relative to C_0^2, or a DDF",
                   "q = 9 mod 16",
                   {"(q,2,(q-1)/8;(q-11-2x-4a)/32,(q-7+2x+4a)/32) rel C_0^2 if x+2a != -1",
                    "(q,2,(q-1)/8,(q-9)/32)-DDF if x+2a = -1"},
                   [](const Reps& r, const Field*) { return yes_if(r.q % 16 == 9); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       const I x = *r.x;
                       const I a = *r.a;
                       const I k = (q - 1) / 8;
                       const std::vector<ClassSet> sets{cs(8, {0}), cs(8, {2})};
                       Params params = x + 2 * a == -1
                                           ? b.family_params({k, k}, exact(q - 9, 32), exact(q - 9, 32))
                                           : b.family_params({k, k}, exact(q - 11 - 2 * x - 4 * a, 32),
                                                             exact(q - 7 + 2 * x + 4 * a, 32));
                       return std::vector<Claim>{b.family("D", ClaimMode::Internal, sets, cs(2, {0}), params)};
                   }});

    reg.push_back({"R16", "dpdf-c0-c1-c4-c6", "{C_0^8, C_1^8, C_4^8, C_6^8} is a DPDF relative to C_0^2",
                   "q = 9 mod 16, 2 a quartic residue, a = 1", {"(q,4,(q-1)/8;(q-12-x)/16,(q-6+x)/16) rel C_0^2"},
                   [](const Reps& r, const Field*) { return yes_if(r.q % 16 == 9 && *r.two_quartic && *r.a == 1); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       const I x = *r.x;
                       const I k = (q - 1) / 8;
                       return std::vector<Claim>{b.family(
                           "D", ClaimMode::Internal, {cs(8, {0}), cs(8, {1}), cs(8, {4}), cs(8, {6})}, cs(2, {0}),
                           b.family_params({k, k, k, k}, exact(q - 12 - x, 16), exact(q - 6 + x, 16)))};
                   }});

    reg.push_back({"R17", "dpdf-c0c1-c2c3", "{C_0^8 ∪ C_1^8, C_2^8 ∪ C_3^8} is a DPDF relative to C_0^2, or a DDF",
                   "q = 9 mod 16",
                   {"(q,2,(q-1)/4;(q-5+2y-2b)/8,(q-5-2y+2b)/8) rel C_0^2 if y != b", "(q,2,(q-1)/4,(q-5)/8)-DDF if y = b"},
                   [](const Reps& r, const Field*) { return yes_if(r.q % 16 == 9); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       const I y = *r.y;
                       const I bb = *r.b;
                       const I k = (q - 1) / 4;
                       return std::vector<Claim>{b.family(
                           "D", ClaimMode::Internal, {cs(8, {0, 1}), cs(8, {2, 3})}, cs(2, {0}),
                           b.family_params({k, k}, exact(q - 5 + 2 * y - 2 * bb, 8), exact(q - 5 - 2 * y + 2 * bb, 8)))};
                   }});

    auto union23 = [](const Reps& r, const FieldPtr& f, I b_value) {
        Builder b(r, f);
        const I q = b.q();
        const I y = *r.y;
        const I lo = exact(q - 5 - 2 * y - 2 * b_value, 8);
        const I hi = exact(q - 5 + 2 * y + 2 * b_value, 8);
        const I k = (q - 1) / 4;
        std::vector<Claim> out;
        out.push_back(b.family("D1", ClaimMode::Internal, {cs(8, {0, 3}), cs(8, {1, 6})}, cs(2, {0}),
                               b.family_params({k, k}, lo, hi)));
        out.push_back(b.family("D2", ClaimMode::Internal, {cs(8, {0, 5}), cs(8, {2, 7})}, cs(2, {0}),
                               b.family_params({k, k}, hi, lo)));
        return out;
    };

    reg.push_back({"R18", "dpdf-c0c3-c1c6",
                   "{C_0^8 ∪ C_3^8, C_1^8 ∪ C_6^8} and {C_0^8 ∪ C_5^8, C_2^8 ∪ C_7^8} are DPDFs relative to C_0^2, or DDFs",
                   "q = 9 mod 16",
                   {"D1: (q,2,(q-1)/4;(q-5-2y-2b)/8,(q-5+2y+2b)/8) rel C_0^2", "D2: reversed",
                    "both (q,2,(q-1)/4,(q-5)/8)-DDFs if y = -b"},
                   [](const Reps& r, const Field*) { return yes_if(r.q % 16 == 9); },
                   [union23](const Reps& r, const FieldPtr& f) { return union23(r, f, *r.b); }});

    reg.push_back({"R19", "dpdf-c0c3-c1c6-p-squared", "the previous pair of DPDFs for q = p^2 (b = 0)",
                   "q = p^2, p = 5 mod 8 prime",
                   {"D1: (q,2,(q-1)/4;(q-5-2y)/8,(q-5+2y)/8) rel C_0^2", "D2: reversed"},
                   [](const Reps& r, const Field*) { return yes_if(r.m == 2 && r.p % 8 == 5); },
                   [union23](const Reps& r, const FieldPtr& f) { return union23(r, f, 0); }});

    reg.push_back({"R20", "dpdf-c0c1-c2c7",
                   "{C_0^8 ∪ C_1^8, C_2^8 ∪ C_7^8} and {C_0^8 ∪ C_1^8, C_3^8 ∪ C_6^8} are DPDFs relative to C_0^2",
                   "p = 5 mod 8, m = 2 mod 4", {"(q,2,(q-1)/4;(q-5+2y)/8,(q-5-2y)/8) rel C_0^2"},
                   [](const Reps& r, const Field*) { return yes_if(r.p % 8 == 5 && r.m % 4 == 2); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       const I y = *r.y;
                       const I k = (q - 1) / 4;
                       const Params params = b.family_params({k, k}, exact(q - 5 + 2 * y, 8), exact(q - 5 - 2 * y, 8));
                       std::vector<Claim> out;
                       out.push_back(b.family("D1", ClaimMode::Internal, {cs(8, {0, 1}), cs(8, {2, 7})}, cs(2, {0}), params));
                       out.push_back(b.family("D2", ClaimMode::Internal, {cs(8, {0, 1}), cs(8, {3, 6})}, cs(2, {0}), params));
                       return out;
                   }});

    reg.push_back({"R21", "epdf-c0-c4", "{C_0^8, C_4^8} is an EPDF relative to C_0^2",
                   "q = 1 mod 16, 2 a quartic residue, a = 1", {"(q,2,(q-1)/8;(q+1-2x)/32,(q-3+2x)/32) rel C_0^2"},
                   [](const Reps& r, const Field*) { return yes_if(r.q % 16 == 1 && *r.two_quartic && *r.a == 1); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       const I x = *r.x;
                       const I k = (q - 1) / 8;
                       return std::vector<Claim>{b.family("D", ClaimMode::External, {cs(8, {0}), cs(8, {4})}, cs(2, {0}),
                                                          b.family_params({k, k}, exact(q + 1 - 2 * x, 32),
                                                                          exact(q - 3 + 2 * x, 32)))};
                   }});

    reg.push_back({"R22", "epdf-c0-c1-c4-c5", "{C_0^8, C_1^8, C_4^8, C_5^8} is an EPDF relative to C_0^2, or an EDF",
                   "q = 1 mod 16, 2 not a quartic residue, a = -3",
                   {"(q,4,(q-1)/8;(3q-3+8y)/16,(3q-3-8y)/16) rel C_0^2 if y != 0", "(q,4,(q-1)/8,(3q-3)/16)-EDF if y = 0"},
                   [](const Reps& r, const Field*) { return yes_if(r.q % 16 == 1 && !*r.two_quartic && *r.a == -3); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       const I y = *r.y;
                       const I k = (q - 1) / 8;
                       return std::vector<Claim>{b.family(
                           "D", ClaimMode::External, {cs(8, {0}), cs(8, {1}), cs(8, {4}), cs(8, {5})}, cs(2, {0}),
                           b.family_params({k, k, k, k}, exact(3 * q - 3 + 8 * y, 16), exact(3 * q - 3 - 8 * y, 16)))};
                   }});

    reg.push_back({"R23", "epdf-c0-c2c6", "{C_0^8, C_2^8 ∪ C_6^8} is an EPDF relative to C_0^2, or an EDF",
                   "q = 9 mod 16",
                   {"(q,2;(q-1)/8,(q-1)/4;(q-3+2x)/16,(q+1-2x)/16) rel C_0^2 if x != 1", "(q-1)/16-EDF if x = 1"},
                   [](const Reps& r, const Field*) { return yes_if(r.q % 16 == 9); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       const I x = *r.x;
                       return std::vector<Claim>{b.family("D", ClaimMode::External, {cs(8, {0}), cs(8, {2, 6})}, cs(2, {0}),
                                                          b.family_params({(q - 1) / 8, (q - 1) / 4},
                                                                          exact(q - 3 + 2 * x, 16),
                                                                          exact(q + 1 - 2 * x, 16)))};
                   }});

    reg.push_back({"R24", "pairs-i-gamma-i", "{{i, gamma i} : i in C_0^4}, gamma in C_2^4",
                   "q = 5 mod 8",
                   {"1-gamma not in C_0^2: (q,(q-1)/4,2,(q-5)/4)-EDF and (q,(q-1)/4,2;0,1)-DPDF",
                    "1-gamma in C_0^2: (q,(q-1)/4,2;(q-9)/4,(q-1)/4)-EPDF and (q,(q-1)/4,2;1,0)-DPDF"},
                   [](const Reps& r, const Field*) { return yes_if(q5mod8(r)); },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       const I m = (q - 1) / 4;
                       const std::vector<I> k(static_cast<std::size_t>(m), 2);
                       std::vector<Claim> out;
                       auto add = [&](std::optional<Elem> gamma, bool inside) {
                           const Family family = f && gamma ? gamma_pair_family(*f, *gamma) : Family{};
                           const std::string tag = (gamma ? "gamma=" + std::to_string(*gamma) : std::string("gamma")) +
                                                   (inside ? ", 1-gamma in C_0^2" : ", 1-gamma not in C_0^2");
                           const std::string desc = "{{i, gamma i} : i in C_0^4}";
                           Claim ext = inside ? b.standard_family("Ext " + tag, ClaimMode::External, family, desc,
                                                                  b.family_params(k, (q - 9) / 4, (q - 1) / 4))
                                              : b.standard_family("Ext " + tag, ClaimMode::External, family, desc,
                                                                  b.family_params(k, (q - 5) / 4, (q - 5) / 4));
                           Claim in = b.standard_family("Int " + tag, ClaimMode::Internal, family, desc,
                                                        inside ? b.family_params(k, 1, 0) : b.family_params(k, 0, 1));
                           if (inside) {
                               ext.suspect = in.suspect = "unlisted branch, parameters derived from the cyclotomic numbers";
                           }
                           out.push_back(ext);
                           out.push_back(in);
                       };
                       if (!f) {
                           add(std::nullopt, false);
                           add(std::nullopt, true);
                           return out;
                       }
                       const auto [outside, inside] = gamma_split(*f);
                       if (outside) {
                           add(outside, false);
                       }
                       if (inside) {
                           add(inside, true);
                       }
                       return out;
                   }});

    reg.push_back({"R25", "quads-i-gamma-i", "{{±i, ±gamma i} : i in R}, R representatives of C_0^4 / {1,-1}",
                   "q = 1 mod 8, gamma in C_2^4 with one of 1-gamma, 1+gamma in C_0^4 and the other in C_2^4",
                   {"Ext: (q,(q-1)/8,4;(q-17)/4,(q-1)/4)-EPDF", "Int: (q,(q-1)/8,4;3,0)-DPDF"},
                   [](const Reps& r, const Field* f) {
                       if (r.q % 8 != 1) {
                           return Applicability::No;
                       }
                       if (f == nullptr) {
                           return Applicability::NeedsField;
                       }
                       return yes_if(!admissible_gammas(*f).empty());
                   },
                   [](const Reps& r, const FieldPtr& f) {
                       Builder b(r, f);
                       const I q = b.q();
                       const std::vector<I> k(static_cast<std::size_t>((q - 1) / 8), 4);
                       Family family;
                       std::string tag = "gamma";
                       if (f) {
                           const auto gammas = admissible_gammas(*f);
                           if (gammas.empty()) {
                               throw Error(ErrorCode::NotApplicable, "no admissible gamma");
                           }
                           family = symmetric_gamma_family(*f, gammas.front());
                           tag = "gamma=" + std::to_string(gammas.front());
                       }
                       const std::string desc = "{{±i, ±gamma i} : i in R}";
                       std::vector<Claim> out;
                       out.push_back(b.standard_family("Ext " + tag, ClaimMode::External, family, desc,
                                                       b.family_params(k, (q - 17) / 4, (q - 1) / 4)));
                       out.push_back(b.standard_family("Int " + tag, ClaimMode::Internal, family, desc,
                                                       b.family_params(k, 3, 0)));
                       return out;
                   }});

    return reg;
}

bool kinds_agree(Kind predicted, Kind actual)
{
    return predicted == actual || (predicted == Kind::SkewPDS && actual == Kind::TrivialSkewPDS);
}

bool sign_dependent(const std::string& id)
{
    static const std::vector<std::string> ids{"R1", "R2", "R3", "R4", "R13", "R14", "R17", "R18", "R19", "R20", "R22"};
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

}  // namespace

Reps reps_numeric(std::uint32_t p, std::uint32_t m)
{
    Reps r;
    r.p = p;
    r.m = m;
    r.q = arith::ipow(p, m);
    if (r.q % 4 == 1) {
        const QuadRepST st = two_squares_abs(r.q, p, m);
        r.s = st.s;
        r.t = st.t;
    }
    if (r.q % 8 == 1) {
        const QuadRepXY xy = x2_4y2_rep(r.q, p, m);
        const QuadRepAB ab = a2_2b2_rep(r.q, p, m);
        r.x = xy.x;
        r.y = xy.y;
        r.a = ab.a;
        r.b = ab.b;
        r.two_quartic = two_is_quartic_residue(p, m);
    }
    return r;
}

Reps reps_for(const Field& field)
{
    Reps r = reps_numeric(field.characteristic(), field.degree());
    if (r.q % 4 == 1) {
        const QuadRepST st = two_squares_rep(field);
        r.s = st.s;
        r.t = st.t;
        r.t_signed = true;
    }
    if (r.q % 8 == 1) {
        const CycNumTable table = cyclotomic_numbers_order8(field);
        r.y = table.resolved_y;
        r.b = table.resolved_b;
        r.yb_signed = true;
    }
    return r;
}

std::string to_string(Applicability a)
{
    switch (a) {
    case Applicability::Yes: return "yes";
    case Applicability::No: return "no";
    case Applicability::NeedsField: return "needs-field";
    }
    return "?";
}

std::string to_string(ClaimMode mode)
{
    switch (mode) {
    case ClaimMode::Pds: return "pds";
    case ClaimMode::Skew: return "skew";
    case ClaimMode::Internal: return "internal";
    case ClaimMode::External: return "external";
    }
    return "?";
}

ClaimMode claim_mode_from_string(const std::string& text)
{
    for (ClaimMode mode : {ClaimMode::Pds, ClaimMode::Skew, ClaimMode::Internal, ClaimMode::External}) {
        if (to_string(mode) == text) {
            return mode;
        }
    }
    throw Error(ErrorCode::UnknownMode, "unknown mode '" + text + "'");
}

std::string to_string(ClaimStatus status)
{
    switch (status) {
    case ClaimStatus::Verified: return "verified";
    case ClaimStatus::Mismatch: return "mismatch";
    case ClaimStatus::Unverified: return "not-oracle-verified";
    }
    return "?";
}

ClaimStatus claim_status_from_string(const std::string& text)
{
    for (ClaimStatus s : {ClaimStatus::Verified, ClaimStatus::Mismatch, ClaimStatus::Unverified}) {
        if (to_string(s) == text) {
            return s;
        }
    }
    throw Error(ErrorCode::ParseError, "unknown status '" + text + "'");
}

const std::vector<Recipe>& registry()
{
    static const std::vector<Recipe> reg = make_registry();
    return reg;
}

const Recipe& recipe_by_id(const std::string& id)
{
    for (const auto& r : registry()) {
        if (r.id == id || r.name == id) {
            return r;
        }
    }
    throw Error(ErrorCode::ParseError, "unknown recipe '" + id + "'");
}

std::size_t Construction::hard_mismatches() const
{
    return static_cast<std::size_t>(std::count_if(claims.begin(), claims.end(), [](const ClaimResult& c) {
        return c.status == ClaimStatus::Mismatch && c.claim.suspect.empty();
    }));
}

ClaimResult certify_claim(const Field& field, const Claim& claim)
{
    ClaimResult result;
    result.claim = claim;
    Certificate cert;
    switch (claim.mode) {
    case ClaimMode::Pds:
        cert = check_pds(field, claim.sets.at(0));
        break;
    case ClaimMode::Skew:
        cert = check_skew_pds(field, claim.sets.at(0));
        if (cert.kind == Kind::SkewPDS || cert.kind == Kind::TrivialSkewPDS) {
            result.complement_law = complement_law_holds(field, cert);
        }
        break;
    case ClaimMode::Internal:
    case ClaimMode::External: {
        const FamilyMode mode = claim.mode == ClaimMode::Internal ? FamilyMode::Internal : FamilyMode::External;
        const bool relative = claim.kind == Kind::RelativeDPDF || claim.kind == Kind::RelativeEPDF;
        cert = relative ? check_family(field, claim.sets, mode, claim.reference) : check_family(field, claim.sets, mode);
        break;
    }
    }
    const bool single_frequency = cert.kind == Kind::DDF || cert.kind == Kind::EDF;
    bool agree = kinds_agree(claim.kind, cert.kind) && cert.params == claim.params &&
                 (single_frequency || cert.reference_set == claim.reference);
    if (cert.kind == Kind::TrivialSkewPDS) {
        result.note = "trivial: D is a translate of its PDS";
    }
    // A lambda = 0 DDF/EDF over singleton classes has no differences at all.
    const bool zero_claim = (claim.kind == Kind::DDF || claim.kind == Kind::EDF) && claim.params.lambda == 0;
    if (!agree && zero_claim && cert.kind == Kind::None) {
        const DiffMultiset dm = claim.mode == ClaimMode::Internal ? family_internal(field, claim.sets)
                                                                  : family_external(field, claim.sets);
        if (dm.total == 0) {
            agree = true;
            result.note = "vacuous: the difference multiset is empty";
        }
    }
    result.status = agree ? ClaimStatus::Verified : ClaimStatus::Mismatch;
    if (!agree) {
        result.note = "oracle: " + to_string(cert.kind) + " " + format_params(cert.kind, cert.params);
    }
    result.certificate = std::move(cert);
    return result;
}

Construction apply(const Recipe& recipe, const FieldPtr& field, bool certify, bool strict)
{
    Construction c;
    c.recipe = recipe.id;
    c.q = field->order();
    c.field = field->spec();
    c.reps = reps_for(*field);
    if (recipe.applicable(c.reps, field.get()) != Applicability::Yes) {
        throw Error(ErrorCode::NotApplicable, recipe.id + " does not apply to q=" + std::to_string(c.q));
    }
    for (const Claim& claim : recipe.claims(c.reps, field)) {
        if (certify) {
            c.claims.push_back(certify_claim(*field, claim));
        } else {
            ClaimResult r;
            r.claim = claim;
            c.claims.push_back(std::move(r));
        }
    }
    c.oracle_verified = certify;
    if (strict && c.hard_mismatches() > 0) {
        for (const auto& r : c.claims) {
            if (r.status == ClaimStatus::Mismatch && r.claim.suspect.empty()) {
                throw Error(ErrorCode::PredictionMismatch, recipe.id + " " + r.claim.label + " at q=" +
                                                               std::to_string(c.q) + ": predicted " +
                                                               format_params(r.claim.kind, r.claim.params) + ", " +
                                                               r.note);
            }
        }
    }
    return c;
}

Construction predict(const Recipe& recipe, std::uint32_t p, std::uint32_t m)
{
    Construction c;
    c.recipe = recipe.id;
    c.reps = reps_numeric(p, m);
    c.q = c.reps.q;
    if (recipe.applicable(c.reps, nullptr) != Applicability::Yes) {
        throw Error(ErrorCode::NotApplicable, recipe.id + " does not apply to q=" + std::to_string(c.q));
    }
    for (const Claim& claim : recipe.claims(c.reps, nullptr)) {
        ClaimResult r;
        r.claim = claim;
        if (sign_dependent(recipe.id)) {
            r.note = "signs of t, y, b need a field; shown with nonnegative signs";
        }
        c.claims.push_back(std::move(r));
    }
    return c;
}

std::vector<Elem> admissible_gammas(const Field& field)
{
    if (field.order() % 8 != 1) {
        return {};
    }
    std::vector<Elem> out;
    for (Elem g : class_members(field, 4, 2)) {
        const Elem minus = field.sub(1, g);
        const Elem plus = field.add(1, g);
        if (minus == 0 || plus == 0) {
            continue;
        }
        const std::uint32_t cm = field.log(minus) % 4;
        const std::uint32_t cp = field.log(plus) % 4;
        if ((cm == 0 && cp == 2) || (cm == 2 && cp == 0)) {
            out.push_back(g);
        }
    }
    return out;
}

Family symmetric_gamma_family(const Field& field, Elem gamma)
{
    Family out;
    for (Elem i : class_members(field, 4, 0)) {
        if (field.neg(i) < i) {
            continue;
        }
        const Elem gi = field.mul(gamma, i);
        out.push_back(normalize_set(field, {i, field.neg(i), gi, field.neg(gi)}));
    }
    return out;
}

Family gamma_pair_family(const Field& field, Elem gamma)
{
    Family out;
    for (Elem i : class_members(field, 4, 0)) {
        out.push_back(normalize_set(field, {i, field.mul(gamma, i)}));
    }
    return out;
}

Certificate swap_combinator(const Field& field, const std::vector<SwapInput>& pairs)
{
    Family ds;
    std::vector<char> seen(field.order(), 0);
    ElemSet t;
    for (const auto& pair : pairs) {
        ds.push_back(normalize_set(field, pair.d));
        for (Elem x : normalize_set(field, pair.a)) {
            if (x == 0) {
                continue;
            }
            if (seen[x]) {
                throw Error(ErrorCode::NotDisjoint, "reference sets overlap at " + std::to_string(x));
            }
            seen[x] = 1;
            t.push_back(x);
        }
    }
    validate_family(field, ds);
    std::sort(t.begin(), t.end());
    std::optional<I> delta;
    I mu_sum = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto level = two_level_profile(field, internal_differences(field, ds[i]), pairs[i].a);
        if (!level) {
            throw Error(ErrorCode::ProfileNotTwoValued, "D_" + std::to_string(i) + " is not two-valued on A_" +
                                                            std::to_string(i));
        }
        const I d = level->inside - level->outside;
        if (delta && *delta != d) {
            throw Error(ErrorCode::DeltaNotConstant, "lambda_i - mu_i differs across the pairs");
        }
        delta = d;
        mu_sum += level->outside;
    }
    Certificate cert = check_family(field, ds, FamilyMode::Internal, t);
    const I lambda = delta.value_or(0) + mu_sum;
    const bool expected_kind = lambda == mu_sum ? cert.kind == Kind::DDF : cert.kind == Kind::RelativeDPDF;
    if (!expected_kind || cert.params.lambda != lambda || cert.params.mu != mu_sum) {
        throw Error(ErrorCode::PredictionMismatch, "combined family is " + to_string(cert.kind) + " " +
                                                       format_params(cert.kind, cert.params));
    }
    return cert;
}

Certificate skew_from_families(const Field& field, const Family& family, const ElemSet& t)
{
    const Certificate pds = check_pds(field, t);
    std::size_t total = 0;
    for (const auto& d : family) {
        total += d.size();
    }
    if (pds.kind != Kind::PDS || total != t.size()) {
        throw Error(ErrorCode::HypothesisNotMet, "T is not a PDS of the family's total size");
    }
    const Certificate in = check_family(field, family, FamilyMode::Internal, t);
    const bool rel_d = in.kind == Kind::RelativeDPDF;
    const bool ddf = in.kind == Kind::DDF;
    bool rel_e = false;
    bool edf = family.size() == 1;
    if (family.size() > 1) {
        const Certificate ex = check_family(field, family, FamilyMode::External, t);
        rel_e = ex.kind == Kind::RelativeEPDF;
        edf = ex.kind == Kind::EDF;
    }
    if (!((rel_d && rel_e) || (rel_d && edf) || (ddf && rel_e))) {
        throw Error(ErrorCode::HypothesisNotMet, "family is " + to_string(in.kind) + " internally");
    }
    ElemSet all;
    for (const auto& d : family) {
        all.insert(all.end(), d.begin(), d.end());
    }
    return check_skew_pds(field, all);
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers_in(std::uint64_t lo, std::uint64_t hi)
{
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    lo = std::max<std::uint64_t>(lo, 2);
    if (hi < lo) {
        return out;
    }
    const std::uint64_t root = arith::isqrt(hi);
    std::vector<char> small(root + 1, 1);
    std::vector<std::uint64_t> primes;
    for (std::uint64_t i = 2; i <= root; ++i) {
        if (small[i]) {
            primes.push_back(i);
            for (std::uint64_t j = i * i; j <= root; j += i) {
                small[j] = 0;
            }
        }
    }
    std::map<std::uint64_t, std::pair<std::uint32_t, std::uint32_t>> found;
    // Segmented sieve for the primes in [lo, hi].
    const std::uint64_t segment = 1 << 20;
    for (std::uint64_t start = lo; start <= hi; start += segment) {
        const std::uint64_t end = std::min(hi, start + segment - 1);
        std::vector<char> prime(end - start + 1, 1);
        for (std::uint64_t p : primes) {
            std::uint64_t first = std::max(p * p, (start + p - 1) / p * p);
            for (std::uint64_t j = first; j <= end; j += p) {
                prime[j - start] = 0;
            }
        }
        for (std::uint64_t n = start; n <= end; ++n) {
            if (prime[n - start]) {
                out.emplace_back(static_cast<std::uint32_t>(n), 1);
            }
        }
        if (end == hi) {
            break;
        }
    }
    for (std::uint64_t p : primes) {
        std::uint64_t v = p * p;
        for (std::uint32_t m = 2; v <= hi; ++m) {
            if (v >= lo) {
                out.emplace_back(static_cast<std::uint32_t>(p), m);
            }
            if (v > hi / p) {
                break;
            }
            v *= p;
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& u, const auto& w) {
        return arith::ipow(u.first, u.second) < arith::ipow(w.first, w.second);
    });
    return out;
}

namespace {

// Necessary residue conditions on (p, m) alone; spares the representation search.
bool residue_gate(const Recipe& recipe, std::uint32_t p, std::uint32_t m)
{
    const std::uint64_t q = arith::ipow(p, m);
    const auto ell_mod8 = [&]() -> std::uint64_t { return m % 2 == 0 ? arith::ipow(p, m / 2) % 8 : 0; };
    switch (std::stoi(recipe.id.substr(1))) {
    case 1: case 2: case 3: case 4: case 13: case 14: case 24:
        return q % 8 == 5;
    case 5: case 6: case 8: case 9: case 12:
        return p % 8 == 3 && m % 4 == 2;
    case 7: case 10:
        return ell_mod8() == 3;
    case 11: case 15: case 16: case 17: case 18: case 23:
        return q % 16 == 9;
    case 19:
        return m == 2 && p % 8 == 5;
    case 20:
        return p % 8 == 5 && m % 4 == 2;
    case 21: case 22:
        return q % 16 == 1;
    default:
        return q % 8 == 1;
    }
}

}  // namespace

std::vector<Construction> enumerate_applicable(const ScanOptions& options)
{
    std::vector<const Recipe*> selected;
    if (options.recipes.empty()) {
        for (const auto& r : registry()) {
            selected.push_back(&r);
        }
    } else {
        for (const auto& id : options.recipes) {
            selected.push_back(&recipe_by_id(id));
        }
        std::sort(selected.begin(), selected.end());
        selected.erase(std::unique(selected.begin(), selected.end()), selected.end());
    }
    const auto qs = prime_powers_in(options.q_min, options.q_max);
    std::vector<std::vector<Construction>> per_q(qs.size());
    const unsigned workers = options.jobs ? options.jobs : parallel::jobs();
    parallel::for_tasks(qs.size(), workers, [&](std::size_t idx) {
        const auto [p, m] = qs[idx];
        if (p == 2) {
            return;
        }
        const std::uint64_t q = arith::ipow(p, m);
        std::vector<const Recipe*> gated;
        for (const Recipe* r : selected) {
            if (residue_gate(*r, p, m)) {
                gated.push_back(r);
            }
        }
        if (gated.empty()) {
            return;
        }
        const Reps numeric = reps_numeric(p, m);
        std::vector<const Recipe*> candidates;
        for (const Recipe* r : gated) {
            if (r->applicable(numeric, nullptr) != Applicability::No) {
                candidates.push_back(r);
            }
        }
        if (candidates.empty()) {
            return;
        }
        const bool certify = q <= options.certify_cap;
        if (certify || q <= options.field_cap) {
            const FieldPtr field = Field::build(p, m);
            const Reps reps = reps_for(*field);
            for (const Recipe* r : candidates) {
                if (r->applicable(reps, field.get()) == Applicability::Yes) {
                    per_q[idx].push_back(apply(*r, field, certify, false));
                }
            }
        } else {
            for (const Recipe* r : candidates) {
                if (r->applicable(numeric, nullptr) == Applicability::Yes) {
                    per_q[idx].push_back(predict(*r, p, m));
                }
            }
        }
    });
    // Registry order within one q.
    std::vector<Construction> out;
    for (auto& list : per_q) {
        std::sort(list.begin(), list.end(), [](const Construction& a, const Construction& b) {
            return std::stoi(a.recipe.substr(1)) < std::stoi(b.recipe.substr(1));
        });
        for (auto& c : list) {
            out.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace cycloskew
