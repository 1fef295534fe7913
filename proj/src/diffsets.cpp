#include "cycloskew/diffsets.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "cycloskew/arith.hpp"
#include "cycloskew/error.hpp"
#include "cycloskew/parallel.hpp"

namespace cycloskew {

namespace {

// Difference x_i - y_j for GF(p): codes are residues.
struct PrimeDigits {
    const Elem* xs;
    const Elem* ys;
    std::uint32_t p;

    PrimeDigits(const Field& field, const ElemSet& x, const ElemSet& y)
        : xs(x.data()), ys(y.data()), p(field.characteristic())
    {
    }
    std::uint32_t diff(std::size_t i, std::size_t j) const
    {
        const std::uint32_t a = xs[i];
        const std::uint32_t b = ys[j];
        return a >= b ? a - b : a + p - b;
    }
};

struct QuadraticDigits {
    std::vector<std::int32_t> x0, x1, y0, y1;
    std::int32_t p;

    QuadraticDigits(const Field& field, const ElemSet& x, const ElemSet& y)
        : p(static_cast<std::int32_t>(field.characteristic()))
    {
        split(x, x0, x1);
        split(y, y0, y1);
    }
    void split(const ElemSet& s, std::vector<std::int32_t>& lo, std::vector<std::int32_t>& hi) const
    {
        lo.resize(s.size());
        hi.resize(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            lo[i] = static_cast<std::int32_t>(s[i] % static_cast<std::uint32_t>(p));
            hi[i] = static_cast<std::int32_t>(s[i] / static_cast<std::uint32_t>(p));
        }
    }
    std::uint32_t diff(std::size_t i, std::size_t j) const
    {
        std::int32_t a = x0[i] - y0[j];
        a += (a >> 31) & p;
        std::int32_t b = x1[i] - y1[j];
        b += (b >> 31) & p;
        return static_cast<std::uint32_t>(a + p * b);
    }
};

struct GenericDigits {
    std::uint32_t m;
    std::int32_t p;
    std::vector<std::uint32_t> places;
    std::vector<std::int32_t> xd, yd;

    GenericDigits(const Field& field, const ElemSet& x, const ElemSet& y)
        : m(field.degree()), p(static_cast<std::int32_t>(field.characteristic()))
    {
        for (std::uint32_t i = 0; i < m; ++i) {
            places.push_back(field.place(i));
        }
        split(x, xd);
        split(y, yd);
    }
    void split(const ElemSet& s, std::vector<std::int32_t>& out) const
    {
        out.resize(s.size() * m);
        for (std::size_t i = 0; i < s.size(); ++i) {
            Elem v = s[i];
            for (std::uint32_t d = 0; d < m; ++d) {
                out[i * m + d] = static_cast<std::int32_t>(v % static_cast<std::uint32_t>(p));
                v /= static_cast<std::uint32_t>(p);
            }
        }
    }
    std::uint32_t diff(std::size_t i, std::size_t j) const
    {
        std::uint32_t code = 0;
        const std::int32_t* a = &xd[i * m];
        const std::int32_t* b = &yd[j * m];
        for (std::uint32_t d = 0; d < m; ++d) {
            std::int32_t v = a[d] - b[d];
            v += (v >> 31) & p;
            code += static_cast<std::uint32_t>(v) * places[d];
        }
        return code;
    }
};

// counts[x_i - y_j] += 1 over all pairs, optionally only for pairs whose labels differ.
template <class Digits, bool kLabelled>
void run_kernel(const Digits& digits, std::size_t nx, const std::uint32_t* xlab,
                const std::uint32_t* ylab, std::uint32_t* counts, std::size_t jbegin, std::size_t jend)
{
    for (std::size_t j = jbegin; j < jend; ++j) {
        if constexpr (kLabelled) {
            const std::uint32_t lj = ylab[j];
            for (std::size_t i = 0; i < nx; ++i) {
                if (xlab[i] != lj) {
                    ++counts[digits.diff(i, j)];
                }
            }
        } else {
            for (std::size_t i = 0; i < nx; ++i) {
                ++counts[digits.diff(i, j)];
            }
        }
    }
}

template <class Digits>
void accumulate_with(const Digits& digits, std::size_t q, std::size_t nx, std::size_t ny,
                     const std::uint32_t* xlab, const std::uint32_t* ylab, std::vector<std::uint32_t>& counts)
{
    const std::size_t pairs = nx * ny;
    unsigned workers = parallel::plan(pairs, std::size_t{1} << 22);
    // Keep the per-worker count arrays within about 1 GiB.
    workers = static_cast<unsigned>(
        std::max<std::size_t>(1, std::min<std::size_t>(workers, (std::size_t{1} << 28) / std::max<std::size_t>(q, 1))));
    auto body = [&](std::uint32_t* out, std::size_t jb, std::size_t je) {
        if (xlab != nullptr) {
            run_kernel<Digits, true>(digits, nx, xlab, ylab, out, jb, je);
        } else {
            run_kernel<Digits, false>(digits, nx, xlab, ylab, out, jb, je);
        }
    };
    if (workers <= 1) {
        body(counts.data(), 0, ny);
        return;
    }
    std::vector<std::vector<std::uint32_t>> partial(workers - 1, std::vector<std::uint32_t>(q, 0));
    parallel::for_chunks(ny, workers, [&](std::size_t jb, std::size_t je, unsigned w) {
        body(w == 0 ? counts.data() : partial[w - 1].data(), jb, je);
    });
    for (const auto& local : partial) {
        for (std::size_t g = 0; g < q; ++g) {
            counts[g] += local[g];
        }
    }
}

// counts[x - y] += 1 for x in xs, y in ys (labels: skip equal labels).
void accumulate(const Field& field, const ElemSet& xs, const ElemSet& ys, const std::vector<std::uint32_t>* xlab,
                const std::vector<std::uint32_t>* ylab, std::vector<std::uint32_t>& counts)
{
    const std::size_t q = field.order();
    const std::uint32_t* xl = xlab ? xlab->data() : nullptr;
    const std::uint32_t* yl = ylab ? ylab->data() : nullptr;
    switch (field.degree()) {
    case 1: accumulate_with(PrimeDigits(field, xs, ys), q, xs.size(), ys.size(), xl, yl, counts); break;
    case 2: accumulate_with(QuadraticDigits(field, xs, ys), q, xs.size(), ys.size(), xl, yl, counts); break;
    default: accumulate_with(GenericDigits(field, xs, ys), q, xs.size(), ys.size(), xl, yl, counts); break;
    }
}

DiffMultiset empty_multiset(const Field& field)
{
    DiffMultiset out;
    out.counts.assign(field.order(), 0);
    return out;
}

void add_internal(const Field& field, const ElemSet& d, DiffMultiset& out)
{
    const std::uint32_t before = out.counts[0];
    accumulate(field, d, d, nullptr, nullptr, out.counts);
    out.counts[0] = before;
    out.total += static_cast<std::uint64_t>(d.size()) * (d.size() > 0 ? d.size() - 1 : 0);
}

std::vector<char> membership(const Field& field, const ElemSet& set)
{
    std::vector<char> mask(field.order(), 0);
    for (Elem x : set) {
        mask[x] = 1;
    }
    return mask;
}

// Constant value of counts over {g != 0 : mask[g] == want}; nullopt if not constant,
// and `empty` set when the region has no elements.
std::optional<std::int64_t> constant_on(const DiffMultiset& dm, const std::vector<char>& mask, char want, bool& empty)
{
    std::optional<std::int64_t> value;
    empty = true;
    for (std::size_t g = 1; g < dm.counts.size(); ++g) {
        if (mask[g] != want) {
            continue;
        }
        empty = false;
        if (!value) {
            value = dm.counts[g];
        } else if (*value != dm.counts[g]) {
            return std::nullopt;
        }
    }
    return value;
}

// Distinct counts over G^*, capped at `limit + 1` entries.
std::vector<std::int64_t> nonzero_values(const DiffMultiset& dm, std::size_t limit)
{
    std::vector<std::int64_t> values;
    for (std::size_t g = 1; g < dm.counts.size(); ++g) {
        const std::int64_t v = dm.counts[g];
        if (std::find(values.begin(), values.end(), v) == values.end()) {
            values.push_back(v);
            if (values.size() > limit) {
                break;
            }
        }
    }
    std::sort(values.begin(), values.end());
    return values;
}

struct LatinMatch {
    PdsType type = PdsType::Other;
    std::int64_t n = 0;
    std::int64_t r = 0;
};

LatinMatch classify(const Params& p, bool regular)
{
    const std::int64_t v = p.v;
    const std::int64_t k = p.k.empty() ? 0 : p.k.front();
    if (regular && v % 4 == 1 && k == (v - 1) / 2 && p.lambda == (v - 5) / 4 && p.mu == (v - 1) / 4) {
        return {PdsType::Paley};
    }
    if (p.lambda == p.mu) {
        return {PdsType::DS};
    }
    if (v >= 4 && arith::is_square(static_cast<std::uint64_t>(v))) {
        const auto n = static_cast<std::int64_t>(arith::isqrt(static_cast<std::uint64_t>(v)));
        if (auto r = arith::exact_div(k, n - 1); r && *r >= 1) {
            if (p.lambda == n + *r * *r - 3 * *r && p.mu == *r * *r - *r) {
                return {PdsType::LatinSquare, n, *r};
            }
        }
        if (auto r = arith::exact_div(k, n + 1); r && *r >= 1) {
            if (p.lambda == -n + *r * *r + 3 * *r && p.mu == *r * *r + *r) {
                return {PdsType::NegativeLatinSquare, n, *r};
            }
        }
    }
    return {PdsType::Other};
}

Certificate base_certificate(const Field& field, Family sets)
{
    Certificate cert;
    cert.field = field.spec();
    cert.sets = std::move(sets);
    cert.params.v = field.order();
    cert.params.m = static_cast<std::int64_t>(cert.sets.size());
    for (const auto& s : cert.sets) {
        cert.params.k.push_back(static_cast<std::int64_t>(s.size()));
    }
    return cert;
}

Certificate none_certificate(const Field& field, Family sets)
{
    Certificate cert = base_certificate(field, std::move(sets));
    cert.kind = Kind::None;
    return cert;
}

bool is_translate(const Field& field, const ElemSet& d, const ElemSet& a, Elem& offset)
{
    if (d.size() != a.size() || d.empty()) {
        return false;
    }
    const std::vector<char> in_d = membership(field, d);
    const Elem d0 = d.front();
    for (Elem x : a) {
        const Elem shift = field.sub(d0, x);
        bool all = true;
        for (Elem y : a) {
            if (!in_d[field.add(shift, y)]) {
                all = false;
                break;
            }
        }
        if (all) {
            offset = shift;
            return true;
        }
    }
    return false;
}

const std::map<Kind, std::string>& kind_names()
{
    static const std::map<Kind, std::string> names{
        {Kind::None, "None"},
        {Kind::PDS, "PDS"},
        {Kind::TrivialSkewPDS, "TrivialSkewPDS"},
        {Kind::SkewPDS, "SkewPDS"},
        {Kind::ADS, "ADS"},
        {Kind::DDF, "DDF"},
        {Kind::EDF, "EDF"},
        {Kind::DPDF, "DPDF"},
        {Kind::EPDF, "EPDF"},
        {Kind::RelativeDPDF, "RelativeDPDF"},
        {Kind::RelativeEPDF, "RelativeEPDF"},
    };
    return names;
}

const std::map<PdsType, std::string>& pds_type_names()
{
    static const std::map<PdsType, std::string> names{
        {PdsType::None, "None"},
        {PdsType::Paley, "Paley"},
        {PdsType::DS, "DS"},
        {PdsType::LatinSquare, "LatinSquare"},
        {PdsType::NegativeLatinSquare, "NegativeLatinSquare"},
        {PdsType::Other, "Other"},
    };
    return names;
}

}  // namespace

DiffMultiset& DiffMultiset::operator+=(const DiffMultiset& other)
{
    if (counts.size() < other.counts.size()) {
        counts.resize(other.counts.size(), 0);
    }
    for (std::size_t g = 0; g < other.counts.size(); ++g) {
        counts[g] += other.counts[g];
    }
    total += other.total;
    return *this;
}

std::string to_string(Kind kind)
{
    return kind_names().at(kind);
}

Kind kind_from_string(const std::string& text)
{
    for (const auto& [kind, name] : kind_names()) {
        if (name == text) {
            return kind;
        }
    }
    throw Error(ErrorCode::ParseError, "unknown kind '" + text + "'");
}

std::string to_string(PdsType type)
{
    return pds_type_names().at(type);
}

PdsType pds_type_from_string(const std::string& text)
{
    for (const auto& [type, name] : pds_type_names()) {
        if (name == text) {
            return type;
        }
    }
    throw Error(ErrorCode::ParseError, "unknown pds type '" + text + "'");
}

std::string format_params(Kind kind, const Params& p)
{
    std::ostringstream out;
    out << '(' << p.v << ',';
    const std::int64_t k0 = p.k.empty() ? 0 : p.k.front();
    switch (kind) {
    case Kind::PDS:
    case Kind::SkewPDS:
    case Kind::TrivialSkewPDS:
        out << k0 << ',' << p.lambda << ',' << p.mu;
        break;
    case Kind::ADS:
        out << k0 << ',' << p.lambda << ',' << p.t;
        break;
    case Kind::None:
        out << k0;
        break;
    default: {
        out << p.m << ',';
        const bool uniform = std::all_of(p.k.begin(), p.k.end(), [&](std::int64_t k) { return k == k0; });
        if (uniform) {
            out << k0;
        } else {
            for (std::size_t i = 0; i < p.k.size(); ++i) {
                out << (i ? "," : "") << p.k[i];
            }
        }
        if (kind == Kind::DDF || kind == Kind::EDF) {
            out << ',' << p.lambda;
        } else {
            out << ';' << p.lambda << ',' << p.mu;
        }
        break;
    }
    }
    out << ')';
    return out.str();
}

ElemSet normalize_set(const Field& field, std::vector<Elem> set)
{
    std::sort(set.begin(), set.end());
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] >= field.order()) {
            throw Error(ErrorCode::ElementOutOfRange, "code " + std::to_string(set[i]) + " outside field");
        }
        if (i > 0 && set[i] == set[i - 1]) {
            throw Error(ErrorCode::DuplicateElement, "element " + std::to_string(set[i]) + " repeated");
        }
    }
    return set;
}

DiffMultiset internal_differences(const Field& field, const ElemSet& d)
{
    const ElemSet set = normalize_set(field, d);
    DiffMultiset out = empty_multiset(field);
    add_internal(field, set, out);
    return out;
}

DiffMultiset cross_differences(const Field& field, const ElemSet& d1, const ElemSet& d2)
{
    const ElemSet a = normalize_set(field, d1);
    const ElemSet b = normalize_set(field, d2);
    DiffMultiset out = empty_multiset(field);
    accumulate(field, a, b, nullptr, nullptr, out.counts);
    out.total = static_cast<std::uint64_t>(a.size()) * b.size();
    return out;
}

std::optional<TwoLevel> two_level_profile(const Field& field, const DiffMultiset& dm, const ElemSet& t)
{
    const std::vector<char> mask = membership(field, normalize_set(field, t));
    bool empty_in = false;
    bool empty_out = false;
    const auto on = constant_on(dm, mask, 1, empty_in);
    const auto off = constant_on(dm, mask, 0, empty_out);
    if ((!on && !empty_in) || (!off && !empty_out)) {
        return std::nullopt;
    }
    const std::int64_t inside = on ? *on : (off ? *off : 0);
    return TwoLevel{inside, off ? *off : inside};
}

void validate_family(const Field& field, const Family& family)
{
    std::vector<char> seen(field.order(), 0);
    for (const auto& set : family) {
        for (Elem x : normalize_set(field, set)) {
            if (x == 0) {
                throw Error(ErrorCode::ContainsZero, "family member contains 0");
            }
            if (seen[x]) {
                throw Error(ErrorCode::NotDisjoint, "element " + std::to_string(x) + " in two sets");
            }
            seen[x] = 1;
        }
    }
}

DiffMultiset family_internal(const Field& field, const Family& family)
{
    validate_family(field, family);
    DiffMultiset out = empty_multiset(field);
    for (const auto& set : family) {
        add_internal(field, normalize_set(field, set), out);
    }
    return out;
}

DiffMultiset family_external(const Field& field, const Family& family)
{
    validate_family(field, family);
    ElemSet all;
    std::vector<std::pair<Elem, std::uint32_t>> labelled;
    for (std::uint32_t i = 0; i < family.size(); ++i) {
        for (Elem x : family[i]) {
            labelled.emplace_back(x, i);
        }
    }
    std::sort(labelled.begin(), labelled.end());
    std::vector<std::uint32_t> labels;
    all.reserve(labelled.size());
    labels.reserve(labelled.size());
    for (const auto& [x, i] : labelled) {
        all.push_back(x);
        labels.push_back(i);
    }
    DiffMultiset out = empty_multiset(field);
    accumulate(field, all, all, &labels, &labels, out.counts);
    std::uint64_t same = 0;
    for (const auto& set : family) {
        same += static_cast<std::uint64_t>(set.size()) * set.size();
    }
    out.total = static_cast<std::uint64_t>(all.size()) * all.size() - same;
    return out;
}

ElemSet complement(const Field& field, const ElemSet& set, bool with_zero)
{
    const std::vector<char> mask = membership(field, set);
    ElemSet out;
    for (Elem g = with_zero ? 0 : 1; g < field.order(); ++g) {
        if (!mask[g]) {
            out.push_back(g);
        }
    }
    return out;
}

ElemSet negate(const Field& field, const ElemSet& set)
{
    ElemSet out;
    out.reserve(set.size());
    for (Elem x : set) {
        out.push_back(field.neg(x));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Certificate check_pds(const Field& field, const ElemSet& a_in)
{
    const ElemSet a = normalize_set(field, a_in);
    if (a.empty()) {
        return none_certificate(field, {a});
    }
    DiffMultiset dm = empty_multiset(field);
    add_internal(field, a, dm);
    const std::vector<char> mask = membership(field, a);
    bool empty_in = false;
    bool empty_out = false;
    const auto on = constant_on(dm, mask, 1, empty_in);
    const auto off = constant_on(dm, mask, 0, empty_out);
    if ((!on && !empty_in) || (!off && !empty_out)) {
        return none_certificate(field, {a});
    }
    Certificate cert = base_certificate(field, {a});
    cert.kind = Kind::PDS;
    cert.params.lambda = on ? *on : (off ? *off : 0);
    cert.params.mu = off ? *off : cert.params.lambda;
    cert.reference_set = a;
    cert.regular = !mask[0] && negate(field, a) == a;
    const LatinMatch match = classify(cert.params, cert.regular);
    cert.pds_type = match.type;
    cert.ls_n = match.n;
    cert.ls_r = match.r;
    return cert;
}

Certificate check_skew_pds(const Field& field, const ElemSet& d_in)
{
    const ElemSet d = normalize_set(field, d_in);
    if (d.empty()) {
        return none_certificate(field, {d});
    }
    DiffMultiset dm = empty_multiset(field);
    add_internal(field, d, dm);
    const auto values = nonzero_values(dm, 2);
    if (values.size() != 2) {
        return none_certificate(field, {d});
    }
    for (int pick = 0; pick < 2; ++pick) {
        const std::int64_t lambda = values[pick];
        const std::int64_t mu = values[1 - pick];
        ElemSet a;
        for (std::size_t g = 1; g < dm.counts.size(); ++g) {
            if (dm.counts[g] == lambda) {
                a.push_back(static_cast<Elem>(g));
            }
        }
        ElemSet with_zero = a;
        with_zero.insert(with_zero.begin(), 0);
        for (const ElemSet* candidate : {&a, &with_zero}) {
            if (candidate->size() != d.size()) {
                continue;
            }
            const Certificate pds = check_pds(field, *candidate);
            if (pds.kind != Kind::PDS || pds.params.lambda != lambda || pds.params.mu != mu) {
                continue;
            }
            Certificate cert = base_certificate(field, {d});
            cert.params.lambda = lambda;
            cert.params.mu = mu;
            cert.reference_set = *candidate;
            cert.pds_type = pds.pds_type;
            cert.ls_n = pds.ls_n;
            cert.ls_r = pds.ls_r;
            cert.regular = pds.regular;
            Elem offset = 0;
            if (d == *candidate) {
                cert.translate_offset = 0;
            } else if (is_translate(field, d, *candidate, offset)) {
                cert.translate_offset = offset;
            }
            cert.trivial = cert.translate_offset.has_value();
            cert.kind = cert.trivial ? Kind::TrivialSkewPDS : Kind::SkewPDS;
            return cert;
        }
    }
    return none_certificate(field, {d});
}

Certificate check_family(const Field& field, const Family& family_in, FamilyMode mode,
                         const std::optional<ElemSet>& reference)
{
    Family family;
    for (const auto& set : family_in) {
        family.push_back(normalize_set(field, set));
    }
    validate_family(field, family);
    const DiffMultiset dm =
        mode == FamilyMode::Internal ? family_internal(field, family) : family_external(field, family);
    if (dm.total == 0) {
        return none_certificate(field, family);
    }
    Certificate cert = base_certificate(field, family);
    const bool internal = mode == FamilyMode::Internal;

    const auto values = nonzero_values(dm, 2);
    if (values.size() == 1) {
        cert.kind = internal ? Kind::DDF : Kind::EDF;
        cert.params.lambda = cert.params.mu = values.front();
        return cert;
    }

    ElemSet s;
    for (const auto& set : family) {
        s.insert(s.end(), set.begin(), set.end());
    }
    std::sort(s.begin(), s.end());
    ElemSet target = reference ? normalize_set(field, *reference) : s;
    const std::vector<char> mask = membership(field, target);
    bool empty_in = false;
    bool empty_out = false;
    const auto on = constant_on(dm, mask, 1, empty_in);
    const auto off = constant_on(dm, mask, 0, empty_out);
    if (!on || !off) {
        return none_certificate(field, family);
    }
    cert.params.lambda = *on;
    cert.params.mu = *off;
    cert.reference_set = target;
    if (reference) {
        cert.kind = internal ? Kind::RelativeDPDF : Kind::RelativeEPDF;
        ElemSet target_star = target;
        std::erase(target_star, Elem{0});
        cert.trivial = target_star == s || target_star == complement(field, s, false);
    } else {
        cert.kind = internal ? Kind::DPDF : Kind::EPDF;
    }
    return cert;
}

Certificate check_ads(const Field& field, const ElemSet& d_in)
{
    const ElemSet d = normalize_set(field, d_in);
    DiffMultiset dm = empty_multiset(field);
    add_internal(field, d, dm);
    const auto values = nonzero_values(dm, 2);
    if (values.size() != 2 || values[1] != values[0] + 1) {
        return none_certificate(field, {d});
    }
    Certificate cert = base_certificate(field, {d});
    cert.kind = Kind::ADS;
    cert.params.lambda = values[0];
    cert.params.mu = values[1];
    for (std::size_t g = 1; g < dm.counts.size(); ++g) {
        if (dm.counts[g] == values[0]) {
            cert.reference_set.push_back(static_cast<Elem>(g));
        }
    }
    cert.params.t = static_cast<std::int64_t>(cert.reference_set.size());
    return cert;
}

bool complement_law_holds(const Field& field, const Certificate& skew)
{
    if ((skew.kind != Kind::SkewPDS && skew.kind != Kind::TrivialSkewPDS) || skew.sets.size() != 1) {
        return false;
    }
    const ElemSet gd = complement(field, skew.sets.front(), true);
    const ElemSet ga = complement(field, skew.reference_set, true);
    const Certificate comp = check_skew_pds(field, gd);
    if (comp.kind != Kind::SkewPDS && comp.kind != Kind::TrivialSkewPDS) {
        return false;
    }
    const std::int64_t v = skew.params.v;
    const std::int64_t k = skew.params.k.front();
    return comp.reference_set == ga && comp.params.k.front() == v - k &&
           comp.params.lambda == v - 2 * k + skew.params.mu && comp.params.mu == v - 2 * k + skew.params.lambda;
}

bool reverify(const Field& field, const Certificate& cert)
{
    if (!(cert.field == field.spec())) {
        return false;
    }
    Certificate again;
    switch (cert.kind) {
    case Kind::None:
        return false;
    case Kind::PDS:
        again = check_pds(field, cert.sets.at(0));
        break;
    case Kind::SkewPDS:
    case Kind::TrivialSkewPDS:
        again = check_skew_pds(field, cert.sets.at(0));
        break;
    case Kind::ADS:
        again = check_ads(field, cert.sets.at(0));
        break;
    case Kind::DDF:
    case Kind::DPDF:
        again = check_family(field, cert.sets, FamilyMode::Internal);
        break;
    case Kind::EDF:
    case Kind::EPDF:
        again = check_family(field, cert.sets, FamilyMode::External);
        break;
    case Kind::RelativeDPDF:
        again = check_family(field, cert.sets, FamilyMode::Internal, cert.reference_set);
        break;
    case Kind::RelativeEPDF:
        again = check_family(field, cert.sets, FamilyMode::External, cert.reference_set);
        break;
    }
    return again == cert;
}

}  // namespace cycloskew
