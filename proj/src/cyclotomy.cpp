#include "cycloskew/cyclotomy.hpp"

#include <algorithm>
#include <array>
#include <iomanip>
#include <sstream>

#include "cycloskew/arith.hpp"
#include "cycloskew/error.hpp"
#include "cycloskew/parallel.hpp"

namespace cycloskew {

namespace {

void check_order(std::uint64_t q, std::uint32_t e)
{
    if (e == 0 || (q - 1) % e != 0) {
        throw Error(ErrorCode::OrderDoesNotDivide,
                    "e=" + std::to_string(e) + " does not divide q-1=" + std::to_string(q - 1));
    }
}

// Letter layout of a cyclotomic table: "A:00,40;B:01" assigns letter A to
// entries (0,0) and (4,0), and so on. Every entry must be covered once.
template <std::size_t E>
std::array<std::array<int, E>, E> parse_layout(const char* spec)
{
    std::array<std::array<int, E>, E> grid{};
    for (auto& row : grid) {
        row.fill(-1);
    }
    int letter = -1;
    for (const char* c = spec; *c != '\0'; ++c) {
        if (*c >= 'A' && *c <= 'Z' && c[1] == ':') {
            letter = *c - 'A';
            ++c;
        } else if (*c >= '0' && *c <= '9') {
            const int i = c[0] - '0';
            const int j = c[1] - '0';
            if (grid[i][j] != -1) {
                throw Error(ErrorCode::IndexOutOfRange, "layout covers an entry twice");
            }
            grid[i][j] = letter;
            ++c;
        }
    }
    for (const auto& row : grid) {
        for (int v : row) {
            if (v < 0) {
                throw Error(ErrorCode::IndexOutOfRange, "layout misses an entry");
            }
        }
    }
    return grid;
}

const auto& order4_layout(bool f_even)
{
    static const auto even = parse_layout<4>("A:00;B:10,01,33;C:20,02,22;D:30,03,11;"
                                             "E:12,13,21,23,31,32");
    static const auto odd = parse_layout<4>("A:00,20,22;B:01,13,32;C:02;D:03,12,31;"
                                            "E:10,11,21,23,30,33");
    return f_even ? even : odd;
}

const auto& order8_layout(bool f_even)
{
    static const auto odd = parse_layout<8>(
        "A:00,40,44;B:01,37,54;C:02,26,64;D:03,15,74;E:04;F:05,14,73;G:06,24,62;H:07,34,51;"
        "I:10,33,41,45,50,77;J:11,30,43,47,55,70;K:12,27,36,53,65,71;"
        "L:13,16,25,63,72,75;M:17,23,35,52,61,76;N:20,22,42,46,60,66;"
        "O:21,31,32,56,57,67");
    static const auto even = parse_layout<8>(
        "A:00;B:01,10,77;C:02,20,66;D:03,30,55;E:04,40,44;F:05,50,33;G:06,60,22;H:07,70,11;"
        "I:12,21,17,71,67,76;J:13,31,27,72,56,65;K:14,41,37,73,45,54;"
        "L:15,51,34,43,47,74;M:16,61,23,32,57,75;N:24,42,26,64,46,62;"
        "O:25,52,35,53,36,63");
    return f_even ? even : odd;
}

// 16 * letter = q + c0 + cs*s + ct*t
struct Coeff4 {
    int c0, cs, ct;
};

constexpr std::array<Coeff4, 5> kOrder4Even{{{-11, -6, 0}, {-3, 2, 4}, {-3, 2, 0}, {-3, 2, -4}, {1, -2, 0}}};
constexpr std::array<Coeff4, 5> kOrder4Odd{{{-7, 2, 0}, {1, 2, -4}, {1, -6, 0}, {1, 2, 4}, {-3, -2, 0}}};

// 64 * letter = q + c0 + cx*x + ca*a + cy*y + cb*b
struct Coeff8 {
    int c0, cx, ca, cy, cb;
};

using Column8 = std::array<Coeff8, 15>;

constexpr Column8 kOddQuartic{{
    {-15, -2, 0, 0, 0}, {1, 2, -4, 16, 0}, {1, 6, 8, -16, 0}, {1, 2, -4, -16, 0},
    {1, -18, 0, 0, 0}, {1, 2, -4, 16, 0}, {1, 6, 8, 16, 0}, {1, 2, -4, -16, 0},
    {-7, 2, 4, 0, 0}, {-7, 2, 4, 0, 0}, {1, -6, 4, 0, 16}, {1, 2, -4, 0, 0},
    {1, -6, 4, 0, -16}, {-7, -2, -8, 0, 0}, {1, 2, -4, 0, 0},
}};

constexpr Column8 kOddNonQuartic{{
    {-15, -10, -8, 0, 0}, {1, 2, -4, 0, -16}, {1, -2, 0, 16, 0}, {1, 2, -4, 0, -16},
    {1, 6, 24, 0, 0}, {1, 2, -4, 0, 16}, {1, -2, 0, -16, 0}, {1, 2, -4, 0, 16},
    {-7, 2, 4, 16, 0}, {-7, 2, 4, -16, 0}, {1, 2, -4, 0, 0}, {1, -6, 4, 0, 0},
    {1, 2, -4, 0, 0}, {-7, 6, 0, 0, 0}, {1, -6, 4, 0, 0},
}};

constexpr Column8 kEvenQuartic{{
    {-23, -18, -24, 0, 0}, {-7, 2, 4, 16, 16}, {-7, 6, 0, 16, 0}, {-7, 2, 4, -16, 16},
    {-7, -2, 8, 0, 0}, {-7, 2, 4, 16, -16}, {-7, 6, 0, -16, 0}, {-7, 2, 4, -16, -16},
    {1, 2, -4, 0, 0}, {1, -6, 4, 0, 0}, {1, 2, -4, 0, 0}, {1, 2, -4, 0, 0},
    {1, -6, 4, 0, 0}, {1, -2, 0, 0, 0}, {1, 2, -4, 0, 0},
}};

constexpr Column8 kEvenNonQuartic{{
    {-23, 6, 0, 0, 0}, {-7, 2, 4, 0, 0}, {-7, -2, -8, -16, 0}, {-7, 2, 4, 0, 0},
    {-7, -10, 0, 0, 0}, {-7, 2, 4, 0, 0}, {-7, -2, -8, 16, 0}, {-7, 2, 4, 0, 0},
    {1, -6, 4, 0, 0}, {1, 2, -4, 0, -16}, {1, 2, -4, 16, 0}, {1, 2, -4, -16, 0},
    {1, 2, -4, 0, 16}, {1, 6, 8, 0, 0}, {1, -6, 4, 0, 0},
}};

// Entries used to fix the signs of y and b; together they see both signs in every case.
constexpr std::array<std::pair<int, int>, 5> kProbes{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}};

CycNumTable table_with(std::uint32_t e, CycProvenance provenance)
{
    CycNumTable table;
    table.e = e;
    table.counts.assign(std::size_t{e} * e, 0);
    table.provenance = provenance;
    return table;
}

}  // namespace

ClassPartition::ClassPartition(FieldPtr field, std::uint32_t e) : field_(std::move(field)), e_(e)
{
    const std::uint64_t q = field_->order();
    check_order(q, e);
    f_ = static_cast<std::uint32_t>((q - 1) / e);
    members_.assign(e, {});
    for (auto& m : members_) {
        m.reserve(f_);
    }
    const auto exp = field_->exp_table();
    for (std::size_t k = 0; k < exp.size(); ++k) {
        members_[k % e].push_back(exp[k]);
    }
    for (auto& m : members_) {
        std::sort(m.begin(), m.end());
    }
}

std::uint32_t ClassPartition::index_of(Elem x) const
{
    return field_->log(x) % e_;
}

const ElemSet& ClassPartition::members(std::int64_t i) const
{
    return members_[static_cast<std::size_t>(arith::mod(i, e_))];
}

ElemSet ClassPartition::union_of(std::span<const std::int64_t> indices) const
{
    std::vector<bool> used(e_, false);
    ElemSet out;
    for (std::int64_t i : indices) {
        const auto r = static_cast<std::size_t>(arith::mod(i, e_));
        if (used[r]) {
            continue;
        }
        used[r] = true;
        out.insert(out.end(), members_[r].begin(), members_[r].end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::int64_t CycNumTable::at(std::int64_t i, std::int64_t j) const
{
    const auto r = static_cast<std::size_t>(arith::mod(i, e));
    const auto c = static_cast<std::size_t>(arith::mod(j, e));
    return counts[r * e + c];
}

std::int64_t cyclotomic_number_bruteforce(const ClassPartition& partition, std::uint32_t i,
                                          std::uint32_t j)
{
    const std::uint32_t e = partition.order();
    if (i >= e || j >= e) {
        throw Error(ErrorCode::IndexOutOfRange, "class index out of range");
    }
    const Field& field = partition.field();
    const auto log = field.log_table();
    std::int64_t count = 0;
    for (Elem z : partition.members(i)) {
        const Elem next = field.add_one(z);
        if (next != 0 && log[next] % e == j) {
            ++count;
        }
    }
    return count;
}

CycNumTable cyclotomic_table_bruteforce(const Field& field, std::uint32_t e)
{
    const std::uint64_t q = field.order();
    check_order(q, e);
    const auto exp = field.exp_table();
    const auto log = field.log_table();
    const std::size_t n = exp.size();
    const unsigned workers = parallel::plan(n, 1 << 16);
    std::vector<std::vector<std::int64_t>> partial(workers, std::vector<std::int64_t>(std::size_t{e} * e, 0));
    parallel::for_chunks(n, workers, [&](std::size_t begin, std::size_t end, unsigned w) {
        auto& local = partial[w];
        for (std::size_t k = begin; k < end; ++k) {
            const Elem next = field.add_one(exp[k]);
            if (next == 0) {
                continue;
            }
            local[(k % e) * e + log[next] % e] += 1;
        }
    });
    CycNumTable table = table_with(e, CycProvenance::BruteForce);
    for (const auto& local : partial) {
        for (std::size_t i = 0; i < local.size(); ++i) {
            table.counts[i] += local[i];
        }
    }
    return table;
}

CycNumTable cyclotomic_numbers_order2(const Field& field)
{
    const std::int64_t q = field.order();
    check_order(q, 2);
    CycNumTable table = table_with(2, CycProvenance::ClosedForm);
    if (q % 4 == 1) {
        table.counts = {(q - 5) / 4, (q - 1) / 4, (q - 1) / 4, (q - 1) / 4};
    } else {
        table.counts = {(q - 3) / 4, (q + 1) / 4, (q - 3) / 4, (q - 3) / 4};
    }
    return table;
}

CycNumTable cyclotomic_numbers_order4(const Field& field)
{
    const std::int64_t q = field.order();
    if (q % 4 != 1) {
        throw Error(ErrorCode::NotOneMod4, "order-4 cyclotomic numbers need q = 1 mod 4");
    }
    const QuadRepST st = two_squares_rep(field);
    const bool f_even = ((q - 1) / 4) % 2 == 0;
    const auto& coeffs = f_even ? kOrder4Even : kOrder4Odd;
    std::array<std::int64_t, 5> letters{};
    for (std::size_t l = 0; l < coeffs.size(); ++l) {
        const std::int64_t num = q + coeffs[l].c0 + coeffs[l].cs * st.s + coeffs[l].ct * st.t;
        const auto value = arith::exact_div(num, 16);
        if (!value) {
            throw Error(ErrorCode::PredictionMismatch, "order-4 formula is not integral");
        }
        letters[l] = *value;
    }
    CycNumTable table = table_with(4, CycProvenance::ClosedForm);
    const auto& layout = order4_layout(f_even);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            table.counts[i * 4 + j] = letters[layout[i][j]];
        }
    }
    table.st = st;
    return table;
}

std::optional<CycNumTable> order8_table_for(std::uint64_t q, const QuadRepXY& xy, const QuadRepAB& ab,
                                            bool two_quartic)
{
    if (q % 8 != 1) {
        throw Error(ErrorCode::NotOneMod8, "order-8 cyclotomic numbers need q = 1 mod 8");
    }
    const bool f_even = q % 16 == 1;
    const Column8& column = f_even ? (two_quartic ? kEvenQuartic : kEvenNonQuartic)
                                   : (two_quartic ? kOddQuartic : kOddNonQuartic);
    std::array<std::int64_t, 15> letters{};
    const auto qi = static_cast<std::int64_t>(q);
    for (std::size_t l = 0; l < column.size(); ++l) {
        const Coeff8& c = column[l];
        const std::int64_t num = qi + c.c0 + c.cx * xy.x + c.ca * ab.a + c.cy * xy.y + c.cb * ab.b;
        const auto value = arith::exact_div(num, 64);
        if (!value || *value < 0) {
            return std::nullopt;
        }
        letters[l] = *value;
    }
    CycNumTable table = table_with(8, CycProvenance::ClosedForm);
    const auto& layout = order8_layout(f_even);
    for (std::size_t i = 0; i < 8; ++i) {
        for (std::size_t j = 0; j < 8; ++j) {
            table.counts[i * 8 + j] = letters[layout[i][j]];
        }
    }
    table.xy = xy;
    table.ab = ab;
    table.resolved_y = xy.y;
    table.resolved_b = ab.b;
    return table;
}

CycNumTable cyclotomic_numbers_order8(const Field& field)
{
    const std::uint64_t q = field.order();
    if (q % 8 != 1) {
        throw Error(ErrorCode::NotOneMod8, "order-8 cyclotomic numbers need q = 1 mod 8");
    }
    const std::uint32_t p = field.characteristic();
    const std::uint32_t m = field.degree();
    const QuadRepXY xy = x2_4y2_rep(q, p, m);
    const QuadRepAB ab = a2_2b2_rep(q, p, m);
    const bool two_quartic = two_is_quartic_residue(p, m);
    const CycNumTable brute = cyclotomic_table_bruteforce(field, 8);

    std::vector<CycNumTable> matches;
    for (int sy : {1, -1}) {
        if (sy < 0 && xy.y == 0) {
            continue;
        }
        for (int sb : {1, -1}) {
            if (sb < 0 && ab.b == 0) {
                continue;
            }
            auto candidate = order8_table_for(q, {xy.x, sy * xy.y}, {ab.a, sb * ab.b}, two_quartic);
            if (!candidate) {
                continue;
            }
            const bool agrees = std::all_of(kProbes.begin(), kProbes.end(), [&](const auto& probe) {
                return candidate->at(probe.first, probe.second) == brute.at(probe.first, probe.second);
            });
            const bool seen = std::any_of(matches.begin(), matches.end(),
                                          [&](const CycNumTable& t) { return t.same_counts(*candidate); });
            if (agrees && !seen) {
                matches.push_back(std::move(*candidate));
            }
        }
    }
    if (matches.size() != 1) {
        throw Error(ErrorCode::CalibrationAmbiguous,
                    std::to_string(matches.size()) + " sign choices match for q=" + std::to_string(q));
    }
    CycNumTable table = std::move(matches.front());
    if (q % 4 == 1) {
        table.st = two_squares_rep(field);
    }
    return table;
}

CycNumTable cyclotomic_numbers_closed_form(const Field& field, std::uint32_t e)
{
    switch (e) {
    case 1: {
        check_order(field.order(), 1);
        CycNumTable table = table_with(1, CycProvenance::ClosedForm);
        table.counts[0] = static_cast<std::int64_t>(field.order()) - 2;
        return table;
    }
    case 2: return cyclotomic_numbers_order2(field);
    case 4: check_order(field.order(), 4); return cyclotomic_numbers_order4(field);
    case 8: check_order(field.order(), 8); return cyclotomic_numbers_order8(field);
    default:
        throw Error(ErrorCode::OrderDoesNotDivide,
                    "no closed form for e=" + std::to_string(e));
    }
}

std::vector<std::int64_t> delta_profile(const CycNumTable& table, std::int64_t j)
{
    std::vector<std::int64_t> out(table.e);
    for (std::uint32_t c = 0; c < table.e; ++c) {
        out[c] = table.at(static_cast<std::int64_t>(c) - j, 0);
    }
    return out;
}

std::vector<std::int64_t> delta_profile_pair(const CycNumTable& table, std::int64_t j, std::int64_t l)
{
    std::vector<std::int64_t> out(table.e);
    for (std::uint32_t c = 0; c < table.e; ++c) {
        out[c] = table.at(static_cast<std::int64_t>(c) - l, j);
    }
    return out;
}

std::string format_table(const CycNumTable& table)
{
    std::int64_t widest = 1;
    for (auto v : table.counts) {
        widest = std::max<std::int64_t>(widest, static_cast<std::int64_t>(std::to_string(v).size()));
    }
    std::ostringstream out;
    for (std::uint32_t i = 0; i < table.e; ++i) {
        for (std::uint32_t j = 0; j < table.e; ++j) {
            out << (j ? " " : "") << std::setw(static_cast<int>(widest)) << table.at(i, j);
        }
        out << '\n';
    }
    return out.str();
}

}  // namespace cycloskew
