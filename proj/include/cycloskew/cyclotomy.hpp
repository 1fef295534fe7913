#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cycloskew/field.hpp"
#include "cycloskew/numtheory.hpp"

namespace cycloskew {

/// The cosets C_i = g^i <g^e> of the index-e subgroup of GF(q)^*.
class ClassPartition {
public:
    ClassPartition(FieldPtr field, std::uint32_t e);

    const Field& field() const noexcept { return *field_; }
    const FieldPtr& field_ptr() const noexcept { return field_; }
    std::uint32_t order() const noexcept { return e_; }
    std::uint32_t class_size() const noexcept { return f_; }

    /// log(x) mod e.
    std::uint32_t index_of(Elem x) const;

    /// C_i in increasing code order; i is reduced mod e.
    const ElemSet& members(std::int64_t i) const;

    /// Sorted union of the listed classes (indices reduced mod e).
    ElemSet union_of(std::span<const std::int64_t> indices) const;
    ElemSet union_of(std::initializer_list<std::int64_t> indices) const
    {
        return union_of(std::span<const std::int64_t>(indices.begin(), indices.size()));
    }

private:
    FieldPtr field_;
    std::uint32_t e_ = 1;
    std::uint32_t f_ = 0;
    std::vector<ElemSet> members_;
};

enum class CycProvenance { BruteForce, ClosedForm };

/// e x e matrix of cyclotomic numbers (i,j)_e.
struct CycNumTable {
    std::uint32_t e = 0;
    std::vector<std::int64_t> counts;
    CycProvenance provenance = CycProvenance::BruteForce;

    std::optional<QuadRepST> st;
    std::optional<QuadRepXY> xy;
    std::optional<QuadRepAB> ab;
    /// Signs fixed by calibration (order 8 closed form only).
    std::optional<std::int64_t> resolved_y;
    std::optional<std::int64_t> resolved_b;

    /// (i,j)_e with both indices reduced mod e.
    std::int64_t at(std::int64_t i, std::int64_t j) const;
    bool same_counts(const CycNumTable& other) const { return e == other.e && counts == other.counts; }
};

/// Exact count of z in C_i with z+1 in C_j. O(f).
std::int64_t cyclotomic_number_bruteforce(const ClassPartition& partition, std::uint32_t i,
                                          std::uint32_t j);

/// All e^2 numbers in one pass over the field.
CycNumTable cyclotomic_table_bruteforce(const Field& field, std::uint32_t e);

CycNumTable cyclotomic_numbers_order2(const Field& field);
CycNumTable cyclotomic_numbers_order4(const Field& field);
/// Order-8 closed form; the signs of y and b are calibrated against brute-force probes.
CycNumTable cyclotomic_numbers_order8(const Field& field);

/// Dispatches to the closed form for e in {1, 2, 4, 8}.
CycNumTable cyclotomic_numbers_closed_form(const Field& field, std::uint32_t e);

/// Order-8 candidate table for given signed y and b, or nullopt when some
/// entry is not an integer.
std::optional<CycNumTable> order8_table_for(std::uint64_t q, const QuadRepXY& xy, const QuadRepAB& ab,
                                            bool two_quartic);

/// Multiplicity of each class C_c in Delta(C_j): entry c is (c-j, 0)_e.
std::vector<std::int64_t> delta_profile(const CycNumTable& table, std::int64_t j);

/// Multiplicity of each class C_c in Delta(C_{j+l}, C_l): entry c is (c-l, j)_e.
std::vector<std::int64_t> delta_profile_pair(const CycNumTable& table, std::int64_t j, std::int64_t l);

std::string format_table(const CycNumTable& table);

}  // namespace cycloskew
