#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cycloskew/field.hpp"

namespace cycloskew {

/// Multiplicity of every group element in a multiset of differences.
struct DiffMultiset {
    std::vector<std::uint32_t> counts;
    std::uint64_t total = 0;

    DiffMultiset& operator+=(const DiffMultiset& other);
    friend bool operator==(const DiffMultiset&, const DiffMultiset&) = default;
};

using Family = std::vector<ElemSet>;

enum class Kind {
    None,
    PDS,
    TrivialSkewPDS,
    SkewPDS,
    ADS,
    DDF,
    EDF,
    DPDF,
    EPDF,
    RelativeDPDF,
    RelativeEPDF,
};

enum class PdsType { None, Paley, DS, LatinSquare, NegativeLatinSquare, Other };

enum class FamilyMode { Internal, External };

std::string to_string(Kind kind);
Kind kind_from_string(const std::string& text);
std::string to_string(PdsType type);
PdsType pds_type_from_string(const std::string& text);

/// v, number of sets m, set sizes k, and the two frequencies. A single
/// frequency (DS/DDF/EDF) is stored with mu == lambda. t is the ADS count.
struct Params {
    std::int64_t v = 0;
    std::int64_t m = 1;
    std::vector<std::int64_t> k;
    std::int64_t lambda = 0;
    std::int64_t mu = 0;
    std::int64_t t = 0;

    friend bool operator==(const Params&, const Params&) = default;
};

/// Human-readable tuple in the usual notation, e.g. (13,3,2;1,0).
std::string format_params(Kind kind, const Params& params);

struct Certificate {
    Kind kind = Kind::None;
    FieldSpec field;
    Family sets;
    ElemSet reference_set;
    Params params;
    PdsType pds_type = PdsType::None;
    /// Latin-square (n, r) when pds_type is LatinSquare or NegativeLatinSquare.
    std::int64_t ls_n = 0;
    std::int64_t ls_r = 0;
    bool regular = false;
    bool trivial = false;
    /// For TrivialSkewPDS: D = offset + reference.
    std::optional<Elem> translate_offset;

    friend bool operator==(const Certificate&, const Certificate&) = default;
};

/// Sorted copy; throws DuplicateElement / ElementOutOfRange.
ElemSet normalize_set(const Field& field, std::vector<Elem> set);

DiffMultiset internal_differences(const Field& field, const ElemSet& d);
/// Includes the difference 0 for common elements.
DiffMultiset cross_differences(const Field& field, const ElemSet& d1, const ElemSet& d2);
DiffMultiset family_internal(const Field& field, const Family& family);
/// Sum over ordered pairs i != j of Delta(D_i, D_j), computed pairwise.
DiffMultiset family_external(const Field& field, const Family& family);

struct TwoLevel {
    std::int64_t inside = 0;
    std::int64_t outside = 0;
};

/// Value on T minus 0 and value on G^* minus T, if both are constant. An empty
/// side takes the other side's value.
std::optional<TwoLevel> two_level_profile(const Field& field, const DiffMultiset& dm, const ElemSet& t);

/// Throws NotDisjoint / ContainsZero.
void validate_family(const Field& field, const Family& family);

Certificate check_pds(const Field& field, const ElemSet& a);
Certificate check_skew_pds(const Field& field, const ElemSet& d);
Certificate check_family(const Field& field, const Family& family, FamilyMode mode,
                         const std::optional<ElemSet>& reference = std::nullopt);
Certificate check_ads(const Field& field, const ElemSet& d);

/// G \ D checked as a skew PDS for G \ A with (v, v-k, v-2k+mu, v-2k+lambda).
bool complement_law_holds(const Field& field, const Certificate& skew);

/// Complement of a set in G (with_zero) or in G^*.
ElemSet complement(const Field& field, const ElemSet& set, bool with_zero);
ElemSet negate(const Field& field, const ElemSet& set);

/// Re-runs the check that produced the certificate and compares everything.
bool reverify(const Field& field, const Certificate& cert);

}  // namespace cycloskew
