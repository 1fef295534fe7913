#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cycloskew/diffsets.hpp"
#include "cycloskew/field.hpp"

namespace cycloskew {

/// Everything the recipes read off q: the proper representations and residue facts.
/// Signs of t, y and b depend on the primitive element and are only resolved
/// when a field is supplied (t_signed / yb_signed).
struct Reps {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint64_t q = 0;
    std::optional<std::int64_t> s, t;
    std::optional<std::int64_t> x, y, a, b;
    std::optional<bool> two_quartic;
    bool t_signed = false;
    bool yb_signed = false;
};

/// Representations with y, b >= 0 and t >= 0.
Reps reps_numeric(std::uint32_t p, std::uint32_t m);
/// Representations with the generator-dependent signs resolved.
Reps reps_for(const Field& field);

enum class Applicability { Yes, No, NeedsField };
std::string to_string(Applicability a);

enum class ClaimMode { Pds, Skew, Internal, External };
std::string to_string(ClaimMode mode);
ClaimMode claim_mode_from_string(const std::string& text);

/// One predicted structure. Sets are only filled when a field is available.
struct Claim {
    std::string label;
    ClaimMode mode = ClaimMode::Skew;
    Kind kind = Kind::None;
    Params params;
    std::string sets_desc;
    std::string reference_desc;
    Family sets;
    /// Skew: the PDS A; relative families: T; standard families: S. Empty for DDF/EDF.
    ElemSet reference;
    /// Set when the stated parameters are known to be wrong or the branch is unlisted.
    std::string suspect;
};

struct Recipe {
    std::string id;
    std::string name;
    std::string statement;
    std::string conditions;
    std::vector<std::string> formulas;
    std::function<Applicability(const Reps&, const Field*)> applicable;
    std::function<std::vector<Claim>(const Reps&, const FieldPtr&)> claims;
};

/// The 25 recipes, in id order (R1..R25).
const std::vector<Recipe>& registry();
const Recipe& recipe_by_id(const std::string& id);

enum class ClaimStatus { Verified, Mismatch, Unverified };
std::string to_string(ClaimStatus status);
ClaimStatus claim_status_from_string(const std::string& text);

struct ClaimResult {
    Claim claim;
    ClaimStatus status = ClaimStatus::Unverified;
    std::optional<Certificate> certificate;
    /// Complement law checked on certified skew claims.
    std::optional<bool> complement_law;
    std::string note;
};

struct Construction {
    std::string recipe;
    std::uint64_t q = 0;
    std::optional<FieldSpec> field;
    Reps reps;
    std::vector<ClaimResult> claims;
    bool oracle_verified = false;

    /// Mismatches outside claims flagged suspect.
    std::size_t hard_mismatches() const;
};

/// Builds and (optionally) certifies every claim of the recipe on the field.
/// Throws NotApplicable, and PredictionMismatch on a non-suspect mismatch when strict.
Construction apply(const Recipe& recipe, const FieldPtr& field, bool certify = true, bool strict = true);
/// Prediction only, from q alone.
Construction predict(const Recipe& recipe, std::uint32_t p, std::uint32_t m);

/// Runs the certification pipeline on one claim.
ClaimResult certify_claim(const Field& field, const Claim& claim);

/// gamma in C_2^4 with one of 1-gamma, 1+gamma in C_0^4 and the other in C_2^4.
std::vector<Elem> admissible_gammas(const Field& field);
/// {i, -i, gamma i, -gamma i} over the smaller code of each {x, -x} in C_0^4.
Family symmetric_gamma_family(const Field& field, Elem gamma);
/// {i, gamma i} over i in C_0^4.
Family gamma_pair_family(const Field& field, Elem gamma);

struct SwapInput {
    ElemSet d;
    ElemSet a;
};

/// Family of sets D_i whose differences are lambda_i on A_i and mu_i elsewhere with
/// lambda_i - mu_i constant; certified relative to the union of the A_i.
Certificate swap_combinator(const Field& field, const std::vector<SwapInput>& pairs);

/// Union of a family that is a suitable DPDF/EPDF pair for T, certified as a skew PDS.
Certificate skew_from_families(const Field& field, const Family& family, const ElemSet& t);

struct ScanOptions {
    std::uint64_t q_min = 0;
    std::uint64_t q_max = 0;
    std::vector<std::string> recipes;
    std::uint64_t certify_cap = 5000;
    /// Largest field for which tables are built when not certifying.
    std::uint64_t field_cap = std::uint64_t{1} << 22;
    unsigned jobs = 0;
};

/// Constructions for every applicable (q, recipe) in range, ordered by (q, recipe index).
std::vector<Construction> enumerate_applicable(const ScanOptions& options);

/// Prime powers in [lo, hi] as (p, m), increasing.
std::vector<std::pair<std::uint32_t, std::uint32_t>> prime_powers_in(std::uint64_t lo, std::uint64_t hi);

}  // namespace cycloskew
