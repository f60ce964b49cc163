#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rplie/construct.hpp"
#include "rplie/rpcheck.hpp"

namespace rplie {

using Params = std::map<std::string, Scalar>;

enum class ParamKind {
    Free,        // any small rational
    Nonzero,     // != 0
    Positive,    // > 0
    UnitOpen,    // (0, 1)
    UnitHalf,    // [0, 1)
    GreaterOne,  // > 1
    Choice12,    // discrete 1 or 2 (metric variant selectors)
};

struct ParamSpec {
    std::string name;
    ParamKind kind = ParamKind::Free;
};

struct Condition {
    std::string description;
    std::function<bool(const Params&)> holds;
};

/// Deterministic generator of small rational parameter values.
class Sampler {
public:
    explicit Sampler(uint64_t seed) : rng_(seed) {}
    long range(long lo, long hi);  // inclusive bounds
    Scalar draw(ParamKind kind);

private:
    std::mt19937_64 rng_;
};

/// One catalog row: a parametrized recipe for a triple (algebra, bivector,
/// metric) together with its admissibility conditions and expected rank.
struct Family {
    int table = 0, row = 0;
    std::string id;  // "T<table>.R<row>"
    std::vector<ParamSpec> params;
    std::vector<Condition> conditions;
    std::function<AssembledTriple(const Params&)> build;
    int declared_rank = 2;
    bool partial = false;        // metric family only partially listed
    bool needs_float = false;    // instantiation may leave the rational field
    std::function<AssembledTriple(const Params&)> corrected_build;  // optional
    std::string correction_note;
    // After drawing independent parameters, solve the row's side conditions
    // for the dependent ones; false requests a resample.
    std::function<bool(Params&, Sampler&)> finish_sample;
    std::vector<Mat> symplectic_derivations;  // printed basis (tables with one)
};

/// All rows of the classification tables, in (table, row) order. Built fresh
/// per call so the scalars live in the current session field.
std::vector<Family> families();
const Family* find_family(const std::vector<Family>& all, const std::string& id);

/// Draws an admissible assignment (rejection sampling plus the row's
/// dependent-parameter solver). Throws after too many rejections.
Params sample_params(const Family& f, Sampler& s);

/// Builds the row, checking admissibility first; throws std::invalid_argument
/// naming the violated condition.
AssembledTriple instantiate(const Family& f, const Params& p, bool corrected = false);

struct SampleFailure {
    int sample = 0;
    std::string condition;
    std::string detail;
};

struct FamilyReport {
    std::string id;
    int samples = 0;
    int verbatim_passed = 0;
    int corrected_passed = 0;
    bool has_correction = false;
    bool used_correction = false;
    bool all_passed = false;
    bool partial = false;
    std::string correction_note;
    std::vector<SampleFailure> failures;
};

/// Runs is_riemann_poisson (plus the declared-rank cross-check) on seeded
/// admissible samples; falls back to the corrected variant when the verbatim
/// row fails.
FamilyReport verify_family(const Family& f, int samples, uint64_t seed);

/// True iff sp_cap_der of the row's block equals the printed span.
bool verify_der_column(const Family& f, const Params& p);

/// The 2-form paired with the row's bivector on its image (the inverse
/// block, sign matched to the decomposition).
Bivector omega_of_bivector(const Bivector& r);

}  // namespace rplie
