#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rplie/catalog.hpp"
#include "rplie/construct.hpp"
#include "rplie/rpcheck.hpp"
#include "rplie/sl2.hpp"

namespace rplie::io {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ", col " + std::to_string(col_) +
                             ": " + what_),
          line(line_),
          col(col_) {}
};

/// A construction block: the raw pieces of a ConstructionData in document
/// form (labels e1.. for the first block, a1.. for the second).
struct ConstructionDoc {
    int hdim = 0, pdim = 0;
    std::map<std::pair<int, int>, Vec> hbrackets;  // values in h coordinates
    std::map<std::pair<int, int>, Vec> pbrackets;  // values in p coordinates
    bool hmetric_identity = true;
    std::map<std::pair<int, int>, Scalar> hmetric_entries;
    bool pmetric_identity = true;
    std::map<std::pair<int, int>, Scalar> pmetric_entries;
    std::map<std::pair<int, int>, Scalar> omega_entries;
    std::map<std::pair<int, int>, Vec> mu_entries;  // h coordinates
    std::map<int, Mat> phip;  // p index -> endomorphism of h
    std::map<int, Mat> phih;  // h index -> endomorphism of p

    bool operator==(const ConstructionDoc&) const = default;
};

struct Sl2Doc {
    std::vector<Mat> gens;
    bool operator==(const Sl2Doc&) const = default;
};

/// Parsed input document. All stored keys are normalized: bracket and
/// bivector keys have i < j (values sign-adjusted), metric keys i <= j,
/// zero values dropped.
struct Document {
    std::optional<int> dim;
    std::map<std::pair<int, int>, Vec> brackets;
    bool metric_identity = true;
    std::map<std::pair<int, int>, Scalar> metric_entries;
    bool has_bivector = false;
    std::map<std::pair<int, int>, Scalar> bivector_entries;
    std::optional<ConstructionDoc> construction;
    std::optional<Sl2Doc> sl2;

    bool operator==(const Document&) const = default;
};

Document parse(const std::string& text);
std::string serialize(const Document& doc);

LieAlgebra document_algebra(const Document& doc);
Metric document_metric(const Document& doc);
Bivector document_bivector(const Document& doc);  // zero when section absent
ConstructionData document_construction(const Document& doc);
Sl2Subalgebra document_sl2(const Document& doc);

Document document_from_triple(const AssembledTriple& t);

/// JSON reports; all deterministic (fixed key order, canonical scalars),
/// schema "rplie-report/1".
std::string emit_rp_report(const RPReport& rep);
std::string emit_catalog_report(const std::vector<FamilyReport>& rows, int samples,
                                uint64_t seed);
std::string emit_decomposition(const Decomposition& d);
std::string emit_levi_civita(const LieAlgebra& g, const Metric& rho,
                             const LeviCivitaProduct& a);
std::string emit_flat_kahler(const FlatSplitReport& split, const Bivector* omega,
                             bool kahler_ok);
std::string emit_sl2(const Sl2Classification& c);
std::string emit_construct(const EqproReport& eqpro, const RPReport* rp,
                           const AssembledTriple* t);

}  // namespace rplie::io
