#pragma once

#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "grassbs/betti_graph.hpp"
#include "grassbs/complexes.hpp"
#include "grassbs/pairing.hpp"
#include "grassbs/tables.hpp"

namespace grassbs {

// Field order in emitted documents is fixed, entries are sorted canonically
// and rationals rendered gcd-reduced with positive denominators, so identical
// inputs serialize byte-identically.
using OrderedJson = nlohmann::ordered_json;

OrderedJson intseq_to_json(const IntSeq& seq);
IntSeq intseq_from_json(const nlohmann::json& doc, int k);  // pads to length k

// Table documents:
//   {"kind":"betti"|"rank_betti"|"cohomology", "k":2, "n":3,
//    "entries":[{"i":0,"lambda":[1,0],"value":"4"}, ...],
//    "support":[[1,0],...]}            (cohomology only)
// Values are decimal strings ("3" or "3/2"); the reader also accepts JSON
// integers. Weights may be written short ([] for the empty partition); the
// writer always emits the length-k padded form.
OrderedJson table_to_json(const BettiTable& table);
OrderedJson table_to_json(const RankBettiTable& table);
OrderedJson table_to_json(const CohomologyTable& table);

BettiTable betti_from_json(const nlohmann::json& doc);
RankBettiTable rank_betti_from_json(const nlohmann::json& doc);
CohomologyTable cohomology_from_json(const nlohmann::json& doc);

using AnyTable = std::variant<BettiTable, RankBettiTable, CohomologyTable>;
AnyTable table_from_json(const nlohmann::json& doc);  // dispatches on "kind"

// Lenient structural checks on a raw table document: malformed weights,
// unparsable values, negative values, cohomology degrees out of range,
// entries outside the declared support. Returns diagnostics instead of
// throwing.
std::vector<std::string> validate_table_json(const nlohmann::json& doc);

// Double complex documents:
//   {"poset":{"elements":[...],"less":[[a,b],...]},
//    "cells":[{"p":0,"q":0,"basis":[{"label":...}]}],
//    "dv":[{"p":0,"q":0,"matrix":[["1"],...]}], "dh":[...]}
// Poset elements and labels may be strings or arbitrary JSON values; non-
// strings are canonicalized by their compact JSON rendering. A matrix at
// (p,q) maps the cell basis at (p,q) to the target cell's basis (rows index
// the target, columns the source).
DoubleComplex double_complex_from_json(const nlohmann::json& doc);
OrderedJson double_complex_to_json(const DoubleComplex& dc);
std::vector<std::string> validate_double_complex_json(const nlohmann::json& doc);

OrderedJson residuals_to_json(const std::vector<Rat>& residuals);
OrderedJson certificate_to_json(const ConvexityCertificate& certificate);
OrderedJson membership_to_json(const MembershipResult& result);
OrderedJson grid_to_json(const PairingGrid& grid);
OrderedJson e1_pairs_to_json(const std::vector<std::pair<E1Vertex, E1Vertex>>& pairs,
                             const Poset& poset);

// Paper-style rendering: homological degree across, weights down.
std::string pretty_table(const TableBase& table, const std::string& title);

}  // namespace grassbs
