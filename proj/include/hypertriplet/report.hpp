#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "hypertriplet/entropy.hpp"
#include "hypertriplet/hmotif.hpp"
#include "hypertriplet/hypergraph.hpp"
#include "hypertriplet/merge.hpp"
#include "hypertriplet/search.hpp"

namespace hypertriplet {

enum class OutputFormat { jsonl, tsv };

// Triplet results: one JSON object or TSV row per result. Weights appear both
// as exact "num/den" strings and as decimal floats. Schemas are versioned via
// the "schema" field.
void write_results(std::ostream& out, std::span<const TripletResult> results, OutputFormat fmt);

void write_entropy(std::ostream& out, std::span<const EntropyRow> rows, OutputFormat fmt);

// TSV columns: class_id, canonical_pattern_bits, closed_flag, count; summary
// totals as trailing '#' comment lines.
void write_census_tsv(std::ostream& out, const CensusReport& report);
std::string census_json(const CensusReport& report);

std::string components_json(const ComponentSet& comps, const CanonicalHypergraph& h);

std::string stats_json(const HypergraphStats& s);

}  // namespace hypertriplet
