#pragma once

#include <string>
#include <vector>

#include "simcores/gap_poset.hpp"
#include "simcores/lattice_paths.hpp"
#include "simcores/partition.hpp"
#include "simcores/sc_core.hpp"
#include "simcores/theorems.hpp"

namespace simcores {

// Partition <-> JSON array of parts, descending; [] is the empty partition.
std::string partition_to_json(const Partition& p);
Partition partition_from_json(const std::string& text);

// Hook set -> JSON array, descending.
std::string hookset_to_json(const HookSet& h);

// Poset exports. JSON: {generators, ground, cover_edges}; DOT: one node
// per ground element, one edge per cover pair.
std::string poset_to_json(const GapPoset& p);
std::string poset_to_dot(const GapPoset& p);

// Modified-diagram exports: solid cover edges plus forbidden pairs
// (dotted, tagged with a forbidden attribute in DOT).
std::string tilde_to_json(const TildePoset& tp);
std::string tilde_to_dot(const TildePoset& tp);

// Witness line: {"s":..,"md":[...],"partition":[...]}.
std::string witness_to_json(const ScCoreWitness& w, int s);

// Path parsing that also accepts a JSON array of step tokens.
MotzkinPath motzkin_from_text(const std::string& text);
GenDyckPath gen_dyck_from_text(const std::string& text, int k);

// Report serialization. with_timing = false pins elapsed_ms to 0.
std::string report_to_json(const VerificationReport& r, bool with_timing);
std::string report_csv_header();
std::string report_to_csv(const VerificationReport& r, bool with_timing);

}  // namespace simcores
