#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "scx/concat.hpp"
#include "scx/dfa.hpp"
#include "scx/unary.hpp"
#include "scx/witness.hpp"

namespace scx {

// DFA documents:
//   {"alphabet_size": 2, "num_states": 3, "start": 0, "finals": [2],
//    "delta": [[0,1],[0,2],[2,0]], "labels": ["0","1"]}
// "labels" is optional. A construction may attach a provenance side table
// "pair_states": [[i, subset_mask], ...] with one entry per state.

std::string dfa_to_json(const Dfa& d, std::span<const PairState> pair_states = {});

/// Throws ParseError for malformed JSON or a document of the wrong shape,
/// InvalidDfa for range/completeness violations.
Dfa dfa_from_json(std::string_view text, std::size_t state_limit = kDefaultStateLimit);

/// The "pair_states" side table of a DFA document; empty when absent.
std::vector<PairState> pair_states_from_json(std::string_view text);

// Length sets: {"mu": 2, "lambda": 3, "tail": [false,true], "cycle": [true,false,false]}
std::string length_set_to_json(const EventuallyPeriodicSet& s);
EventuallyPeriodicSet length_set_from_json(std::string_view text);

/// Reports as a JSON array. Without timing the "ms" field is 0 so the output
/// is byte-stable.
std::string reports_to_json(std::span<const VerificationReport> reports, bool timing = false);
std::vector<VerificationReport> reports_from_json(std::string_view text);

/// Header "family,n,k,raw,minimal,expected,pass,ms" plus one row per report.
std::string reports_to_csv(std::span<const VerificationReport> reports, bool timing = false);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace scx
