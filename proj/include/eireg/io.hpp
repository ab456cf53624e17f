#pragma once

// Text and JSON forms shared by the CLI and the Python module.
//
// Partitions are written as comma-separated parts with exponents for repeats,
// e.g. "14,13,5,4^5,3,1^2"; whitespace is ignored and "-" or "" is the empty
// partition.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "eireg/abacus.hpp"
#include "eireg/ladders.hpp"
#include "eireg/oracle.hpp"
#include "eireg/partition.hpp"
#include "eireg/regulariser.hpp"

namespace eireg {

// Throws ParseError, or the Partition construction errors.
Partition parse_partition(std::string_view text);

std::string format_partition(const Partition& lambda);

// One line per abacus row, runners left to right, 'b' for a bead and 'n' for an
// empty position, finishing with one all-empty row.
std::string render_abacus(const AbacusDisplay& abacus);

// Ladder label of every node, row by row: "l", or "<l,r>" when gcd(e, i) > 1.
std::vector<std::vector<std::string>> ladder_labels(const Partition& lambda, const EiParams& p);

// ladder_labels laid out as a right-aligned grid.
std::string render_ladders(const Partition& lambda, const EiParams& p);

std::string format_node(Node x);

nlohmann::json to_json(const LadderFingerprint& fp);
nlohmann::json to_json(const AbacusDisplay& abacus);
nlohmann::json to_json(const PhiTrace& trace);
nlohmann::json to_json(const RegResult& result);
nlohmann::json to_json(const RegClass& cls);
nlohmann::json to_json(const VerificationReport& report);

// Fixed-width table: one line per check plus a header line.
std::string render_report(const VerificationReport& report);

}  // namespace eireg
