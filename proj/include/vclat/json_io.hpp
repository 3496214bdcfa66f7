// SPDX-License-Identifier: MIT
/**
 * @file json_io.hpp
 * @brief Deterministic JSON rendering of every report type, plus the Gram
 *        matrix text parser used by the command line.
 */
#pragma once

#include <json.hpp>

#include <string>

#include "vclat/chow.hpp"
#include "vclat/cremona.hpp"
#include "vclat/fm.hpp"
#include "vclat/lattice.hpp"
#include "vclat/moduli.hpp"
#include "vclat/verify.hpp"

namespace vclat {

/// Insertion-ordered JSON, so renderings are reproducible byte for byte.
using Json = nlohmann::ordered_json;

/// Integers render as JSON numbers while they fit in 64 bits, as decimal
/// strings beyond that; rationals render as numbers when integral and as
/// "p/q" strings otherwise.
Json json_int(const Int& n);
Json json_rat(const Rat& r);

Json json_vec(const VecZ& v);
Json json_vec(const VecQ& v);
Json json_mat(const MatZ& m);

Json to_json(const BinaryForm& f);
Json to_json(const MarkedGram& g);
Json to_json(const Labelling& l);
Json to_json(const FMCountReport& r);
Json to_json(const ComponentSpec& c);
Json to_json(const TemplateFrame& t);
Json to_json(const RationalityReport& r);
Json to_json(const BiggerDiscReport& r);
Json to_json(const SurveyTarget& t);
Json to_json(const SurveyImage& i);
Json to_json(const SurveyRow& r);
Json to_json(const SweepRow& r);
Json to_json(const CheckRecord& c);
Json to_json(const VerifyReport& r);

/**
 * Parses a Gram matrix from either a JSON array of arrays
 * ("[[3,4],[4,12]]") or a semicolon/comma literal ("3,4;4,12") and
 * validates it.  Errors name the offending entry with 1-based indices,
 * e.g. "asymmetric at (1,2)/(2,1)".
 */
GramLattice parse_gram(const std::string& text);

/// The raw matrix behind parse_gram, without the lattice validation.
MatZ parse_matrix(const std::string& text);

}  // namespace vclat
