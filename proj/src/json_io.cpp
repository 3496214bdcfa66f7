// SPDX-License-Identifier: MIT
/**
 * @file json_io.cpp
 * @brief JSON rendering and Gram matrix text parsing.
 */
#include "vclat/json_io.hpp"

#include <cctype>
#include <stdexcept>
#include <utility>
#include <vector>

namespace vclat {

Json json_int(const Int& n) {
  if (n.fits_slong_p()) return static_cast<long long>(n.get_si());
  return to_string(n);
}

Json json_rat(const Rat& r) {
  if (is_integer(r)) return json_int(r.get_num());
  return to_string(r);
}

Json json_vec(const VecZ& v) {
  Json out = Json::array();
  for (long i = 0; i < v.size(); ++i) out.push_back(json_int(v(i)));
  return out;
}

Json json_vec(const VecQ& v) {
  Json out = Json::array();
  for (long i = 0; i < v.size(); ++i) out.push_back(json_rat(v(i)));
  return out;
}

Json json_mat(const MatZ& m) {
  Json out = Json::array();
  for (long i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (long j = 0; j < m.cols(); ++j) row.push_back(json_int(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json to_json(const BinaryForm& f) {
  return Json{{"a", json_int(f.a)}, {"b", json_int(f.b)}, {"c", json_int(f.c)}};
}

Json to_json(const MarkedGram& g) {
  Json labels = Json::array();
  for (const char* l : MarkedGram::labels()) labels.push_back(l);
  return Json{{"gram", json_mat(g.gram())}, {"labels", std::move(labels)}};
}

Json to_json(const Labelling& l) {
  return Json{{"d", json_int(l.d)}, {"x", json_int(l.x)}, {"y", json_int(l.y)}};
}

Json to_json(const FMCountReport& r) {
  Json glue = Json::object();
  for (const auto& [c, size] : r.glue_sizes) glue[to_string(c)] = json_int(size);
  return Json{{"d", json_int(r.d)},
              {"m", json_int(r.m)},
              {"partner_count", json_int(r.partner_count)},
              {"residue_case", r.residue_case},
              {"glue_sizes", std::move(glue)}};
}

Json to_json(const ComponentSpec& c) {
  return Json{{"d1", json_int(c.d1)},
              {"d2", json_int(c.d2)},
              {"tau", json_int(c.tau)},
              {"congruence_case", cong_case_name(c.cong)},
              {"gram", json_mat(c.gram)},
              {"ambient_vectors", json_mat(c.ambient.vectors)},
              {"disc", json_int(c.disc)},
              {"closed_form_disc", json_int(c.closed_form_disc)},
              {"norm2_free", c.norm2_free},
              {"saturated",
               Json{{"rank3", c.m_saturated},
                    {"labelling_d1", c.k_d1_saturated},
                    {"labelling_d2", c.k_d2_saturated}}}};
}

Json to_json(const TemplateFrame& t) {
  return Json{{"d1", json_int(t.d1)},
              {"d2", json_int(t.d2)},
              {"tau", json_int(t.tau)},
              {"gram", json_mat(t.gram)},
              {"isometric", t.isometric}};
}

Json to_json(const RationalityReport& r) {
  Json represented = Json::array();
  for (const auto& l : r.represented) represented.push_back(to_json(l));
  Json excluded = Json::array();
  for (const auto& [n, cert] : r.exclusion_certificates) {
    Json e{{"d", json_int(n)}, {"represented", false}};
    if (cert) {
      e["modular_obstruction"] = json_int(*cert);
    } else {
      e["modular_obstruction"] = nullptr;
    }
    excluded.push_back(std::move(e));
  }
  return Json{{"source", to_json(r.source)},
              {"marked_source", to_json(r.marked_source)},
              {"image", to_json(r.image)},
              {"image_disc", json_int(r.image_disc)},
              {"target_disc", json_int(r.target_disc)},
              {"target_witness", to_json(r.target_witness)},
              {"image_template", to_json(r.image_template)},
              {"represented_up_to", json_int(r.represent_max)},
              {"represented", std::move(represented)},
              {"excluded_list_clear", r.excluded_list_clear},
              {"excluded", std::move(excluded)}};
}

Json to_json(const BiggerDiscReport& r) {
  Json smaller = Json::array();
  for (const auto& d : r.smaller_admissible) smaller.push_back(json_int(d));
  Json clause2;
  if (r.clause2_witness) {
    clause2 = to_json(*r.clause2_witness);
  } else {
    clause2 = "inconclusive below bound";
  }
  Json out{{"d", json_int(r.d)},
           {"source", to_json(r.source)},
           {"marked_source", to_json(r.marked_source)},
           {"image", to_json(r.image)},
           {"labelling_form", to_json(r.form)},
           {"smaller_admissible", std::move(smaller)},
           {"clause1_holds", r.clause1_holds}};
  if (r.clause1_counterexample) {
    out["clause1_counterexample"] = json_int(*r.clause1_counterexample);
  }
  out["clause2"] = std::move(clause2);
  out["search_max"] = json_int(r.search_max);
  return out;
}

Json to_json(const SurveyTarget& t) {
  return Json{{"d1", json_int(t.d1)},
              {"d2", json_int(t.d2)},
              {"tau", json_int(t.tau)},
              {"gram", json_mat(t.gram)},
              {"isometric_to_image", t.isometric_to_image}};
}

Json to_json(const SurveyImage& i) {
  Json targets = Json::array();
  for (const auto& t : i.targets) targets.push_back(to_json(t));
  Json out{{"marked_source", to_json(i.marked_source)},
           {"image", to_json(i.image)},
           {"image_disc", json_int(i.image_disc)},
           {"targets", std::move(targets)},
           {"meets_disc6_locus", i.singular_disc6}};
  if (i.disc6_witness) out["disc6_witness"] = to_json(*i.disc6_witness);
  return out;
}

Json to_json(const SurveyRow& r) {
  Json out{{"tau", json_int(r.tau)},
           {"gram", json_mat(r.gram)},
           {"disc", json_int(r.disc)},
           {"disc_matches_closed_form", r.disc_matches_closed_form},
           {"norm2_free", r.norm2_free},
           {"saturated", r.saturated},
           {"in_disc8_locus", r.in_c8}};
  if (r.c8_witness) out["disc8_witness"] = to_json(*r.c8_witness);
  out["conditional"] = r.conditional;
  if (r.image) out["image"] = to_json(*r.image);
  return out;
}

Json to_json(const SweepRow& r) {
  Json targets = Json::array();
  for (const auto& t : r.exceptional_targets) targets.push_back(to_json(t));
  return Json{{"tau", json_int(r.tau)},
              {"component", to_json(r.comp)},
              {"marked", to_json(r.marked)},
              {"image", to_json(r.image)},
              {"invariant", r.invariant},
              {"exceptional_targets", std::move(targets)}};
}

Json to_json(const CheckRecord& c) {
  return Json{{"id", c.id},
              {"claim", c.claim},
              {"expected", c.expected},
              {"computed", c.computed},
              {"pass", c.pass}};
}

Json to_json(const VerifyReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  return Json{{"checks", std::move(checks)},
              {"overall", r.overall ? "pass" : "fail"},
              {"wall_ms", r.wall_ms}};
}

namespace {

std::string trimmed(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

MatZ from_rows(const std::vector<std::vector<Int>>& rows) {
  const long nr = static_cast<long>(rows.size());
  if (nr == 0) throw std::invalid_argument("empty matrix");
  const long nc = static_cast<long>(rows[0].size());
  for (long i = 0; i < nr; ++i) {
    if (static_cast<long>(rows[i].size()) != nc) {
      throw std::invalid_argument("row " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(nc));
    }
  }
  MatZ m(nr, nc);
  for (long i = 0; i < nr; ++i)
    for (long j = 0; j < nc; ++j) m(i, j) = rows[i][j];
  return m;
}

MatZ parse_json_matrix(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(std::string("invalid JSON matrix: ") + e.what());
  }
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("matrix JSON must be a nonempty array of arrays");
  }
  std::vector<std::vector<Int>> rows;
  for (size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) {
      throw std::invalid_argument("row " + std::to_string(i + 1) + " is not an array");
    }
    std::vector<Int> row;
    for (size_t k = 0; k < j[i].size(); ++k) {
      const Json& e = j[i][k];
      const std::string where =
          "(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")";
      if (e.is_number_integer()) {
        row.emplace_back(static_cast<long>(e.get<long long>()));
      } else if (e.is_string()) {
        try {
          row.emplace_back(Int(e.get<std::string>()));
        } catch (const std::invalid_argument&) {
          throw std::invalid_argument("entry " + where + " is not an integer: '" +
                                      e.get<std::string>() + "'");
        }
      } else {
        throw std::invalid_argument("entry " + where + " is not an integer: " + e.dump());
      }
    }
    rows.push_back(std::move(row));
  }
  return from_rows(rows);
}

MatZ parse_literal_matrix(const std::string& text) {
  std::vector<std::vector<Int>> rows;
  size_t pos = 0;
  size_t row_idx = 0;
  while (pos <= text.size()) {
    const size_t semi = text.find(';', pos);
    const std::string row_text =
        text.substr(pos, (semi == std::string::npos ? text.size() : semi) - pos);
    ++row_idx;
    std::vector<Int> row;
    size_t p = 0;
    size_t col_idx = 0;
    while (p <= row_text.size()) {
      const size_t comma = row_text.find(',', p);
      const std::string cell = trimmed(
          row_text.substr(p, (comma == std::string::npos ? row_text.size() : comma) - p));
      ++col_idx;
      const std::string where =
          "(" + std::to_string(row_idx) + "," + std::to_string(col_idx) + ")";
      if (cell.empty()) {
        throw std::invalid_argument("entry " + where + " is empty");
      }
      try {
        row.emplace_back(Int(cell));
      } catch (const std::invalid_argument&) {
        throw std::invalid_argument("entry " + where + " is not an integer: '" + cell + "'");
      }
      if (comma == std::string::npos) break;
      p = comma + 1;
    }
    rows.push_back(std::move(row));
    if (semi == std::string::npos) break;
    pos = semi + 1;
  }
  return from_rows(rows);
}

}  // namespace

MatZ parse_matrix(const std::string& text) {
  const std::string t = trimmed(text);
  if (t.empty()) throw std::invalid_argument("empty matrix");
  if (t.front() == '[') return parse_json_matrix(t);
  return parse_literal_matrix(t);
}

GramLattice parse_gram(const std::string& text) { return GramLattice(parse_matrix(text)); }

}  // namespace vclat
