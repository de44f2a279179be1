#include "ybe/report.hpp"

namespace ybe {

using nlohmann::json;

std::vector<int> one_based(const std::vector<int>& word) {
  std::vector<int> out(word);
  for (int& x : out) ++x;
  return out;
}

json to_json(const SolutionProfile& p) {
  json frozen = json::array();
  for (const auto& w : p.frozen) frozen.push_back(one_based(w));
  json j{{"n", p.n},
         {"class", p.class_m},
         {"diagonal", p.diagonal.one_line()},
         {"frozen_words", std::move(frozen)},
         {"condition_C", p.condition_c},
         {"square_free", p.square_free},
         {"retraction_levels", p.retraction_sizes},
         {"iyb_order", p.iyb_order}};
  if (p.multipermutation_level) {
    j["multipermutation_level"] = *p.multipermutation_level;
  } else {
    j["multipermutation_level"] = "irretractable";
  }
  return j;
}

json germ_to_json(const Germ& g) {
  json rows = json::array();
  for (const auto& s : g.simples()) {
    rows.push_back({{"residue", s.residue},
                    {"phi", s.phi.one_line()},
                    {"witness", one_based(s.witness)}});
  }
  return rows;
}

json to_json(const BraceLawReport& r) {
  json j{{"passed", r.passed},
         {"triples_checked", r.triples_checked},
         {"exhaustive", r.exhaustive},
         {"seed", r.seed}};
  j["counterexample"] = r.counterexample ? json(*r.counterexample) : json(nullptr);
  return j;
}

json to_json(const DimensionReport& r) {
  json j{{"n", r.n},
         {"class", r.class_m},
         {"iyb_order", r.iyb_order},
         {"spanning_labels", r.spanning_labels},
         {"basis_indices", r.basis_indices},
         {"basis_labels", r.basis_labels},
         {"dimension", r.dimension},
         {"bound", r.bound},
         {"simples_only_rank", r.simples_only_rank},
         {"simples_span", r.simples_span}};
  j["ball_rank"] = r.ball_rank ? json(*r.ball_rank) : json(nullptr);
  return j;
}

DimensionReport dimension_report_from_json(const json& j) {
  DimensionReport r;
  r.n = j.at("n").get<std::size_t>();
  r.class_m = j.at("class").get<int>();
  r.iyb_order = j.at("iyb_order").get<std::size_t>();
  r.spanning_labels = j.at("spanning_labels").get<std::vector<std::string>>();
  r.basis_indices = j.at("basis_indices").get<std::vector<std::size_t>>();
  r.basis_labels = j.at("basis_labels").get<std::vector<std::string>>();
  r.dimension = j.at("dimension").get<std::size_t>();
  r.bound = j.at("bound").get<std::size_t>();
  r.simples_only_rank = j.at("simples_only_rank").get<std::size_t>();
  r.simples_span = j.at("simples_span").get<bool>();
  if (!j.at("ball_rank").is_null()) r.ball_rank = j.at("ball_rank").get<std::size_t>();
  return r;
}

json to_json(const oracle::InjectivityReport& r) {
  json j{{"radius", r.radius}, {"states", r.states}, {"passed", r.passed}};
  j["witness"] = r.witness ? json(*r.witness) : json(nullptr);
  return j;
}

json to_json(const oracle::CountsReport& r) {
  json j{{"class", r.class_m},
         {"germ_expected", r.germ_expected},
         {"germ_count", r.germ_count},
         {"div_delta_expected", r.div_delta_expected},
         {"kernel_reps", r.kernel_reps},
         {"kernel_cosets", r.kernel_cosets},
         {"iyb_order", r.iyb_order},
         {"passed", r.passed}};
  j["div_delta_count"] = r.div_delta_count ? json(*r.div_delta_count) : json(nullptr);
  return j;
}

json to_json(const oracle::SpanReport& r) {
  json j{{"ball_sizes", r.ball_sizes}, {"ranks", r.ranks}};
  j["stabilized_rank"] = r.stabilized_rank ? json(*r.stabilized_rank) : json(nullptr);
  return j;
}

json rep_to_json(const DimensionResult& r) {
  json mats = json::array();
  for (const auto& lm : r.spanning) {
    mats.push_back({{"label", lm.label},
                    {"word", one_based(lm.word)},
                    {"vector", lm.element.vec},
                    {"rows", lm.matrix.matrix().rows()},
                    {"entries", lm.matrix.matrix().data()}});
  }
  return {{"n", r.report.n},
          {"class", r.report.class_m},
          {"iyb_order", r.report.iyb_order},
          {"spanning", std::move(mats)},
          {"basis_indices", r.report.basis_indices},
          {"dimension", r.report.dimension},
          {"bound", r.report.bound}};
}

}  // namespace ybe
