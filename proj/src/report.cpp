#include "softgraph/report.hpp"

#include <json.hpp>

#include "softgraph/canonical.hpp"

namespace softgraph {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

ordered_json eigenvalue_json(const Eigenvalue& ev) {
  ordered_json j;
  switch (ev.kind) {
    case EvKind::Integer:
      j["kind"] = "integer";
      j["value"] = ev.integer.get_str();
      break;
    case EvKind::Quadratic:
      j["kind"] = "quadratic";
      j["p"] = ev.quad.p.get_str();
      j["q"] = ev.quad.q.get_str();
      j["d"] = ev.quad.d;
      j["r"] = ev.quad.r.get_str();
      break;
    case EvKind::Numeric:
      j["kind"] = "numeric";
      j["factor"] = poly_str(ev.factor);
      break;
  }
  j["approx"] = ev.approx;
  j["multiplicity"] = ev.multiplicity;
  return j;
}

ordered_json rat_vec_json(const std::vector<Rat>& v) {
  ordered_json a = ordered_json::array();
  for (const Rat& x : v) a.push_back(rat_str(x));
  return a;
}

ordered_json quad_vec_json(const std::vector<Quad>& v) {
  ordered_json a = ordered_json::array();
  for (const Quad& x : v) a.push_back(quad_str(x));
  return a;
}

ordered_json num_vec_json(const std::vector<double>& v) {
  ordered_json a = ordered_json::array();
  for (double x : v) a.push_back(x);
  return a;
}

ordered_json vec_any_json(const VecAny& v) {
  if (!v.r.empty()) return rat_vec_json(v.r);
  if (!v.q.empty()) return quad_vec_json(v.q);
  return num_vec_json(v.n);
}

ordered_json graph_json(const Graph& g) {
  ordered_json j;
  j["label"] = g.label;
  j["n"] = g.n;
  j["m"] = g.edge_count();
  ordered_json edges = ordered_json::array();
  for (size_t k = 0; k < g.edges.size(); ++k) {
    ordered_json e = ordered_json::array();
    e.push_back(g.edges[k].first);
    e.push_back(g.edges[k].second);
    if (g.weights[k] != 1) e.push_back(rat_str(g.weights[k]));
    edges.push_back(e);
  }
  j["edges"] = edges;
  return j;
}

ordered_json mat_json(const Mat<Rat>& m) {
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.rows; ++i) {
    ordered_json row = ordered_json::array();
    for (int j = 0; j < m.cols; ++j) {
      const Rat& x = m.at(i, j);
      ordered_json cell = ordered_json::array();
      cell.push_back(Int(x.get_num()).get_str());
      cell.push_back(Int(x.get_den()).get_str());
      row.push_back(cell);
    }
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string spectrum_report_json(const Graph& g) {
  ordered_json j;
  j["graph_id"] = g.label.empty() ? "graph" : g.label;
  j["graph"] = graph_json(g);
  auto evs = classify_spectrum(g);
  ordered_json evj = ordered_json::array();
  ordered_json vecj = ordered_json::array();
  ordered_json soft = ordered_json::array();
  ordered_json residuals = ordered_json::array();
  for (const auto& ev : evs) {
    evj.push_back(eigenvalue_json(ev));
    ordered_json per;
    per["eigenvalue"] = ev.str();
    switch (ev.kind) {
      case EvKind::Integer: {
        ordered_json basis = ordered_json::array();
        for (const auto& b : rational_eigenspace(g, ev.integer))
          basis.push_back(rat_vec_json(b));
        per["basis"] = basis;
        residuals.push_back("0");
        break;
      }
      case EvKind::Quadratic: {
        ordered_json basis = ordered_json::array();
        for (const auto& b : quadratic_eigenspace(g, ev.quad))
          basis.push_back(quad_vec_json(b));
        per["basis"] = basis;
        residuals.push_back("0");
        break;
      }
      case EvKind::Numeric: {
        ordered_json basis = ordered_json::array();
        double worst = 0;
        for (const auto& b : numeric_eigenspace(g, ev.approx)) {
          basis.push_back(num_vec_json(b));
          worst = std::max(worst, numeric_eigen_residual(g, ev.approx, b));
        }
        per["basis"] = basis;
        residuals.push_back(worst);
        break;
      }
    }
    vecj.push_back(per);
    SoftNodeReport rep = soft_nodes(g, ev);
    ordered_json sj;
    sj["eigenvalue"] = ev.str();
    sj["vertices"] = rep.soft_vertices;
    soft.push_back(sj);
  }
  j["eigenvalues"] = evj;
  j["eigenvectors"] = vecj;
  j["soft_nodes"] = soft;
  j["residuals"] = residuals;
  return j.dump(2);
}

std::string soft_report_json(const Graph& g, const SoftNodeReport& rep) {
  ordered_json j;
  j["graph_id"] = g.label.empty() ? "graph" : g.label;
  j["eigenvalue"] = eigenvalue_json(rep.eigenvalue);
  j["soft_vertices"] = rep.soft_vertices;
  ordered_json ws = ordered_json::array();
  for (size_t i = 0; i < rep.witnesses.size(); ++i) {
    ordered_json w;
    w["vertex"] = rep.soft_vertices[i];
    w["vector"] = vec_any_json(rep.witnesses[i].vec);
    w["residual"] = rep.witnesses[i].exact ? ordered_json("0")
                                           : ordered_json(rep.witnesses[i].residual);
    ws.push_back(w);
  }
  j["witnesses"] = ws;
  return j.dump(2);
}

std::string records_json(const std::vector<RatRecord>& records) {
  ordered_json arr = ordered_json::array();
  for (const auto& rec : records) {
    ordered_json j;
    j["kind"] = kind_name(rec.kind);
    j["params"] = rec.params;
    j["input"] = graph_json(rec.input);
    j["input_lambda"] = rat_str(rec.in_pair.lambda);
    j["input_vector"] = rat_vec_json(rec.in_pair.x);
    j["output"] = graph_json(rec.output);
    j["output_lambda"] = rat_str(rec.out_pair.lambda);
    j["output_vector"] = rat_vec_json(rec.out_pair.x);
    j["verified"] = rec.verified;
    j["flags"] = rec.flags;
    arr.push_back(j);
  }
  return arr.dump(2);
}

std::string delta_analysis_json(const DeltaAnalysis& an) {
  ordered_json j;
  j["lambda"] = rat_str(an.lambda);
  j["sub_vertices"] = an.split.sub;
  j["p"] = an.split.p;
  j["p_prime"] = an.split.p_prime;
  j["g_order"] = an.split.g_order;
  j["rest_order"] = an.split.rest_order;
  j["a"] = mat_json(an.split.a);
  j["b"] = mat_json(an.split.b);
  j["c"] = mat_json(an.split.c);
  j["delta"] = mat_json(an.delta);
  j["lambda_in_l_prime"] = an.lambda_in_l_prime;
  j["link_structure"] = an.link_structure;
  j["case"] = case_name(an.overall());
  if (an.shared_found) {
    j["lambda_prime"] = an.lambda_prime.str();
    j["shared_x_prime"] = quad_vec_json(an.shared_x_prime);
    j["shared_exact"] = an.shared_exact;
  }
  ordered_json pv = ordered_json::array();
  for (const auto& r : an.per_vector) {
    ordered_json v;
    v["x"] = rat_vec_json(r.x);
    v["case"] = case_name(r.label);
    v["boundary_zero"] = r.boundary_zero;
    v["extension_exists"] = r.extension_exists;
    if (r.extension_exists) {
      v["extension"] = rat_vec_json(r.extension);
      v["gpg1_boundary"] = rat_vec_json(r.gpg1_boundary);
    }
    v["notes"] = r.notes;
    pv.push_back(v);
  }
  j["per_vector"] = pv;
  j["dichotomy"] = an.dichotomy_report;
  j["notes"] = an.notes;
  return j.dump(2);
}

std::string table_report_json(const std::vector<TableRow>& rows) {
  ordered_json arr = ordered_json::array();
  for (const auto& row : rows) {
    ordered_json j;
    j["table"] = row.source_table;
    j["row"] = row.row_number;
    j["lambda"] = row.is_quad ? ordered_json(Eigenvalue::of_quad(row.quad_lambda).str())
                              : ordered_json(row.lambda);
    j["catalog_id"] = row.catalog_id;
    j["vector"] = row.vector_text;
    j["note"] = row.note;
    j["status"] = row_status_name(row.status);
    if (!row.diagnosis.empty()) j["diagnosis"] = row.diagnosis;
    arr.push_back(j);
  }
  TableSummary s = summarize(rows);
  ordered_json top;
  top["total"] = s.total;
  top["exact_pass"] = s.exact_pass;
  top["pass_up_to_scaling"] = s.pass_scaled;
  top["fail"] = s.fail;
  top["unparseable"] = s.unparseable;
  top["unknown_id"] = s.unknown_id;
  top["rows"] = arr;
  return top.dump(2);
}

std::string emit_landscape_json(const Family& fam) {
  ordered_json j;
  j["lambda"] = fam.lambda.get_str();
  j["n_max"] = fam.n_max;
  ordered_json entries = ordered_json::array();
  for (const auto& e : fam.entries) {
    ordered_json ej;
    ej["catalog"] = e.catalog_id;
    ej["canonical"] = canonical_form(e.graph);
    ej["graph"] = graph_json(e.graph);
    ej["soft_vertices"] = e.soft_vertices;
    ordered_json ws = ordered_json::array();
    for (const auto& w : e.witnesses) ws.push_back(rat_vec_json(w));
    ej["witnesses"] = ws;
    ej["minimal"] = e.is_minimal;
    entries.push_back(ej);
  }
  j["entries"] = entries;
  ordered_json edges = ordered_json::array();
  for (const auto& e : fam.edges) {
    ordered_json ej;
    ej["from"] = e.from;
    ej["to"] = e.to;
    ej["kind"] = kind_name(e.kind);
    ej["params"] = e.params;
    if (e.lambda_shift) ej["lambda_shift"] = e.lambda_shift;
    edges.push_back(ej);
  }
  j["edges"] = edges;
  return j.dump(2);
}

}  // namespace softgraph
