#include "loopalg/io.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace loopalg {

namespace {

using GenName = std::function<std::string(Gen)>;

std::string format_terms(const TermMap& terms, const GenName& name) {
  if (terms.empty()) return "0";
  std::vector<std::pair<Word, Rational>> sorted(terms.begin(), terms.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return word_less(a.first, b.first); });
  std::string out;
  bool first = true;
  for (const auto& [w, c] : sorted) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (w.empty()) {
      out += to_string(mag);
      continue;
    }
    if (mag != 1) out += to_string(mag) + " * ";
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i) out += "*";
      out += name(w[i]);
    }
  }
  return out;
}

GenName loop_name(const LieAlgebraSpec& spec) {
  return [&spec](Gen g) {
    return spec.label(static_cast<int>(gen_label(g))).token() + "[-" + std::to_string(gen_major(g)) + "]";
  };
}

std::string sym_text(const LieAlgebraSpec& spec, const TermMap& t) { return format_terms(t, loop_name(spec)); }

Json rational_fields(Json obj, const Rational& c) {
  obj["num"] = c.get_num().get_str();
  obj["den"] = c.get_den().get_str();
  return obj;
}

Json report_row(const ComponentReport& r) {
  Json j;
  j["d"] = r.index.degree;
  j["w"] = r.index.weight;
  j["columns"] = r.columns;
  j["kernel_dim"] = r.kernel_dim;
  j["expected_dim"] = r.expected_dim;
  j["verdict"] = r.verdict;
  if (r.kernel_commutes) j["kernel_commutes"] = *r.kernel_commutes;
  if (r.kernel_in_subalgebra) j["kernel_in_subalgebra"] = *r.kernel_in_subalgebra;
  return j;
}

}  // namespace

std::string format_sym(const LieAlgebraSpec& spec, const SymPoly& p) { return sym_text(spec, p.terms()); }
std::string format_pbw(const LieAlgebraSpec& spec, const PBWPoly& p) { return sym_text(spec, p.terms()); }

std::string format_tensor(const LieAlgebraSpec& spec, const TensorPoly& p) {
  return format_terms(p.terms(), [&spec](Gen g) {
    return spec.label(static_cast<int>(gen_label(g))).token() + "^(" + std::to_string(gen_major(g)) + ")";
  });
}

std::string format_zf(const SymPoly& p) {
  return format_terms(p.terms(), [](Gen g) {
    return "F[" + std::to_string(gen_label(g) + 1) + "][-" + std::to_string(gen_major(g)) + "]";
  });
}

Json poly_to_json(const LieAlgebraSpec& spec, const TermMap& terms) {
  std::vector<std::pair<Word, Rational>> sorted(terms.begin(), terms.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return word_less(a.first, b.first); });
  Json out = Json::array();
  for (const auto& [w, c] : sorted) {
    Json mon = Json::array();
    for (Gen g : w) {
      const auto& l = spec.label(static_cast<int>(gen_label(g)));
      mon.push_back({l.row, l.cartan ? l.row : l.col, gen_major(g)});
    }
    Json term;
    term["mon"] = mon;
    out.push_back(rational_fields(std::move(term), c));
  }
  return out;
}

TermMap poly_from_json(const LieAlgebraSpec& spec, const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  TermMap out;
  for (const auto& term : j) {
    if (!term.is_object() || !term.contains("mon") || !term.contains("num") || !term.contains("den"))
      throw std::invalid_argument("polynomial term needs mon, num and den");
    Word w;
    for (const auto& f : term.at("mon")) {
      if (!f.is_array() || f.size() != 3) throw std::invalid_argument("monomial factor must be [i, j, m]");
      const int i = f[0].get<int>(), k = f[1].get<int>(), m = f[2].get<int>();
      const bool cartan = spec.kind() == AlgebraKind::sl && i == k;
      const int label = spec.find_label(BasisLabel{i, cartan ? i : k, cartan});
      if (label < 0) throw std::invalid_argument("unknown basis element in monomial");
      w.push_back(loop_gen(spec, label, m));
    }
    std::sort(w.begin(), w.end());
    const Rational c = parse_rational(term.at("num").get<std::string>() + "/" + term.at("den").get<std::string>());
    add_to(out, std::move(w), c);
  }
  return out;
}

Json talalaev_json(const LieAlgebraSpec& spec, const QFamily& q, const CommuteReport* commute) {
  Json out;
  out["rank"] = q.rank;
  out["z_order"] = q.z_order;
  Json qs = Json::object();
  for (const auto& [nk, p] : q.q) qs[std::to_string(nk.first) + "," + std::to_string(nk.second)] = poly_to_json(spec, p.terms());
  out["Q"] = qs;
  Json report = Json::array();
  if (commute) {
    for (const auto& e : commute->entries)
      report.push_back({{"n", e.n}, {"k", e.k}, {"m", e.m}, {"l", e.l}, {"zero", e.zero},
                        {"residual_terms", e.residual_terms}});
  }
  out["commute_report"] = report;
  if (commute) out["all_commute"] = commute->all_zero;
  return out;
}

Json symbol_json(const SymbolReport& report) {
  Json out;
  Json entries = Json::array();
  for (const auto& e : report.entries) entries.push_back({{"n", e.n}, {"k", e.k}, {"sign", e.sign}});
  out["entries"] = entries;
  Json signs = Json::object();
  for (const auto& [k, s] : report.sign_by_k) signs[std::to_string(k)] = s;
  out["sign_by_k"] = signs;
  out["matches"] = report.matches;
  return out;
}

Json centralizer_json(const LieAlgebraSpec& spec, const CentralizerRun& run, bool with_bases) {
  Json out;
  out["algebra"] = spec.name();
  out["target"] = to_string(run.target);
  Json rows = Json::array();
  for (const auto& r : run.rows) {
    Json row = report_row(r);
    if (with_bases) {
      Json basis = Json::array();
      for (const auto& p : r.classical_kernel) basis.push_back(poly_to_json(spec, p.terms()));
      for (const auto& p : r.quantum_kernel) basis.push_back(poly_to_json(spec, p.terms()));
      row["kernel_basis"] = basis;
    }
    rows.push_back(row);
  }
  for (const auto& r : run.invariant_rows) {
    Json row;
    row["d"] = r.index.degree;
    row["w"] = r.index.weight;
    row["kernel_dim"] = r.dimension;
    row["expected_dim"] = r.expected_dim;
    row["verdict"] = r.verdict;
    if (with_bases) {
      Json basis = Json::array();
      for (const auto& p : r.basis) basis.push_back(poly_to_json(spec, p.terms()));
      row["kernel_basis"] = basis;
    }
    rows.push_back(row);
  }
  out["components"] = rows;
  out["pass"] = run.pass;
  return out;
}

std::string centralizer_table(const CentralizerRun& run) {
  std::ostringstream os;
  char line[128];
  std::snprintf(line, sizeof line, "%4s %4s %10s %12s %8s\n", "d", "w", "kernel_dim", "expected_dim", "verdict");
  os << line;
  auto emit = [&](const ComponentIndex& i, std::size_t k, std::size_t e, bool ok) {
    std::snprintf(line, sizeof line, "%4d %4d %10zu %12zu %8s\n", i.degree, i.weight, k, e, ok ? "pass" : "FAIL");
    os << line;
  };
  for (const auto& r : run.rows) emit(r.index, r.kernel_dim, r.expected_dim, r.pass());
  for (const auto& r : run.invariant_rows) emit(r.index, r.dimension, r.expected_dim, r.verdict);
  os << (run.pass ? "overall: pass\n" : "overall: FAIL\n");
  return os.str();
}

std::string centralizer_csv(const CentralizerRun& run) {
  std::ostringstream os;
  os << "d,w,kernel_dim,expected_dim,verdict\n";
  for (const auto& r : run.rows)
    os << r.index.degree << ',' << r.index.weight << ',' << r.kernel_dim << ',' << r.expected_dim << ','
       << (r.pass() ? "pass" : "fail") << '\n';
  for (const auto& r : run.invariant_rows)
    os << r.index.degree << ',' << r.index.weight << ',' << r.dimension << ',' << r.expected_dim << ','
       << (r.verdict ? "pass" : "fail") << '\n';
  return os.str();
}

Json section3_json(const Section3Report& r) {
  Json out;
  out["phi_s_identity"] = r.phi_s_identity;
  out["phi1_at_h"] = r.phi1_at_h;
  out["h_norm"] = to_string(r.h_norm);
  out["pi_s1bar"] = r.pi_s1bar;
  out["pi_dt_commute"] = r.pi_dt_commute;
  out["pi_dt_checked"] = r.pi_dt_checked;
  Json grades = Json::array();
  for (const auto& g : r.pi_grades)
    grades.push_back({{"grade", g.grade}, {"products", g.products}, {"image_rank", g.image_rank},
                      {"target_dim", g.target_dim}, {"verdict", g.verdict}});
  out["pi_grades"] = grades;
  Json span = Json::array();
  for (const auto& s : r.pi_span)
    span.push_back({{"d", s.index.degree}, {"w", s.index.weight}, {"span_dim", s.span_dim},
                    {"target_dim", s.target_dim}, {"verdict", s.verdict}});
  out["pi_span"] = span;
  Json psi = Json::array();
  for (const auto& p : r.psi) psi.push_back({{"k", p.k}, {"z_power", p.z_power}, {"verdict", p.verdict}});
  out["psi"] = psi;
  out["pass"] = r.pass;
  return out;
}

Json matrix_json(const RatMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    out.push_back(row);
  }
  return out;
}

std::string spectrum_csv(const std::string& name, const SpectrumReport& s) {
  std::ostringstream os;
  os << "# " << name << '\n';
  os << "eigenvalue_num,eigenvalue_den,eigenvalue_float,multiplicity\n";
  char buf[64];
  for (const auto& e : s.rational) {
    std::snprintf(buf, sizeof buf, "%.12g", e.value.get_d());
    os << e.value.get_num().get_str() << ',' << e.value.get_den().get_str() << ',' << buf << ',' << e.multiplicity
       << '\n';
  }
  for (const auto& e : s.approximate) {
    std::snprintf(buf, sizeof buf, "%.12g%+.12gi", e.real, e.imag);
    os << ",," << buf << ',' << e.multiplicity << '\n';
  }
  return os.str();
}

Json spectrum_json(const SpectrumReport& s) {
  Json out;
  Json cp = Json::array();
  for (const auto& c : s.charpoly.coeffs()) cp.push_back(to_string(c));
  out["charpoly"] = cp;
  Json rat = Json::array();
  for (const auto& e : s.rational) rat.push_back({{"eigenvalue", to_string(e.value)}, {"multiplicity", e.multiplicity}});
  out["rational"] = rat;
  Json approx = Json::array();
  for (const auto& e : s.approximate)
    approx.push_back({{"real", e.real}, {"imag", e.imag}, {"multiplicity", e.multiplicity}});
  out["approximate"] = approx;
  out["diagonalizable"] = s.diagonalizable;
  return out;
}

}  // namespace loopalg
