#include "ranklab/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "ranklab/cache.hpp"
#include "ranklab/error.hpp"

namespace ranklab {

std::string fixed(double x, int digits) {
  if (std::abs(x) < 0.5 * std::pow(10.0, -digits)) x = 0;  // no "-0.000000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  return buf;
}

std::optional<double> log_cr(std::complex<double> cr, int q) {
  const double a = std::abs(cr);
  if (a < kZeroCR) return std::nullopt;
  return -2.0 * std::log(a) / std::log(static_cast<double>(q));
}

void write_crtable_csv(std::ostream& os, const std::vector<RankRecord>& recs, size_t element, int q) {
  os << "irrep_id,degree,u_rank,tensor_rank,cr_re,cr_im,cr_abs,log_cr\r\n";
  for (const auto& r : recs) {
    const auto cr = r.cr.at(element).second;
    auto l = log_cr(cr, q);
    os << r.irrep << "," << r.degree << "," << r.u.rank << "," << r.tensor_rank << "," << fixed(cr.real()) << ","
       << fixed(cr.imag()) << "," << fixed(std::abs(cr)) << "," << (l ? fixed(*l) : std::string("-inf")) << "\r\n";
  }
}

void write_crtable_svg(std::ostream& os, const std::vector<RankRecord>& recs, size_t element, int q,
                       const std::string& title) {
  const double W = 640, H = 420, L = 70, R = 20, T = 40, B = 60;
  int max_rank = 0;
  double ymin = 0, ymax = 1;
  for (const auto& r : recs) {
    max_rank = std::max(max_rank, r.tensor_rank);
    if (auto l = log_cr(r.cr.at(element).second, q)) {
      ymin = std::min(ymin, *l);
      ymax = std::max(ymax, *l);
    }
  }
  ymax += 0.5;
  ymin -= 0.5;
  auto X = [&](double x) { return L + (W - L - R) * (max_rank ? x / max_rank : 0.5); };
  auto Y = [&](double y) { return T + (H - T - B) * (ymax - y) / (ymax - ymin); };
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << " " << H << "\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"15\">"
     << title << "</text>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B
     << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  for (int k = 0; k <= max_rank; ++k)
    os << "<text x=\"" << fixed(X(k), 2) << "\" y=\"" << H - B + 18
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">" << k << "</text>\n";
  for (int yt = static_cast<int>(std::ceil(ymin)); yt <= static_cast<int>(std::floor(ymax)); ++yt)
    os << "<text x=\"" << L - 8 << "\" y=\"" << fixed(Y(yt) + 4, 2)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">" << yt << "</text>\n";
  os << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 16
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">tensor rank</text>\n";
  os << "<text x=\"18\" y=\"" << (T + H - B) / 2 << "\" transform=\"rotate(-90 18 " << (T + H - B) / 2
     << ")\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">log_{1/sqrt q} |CR|</text>\n";
  for (const auto& r : recs) {
    auto l = log_cr(r.cr.at(element).second, q);
    if (!l) continue;
    os << "<circle cx=\"" << fixed(X(r.tensor_rank), 2) << "\" cy=\"" << fixed(Y(*l), 2)
       << "\" r=\"4\" fill=\"steelblue\" fill-opacity=\"0.7\"><title>irrep " << r.irrep << ", degree " << r.degree
       << "</title></circle>\n";
  }
  os << "</svg>\n";
}

CrSummary summarize_cr(const std::vector<RankRecord>& recs, size_t element) {
  std::map<int, Stratum> by;
  std::map<int, int> nonzero;
  for (const auto& r : recs) {
    auto& s = by[r.tensor_rank];
    const double a = std::abs(r.cr.at(element).second);
    if (s.count == 0) s.max_abs = s.min_abs = a;
    s.tensor_rank = r.tensor_rank;
    ++s.count;
    s.max_abs = std::max(s.max_abs, a);
    s.min_abs = std::min(s.min_abs, a);
    if (a < kZeroCR) {
      ++s.zeros;
    } else {
      s.mean_log_abs += std::log(a);
      ++nonzero[r.tensor_rank];
    }
  }
  CrSummary out;
  for (auto& [k, s] : by) {
    if (nonzero[k]) s.mean_log_abs /= nonzero[k];
    out.strata.push_back(s);
  }
  for (size_t i = 1; i < out.strata.size(); ++i)
    if (!(out.strata[i].mean_log_abs < out.strata[i - 1].mean_log_abs)) out.mean_log_strictly_decreasing = false;
  return out;
}

void write_cr_summary(std::ostream& os, const CrSummary& s, const std::string& title) {
  os << title << "\n";
  os << "tensor_rank count zeros max_abs min_abs mean_ln_abs\n";
  for (const auto& st : s.strata)
    os << st.tensor_rank << " " << st.count << " " << st.zeros << " " << fixed(st.max_abs) << " " << fixed(st.min_abs)
       << " " << fixed(st.mean_log_abs) << "\n";
  os << "finding: mean ln|CR| strictly decreasing in tensor rank: " << (s.mean_log_strictly_decreasing ? "yes" : "no")
     << "\n";
}

void write_table_csv(std::ostream& os, const CharacterTable& t) {
  const auto& G = *t.group;
  os << "irrep_id,degree";
  for (int c = 0; c < G.num_classes(); ++c) os << ",class_" << c;
  os << "\r\n";
  os << "class_size,";
  for (int c = 0; c < G.num_classes(); ++c) os << "," << G.class_size(c);
  os << "\r\n";
  for (int i = 0; i < t.size(); ++i) {
    os << i << "," << t.degrees[i];
    for (const auto& v : t.irr[i].values) {
      auto z = v.to_complex();
      os << "," << fixed(z.real(), 4) << (z.imag() < 0 && std::abs(z.imag()) >= 5e-5 ? "" : "+") << fixed(z.imag(), 4)
         << "i";
    }
    os << "\r\n";
  }
}

void write_ranks_csv(std::ostream& os, const std::vector<RankRecord>& recs) {
  os << "irrep_id,degree,u_rank,low,type,tensor_rank,tensor_rank_intrinsic\r\n";
  for (const auto& r : recs) {
    os << r.irrep << "," << r.degree << "," << r.u.rank << "," << (r.u.low ? 1 : 0) << ",";
    if (r.u.type) os << tower_name(r.u.type->tower);
    os << "," << r.tensor_rank << ",";
    if (r.tensor_rank_intrinsic >= 0) os << r.tensor_rank_intrinsic;
    os << "\r\n";
  }
}

void write_eta_csv(std::ostream& os, const EtaTable& t, const CharacterTable& tg, const CharacterTable& tp) {
  os << "tau,tau_degree,eta,eta_degree,multiplicity,eta_rank,omega\r\n";
  for (const auto& r : t.rows) {
    os << r.tau << "," << tp.degrees[r.tau] << ",";
    if (r.eta >= 0) os << r.eta << "," << tg.degrees[r.eta] << "," << r.multiplicity << "," << r.eta_rank;
    else os << ",,,";
    os << ",\"";
    bool first = true;
    for (size_t s = 0; s < r.omega.size(); ++s)
      if (r.omega[s]) {
        os << (first ? "" : " ") << s << ":" << r.omega[s];
        first = false;
      }
    os << "\"\r\n";
  }
}

CrArtifacts write_crtable(const CharacterTable& t, const std::string& element, const std::filesystem::path& out_dir) {
  CrArtifacts a;
  a.recs = char_ratio_table(t, {element});
  a.stats = summarize_cr(a.recs, 0);
  const int q = t.group->p();
  const std::string base = "crtable_" + spec_slug(t.group->spec.str()) + "_" + spec_slug(element);
  const std::string title = t.group->spec.str() + " at " + element;
  std::ostringstream csv, svg, sum;
  write_crtable_csv(csv, a.recs, 0, q);
  write_crtable_svg(svg, a.recs, 0, q, title);
  write_cr_summary(sum, a.stats, title);
  a.csv = out_dir / (base + ".csv");
  a.svg = out_dir / (base + ".svg");
  a.summary = out_dir / (base + ".txt");
  write_file(a.csv, csv.str());
  write_file(a.svg, svg.str());
  write_file(a.summary, sum.str());
  return a;
}

void write_file(const std::filesystem::path& file, const std::string& text) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream os(file, std::ios::binary);
  if (!os) throw Error("cli.WriteFailed", "cannot write " + file.string());
  os << text;
}

}  // namespace ranklab
