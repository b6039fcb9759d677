#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "ranklab/rank.hpp"
#include "ranklab/sps.hpp"

namespace ranklab {

inline constexpr double kZeroCR = 1e-9;

// log_{1/sqrt q} |CR| = -2 ln|CR| / ln q; nullopt for CR = 0.
std::optional<double> log_cr(std::complex<double> cr, int q);

// Columns irrep_id, degree, u_rank, tensor_rank, cr_re, cr_im, cr_abs, log_cr for one element.
void write_crtable_csv(std::ostream& os, const std::vector<RankRecord>& recs, size_t element, int q);
// Scatter of log_cr against tensor rank; self-contained.
void write_crtable_svg(std::ostream& os, const std::vector<RankRecord>& recs, size_t element, int q,
                       const std::string& title);

struct Stratum {
  int tensor_rank = 0;
  int count = 0;
  int zeros = 0;
  double max_abs = 0, min_abs = 0;
  double mean_log_abs = 0;  // natural log over nonzero CRs
};
struct CrSummary {
  std::vector<Stratum> strata;
  bool mean_log_strictly_decreasing = true;
};
CrSummary summarize_cr(const std::vector<RankRecord>& recs, size_t element);
void write_cr_summary(std::ostream& os, const CrSummary& s, const std::string& title);

void write_table_csv(std::ostream& os, const CharacterTable& t);
void write_ranks_csv(std::ostream& os, const std::vector<RankRecord>& recs);
void write_eta_csv(std::ostream& os, const EtaTable& t, const CharacterTable& tg, const CharacterTable& tp);

struct CrArtifacts {
  std::filesystem::path csv, svg, summary;
  std::vector<RankRecord> recs;
  CrSummary stats;
};
// crtable_<spec>_<element>.{csv,svg,txt} in out_dir.
CrArtifacts write_crtable(const CharacterTable& t, const std::string& element, const std::filesystem::path& out_dir);

// Writes text to a file, creating parent directories.
void write_file(const std::filesystem::path& file, const std::string& text);
std::string fixed(double x, int digits = 6);

}  // namespace ranklab
