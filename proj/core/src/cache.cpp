#include "ranklab/cache.hpp"

#include <cctype>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "ranklab/error.hpp"

namespace ranklab {

void save_table(const CharacterTable& t, std::ostream& os) {
  const auto& G = *t.group;
  const int e = G.exponent();
  os << "ranklab-table " << kCacheSchema << "\n";
  os << "spec " << G.spec.str() << "\n";
  os << "order " << G.order() << "\n";
  os << "exponent " << e << "\n";
  os << "ell " << t.ell << "\n";
  os << "classes " << G.num_classes() << "\n";
  for (int c = 0; c < G.num_classes(); ++c) {
    FqMatrix m = G.element(G.class_rep(c));
    for (int x : m.a) os << x << " ";
    os << G.class_size(c) << " " << G.class_order(c);
    for (int x : G.power_row(c)) os << " " << x;
    os << "\n";
  }
  os << "irreps " << t.size() << "\n";
  for (int i = 0; i < t.size(); ++i) {
    os << t.degrees[i];
    for (const auto& v : t.irr[i].values) {
      const CycInt w = v.change_order(e);
      for (long long x : w.coeffs()) os << " " << x;
    }
    os << "\n";
  }
}

void save_table(const CharacterTable& t, const std::filesystem::path& file) {
  std::filesystem::create_directories(file.parent_path());
  auto tmp = file;
  tmp += ".tmp";
  {
    std::ofstream os(tmp);
    if (!os) throw Error("cli.CacheWrite", "cannot write " + tmp.string());
    save_table(t, os);
  }
  std::filesystem::rename(tmp, file);
}

std::optional<CharacterTable> load_table(const GroupPtr& g, std::istream& is) {
  const auto& G = *g;
  auto expect = [&](const std::string& key) {
    std::string k;
    return static_cast<bool>(is >> k) && k == key;
  };
  int schema = 0;
  if (!expect("ranklab-table") || !(is >> schema) || schema != kCacheSchema) return std::nullopt;
  std::string spec;
  if (!expect("spec") || !(is >> spec) || spec != G.spec.str()) return std::nullopt;
  size_t order = 0;
  int e = 0, nc = 0;
  CharacterTable t;
  if (!expect("order") || !(is >> order) || order != G.order()) return std::nullopt;
  if (!expect("exponent") || !(is >> e) || e != G.exponent()) return std::nullopt;
  if (!expect("ell") || !(is >> t.ell)) return std::nullopt;
  if (!expect("classes") || !(is >> nc) || nc != G.num_classes()) return std::nullopt;
  const int nn = G.n() * G.n();
  for (int c = 0; c < nc; ++c) {
    FqMatrix m = G.element(G.class_rep(c));
    for (int k = 0; k < nn; ++k) {
      int x;
      if (!(is >> x) || x != m.a[k]) return std::nullopt;
    }
    size_t size = 0;
    int ord = 0;
    if (!(is >> size >> ord) || size != G.class_size(c) || ord != G.class_order(c)) return std::nullopt;
    for (int want : G.power_row(c)) {
      int x;
      if (!(is >> x) || x != want) return std::nullopt;
    }
  }
  int ni = 0;
  if (!expect("irreps") || !(is >> ni) || ni != nc) return std::nullopt;
  t.group = g;
  for (int i = 0; i < ni; ++i) {
    long long d;
    if (!(is >> d)) return std::nullopt;
    std::vector<CycInt> vals;
    for (int c = 0; c < nc; ++c) {
      CycInt v(e);
      for (int j = 0; j < e; ++j)
        if (!(is >> v[j])) return std::nullopt;
      vals.push_back(v);
    }
    t.degrees.push_back(d);
    t.irr.emplace_back(g, std::move(vals));
  }
  try {
    certify_table(t);
  } catch (const Error&) {
    return std::nullopt;
  }
  return t;
}

std::optional<CharacterTable> load_table(const GroupPtr& g, const std::filesystem::path& file) {
  std::ifstream is(file);
  if (!is) return std::nullopt;
  return load_table(g, is);
}

std::string spec_slug(const std::string& spec) {
  std::string s;
  for (char c : spec) s += (std::isalnum(static_cast<unsigned char>(c)) || c == '-') ? c : '_';
  return s;
}

std::filesystem::path resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("RANKLAB_CACHE"); env && *env) return env;
  return "cache";
}

GroupPtr TableStore::group(const std::string& spec) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = groups_.find(spec);
  if (it != groups_.end()) return it->second;
  auto g = make_group(GroupSpec::parse(spec));
  groups_[spec] = g;
  return g;
}

const CharacterTable& TableStore::table(const std::string& spec) {
  auto g = group(spec);
  std::lock_guard<std::mutex> lock(mu_);
  auto it = tables_.find(spec);
  if (it != tables_.end()) return *it->second;
  std::optional<CharacterTable> t;
  std::filesystem::path file;
  if (dir_) {
    file = *dir_ / (spec_slug(g->spec.str()) + ".table");
    t = load_table(g, file);
  }
  from_disk_[spec] = t.has_value();
  if (!t) {
    t = char_table(g, DixonOptions{seed_});
    if (dir_) save_table(*t, file);
  }
  auto& slot = tables_[spec];
  slot = std::make_unique<CharacterTable>(std::move(*t));
  return *slot;
}

const CharacterTable& TableStore::put(const std::string& spec, CharacterTable t) {
  std::lock_guard<std::mutex> lock(mu_);
  // an existing entry may already be referenced; keep it
  if (auto it = tables_.find(spec); it != tables_.end()) return *it->second;
  groups_.emplace(spec, t.group);
  if (dir_) save_table(t, *dir_ / (spec_slug(t.group->spec.str()) + ".table"));
  auto& slot = tables_[spec];
  slot = std::make_unique<CharacterTable>(std::move(t));
  from_disk_[spec] = false;
  return *slot;
}

bool TableStore::loaded_from_disk(const std::string& spec) const {
  auto it = from_disk_.find(spec);
  return it != from_disk_.end() && it->second;
}

}  // namespace ranklab
