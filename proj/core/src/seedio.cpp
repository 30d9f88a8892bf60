#include "qclus/seedio.hpp"

#include <fstream>
#include <sstream>

namespace qclus {

MutationData SeedFile::mutation_data() const {
  MutationData md;
  md.r = R;
  md.h = h;
  md.z = z_entries();
  md.validate();
  return md;
}

CompatiblePair SeedFile::pair() const {
  if (!has_lambda())
    throw std::invalid_argument("seed: quantum operation requires Lambda");
  return make_pair(Btilde, Lambda);
}

std::vector<std::vector<ZEntry>> SeedFile::z_entries() const {
  if (!z.empty()) return z;
  if (!h.empty()) return MutationData::z_from_h(R, h);
  // plain binomial exchange
  std::vector<std::vector<ZEntry>> out(R.size());
  for (size_t i = 0; i < R.size(); ++i) out[i].assign(R[i] + 1, ZEntry{1LL});
  return out;
}

void SeedFile::validate() const {
  if (mode != "classical" && mode != "quantum")
    throw std::invalid_argument("seed: mode must be \"classical\" or \"quantum\"");
  if (n <= 0 || m < n) throw std::invalid_argument("seed: need n >= 1 and m >= n");
  if (static_cast<int>(Btilde.size()) != m)
    throw std::invalid_argument("seed: Btilde must have m rows");
  for (const auto& row : Btilde)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("seed: Btilde must have n columns");
  if (static_cast<int>(R.size()) != n) throw std::invalid_argument("seed: R must have n entries");
  if (mode == "quantum") {
    if (!has_lambda()) throw std::invalid_argument("seed: quantum mode requires Lambda");
    if (h.empty()) throw std::invalid_argument("seed: quantum mode requires h");
  }
  if (has_lambda()) check_compatible(Btilde, Lambda);
  mutation_data();  // validates r/h/z shapes and reciprocity
}

ojson matrix_to_json(const Mat& m) {
  ojson rows = ojson::array();
  for (const auto& r : m) {
    ojson row = ojson::array();
    for (long long v : r) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const ojson& j, const char* what) {
  if (!j.is_array()) throw std::invalid_argument(std::string(what) + ": expected an array of rows");
  Mat m;
  for (const auto& row : j) {
    if (!row.is_array()) throw std::invalid_argument(std::string(what) + ": expected array rows");
    Vec r;
    for (const auto& v : row) r.push_back(v.get<long long>());
    m.push_back(std::move(r));
  }
  return m;
}

namespace {

std::vector<std::vector<QCoeff>> h_from_json(const ojson& j) {
  std::vector<std::vector<QCoeff>> h;
  for (const auto& row : j) {
    std::vector<QCoeff> cs;
    for (const auto& v : row) {
      if (v.is_number_integer())
        cs.push_back(QCoeff(v.get<long long>()));
      else
        cs.push_back(QCoeff::parse(v.get<std::string>()));
    }
    h.push_back(std::move(cs));
  }
  return h;
}

ojson h_to_json(const std::vector<std::vector<QCoeff>>& h) {
  ojson out = ojson::array();
  for (const auto& row : h) {
    ojson r = ojson::array();
    for (const auto& c : row) r.push_back(c.str());
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<std::vector<ZEntry>> z_from_json(const ojson& j) {
  std::vector<std::vector<ZEntry>> z;
  for (const auto& row : j) {
    std::vector<ZEntry> es;
    for (const auto& v : row) {
      if (v.is_number_integer())
        es.push_back(v.get<long long>());
      else {
        std::string s = v.get<std::string>();
        // bare integers may arrive as strings
        try {
          size_t pos = 0;
          long long num = std::stoll(s, &pos);
          if (pos == s.size()) {
            es.push_back(num);
            continue;
          }
        } catch (...) {
        }
        es.push_back(std::move(s));
      }
    }
    z.push_back(std::move(es));
  }
  return z;
}

ojson z_to_json(const std::vector<std::vector<ZEntry>>& z) {
  ojson out = ojson::array();
  for (const auto& row : z) {
    ojson r = ojson::array();
    for (const auto& e : row) {
      if (std::holds_alternative<long long>(e))
        r.push_back(std::get<long long>(e));
      else
        r.push_back(std::get<std::string>(e));
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

SeedFile seed_from_json(const ojson& j) {
  SeedFile s;
  s.mode = j.value("mode", "classical");
  s.n = j.at("n").get<int>();
  s.m = j.value("m", s.n);
  s.Btilde = matrix_from_json(j.at("Btilde"), "Btilde");
  if (j.contains("Lambda") && !j["Lambda"].is_null())
    s.Lambda = matrix_from_json(j["Lambda"], "Lambda");
  for (const auto& v : j.at("R")) s.R.push_back(v.get<int>());
  if (j.contains("h") && !j["h"].is_null()) s.h = h_from_json(j["h"]);
  if (j.contains("z") && !j["z"].is_null()) s.z = z_from_json(j["z"]);
  s.validate();
  return s;
}

ojson seed_to_json(const SeedFile& s) {
  ojson j;
  j["mode"] = s.mode;
  j["n"] = s.n;
  j["m"] = s.m;
  j["Btilde"] = matrix_to_json(s.Btilde);
  if (s.has_lambda()) j["Lambda"] = matrix_to_json(s.Lambda);
  j["R"] = s.R;
  if (!s.h.empty()) j["h"] = h_to_json(s.h);
  if (!s.z.empty()) j["z"] = z_to_json(s.z);
  return j;
}

SeedFile load_seed_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open seed file: " + path);
  ojson j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    throw std::invalid_argument("seed file " + path + ": " + e.what());
  }
  return seed_from_json(j);
}

void save_seed_file(const SeedFile& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write seed file: " + path);
  out << seed_to_json(s).dump(1) << "\n";
}

std::vector<int> parse_path(const std::string& csv, int n) {
  std::vector<int> path;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    int k = std::stoi(tok);
    if (k < 1 || k > n)
      throw std::invalid_argument("path entry " + tok + " out of range [1," + std::to_string(n) + "]");
    path.push_back(k);
  }
  return path;
}

ojson path_dump(const SeedFile& seed, const PathData& pd) {
  ojson out;
  out["seed"] = seed_to_json(seed);
  out["path"] = pd.path;
  ojson verts = ojson::array();
  for (int t = 0; t <= pd.length(); ++t) {
    ojson v;
    v["t"] = t;
    v["Btilde"] = matrix_to_json(pd.Bt[t]);
    if (!pd.Lam.empty()) v["Lambda"] = matrix_to_json(pd.Lam[t]);
    v["C"] = matrix_to_json(pd.C[t]);
    v["G"] = matrix_to_json(pd.G[t]);
    v["Gtilde"] = matrix_to_json(pd.Gtilde[t]);
    if (t > 0) {
      v["k"] = pd.steps[t - 1].k + 1;
      v["sign"] = pd.steps[t - 1].eps;
      v["c"] = pd.steps[t - 1].c;
      v["c_plus"] = pd.steps[t - 1].cplus;
      v["chat_plus"] = pd.steps[t - 1].chat_plus;
    }
    verts.push_back(std::move(v));
  }
  out["vertices"] = std::move(verts);
  return out;
}

std::string fpoly_quantum_str(const TorusElem& f) {
  if (f.is_zero()) return "0";
  // graded-lex ascending on the exponent vector
  std::vector<const std::pair<const ExpVec, QCoeff>*> ts;
  for (const auto& t : f.terms()) ts.push_back(&t);
  auto key = [](const ExpVec& a) {
    long long d = 0;
    for (long long x : a) d += x;
    ExpVec neg(a.size());
    for (size_t i = 0; i < a.size(); ++i) neg[i] = -a[i];
    return std::make_pair(d, neg);
  };
  std::sort(ts.begin(), ts.end(),
            [&](auto* a, auto* b) { return key(a->first) < key(b->first); });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    const auto& [a, c] = *t;
    std::string zpart;
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      if (!zpart.empty()) zpart += "*";
      zpart += "Z" + std::to_string(i + 1);
      if (a[i] != 1) zpart += "^" + std::to_string(a[i]);
    }
    std::string cs;
    bool negative = false;
    if (c.terms().size() > 1) {
      cs = "(" + c.str() + ")";
    } else {
      const auto& [k, v] = *c.terms().begin();
      QCoeff abs = v < 0 ? -c : c;
      negative = v < 0;
      if (abs.is_one() && !zpart.empty())
        cs = "";
      else
        cs = abs.str();
    }
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    first = false;
    if (!cs.empty() && !zpart.empty())
      os << cs << "*" << zpart;
    else
      os << cs << zpart;
  }
  return os.str();
}

}  // namespace qclus
