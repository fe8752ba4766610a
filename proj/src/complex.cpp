#include "spherecomb/complex.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "spherecomb/errors.hpp"

namespace sc {

std::string face_str(const Face& f) {
  std::string s = "{";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(f[i]);
  }
  return s + "}";
}

static bool subset_of(const Face& a, const Face& b) {
  return a.size() <= b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::vector<int>> lists) {
  SimplicialComplex K;
  if (lists.empty()) return K;
  for (auto& l : lists) {
    for (int v : l)
      if (v < 0) throw MalformedFace("negative vertex label " + std::to_string(v));
    std::sort(l.begin(), l.end());
    if (std::adjacent_find(l.begin(), l.end()) != l.end())
      throw MalformedFace("duplicate vertex in facet " + face_str(l));
  }
  std::sort(lists.begin(), lists.end());
  lists.erase(std::unique(lists.begin(), lists.end()), lists.end());
  // larger faces first so domination only needs a look at kept ones
  std::vector<std::size_t> idx(lists.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::stable_sort(idx.begin(), idx.end(),
                   [&](std::size_t x, std::size_t y) { return lists[x].size() > lists[y].size(); });
  std::vector<Face> kept;
  for (std::size_t i : idx) {
    const Face& f = lists[i];
    bool dominated = false;
    for (const Face& g : kept)
      if (g.size() > f.size() && subset_of(f, g)) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  K.facets_ = std::move(kept);
  K.dim_ = -1;
  for (const Face& f : K.facets_) {
    K.dim_ = std::max(K.dim_, static_cast<int>(f.size()) - 1);
    if (!f.empty()) K.vertex_count_ = std::max(K.vertex_count_, f.back() + 1);
  }
  return K;
}

bool SimplicialComplex::pure() const {
  for (const Face& f : facets_)
    if (static_cast<int>(f.size()) - 1 != dim_) return false;
  return true;
}

bool SimplicialComplex::contains(const Face& f) const {
  for (const Face& g : facets_)
    if (subset_of(f, g)) return true;
  return false;
}

std::vector<int> SimplicialComplex::vertices() const {
  std::set<int> vs;
  for (const Face& f : facets_) vs.insert(f.begin(), f.end());
  return {vs.begin(), vs.end()};
}

// all k-subsets of f appended to out
static void k_subsets(const Face& f, std::size_t k, std::set<Face>& out) {
  if (k > f.size()) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  Face cur(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) cur[i] = f[pick[i]];
    out.insert(cur);
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == f.size() - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

std::vector<Face> SimplicialComplex::faces(int dim) const {
  if (dim < -1) return {};
  std::set<Face> out;
  for (const Face& f : facets_) k_subsets(f, static_cast<std::size_t>(dim + 1), out);
  return {out.begin(), out.end()};
}

std::vector<Face> SimplicialComplex::all_faces() const {
  std::vector<Face> out;
  for (int k = -1; k <= dim_; ++k) {
    auto fs = faces(k);
    out.insert(out.end(), fs.begin(), fs.end());
  }
  return out;
}

FVector f_vector(const SimplicialComplex& K) {
  if (K.is_void()) throw RangeError("f_vector of the void complex");
  FVector v;
  v.d = K.d();
  // count per dimension in one pass over subsets
  std::set<Face> seen;
  for (const Face& f : K.facets()) {
    std::size_t n = f.size();
    for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
      Face g;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (1UL << i)) g.push_back(f[i]);
      seen.insert(std::move(g));
    }
  }
  v.f.assign(static_cast<std::size_t>(v.d), 0);
  for (const Face& g : seen) v.f[g.size() - 1] += 1;
  return v;
}

SimplicialComplex link(const SimplicialComplex& K, const Face& F) {
  Face f = F;
  std::sort(f.begin(), f.end());
  if (!K.contains(f)) throw AbsentFace("face " + face_str(f) + " is not in the complex");
  std::vector<std::vector<int>> out;
  for (const Face& g : K.facets()) {
    if (!subset_of(f, g)) continue;
    Face rest;
    std::set_difference(g.begin(), g.end(), f.begin(), f.end(), std::back_inserter(rest));
    out.push_back(std::move(rest));
  }
  return SimplicialComplex::from_facets(std::move(out));
}

std::vector<Face> LinkConditionReport::violations() const {
  std::vector<Face> v;
  for (const auto& e : edges)
    if (!e.ok) v.push_back(e.edge);
  return v;
}

bool link_condition_at(const SimplicialComplex& K, const Face& e) {
  if (e.size() != 2) throw AbsentFace("not an edge: " + face_str(e));
  auto la = link(K, {e[0]}).all_faces();
  auto lb = link(K, {e[1]}).all_faces();
  auto le = link(K, e).all_faces();
  std::vector<Face> both;
  std::set_intersection(la.begin(), la.end(), lb.begin(), lb.end(), std::back_inserter(both),
                        [](const Face& x, const Face& y) {
                          return x.size() != y.size() ? x.size() < y.size() : x < y;
                        });
  return both == le;
}

LinkConditionReport check_link_condition(const SimplicialComplex& K) {
  LinkConditionReport r;
  for (const Face& e : K.edges()) {
    bool ok = link_condition_at(K, e);
    r.edges.push_back({e, ok});
    r.all_ok = r.all_ok && ok;
  }
  return r;
}

static Face checked_edge(const SimplicialComplex& K, const Face& e) {
  Face s = e;
  std::sort(s.begin(), s.end());
  if (s.size() != 2 || s[0] == s[1] || !K.contains(s))
    throw AbsentFace("edge " + face_str(s) + " is not in the complex");
  return s;
}

ContractionResult contract_edge(const SimplicialComplex& K, const Face& e) {
  Face s = checked_edge(K, e);
  int a = s[0], b = s[1];
  std::vector<std::vector<int>> img;
  for (const Face& f : K.facets()) {
    Face g;
    bool has_a = std::binary_search(f.begin(), f.end(), a);
    for (int v : f) {
      if (v == b) {
        if (!has_a) g.push_back(a);
      } else {
        g.push_back(v);
      }
    }
    std::sort(g.begin(), g.end());
    img.push_back(std::move(g));
  }
  ContractionResult r;
  r.complex = SimplicialComplex::from_facets(std::move(img));
  r.contracted_vertex = a;
  r.removed_second_copies =
      static_cast<long>(K.all_faces().size()) - static_cast<long>(r.complex.all_faces().size());
  return r;
}

SimplicialComplex stellar_subdivide_edge(const SimplicialComplex& K, const Face& e) {
  Face s = checked_edge(K, e);
  int a = s[0], b = s[1], w = K.vertex_count();
  std::vector<std::vector<int>> out;
  for (const Face& f : K.facets()) {
    if (!subset_of(s, f)) {
      out.push_back(f);
      continue;
    }
    for (int drop : {a, b}) {
      Face g;
      for (int v : f)
        if (v != drop) g.push_back(v);
      g.push_back(w);
      out.push_back(std::move(g));
    }
  }
  return SimplicialComplex::from_facets(std::move(out));
}

SimplicialComplex tchebyshev_subdivision(const SimplicialComplex& K,
                                         const std::optional<std::vector<Face>>& edge_order) {
  std::vector<Face> original = K.edges();
  if (original.empty()) throw RangeError("tchebyshev_subdivision needs at least one edge");
  std::vector<Face> order = original;
  if (edge_order) {
    order.clear();
    for (Face e : *edge_order) {
      std::sort(e.begin(), e.end());
      order.push_back(e);
    }
    std::vector<Face> sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != original) throw BadOrder("edge order is not a permutation of the original edges");
  }
  SimplicialComplex cur = K;
  for (const Face& e : order) cur = stellar_subdivide_edge(cur, e);
  return cur;
}

SimplicialComplex cross_polytope_boundary(int d) {
  if (d < 1) throw RangeError("cross_polytope_boundary needs d >= 1");
  if (d > 20) throw SizeGuard("cross_polytope_boundary: d > 20");
  std::vector<std::vector<int>> fs;
  for (unsigned long mask = 0; mask < (1UL << d); ++mask) {
    std::vector<int> f;
    for (int i = 0; i < d; ++i) f.push_back(2 * i + ((mask >> i) & 1UL ? 1 : 0));
    fs.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex simplex_boundary(int d) {
  if (d < 1) throw RangeError("simplex_boundary needs d >= 1");
  std::vector<std::vector<int>> fs;
  for (int skip = 0; skip <= d; ++skip) {
    std::vector<int> f;
    for (int v = 0; v <= d; ++v)
      if (v != skip) f.push_back(v);
    fs.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex cycle(int n) {
  if (n < 3) throw RangeError("cycle needs n >= 3");
  std::vector<std::vector<int>> fs;
  for (int i = 0; i < n; ++i) fs.push_back({i, (i + 1) % n});
  return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex generate(const std::string& spec) {
  auto colon = spec.find(':');
  if (colon == std::string::npos) throw ParseError("generator spec needs family:param, got '" + spec + "'");
  std::string fam = spec.substr(0, colon);
  Int p = parse_int(spec.substr(colon + 1));
  if (!p.fits_sint_p()) throw RangeError("generator parameter out of range");
  int n = static_cast<int>(p.get_si());
  if (fam == "cross") return cross_polytope_boundary(n);
  if (fam == "simplexboundary" || fam == "simplex") return simplex_boundary(n);
  if (fam == "cycle") return cycle(n);
  throw ParseError("unknown generator family '" + fam + "'");
}

SimplicialComplex parse_facets(const std::string& text) {
  std::size_t first = text.find_first_not_of(" \t\r\n");
  std::vector<std::vector<int>> fs;
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(std::string("facet JSON: ") + e.what());
    }
    if (!j.contains("facets") || !j["facets"].is_array()) throw ParseError("facet JSON needs a \"facets\" array");
    for (const auto& f : j["facets"]) {
      if (!f.is_array()) throw ParseError("facet JSON: facet is not an array");
      std::vector<int> v;
      for (const auto& x : f) {
        if (!x.is_number_integer()) throw ParseError("facet JSON: non-integer label");
        v.push_back(x.get<int>());
      }
      fs.push_back(std::move(v));
    }
    return SimplicialComplex::from_facets(std::move(fs));
  }
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    std::string tok;
    std::vector<int> f;
    bool any = false;
    while (ls >> tok) {
      any = true;
      Int v;
      try {
        v = parse_int(tok);
      } catch (const ParseError&) {
        throw ParseError("facet file line " + std::to_string(lineno) + ": bad label '" + tok + "'");
      }
      if (!v.fits_sint_p()) throw ParseError("facet file line " + std::to_string(lineno) + ": label too large");
      f.push_back(static_cast<int>(v.get_si()));
    }
    if (any) fs.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(fs));
}

SimplicialComplex load_facets(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open facet file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_facets(ss.str());
}

std::string facets_text(const SimplicialComplex& K) {
  std::string out;
  for (const Face& f : K.facets()) {
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(f[i]);
    }
    out += '\n';
  }
  return out;
}

}  // namespace sc
