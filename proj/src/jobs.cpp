#include "chiclass/jobs.hpp"

#include <array>
#include <future>

#include "chiclass/classes.hpp"
#include "chiclass/errors.hpp"
#include "chiclass/format.hpp"
#include "chiclass/genus.hpp"
#include "chiclass/nearby.hpp"
#include "chiclass/oracles.hpp"
#include "chiclass/singularity.hpp"

namespace chiclass {
namespace {

using json = nlohmann::json;

constexpr std::array<std::string_view, 7> kCommands = {"classes", "virtual", "chi-y", "milnor",
                                                       "spectrum", "nearby", "verify"};

struct Outcome {
  json echo = json::object();
  json result = json::object();
  std::vector<std::string> lines;
  std::optional<bool> verdict;
};

// ---------------------------------------------------------------------------
// Field readers. Every failure names the JSON path of the offending field.

std::string child_path(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string child_path(const std::string& path, std::size_t index) {
  return path + "[" + std::to_string(index) + "]";
}

void allow_keys(const json& obj, const std::string& path, std::initializer_list<std::string_view> keys) {
  if (!obj.is_object()) throw InputError(path.empty() ? "payload" : path, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    bool known = false;
    for (auto key : keys) known = known || key == k;
    if (!known) throw InputError(child_path(path, k), "unknown field");
  }
}

const json& require(const json& obj, const std::string& key, const std::string& path = "") {
  const auto it = obj.find(key);
  if (it == obj.end()) throw InputError(child_path(path, key), "required field missing");
  return *it;
}

const json* optional_field(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

int read_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) throw InputError(path, "expected an integer");
  const auto x = v.get<long long>();
  if (x < -1000000 || x > 1000000) throw InputError(path, "integer out of range");
  return static_cast<int>(x);
}

bool read_bool(const json& v, const std::string& path) {
  if (!v.is_boolean()) throw InputError(path, "expected true or false");
  return v.get<bool>();
}

std::string read_string(const json& v, const std::string& path) {
  if (!v.is_string()) throw InputError(path, "expected a string");
  return v.get<std::string>();
}

Rat read_rat(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Rat(read_int(v, path));
  if (!v.is_string()) throw InputError(path, "expected a rational as a string \"p/q\"");
  try {
    return parse_rat(v.get<std::string>());
  } catch (const DomainError& e) {
    throw InputError(path, e.what());
  }
}

YPoly read_poly(const json& v, const std::string& path) {
  if (v.is_array()) {
    std::vector<Rat> c;
    for (std::size_t i = 0; i < v.size(); ++i) c.push_back(read_rat(v[i], child_path(path, i)));
    return YPoly(std::move(c));
  }
  if (v.is_number_integer()) return YPoly(Rat(read_int(v, path)));
  if (!v.is_string()) throw InputError(path, "expected a polynomial in y (string or coefficient array)");
  try {
    return parse_ypoly(v.get<std::string>());
  } catch (const DomainError& e) {
    throw InputError(path, e.what());
  }
}

RingDesc read_ring(const json& v, const std::string& path, int max_dim) {
  std::vector<int> factors;
  if (v.is_number_integer()) {
    factors.push_back(read_int(v, path));
  } else if (v.is_array() && !v.empty()) {
    for (std::size_t i = 0; i < v.size(); ++i) factors.push_back(read_int(v[i], child_path(path, i)));
  } else {
    throw InputError(path, "expected n or a nonempty list [n1, ..., nm]");
  }
  int dim = 0;
  for (int n : factors) {
    if (n < 1) throw InputError(path, "projective factor dimensions must be >= 1");
    dim += n;
  }
  if (dim > max_dim) {
    throw InputError(path, "ambient dimension " + std::to_string(dim) + " exceeds CHICLASS_MAX_DIM = " +
                               std::to_string(max_dim));
  }
  return RingDesc(std::move(factors));
}

json ring_echo(const RingDesc& ring) {
  if (ring.num_factors() == 1) return ring.factors()[0];
  return json(std::vector<int>(ring.factors().begin(), ring.factors().end()));
}

// Section degrees must be positive; divisor multidegrees may vanish on some
// factors (a fibre of one ruling) but not on all of them.
std::vector<std::vector<int>> read_multidegrees(const json& v, const RingDesc& ring, const std::string& path,
                                                bool allow_zero_entries = false) {
  if (!v.is_array()) throw InputError(path, "expected a list of degrees");
  std::vector<std::vector<int>> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const std::string p = child_path(path, j);
    std::vector<int> a;
    if (v[j].is_number_integer() && ring.num_factors() == 1) {
      a.push_back(read_int(v[j], p));
    } else if (v[j].is_array()) {
      for (std::size_t i = 0; i < v[j].size(); ++i) a.push_back(read_int(v[j][i], child_path(p, i)));
    } else {
      throw InputError(p, ring.num_factors() == 1 ? "expected a positive integer degree"
                                                  : "expected a multidegree list, one entry per factor");
    }
    if (a.size() != ring.num_factors()) throw InputError(p, "multidegree length differs from the factor count");
    for (int d : a) {
      if (d < 0 || (d == 0 && !allow_zero_entries)) throw InputError(p, "degrees must be positive");
    }
    if (std::all_of(a.begin(), a.end(), [](int d) { return d == 0; })) throw InputError(p, "degree is zero");
    out.push_back(std::move(a));
  }
  return out;
}

json multidegree_echo(const std::vector<std::vector<int>>& md, const RingDesc& ring) {
  json out = json::array();
  for (const auto& a : md) {
    if (ring.num_factors() == 1) {
      out.push_back(a[0]);
    } else {
      out.push_back(a);
    }
  }
  return out;
}

CompleteIntersection read_ci(const json& payload, const JobSpec& job, Outcome& out) {
  const RingDesc ring = read_ring(require(payload, "ambient"), "ambient", job.max_dim);
  const json* degrees = optional_field(payload, "degrees");
  auto md = degrees ? read_multidegrees(*degrees, ring, "degrees") : std::vector<std::vector<int>>{};
  if (static_cast<int>(md.size()) >= ring.dimension()) {
    throw InputError("degrees", "need fewer sections than the ambient dimension");
  }
  if (job.order && *job.order < ring.dimension()) {
    throw InputError("--order", "order " + std::to_string(*job.order) + " is below the ambient dimension");
  }
  out.echo["ambient"] = ring_echo(ring);
  out.echo["degrees"] = multidegree_echo(md, ring);
  return CompleteIntersection(ring, std::move(md));
}

json class_json(const HomologyClass& c) {
  json parts = json::object();
  for (int k = c.dim_x(); k >= 0; --k) {
    const GradedClass part = c.homology_part(k);
    if (!part.is_zero()) parts[std::to_string(k)] = to_string(part);
  }
  return parts;
}

void append_class(Outcome& out, const std::string& title, const HomologyClass& c) {
  out.lines.push_back(title + ":");
  for (const auto& l : homology_lines(c)) out.lines.push_back("  " + l);
}

// ---------------------------------------------------------------------------
// Scissor expressions:
//   {"P": n} {"A": n} {"torus": n} "point" {"ref": name}
//   {"union": [e, e]} {"minus": [e, e]} {"product": [e, e]}
//   {"blowup": e, "points": k} {"contract": e, "curves": k}

ScissorExpr read_scissor(const json& v, const std::string& path) {
  if (v.is_string()) {
    if (v.get<std::string>() == "point") return ScissorExpr::point();
    throw InputError(path, "unknown atom; expected \"point\" or an object");
  }
  if (!v.is_object() || v.empty()) throw InputError(path, "expected a scissor expression object");
  auto pair = [&](const std::string& key) {
    const json& arr = v.at(key);
    const std::string p = child_path(path, key);
    if (!arr.is_array() || arr.size() != 2) throw InputError(p, "expected a list of two expressions");
    return std::make_pair(read_scissor(arr[0], child_path(p, 0)), read_scissor(arr[1], child_path(p, 1)));
  };
  auto nonneg = [&](const std::string& key) {
    const int x = read_int(require(v, key, path), child_path(path, key));
    if (x < 0) throw InputError(child_path(path, key), "must be >= 0");
    return x;
  };
  if (v.contains("P")) { allow_keys(v, path, {"P"}); return ScissorExpr::projective(nonneg("P")); }
  if (v.contains("A")) { allow_keys(v, path, {"A"}); return ScissorExpr::affine(nonneg("A")); }
  if (v.contains("torus")) { allow_keys(v, path, {"torus"}); return ScissorExpr::torus(nonneg("torus")); }
  if (v.contains("ref")) {
    allow_keys(v, path, {"ref"});
    return ScissorExpr::named(read_string(v.at("ref"), child_path(path, "ref")));
  }
  if (v.contains("union")) {
    allow_keys(v, path, {"union"});
    auto [a, b] = pair("union");
    return ScissorExpr::disjoint_union(std::move(a), std::move(b));
  }
  if (v.contains("minus")) {
    allow_keys(v, path, {"minus"});
    auto [a, b] = pair("minus");
    return ScissorExpr::complement(std::move(a), std::move(b));
  }
  if (v.contains("product")) {
    allow_keys(v, path, {"product"});
    auto [a, b] = pair("product");
    return ScissorExpr::product(std::move(a), std::move(b));
  }
  if (v.contains("blowup")) {
    allow_keys(v, path, {"blowup", "points"});
    return ScissorExpr::blowup_points(read_scissor(v.at("blowup"), child_path(path, "blowup")), nonneg("points"));
  }
  if (v.contains("contract")) {
    allow_keys(v, path, {"contract", "curves"});
    return ScissorExpr::contract_curves(read_scissor(v.at("contract"), child_path(path, "contract")),
                                        nonneg("curves"));
  }
  throw InputError(path, "unknown scissor operation");
}

ScissorEnv read_definitions(const json* v) {
  ScissorEnv env;
  if (!v) return env;
  if (!v->is_object()) throw InputError("definitions", "expected an object of named expressions");
  for (const auto& [name, e] : v->items()) env.emplace(name, read_scissor(e, child_path("definitions", name)));
  return env;
}

YPoly evaluate_scissor(const json& payload, Outcome& out, int* dim = nullptr) {
  const json* defs = optional_field(payload, "definitions");
  const ScissorEnv env = read_definitions(defs);
  const ScissorExpr expr = read_scissor(require(payload, "scissor"), "scissor");
  ScissorValue v;
  try {
    v = scissor_evaluate(expr, env);
  } catch (const DomainError& e) {
    throw InputError("scissor", e.what());
  }
  out.echo["scissor"] = payload.at("scissor");
  if (defs) out.echo["definitions"] = *defs;
  if (dim) *dim = v.dim;
  return v.chi_c;
}

// ---------------------------------------------------------------------------
// Commands

Outcome run_classes(const JobSpec& job) {
  const json& p = job.payload;
  allow_keys(p, "", {"command", "ambient", "degrees", "specialize"});
  Outcome out;
  const CompleteIntersection ci = read_ci(p, job, out);
  const HomologyClass t = hirzebruch_class_smooth(ci);
  out.lines.push_back("X: " + to_string(ci) + ", dim " + std::to_string(ci.dimension()) +
                      " (smooth member of the linear system)");
  append_class(out, "T_y*(X)", t);
  const YPoly deg = degree_polynomial(t);
  out.lines.push_back("degree-0: " + to_string(deg));
  out.result["dimX"] = ci.dimension();
  out.result["class"] = class_json(t);
  out.result["degree0"] = to_string(deg);

  if (const json* s = optional_field(p, "specialize")) {
    if (!s->is_array()) throw InputError("specialize", "expected a list of values among -1, 0, 1");
    json echo = json::array();
    for (std::size_t i = 0; i < s->size(); ++i) {
      const int y0 = read_int((*s)[i], child_path("specialize", i));
      if (y0 < -1 || y0 > 1) throw InputError(child_path("specialize", i), "must be -1, 0 or 1");
      echo.push_back(y0);
      const HomologyClass sp = specialize(t, y0);
      append_class(out, "y = " + std::to_string(y0), sp);
      out.result["specializations"][std::to_string(y0)] = {{"class", class_json(sp)},
                                                           {"degree0", to_string(degree_polynomial(sp))}};
    }
    out.echo["specialize"] = echo;
  }
  return out;
}

Outcome run_virtual(const JobSpec& job) {
  const json& p = job.payload;
  allow_keys(p, "", {"command", "ambient", "degrees"});
  Outcome out;
  const CompleteIntersection ci = read_ci(p, job, out);
  out.lines.push_back("X: " + to_string(ci) + ", dim " + std::to_string(ci.dimension()));
  const HomologyClass via_ty = virtual_class_via_Ty(ci);
  append_class(out, "T^vir via T_y*(T_vir)", via_ty);
  out.result["viaTy"] = class_json(via_ty);
  try {
    const HomologyClass via_dr = virtual_class_via_DR(ci);
    append_class(out, "T^vir via td_(1+y)*(Lambda_y T*_vir)", via_dr);
    out.result["viaDR"] = class_json(via_dr);
    out.result["polynomial"] = true;
    const bool agree = via_dr == via_ty;
    out.lines.push_back(std::string("routes agree: ") + (agree ? "yes" : "no"));
    out.result["routesAgree"] = agree;
    out.verdict = agree;
  } catch (const NotPolynomial& e) {
    out.lines.push_back(std::string("not polynomial: ") + e.what() + ": " + e.offending());
    out.result["polynomial"] = false;
    out.result["offending"] = e.offending();
    out.verdict = false;
  }
  const YPoly deg = degree_polynomial(via_ty);
  out.lines.push_back("degree-0: " + to_string(deg));
  out.result["degree0"] = to_string(deg);
  return out;
}

Outcome run_chi_y(const JobSpec& job) {
  const json& p = job.payload;
  allow_keys(p, "", {"command", "ambient", "degrees", "scissor", "definitions"});
  Outcome out;
  if (p.contains("scissor")) {
    if (p.contains("ambient") || p.contains("degrees")) {
      throw InputError("scissor", "give either a scissor expression or ambient/degrees, not both");
    }
    int dim = 0;
    const YPoly chi = evaluate_scissor(p, out, &dim);
    out.lines.push_back("dim: " + std::to_string(dim));
    out.lines.push_back("chi_y: " + to_string(chi));
    out.result["dim"] = dim;
    out.result["chiY"] = to_string(chi);
    return out;
  }
  const CompleteIntersection ci = read_ci(p, job, out);
  if (ci.ambient().num_factors() != 1) throw InputError("ambient", "the sheaf Euler oracle needs a single P^n");
  json omegas = json::array();
  std::string line = "chi(Omega^p), p = 0.." + std::to_string(ci.dimension()) + ":";
  for (int q = 0; q <= ci.dimension(); ++q) {
    const Integer v = sheaf_euler_omega(ci, q);
    omegas.push_back(v.get_str());
    line += " " + v.get_str();
  }
  const YPoly chi = chi_y_smooth_oracle(ci);
  out.lines.push_back("X: " + to_string(ci));
  out.lines.push_back(line);
  out.lines.push_back("chi_y: " + to_string(chi));
  out.result["chiOmega"] = omegas;
  out.result["chiY"] = to_string(chi);
  return out;
}

std::vector<IsolatedSingularPoint> read_singularities(const json& v, Outcome& out) {
  const std::string path = "singularities";
  if (!v.is_array()) throw InputError(path, "expected a list of singular points");
  std::vector<IsolatedSingularPoint> pts;
  json echo = json::array();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = child_path(path, i);
    const json& item = v[i];
    allow_keys(item, p, {"label", "weights", "spectrum", "n"});
    std::string label =
        item.contains("label") ? read_string(item["label"], child_path(p, "label")) : "x" + std::to_string(i + 1);
    json e = {{"label", label}};
    std::optional<std::variant<Weights, SpectrumData>> data;
    try {
      if (item.contains("weights")) {
        if (item.contains("spectrum")) throw InputError(p, "give weights or spectrum, not both");
        const json& w = item["weights"];
        if (!w.is_array()) throw InputError(child_path(p, "weights"), "expected a list of rationals");
        std::vector<Rat> ws;
        json we = json::array();
        for (std::size_t k = 0; k < w.size(); ++k) {
          ws.push_back(read_rat(w[k], child_path(child_path(p, "weights"), k)));
          we.push_back(to_string(ws.back()));
        }
        data = Weights(std::move(ws));
        e["weights"] = we;
        (void)spectrum_wh(std::get<Weights>(*data));
      } else {
        const json& s = require(item, "spectrum", p);
        if (!s.is_array()) throw InputError(child_path(p, "spectrum"), "expected a list of rationals");
        std::vector<Rat> entries;
        json se = json::array();
        for (std::size_t k = 0; k < s.size(); ++k) {
          entries.push_back(read_rat(s[k], child_path(child_path(p, "spectrum"), k)));
        }
        const int n = read_int(require(item, "n", p), child_path(p, "n"));
        data = SpectrumData(std::move(entries), n);
        for (const auto& a : std::get<SpectrumData>(*data).entries()) se.push_back(to_string(a));
        e["spectrum"] = se;
        e["n"] = n;
      }
    } catch (const DomainError& err) {
      throw InputError(p, err.what());
    }
    echo.push_back(e);
    pts.push_back(IsolatedSingularPoint{std::move(label), std::move(*data)});
  }
  out.echo["singularities"] = echo;
  return pts;
}

Outcome run_milnor(const JobSpec& job) {
  const json& p = job.payload;
  allow_keys(p, "", {"command", "ambient", "degrees", "singularities", "chiY", "scissor", "definitions", "levels"});
  Outcome out;
  if (const json* levels = optional_field(p, "levels")) {
    if (p.contains("singularities")) throw InputError("levels", "give levels or singularities, not both");
    if (!levels->is_array()) throw InputError("levels", "expected a list of polynomials");
    std::vector<YPoly> ls;
    json echo = json::array();
    for (std::size_t i = 0; i < levels->size(); ++i) {
      ls.push_back(read_poly((*levels)[i], child_path("levels", i)));
      echo.push_back(to_string(ls.back()));
    }
    out.echo["levels"] = echo;
    const RecursionResult r = hm_recursion_degree0(ls);
    for (const auto& w : r.warnings) out.lines.push_back("warning: " + w);
    out.lines.push_back("M_y: " + to_string(r.total));
    out.result["My"] = to_string(r.total);
    out.result["warnings"] = r.warnings;
    return out;
  }

  const CompleteIntersection ci = read_ci(p, job, out);
  const auto pts = read_singularities(require(p, "singularities"), out);
  out.lines.push_back("X: " + to_string(ci) + ", dim " + std::to_string(ci.dimension()));
  json pts_json = json::array();
  for (const auto& pt : pts) {
    const SpectrumData s = pt.spectrum();
    const YPoly chi = chi_y_milnor_fiber(s);
    out.lines.push_back("  " + pt.label + ": spectrum " + to_string(s) + ", mu " + std::to_string(milnor_number(s)) +
                        ", chi_y(reduced Milnor cohomology) " + to_string(chi));
    pts_json.push_back({{"label", pt.label}, {"mu", milnor_number(s)}, {"chiY", to_string(chi)}});
  }
  YPoly my;
  try {
    my = milnor_class_isolated(ci, pts);
  } catch (const DomainError& e) {
    throw InputError("singularities", e.what());
  }
  const YPoly vir = degree_polynomial(virtual_class_via_Ty(ci));
  out.lines.push_back("M_y: " + to_string(my));
  out.lines.push_back("degree-0 of T^vir: " + to_string(vir));
  out.result["points"] = pts_json;
  out.result["My"] = to_string(my);
  out.result["virtualDegree0"] = to_string(vir);

  std::optional<YPoly> chi_x;
  if (const json* c = optional_field(p, "chiY")) {
    if (p.contains("scissor")) throw InputError("chiY", "give chiY or scissor, not both");
    chi_x = read_poly(*c, "chiY");
    out.echo["chiY"] = to_string(*chi_x);
  } else if (p.contains("scissor")) {
    chi_x = evaluate_scissor(p, out);
  }
  if (chi_x) {
    const YPoly residual = verify_cor2_degree0(ci, pts, *chi_x);
    out.lines.push_back("chi_y(X): " + to_string(*chi_x));
    out.lines.push_back("residual deg T^vir - chi_y(X) - M_y: " + to_string(residual));
    out.result["chiYofX"] = to_string(*chi_x);
    out.result["residual"] = to_string(residual);
    out.verdict = residual.is_zero();
  }
  return out;
}

Outcome run_spectrum(const JobSpec& job) {
  const json& p = job.payload;
  allow_keys(p, "", {"command", "weights", "spectrum", "n"});
  Outcome out;
  json wrapped = json::array({json::object()});
  for (const auto& [k, v] : p.items()) {
    if (k != "command") wrapped[0][k] = v;
  }
  std::vector<IsolatedSingularPoint> pts;
  try {
    pts = read_singularities(wrapped, out);
  } catch (const InputError& e) {
    // Re-root the path from singularities[0].x to x.
    std::string field = e.field();
    const std::string prefix = "singularities[0]";
    field = field.rfind(prefix, 0) == 0 ? field.substr(prefix.size() + (field.size() > prefix.size() ? 1 : 0)) : field;
    std::string msg = e.what();
    msg = msg.substr(msg.find(": ") + 2);
    throw InputError(field.empty() ? "payload" : field, msg);
  }
  json echo = out.echo["singularities"][0];
  echo.erase("label");
  out.echo = echo;
  const SpectrumData s = pts[0].spectrum();
  const long mu = milnor_number(s);
  const YPoly chi = chi_y_milnor_fiber(s);
  out.lines.push_back("spectrum: " + to_string(s) + ", mu: " + std::to_string(mu) + ", chi_y: " + to_string(chi));
  json entries = json::array();
  for (const auto& a : s.entries()) entries.push_back(to_string(a));
  out.result = {{"spectrum", entries}, {"mu", mu}, {"chiY", to_string(chi)}, {"n", s.num_variables()}};
  return out;
}

std::vector<CoverPiece> read_table(const json& v, const std::string& path) {
  if (!v.is_array()) throw InputError(path, "expected a list of {codim, chiY} entries");
  std::vector<CoverPiece> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const std::string p = child_path(path, i);
    allow_keys(v[i], p, {"codim", "chiY"});
    CoverPiece piece;
    piece.codim = read_int(require(v[i], "codim", p), child_path(p, "codim"));
    if (piece.codim < 0) throw InputError(child_path(p, "codim"), "must be >= 0");
    piece.chi_y = read_poly(require(v[i], "chiY", p), child_path(p, "chiY"));
    out.push_back(std::move(piece));
  }
  const bool has_closure = std::any_of(out.begin(), out.end(), [](const CoverPiece& c) { return c.codim == 0; });
  if (!has_closure) throw InputError(path, "table lacks the codim 0 entry");
  return out;
}

json table_echo(const std::vector<CoverPiece>& t) {
  json out = json::array();
  for (const auto& c : t) out.push_back({{"codim", c.codim}, {"chiY", to_string(c.chi_y)}});
  return out;
}

Outcome run_nearby(const JobSpec& job) {
  const json& p = job.payload;
  const std::string mode = read_string(require(p, "mode"), "mode");
  Outcome out;
  out.echo["mode"] = mode;
  if (mode == "open") {
    allow_keys(p, "", {"command", "mode", "table"});
    const auto table = read_table(require(p, "table"), "table");
    out.echo["table"] = table_echo(table);
    const YPoly v = incl_excl_open(table);
    out.lines.push_back("chi_y(open part): " + to_string(v));
    out.result["chiY"] = to_string(v);
    return out;
  }
  if (mode == "strata") {
    allow_keys(p, "", {"command", "mode", "strata"});
    const json& s = require(p, "strata");
    if (!s.is_array()) throw InputError("strata", "expected a list");
    std::vector<StratumGenus> strata;
    json echo = json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
      const std::string path = child_path("strata", i);
      allow_keys(s[i], path, {"label", "chiC", "localFactor"});
      StratumGenus g;
      g.label = s[i].contains("label") ? read_string(s[i]["label"], child_path(path, "label")) : "S" + std::to_string(i + 1);
      g.chi_c = read_poly(require(s[i], "chiC", path), child_path(path, "chiC"));
      g.local_factor = read_poly(require(s[i], "localFactor", path), child_path(path, "localFactor"));
      echo.push_back({{"label", g.label}, {"chiC", to_string(g.chi_c)}, {"localFactor", to_string(g.local_factor)}});
      strata.push_back(std::move(g));
    }
    out.echo["strata"] = echo;
    const YPoly v = strat_additivity(strata);
    out.lines.push_back("sum over strata: " + to_string(v));
    out.result["total"] = to_string(v);
    return out;
  }
  if (mode == "log") {
    allow_keys(p, "", {"command", "mode", "ambient", "divisors"});
    const RingDesc ring = read_ring(require(p, "ambient"), "ambient", job.max_dim);
    if (job.order && *job.order < ring.dimension()) {
      throw InputError("--order", "order is below the ambient dimension");
    }
    const auto divisors = read_multidegrees(require(p, "divisors"), ring, "divisors", true);
    out.echo["ambient"] = ring_echo(ring);
    out.echo["divisors"] = multidegree_echo(divisors, ring);
    const HomologyClass c = log_dr_trivial(LogPair{ring, divisors});
    append_class(out, "T_y*(j_! Q_U)", c);
    const YPoly deg = degree_polynomial(c);
    out.lines.push_back("degree-0: " + to_string(deg));
    out.result["class"] = class_json(c);
    out.result["degree0"] = to_string(deg);
    return out;
  }
  if (mode != "snc") throw InputError("mode", "expected one of snc, log, strata, open");

  allow_keys(p, "", {"command", "mode", "components", "strata", "sigma", "sigmaCapHyperplane"});
  SncResolution r;
  const json& comps = require(p, "components");
  if (!comps.is_array()) throw InputError("components", "expected a list");
  json comps_echo = json::array();
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const std::string path = child_path("components", i);
    allow_keys(comps[i], path, {"id", "multiplicity"});
    SncComponent c{read_string(require(comps[i], "id", path), child_path(path, "id")),
                   read_int(require(comps[i], "multiplicity", path), child_path(path, "multiplicity"))};
    if (c.multiplicity < 1) throw InputError(child_path(path, "multiplicity"), "must be >= 1");
    comps_echo.push_back({{"id", c.id}, {"multiplicity", c.multiplicity}});
    r.components.push_back(std::move(c));
  }
  const json& strata = require(p, "strata");
  if (!strata.is_array()) throw InputError("strata", "expected a list");
  json strata_echo = json::array();
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string path = child_path("strata", i);
    allow_keys(strata[i], path, {"components", "overSigma", "cover", "base"});
    SncStratum s;
    const json& ids = require(strata[i], "components", path);
    if (!ids.is_array() || ids.empty()) throw InputError(child_path(path, "components"), "expected a nonempty list of ids");
    for (std::size_t k = 0; k < ids.size(); ++k) s.components.push_back(read_string(ids[k], child_path(child_path(path, "components"), k)));
    s.over_sigma = strata[i].contains("overSigma") && read_bool(strata[i]["overSigma"], child_path(path, "overSigma"));
    s.cover = read_table(require(strata[i], "cover", path), child_path(path, "cover"));
    json e = {{"components", s.components}, {"overSigma", s.over_sigma}, {"cover", table_echo(s.cover)}};
    if (strata[i].contains("base")) {
      s.base_chi_c = read_poly(strata[i]["base"], child_path(path, "base"));
      e["base"] = to_string(*s.base_chi_c);
    }
    try {
      (void)stratum_gcd(r, s);
    } catch (const DomainError& err) {
      throw InputError(child_path(path, "components"), err.what());
    }
    strata_echo.push_back(e);
    r.strata.push_back(std::move(s));
  }
  r.sigma_chi_y = p.contains("sigma") ? read_poly(p["sigma"], "sigma") : YPoly();
  r.sigma_cap_hyperplane_chi_y =
      p.contains("sigmaCapHyperplane") ? read_poly(p["sigmaCapHyperplane"], "sigmaCapHyperplane") : YPoly();
  out.echo["components"] = comps_echo;
  out.echo["strata"] = strata_echo;
  out.echo["sigma"] = to_string(r.sigma_chi_y);
  out.echo["sigmaCapHyperplane"] = to_string(r.sigma_cap_hyperplane_chi_y);

  NearbyGenus g;
  try {
    g = motivic_nearby_degree0(r);
  } catch (const DomainError& e) {
    throw InputError("strata", e.what());
  }
  out.lines.push_back("psi: " + to_string(g.psi));
  out.lines.push_back("psi on Sigma: " + to_string(g.psi_on_sigma));
  out.lines.push_back("phi on Sigma: " + to_string(g.phi_on_sigma));
  for (const auto& n : g.notes) out.lines.push_back("note: " + n);
  out.result = {{"psi", to_string(g.psi)}, {"psiOnSigma", to_string(g.psi_on_sigma)},
                {"phiOnSigma", to_string(g.phi_on_sigma)}, {"notes", g.notes}};
  const bool bases = std::all_of(r.strata.begin(), r.strata.end(), [](const SncStratum& s) {
    return s.components.size() != 1 || !s.over_sigma || s.base_chi_c.has_value();
  });
  if (bases) {
    const Rat e = acampo_euler(r, true);
    out.lines.push_back("A'Campo count sum m_i e(E_i°) over Sigma: " + to_string(e) +
                        " (psi on Sigma at y = -1: " + to_string(g.psi_on_sigma(Rat(-1))) + ")");
    out.result["acampo"] = to_string(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// verify

std::vector<CompleteIntersection> ci_family(int n_max, int d_max, int r_max) {
  std::vector<CompleteIntersection> out;
  for (int n = 1; n <= n_max; ++n) {
    for (int r = 0; r <= std::min(r_max, n - 1); ++r) {
      // Non-increasing degree tuples in [1, d_max]^r.
      std::vector<int> deg(static_cast<std::size_t>(r), d_max);
      while (true) {
        out.push_back(CompleteIntersection::in_projective_space(n, deg));
        int i = r - 1;
        while (i >= 0 && deg[static_cast<std::size_t>(i)] == 1) --i;
        if (i < 0) break;
        const int v = deg[static_cast<std::size_t>(i)] - 1;
        for (int k = i; k < r; ++k) deg[static_cast<std::size_t>(k)] = v;
      }
    }
  }
  return out;
}

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

CaseResult check_prop14(const CompleteIntersection& ci) {
  CaseResult c{to_string(ci), false, ""};
  try {
    const HomologyClass dr = virtual_class_via_DR(ci);
    const HomologyClass ty = virtual_class_via_Ty(ci);
    c.pass = dr == ty;
    if (!c.pass) c.detail = "routes differ";
  } catch (const NotPolynomial& e) {
    c.detail = std::string(e.what()) + ": " + e.offending();
  }
  return c;
}

CaseResult check_ghrr(const CompleteIntersection& ci) {
  CaseResult c{to_string(ci), false, ""};
  const YPoly engine = degree_polynomial(virtual_class_via_Ty(ci));
  const YPoly oracle = chi_y_smooth_oracle(ci);
  c.pass = engine == oracle;
  c.detail = "engine " + to_string(engine) + ", oracle " + to_string(oracle);
  return c;
}

Outcome run_verify(const JobSpec& job) {
  const json& p = job.payload;
  allow_keys(p, "", {"command", "check", "nMax", "dMax", "rMax", "order"});
  Outcome out;
  const std::string check = read_string(require(p, "check"), "check");
  out.echo["check"] = check;
  std::vector<CaseResult> cases;

  if (check == "prop14" || check == "ghrr") {
    const int n_max = p.contains("nMax") ? read_int(p["nMax"], "nMax") : 4;
    const int d_max = p.contains("dMax") ? read_int(p["dMax"], "dMax") : 3;
    const int r_max = p.contains("rMax") ? read_int(p["rMax"], "rMax") : 2;
    if (n_max < 1) throw InputError("nMax", "must be >= 1");
    if (n_max > job.max_dim) throw InputError("nMax", "exceeds CHICLASS_MAX_DIM = " + std::to_string(job.max_dim));
    if (d_max < 1 || d_max > 12) throw InputError("dMax", "must be in [1, 12]");
    if (r_max < 0 || r_max > 4) throw InputError("rMax", "must be in [0, 4]");
    out.echo["nMax"] = n_max;
    out.echo["dMax"] = d_max;
    out.echo["rMax"] = r_max;
    const auto family = ci_family(n_max, d_max, r_max);
    std::vector<std::future<CaseResult>> futures;
    futures.reserve(family.size());
    for (const auto& ci : family) {
      futures.push_back(std::async(std::launch::async, check == "prop14" ? check_prop14 : check_ghrr, ci));
    }
    for (auto& f : futures) cases.push_back(f.get());
  } else if (check == "series" || check == "specializations") {
    int order = job.order.value_or(12);
    if (p.contains("order")) order = read_int(p["order"], "order");
    if (order < 1 || order > 40) throw InputError("order", "must be in [1, 40]");
    out.echo["order"] = order;
    if (check == "series") {
      for (int k = 1; k <= order; ++k) {
        cases.push_back({"order " + std::to_string(k), verify_series_relation(k).is_zero(), ""});
      }
    } else {
      const GenusSeries ty = standard_series(GenusKind::Ty, order);
      const std::array<std::pair<int, GenusKind>, 3> targets{
          {{-1, GenusKind::Chern}, {0, GenusKind::Todd}, {1, GenusKind::L}}};
      for (const auto& [y0, kind] : targets) {
        cases.push_back({"y = " + std::to_string(y0) + " vs " + std::string(to_string(kind)),
                         ty.specialized(Rat(y0)) == standard_series(kind, order), ""});
      }
    }
  } else {
    throw InputError("check", "expected one of prop14, ghrr, series, specializations");
  }

  std::size_t failed = 0;
  json case_json = json::array();
  for (const auto& c : cases) {
    if (!c.pass) {
      ++failed;
      out.lines.push_back("  FAIL " + c.name + (c.detail.empty() ? "" : ": " + c.detail));
    }
    case_json.push_back({{"case", c.name}, {"pass", c.pass}});
  }
  out.result["cases"] = case_json;
  out.result["total"] = cases.size();
  out.result["failed"] = failed;
  out.verdict = failed == 0;
  const std::string summary = failed == 0 ? "PASS (all " + std::to_string(cases.size()) + " cases exact)"
                                          : "FAIL (" + std::to_string(failed) + " of " +
                                                std::to_string(cases.size()) + " cases failed)";
  out.lines.insert(out.lines.begin(), summary);
  return out;
}

Outcome dispatch(const JobSpec& job) {
  if (const json* c = optional_field(job.payload, "command")) {
    if (read_string(*c, "command") != job.command) {
      throw InputError("command", "input file is for '" + c->get<std::string>() + "', not '" + job.command + "'");
    }
  }
  if (job.command == "classes") return run_classes(job);
  if (job.command == "virtual") return run_virtual(job);
  if (job.command == "chi-y") return run_chi_y(job);
  if (job.command == "milnor") return run_milnor(job);
  if (job.command == "spectrum") return run_spectrum(job);
  if (job.command == "nearby") return run_nearby(job);
  if (job.command == "verify") return run_verify(job);
  throw InputError("command", "unknown command '" + job.command + "'");
}

}  // namespace

std::span<const std::string_view> job_commands() { return kCommands; }

Report run(const JobSpec& job) {
  Report report;
  try {
    if (!job.payload.is_object()) throw InputError("payload", "expected a JSON object");
    const Outcome out = dispatch(job);
    report.exit_code = out.verdict.value_or(true) ? kExitOk : kExitFail;
    if (job.format == OutputFormat::Json) {
      json doc = {{"command", job.command}, {"input", out.echo}, {"result", out.result}};
      if (out.verdict) doc["verdict"] = *out.verdict ? "PASS" : "FAIL";
      report.text = doc.dump(2) + "\n";
    } else {
      for (const auto& l : out.lines) report.text += l + "\n";
      if (out.verdict && job.command != "verify") report.text += std::string(*out.verdict ? "PASS" : "FAIL") + "\n";
    }
  } catch (const InputError& e) {
    report.exit_code = kExitInputError;
    if (job.format == OutputFormat::Json) {
      std::string msg = e.what();
      msg = msg.substr(std::min(msg.size(), e.field().size() + 2));
      report.text = json{{"command", job.command}, {"error", {{"field", e.field()}, {"message", msg}}}}.dump(2) + "\n";
    } else {
      report.text = std::string("error: ") + e.what() + "\n";
    }
  } catch (const NotPolynomial& e) {
    report.exit_code = kExitFail;
    report.text = std::string("FAIL: ") + e.what() + ": " + e.offending() + "\n";
  } catch (const DomainError& e) {
    report.exit_code = kExitInputError;
    report.text = std::string("error: ") + e.what() + "\n";
  }
  return report;
}

}  // namespace chiclass
