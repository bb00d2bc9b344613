#include "proxima/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace proxima {
namespace {

using nlohmann::json;

constexpr const char* kPaperExample = R"({
  "space": {"dim": 2, "p": 2},
  "regions": {
    "omega": {"variant": "segment", "a": [-1, "-1/2"], "b": [-1, "1/2"]},
    "delta": {"variant": "segment", "a": [1, "-1/2"], "b": [1, "1/2"]}
  },
  "map": {
    "omega_rule": {"A": [[1, 0], [0, "-1/2"]], "b": [2, 0]},
    "delta_rule": {"A": [[1, 0], [0, "-1/3"]], "b": [-2, 0]}
  },
  "options": {"density": 11, "depth": 32, "eta": 0.95, "seeds": [[-1, "-1/2"]]}
})";

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
  throw ConfigError((path.empty() ? std::string("/") : path) + ": " + msg);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) fail(path, std::string("missing key '") + key + "'");
  return obj.at(key);
}

void expect_object(const json& v, const std::string& path,
                   std::initializer_list<const char*> allowed) {
  if (!v.is_object()) fail(path, "expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : v.items()) {
    if (!ok.count(key)) fail(path, "unknown key '" + key + "'");
  }
}

double number_at(const json& v, const std::string& path, bool allow_infinite = false) {
  try {
    return parse_number(v, allow_infinite);
  } catch (const ConfigError& e) {
    fail(path, e.what());
  }
}

long long integer_at(const json& v, const std::string& path, long long min_value) {
  if (!v.is_number_integer()) fail(path, "expected an integer");
  const long long x = v.get<long long>();
  if (x < min_value) fail(path, "must be >= " + std::to_string(min_value));
  return x;
}

Eigen::VectorXd vector_at(const json& v, int dim, const std::string& path,
                          bool allow_infinite = false) {
  if (!v.is_array() || static_cast<int>(v.size()) != dim) {
    fail(path, "expected an array of " + std::to_string(dim) + " numbers");
  }
  Eigen::VectorXd out(dim);
  for (int i = 0; i < dim; ++i) {
    out[i] = number_at(v[i], path + "/" + std::to_string(i), allow_infinite);
  }
  return out;
}

Point point_at(const json& v, const Space& space, const std::string& path) {
  return Point(space, vector_at(v, space.dim(), path));
}

Region region_at(const json& v, const Space& space, const std::string& path) {
  if (!v.is_object()) fail(path, "expected an object");
  const json& variant = require(v, "variant", path);
  if (!variant.is_string()) fail(path + "/variant", "expected a string");
  const std::string kind = variant.get<std::string>();
  double tol = kMembershipTol;
  if (v.contains("membership_tol")) {
    tol = number_at(v.at("membership_tol"), path + "/membership_tol");
  }
  try {
    if (kind == "segment") {
      expect_object(v, path, {"variant", "membership_tol", "a", "b"});
      return Region::segment(point_at(require(v, "a", path), space, path + "/a"),
                             point_at(require(v, "b", path), space, path + "/b"), tol);
    }
    if (kind == "box") {
      expect_object(v, path, {"variant", "membership_tol", "lower", "upper"});
      return Region::box(space,
                         vector_at(require(v, "lower", path), space.dim(), path + "/lower", true),
                         vector_at(require(v, "upper", path), space.dim(), path + "/upper", true),
                         tol);
    }
    if (kind == "points") {
      expect_object(v, path, {"variant", "membership_tol", "points", "convex"});
      const json& pts = require(v, "points", path);
      if (!pts.is_array()) fail(path + "/points", "expected an array");
      std::vector<Point> out;
      for (std::size_t i = 0; i < pts.size(); ++i) {
        out.push_back(point_at(pts[i], space, path + "/points/" + std::to_string(i)));
      }
      bool convex = false;
      if (v.contains("convex")) {
        if (!v.at("convex").is_boolean()) fail(path + "/convex", "expected a boolean");
        convex = v.at("convex").get<bool>();
      }
      return Region::points(std::move(out), convex, tol);
    }
  } catch (const ConfigError&) {
    throw;
  } catch (const UsageError& e) {
    fail(path, e.what());
  }
  fail(path + "/variant", "unknown region variant '" + kind + "'");
}

AffineRule rule_at(const json& v, int dim, const std::string& path) {
  expect_object(v, path, {"A", "b"});
  const json& a = require(v, "A", path);
  if (!a.is_array() || static_cast<int>(a.size()) != dim) {
    fail(path + "/A", "expected " + std::to_string(dim) + " rows");
  }
  AffineRule r{Eigen::MatrixXd(dim, dim), vector_at(require(v, "b", path), dim, path + "/b")};
  for (int i = 0; i < dim; ++i) {
    r.A.row(i) = vector_at(a[i], dim, path + "/A/" + std::to_string(i)).transpose();
  }
  return r;
}

ProblemOptions options_at(const json& v, const Space& space, const std::string& path) {
  ProblemOptions o;
  expect_object(v, path,
                {"density", "depth", "eta", "seeds", "tolerances", "max_iter", "trace_path", "dist"});
  if (v.contains("density")) o.density = static_cast<int>(integer_at(v["density"], path + "/density", 2));
  if (v.contains("depth")) o.depth = static_cast<std::size_t>(integer_at(v["depth"], path + "/depth", 2));
  if (v.contains("max_iter")) {
    o.max_iter = static_cast<std::size_t>(integer_at(v["max_iter"], path + "/max_iter", 4));
  }
  if (v.contains("eta")) {
    o.eta = number_at(v["eta"], path + "/eta");
    if (!(o.eta > 0.0 && o.eta < 1.0)) fail(path + "/eta", "must lie in (0, 1)");
  }
  if (v.contains("dist")) {
    o.dist = number_at(v["dist"], path + "/dist");
    if (!(*o.dist >= 0.0)) fail(path + "/dist", "must be nonnegative");
  }
  if (v.contains("trace_path")) {
    if (!v["trace_path"].is_string()) fail(path + "/trace_path", "expected a string");
    o.trace_path = v["trace_path"].get<std::string>();
  }
  if (v.contains("seeds")) {
    const json& s = v["seeds"];
    if (!s.is_array()) fail(path + "/seeds", "expected an array of points");
    for (std::size_t i = 0; i < s.size(); ++i) {
      o.seeds.push_back(point_at(s[i], space, path + "/seeds/" + std::to_string(i)));
    }
  }
  if (v.contains("tolerances")) {
    const std::string tp = path + "/tolerances";
    const json& t = v["tolerances"];
    expect_object(t, tp, {"gap", "pair", "sup", "verify"});
    auto positive = [&](const char* key, double& out) {
      if (!t.contains(key)) return;
      out = number_at(t.at(key), tp + "/" + key);
      if (!(out > 0.0)) fail(tp + "/" + key, "must be positive");
    };
    positive("gap", o.gap_tol);
    positive("pair", o.pair_tol);
    positive("sup", o.sup_tol);
    positive("verify", o.verify_tol);
  }
  return o;
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json region_to_json(const Region& r) {
  json out{{"variant", r.kind()}, {"membership_tol", r.membership_tol()}};
  auto vec = [](const Eigen::VectorXd& v) {
    json a = json::array();
    for (double x : v) {
      if (std::isinf(x)) {
        a.push_back(x > 0 ? "inf" : "-inf");
      } else {
        a.push_back(x);
      }
    }
    return a;
  };
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FinitePointSet>) {
          out["points"] = json::array();
          for (const auto& p : s.points) out["points"].push_back(vec(p.coords()));
          out["convex"] = r.convex();
        } else if constexpr (std::is_same_v<T, Segment>) {
          out["a"] = vec(s.a.coords());
          out["b"] = vec(s.b.coords());
        } else {
          out["lower"] = vec(s.lower);
          out["upper"] = vec(s.upper);
        }
      },
      r.shape());
  return out;
}

json vec_json(const Eigen::VectorXd& v) { return json(std::vector<double>(v.begin(), v.end())); }

json rule_to_json(const AffineRule& r) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < r.A.rows(); ++i) rows.push_back(vec_json(r.A.row(i).transpose()));
  return {{"A", rows}, {"b", vec_json(r.b)}};
}

}  // namespace

double parse_number(const json& v, bool allow_infinite) {
  if (v.is_number()) return v.get<double>();
  if (!v.is_string()) throw ConfigError("expected a number or numeric string");
  const std::string s = v.get<std::string>();
  if (allow_infinite && (s == "inf" || s == "+inf")) return std::numeric_limits<double>::infinity();
  if (allow_infinite && s == "-inf") return -std::numeric_limits<double>::infinity();

  const auto slash = s.find('/');
  if (slash != std::string::npos) {
    long long num = 0, den = 0;
    const char* b = s.data();
    const char* mid = s.data() + slash;
    const char* e = s.data() + s.size();
    const char* nb = (b != mid && *b == '+') ? b + 1 : b;
    auto r1 = std::from_chars(nb, mid, num);
    auto r2 = std::from_chars(mid + 1, e, den);
    if (r1.ec != std::errc() || r1.ptr != mid || r2.ec != std::errc() || r2.ptr != e ||
        mid + 1 == e || *(mid + 1) == '-' || *(mid + 1) == '+') {
      throw ConfigError("malformed fraction '" + s + "'");
    }
    constexpr long long kExact = 1LL << 53;
    if (den == 0) throw ConfigError("fraction '" + s + "' has a zero denominator");
    if (num > kExact || num < -kExact || den > kExact) {
      throw ConfigError("fraction '" + s + "' exceeds exactly representable integers");
    }
    return static_cast<double>(num) / static_cast<double>(den);
  }
  double out = 0.0;
  const char* b = s.data();
  const char* e = s.data() + s.size();
  if (b != e && *b == '+') ++b;
  auto r = std::from_chars(b, e, out);
  if (s.empty() || r.ec != std::errc() || r.ptr != e || !std::isfinite(out)) {
    throw ConfigError("malformed number '" + s + "'");
  }
  return out;
}

Point parse_point_list(const Space& space, const std::string& text) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream is(text);
  while (std::getline(is, item, ',')) {
    const auto first = item.find_first_not_of(" \t");
    const auto last = item.find_last_not_of(" \t");
    parts.push_back(first == std::string::npos ? "" : item.substr(first, last - first + 1));
  }
  if (static_cast<int>(parts.size()) != space.dim()) {
    throw ConfigError("point '" + text + "' needs " + std::to_string(space.dim()) +
                      " comma-separated coordinates");
  }
  Eigen::VectorXd c(space.dim());
  for (int i = 0; i < space.dim(); ++i) c[i] = parse_number(json(parts[i]));
  return Point(space, c);
}

Problem parse_problem(const std::string& text, const std::string& name) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte);
    std::ostringstream os;
    os << "parse error at line " << line << ", column " << col;
    throw ConfigError(os.str(), line, col);
  }
  expect_object(doc, "", {"space", "regions", "map", "options"});

  const json& js = require(doc, "space", "");
  expect_object(js, "/space", {"dim", "p"});
  const int dim = static_cast<int>(integer_at(require(js, "dim", "/space"), "/space/dim", 1));
  const double p = number_at(require(js, "p", "/space"), "/space/p");
  if (!(p >= 2.0)) fail("/space/p", "must be >= 2");
  const Space space(dim, p);

  const json& jr = require(doc, "regions", "");
  expect_object(jr, "/regions", {"omega", "delta"});
  Region omega = region_at(require(jr, "omega", "/regions"), space, "/regions/omega");
  Region delta = region_at(require(jr, "delta", "/regions"), space, "/regions/delta");

  const json& jm = require(doc, "map", "");
  expect_object(jm, "/map", {"omega_rule", "delta_rule", "table"});
  std::optional<CyclicMap> map;
  if (jm.contains("table")) {
    if (jm.contains("omega_rule") || jm.contains("delta_rule")) {
      fail("/map", "give either a table or a pair of affine rules, not both");
    }
    const json& jt = jm["table"];
    if (!jt.is_array()) fail("/map/table", "expected an array");
    TableRule table;
    for (std::size_t i = 0; i < jt.size(); ++i) {
      const std::string ep = "/map/table/" + std::to_string(i);
      expect_object(jt[i], ep, {"from", "to"});
      table.entries.emplace_back(point_at(require(jt[i], "from", ep), space, ep + "/from"),
                                 point_at(require(jt[i], "to", ep), space, ep + "/to"));
    }
    try {
      map.emplace(std::move(omega), std::move(delta), std::move(table));
    } catch (const UsageError& e) {
      fail("/map/table", e.what());
    }
  } else {
    AffineRule ro = rule_at(require(jm, "omega_rule", "/map"), dim, "/map/omega_rule");
    AffineRule rd = rule_at(require(jm, "delta_rule", "/map"), dim, "/map/delta_rule");
    map.emplace(std::move(omega), std::move(delta), std::move(ro), std::move(rd));
  }

  ProblemOptions opts;
  if (doc.contains("options")) opts = options_at(doc["options"], space, "/options");
  return Problem{name, std::move(*map), std::move(opts)};
}

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str(), path);
}

Problem builtin_problem(const std::string& name) {
  if (name == "paper-example") return parse_problem(kPaperExample, name);
  throw ConfigError("unknown built-in problem '" + name + "'");
}

std::vector<std::string> builtin_problem_names() { return {"paper-example"}; }

json problem_to_json(const Problem& p) {
  const CyclicMap& m = p.map;
  json map;
  if (m.is_table()) {
    map["table"] = json::array();
    for (const auto& [in, out] : m.table().entries) {
      map["table"].push_back({{"from", vec_json(in.coords())}, {"to", vec_json(out.coords())}});
    }
  } else {
    map["omega_rule"] = rule_to_json(m.rule(Side::Omega));
    map["delta_rule"] = rule_to_json(m.rule(Side::Delta));
  }
  const ProblemOptions& o = p.options;
  json seeds = json::array();
  for (const auto& s : o.seeds) seeds.push_back(vec_json(s.coords()));
  json options{{"density", o.density},
               {"depth", o.depth},
               {"eta", o.eta},
               {"seeds", seeds},
               {"tolerances",
                {{"gap", o.gap_tol}, {"pair", o.pair_tol}, {"sup", o.sup_tol}, {"verify", o.verify_tol}}},
               {"max_iter", o.max_iter}};
  if (o.trace_path) options["trace_path"] = *o.trace_path;
  if (o.dist) options["dist"] = *o.dist;
  return {{"name", p.name},
          {"space", {{"dim", m.space().dim()}, {"p", m.space().p()}}},
          {"regions", {{"omega", region_to_json(m.omega())}, {"delta", region_to_json(m.delta())}}},
          {"map", map},
          {"options", options}};
}

}  // namespace proxima
