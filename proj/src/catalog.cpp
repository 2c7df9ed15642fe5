#include "qda/catalog.hpp"
#include <fstream>
#include <mutex>
#include <sstream>

namespace qda {

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

ParamDef parse_paramdef(const std::string& body, const std::string& ctx) {
  auto eq = body.find('=');
  if (eq == std::string::npos)
    throw std::runtime_error("catalog " + ctx + ": expected name = expr");
  std::string name = trim(body.substr(0, eq));
  std::string src = trim(body.substr(eq + 1));
  auto p = param_from_name(name);
  if (!p) throw std::runtime_error("catalog " + ctx + ": unknown parameter " + name);
  return {*p, parse_expr(src), src};
}

std::vector<FamilySpec> load_catalog() {
  std::ifstream in(std::string(QDA_DATA_DIR) + "/families.txt");
  if (!in) throw std::runtime_error("cannot open family catalog file");
  std::vector<FamilySpec> out;
  FamilySpec* cur = nullptr;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string t = trim(line);
    if (t.empty() || t[0] == '#') continue;
    std::string ctx = "line " + std::to_string(lineno);
    if (t.front() == '[' && t.back() == ']') {
      out.emplace_back();
      cur = &out.back();
      cur->id = trim(t.substr(1, t.size() - 2));
      continue;
    }
    if (!cur) throw std::runtime_error("catalog " + ctx + ": entry before any [id]");
    auto colon = t.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("catalog " + ctx + ": expected key: value");
    std::string key = trim(t.substr(0, colon));
    std::string val = trim(t.substr(colon + 1));
    if (key == "hermitian") cur->hermitian = (val == "yes");
    else if (key == "algebra") cur->expected_algebra = val;
    else if (key == "case") cur->expected_case = std::stoi(val);
    else if (key == "domain") {
      std::istringstream is(val);
      if (!(is >> cur->lo >> cur->hi))
        throw std::runtime_error("catalog " + ctx + ": bad domain");
    } else if (key == "X") { cur->X = parse_expr(val); cur->Xs = val; }
    else if (key == "Y") { cur->Y = parse_expr(val); cur->Ys = val; }
    else if (key == "Z") { cur->Z = parse_expr(val); cur->Zs = val; }
    else if (key == "Q") { cur->Q = parse_expr(val); cur->Qs = val; }
    else if (key == "Vreg") { cur->Vreg = parse_expr(val); cur->Vregs = val; }
    else if (key == "Vsing") { cur->Vsing = parse_expr(val); cur->Vsings = val; }
    else if (key == "free") cur->free_params.push_back(parse_paramdef(val, ctx));
    else if (key == "derive") cur->derived.push_back(parse_paramdef(val, ctx));
    else if (key == "constraint") {
      auto sp = val.find(' ');
      if (sp == std::string::npos)
        throw std::runtime_error("catalog " + ctx + ": bad constraint");
      std::string kind = val.substr(0, sp);
      std::string src = trim(val.substr(sp + 1));
      Constraint c;
      c.src = src;
      c.expr = parse_expr(src);
      if (kind == "zero") c.kind = Constraint::zero;
      else if (kind == "nonzero") c.kind = Constraint::nonzero;
      else if (kind == "positive") c.kind = Constraint::positive;
      else if (kind == "real") c.kind = Constraint::real;
      else if (kind == "imaginary") c.kind = Constraint::imaginary;
      else throw std::runtime_error("catalog " + ctx + ": unknown constraint kind");
      cur->constraints.push_back(std::move(c));
    } else {
      throw std::runtime_error("catalog " + ctx + ": unknown key " + key);
    }
  }
  if (out.empty()) throw std::runtime_error("empty family catalog");
  return out;
}

}  // namespace

const std::vector<FamilySpec>& catalog() {
  static const std::vector<FamilySpec> c = load_catalog();
  return c;
}

const FamilySpec& family(const std::string& id) {
  for (const auto& f : catalog())
    if (f.id == id) return f;
  throw std::invalid_argument("unknown family id: " + id);
}

std::complex<double> parse_complex(const std::string& s) {
  std::string t = trim(s);
  if (t.empty()) throw std::invalid_argument("empty number");
  // forms: R, Ri, R+Si, R-Si (R, S decimal literals; bare i allowed)
  auto parse_part = [](std::string p, bool imag_marker) -> double {
    if (imag_marker) {
      if (p == "" || p == "+") return 1.0;
      if (p == "-") return -1.0;
    }
    std::size_t used = 0;
    double v = std::stod(p, &used);
    if (used != p.size()) throw std::invalid_argument("bad number: " + p);
    return v;
  };
  if (t.back() == 'i' || t.back() == 'I') {
    std::string body = t.substr(0, t.size() - 1);
    // find split between real and imaginary parts (sign not at position 0,
    // not following an exponent marker)
    for (std::size_t p = body.size(); p-- > 1;) {
      if ((body[p] == '+' || body[p] == '-') &&
          body[p - 1] != 'e' && body[p - 1] != 'E') {
        return {parse_part(body.substr(0, p), false),
                parse_part(body.substr(p), true)};
      }
    }
    return {0.0, parse_part(body, true)};
  }
  return {parse_part(t, false), 0.0};
}

ParamSet resolve_params(const FamilySpec& f, const std::vector<ParamOverride>& ov) {
  ParamSet ps;
  for (const auto& d : f.free_params) ps.put(d.name, d.value.eval(0.0, ps));
  std::array<bool, kNumParams> overridden{};
  for (const auto& o : ov) {
    auto p = param_from_name(o.name);
    if (!p) throw std::invalid_argument("unknown parameter: " + o.name);
    ps.put(*p, o.value);
    overridden[static_cast<int>(*p)] = true;
  }
  for (const auto& d : f.derived)
    if (!overridden[static_cast<int>(d.name)]) ps.put(d.name, d.value.eval(0.0, ps));
  return ps;
}

void check_constraints(const FamilySpec& f, const ParamSet& ps) {
  const double tol = 1e-10;
  for (const auto& c : f.constraints) {
    std::complex<double> v = c.expr.eval(0.0, ps);
    bool ok = true;
    switch (c.kind) {
      case Constraint::zero: ok = std::abs(v) <= tol; break;
      case Constraint::nonzero: ok = std::abs(v) > tol; break;
      case Constraint::positive:
        ok = std::abs(v.imag()) <= tol && v.real() > tol;
        break;
      case Constraint::real: ok = std::abs(v.imag()) <= tol; break;
      case Constraint::imaginary: ok = std::abs(v.real()) <= tol; break;
    }
    if (!ok) {
      static const char* kinds[] = {"zero", "nonzero", "positive", "real",
                                    "imaginary"};
      throw ConstraintError(std::string(kinds[c.kind]) + " " + c.src,
                            "constraint violated for family " + f.id + ": require " +
                                kinds[c.kind] + "(" + c.src + ")");
    }
  }
}

ConsistencyInput consistency_input(const FamilySpec& f, const ParamSet& ps) {
  ConsistencyInput in;
  in.X = f.X;
  in.Y = f.Y;
  in.Z = f.Z;
  in.Q = f.Q;
  in.Vreg = f.Vreg;
  in.Vsing = f.Vsing;
  in.params = ps;
  return in;
}

}  // namespace qda
