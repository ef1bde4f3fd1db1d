#include "gcgeo/frame.hpp"

#include "gcgeo/error.hpp"

#include <cctype>
#include <sstream>

namespace gcgeo {

FrameAlgebra FrameAlgebra::coordinate(unsigned dim) {
  FrameAlgebra f;
  f.dim_ = dim;
  f.coordinate_.assign(dim, true);
  f.d_gen_.assign(dim, Polyform(dim));
  return f;
}

FrameAlgebra FrameAlgebra::invariant(unsigned dim, std::vector<Polyform> d_gen) {
  if (d_gen.size() != dim) fail(errc::input, "need one structure form per generator");
  FrameAlgebra f;
  f.dim_ = dim;
  f.coordinate_.assign(dim, false);
  f.d_gen_ = std::move(d_gen);
  for (unsigned k = 1; k <= dim; ++k) {
    const Polyform& g = f.d_gen_[k - 1];
    if (g.dim() != dim) fail(errc::input, "structure form dimension mismatch");
    if (!g.is_zero() && !g.is_homogeneous(2))
      fail(errc::input, "structure form d(eps_" + std::to_string(k) + ") must be degree 2");
    for (const auto& [m, c] : g.terms())
      if (!c.is_constant())
        fail(errc::mode, "invariant-mode structure constants must be constant");
  }
  return f;
}

FrameMode FrameAlgebra::mode() const {
  return is_pure_coordinate() ? FrameMode::coordinate : FrameMode::invariant;
}

bool FrameAlgebra::is_pure_coordinate() const {
  for (bool c : coordinate_)
    if (!c) return false;
  return true;
}

bool FrameAlgebra::is_pure_invariant() const {
  for (bool c : coordinate_)
    if (c) return false;
  return true;
}

bool FrameAlgebra::coefficient_legal(const Poly& p) const {
  if (p.nvars() != dim_) return false;
  for (const auto& [e, c] : p.terms())
    for (unsigned i = 0; i < dim_; ++i)
      if (e[i] > 0 && !coordinate_[i]) return false;
  return true;
}

void FrameAlgebra::require_legal(const Poly& p, const std::string& where) const {
  if (!coefficient_legal(p))
    fail(errc::mode, where + ": coefficient uses a variable of a non-coordinate generator");
}

void FrameAlgebra::require_legal(const Polyform& f, const std::string& where) const {
  if (f.dim() != dim_) fail(errc::input, where + ": frame dimension mismatch");
  for (const auto& [m, c] : f.terms()) require_legal(c, where);
}

void FrameAlgebra::require_legal(const VectorField& v, const std::string& where) const {
  if (v.dim() != dim_) fail(errc::input, where + ": frame dimension mismatch");
  for (unsigned i = 0; i < dim_; ++i) require_legal(v[i], where);
}

Polyform FrameAlgebra::d(const Polyform& a) const {
  require_legal(a, "d");
  Polyform out(dim_);
  for (const auto& [m, c] : a.terms()) {
    // Coefficient part: sum_i (dc/dx_i) eps_i ^ eps_M.
    for (unsigned i = 0; i < dim_; ++i) {
      if (!coordinate_[i]) continue;
      Poly dc = c.derivative(i);
      if (dc.is_zero()) continue;
      int sign = blade::wedge_sign(blade::Mask(1) << i, m);
      if (sign == 0) continue;
      out.add_term((blade::Mask(1) << i) | m, sign < 0 ? -dc : dc);
    }
    // Generator part: sum_j (-1)^{j-1} d(eps_{k_j}) ^ eps_{M \ k_j}.
    auto idx = blade::indices(m);
    for (unsigned j = 0; j < idx.size(); ++j) {
      const Polyform& dg = d_gen_[idx[j] - 1];
      if (dg.is_zero()) continue;
      blade::Mask rest = m & ~(blade::Mask(1) << (idx[j] - 1));
      for (const auto& [gm, gc] : dg.terms()) {
        int sign = blade::wedge_sign(gm, rest);
        if (sign == 0) continue;
        if (j % 2 == 1) sign = -sign;
        Poly coeff = gc * c;
        out.add_term(gm | rest, sign < 0 ? -coeff : coeff);
      }
    }
  }
  return out;
}

Poly FrameAlgebra::apply_vector(const VectorField& x, const Poly& f) const {
  Poly out(dim_);
  for (unsigned i = 0; i < dim_; ++i) {
    if (!coordinate_[i]) continue;
    out += x[i] * f.derivative(i);
  }
  return out;
}

VectorField FrameAlgebra::lie_bracket(const VectorField& x, const VectorField& y) const {
  require_legal(x, "lie_bracket");
  require_legal(y, "lie_bracket");
  VectorField out(dim_);
  // [X,Y]^k = X(Y^k) - Y(X^k) - (d eps_k)(X,Y), the dual of the Koszul formula.
  for (unsigned k = 1; k <= dim_; ++k) {
    Poly comp = apply_vector(x, y[k - 1]) - apply_vector(y, x[k - 1]);
    const Polyform& dg = d_gen_[k - 1];
    if (!dg.is_zero()) {
      Polyform pairing = contract(y, contract(x, dg));
      comp -= pairing.coefficient(0);
    }
    out[k - 1] = comp;
  }
  return out;
}

Polyform FrameAlgebra::lie_derivative(const VectorField& x, const Polyform& a) const {
  return contract(x, d(a)) + d(contract(x, a));
}

FrameAlgebra FrameAlgebra::extend_circle(const Polyform& F) const {
  require_legal(F, "extend_circle");
  if (!F.is_zero() && !F.is_homogeneous(2))
    fail(errc::input, "connection curvature must be a 2-form");
  if (!d(F).is_zero()) fail(errc::twist, "connection curvature must be closed");
  FrameAlgebra ext;
  ext.dim_ = dim_ + 1;
  ext.coordinate_ = coordinate_;
  ext.coordinate_.push_back(false);
  ext.d_gen_.reserve(dim_ + 1);
  for (const auto& g : d_gen_) ext.d_gen_.push_back(ext.lift_form(g));
  ext.d_gen_.push_back(ext.lift_form(F));
  return ext;
}

Polyform FrameAlgebra::lift_form(const Polyform& base_form) const {
  if (base_form.dim() > dim_) fail(errc::input, "lift into a smaller frame");
  Polyform out(dim_);
  for (const auto& [m, c] : base_form.terms()) out.add_term(m, c.extend_vars(dim_));
  return out;
}

Poly FrameAlgebra::lift_poly(const Poly& base_poly) const {
  return base_poly.extend_vars(dim_);
}

VectorField FrameAlgebra::lift_vector(const VectorField& base_vec) const {
  VectorField out(dim_);
  for (unsigned i = 0; i < base_vec.dim(); ++i) out[i] = base_vec[i].extend_vars(dim_);
  return out;
}

FrameAlgebra FrameAlgebra::direct_sum(const FrameAlgebra& a, const FrameAlgebra& b) {
  FrameAlgebra f;
  f.dim_ = a.dim_ + b.dim_;
  f.coordinate_ = a.coordinate_;
  f.coordinate_.insert(f.coordinate_.end(), b.coordinate_.begin(), b.coordinate_.end());
  f.d_gen_.reserve(f.dim_);
  for (const auto& g : a.d_gen_) {
    Polyform lifted(f.dim_);
    for (const auto& [m, c] : g.terms()) lifted.add_term(m, c.extend_vars(f.dim_));
    f.d_gen_.push_back(lifted);
  }
  for (const auto& g : b.d_gen_) {
    Polyform lifted(f.dim_);
    for (const auto& [m, c] : g.terms())
      lifted.add_term(m << a.dim_, c.shift_vars(f.dim_, a.dim_));
    f.d_gen_.push_back(lifted);
  }
  return f;
}

namespace {

struct NilParser {
  const std::string& s;
  size_t pos = 0;

  explicit NilParser(const std::string& text) : s(text) {}

  [[noreturn]] void error(const std::string& msg) const {
    fail(errc::parse, "nil spec parse error at position " + std::to_string(pos) + ": " + msg);
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  void expect(char c) {
    if (peek() != c) error(std::string("expected '") + c + "'");
    ++pos;
  }
  unsigned integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) error("expected digit");
    return static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
  }

  // term := digit digit | int "." int
  std::pair<unsigned, unsigned> term() {
    skip_ws();
    size_t start = pos;
    unsigned first = integer();
    skip_ws();
    if (pos < s.size() && s[pos] == '.') {
      ++pos;
      unsigned second = integer();
      return {first, second};
    }
    // Compact form: exactly two digits.
    std::string digits = s.substr(start, pos - start);
    if (digits.size() != 2) {
      pos = start;
      error("compact token must be exactly two digits (use 'i.j' beyond dimension 9)");
    }
    return {static_cast<unsigned>(digits[0] - '0'), static_cast<unsigned>(digits[1] - '0')};
  }

  // entry := "0" | signed_term (("+"|"-") term)*
  Polyform entry(unsigned dim) {
    skip_ws();
    if (peek() == '0') {
      size_t save = pos;
      ++pos;
      skip_ws();
      if (pos < s.size() && s[pos] == '.') {
        pos = save;  // "0.x" is a dotted index, and index 0 is out of range
      } else {
        return Polyform(dim);
      }
    }
    Polyform acc(dim);
    bool first = true;
    while (true) {
      int sign = 1;
      char c = peek();
      if (c == '+' || c == '-') {
        sign = (c == '-') ? -1 : 1;
        ++pos;
      } else if (!first) {
        break;
      }
      size_t tpos = pos;
      auto [i, j] = term();
      if (i == 0 || i > dim || j == 0 || j > dim) {
        pos = tpos;
        error("index out of range 1.." + std::to_string(dim));
      }
      if (i == j) {
        pos = tpos;
        error("duplicate index in token");
      }
      Polyform w = wedge(Polyform::generator(dim, i), Polyform::generator(dim, j));
      acc += (sign < 0) ? -w : w;
      first = false;
    }
    return acc;
  }
};

}  // namespace

FrameAlgebra parse_nil(const std::string& spec, std::optional<unsigned> frame_dim_hint) {
  // First pass: count entries to find the dimension.
  unsigned entries = 1;
  int depth = 0;
  bool seen_open = false;
  for (char c : spec) {
    if (c == '(') { depth++; seen_open = true; }
    if (c == ')') depth--;
    if (c == ',' && depth == 1) entries++;
  }
  if (!seen_open) fail(errc::parse, "nil spec parse error at position 0: expected '('");
  unsigned dim = frame_dim_hint.value_or(entries);
  if (entries > dim)
    fail(errc::parse, "nil spec has more entries than the hinted dimension");

  NilParser p(spec);
  p.expect('(');
  std::vector<Polyform> d_gen;
  d_gen.reserve(dim);
  for (unsigned k = 0; k < entries; ++k) {
    if (k > 0) p.expect(',');
    d_gen.push_back(p.entry(dim));
  }
  p.expect(')');
  p.skip_ws();
  if (p.pos != spec.size()) p.error("trailing characters");
  for (unsigned k = entries; k < dim; ++k) d_gen.push_back(Polyform(dim));
  return FrameAlgebra::invariant(dim, std::move(d_gen));
}

std::string nil_string(const FrameAlgebra& frame) {
  if (!frame.is_pure_invariant())
    fail(errc::input, "nil notation is defined for invariant frames only");
  unsigned dim = frame.dim();
  std::ostringstream os;
  os << "(";
  for (unsigned k = 1; k <= dim; ++k) {
    if (k > 1) os << ",";
    const Polyform& g = frame.d_generator(k);
    if (g.is_zero()) {
      os << "0";
      continue;
    }
    bool first = true;
    for (const auto& [m, c] : g.terms()) {
      Scalar v = c.constant_value();
      if (!(v == Scalar(1) || v == Scalar(-1)))
        fail(errc::input, "structure constants outside {+1,-1} have no nil notation");
      auto idx = blade::indices(m);
      bool neg = (v == Scalar(-1));
      if (neg)
        os << "-";
      else if (!first)
        os << "+";
      if (dim <= 9)
        os << idx[0] << idx[1];
      else
        os << idx[0] << "." << idx[1];
      first = false;
    }
  }
  os << ")";
  return os.str();
}

std::vector<FrameCheck> validate_frame(const FrameAlgebra& frame) {
  std::vector<FrameCheck> out;
  for (unsigned k = 1; k <= frame.dim(); ++k) {
    FrameCheck c;
    c.generator = k;
    Polyform dd = frame.d(frame.d(Polyform::generator(frame.dim(), k)));
    c.ok = dd.is_zero();
    c.residual = dd;
    out.push_back(std::move(c));
  }
  return out;
}

bool frame_ok(const std::vector<FrameCheck>& checks) {
  for (const auto& c : checks)
    if (!c.ok) return false;
  return true;
}

}  // namespace gcgeo
