#ifndef DYNGROUP_IO_HPP
#define DYNGROUP_IO_HPP

// JSON wire format. Matrices are row-major arrays of 16 doubles, four-vectors
// are [x, y, z, t]. Output numbers use 17 significant digits.

#include <cmath>
#include <cstdio>
#include <string>

#include "json.hpp"

#include "dyngroup/errors.hpp"
#include "dyngroup/extended.hpp"
#include "dyngroup/minkowski.hpp"
#include "dyngroup/poincare.hpp"
#include "dyngroup/reduction.hpp"
#include "dyngroup/twinfold.hpp"

namespace dyngroup::io {

using json = nlohmann::json;

namespace detail {

inline const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw ParseError(std::string("missing field \"") + key + "\"");
  }
  return j.at(key);
}

inline double number(const json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + " must be a number");
  const double x = v.get<double>();
  if (!std::isfinite(x)) throw ParseError(std::string(what) + " must be finite");
  return x;
}

inline int sign(const json& v, const char* what) {
  if (!v.is_number()) throw ParseError(std::string(what) + " must be +1 or -1");
  const double x = v.get<double>();
  if (x != 1.0 && x != -1.0) throw ParseError(std::string(what) + " must be +1 or -1");
  return static_cast<int>(x);
}

inline void check_array(const json& v, std::size_t n, const char* what) {
  if (!v.is_array() || v.size() != n) {
    throw ParseError(std::string(what) + " must be an array of " + std::to_string(n) + " numbers");
  }
}

}  // namespace detail

inline Mat4 mat4_from_json(const json& v, const char* what = "matrix") {
  detail::check_array(v, 16, what);
  Mat4 m;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) m(r, c) = detail::number(v[static_cast<std::size_t>(4 * r + c)], what);
  }
  return m;
}

inline Vec4 vec4_from_json(const json& v, const char* what = "four-vector") {
  detail::check_array(v, 4, what);
  Vec4 x;
  for (int i = 0; i < 4; ++i) x[i] = detail::number(v[static_cast<std::size_t>(i)], what);
  return x;
}

inline Scalars scalars_from_json(const json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
  Scalars out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(detail::number(x, what));
  return out;
}

inline Mat4 antisymmetric_from_json(const json& v, const char* what, double tol) {
  const Mat4 m = mat4_from_json(v, what);
  if (!is_antisymmetric(m, tol)) throw ParseError(std::string(what) + " must be antisymmetric");
  return m;
}

inline json to_json(const Mat4& m) {
  json a = json::array();
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) a.push_back(m(r, c));
  }
  return a;
}

inline json to_json(const Vec4& v) { return json::array({v[0], v[1], v[2], v[3]}); }
inline json to_json(const Vec3& v) { return json::array({v[0], v[1], v[2]}); }

inline json scalars_to_json(const Scalars& v) {
  json a = json::array();
  for (double x : v) a.push_back(x);
  return a;
}

// Lorentz parts raise NotLorentzError (not ParseError) when ᵗLGL ≠ G.

inline PoincareElement poincare_from_json(const json& j, double tol = kDefaultTol) {
  const Mat4 l = mat4_from_json(detail::field(j, "L"), "L");
  const Vec4 c = j.contains("C") ? vec4_from_json(j.at("C"), "C") : Vec4::Zero();
  return {LorentzMatrix(l, tol), c};
}

inline json to_json(const PoincareElement& g) {
  return {{"L", to_json(g.L.matrix())}, {"C", to_json(g.C)}};
}

inline LieElement lie_from_json(const json& j, double tol = kDefaultTol) {
  return {antisymmetric_from_json(detail::field(j, "omega"), "omega", tol),
          vec4_from_json(detail::field(j, "gamma"), "gamma")};
}

inline json to_json(const LieElement& d) {
  return {{"omega", to_json(d.omega)}, {"gamma", to_json(d.gamma)}};
}

inline Momentum momentum_from_json(const json& j, double tol = kDefaultTol) {
  const Mat4 m = j.contains("M") ? antisymmetric_from_json(j.at("M"), "M", tol) : Mat4::Zero();
  return {m, vec4_from_json(detail::field(j, "P"), "P")};
}

inline json to_json(const Momentum& m) {
  return {{"M", to_json(m.M)}, {"P", to_json(m.P)}};
}

inline ExtendedElement extended_from_json(const json& j, double tol = kDefaultTol) {
  ExtendedElement g;
  g.nu = j.contains("nu") ? detail::sign(j.at("nu"), "nu") : 1;
  g.phi = scalars_from_json(detail::field(j, "phi"), "phi");
  g.L = LorentzMatrix(mat4_from_json(detail::field(j, "L"), "L"), tol);
  g.C = j.contains("C") ? vec4_from_json(j.at("C"), "C") : Vec4::Zero();
  return g;
}

inline json to_json(const ExtendedElement& g) {
  return {{"nu", g.nu}, {"phi", scalars_to_json(g.phi)}, {"L", to_json(g.L.matrix())},
          {"C", to_json(g.C)}};
}

inline ChargedMomentum charged_from_json(const json& j, double tol = kDefaultTol) {
  const Momentum pm = momentum_from_json(j, tol);
  return {scalars_from_json(detail::field(j, "q"), "q"), pm.M, pm.P};
}

inline json to_json(const ChargedMomentum& m) {
  return {{"q", scalars_to_json(m.q)}, {"M", to_json(m.M)}, {"P", to_json(m.P)}};
}

/// Accepts {"mu", "L_o"} or a full Lorentz slot {"L"} that is split into mu·L_o.
inline TwinElement twin_from_json(const json& j, double tol = kDefaultTol) {
  const int nu = j.contains("nu") ? detail::sign(j.at("nu"), "nu") : 1;
  const Scalars phi = j.contains("phi") ? scalars_from_json(j.at("phi"), "phi") : Scalars{};
  const Vec4 c = j.contains("C") ? vec4_from_json(j.at("C"), "C") : Vec4::Zero();
  if (j.is_object() && j.contains("L") && !j.contains("L_o")) {
    return TwinElement::from_lorentz_slot(nu, phi, LorentzMatrix(mat4_from_json(j.at("L"), "L"), tol),
                                          c);
  }
  const int mu = j.contains("mu") ? detail::sign(j.at("mu"), "mu") : 1;
  const LorentzMatrix lo(mat4_from_json(detail::field(j, "L_o"), "L_o"), tol);
  if (!lo.orthochron()) throw ParseError("L_o must be orthochron");
  return {mu, nu, phi, lo, c};
}

inline json to_json(const TwinElement& g) {
  return {{"mu", g.mu()}, {"nu", g.nu()}, {"phi", scalars_to_json(g.phi())},
          {"L_o", to_json(g.L_o().matrix())}, {"C", to_json(g.C())}};
}

/// Twin momenta: "q" optional (uncharged group), "fold" optional (default +1).
inline ParticleState particle_from_json(const json& j, double tol = kDefaultTol) {
  ParticleState s;
  s.fold = j.contains("fold") ? detail::sign(j.at("fold"), "fold") : 1;
  const Momentum pm = momentum_from_json(j, tol);
  s.momentum = {j.contains("q") ? scalars_from_json(j.at("q"), "q") : Scalars{}, pm.M, pm.P};
  return s;
}

inline json to_json(const ParticleState& s) {
  json out = to_json(s.momentum);
  out["fold"] = s.fold;
  return out;
}

inline json to_json(const CanonicalMomentum& c) {
  return {{"s", c.s}, {"p", c.p}, {"E", c.E}, {"g_reducing", to_json(c.g_reducing)}};
}

namespace detail {

inline void format_double(std::string& out, double x) {
  if (!std::isfinite(x)) {
    out += "null";
    return;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x == 0.0 ? 0.0 : x);
  out += buf;
}

inline bool is_flat_array(const json& v) {
  if (!v.is_array()) return false;
  for (const auto& x : v) {
    if (x.is_structured()) return false;
  }
  return true;
}

inline void write(std::string& out, const json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case json::value_t::number_float:
      format_double(out, v.get<double>());
      return;
    case json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += inner;
        out += json(it.key()).dump();
        out += ": ";
        write(out, it.value(), indent + 1);
      }
      out += "\n" + pad + "}";
      return;
    }
    case json::value_t::array: {
      if (is_flat_array(v)) {
        out += "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
          if (i) out += ", ";
          write(out, v[i], indent + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",\n";
        out += inner;
        write(out, v[i], indent + 1);
      }
      out += "\n" + pad + "]";
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace detail

/// Pretty-printed JSON with every double at 17 significant digits.
inline std::string dump(const json& v) {
  std::string out;
  detail::write(out, v, 0);
  out += "\n";
  return out;
}

}  // namespace dyngroup::io

#endif  // DYNGROUP_IO_HPP
