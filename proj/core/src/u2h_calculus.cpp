// Copyright 2026 The qdouble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qdouble/u2h_calculus.hpp"

#include <random>
#include <sstream>

namespace qdouble::u2h {

namespace {

constexpr int kX = 0, kY = 1, kZ = 2, kT = 3, kR = 4;

using Xyz = std::array<int, 3>;
using XyzPoly = std::map<Xyz, Scalar>;

Scalar half_h() { return h() / Scalar(2); }

// Normal ordering of a word in x, y, z with u v = v u + [u, v] for u > v.
const XyzPoly& normal_xyz(const std::vector<int>& w) {
  thread_local std::map<std::vector<int>, XyzPoly> memo;
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  XyzPoly out;
  std::size_t i = 0;
  while (i + 1 < w.size() && w[i] <= w[i + 1]) ++i;
  if (i + 1 >= w.size()) {
    Xyz e{0, 0, 0};
    for (int l : w) ++e[static_cast<std::size_t>(l)];
    out.emplace(e, Scalar(1));
  } else {
    auto swapped = w;
    std::swap(swapped[i], swapped[i + 1]);
    out = normal_xyz(swapped);
    // [y,x] = -h z, [z,y] = -h x, [z,x] = h y.
    const int u = w[i], v = w[i + 1];
    int g = 0;
    Scalar c = h();
    if (u == kY && v == kX) g = kZ, c = Scalar(-1) * h();
    if (u == kZ && v == kY) g = kX, c = Scalar(-1) * h();
    if (u == kZ && v == kX) g = kY;
    std::vector<int> shorter(w.begin(), w.begin() + static_cast<long>(i));
    shorter.push_back(g);
    shorter.insert(shorter.end(), w.begin() + static_cast<long>(i) + 2, w.end());
    for (const auto& [e, s] : normal_xyz(shorter)) {
      auto& slot = out[e];
      slot = slot + c * s;
      if (slot.is_zero()) out.erase(e);
    }
  }
  return memo.emplace(w, std::move(out)).first->second;
}

// x^2 + y^2 + z^2 - h^2/4.
const PBWElement& radius_square() {
  thread_local const PBWElement r2 = PBWElement(Mono{2, 0, 0, 0, 0}, Scalar(1)) +
                                     PBWElement(Mono{0, 2, 0, 0, 0}, Scalar(1)) +
                                     PBWElement(Mono{0, 0, 2, 0, 0}, Scalar(1)) +
                                     PBWElement(Scalar(-1) * h() * h() / Scalar(4));
  return r2;
}

PBWElement reduce_radius(const Mono& m) {
  if (m[4] < 2) return PBWElement(m, Scalar(1));
  return reduce_radius(Mono{m[0], m[1], m[2], m[3], m[4] - 2}) * radius_square();
}

PBWElement mono_product(const Mono& a, const Mono& b) {
  std::vector<int> w;
  for (int l = 0; l < 3; ++l) w.insert(w.end(), static_cast<std::size_t>(a[static_cast<std::size_t>(l)]), l);
  for (int l = 0; l < 3; ++l) w.insert(w.end(), static_cast<std::size_t>(b[static_cast<std::size_t>(l)]), l);
  const int d = a[3] + b[3];
  const int e = a[4] + b[4];
  PBWElement out;
  for (const auto& [xyz, c] : normal_xyz(w)) {
    out += c * reduce_radius(Mono{xyz[0], xyz[1], xyz[2], d, e});
  }
  return out;
}

PBWElement generator(int l) {
  Mono m{0, 0, 0, 0, 0};
  m[static_cast<std::size_t>(l)] = 1;
  return PBWElement(m, Scalar(1));
}

struct Push {
  int coef_sign;
  Derivative target;
};

// d g - g d = coef_sign (h/2) target, for g in x, y, z, t.
Push push_rule(Derivative d, int g) {
  using D = Derivative;
  static const Push table[4][4] = {
      /* Dx */ {{1, D::DtHat}, {1, D::Dz}, {-1, D::Dy}, {1, D::Dx}},
      /* Dy */ {{-1, D::Dz}, {1, D::DtHat}, {1, D::Dx}, {1, D::Dy}},
      /* Dz */ {{1, D::Dy}, {-1, D::Dx}, {1, D::DtHat}, {1, D::Dz}},
      /* DtHat */ {{-1, D::Dx}, {-1, D::Dy}, {-1, D::Dz}, {1, D::DtHat}},
  };
  return table[static_cast<int>(d)][g];
}

struct PatternEntry {
  int sign;
  Derivative d;
};

PatternEntry pattern(int i, int j) {
  using D = Derivative;
  static const PatternEntry p[4][4] = {
      {{1, D::DtHat}, {1, D::Dx}, {1, D::Dy}, {1, D::Dz}},
      {{-1, D::Dx}, {1, D::DtHat}, {-1, D::Dz}, {1, D::Dy}},
      {{-1, D::Dy}, {1, D::Dz}, {1, D::DtHat}, {-1, D::Dx}},
      {{-1, D::Dz}, {-1, D::Dy}, {1, D::Dx}, {1, D::DtHat}},
  };
  return p[i][j];
}

int row0_column(Derivative d) {
  switch (d) {
    case Derivative::DtHat: return 0;
    case Derivative::Dx: return 1;
    case Derivative::Dy: return 2;
    case Derivative::Dz: return 3;
  }
  return 0;
}

// Row 0 of dhat(rh): (rh - (h^2/4) rh^-1, (h/2) x rh^-1, (h/2) y rh^-1, (h/2) z rh^-1).
PBWElement radius_row0(int k) {
  if (k == 0) return PBWElement::radius() + (Scalar(-1) * h() * h() / Scalar(4)) * PBWElement::inverse_radius();
  return half_h() * (generator(k - 1) * PBWElement::inverse_radius());
}

Scalar counit(Derivative d) { return d == Derivative::DtHat ? Scalar(2) / h() : Scalar(0); }

const PBWElement& push(Derivative d, const std::vector<int>& w, std::size_t pos) {
  thread_local std::map<std::pair<int, std::vector<int>>, PBWElement> memo;
  std::pair<int, std::vector<int>> key{static_cast<int>(d), std::vector<int>(w.begin() + static_cast<long>(pos), w.end())};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  PBWElement out;
  if (pos == w.size()) {
    out = PBWElement(counit(d));
  } else if (w[pos] == kR) {
    const int j = row0_column(d);
    for (int k = 0; k < 4; ++k) {
      const auto p = pattern(k, j);
      out += Scalar(p.sign) * (radius_row0(k) * push(p.d, w, pos + 1));
    }
  } else {
    const auto rule = push_rule(d, w[pos]);
    out = generator(w[pos]) * push(d, w, pos + 1);
    out += (Scalar(rule.coef_sign) * half_h()) * push(rule.target, w, pos + 1);
  }
  return memo.emplace(std::move(key), std::move(out)).first->second;
}

std::vector<int> mono_word(const Mono& m) {
  if (m[4] < 0) throw UnsupportedElement("apply_derivative: negative radius power");
  std::vector<int> w;
  for (int l = 0; l < 5; ++l) w.insert(w.end(), static_cast<std::size_t>(m[static_cast<std::size_t>(l)]), l);
  return w;
}


}  // namespace

Scalar h() { return Scalar::param('h'); }

PBWElement::PBWElement(const Scalar& c) { add(Mono{0, 0, 0, 0, 0}, c); }
PBWElement::PBWElement(const Mono& m, const Scalar& c) {
  if (m[4] >= 2) throw std::invalid_argument("PBWElement: unreduced radius power");
  add(m, c);
}

PBWElement PBWElement::x() { return generator(kX); }
PBWElement PBWElement::y() { return generator(kY); }
PBWElement PBWElement::z() { return generator(kZ); }
PBWElement PBWElement::t() { return generator(kT); }
PBWElement PBWElement::radius() { return generator(kR); }
PBWElement PBWElement::inverse_radius() { return PBWElement(Mono{0, 0, 0, 0, -1}, Scalar(1)); }

void PBWElement::add(const Mono& m, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = t_.emplace(m, c);
  if (fresh) return;
  it->second = it->second + c;
  if (it->second.is_zero()) t_.erase(it);
}

int PBWElement::degree() const {
  int d = -1;
  for (const auto& [m, c] : t_) d = std::max(d, m[0] + m[1] + m[2] + m[3] + m[4]);
  return d;
}

int PBWElement::min_radius_exponent() const {
  int e = 0;
  for (const auto& [m, c] : t_) e = std::min(e, m[4]);
  return e;
}

PBWElement& PBWElement::operator+=(const PBWElement& o) {
  for (const auto& [m, c] : o.t_) add(m, c);
  return *this;
}

PBWElement& PBWElement::operator-=(const PBWElement& o) {
  for (const auto& [m, c] : o.t_) add(m, Scalar(-1) * c);
  return *this;
}

PBWElement operator*(const Scalar& s, const PBWElement& a) {
  PBWElement out;
  if (s.is_zero()) return out;
  for (const auto& [m, c] : a.t_) out.t_.emplace(m, s * c);
  return out;
}

PBWElement operator*(const PBWElement& a, const PBWElement& b) {
  PBWElement out;
  for (const auto& [ma, ca] : a.t_)
    for (const auto& [mb, cb] : b.t_) out += (ca * cb) * mono_product(ma, mb);
  return out;
}

std::string PBWElement::str() const {
  if (t_.empty()) return "0";
  static const char* names[5] = {"x", "y", "z", "t", "r"};
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : t_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << to_string(c) << ")";
    for (int l = 0; l < 5; ++l) {
      const int e = m[static_cast<std::size_t>(l)];
      if (e == 0) continue;
      os << "*" << names[l];
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

bool equal(const PBWElement& a, const PBWElement& b) {
  const auto d = a - b;
  const int k = -d.min_radius_exponent();
  if (k == 0) return d.is_zero();
  // Shift exponents before reducing so negative powers cancel first.
  PBWElement cleared;
  for (const auto& [m, c] : d.terms()) cleared += c * mono_product(m, Mono{0, 0, 0, 0, k});
  return cleared.is_zero();
}

PBWElement from_word(const std::vector<int>& letters) {
  PBWElement out(Scalar(1));
  for (int l : letters) out = out * generator(l);
  return out;
}

const char* derivative_name(Derivative d) {
  switch (d) {
    case Derivative::Dx: return "d_x";
    case Derivative::Dy: return "d_y";
    case Derivative::Dz: return "d_z";
    case Derivative::DtHat: return "dhat_t";
  }
  return "?";
}

PBWElement apply_derivative_word(Derivative d, const std::vector<int>& letters) { return push(d, letters, 0); }

PBWElement apply_derivative(Derivative d, const PBWElement& a) {
  PBWElement out;
  for (const auto& [m, c] : a.terms()) out += c * apply_derivative_word(d, mono_word(m));
  return out;
}

PBWElement apply_dt(const PBWElement& a) {
  return apply_derivative(Derivative::DtHat, a) - (Scalar(2) / h()) * a;
}

namespace {

DhatMatrix assemble(const std::array<PBWElement, 4>& by_derivative) {
  DhatMatrix m;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto p = pattern(i, j);
      m[static_cast<std::size_t>(4 * i + j)] =
          (Scalar(p.sign) * half_h()) * by_derivative[static_cast<std::size_t>(p.d)];
    }
  return m;
}

}  // namespace

DhatMatrix dhat_matrix(const PBWElement& a) {
  std::array<PBWElement, 4> v;
  for (int d = 0; d < 4; ++d) v[static_cast<std::size_t>(d)] = apply_derivative(static_cast<Derivative>(d), a);
  return assemble(v);
}

DhatMatrix dhat_matrix_word(const std::vector<int>& letters) {
  std::array<PBWElement, 4> v;
  for (int d = 0; d < 4; ++d)
    v[static_cast<std::size_t>(d)] = apply_derivative_word(static_cast<Derivative>(d), letters);
  return assemble(v);
}

DhatMatrix operator*(const DhatMatrix& a, const DhatMatrix& b) {
  DhatMatrix m;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& x = a[4 * i + k];
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < 4; ++j) m[4 * i + j] += x * b[4 * k + j];
    }
  return m;
}

DhatMatrix dhat_radius_closed_form() {
  // M = [[0,x,y,z],[-x,0,-z,y],[-y,z,0,-x],[-z,-y,x,0]], i*hh = h/2, hh^2 = -h^2/4.
  const PBWElement x = PBWElement::x(), y = PBWElement::y(), z = PBWElement::z();
  const PBWElement zero;
  const std::array<PBWElement, 16> mm = {zero,           x, y,           z,           Scalar(-1) * x, zero,
                                         Scalar(-1) * z, y, Scalar(-1) * y, z,          zero,           Scalar(-1) * x,
                                         Scalar(-1) * z, Scalar(-1) * y, x, zero};
  const PBWElement ri = PBWElement::inverse_radius();
  const PBWElement diag = PBWElement::radius() + (Scalar(-1) * h() * h() / Scalar(4)) * ri;
  DhatMatrix m;
  for (std::size_t i = 0; i < 16; ++i) {
    m[i] = half_h() * (mm[i] * ri);
    if (i % 5 == 0) m[i] += diag;
  }
  return m;
}

std::string matrix_difference(const DhatMatrix& a, const DhatMatrix& b) {
  for (std::size_t i = 0; i < 16; ++i)
    if (!equal(a[i], b[i]))
      return clip("entry (" + std::to_string(i / 4 + 1) + "," + std::to_string(i % 4 + 1) + "): " +
                  (a[i] - b[i]).str());
  return {};
}

VerificationReport verify_dhat_homomorphism(const std::vector<std::pair<PBWElement, PBWElement>>& pairs,
                                            const std::string& label) {
  VerificationReport rep;
  rep.suite = "u2h";
  rep.add(timed_check([&] {
    std::string witness;
    for (const auto& [a, b] : pairs) {
      const auto diff = matrix_difference(dhat_matrix(a * b), dhat_matrix(a) * dhat_matrix(b));
      if (!diff.empty()) {
        witness = clip("a=" + a.str() + ", b=" + b.str() + ", " + diff);
        break;
      }
    }
    auto rec = make_check("dhat homomorphism " + label, "Eq. (6.6)", witness.empty(), witness);
    rec.details.emplace_back("pairs", std::to_string(pairs.size()));
    return rec;
  }));
  return rep;
}

namespace {

std::vector<PBWElement> generators4() { return {PBWElement::x(), PBWElement::y(), PBWElement::z(), PBWElement::t()}; }

std::vector<PBWElement> monomials_up_to(int d) {
  std::vector<PBWElement> out;
  for (int a = 0; a <= d; ++a)
    for (int b = 0; a + b <= d; ++b)
      for (int c = 0; a + b + c <= d; ++c)
        for (int e = 0; a + b + c + e <= d; ++e) out.emplace_back(Mono{a, b, c, e, 0}, Scalar(1));
  return out;
}

PBWElement random_element(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> nterms(1, 3), deg(0, 3), letter(0, 3), coef(-3, 3), hpow(0, 1);
  PBWElement out;
  const int n = nterms(rng);
  for (int i = 0; i < n; ++i) {
    Mono m{0, 0, 0, 0, 0};
    const int d = deg(rng);
    for (int k = 0; k < d; ++k) ++m[static_cast<std::size_t>(letter(rng))];
    int c = coef(rng);
    if (c == 0) c = 1;
    out += PBWElement(m, hpow(rng) ? Scalar(c) * h() : Scalar(c));
  }
  return out;
}

// Classical partial derivative of a commutative monomial in x, y, z, t.
std::map<Mono, Rational> classical(int var, const Mono& m) {
  std::map<Mono, Rational> out;
  if (m[static_cast<std::size_t>(var)] == 0) return out;
  Mono r = m;
  --r[static_cast<std::size_t>(var)];
  out.emplace(r, Rational(m[static_cast<std::size_t>(var)]));
  return out;
}

std::map<Mono, Rational> at_h0(const PBWElement& a) {
  std::map<Mono, Rational> out;
  for (const auto& [m, c] : a.terms()) {
    const Rational v = c.evaluate(Rational(0));
    if (sgn(v) != 0) out.emplace(m, v);
  }
  return out;
}

}  // namespace

std::vector<std::pair<PBWElement, PBWElement>> default_pairs(int random_pairs, std::uint64_t seed) {
  std::vector<std::pair<PBWElement, PBWElement>> out;
  for (const auto& a : generators4())
    for (const auto& b : generators4()) out.emplace_back(a, b);
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_pairs; ++i) {
    auto a = random_element(rng);
    auto b = random_element(rng);
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

VerificationReport classical_limit_report() {
  VerificationReport rep;
  rep.suite = "u2h";
  const PBWElement x = PBWElement::x(), r = PBWElement::radius(), ri = PBWElement::inverse_radius();

  rep.add(timed_check([&] {
    const auto dt = apply_dt(r);
    const bool shape = equal(dt, (Scalar(-1) * half_h()) * ri);
    const bool vanishes = at_h0(dt).empty();
    return make_check("classical limit d_t rh -> 0", "Section 6 radius actions", shape && vanishes,
                      shape && vanishes ? "" : clip(dt.str()));
  }));
  rep.add(timed_check([&] {
    const auto dx = apply_derivative(Derivative::Dx, r);
    bool ok = equal(dx, x * ri);
    for (const auto& [m, c] : dx.terms()) ok = ok && c.is_constant();
    return make_check("classical limit d_x rh = x/rh", "Section 6 radius actions", ok, ok ? "" : clip(dx.str()));
  }));
  rep.add(timed_check([&] {
    const auto v = apply_derivative(Derivative::Dx, x);
    const bool ok = v == PBWElement(Scalar(1));
    return make_check("d_x x = 1 for all h", "Eq. (6.3)", ok, ok ? "" : v.str());
  }));
  rep.add(timed_check([&] {
    const auto v = apply_derivative(Derivative::Dx, x * x);
    const auto corr = v - Scalar(2) * x;
    const bool ok = at_h0(corr).empty();
    auto rec = make_check("d_x x^2 = 2x + O(h)", "Section 6 footnote", ok, ok ? "" : clip(corr.str()));
    rec.details.emplace_back("correction", clip(corr.str()));
    return rec;
  }));
  rep.add(timed_check([&] {
    // At h = 0 every derivative is the commutative partial derivative.
    std::string witness;
    for (const auto& m : monomials_up_to(3)) {
      const Mono mono = m.terms().begin()->first;
      const std::pair<int, PBWElement> images[4] = {{kX, apply_derivative(Derivative::Dx, m)},
                                                    {kY, apply_derivative(Derivative::Dy, m)},
                                                    {kZ, apply_derivative(Derivative::Dz, m)},
                                                    {kT, apply_dt(m)}};
      for (const auto& [var, img] : images)
        if (at_h0(img) != classical(var, mono) && witness.empty()) witness = clip(m.str() + " -> " + img.str());
    }
    return make_check("classical derivatives at h=0, degree <= 3", "Section 6 classical limit", witness.empty(),
                      witness);
  }));
  return rep;
}

VerificationReport verify_u2h(std::uint64_t seed, int random_pairs) {
  VerificationReport rep;
  rep.suite = "u2h";
  const auto x = PBWElement::x(), y = PBWElement::y(), z = PBWElement::z(), t = PBWElement::t();
  const auto r = PBWElement::radius();

  rep.add(timed_check([&] {
    const bool a = equal(y * x, x * y - h() * z);
    const bool b = equal(t * x, x * t);
    const bool c = equal(r * r, x * x + y * y + z * z + PBWElement(Scalar(-1) * h() * h() / Scalar(4)));
    return make_check("PBW normal forms", "Section 6 Lie brackets", a && b && c, a && b && c ? "" : "frozen case");
  }));

  rep.add(timed_check([&] {
    std::string witness;
    for (const auto& m : monomials_up_to(3))
      for (int i = 0; i < 4 && witness.empty(); ++i)
        for (int j = i + 1; j < 4 && witness.empty(); ++j) {
          const auto di = static_cast<Derivative>(i), dj = static_cast<Derivative>(j);
          const auto a = apply_derivative(di, apply_derivative(dj, m));
          const auto b = apply_derivative(dj, apply_derivative(di, m));
          if (!equal(a, b))
            witness = clip(std::string(derivative_name(di)) + " vs " + derivative_name(dj) + " on " + m.str());
        }
    return make_check("derivatives commute, degree <= 3", "Eq. (6.3)", witness.empty(), witness);
  }));

  rep.add(timed_check([&] {
    const bool a = apply_derivative(Derivative::Dx, x) == PBWElement(Scalar(1));
    const bool b = apply_derivative(Derivative::Dx, y).is_zero();
    const bool c = matrix_difference(dhat_matrix(PBWElement(Scalar(1))), dhat_matrix_word({})).empty();
    DhatMatrix id;
    for (std::size_t i = 0; i < 16; i += 5) id[i] = PBWElement(Scalar(1));
    const bool unit = matrix_difference(dhat_matrix(PBWElement(Scalar(1))), id).empty();
    const bool ok = a && b && c && unit;
    return make_check("table values and unit", "Eq. (6.4)", ok, ok ? "" : "frozen case");
  }));

  rep.add(timed_check([&] {
    // Pushing through a literal two-letter word vs the coproduct (matrix) route.
    std::string witness;
    for (int a = 0; a < 4 && witness.empty(); ++a)
      for (int b = 0; b < 4 && witness.empty(); ++b) {
        const auto diff = matrix_difference(dhat_matrix_word({a, b}), dhat_matrix_word({a}) * dhat_matrix_word({b}));
        if (!diff.empty()) witness = clip("word " + std::to_string(a) + std::to_string(b) + ": " + diff);
      }
    return make_check("coproduct route equals pushing route", "Eq. (6.6)", witness.empty(), witness);
  }));

  auto pairs = default_pairs(random_pairs, seed);
  std::vector<std::pair<PBWElement, PBWElement>> gen(pairs.begin(), pairs.begin() + 16);
  std::vector<std::pair<PBWElement, PBWElement>> rnd(pairs.begin() + 16, pairs.end());
  rep.append(verify_dhat_homomorphism(gen, "generator pairs"));
  rep.append(verify_dhat_homomorphism(rnd, "random pairs seed=" + std::to_string(seed)));

  rep.add(timed_check([&] {
    const auto dx = dhat_matrix(x), dy = dhat_matrix(y), dz = dhat_matrix(z);
    auto bracket = [](const DhatMatrix& a, const DhatMatrix& b) {
      DhatMatrix ab = a * b, ba = b * a;
      for (std::size_t i = 0; i < 16; ++i) ab[i] -= ba[i];
      return ab;
    };
    auto scaled = [](const DhatMatrix& a) {
      DhatMatrix m;
      for (std::size_t i = 0; i < 16; ++i) m[i] = h() * a[i];
      return m;
    };
    std::string w = matrix_difference(bracket(dx, dy), scaled(dz));
    if (w.empty()) w = matrix_difference(bracket(dy, dz), scaled(dx));
    if (w.empty()) w = matrix_difference(bracket(dz, dx), scaled(dy));
    return make_check("bracket representation", "Eq. (6.6)", w.empty(), w);
  }));

  rep.add(timed_check([&] {
    const auto w = matrix_difference(dhat_matrix(r), dhat_radius_closed_form());
    return make_check("dhat(rh) closed form", "Section 6 quantum radius", w.empty(), w);
  }));
  rep.add(timed_check([&] {
    const auto dr = dhat_matrix(r);
    const auto w = matrix_difference(dr * dr, dhat_matrix(x * x + y * y + z * z +
                                                         PBWElement(Scalar(-1) * h() * h() / Scalar(4))));
    return make_check("quantum radius identity dhat(rh)^2 = dhat(rh^2)", "Section 6 quantum radius", w.empty(), w);
  }));
  rep.add(timed_check([&] {
    const auto dr = dhat_matrix(r);
    std::string w;
    for (const auto& g : generators4()) {
      const auto dg = dhat_matrix(g);
      if (w.empty()) w = matrix_difference(dr * dg, dg * dr);
      if (w.empty()) w = matrix_difference(dhat_matrix(r * g), dr * dg);
    }
    return make_check("dhat(rh) central and multiplicative", "Eq. (6.6)", w.empty(), w);
  }));
  rep.add(timed_check([&] {
    const auto ri = PBWElement::inverse_radius();
    const bool ok = equal(apply_dt(r), (Scalar(-1) * half_h()) * ri) &&
                    equal(apply_derivative(Derivative::Dx, r), x * ri) &&
                    equal(apply_derivative(Derivative::Dy, r), y * ri) &&
                    equal(apply_derivative(Derivative::Dz, r), z * ri);
    return make_check("radius actions", "Section 6 radius actions", ok, ok ? "" : "printed action differs");
  }));
  rep.append(classical_limit_report());
  return rep;
}

}  // namespace qdouble::u2h
