#ifndef REES_TESTS_MODELS_HPP
#define REES_TESTS_MODELS_HPP

// Generic symbolic models of the worked cases (as displayed, with the generic
// coefficients named) and their specialization to random linear forms in T.

#include <map>
#include <string>
#include <vector>

#include "rees/syzygy.hpp"
#include "support.hpp"

namespace rees::testing::models {

// Generic degree-4 balanced model: f = [s^2 st t^2](x,y,z), g = [s^2 st t^2](u,v,w).
inline const std::vector<std::string> kDeg4Names{"s", "t", "x", "y", "z", "u", "v", "w"};
inline constexpr const char* kDeg4F = "s^2x+sty+t^2z";
inline constexpr const char* kDeg4G = "s^2u+stv+t^2w";
inline constexpr const char* kDeg4H1 = "- syu - tzu + sxv + txw";
inline constexpr const char* kDeg4H2 = "- szu - tzv + sxw + tyw";
inline constexpr const char* kDeg4Equation = "-z^2u^2 + yzuv-xzv^2-y^2uw+2xzuw+xyvw-x^2w^2";

// Generic mu = 1 quartic model: f = as + bt, g = cs + dt.
inline const std::vector<std::string> kMu1Names{"s", "t", "a", "b", "x", "y", "z", "u", "v", "w"};
inline constexpr const char* kMu1F = "as + bt";
inline constexpr const char* kMu1G = "s(xs^2+yst+zt^2) + t(us^2+vst+wt^2)";
inline constexpr const char* kMu1H1 = "- bxs^2 - byst - bzt^2 + aus^2  + avst + awt^2";
inline constexpr const char* kMu1H2 = "b^2x s + b^2y t - abzt - abus - abvt + a^2w t";
inline constexpr const char* kMu1H3 = "- b^3 x + ab^2 y - a^2 bz + ab^2 u - a^2 bv + a^3 w";

// Generic degree-5 model with column degrees (2, 3).
inline const std::vector<std::string> kDeg5Names{"s", "t", "x", "y", "z", "A", "B", "C", "D"};
inline constexpr const char* kDeg5F = "s^2x+sty+t^2z";
inline constexpr const char* kDeg5G = "s^3A + s^2tB + st^2C + t^3D";
inline constexpr const char* kDeg5H1 = "s^2(-yA)+st(xC-yB-zA)+t^2(xD-zB)";
inline constexpr const char* kDeg5H2 = "s^2(xC-zA)+st(xD+yC-zB)+t^2(yD)";
inline constexpr const char* kDeg5C1 = "x^2(Cs+Dt)+xy(-Bs)+xz(-As-Bt)+yz(At)+y^2(As)";
inline constexpr const char* kDeg5C2 = "x^2(Ds) + xy(Dt) + xz(-Bs-Ct)+yz(As)+z^2(At)";
inline constexpr const char* kDeg5C3 = "x^2(Ds) + xy(Dt) +xz(-Bs-Ct) + yz(As)+ z^2(At)";
// the displayed c4 prints y^2(D); bihomogeneity forces y^2(Dt)
inline constexpr const char* kDeg5C4 = "xy(Ds) + xz(-Cs-Dt) + yz(-Ct)+ z^2(As+Bt) + y^2(Dt)";
inline constexpr const char* kDeg5Equation =
    "-x^3D^2+x^2yCD+xy^2(-BD) + x^2z(2BD-C^2)+xz^2(2AC-B^2)"
    "+xyz(BC-3AD)+y^2z(-AC)+yz^2(AB)+y^3(AD)+z^3(-A^2)";

template <class Field>
class Specializer {
 public:
  Specializer(Ring<Field> ring, std::vector<std::string> names, std::map<std::string, Polynomial<Field>> images)
      : ring_(std::move(ring)), names_(std::move(names)), images_(std::move(images)) {}
  Polynomial<Field> operator()(const std::string& text) const { return specialize(text, names_, images_, ring_); }

 private:
  Ring<Field> ring_;
  std::vector<std::string> names_;
  std::map<std::string, Polynomial<Field>> images_;
};

template <class Field, class Rng>
Specializer<Field> deg4_model(const Ring<Field>& ring, Rng& rng) {
  std::map<std::string, Polynomial<Field>> img{{"x", Polynomial<Field>::variable(ring, "T1")},
                                               {"y", Polynomial<Field>::variable(ring, "T2")},
                                               {"z", Polynomial<Field>::variable(ring, "T3")}};
  for (const char* n : {"u", "v", "w"}) img[n] = random_linear_fiber_form(ring, rng);
  return {ring, kDeg4Names, img};
}

template <class Field, class Rng>
Specializer<Field> mu1_model(const Ring<Field>& ring, Rng& rng, bool split_matches) {
  std::map<std::string, Polynomial<Field>> img;
  for (const char* n : {"a", "b", "x", "y", "z", "u", "v", "w"}) img[n] = random_linear_fiber_form(ring, rng);
  if (split_matches) {
    // with u = v = 0 every term of g divisible by s belongs to c, as in the model
    img["u"] = Polynomial<Field>(ring);
    img["v"] = Polynomial<Field>(ring);
  }
  return {ring, kMu1Names, img};
}

template <class Field, class Rng>
Specializer<Field> deg5_model(const Ring<Field>& ring, Rng& rng) {
  std::map<std::string, Polynomial<Field>> img{{"x", Polynomial<Field>::variable(ring, "T1")},
                                               {"y", Polynomial<Field>::variable(ring, "T2")},
                                               {"z", Polynomial<Field>::variable(ring, "T3")}};
  for (const char* n : {"A", "B", "C", "D"}) img[n] = random_linear_fiber_form(ring, rng);
  return {ring, kDeg5Names, img};
}

template <class Field>
SymmetricForms<Field> forms_of(const Specializer<Field>& S, const char* f, const char* g) {
  return SymmetricForms<Field>::from_forms(S(f), S(g));
}

}  // namespace rees::testing::models

#endif  // REES_TESTS_MODELS_HPP
