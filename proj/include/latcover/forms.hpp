#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "latcover/lattice.hpp"
#include "latcover/rational.hpp"
#include "latcover/report.hpp"

namespace latcover {

/// Binary form sum_i c_i X^(d-i) Y^i with rational coefficients, listed from
/// the highest power of X down. Degree at least 3, not identically zero.
class BinaryForm {
 public:
  explicit BinaryForm(std::vector<Rat> coefficients);

  std::size_t degree() const { return c_.size() - 1; }
  const std::vector<Rat>& coefficients() const { return c_; }
  bool is_integral() const;

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;

 private:
  std::vector<Rat> c_;
};

// Comma-separated rationals, highest power of X first: "0,1,1,0".
BinaryForm parse_form(std::string_view text);
std::string to_string(const BinaryForm& f);

Rat evaluate(const BinaryForm& f, const Rat& x, const Rat& y);
// (F o gamma)(X, Y) = F(aX + bY, cX + dY).
BinaryForm compose(const BinaryForm& f, const RatMat2& gamma);
BinaryForm scale(const BinaryForm& f, const Rat& k);
bool is_automorphism(const BinaryForm& f, const RatMat2& gamma);

struct GroupElement {
  std::string name;
  RatMat2 matrix;
  int order = 1;
};

struct DihedralGroups {
  std::vector<GroupElement> d3;   // id, R, R^2, S, SR, SR^2
  std::vector<GroupElement> d6;   // d3 followed by its negatives
};

RatMat2 matrix_S();
RatMat2 matrix_R();
const DihedralGroups& dihedral_groups();

// T^-1 g T; throws std::domain_error for singular T.
GroupElement conjugate(const RatMat2& t, const GroupElement& g);

enum class CorollaryCase { A, B, C, D, None };
std::string to_string(CorollaryCase c);

/// Shape of the entries of (a b; c d): (a) all integers; (b) a, b, d integers
/// and c in Z + 1/2; (c) a, c, d integers and b in Z + 1/2; (d) all four in
/// Z + 1/2.
CorollaryCase corollary_case(const RatMat2& sigma);

enum class Variant { D3, D6 };

struct ExtraordinaryVerdict {
  bool extraordinary = false;
  std::vector<GroupElement> order3;            // order-3 elements of the conjugated group
  std::vector<CorollaryCase> cases;            // their shapes
};

class AutomorphismMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// For F with Aut(F, Q) = T^-1 G T (G = D3 or D6, supplied by the caller and
/// checked elementwise), F is extraordinary iff an order-3 element of that
/// group has one of the four admissible shapes.
ExtraordinaryVerdict extraordinary_by_C3(const BinaryForm& f, const RatMat2& t, Variant variant);

// F(2X, Y).
BinaryForm dagger(const BinaryForm& f);

/// Discriminant: Res(F_X, F_Y) divided by d^(d-3), with the sign chosen so
/// that cubics give 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2. Zero iff F
/// has a repeated projective root.
Rat discriminant(const BinaryForm& f);

// Determinant of the Sylvester matrix of two forms given by coefficient lists.
Rat resultant(const std::vector<Rat>& a, const std::vector<Rat>& b);

/// F_{a,c} = aX^6 - 3aX^5Y + cX^4Y^2 + (5a - 2c)X^3Y^3 + cX^2Y^4 - 3aXY^5 + aY^6.
/// Throws std::invalid_argument when the discriminant vanishes.
BinaryForm sextic(std::int64_t a, std::int64_t c);

BinaryForm form_F0();

// Aut(F_{a,c}, Q) is T^-1 D6 T for T = diag(1, -1): it is generated by S and
// (0 -1; 1 -1), not by S and -R.
RatMat2 sextic_conjugator();

struct ValueWitness {
  BigInt value;
  Vec2Z point;
};

struct ValueComparison {
  std::vector<ValueWitness> g_values_missing_from_f;  // G(p), |p| <= N, not an F-value on the M box
  std::vector<ValueWitness> f_values_missing_from_g;
  Report report;
};

/// Desk-scale necessary check of F(Z^2) = G(Z^2): every value of G on the box
/// |x|, |y| <= n must be taken by F on |x|, |y| <= m, and vice versa. Never a
/// proof of equality. Both forms must have integer coefficients.
ValueComparison cross_value_check(const BinaryForm& f, const BinaryForm& g, std::int64_t n,
                                  std::optional<std::int64_t> m = std::nullopt);

}  // namespace latcover
