#include "tracesign/matrix.hpp"

#include <cstdlib>
#include <stdexcept>

#include "json.hpp"

namespace tracesign {

std::string IntMatrix2::to_string() const {
  using tracesign::to_string;
  return "[[" + to_string(a) + "," + to_string(c) + "],[" + to_string(b) + "," + to_string(d) + "]]";
}

IntMatrix2 parse_matrix(std::string_view literal) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(literal);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("matrix literal is not of the form [[a,c],[b,d]]: " + std::string(literal));
  }
  if (!j.is_array() || j.size() != 2 || !j[0].is_array() || !j[1].is_array() || j[0].size() != 2 ||
      j[1].size() != 2)
    throw std::invalid_argument("matrix literal must be [[a,c],[b,d]]: " + std::string(literal));
  auto entry = [](const nlohmann::json& e) -> Int {
    if (e.is_string()) return parse_int(e.get<std::string>());
    if (e.is_number_integer()) return Int{e.get<std::int64_t>()};
    throw std::invalid_argument("matrix entries must be integers");
  };
  return IntMatrix2::row_major(entry(j[0][0]), entry(j[0][1]), entry(j[1][0]), entry(j[1][1]));
}

bool is_decreasing(const IntMatrix2& m) {
  const Int a = abs(m.a), b = abs(m.b), c = abs(m.c), d = abs(m.d);
  return a > b && b > d && a > c && c > d;
}

namespace {

constexpr std::array<std::string_view, 14> kConstantNames = {"A",  "B",  "Ainv", "Binv", "E",   "A1",  "A2",
                                                             "A3", "A4", "A5",   "A6",   "A2t", "A3t", "A4t"};

Constants make_constants() {
  Constants k;
  k.A = IntMatrix2::row_major(1, 2, 0, 1);
  k.B = IntMatrix2::row_major(1, 0, -2, 1);
  k.A_inv = IntMatrix2::row_major(1, -2, 0, 1);
  k.B_inv = IntMatrix2::row_major(1, 0, 2, 1);
  k.E = IntMatrix2::identity();
  k.A1 = IntMatrix2::row_major(1, 0, 0, 0);
  k.A2 = IntMatrix2::row_major(2, 1, 0, 0);
  k.A3 = IntMatrix2::row_major(2, -1, 0, 0);
  k.A4 = IntMatrix2::row_major(3, 2, -2, -1);
  k.A5 = IntMatrix2::row_major(5, 2, 2, 1);
  k.A6 = IntMatrix2::row_major(5, -2, -2, 1);
  k.A2t = k.A2.transpose();
  k.A3t = k.A3.transpose();
  k.A4t = k.A4.transpose();
  return k;
}

}  // namespace

IntMatrix2& Constants::by_name(std::string_view name) {
  return const_cast<IntMatrix2&>(static_cast<const Constants&>(*this).by_name(name));
}

const IntMatrix2& Constants::by_name(std::string_view name) const {
  const IntMatrix2* table[] = {&A, &B, &A_inv, &B_inv, &E, &A1, &A2, &A3, &A4, &A5, &A6, &A2t, &A3t, &A4t};
  for (std::size_t i = 0; i < kConstantNames.size(); ++i)
    if (kConstantNames[i] == name) return *table[i];
  throw std::invalid_argument("unknown constant name: " + std::string(name));
}

std::span<const std::string_view> Constants::names() { return kConstantNames; }

const Constants& constants() {
  static const Constants k = make_constants();
  return k;
}

IntMatrix2 m_table_factor(int i, int j, const Constants& k) {
  if (i < 0 || i > 3 || j < 0 || j > 3) throw std::invalid_argument("m_table: indices must be in 0..3");
  if (j == 0) return 4 * k.A1;
  switch (i * 4 + j) {
    case 1: return 2 * k.A3;
    case 2: return 2 * k.A2t;
    case 3: return k.A4t;
    case 5: return 2 * k.A2;
    case 6: return 2 * k.A2t;
    case 7: return k.A5;
    case 9: return 2 * k.A3;
    case 10: return 2 * k.A3t;
    case 11: return k.A6;
    case 13: return 2 * k.A2;
    case 14: return 2 * k.A3t;
    default: return k.A4;  // 15
  }
}

IntMatrix2 m_table(const IntMatrix2& m, int i, int j, const Constants& k) { return m_table_factor(i, j, k) * m; }

const IntMatrix2& generator_matrix(Generator g, const Constants& k) {
  switch (g) {
    case Generator::A4: return k.A4;
    case Generator::A4t: return k.A4t;
    case Generator::A5: return k.A5;
    case Generator::A6: return k.A6;
  }
  std::abort();
}

char generator_letter(Generator g) {
  switch (g) {
    case Generator::A4: return '4';
    case Generator::A4t: return 'T';
    case Generator::A5: return '5';
    case Generator::A6: return '6';
  }
  return '?';
}

const char* generator_name(Generator g) {
  switch (g) {
    case Generator::A4: return "A4";
    case Generator::A4t: return "A4t";
    case Generator::A5: return "A5";
    case Generator::A6: return "A6";
  }
  return "?";
}

std::string word_to_string(const GenWord& w) {
  std::string out;
  for (Generator g : w) out += generator_letter(g);
  return out;
}

GenWord parse_word(std::string_view text) {
  GenWord w;
  for (char ch : text) {
    switch (ch) {
      case '4': w.push_back(Generator::A4); break;
      case 'T': w.push_back(Generator::A4t); break;
      case '5': w.push_back(Generator::A5); break;
      case '6': w.push_back(Generator::A6); break;
      default: throw std::invalid_argument(std::string("word letters are 4, T, 5, 6; got '") + ch + "'");
    }
  }
  return w;
}

IntMatrix2 word_to_matrix(const GenWord& w, const Constants& k) {
  IntMatrix2 m = k.E;
  for (Generator g : w) m = m * generator_matrix(g, k);
  return m;
}

IntMatrix2 power_A(Int m) { return {1, 2 * m, 0, 1}; }
IntMatrix2 power_B(Int n) { return {1, 0, -2 * n, 1}; }

PolyMatrix2 PolyMatrix2::identity(int k) {
  return {MultilinearPoly::constant(k, 1), MultilinearPoly(k), MultilinearPoly(k), MultilinearPoly::constant(k, 1)};
}

PolyMatrix2 multiply_disjoint(const PolyMatrix2& x, const PolyMatrix2& y) {
  return {mul_disjoint(x.f, y.f) + mul_disjoint(x.h, y.t), mul_disjoint(x.f, y.h) + mul_disjoint(x.h, y.g),
          mul_disjoint(x.t, y.f) + mul_disjoint(x.g, y.t), mul_disjoint(x.t, y.h) + mul_disjoint(x.g, y.g)};
}

namespace {

void check_pair(int k, int j) {
  if (j < 1 || j > k) throw std::out_of_range("pair index " + std::to_string(j) + " outside 1.." + std::to_string(k));
}

// coeff * e where e is v (Raw) or sign*(1 + v) (Substituted).
MultilinearPoly exponent_times(int k, VarIndex v, PowerFlavor flavor, int sign, Int coeff) {
  MultilinearPoly e = MultilinearPoly::variable(k, v, coeff);
  if (flavor == PowerFlavor::Raw) return e;
  return scale(e + MultilinearPoly::constant(k, coeff), sign);
}

}  // namespace

PolyMatrix2 sym_power_A(int k, int j, PowerFlavor flavor, int sign) {
  check_pair(k, j);
  const MultilinearPoly one = MultilinearPoly::constant(k, 1);
  return {one, exponent_times(k, VarIndex::x(j), flavor, sign, 2), MultilinearPoly(k), one};
}

PolyMatrix2 sym_power_B(int k, int j, PowerFlavor flavor, int sign) {
  check_pair(k, j);
  const MultilinearPoly one = MultilinearPoly::constant(k, 1);
  return {one, MultilinearPoly(k), exponent_times(k, VarIndex::y(j), flavor, sign, -2), one};
}

PolyMatrix2 compute_F(int k) {
  PolyMatrix2 F = PolyMatrix2::identity(k);
  for (int j = 1; j <= k; ++j) {
    F = multiply_disjoint(F, sym_power_A(k, j));
    F = multiply_disjoint(F, sym_power_B(k, j));
  }
  return F;
}

PolyMatrix2 compute_F_sigma(int k, const SignSequence& sigma) {
  if (sigma.k() != k) throw ShapeError("compute_F_sigma: sign sequence length must be 2k");
  PolyMatrix2 F = PolyMatrix2::identity(k);
  for (int j = 1; j <= k; ++j) {
    F = multiply_disjoint(F, sym_power_A(k, j, PowerFlavor::Substituted, sigma.at(2 * (j - 1))));
    F = multiply_disjoint(F, sym_power_B(k, j, PowerFlavor::Substituted, sigma.at(2 * j - 1)));
  }
  return F;
}

PolyMatrix2 substitute_signs(const PolyMatrix2& m, const SignSequence& sigma) {
  return {substitute_signs(m.f, sigma), substitute_signs(m.h, sigma), substitute_signs(m.t, sigma),
          substitute_signs(m.g, sigma)};
}

MultilinearPoly trace_comb(const PolyMatrix2& F, const IntMatrix2& M) {
  return scale(F.f, M.a) + scale(F.h, M.b) + scale(F.t, M.c) + scale(F.g, M.d);
}

}  // namespace tracesign
