#include "tracesign/poly.hpp"

#include <algorithm>

namespace tracesign {

namespace {

void check_k(int k) {
  if (k < 0 || k > kMaxPairs)
    throw ShapeError("number of variable pairs must be in [0, " + std::to_string(kMaxPairs) + "], got " +
                     std::to_string(k));
}

std::uint32_t slot_limit_mask(int k) {
  return k >= kMaxPairs ? ~std::uint32_t{0} : (std::uint32_t{1} << (2 * k)) - 1;
}

void require_same_k(const MultilinearPoly& p, const MultilinearPoly& q, const char* op) {
  if (p.k() != q.k())
    throw ShapeError(std::string(op) + ": mismatched k (" + std::to_string(p.k()) + " vs " +
                     std::to_string(q.k()) + ")");
}

// Sorts by mask and merges equal monomials, dropping zero sums.
void canonicalize(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < terms.size();) {
    Term acc = terms[i++];
    while (i < terms.size() && terms[i].mono == acc.mono) acc.coeff += terms[i++].coeff;
    if (!acc.coeff.is_zero()) terms[out++] = acc;
  }
  terms.resize(out);
}

}  // namespace

std::string Monomial::to_string() const {
  if (mask == 0) return "1";
  std::string out;
  for (int slot = 0; slot < 32; ++slot) {
    if (!((mask >> slot) & 1u)) continue;
    if (!out.empty()) out += '*';
    out += VarIndex{slot}.name();
  }
  return out;
}

MultilinearPoly::MultilinearPoly(int k) : k_(k) { check_k(k); }

MultilinearPoly MultilinearPoly::constant(int k, Int c) { return monomial(k, Monomial::one(), c); }

MultilinearPoly MultilinearPoly::variable(int k, VarIndex v, Int c) {
  if (v.slot < 0 || v.slot >= 2 * k)
    throw ShapeError("variable " + v.name() + " out of range for k=" + std::to_string(k));
  return monomial(k, Monomial::of(v), c);
}

MultilinearPoly MultilinearPoly::monomial(int k, Monomial m, Int c) {
  return from_terms(k, {Term{m, c}});
}

MultilinearPoly MultilinearPoly::from_terms(int k, std::vector<Term> terms) {
  check_k(k);
  const std::uint32_t limit = slot_limit_mask(k);
  for (const Term& t : terms)
    if (t.mono.mask & ~limit)
      throw ShapeError("monomial " + t.mono.to_string() + " uses a variable beyond k=" + std::to_string(k));
  canonicalize(terms);
  return MultilinearPoly(k, std::move(terms), Canonical{});
}

std::uint32_t MultilinearPoly::support() const {
  std::uint32_t s = 0;
  for (const Term& t : terms_) s |= t.mono.mask;
  return s;
}

MultilinearPoly add(const MultilinearPoly& p, const MultilinearPoly& q) {
  require_same_k(p, q, "add");
  std::vector<Term> out;
  out.reserve(p.size() + q.size());
  auto a = p.terms_.begin();
  auto b = q.terms_.begin();
  while (a != p.terms_.end() || b != q.terms_.end()) {
    if (b == q.terms_.end() || (a != p.terms_.end() && a->mono < b->mono)) {
      out.push_back(*a++);
    } else if (a == p.terms_.end() || b->mono < a->mono) {
      out.push_back(*b++);
    } else {
      const Int c = a->coeff + b->coeff;
      if (!c.is_zero()) out.push_back({a->mono, c});
      ++a;
      ++b;
    }
  }
  return MultilinearPoly(p.k_, std::move(out), MultilinearPoly::Canonical{});
}

MultilinearPoly mul_disjoint(const MultilinearPoly& p, const MultilinearPoly& q) {
  require_same_k(p, q, "mul_disjoint");
  if (p.support() & q.support())
    throw ShapeError("mul_disjoint: operands share a variable; the product would not be multilinear");
  std::vector<Term> out;
  out.reserve(p.size() * q.size());
  for (const Term& s : p.terms_)
    for (const Term& t : q.terms_) out.push_back({s.mono * t.mono, s.coeff * t.coeff});
  // Disjoint supports make every product monomial distinct; only order is needed.
  std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) { return a.mono < b.mono; });
  return MultilinearPoly(p.k_, std::move(out), MultilinearPoly::Canonical{});
}

MultilinearPoly scale(const MultilinearPoly& p, Int c) {
  if (c.is_zero()) return MultilinearPoly(p.k_);
  std::vector<Term> out(p.terms_);
  for (Term& t : out) t.coeff *= c;
  return MultilinearPoly(p.k_, std::move(out), MultilinearPoly::Canonical{});
}

MultilinearPoly substitute_slot(const MultilinearPoly& p, int slot, int sign) {
  if (slot < 0 || slot >= p.num_vars()) throw ShapeError("substitute_slot: slot out of range");
  const std::uint32_t bit = std::uint32_t{1} << slot;
  // c*m*v  ->  sign*c*m + sign*c*m*v ; terms without v are untouched.
  std::vector<Term> out;
  out.reserve(2 * p.size());
  for (const Term& t : p.terms_) {
    if (t.mono.mask & bit) {
      const Int c = sign < 0 ? -t.coeff : t.coeff;
      out.push_back({Monomial{t.mono.mask & ~bit}, c});
      out.push_back({t.mono, c});
    } else {
      out.push_back(t);
    }
  }
  canonicalize(out);
  return MultilinearPoly(p.k_, std::move(out), MultilinearPoly::Canonical{});
}

MultilinearPoly substitute_signs(const MultilinearPoly& p, const SignSequence& sigma) {
  if (sigma.length() != p.num_vars())
    throw ShapeError("substitute_signs: sign sequence has length " + std::to_string(sigma.length()) +
                     ", polynomial has " + std::to_string(p.num_vars()) + " variables");
  MultilinearPoly r = p;
  for (int slot = 0; slot < p.num_vars(); ++slot) r = substitute_slot(r, slot, sigma.at(slot));
  return r;
}

Int evaluate(const MultilinearPoly& p, std::span<const Int> point) {
  if (static_cast<int>(point.size()) != p.num_vars())
    throw ShapeError("evaluate: point has " + std::to_string(point.size()) + " coordinates, expected " +
                     std::to_string(p.num_vars()));
  Int sum;
  for (const Term& t : p.terms()) {
    Int prod = t.coeff;
    for (int slot = 0; slot < p.num_vars(); ++slot)
      if ((t.mono.mask >> slot) & 1u) prod *= point[slot];
    sum += prod;
  }
  return sum;
}

MultilinearPoly lift(const MultilinearPoly& p, int new_k) {
  if (new_k < p.k()) throw ShapeError("lift: cannot shrink the variable set");
  return MultilinearPoly::from_terms(new_k, {p.terms().begin(), p.terms().end()});
}

MultilinearPoly rotate_pairs(const MultilinearPoly& p, int shift) {
  const int k = p.k();
  if (k == 0) return p;
  shift = ((shift % k) + k) % k;
  std::vector<Term> out;
  out.reserve(p.size());
  for (const Term& t : p.terms()) {
    std::uint32_t m = 0;
    for (int slot = 0; slot < 2 * k; ++slot)
      if ((t.mono.mask >> slot) & 1u) m |= std::uint32_t{1} << ((slot + 2 * shift) % (2 * k));
    out.push_back({Monomial{m}, t.coeff});
  }
  return MultilinearPoly::from_terms(k, std::move(out));
}

std::optional<int> degree(const MultilinearPoly& p) {
  if (p.is_zero()) return std::nullopt;
  int d = 0;
  for (const Term& t : p.terms()) d = std::max(d, t.mono.degree());
  return d;
}

Int coefficient(const MultilinearPoly& p, Monomial m) {
  const auto terms = p.terms();
  auto it = std::lower_bound(terms.begin(), terms.end(), m,
                             [](const Term& t, Monomial key) { return t.mono < key; });
  return it != terms.end() && it->mono == m ? it->coeff : Int{};
}

const char* to_string(SignTag tag) {
  switch (tag) {
    case SignTag::AllNonneg: return "AllNonneg";
    case SignTag::AllNonpos: return "AllNonpos";
    case SignTag::Mixed: return "Mixed";
    case SignTag::Zero: return "Zero";
  }
  return "?";
}

SignPattern sign_pattern(const MultilinearPoly& p) {
  SignPattern out;
  for (const Term& t : p.terms()) {
    if (t.coeff.sign() > 0 && !out.positive_witness) out.positive_witness = t.mono;
    if (t.coeff.sign() < 0 && !out.negative_witness) out.negative_witness = t.mono;
  }
  if (out.positive_witness && out.negative_witness) {
    out.tag = SignTag::Mixed;
    return out;
  }
  out.tag = out.positive_witness ? SignTag::AllNonneg : out.negative_witness ? SignTag::AllNonpos : SignTag::Zero;
  out.positive_witness.reset();
  out.negative_witness.reset();
  return out;
}

}  // namespace tracesign
