#include <cctype>
#include <sstream>

#include "json.hpp"
#include "tracesign/poly.hpp"
#include "tracesign/report_io.hpp"

namespace tracesign {

std::string to_text(const MultilinearPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    const bool neg = t.coeff.sign() < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    first = false;
    out += to_string(abs(t.coeff));
    if (t.mono.mask != 0) out += "*" + t.mono.to_string();
  }
  return out;
}

namespace {

class TextParser {
 public:
  explicit TextParser(std::string_view text) {
    for (char ch : text)
      if (!std::isspace(static_cast<unsigned char>(ch))) s_ += ch;
  }

  std::vector<Term> terms(int& max_pair) {
    std::vector<Term> out;
    if (s_.empty()) fail("empty polynomial");
    bool first = true;
    while (pos_ < s_.size()) {
      bool neg = false;
      if (peek() == '+' || peek() == '-') {
        neg = s_[pos_++] == '-';
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      out.push_back(term(neg, max_pair));
    }
    return out;
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("cannot parse polynomial at offset " + std::to_string(pos_) + ": " + why);
  }

  Term term(bool neg, int& max_pair) {
    Int coeff = 1;
    std::uint32_t mask = 0;
    bool need_var = true;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      coeff = parse_int(std::string_view(s_).substr(start, pos_ - start));
      if (peek() != '*') return {Monomial{}, neg ? -coeff : coeff};
      ++pos_;
    }
    while (need_var) {
      const char kind = peek();
      if (kind != 'x' && kind != 'y') fail("expected a variable x<j> or y<j>");
      ++pos_;
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_) fail("variable without an index");
      const int j = std::stoi(s_.substr(start, pos_ - start));
      if (j < 1 || j > kMaxPairs) fail("variable index out of range");
      const VarIndex v = kind == 'x' ? VarIndex::x(j) : VarIndex::y(j);
      const std::uint32_t bit = std::uint32_t{1} << v.slot;
      if (mask & bit) fail("variable " + v.name() + " repeated in one monomial");
      mask |= bit;
      max_pair = std::max(max_pair, j);
      need_var = peek() == '*';
      if (need_var) ++pos_;
    }
    return {Monomial{mask}, neg ? -coeff : coeff};
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

MultilinearPoly parse_text(std::string_view text, std::optional<int> k) {
  int max_pair = 0;
  auto terms = TextParser(text).terms(max_pair);
  if (k && *k < max_pair)
    throw ShapeError("polynomial mentions pair " + std::to_string(max_pair) + " but k=" + std::to_string(*k));
  return MultilinearPoly::from_terms(k.value_or(max_pair), std::move(terms));
}

nlohmann::json json_value(const MultilinearPoly& p) {
  nlohmann::json terms = nlohmann::json::array();
  for (const Term& t : p.terms()) {
    nlohmann::json vars = nlohmann::json::array();
    for (int slot = 0; slot < p.num_vars(); ++slot)
      if ((t.mono.mask >> slot) & 1u) vars.push_back(slot);
    terms.push_back({{"vars", std::move(vars)}, {"coeff", to_string(t.coeff)}});
  }
  return {{"k", p.k()}, {"terms", std::move(terms)}};
}

MultilinearPoly poly_from_json(const nlohmann::json& j) {
  const int k = j.at("k").get<int>();
  std::vector<Term> terms;
  for (const auto& t : j.at("terms")) {
    std::uint32_t mask = 0;
    for (const auto& v : t.at("vars")) {
      const int slot = v.get<int>();
      if (slot < 0 || slot >= 2 * k) throw ShapeError("variable index " + std::to_string(slot) + " out of range");
      mask |= std::uint32_t{1} << slot;
    }
    const auto& c = t.at("coeff");
    terms.push_back({Monomial{mask}, c.is_string() ? parse_int(c.get<std::string>()) : Int{c.get<std::int64_t>()}});
  }
  return MultilinearPoly::from_terms(k, std::move(terms));
}

std::string to_json(const MultilinearPoly& p) { return json_value(p).dump(); }

MultilinearPoly parse_json(std::string_view text) { return poly_from_json(nlohmann::json::parse(text)); }

std::string to_csv(const MultilinearPoly& p) {
  std::ostringstream out;
  out << "mask,coeff\n";
  for (const Term& t : p.terms()) out << t.mono.mask << ',' << to_string(t.coeff) << '\n';
  return out.str();
}

}  // namespace tracesign
