#include "critpoints/text_format.hpp"

#include <cctype>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace critpoints {

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view s) : s_(s) {}

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= s_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

  std::uint64_t number() {
    skip_ws();
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at column " + std::to_string(pos_ + 1) + " in \"" +
                     std::string(s_) + "\"");
  }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

Term parse_term(Scanner& sc, const Ring& ring, bool negate) {
  const auto& field = ring.field;
  std::vector<int> exps(ring.nvars, 0);
  FieldElement coeff{1};
  bool have_factor = false;
  do {
    if (sc.at_digit()) {
      coeff = field.mul(coeff, field.from_int(static_cast<std::int64_t>(sc.number() % field.modulus())));
    } else if (sc.accept('x')) {
      std::uint64_t idx = sc.number();
      if (idx < 1 || idx > static_cast<std::uint64_t>(ring.nvars)) sc.fail("variable index out of range");
      std::uint64_t e = 1;
      if (sc.accept('^')) e = sc.number();
      exps[idx - 1] += static_cast<int>(e);
      if (exps[idx - 1] > 255) sc.fail("exponent exceeds 255");
    } else {
      sc.fail("expected a coefficient or variable");
    }
    have_factor = true;
  } while (sc.accept('*'));
  if (!have_factor) sc.fail("empty term");
  if (negate) coeff = field.neg(coeff);
  return {Monomial(ring.nvars, exps), coeff};
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

Polynomial parse_polynomial(const Ring& ring, std::string_view text) {
  Scanner sc(text);
  std::vector<Term> terms;
  if (sc.done()) sc.fail("empty polynomial");
  bool negate = false;
  if (sc.accept('-')) negate = true;
  else sc.accept('+');
  while (true) {
    terms.push_back(parse_term(sc, ring, negate));
    if (sc.done()) break;
    if (sc.accept('+')) {
      negate = false;
    } else if (sc.accept('-')) {
      negate = true;
    } else {
      sc.fail("expected '+' or '-'");
    }
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

std::string format_polynomial(const Polynomial& f) { return f.to_string(); }

PolyFile read_poly_file(std::istream& in, MonomialOrder order) {
  std::string line;
  std::int64_t q = -1;
  int nvars = -1;
  std::vector<std::string> bodies;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::string t = trim(line);
    if (t.empty()) continue;
    std::istringstream words(t);
    std::string key;
    words >> key;
    if (key == "field" || key == "vars") {
      std::int64_t v = -1;
      if (!(words >> v) || v < 0) {
        throw ParseError("bad header on line " + std::to_string(lineno) + ": " + t);
      }
      if (key == "field") {
        q = v;
      } else {
        nvars = static_cast<int>(v);
      }
      continue;
    }
    bodies.push_back(t);
  }
  if (q < 0) throw ParseError("missing 'field <q>' header");
  if (nvars < 0) throw ParseError("missing 'vars <n>' header");
  PolyFile file{Ring(PrimeField(static_cast<std::uint32_t>(q)), nvars, order), {}};
  for (const auto& b : bodies) {
    file.polys.push_back(b == "0" ? Polynomial(file.ring) : parse_polynomial(file.ring, b));
  }
  return file;
}

void write_poly_file(std::ostream& out, const Ring& ring, std::span<const Polynomial> polys) {
  out << "field " << ring.field.modulus() << '\n' << "vars " << ring.nvars << '\n';
  for (const auto& f : polys) out << format_polynomial(f) << '\n';
}

}  // namespace critpoints
