#pragma once

// Text form of monomials, ideals and decompositions.
//
//   monomial      := "1" | factor ("*" factor)*        factor := "x" INDEX ("^" EXP)?
//   ideal         := "0" | monomial ("," monomial)*
//   decomposition := "(" ideal ")" ("&" "(" ideal ")")*
//
// Indices are 1-based. Whitespace is ignored. The ring size is the largest
// index unless a larger one is requested.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "monideal/core.hpp"
#include "monideal/decomp.hpp"
#include "monideal/error.hpp"

namespace monideal {

using IdealOrDecomposition = std::variant<MonomialIdeal, Decomposition>;

namespace detail {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c, std::string_view what) {
    if (!accept(c)) fail("expected " + std::string(what));
  }
  std::uint64_t number(std::string_view what) {
    skip_ws();
    const auto start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > 0xFFFFFFFFull) {
        pos_ = start;
        fail(std::string(what) + " is too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected " + std::string(what));
    return v;
  }
  std::size_t column() const { return pos_ + 1; }
  [[noreturn]] void fail(const std::string& msg, Errc code = Errc::syntax_error) const {
    throw Error(code, "column " + std::to_string(column()) + ": " + msg);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

using RawMonomial = std::map<std::size_t, std::uint64_t>;  // 0-based index -> exponent

struct RawIdeal {
  std::vector<RawMonomial> gens;
  bool zero = false;
};

inline RawMonomial parse_raw_monomial(Lexer& lx, std::size_t& max_index) {
  RawMonomial m;
  if (lx.peek() == '1') {
    lx.number("monomial");
    return m;
  }
  do {
    if (!lx.accept('x')) lx.fail("expected a variable like x1");
    const auto col = lx.column();
    const auto idx = lx.number("variable index");
    if (idx == 0) throw Error(Errc::syntax_error, "column " + std::to_string(col) + ": variable indices start at 1");
    std::uint64_t e = 1;
    if (lx.accept('^')) e = lx.number("exponent");
    m[idx - 1] += e;
    if (m[idx - 1] > 0xFFFFFFFFull) lx.fail("exponent is too large", Errc::overflow);
    max_index = std::max<std::size_t>(max_index, idx);
  } while (lx.accept('*'));
  return m;
}

inline RawIdeal parse_raw_ideal(Lexer& lx, std::size_t& max_index) {
  RawIdeal out;
  if (lx.peek() == '0') {
    lx.number("ideal");
    out.zero = true;
    return out;
  }
  do {
    out.gens.push_back(parse_raw_monomial(lx, max_index));
  } while (lx.accept(','));
  return out;
}

inline Monomial to_monomial(const RawMonomial& raw, std::size_t n) {
  std::vector<Exponent> exps(n, 0);
  for (auto [i, e] : raw) exps[i] = static_cast<Exponent>(e);
  return Monomial(std::move(exps));
}

inline std::size_t resolve_ring_size(std::size_t max_index, std::optional<std::size_t> vars) {
  if (vars) {
    if (*vars == 0) throw Error(Errc::invalid_argument, "ring needs at least one variable");
    if (max_index > *vars)
      throw Error(Errc::out_of_range, "variable x" + std::to_string(max_index) + " exceeds --vars " +
                                          std::to_string(*vars));
    return *vars;
  }
  return std::max<std::size_t>(max_index, 1);
}

}  // namespace detail

inline IdealOrDecomposition parse_ideal(std::string_view text, std::optional<std::size_t> vars = std::nullopt) {
  detail::Lexer lx(text);
  std::size_t max_index = 0;
  if (lx.at_end()) lx.fail("empty input");

  if (lx.peek() == '(') {
    std::vector<std::pair<detail::RawIdeal, std::size_t>> parts;
    do {
      const auto col = lx.column();
      lx.expect('(', "'(' to open a component");
      parts.emplace_back(detail::parse_raw_ideal(lx, max_index), col);
      lx.expect(')', "')' or ','");
    } while (lx.accept('&'));
    if (!lx.at_end()) lx.fail("expected '&' or end of input");

    const Ring ring(detail::resolve_ring_size(max_index, vars));
    std::vector<IrreducibleComponent> comps;
    for (const auto& [raw, col] : parts) {
      auto where = "column " + std::to_string(col) + ": ";
      if (raw.zero) throw Error(Errc::syntax_error, where + "a component cannot be the zero ideal");
      std::vector<IrreducibleComponent::Factor> fs;
      for (const auto& m : raw.gens) {
        std::size_t nonzero = 0;
        for (auto [i, e] : m)
          if (e != 0) {
            ++nonzero;
            fs.push_back({i, static_cast<Exponent>(e)});
          }
        if (nonzero != 1)
          throw Error(Errc::syntax_error, where + "components must list pure powers of variables");
      }
      try {
        comps.emplace_back(std::move(fs));
      } catch (const Error& e) {
        throw Error(Errc::syntax_error, where + e.what());
      }
    }
    return Decomposition(ring, std::move(comps));
  }

  auto raw = detail::parse_raw_ideal(lx, max_index);
  if (!lx.at_end()) lx.fail("expected ',' or end of input");
  const Ring ring(detail::resolve_ring_size(max_index, vars));
  if (raw.zero) return MonomialIdeal::zero(ring);
  std::vector<Monomial> gens;
  for (const auto& m : raw.gens) gens.push_back(detail::to_monomial(m, ring.size()));
  return minimalize(ring, std::move(gens));
}

inline Monomial parse_monomial(std::string_view text, std::size_t nvars) {
  detail::Lexer lx(text);
  std::size_t max_index = 0;
  auto raw = detail::parse_raw_monomial(lx, max_index);
  if (!lx.at_end()) lx.fail("expected '*' or end of input");
  if (max_index > nvars)
    throw Error(Errc::out_of_range, "variable x" + std::to_string(max_index) + " is outside the ring");
  return detail::to_monomial(raw, nvars);
}

inline std::string render(const Monomial& f, const Ring& ring) {
  std::string out;
  for (std::size_t i = 0; i < f.nvars(); ++i) {
    if (f[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.name(i);
    if (f[i] > 1) out += '^' + std::to_string(f[i]);
  }
  return out.empty() ? "1" : out;
}

inline std::string render(const Monomial& f) { return render(f, Ring(std::max<std::size_t>(f.nvars(), 1))); }

inline std::string render(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "0";
  std::string out;
  for (const auto& g : ideal.gens()) {
    if (!out.empty()) out += ", ";
    out += render(g, ideal.ring());
  }
  return out;
}

inline std::string render(const IrreducibleComponent& c, const Ring& ring) {
  std::string out = "(";
  for (const auto& f : c.factors()) {
    if (out.size() > 1) out += ", ";
    out += ring.name(f.var);
    if (f.weight > 1) out += '^' + std::to_string(f.weight);
  }
  return out + ")";
}

inline std::string render(const Decomposition& d) {
  std::string out;
  for (const auto& c : d.components()) {
    if (!out.empty()) out += " & ";
    out += render(c, d.ring());
  }
  return out;
}

inline std::string render(const IdealOrDecomposition& v) {
  return std::visit([](const auto& x) { return render(x); }, v);
}

/// 1-based "{1,2,3}".
inline std::string render_set(const std::vector<VarIndex>& vars) {
  std::string out = "{";
  for (std::size_t k = 0; k < vars.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(vars[k] + 1);
  }
  return out + "}";
}

}  // namespace monideal
