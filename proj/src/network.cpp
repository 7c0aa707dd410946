#include "msregion/network.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <sstream>

namespace msr {

bool Complex::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](std::uint32_t c) { return c == 0; });
}

std::vector<long long> Reaction::vector() const {
  std::vector<long long> v(reactant.coeffs.size());
  for (std::size_t j = 0; j < v.size(); ++j)
    v[j] = static_cast<long long>(product.coeffs[j]) - static_cast<long long>(reactant.coeffs[j]);
  return v;
}

ReactionNetwork::ReactionNetwork(std::vector<std::string> species, std::vector<Reaction> reactions)
    : species_(std::move(species)), reactions_(std::move(reactions)) {
  const std::size_t n = species_.size();
  if (reactions_.empty()) throw NetworkError("network has no reactions");
  std::set<std::string> names(species_.begin(), species_.end());
  if (names.size() != n) throw NetworkError("duplicate species name");
  std::vector<bool> used(n, false);
  std::set<std::pair<Complex, Complex>> seen;
  std::set<std::string> labels;
  for (const auto& r : reactions_) {
    if (r.reactant.coeffs.size() != n || r.product.coeffs.size() != n)
      throw NetworkError("complex length does not match species count");
    if (r.reactant == r.product) throw NetworkError("reaction '" + r.rate_label + "' has equal reactant and product");
    if (!seen.emplace(r.reactant, r.product).second)
      throw NetworkError("duplicate reaction '" + r.rate_label + "'");
    if (r.rate_label.empty()) throw NetworkError("reaction without rate label");
    if (!labels.insert(r.rate_label).second) throw NetworkError("duplicate rate label '" + r.rate_label + "'");
    for (std::size_t j = 0; j < n; ++j)
      if (r.reactant.coeffs[j] != 0 || r.product.coeffs[j] != 0) used[j] = true;
  }
  for (std::size_t j = 0; j < n; ++j)
    if (!used[j]) throw NetworkError("species '" + species_[j] + "' does not appear in any complex");
}

std::vector<std::string> ReactionNetwork::rate_labels() const {
  std::vector<std::string> out;
  for (const auto& r : reactions_) out.push_back(r.rate_label);
  return out;
}

// ---------------------------------------------------------------------------

namespace {

enum class Arrow { Forward, Backward, Both };

using RawComplex = std::map<std::size_t, std::uint32_t>;

struct Statement {
  std::vector<RawComplex> complexes;
  std::vector<Arrow> arrows;
  std::vector<std::string> labels;
  std::size_t line = 0, column = 0;
};

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line, std::vector<std::string>& species)
      : s_(text), line_(line), species_(species) {}

  std::vector<Statement> run() {
    std::vector<Statement> out;
    skip_ws();
    if (at_end()) return out;
    while (true) {
      out.push_back(statement());
      skip_ws();
      if (at_end()) break;
      if (s_[pos_] != ',') fail("expected ',' or end of line");
      ++pos_;
      skip_ws();
      if (at_end()) fail("empty statement after ','");
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= s_.size(); }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, pos_ + 1); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t pos) const { throw ParseError(msg, line_, pos + 1); }

  static bool ident_start(char ch) { return std::isalpha(static_cast<unsigned char>(ch)) || ch == '_'; }
  static bool ident_char(char ch) { return std::isalnum(static_cast<unsigned char>(ch)) || ch == '_'; }

  Statement statement() {
    Statement st;
    st.line = line_;
    st.column = pos_ + 1;
    st.complexes.push_back(complex());
    while (true) {
      skip_ws();
      auto arrow = try_arrow();
      if (!arrow) break;
      st.arrows.push_back(*arrow);
      st.complexes.push_back(complex());
    }
    if (st.arrows.empty()) fail("expected an arrow ('->', '<-' or '<->')");
    skip_ws();
    if (!at_end() && s_[pos_] == ';') {
      ++pos_;
      while (true) {
        skip_ws();
        if (at_end() || s_[pos_] == ',') break;
        if (!ident_start(s_[pos_])) fail("expected a rate label");
        std::size_t start = pos_;
        while (!at_end() && ident_char(s_[pos_])) ++pos_;
        st.labels.emplace_back(s_.substr(start, pos_ - start));
      }
      if (st.labels.empty()) fail("expected a rate label after ';'");
    }
    return st;
  }

  std::optional<Arrow> try_arrow() {
    if (s_.substr(pos_, 3) == "<->") {
      pos_ += 3;
      return Arrow::Both;
    }
    if (s_.substr(pos_, 2) == "->") {
      pos_ += 2;
      return Arrow::Forward;
    }
    if (s_.substr(pos_, 2) == "<-") {
      pos_ += 2;
      return Arrow::Backward;
    }
    return std::nullopt;
  }

  RawComplex complex() {
    skip_ws();
    if (at_end()) fail("expected a complex");
    RawComplex c;
    if (s_[pos_] == '0' && (pos_ + 1 == s_.size() || !ident_char(s_[pos_ + 1]))) {
      ++pos_;
      return c;
    }
    while (true) {
      term(c);
      skip_ws();
      if (!at_end() && s_[pos_] == '+') {
        ++pos_;
        skip_ws();
        continue;
      }
      break;
    }
    return c;
  }

  void term(RawComplex& c) {
    skip_ws();
    if (at_end()) fail("expected a species term");
    std::size_t start = pos_;
    if (s_[pos_] == '-' && !(pos_ + 1 < s_.size() && s_[pos_ + 1] == '>')) fail("negative stoichiometric coefficient");
    unsigned long long coeff = 1;
    if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      coeff = 0;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        coeff = coeff * 10 + static_cast<unsigned long long>(s_[pos_] - '0');
        if (coeff > static_cast<unsigned long long>(std::numeric_limits<std::int32_t>::max()))
          fail_at("stoichiometric coefficient exceeds 2^31-1", start);
        ++pos_;
      }
      if (!at_end() && (s_[pos_] == '.' || s_[pos_] == '/')) fail_at("non-integer stoichiometric coefficient", start);
      skip_ws();
      if (coeff == 0) fail_at("stoichiometric coefficient must be positive", start);
    }
    if (at_end() || !ident_start(s_[pos_])) fail("expected a species name");
    std::size_t name_start = pos_;
    while (!at_end() && ident_char(s_[pos_])) ++pos_;
    std::string name(s_.substr(name_start, pos_ - name_start));
    auto it = std::find(species_.begin(), species_.end(), name);
    std::size_t idx = static_cast<std::size_t>(it - species_.begin());
    if (it == species_.end()) species_.push_back(name);
    std::uint64_t total = static_cast<std::uint64_t>(c[idx]) + coeff;
    if (total > static_cast<std::uint64_t>(std::numeric_limits<std::int32_t>::max()))
      fail_at("stoichiometric coefficient exceeds 2^31-1", start);
    c[idx] = static_cast<std::uint32_t>(total);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::vector<std::string>& species_;
};

Complex densify(const RawComplex& raw, std::size_t n) {
  Complex c;
  c.coeffs.assign(n, 0);
  for (const auto& [idx, v] : raw) c.coeffs[idx] = v;
  return c;
}

}  // namespace

ReactionNetwork parse_network(std::string_view text) {
  std::vector<std::string> species;
  std::vector<Statement> statements;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    auto hash = line.find('#');
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    auto parsed = LineParser(line, line_no, species).run();
    statements.insert(statements.end(), parsed.begin(), parsed.end());
    start = end + 1;
  }
  if (statements.empty()) throw ParseError("no reactions found", line_no, 1);

  struct Pending {
    RawComplex reactant, product;
    std::string label;
    std::size_t line, column;
  };
  std::vector<Pending> pending;
  for (const auto& st : statements) {
    std::vector<Pending> local;
    std::size_t both_count = 0;
    for (std::size_t i = 0; i < st.arrows.size(); ++i) {
      const auto& left = st.complexes[i];
      const auto& right = st.complexes[i + 1];
      switch (st.arrows[i]) {
        case Arrow::Forward:
          local.push_back({left, right, "", st.line, st.column});
          break;
        case Arrow::Backward:
          local.push_back({right, left, "", st.line, st.column});
          break;
        case Arrow::Both:
          local.push_back({left, right, "", st.line, st.column});
          local.push_back({right, left, "", st.line, st.column});
          ++both_count;
          break;
      }
    }
    if (!st.labels.empty()) {
      if (st.labels.size() == local.size()) {
        for (std::size_t i = 0; i < local.size(); ++i) local[i].label = st.labels[i];
      } else if (st.labels.size() == 1 && st.arrows.size() == 1 && both_count == 1) {
        local[0].label = st.labels[0] + "_f";
        local[1].label = st.labels[0] + "_r";
      } else {
        throw ParseError("statement defines " + std::to_string(local.size()) + " reactions but gives " +
                             std::to_string(st.labels.size()) + " rate labels",
                         st.line, st.column);
      }
    }
    pending.insert(pending.end(), local.begin(), local.end());
  }

  const std::size_t n = species.size();
  std::vector<Reaction> reactions;
  std::set<std::string> explicit_labels;
  for (const auto& p : pending)
    if (!p.label.empty()) explicit_labels.insert(p.label);
  std::set<std::pair<Complex, Complex>> seen;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < pending.size(); ++i) {
    const auto& p = pending[i];
    Reaction r{densify(p.reactant, n), densify(p.product, n), p.label};
    if (r.rate_label.empty()) r.rate_label = "k" + std::to_string(i + 1);
    if (r.reactant == r.product) throw ParseError("reactant equals product (zero reaction vector)", p.line, p.column);
    if (!seen.emplace(r.reactant, r.product).second) throw ParseError("duplicate reaction", p.line, p.column);
    if (!labels.insert(r.rate_label).second)
      throw ParseError("duplicate rate label '" + r.rate_label + "'", p.line, p.column);
    reactions.push_back(std::move(r));
  }
  return ReactionNetwork(std::move(species), std::move(reactions));
}

std::string format_complex(const Complex& c, const std::vector<std::string>& species) {
  if (c.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c.coeffs.size(); ++j) {
    if (c.coeffs[j] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c.coeffs[j] != 1) os << c.coeffs[j];
    os << species[j];
  }
  return os.str();
}

std::string print_network(const ReactionNetwork& net) {
  std::ostringstream os;
  for (const auto& r : net.reactions())
    os << format_complex(r.reactant, net.species()) << " -> " << format_complex(r.product, net.species()) << " ; "
       << r.rate_label << "\n";
  return os.str();
}

bool same_network(const ReactionNetwork& a, const ReactionNetwork& b) {
  if (a.species_count() != b.species_count() || a.reaction_count() != b.reaction_count()) return false;
  std::vector<std::size_t> to_b(a.species_count());
  for (std::size_t j = 0; j < a.species_count(); ++j) {
    auto it = std::find(b.species().begin(), b.species().end(), a.species()[j]);
    if (it == b.species().end()) return false;
    to_b[j] = static_cast<std::size_t>(it - b.species().begin());
  }
  auto same_complex = [&](const Complex& x, const Complex& y) {
    for (std::size_t j = 0; j < x.coeffs.size(); ++j)
      if (x.coeffs[j] != y.coeffs[to_b[j]]) return false;
    return true;
  };
  for (std::size_t i = 0; i < a.reaction_count(); ++i) {
    const auto& ra = a.reaction(i);
    const auto& rb = b.reaction(i);
    if (ra.rate_label != rb.rate_label || !same_complex(ra.reactant, rb.reactant) ||
        !same_complex(ra.product, rb.product))
      return false;
  }
  return true;
}

RationalMatrix stoichiometric_matrix(const ReactionNetwork& net) {
  RationalMatrix m(net.species_count(), net.reaction_count());
  for (std::size_t i = 0; i < net.reaction_count(); ++i) {
    auto v = net.reaction(i).vector();
    for (std::size_t j = 0; j < v.size(); ++j) m(j, i) = Rational(static_cast<long>(v[j]));
  }
  return m;
}

ConservationMatrix conservation_matrix(const ReactionNetwork& net) {
  return null_space(stoichiometric_matrix(net).transpose());
}

std::size_t stoichiometric_dimension(const ReactionNetwork& net) { return rank(stoichiometric_matrix(net)); }

bool is_full_dimensional(const ReactionNetwork& net) {
  return stoichiometric_dimension(net) == net.species_count();
}

}  // namespace msr
