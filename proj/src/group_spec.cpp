#include "commprob/group_spec.hpp"

#include "commprob/errors.hpp"

#include <cctype>

namespace commprob {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = parse_spec();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError(pos_, "end of input");
    return spec;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c) throw ParseError(pos_, std::string("'") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  std::size_t integer() {
    skip_ws();
    std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1'000'000'000) throw ParseError(start, "integer at most 1000000000");
      ++pos_;
    }
    if (pos_ == start) throw ParseError(start, "integer");
    return value;
  }

  std::size_t bounded_integer(std::size_t min, const char* what) {
    skip_ws();
    std::size_t start = pos_;
    std::size_t v = integer();
    if (v < min) throw ParseError(start, std::string(what) + " >= " + std::to_string(min));
    return v;
  }

  GroupSpec parse_spec() {
    skip_ws();
    std::size_t start = pos_;
    std::string name = identifier();
    GroupSpec spec;
    if (name == "q8") {
      spec.kind = GroupSpec::Kind::Q8;
      return spec;
    }
    if (name == "prod") {
      spec.kind = GroupSpec::Kind::Prod;
      expect('(');
      spec.factors.push_back(parse_spec());
      expect(',');
      spec.factors.push_back(parse_spec());
      expect(')');
      return spec;
    }
    if (name == "perm") {
      spec.kind = GroupSpec::Kind::Perm;
      expect('(');
      spec.param = bounded_integer(1, "degree");
      expect(';');
      spec.generators.push_back(parse_generator(spec.param));
      while (peek(',')) {
        expect(',');
        spec.generators.push_back(parse_generator(spec.param));
      }
      expect(')');
      return spec;
    }
    std::size_t min = 1;
    if (name == "cyclic") {
      spec.kind = GroupSpec::Kind::Cyclic;
    } else if (name == "dihedral") {
      spec.kind = GroupSpec::Kind::Dihedral;
      min = 3;
    } else if (name == "sym") {
      spec.kind = GroupSpec::Kind::Sym;
    } else if (name == "alt") {
      spec.kind = GroupSpec::Kind::Alt;
    } else {
      throw ParseError(start, "one of cyclic, dihedral, sym, alt, q8, prod, perm");
    }
    expect('(');
    spec.param = bounded_integer(min, "parameter");
    expect(')');
    return spec;
  }

  GroupSpec::Generator parse_generator(std::size_t degree) {
    GroupSpec::Generator gen;
    gen.push_back(parse_cycle(degree));
    while (peek('(')) gen.push_back(parse_cycle(degree));
    return gen;
  }

  GroupSpec::Cycle parse_cycle(std::size_t degree) {
    expect('(');
    GroupSpec::Cycle cycle;
    do {
      skip_ws();
      std::size_t start = pos_;
      std::size_t point = integer();
      if (point < 1 || point > degree) throw ParseError(start, "point in 1.." + std::to_string(degree));
      for (auto p : cycle) {
        if (p == point) throw ParseError(start, "a point not already in this cycle");
      }
      cycle.push_back(static_cast<Permutation::Point>(point));
      skip_ws();
    } while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])));
    expect(')');
    return cycle;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "cyclic(" + std::to_string(param) + ")";
    case Kind::Dihedral: return "dihedral(" + std::to_string(param) + ")";
    case Kind::Sym: return "sym(" + std::to_string(param) + ")";
    case Kind::Alt: return "alt(" + std::to_string(param) + ")";
    case Kind::Q8: return "q8";
    case Kind::Prod: return "prod(" + factors.at(0).to_string() + "," + factors.at(1).to_string() + ")";
    case Kind::Perm: {
      std::string out = "perm(" + std::to_string(param) + ";";
      for (std::size_t g = 0; g < generators.size(); ++g) {
        out += g == 0 ? " " : ", ";
        for (const auto& cycle : generators[g]) {
          out += '(';
          for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i > 0) out += ' ';
            out += std::to_string(cycle[i]);
          }
          out += ')';
        }
      }
      return out + ")";
    }
  }
  return {};
}

GroupSpec parse_group_spec(std::string_view text) { return Parser(text).parse(); }

FiniteGroup build(const GroupSpec& spec, const Limits& limits) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic: return cyclic(spec.param, limits);
    case GroupSpec::Kind::Dihedral: return dihedral(spec.param, limits);
    case GroupSpec::Kind::Sym:
      if (spec.param > limits.max_symmetric_degree) {
        throw OrderCapExceeded("sym(" + std::to_string(spec.param) + ") exceeds the maximum degree");
      }
      return symmetric(static_cast<unsigned>(spec.param), limits);
    case GroupSpec::Kind::Alt:
      if (spec.param > limits.max_symmetric_degree) {
        throw OrderCapExceeded("alt(" + std::to_string(spec.param) + ") exceeds the maximum degree");
      }
      return alternating(static_cast<unsigned>(spec.param), limits);
    case GroupSpec::Kind::Q8: return quaternion();
    case GroupSpec::Kind::Prod: {
      FiniteGroup a = build(spec.factors.at(0), limits);
      FiniteGroup b = build(spec.factors.at(1), limits);
      return direct_product(a, b, limits);
    }
    case GroupSpec::Kind::Perm: {
      std::vector<Permutation> gens;
      for (const auto& g : spec.generators) gens.push_back(Permutation::from_cycles(spec.param, g));
      return closure(gens, spec.param, limits).renamed(spec.to_string());
    }
  }
  throw InvalidParameter("unknown group spec kind");
}

}  // namespace commprob
