#include "powergraph/group_spec.hpp"

#include <cctype>
#include <limits>
#include <optional>
#include <utility>

#include "powergraph/arith.hpp"

namespace powergraph {

GroupSpec GroupSpec::atom(Kind kind, std::uint64_t param, std::uint64_t param2) {
  GroupSpec s;
  s.kind = kind;
  s.param = param;
  s.param2 = param2;
  return s;
}

GroupSpec GroupSpec::table(std::string path) {
  GroupSpec s;
  s.kind = Kind::kTable;
  s.path = std::move(path);
  return s;
}

GroupSpec GroupSpec::product(GroupSpec lhs, GroupSpec rhs) {
  GroupSpec s;
  s.kind = Kind::kProduct;
  s.operands.push_back(std::move(lhs));
  s.operands.push_back(std::move(rhs));
  return s;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::kCyclic: return "Z(" + std::to_string(param) + ")";
    case Kind::kDihedral: return "D(" + std::to_string(param) + ")";
    case Kind::kQuaternion: return "Q(" + std::to_string(param) + ")";
    case Kind::kSymmetric: return "S(" + std::to_string(param) + ")";
    case Kind::kAlternating: return "A(" + std::to_string(param) + ")";
    case Kind::kElementaryAbelian:
      return "E(" + std::to_string(param) + "," + std::to_string(param2) + ")";
    case Kind::kTable: return "table:" + path;
    case Kind::kProduct:
      // The parser only builds left-leaning trees, so no parentheses needed.
      return operands[0].to_string() + "x" + operands[1].to_string();
  }
  return {};
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    skip_ws();
    if (at_end()) throw GroupSpecError(pos_, "empty group expression");
    GroupSpec result = parse_atom();
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (text_[pos_] != 'x') throw GroupSpecError(pos_, "expected 'x' or end of input");
      ++pos_;
      skip_ws();
      if (at_end()) throw GroupSpecError(pos_, "expected a group after 'x'");
      result = GroupSpec::product(std::move(result), parse_atom());
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (at_end() || text_[pos_] != c)
      throw GroupSpecError(pos_, std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t parse_int() {
    skip_ws();
    std::size_t start = pos_;
    if (!at_end() && text_[pos_] == '-')
      throw GroupSpecError(pos_, "parameters must be positive integers");
    std::uint64_t value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      std::uint64_t digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
        throw GroupSpecError(start, "integer too large");
      value = value * 10 + digit;
      ++pos_;
    }
    if (pos_ == start) throw GroupSpecError(pos_, "expected an integer");
    return value;
  }

  GroupSpec parse_atom() {
    if (text_.substr(pos_, 6) == "table:") {
      pos_ += 6;
      std::size_t path_start = pos_;
      while (!at_end() && !std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == path_start) throw GroupSpecError(path_start, "empty table path");
      return GroupSpec::table(std::string(text_.substr(path_start, pos_ - path_start)));
    }

    char name = text_[pos_];
    GroupSpec::Kind kind;
    switch (name) {
      case 'Z': kind = GroupSpec::Kind::kCyclic; break;
      case 'D': kind = GroupSpec::Kind::kDihedral; break;
      case 'Q': kind = GroupSpec::Kind::kQuaternion; break;
      case 'S': kind = GroupSpec::Kind::kSymmetric; break;
      case 'A': kind = GroupSpec::Kind::kAlternating; break;
      case 'E': kind = GroupSpec::Kind::kElementaryAbelian; break;
      default: throw GroupSpecError(pos_, "unknown group family (expected Z, D, Q, S, A, E or table:)");
    }
    ++pos_;
    expect('(');
    std::size_t arg_pos = pos_;
    std::uint64_t a = parse_int();
    std::optional<std::uint64_t> b;
    skip_ws();
    if (!at_end() && text_[pos_] == ',') {
      ++pos_;
      b = parse_int();
    }
    expect(')');

    if (kind == GroupSpec::Kind::kElementaryAbelian) {
      if (!b) throw GroupSpecError(arg_pos, "E(p,k) takes two parameters");
      if (!arith::is_prime(a)) throw GroupSpecError(arg_pos, "E(p,k): p must be prime");
      if (*b < 1) throw GroupSpecError(arg_pos, "E(p,k): k must be >= 1");
      return GroupSpec::atom(kind, a, *b);
    }
    if (b) throw GroupSpecError(arg_pos, std::string(1, name) + "(n) takes one parameter");
    if (a < 1) throw GroupSpecError(arg_pos, std::string(1, name) + "(n): n must be >= 1");
    if (kind == GroupSpec::Kind::kQuaternion) {
      bool power_of_two = (a & (a - 1)) == 0;
      if (!power_of_two || a < 8)
        throw GroupSpecError(arg_pos, "Q(n): order must be 2^m with m >= 3");
    }
    return GroupSpec::atom(kind, a);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return Parser(text).parse(); }

}  // namespace powergraph
