#include "fqirr/fixtures.hpp"

#include <array>
#include <cctype>
#include <stdexcept>
#include <string>

#include "fqirr/dickson.hpp"
#include "fqirr/errors.hpp"

namespace fqirr {

namespace {

constexpr std::array<std::string_view, 10> kExplicit3P2{{
    "q",
    "q^2",
    "+PM*q^2",
    "0",
    "(t7+MP*1)*q^3",
    "+PM*q^3",
    "(t9-t7+1)*q^4",
    "(1+MP*1)*q^4",
    "(t11-t9-1)*q^5",
    "tau2*q^2-q^5",
}};

constexpr std::array<std::string_view, 10> kExplicit3P3{{
    "q",
    "q^2",
    "0",
    "q^2",
    "+PM*q^3",
    "(-1+PM*1)*q^3",
    "(u9+MP*1)*q^4",
    "q^4-q+1",
    "(u11-u9)*q^5",
    "tau3*q^2-q^5",
}};

constexpr std::array<std::string_view, 10> kG0Dm1P2{{
    "1",
    "0",
    "(1+PM*1)*(q-1)",
    "0",
    "q^3+(t7+MP*1)*q*(q-1)-1",
    "(q-1)*(q^3+PM*q)",
    "q^5+q^2*(q-1)*(t9-t7+1)-1",
    "q^6-q^4+(1+MP*1)*q^2*(q-1)",
    "q^7+(q-1)*(q^3*(t11-t9-1)-1+MP*1)-1",
    "q^8-q^5-q^4+q^3+(q-1)*tau2",
}};

constexpr std::array<std::string_view, 10> kG0Dm1P3{{
    "0",
    "q-1",
    "0",
    "q^2-1",
    "q^3+PM*q*(q-1)-1",
    "q*(q-1)*(q^2+q-1+PM*1)",
    "q^5+q^2*(q-1)*(u9+MP*1)-1",
    "q^6+q^3-2*q^2-q+1",
    "q^7+q^3*(q-1)*(u11-u9)-q^3",
    "q^8-q^4-(q-1)*(+PM*q+1)+(q-1)*tau3",
}};

constexpr std::array<std::string_view, 10> kGcDm1P2{{
    "0",
    "0",
    "q+MP*1",
    "q^2",
    "q^3-q*(t7+MP*1)",
    "q^4+MP*q",
    "q^5-q^2*(t9-t7+1)",
    "q^6+(-1+PM*1)*q^2",
    "q^7-q^3*(t11-t9-1)-q+PM*1",
    "q^8+q^3-tau2",
}};

constexpr std::array<std::string_view, 10> kGcDm1P3{{
    "0",
    "0",
    "q",
    "q^2-1",
    "q^3+MP*q",
    "q^4+MP*q",
    "q^5-q^2*(u9+MP*1)",
    "q^6-2*q^2+1",
    "q^7-q^3*(u11-u9)",
    "q^8+PM*q-tau3",
}};

constexpr std::array<std::string_view, 30> kGc3EvenZero{{
    "1",
    "0",
    "0",
    "0",
    "q^3+q^2-q-1",
    "q^4-2*q^3+q^2",
    "q^5+q^3-q^2-1",
    "q^6-q^4",
    "q^7-q^4+q^3-1",
    "q^8-q^4",
    "q^9+q^5-q^4-1",
    "q^10-3*q^6+2*q^5",
    "q^11+q^6-q^5-1",
    "q^12-q^6",
    "q^13-q^7+q^6-q^3-q^2+q",
    "q^14-q^8",
    "q^15+q^8-q^7-1",
    "q^16-2*q^9+q^8-q^4+2*q^3-q^2",
    "q^17+q^9-q^8-1",
    "q^18-q^10",
    "q^19-q^10+q^9-q^5-q^3+q^2",
    "q^20-q^10",
    "q^21+q^11-q^10-1",
    "q^22-3*q^12+2*q^11-q^6+q^4",
    "q^23+q^12-q^11-q^3-q^2+q",
    "q^24-q^12",
    "q^25-q^13+q^12-q^7+q^4-q^3",
    "q^26-q^14",
    "q^27+q^14-q^13-1",
    "q^28-2*q^15+q^14-q^8+2*q^3-q^2",
}};

constexpr std::array<std::string_view, 30> kGc3OddZero{{
    "1",
    "0",
    "0",
    "0",
    "q^3-q^2+q-1",
    "q^4-q^2",
    "q^5+q^3-q^2-1",
    "q^6-3*q^4+2*q^3",
    "q^7+q^4-q^3-1",
    "q^8-q^4",
    "q^9-q^5+q^4-1",
    "q^10-q^6",
    "q^11-q^6+q^5-1",
    "q^12-q^6",
    "q^13+q^7-q^6-q^3+q^2-q",
    "q^14-3*q^8+2*q^7",
    "q^15+q^8-q^7-1",
    "q^16-q^8-q^4+q^2",
    "q^17-q^9+q^8-1",
    "q^18-q^10",
    "q^19-q^10+q^9-q^5-q^3+q^2",
    "q^20-q^10",
    "q^21+q^11-q^10-1",
    "q^22-3*q^12+2*q^11-q^6+3*q^4-2*q^3",
    "q^23+q^12-q^11-q^3+q^2-q",
    "q^24-q^12",
    "q^25-q^13+q^12-q^7-q^4+q^3",
    "q^26-q^14",
    "q^27-q^14+q^13-1",
    "q^28-q^14-q^8+q^2",
}};

constexpr std::array<std::string_view, 30> kGc3OddNonzero{{
    "0",
    "0",
    "q+1",
    "q^2",
    "q^3+q",
    "q^4-q^2",
    "q^5-q^2",
    "q^6+2*q^3",
    "q^7-q^3-q-1",
    "q^8-q^4",
    "q^9+q^4",
    "q^10-q^2",
    "q^11+q^5",
    "q^12-q^6",
    "q^13-q^6-q^3-2*q-1",
    "q^14+2*q^7",
    "q^15-q^7",
    "q^16-q^8-q^4+q^2",
    "q^17+q^8",
    "q^18-q^2",
    "q^19+q^9-q^5+q^2-q-1",
    "q^20-q^10",
    "q^21-q^10",
    "q^22+2*q^11-q^6-2*q^3",
    "q^23-q^11-q^3-q",
    "q^24-q^12",
    "q^25+q^12-q^7+q^3",
    "q^26-q^2",
    "q^27+q^13",
    "q^28-q^14-q^8+q^2",
}};

constexpr std::array<std::string_view, 30> kGc3EvenCube{{
    "0",
    "0",
    "q+MP*2*q^(1/2)+1",
    "q^2+PM*2*q^(3/2)",
    "q^3-q",
    "q^4+MP*2*q^(5/2)+q^2",
    "q^5-q^2",
    "q^6+PM*2*q^(7/2)",
    "q^7+MP*2*q^(7/2)+q^3-q+PM*2*q^(1/2)-1",
    "q^8-q^4",
    "q^9-q^4",
    "q^10+2*q^5-q^2+MP*2*q^(3/2)",
    "q^11-q^5",
    "q^12-q^6",
    "q^13+MP*2*q^(13/2)+q^6-q^3+PM*2*q^(1/2)-1",
    "q^14+PM*2*q^(15/2)",
    "q^15-q^7",
    "q^16+MP*2*q^(17/2)+q^8-q^4+PM*2*q^(5/2)-q^2",
    "q^17-q^8",
    "q^18+PM*2*q^(19/2)-q^2+MP*2*q^(3/2)",
    "q^19+MP*2*q^(19/2)+q^9-q^5+q^2-q+PM*2*q^(1/2)-1",
    "q^20-q^10",
    "q^21-q^10",
    "q^22+2*q^11-q^6+MP*2*q^(7/2)",
    "q^23-q^11-q^3+q",
    "q^24-q^12",
    "q^25+MP*2*q^(25/2)+q^12-q^7+PM*2*q^(7/2)-q^3",
    "q^26+PM*2*q^(27/2)-q^2+MP*2*q^(3/2)",
    "q^27-q^13",
    "q^28+MP*2*q^(29/2)+q^14-q^8+PM*2*q^(5/2)-q^2",
}};

constexpr std::array<std::string_view, 30> kGc3EvenNoncube{{
    "0",
    "0",
    "q+PM*q^(1/2)+1",
    "q^2+MP*q^(3/2)",
    "q^3-q",
    "q^4+PM*q^(5/2)+q^2",
    "q^5-q^2",
    "q^6+MP*q^(7/2)",
    "q^7+PM*q^(7/2)+q^3-q+MP*q^(1/2)-1",
    "q^8-q^4",
    "q^9-q^4",
    "q^10+2*q^5-q^2+PM*q^(3/2)",
    "q^11-q^5",
    "q^12-q^6",
    "q^13+PM*q^(13/2)+q^6-q^3+MP*q^(1/2)-1",
    "q^14+MP*q^(15/2)",
    "q^15-q^7",
    "q^16+PM*q^(17/2)+q^8-q^4+MP*q^(5/2)-q^2",
    "q^17-q^8",
    "q^18+MP*q^(19/2)-q^2+PM*q^(3/2)",
    "q^19+PM*q^(19/2)+q^9-q^5+q^2-q+MP*q^(1/2)-1",
    "q^20-q^10",
    "q^21-q^10",
    "q^22+2*q^11-q^6+PM*q^(7/2)",
    "q^23-q^11-q^3+q",
    "q^24-q^12",
    "q^25+PM*q^(25/2)+q^12-q^7+MP*q^(7/2)-q^3",
    "q^26+MP*q^(27/2)-q^2+PM*q^(3/2)",
    "q^27-q^13",
    "q^28+PM*q^(29/2)+q^14-q^8+MP*q^(5/2)-q^2",
}};

class Parser {
 public:
  Parser(std::string_view s, const FixtureEnv& env) : s_(s), env_(env) {}

  BigRat parse() {
    BigRat v = expr();
    skip();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("expression '" + std::string(s_) + "': " + why + " at " + std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long number() {
    skip();
    const std::size_t b = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (b == pos_) fail("expected a number");
    return std::stol(std::string(s_.substr(b, pos_ - b)));
  }

  BigRat expr() {
    BigRat v = term();
    for (;;) {
      if (eat('+')) {
        v += term();
      } else if (eat('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  BigRat term() {
    BigRat v = unary();
    while (eat('*')) v *= unary();
    return v;
  }

  BigRat unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  BigRat power() {
    skip();
    const bool is_q = pos_ < s_.size() && s_[pos_] == 'q' &&
                      (pos_ + 1 == s_.size() || !std::isalnum(static_cast<unsigned char>(s_[pos_ + 1])));
    BigRat base = atom();
    if (!eat('^')) return base;
    long num = 0, den = 1;
    if (eat('(')) {
      num = number();
      if (eat('/')) den = number();
      if (!eat(')')) fail("expected ')'");
    } else {
      num = number();
    }
    if (den == 1) return pow(base, static_cast<unsigned long>(num));
    if (den != 2 || !is_q) fail("only q may carry a half-integer exponent");
    const BigInt root = exact_sqrt(pow_ui(static_cast<unsigned long>(env_.p), static_cast<unsigned long>(env_.r)),
                                   "half power of q");
    return BigRat(pow(root, static_cast<unsigned long>(num)));
  }

  BigRat atom() {
    skip();
    if (eat('(')) {
      BigRat v = expr();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return BigRat(number());
    const std::size_t b = pos_;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    const std::string_view name = s_.substr(b, pos_ - b);
    if (name.empty()) fail("expected an operand");
    if (name == "q") return BigRat(pow_ui(static_cast<unsigned long>(env_.p), static_cast<unsigned long>(env_.r)));
    if (name == "PM") return BigRat(env_.pm);
    if (name == "MP") return BigRat(-env_.pm);
    try {
      return power_sum(constant_from_name(name), static_cast<unsigned>(env_.r));
    } catch (const std::invalid_argument&) {
      fail("unknown symbol '" + std::string(name) + "'");
    }
  }

  std::string_view s_;
  const FixtureEnv& env_;
  std::size_t pos_ = 0;
};

template <std::size_t N>
std::string_view row(const std::array<std::string_view, N>& table, unsigned m, const char* what) {
  if (m < 1 || m > N) throw std::out_of_range(std::string(what) + ": no printed row for m = " + std::to_string(m));
  return table[m - 1];
}

void check_p(int p) {
  if (p != 2 && p != 3) throw ScopeError("tables cover p = 2, 3 only");
}

}  // namespace

BigRat eval_expression(std::string_view expr, const FixtureEnv& env) { return Parser(expr, env).parse(); }

std::string_view explicit3_row(int p, unsigned m) {
  check_p(p);
  return p == 2 ? row(kExplicit3P2, m, "N'_m table") : row(kExplicit3P3, m, "N'_m table");
}

std::string_view g0_dm1_row(int p, unsigned m) {
  check_p(p);
  return p == 2 ? row(kG0Dm1P2, m, "G_{0,-1} table") : row(kG0Dm1P3, m, "G_{0,-1} table");
}

std::string_view gc_dm1_row(int p, unsigned m) {
  check_p(p);
  return p == 2 ? row(kGcDm1P2, m, "G_{c,-1} table") : row(kGcDm1P3, m, "G_{c,-1} table");
}

std::string_view gc3_row(Gc3Column col, unsigned m) {
  switch (col) {
    case Gc3Column::even_zero: return row(kGc3EvenZero, m, "G_{c,3} table");
    case Gc3Column::odd_zero: return row(kGc3OddZero, m, "G_{c,3} table");
    case Gc3Column::odd_nonzero: return row(kGc3OddNonzero, m, "G_{c,3} table");
    case Gc3Column::even_cube: return row(kGc3EvenCube, m, "G_{c,3} table");
    case Gc3Column::even_noncube: return row(kGc3EvenNoncube, m, "G_{c,3} table");
  }
  throw std::invalid_argument("unknown column");
}

std::string_view column_name(Gc3Column col) {
  switch (col) {
    case Gc3Column::even_zero: return "r-even:c=0";
    case Gc3Column::odd_zero: return "r-odd:c=0";
    case Gc3Column::odd_nonzero: return "r-odd:c!=0";
    case Gc3Column::even_cube: return "r-even:cube";
    case Gc3Column::even_noncube: return "r-even:non-cube";
  }
  throw std::invalid_argument("unknown column");
}

}  // namespace fqirr
