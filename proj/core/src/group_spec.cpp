#include <cctype>
#include <charconv>

#include "hallpi/constructors.hpp"
#include "hallpi/error.hpp"

namespace hallpi {

namespace {

constexpr int kMaxDepth = 4;

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  GroupSpec parse() {
    GroupSpec spec = group(1);
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::int64_t value = 0;
    auto first = text_.data() + start + (start < text_.size() && text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc() || ptr != text_.data() + pos_) {
      pos_ = start;
      fail("expected an integer");
    }
    return value;
  }

  GroupSpec group(int depth) {
    if (depth > kMaxDepth) fail("nesting deeper than " + std::to_string(kMaxDepth));
    skip_space();
    std::size_t name_pos = pos_;
    std::string name = identifier();
    GroupSpec spec;
    static const std::pair<const char*, Family> families[] = {
        {"Sym", Family::Sym},       {"Alt", Family::Alt},        {"Cyclic", Family::Cyclic},
        {"Dihedral", Family::Dihedral}, {"GL", Family::GL},      {"SL", Family::SL},
        {"PSL", Family::PSL},       {"PGL", Family::PGL},        {"Direct", Family::Direct},
        {"Semidirect", Family::Semidirect}, {"FromFile", Family::FromFile}};
    bool known = false;
    for (const auto& [n, f] : families) {
      if (name == n) {
        spec.family = f;
        known = true;
      }
    }
    if (!known) {
      pos_ = name_pos;
      fail("unknown group family '" + name + "'");
    }
    expect('(');
    switch (spec.family) {
      case Family::Sym:
      case Family::Alt:
      case Family::Cyclic:
      case Family::Dihedral: {
        std::int64_t n = integer();
        if (n < 1) throw RangeError(name + ": n = " + std::to_string(n) + " out of range");
        spec.params = {n};
        break;
      }
      case Family::GL:
      case Family::SL:
      case Family::PSL:
      case Family::PGL: {
        std::int64_t n = integer();
        expect(',');
        std::int64_t q = integer();
        if (n < 1) throw RangeError(name + ": n = " + std::to_string(n) + " out of range");
        if (q < 2 || q > 32 || !FiniteField::supported(static_cast<std::uint32_t>(q))) {
          throw RangeError(name + ": q = " + std::to_string(q) + " is not a supported prime power");
        }
        spec.params = {n, q};
        break;
      }
      case Family::Direct:
        spec.children.push_back(group(depth + 1));
        while (accept(',')) spec.children.push_back(group(depth + 1));
        if (spec.children.size() < 2) fail("Direct needs at least two factors");
        break;
      case Family::Semidirect: {
        spec.children.push_back(group(depth + 1));
        expect(',');
        std::size_t aut_pos = pos_;
        spec.automorphism = identifier();
        if (spec.automorphism == "Images") {
          expect('[');
          std::size_t start = pos_;
          std::string current;
          while (pos_ < text_.size() && text_[pos_] != ']') {
            if (text_[pos_] == ';') {
              spec.images.push_back(trim(current));
              current.clear();
            } else {
              current += text_[pos_];
            }
            ++pos_;
          }
          if (pos_ >= text_.size()) {
            pos_ = start;
            fail("unterminated image list");
          }
          spec.images.push_back(trim(current));
          ++pos_;
        } else if (spec.automorphism != "TransposeInverse" && spec.automorphism != "Swap") {
          pos_ = aut_pos;
          fail("unknown automorphism '" + spec.automorphism + "'");
        }
        break;
      }
      case Family::FromFile: {
        skip_space();
        std::size_t start = pos_;
        int nesting = 0;
        while (pos_ < text_.size() && (text_[pos_] != ')' || nesting > 0)) {
          if (text_[pos_] == '(') ++nesting;
          if (text_[pos_] == ')') --nesting;
          ++pos_;
        }
        spec.path = trim(std::string(text_.substr(start, pos_ - start)));
        if (spec.path.empty()) fail("empty file name");
        break;
      }
    }
    expect(')');
    return spec;
  }

  static std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpec parse_group_spec(std::string_view text) { return SpecParser(text).parse(); }

}  // namespace hallpi
