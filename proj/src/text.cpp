#include "qpknot/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>
#include <sstream>

namespace qpknot {

namespace {

class Cursor {
public:
  Cursor(std::string_view text, std::size_t offset = 0) : text_(text), offset_(offset) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  bool accept(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  std::size_t position() {
    skip_space();
    return offset_ + pos_;
  }
  std::size_t raw_position() const { return pos_; }
  void set_raw_position(std::size_t p) { pos_ = p; }
  std::string_view text() const { return text_; }

  long long integer(bool allow_sign) {
    skip_space();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    if (allow_sign && end < text_.size() && (text_[end] == '-' || text_[end] == '+')) ++end;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end]))) ++end;
    const char* first = text_.data() + start;
    if (first < text_.data() + end && *first == '+') ++first;
    long long value = 0;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + end, value);
    if (ec != std::errc() || ptr != text_.data() + end || end == start) fail("expected an integer");
    if (value > std::numeric_limits<int>::max() || value < std::numeric_limits<int>::min())
      fail("integer out of range");
    pos_ = end;
    return value;
  }

  [[noreturn]] void fail(const std::string& what) { throw ParseError(what, position()); }

private:
  std::string_view text_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

// ---- braid text -------------------------------------------------------------

struct Item {
  enum class Kind { Letter, Band, Conjugate } kind = Kind::Letter;
  int letter = 0;
  BandGenerator band;
  std::vector<Item> conjugator;
  int index = 0;
  std::size_t position = 0;
};

class BraidParser {
public:
  explicit BraidParser(Cursor& cur) : cur_(cur) {}

  std::vector<Item> items(char stop) {
    std::vector<Item> out;
    while (!cur_.at_end() && cur_.peek() != stop && cur_.peek() != '@') {
      std::vector<Item> atom = this->atom();
      int repeat = 1;
      if (cur_.accept('^')) {
        const std::size_t at = cur_.position();
        const long long k = cur_.integer(false);
        if (k > 100000) throw ParseError("repeat count too large", at);
        repeat = static_cast<int>(k);
      }
      for (int r = 0; r < repeat; ++r) out.insert(out.end(), atom.begin(), atom.end());
    }
    return out;
  }

private:
  std::vector<Item> atom() {
    const std::size_t at = cur_.position();
    Item item;
    item.position = at;
    if (cur_.accept('s')) {
      const long long k = cur_.integer(false);
      if (k < 1) throw ParseError("generator index must be >= 1", at);
      item.letter = static_cast<int>(k);
      if (cur_.accept('\'')) item.letter = -item.letter;
      return {item};
    }
    if (cur_.accept('b')) {
      item.kind = Item::Kind::Band;
      item.band.i = static_cast<int>(cur_.integer(false));
      cur_.expect(',');
      item.band.j = static_cast<int>(cur_.integer(false));
      if (item.band.i < 1 || item.band.j <= item.band.i) throw ParseError("band generator needs 1 <= i < j", at);
      return {item};
    }
    if (cur_.accept("c[")) {
      item.kind = Item::Kind::Conjugate;
      item.conjugator = items('|');
      for (const Item& inner : item.conjugator) {
        if (inner.kind == Item::Kind::Conjugate) throw ParseError("nested conjugates are not supported", inner.position);
      }
      cur_.expect('|');
      const std::size_t index_at = cur_.position();
      const long long k = cur_.integer(false);
      if (k < 1) throw ParseError("generator index must be >= 1", index_at);
      item.index = static_cast<int>(k);
      cur_.expect(']');
      return {item};
    }
    if (cur_.accept('(')) {
      std::vector<Item> group = items(')');
      cur_.expect(')');
      return group;
    }
    cur_.fail("expected s<k>, b<i>,<j>, c[...] or (");
  }

  Cursor& cur_;
};

int required_strands(const Item& item) {
  switch (item.kind) {
    case Item::Kind::Letter: return std::abs(item.letter) + 1;
    case Item::Kind::Band: return item.band.j;
    case Item::Kind::Conjugate: {
      int n = item.index + 1;
      for (const Item& inner : item.conjugator) n = std::max(n, required_strands(inner));
      return n;
    }
  }
  return 1;
}

void append_letters(const Item& item, int strands, std::vector<int>& out) {
  switch (item.kind) {
    case Item::Kind::Letter: out.push_back(item.letter); break;
    case Item::Kind::Band: {
      const auto& letters = expand_band(item.band, strands).letters();
      out.insert(out.end(), letters.begin(), letters.end());
      break;
    }
    case Item::Kind::Conjugate: {
      std::vector<int> w;
      for (const Item& inner : item.conjugator) append_letters(inner, strands, w);
      out.insert(out.end(), w.begin(), w.end());
      out.push_back(item.index);
      for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
      break;
    }
  }
}

BraidPresentation parse_presentation_at(std::string_view text, std::size_t offset) {
  Cursor cur(text, offset);
  BraidParser parser(cur);
  std::vector<Item> items = parser.items('\0');
  int strands = 1;
  for (const Item& item : items) strands = std::max(strands, required_strands(item));
  if (cur.accept('@')) {
    const std::size_t at = cur.position();
    const long long n = cur.integer(false);
    if (n < 1) throw ParseError("strand count must be >= 1", at);
    for (const Item& item : items) {
      if (required_strands(item) > n) {
        throw ParseError("generator index out of range for " + std::to_string(n) + " strands", item.position);
      }
    }
    strands = static_cast<int>(n);
  }
  if (!cur.at_end()) cur.fail("unexpected character");

  std::vector<int> letters;
  for (const Item& item : items) append_letters(item, strands, letters);

  const bool all_bands = !items.empty() && std::all_of(items.begin(), items.end(), [](const Item& i) {
    return i.kind == Item::Kind::Band;
  });
  const bool all_factors = !items.empty() && std::all_of(items.begin(), items.end(), [](const Item& i) {
    return i.kind != Item::Kind::Letter;
  });
  if (all_bands) {
    BandFactorization f{strands, {}};
    for (const Item& item : items) f.bands.push_back(item.band);
    return BraidPresentation::from_bands(std::move(f));
  }
  if (all_factors) {
    QPFactorization f{strands, {}};
    for (const Item& item : items) {
      if (item.kind == Item::Kind::Band) {
        auto converted = as_qp(BandFactorization{strands, {item.band}});
        f.factors.push_back(converted.factors.front());
      } else {
        std::vector<int> w;
        for (const Item& inner : item.conjugator) append_letters(inner, strands, w);
        f.factors.push_back({BraidWord(strands, std::move(w)), item.index});
      }
    }
    return BraidPresentation::from_qp(std::move(f));
  }
  return BraidPresentation::plain(BraidWord(strands, std::move(letters)));
}

void write_letters(std::ostream& out, const std::vector<int>& letters, bool& first) {
  for (int k : letters) {
    if (!first) out << ' ';
    first = false;
    out << 's' << std::abs(k);
    if (k < 0) out << '\'';
  }
}

// ---- expression text --------------------------------------------------------

class ExprParser {
public:
  explicit ExprParser(std::string_view text) : cur_(text) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    if (!cur_.at_end()) cur_.fail("unexpected character");
    return e;
  }

private:
  template <class F>
  ExprPtr guarded(std::size_t at, F&& build) {
    try {
      return build();
    } catch (const DomainError& err) {
      throw ParseError(err.what(), at);
    }
  }

  ExprPtr sum() {
    const std::size_t at = cur_.position();
    std::vector<ExprPtr> parts{unary()};
    while (cur_.accept('#')) parts.push_back(unary());
    if (parts.size() == 1) return parts.front();
    return guarded(at, [&] { return make_connected_sum(std::move(parts)); });
  }

  ExprPtr unary() {
    ExprPtr e = primary();
    Assertions a = e->asserted;
    bool any = false;
    while (cur_.accept('{')) {
      any = true;
      do {
        flag(a);
      } while (cur_.accept(','));
      cur_.expect('}');
    }
    return any ? with_assertions(e, std::move(a)) : e;
  }

  void flag(Assertions& a) {
    const std::size_t at = cur_.position();
    auto value = [&](std::optional<AssertedValue>& slot) {
      cur_.expect('=');
      slot = AssertedValue{cur_.integer(true), "asserted in input"};
    };
    if (cur_.accept("fibered")) {
      a.fibered = true;
    } else if (cur_.accept("alternating")) {
      a.alternating = true;
    } else if (cur_.accept("tb")) {
      value(a.tb);
    } else if (cur_.accept("g4")) {
      value(a.g4);
    } else if (cur_.accept("genus")) {
      value(a.genus);
    } else {
      throw ParseError("unknown flag (expected fibered, alternating, tb=, g4= or genus=)", at);
    }
  }

  int integer() { return static_cast<int>(cur_.integer(true)); }

  ExprPtr primary() {
    const std::size_t at = cur_.position();
    if (cur_.accept("T(")) {
      const int p = integer();
      cur_.expect(',');
      const int q = integer();
      cur_.expect(')');
      return guarded(at, [&] { return make_torus(p, q); });
    }
    if (cur_.accept("unknot")) return make_torus(1, 1);
    if (cur_.accept("cable[")) {
      std::vector<CableStage> stages;
      do {
        cur_.expect('(');
        CableStage s;
        s.p = integer();
        cur_.expect(',');
        s.n = integer();
        cur_.expect(')');
        stages.push_back(s);
      } while (cur_.accept(','));
      cur_.expect(']');
      return guarded(at, [&] { return make_iterated_torus(std::move(stages)); });
    }
    if (cur_.accept("twist(")) {
      const int n = integer();
      cur_.expect(')');
      return make_twist(n);
    }
    if (cur_.accept("wh+(")) {
      ExprPtr companion = sum();
      cur_.expect(';');
      const int n = integer();
      cur_.expect(')');
      return make_whitehead_double(std::move(companion), n);
    }
    if (cur_.accept("mirror(")) {
      ExprPtr child = sum();
      cur_.expect(')');
      return make_mirror(std::move(child));
    }
    if (cur_.accept("closure(")) {
      cur_.expect('"');
      const std::size_t start = cur_.raw_position();
      const std::size_t close = cur_.text().find('"', start);
      if (close == std::string_view::npos) throw ParseError("unterminated braid string", start - 1);
      const std::string_view inner = cur_.text().substr(start, close - start);
      BraidPresentation braid = parse_presentation_at(inner, start);
      cur_.set_raw_position(close + 1);
      cur_.expect(')');
      return guarded(at, [&] { return make_closure(std::move(braid)); });
    }
    if (cur_.accept('(')) {
      ExprPtr e = sum();
      cur_.expect(')');
      return e;
    }
    cur_.fail("expected T(, unknot, cable[, twist(, wh+(, mirror(, closure( or (");
  }

  Cursor cur_;
};

std::string format_flags(const Assertions& a) {
  if (a.empty()) return {};
  std::vector<std::string> parts;
  if (a.fibered) parts.emplace_back("fibered");
  if (a.alternating) parts.emplace_back("alternating");
  if (a.tb) parts.push_back("tb=" + std::to_string(a.tb->value));
  if (a.g4) parts.push_back("g4=" + std::to_string(a.g4->value));
  if (a.genus) parts.push_back("genus=" + std::to_string(a.genus->value));
  std::string out = "{";
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "," : "") + parts[k];
  return out + "}";
}

std::string format_node(const KnotExpression& e);

std::string format_summand(const ExprPtr& e) {
  const std::string text = format_node(*e);
  if (std::holds_alternative<ConnectedSumNode>(e->node)) return "(" + text + ")" + format_flags(e->asserted);
  return text + format_flags(e->asserted);
}

std::string format_node(const KnotExpression& e) {
  struct Visitor {
    std::string operator()(const TorusNode& t) const {
      return "T(" + std::to_string(t.p) + "," + std::to_string(t.q) + ")";
    }
    std::string operator()(const IteratedTorusNode& it) const {
      std::string out = "cable[";
      for (std::size_t k = 0; k < it.stages.size(); ++k) {
        out += (k ? ",(" : "(") + std::to_string(it.stages[k].p) + "," + std::to_string(it.stages[k].n) + ")";
      }
      return out + "]";
    }
    std::string operator()(const TwistNode& t) const { return "twist(" + std::to_string(t.n) + ")"; }
    std::string operator()(const WhiteheadDoubleNode& d) const {
      return "wh+(" + format_expression(*d.companion) + "; " + std::to_string(d.n) + ")";
    }
    std::string operator()(const ConnectedSumNode& s) const {
      std::string out;
      for (std::size_t k = 0; k < s.summands.size(); ++k) out += (k ? " # " : "") + format_summand(s.summands[k]);
      return out;
    }
    std::string operator()(const MirrorNode& m) const { return "mirror(" + format_expression(*m.child) + ")"; }
    std::string operator()(const BraidClosureNode& c) const {
      return "closure(\"" + format_presentation(c.braid) + "\")";
    }
  };
  return std::visit(Visitor{}, e.node);
}

}  // namespace

BraidPresentation parse_braid_presentation(std::string_view text) { return parse_presentation_at(text, 0); }

BraidWord parse_braid_text(std::string_view text) { return parse_braid_presentation(text).word; }

std::string format_braid(const BraidWord& w) {
  std::ostringstream out;
  bool first = true;
  write_letters(out, w.letters(), first);
  out << (first ? "@" : " @") << w.strands();
  return out.str();
}

std::string format_presentation(const BraidPresentation& p) {
  std::ostringstream out;
  bool first = true;
  if (p.bands) {
    for (const BandGenerator& band : p.bands->bands) {
      out << (first ? "" : " ") << 'b' << band.i << ',' << band.j;
      first = false;
    }
  } else if (p.qp) {
    for (const QPFactor& factor : p.qp->factors) {
      out << (first ? "" : " ") << "c[";
      bool inner_first = true;
      write_letters(out, factor.conjugator.letters(), inner_first);
      out << '|' << factor.index << ']';
      first = false;
    }
  } else {
    write_letters(out, p.word.letters(), first);
  }
  out << (first ? "@" : " @") << p.word.strands();
  return out.str();
}

ExprPtr parse_expression_text(std::string_view text) { return ExprParser(text).parse(); }

std::string format_expression(const KnotExpression& e) {
  if (std::holds_alternative<ConnectedSumNode>(e.node) && !e.asserted.empty()) {
    return "(" + format_node(e) + ")" + format_flags(e.asserted);
  }
  return format_node(e) + format_flags(e.asserted);
}

void read_tb_table(std::istream& in, TbTable& table) {
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab == std::string::npos ? std::string::npos : tab - start));
      if (tab == std::string::npos) break;
      start = tab + 1;
    }
    if (fields.size() < 2) throw ParseError("TB table line needs name<TAB>tb<TAB>source", number);

    ExprPtr name;
    try {
      name = parse_expression_text(fields[0]);
    } catch (const ParseError& err) {
      throw ParseError(std::string("TB table name: ") + err.what() + ", line", number);
    }
    if (!name->asserted.empty()) throw ParseError("TB table names cannot carry flags", number);

    Cursor cur(fields[1]);
    long long tb = 0;
    try {
      tb = cur.integer(true);
      if (!cur.at_end()) cur.fail("unexpected character");
    } catch (const ParseError&) {
      throw ParseError("TB table value must be an integer", number);
    }
    std::string source = fields.size() >= 3 ? fields[2] : std::string("tb table");
    table.set(format_expression(*name), {tb, std::move(source)});
  }
}

}  // namespace qpknot
