#include "ftloop/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "ftloop/error.hpp"

namespace ftloop {

namespace {

struct Pos {
  std::size_t line = 1;
  std::size_t column = 1;
};

enum class Tok { Ident, Number, Basic, Gate, Top, Eq, Or, And, LParen, RParen, Comma, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  Pos pos;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

[[noreturn]] void syntax_error(const Pos& pos, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, what, pos.line, pos.column);
}

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  Pos pos;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t j = 0; j < n; ++j, ++i) {
      if (text[i] == '\n') {
        ++pos.line;
        pos.column = 1;
      } else {
        ++pos.column;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance(1);
      continue;
    }
    Token tok;
    tok.pos = pos;
    if (ident_start(c)) {
      std::size_t end = i;
      while (end < text.size() && ident_char(text[end])) ++end;
      tok.text = std::string(text.substr(i, end - i));
      if (tok.text == "basic") tok.kind = Tok::Basic;
      else if (tok.text == "gate") tok.kind = Tok::Gate;
      else if (tok.text == "top") tok.kind = Tok::Top;
      else tok.kind = Tok::Ident;
      advance(end - i);
    } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t end = i;
      while (end < text.size()) {
        char d = text[end];
        bool exp_sign = (d == '+' || d == '-') && end > i &&
                        (text[end - 1] == 'e' || text[end - 1] == 'E');
        if (std::isdigit(static_cast<unsigned char>(d)) || d == '.' || d == 'e' || d == 'E' ||
            exp_sign) {
          ++end;
        } else {
          break;
        }
      }
      tok.kind = Tok::Number;
      tok.text = std::string(text.substr(i, end - i));
      advance(end - i);
    } else {
      switch (c) {
        case '=': tok.kind = Tok::Eq; break;
        case '|': tok.kind = Tok::Or; break;
        case '&': tok.kind = Tok::And; break;
        case '(': tok.kind = Tok::LParen; break;
        case ')': tok.kind = Tok::RParen; break;
        case ',': tok.kind = Tok::Comma; break;
        default: {
          std::string shown = std::isprint(static_cast<unsigned char>(c))
                                  ? std::string(1, c)
                                  : "\\x" + std::to_string(static_cast<unsigned char>(c));
          syntax_error(pos, "unexpected character '" + shown + "'");
        }
      }
      tok.text = std::string(1, c);
      advance(1);
    }
    out.push_back(std::move(tok));
  }
  Token end;
  end.kind = Tok::End;
  end.pos = pos;
  out.push_back(end);
  return out;
}

std::string describe(const Token& t) {
  return t.kind == Tok::End ? std::string("end of input") : "'" + t.text + "'";
}

class TreeParser {
 public:
  explicit TreeParser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  FaultTree run() {
    while (peek().kind != Tok::End) statement();
    try {
      return build_tree(std::move(basics_), std::move(gates_), std::move(tops_));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::EmptyTops) throw e.at(peek().pos.line, peek().pos.column);
      auto it = where_.find(e.subject());
      if (it != where_.end()) throw e.at(it->second.line, it->second.column);
      throw;
    }
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(cur_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[cur_];
    if (cur_ + 1 < toks_.size()) ++cur_;
    return t;
  }
  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) syntax_error(peek().pos, std::string("expected ") + what +
                                                          ", found " + describe(peek()));
    return next();
  }

  void remember(const Token& t) { where_.emplace(t.text, t.pos); }

  void declare(const Token& t) {
    if (!declared_.insert(t.text).second) {
      throw Error(ErrorCode::DuplicateId, "identifier " + t.text + " declared twice", t.pos.line,
                  t.pos.column, t.text);
    }
    where_[t.text] = t.pos;
  }

  void statement() {
    const Token& head = next();
    switch (head.kind) {
      case Tok::Basic: return basic();
      case Tok::Gate: return gate();
      case Tok::Top: return top();
      default:
        syntax_error(head.pos, "expected 'basic', 'gate' or 'top', found " + describe(head));
    }
  }

  void basic() {
    const Token& id = expect(Tok::Ident, "basic event identifier");
    declare(id);
    BasicEventDef def;
    def.id = id.text;
    bool seen_p = false;
    bool seen_kind = false;
    while (peek().kind == Tok::Ident && peek(1).kind == Tok::Eq) {
      const Token& key = next();
      next();
      if (key.text == "p" && !seen_p) {
        seen_p = true;
        const Token& num = expect(Tok::Number, "probability");
        double value = 0.0;
        auto [ptr, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), value);
        if (ec != std::errc() || ptr != num.text.data() + num.text.size() || !std::isfinite(value)) {
          syntax_error(num.pos, "malformed number '" + num.text + "'");
        }
        if (value < 0.0 || value > 1.0) {
          throw Error(ErrorCode::BadProbability,
                      "basic event " + def.id + " has probability outside [0,1]", num.pos.line,
                      num.pos.column, def.id);
        }
        def.prob = value;
      } else if (key.text == "kind" && !seen_kind) {
        seen_kind = true;
        const Token& kind = expect(Tok::Ident, "'nonrepairable' or 'repairable'");
        if (kind.text == "nonrepairable") def.kind = EventKind::NonRepairable;
        else if (kind.text == "repairable") def.kind = EventKind::Repairable;
        else syntax_error(kind.pos, "unknown kind '" + kind.text + "'");
      } else {
        syntax_error(key.pos, "unexpected attribute '" + key.text + "'");
      }
    }
    basics_.push_back(std::move(def));
  }

  void gate() {
    const Token& id = expect(Tok::Ident, "gate identifier");
    declare(id);
    expect(Tok::Eq, "'='");
    GateDef def;
    def.id = id.text;
    def.body = expr();
    gates_.push_back(std::move(def));
  }

  void top() {
    while (true) {
      const Token& id = expect(Tok::Ident, "top gate identifier");
      remember(id);
      tops_.push_back(id.text);
      if (peek().kind != Tok::Comma) break;
      next();
    }
  }

  Expr expr() {
    std::vector<Expr> terms;
    terms.push_back(term());
    while (peek().kind == Tok::Or) {
      next();
      terms.push_back(term());
    }
    return terms.size() == 1 ? std::move(terms.front()) : Expr::any_of(std::move(terms));
  }

  Expr term() {
    std::vector<Expr> factors;
    factors.push_back(factor());
    while (peek().kind == Tok::And) {
      next();
      factors.push_back(factor());
    }
    return factors.size() == 1 ? std::move(factors.front()) : Expr::all_of(std::move(factors));
  }

  Expr factor() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      next();
      Expr inner = expr();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind == Tok::Ident && t.text == "koon" && peek(1).kind == Tok::LParen) {
      next();
      next();
      const Token& num = expect(Tok::Number, "koon threshold");
      int k = 0;
      auto [ptr, ec] = std::from_chars(num.text.data(), num.text.data() + num.text.size(), k);
      if (ec != std::errc() || ptr != num.text.data() + num.text.size()) {
        syntax_error(num.pos, "malformed integer '" + num.text + "'");
      }
      std::vector<std::string> inputs;
      while (peek().kind == Tok::Comma) {
        next();
        const Token& id = expect(Tok::Ident, "koon input identifier");
        remember(id);
        inputs.push_back(id.text);
      }
      const Token& close = expect(Tok::RParen, "')'");
      if (inputs.empty()) syntax_error(close.pos, "koon needs at least one input");
      if (k < 1 || k > static_cast<int>(inputs.size())) {
        throw Error(ErrorCode::BadKooN,
                    "koon(" + std::to_string(k) + ") over " + std::to_string(inputs.size()) +
                        " inputs",
                    num.pos.line, num.pos.column);
      }
      return Expr::koon(k, std::move(inputs));
    }
    if (t.kind == Tok::Ident) {
      remember(t);
      return Expr::ref(next().text);
    }
    syntax_error(t.pos, "expected identifier, '(' or koon(...), found " + describe(t));
  }

  std::vector<Token> toks_;
  std::size_t cur_ = 0;
  std::vector<BasicEventDef> basics_;
  std::vector<GateDef> gates_;
  std::vector<std::string> tops_;
  std::set<std::string> declared_;
  std::map<std::string, Pos> where_;
};

void write_expr(std::ostringstream& out, const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Ref:
    case Expr::Kind::Basic:
    case Expr::Kind::Gate:
      out << e.id;
      return;
    case Expr::Kind::KooN:
      out << "koon(" << e.k;
      for (const auto& c : e.children) out << ", " << c.id;
      out << ')';
      return;
    case Expr::Kind::Or:
    case Expr::Kind::And: {
      const char* op = e.kind == Expr::Kind::Or ? " | " : " & ";
      out << '(';
      for (std::size_t i = 0; i < e.children.size(); ++i) {
        if (i > 0) out << op;
        write_expr(out, e.children[i]);
      }
      out << ')';
      return;
    }
  }
}

}  // namespace

FaultTree parse_tree(std::string_view text) { return TreeParser(lex(text)).run(); }

std::string serialize(const Expr& expr) {
  std::ostringstream out;
  write_expr(out, expr);
  return out.str();
}

std::string serialize(const FaultTree& tree) {
  std::ostringstream out;
  for (const auto& b : tree.basics()) {
    out << "basic " << b.id;
    if (b.prob) {
      char buf[32];
      auto res = std::to_chars(buf, buf + sizeof buf, *b.prob);
      out << " p=" << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
    }
    if (b.kind == EventKind::Repairable) out << " kind=repairable";
    out << '\n';
  }
  for (const auto& g : tree.gates()) {
    out << "gate " << g.id << " = ";
    write_expr(out, g.body);
    out << '\n';
  }
  out << "top ";
  for (std::size_t i = 0; i < tree.tops().size(); ++i) {
    if (i > 0) out << ", ";
    out << tree.tops()[i];
  }
  out << '\n';
  return out.str();
}

Trajectory parse_trajectory(std::string_view text) {
  Trajectory traj;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
      line.remove_suffix(1);
    }
    std::size_t lead = 0;
    while (lead < line.size() && (line[lead] == ' ' || line[lead] == '\t')) ++lead;
    if (lead == line.size() || line[lead] == '#') continue;

    // Split into exactly three fields, remembering their columns.
    std::vector<std::pair<std::string_view, std::size_t>> fields;
    std::size_t field_start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        std::string_view f = line.substr(field_start, i - field_start);
        std::size_t col = field_start;
        while (!f.empty() && (f.front() == ' ' || f.front() == '\t')) {
          f.remove_prefix(1);
          ++col;
        }
        while (!f.empty() && (f.back() == ' ' || f.back() == '\t')) f.remove_suffix(1);
        fields.emplace_back(f, col + 1);
        field_start = i + 1;
      }
    }
    if (fields.size() != 3) {
      throw Error(ErrorCode::SyntaxError, "expected 'time,basic_id,value'", line_no, 1);
    }

    TrajectoryEvent ev;
    auto [tf, tcol] = fields[0];
    auto [ptr, ec] = std::from_chars(tf.data(), tf.data() + tf.size(), ev.time);
    if (tf.empty() || ec != std::errc() || ptr != tf.data() + tf.size() ||
        !std::isfinite(ev.time) || ev.time < 0.0) {
      throw Error(ErrorCode::SyntaxError, "time must be a nonnegative number", line_no, tcol);
    }

    auto [id, icol] = fields[1];
    bool valid_id = !id.empty() && ident_start(id.front());
    for (char c : id) valid_id = valid_id && ident_char(c);
    if (!valid_id) throw Error(ErrorCode::SyntaxError, "malformed basic event id", line_no, icol);
    ev.basic_id = std::string(id);

    auto [vf, vcol] = fields[2];
    if (vf == "0") ev.value = false;
    else if (vf == "1") ev.value = true;
    else throw Error(ErrorCode::SyntaxError, "value must be 0 or 1", line_no, vcol);

    if (!traj.events.empty() && ev.time < traj.events.back().time) {
      throw Error(ErrorCode::NonMonotoneTime, "time decreases", line_no, tcol);
    }
    traj.events.push_back(std::move(ev));
  }
  return traj;
}

}  // namespace ftloop
