#include "gchar/parse.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "gchar/error.hpp"

namespace gchar {

namespace {

class PolyParser {
 public:
  PolyParser(const std::string& text, const std::vector<std::string>& names, PrimeField field)
      : s_(text), names_(names), field_(field) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial '" + s_ + "' at column " + std::to_string(pos_ + 1) + ": " + msg);
  }

  void skip_space() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(names_.size(), field_);
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial t = term();
    acc += negate ? -t : t;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    skip_space();
    if (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(' || s_[pos_] == '_'))
      fail("juxtaposition is not allowed; use '*'");
    return acc;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string digits = s_.substr(start, pos_ - start);
      long long v = 0;
      for (char ch : digits) v = (v * 10 + (ch - '0')) % static_cast<long long>(field_.prime());
      return Polynomial::constant(names_.size(), field_, v);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(names_.size(), field_, static_cast<std::size_t>(it - names_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const std::vector<std::string>& names_;
  PrimeField field_;
  std::size_t pos_ = 0;
};

std::string strip_comment(const std::string& line) {
  auto hash = line.find('#');
  std::string out = hash == std::string::npos ? line : line.substr(0, hash);
  auto b = out.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  auto e = out.find_last_not_of(" \t\r");
  return out.substr(b, e - b + 1);
}

[[noreturn]] void line_error(int line, const std::string& msg) {
  throw InputError("line " + std::to_string(line) + ": " + msg);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

long long parse_int(const std::string& tok, int line) {
  try {
    std::size_t used = 0;
    long long v = std::stoll(tok, &used);
    if (used != tok.size()) line_error(line, "expected an integer, got '" + tok + "'");
    return v;
  } catch (const std::logic_error&) {
    line_error(line, "expected an integer, got '" + tok + "'");
  }
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::vector<std::string>& names, PrimeField field) {
  return PolyParser(text, names, field).parse();
}

GradedRing parse_ring(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::uint32_t prime = kDefaultPrime;
  bool seen_field = false;
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<std::pair<int, std::string>> rels;
  std::string label;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "field") {
      std::string tok, extra;
      ls >> tok;
      if (tok.empty() || (ls >> extra)) line_error(lineno, "expected 'field <prime>'");
      if (seen_field) line_error(lineno, "duplicate field line");
      if (!names.empty()) line_error(lineno, "field must precede variables");
      const long long p = parse_int(tok, lineno);
      if (p < 2 || p > 65535 || !is_prime(static_cast<std::uint32_t>(p))) line_error(lineno, "field must be a prime below 65536");
      prime = static_cast<std::uint32_t>(p);
      seen_field = true;
    } else if (key == "var") {
      std::string name, tok, extra;
      ls >> name >> tok;
      if (name.empty() || tok.empty() || (ls >> extra)) line_error(lineno, "expected 'var <name> <weight>'");
      if (!(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
        line_error(lineno, "bad variable name '" + name + "'");
      if (std::find(names.begin(), names.end(), name) != names.end()) line_error(lineno, "duplicate variable " + name);
      const long long w = parse_int(tok, lineno);
      if (w <= 0) line_error(lineno, "weights must be positive");
      names.push_back(name);
      weights.push_back(static_cast<int>(w));
    } else if (key == "rel") {
      std::string rest;
      std::getline(ls, rest);
      rels.emplace_back(lineno, rest);
    } else if (key == "name") {
      std::getline(ls >> std::ws, label);
    } else {
      line_error(lineno, "unknown directive '" + key + "'");
    }
  }
  if (names.empty()) throw InputError("ring definition declares no variables");
  PrimeField field(prime);
  std::vector<Polynomial> polys;
  for (const auto& [ln, txt] : rels) {
    try {
      Polynomial f = parse_polynomial(txt, names, field);
      if (f.is_zero()) line_error(ln, "relation is zero");
      if (!f.is_homogeneous(weights)) line_error(ln, "relation is not homogeneous for the given weights");
      polys.push_back(std::move(f));
    } catch (const InputError& e) {
      if (std::string(e.what()).rfind("line ", 0) == 0) throw;
      line_error(ln, e.what());
    }
  }
  return GradedRing(field, names, weights, polys, label);
}

GradedModule parse_module(const std::string& text, const GradedRing& ring) {
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  std::vector<int> gens;
  bool seen_gens = false;
  std::map<std::pair<std::size_t, std::size_t>, std::pair<int, Polynomial>> entries;
  std::map<std::size_t, std::pair<int, int>> col_degree;  // column -> (degree, line)
  std::size_t ncols = 0;
  std::string label;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key == "gens") {
      if (seen_gens) line_error(lineno, "duplicate gens line");
      std::string tok;
      while (ls >> tok) gens.push_back(static_cast<int>(parse_int(tok, lineno)));
      seen_gens = true;
    } else if (key == "row") {
      if (!seen_gens) line_error(lineno, "gens must precede row entries");
      std::string rtok, colkw, ctok, colon;
      ls >> rtok >> colkw >> ctok >> colon;
      if (colkw != "col" || colon != ":") line_error(lineno, "expected 'row <i> col <j> : <polynomial>'");
      const long long r = parse_int(rtok, lineno);
      const long long c = parse_int(ctok, lineno);
      if (r < 0 || static_cast<std::size_t>(r) >= gens.size()) line_error(lineno, "row index out of range");
      if (c < 0) line_error(lineno, "column index must be nonnegative");
      std::string rest;
      std::getline(ls, rest);
      Polynomial p;
      try {
        p = parse_polynomial(rest, ring.names(), ring.field());
      } catch (const InputError& e) {
        line_error(lineno, e.what());
      }
      const auto key2 = std::make_pair(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
      if (entries.count(key2)) line_error(lineno, "duplicate entry");
      ncols = std::max(ncols, static_cast<std::size_t>(c) + 1);
      if (!p.is_zero()) {
        if (!p.is_homogeneous(ring.weights())) line_error(lineno, "entry is not homogeneous");
        const int d = p.degree(ring.weights()) + gens[static_cast<std::size_t>(r)];
        auto it = col_degree.find(static_cast<std::size_t>(c));
        if (it == col_degree.end()) {
          col_degree.emplace(static_cast<std::size_t>(c), std::make_pair(d, lineno));
        } else if (it->second.first != d) {
          line_error(lineno, "column " + std::to_string(c) + " has degree " + std::to_string(d) + " here but " +
                                 std::to_string(it->second.first) + " on line " + std::to_string(it->second.second));
        }
      }
      entries.emplace(key2, std::make_pair(lineno, std::move(p)));
    } else if (key == "name") {
      std::getline(ls >> std::ws, label);
    } else {
      line_error(lineno, "unknown directive '" + key + "'");
    }
  }
  if (!seen_gens) throw InputError("module definition has no gens line");
  PolyMatrix rel(gens.size(), ncols, ring.nvars(), ring.field());
  for (auto& [rc, v] : entries) rel(rc.first, rc.second) = v.second;
  return GradedModule(ring, gens, rel, label);
}

GradedRing load_ring(const std::string& path) {
  try {
    return parse_ring(read_file(path));
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

GradedModule load_module(const std::string& path, const GradedRing& ring) {
  try {
    return parse_module(read_file(path), ring);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::string ring_to_text(const GradedRing& ring) {
  std::ostringstream os;
  if (!ring.label().empty()) os << "name " << ring.label() << "\n";
  os << "field " << ring.field().prime() << "\n";
  for (std::size_t i = 0; i < ring.nvars(); ++i) os << "var " << ring.names()[i] << " " << ring.weights()[i] << "\n";
  for (const auto& f : ring.relations()) os << "rel " << f.to_string(ring.names()) << "\n";
  return os.str();
}

std::string module_to_text(const GradedModule& m) {
  std::ostringstream os;
  if (!m.label().empty()) os << "name " << m.label() << "\n";
  os << "gens";
  for (int d : m.degrees()) os << " " << d;
  os << "\n";
  const auto& rel = m.relations();
  for (std::size_t c = 0; c < rel.cols(); ++c)
    for (std::size_t r = 0; r < rel.rows(); ++r) {
      if (rel(r, c).is_zero()) continue;
      os << "row " << r << " col " << c << " : " << rel(r, c).to_string(m.ring().names()) << "\n";
    }
  return os.str();
}

}  // namespace gchar
