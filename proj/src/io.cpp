#include "fpa/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "fpa/errors.hpp"

namespace fpa {

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream is(line);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

int token_column(const std::string& line, const std::string& token,
                 std::size_t occurrence) {
  std::size_t pos = 0;
  for (std::size_t i = 0; i <= occurrence; ++i) {
    pos = line.find(token, pos);
    if (pos == std::string::npos) return 1;
    if (i < occurrence) pos += token.size();
  }
  return static_cast<int>(pos) + 1;
}

int parse_header_int(const std::string& tok, const std::string& key, int line,
                     int col) {
  if (tok.rfind(key + "=", 0) != 0)
    throw ParseError("expected '" + key + "=...'", line, col);
  const std::string value = tok.substr(key.size() + 1);
  if (key == "N" && (value == "poly" || value == "inf"))
    return CommSeries::kPolynomial;
  try {
    std::size_t used = 0;
    int parsed = std::stoi(value, &used);
    if (used != value.size()) throw std::invalid_argument(value);
    return parsed;
  } catch (const std::exception&) {
    throw ParseError("bad integer '" + value + "'", line, col);
  }
}

Rat parse_rational(const std::string& tok, int line, int col) {
  // integer or p/q
  const auto ok_char = [](char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' ||
           c == '+' || c == '/';
  };
  for (char c : tok)
    if (!ok_char(c)) throw ParseError("bad rational '" + tok + "'", line, col);
  try {
    Rat q(tok);
    q.canonicalize();
    return q;
  } catch (const std::exception&) {
    throw ParseError("bad rational '" + tok + "'", line, col);
  }
}

Word parse_word(const std::string& tok, const Alphabet& alphabet, int line,
                int col) {
  if (tok == "e") return Word::empty();
  std::vector<std::uint8_t> letters;
  std::size_t i = 0;
  while (i < tok.size()) {
    if (tok[i] != 'x')
      throw ParseError("bad word token '" + tok + "'", line, col);
    ++i;
    std::size_t start = i;
    while (i < tok.size() && std::isdigit(static_cast<unsigned char>(tok[i])))
      ++i;
    if (start == i)
      throw ParseError("bad word token '" + tok + "'", line, col);
    const int letter = std::stoi(tok.substr(start, i - start));
    if (letter > alphabet.m)
      throw ParseError("letter x" + std::to_string(letter) +
                           " outside alphabet",
                       line, col);
    letters.push_back(static_cast<std::uint8_t>(letter));
  }
  return Word(std::move(letters));
}

CommMonomial parse_monomial(const std::string& tok, int vars, int line,
                            int col) {
  std::vector<int> exps;
  std::size_t start = 0;
  while (start <= tok.size()) {
    std::size_t comma = tok.find(',', start);
    const std::string piece = tok.substr(
        start, comma == std::string::npos ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      int e = std::stoi(piece, &used);
      if (used != piece.size() || e < 0) throw std::invalid_argument(piece);
      exps.push_back(e);
    } catch (const std::exception&) {
      throw ParseError("bad exponent '" + piece + "'", line, col);
    }
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(exps.size()) != vars)
    throw ParseError("monomial needs " + std::to_string(vars) + " exponents",
                     line, col);
  return CommMonomial(std::move(exps));
}

std::vector<std::string> nonblank_lines(const std::string& text,
                                        std::vector<int>* numbers) {
  std::vector<std::string> lines;
  std::istringstream is(text);
  std::string line;
  int number = 0;
  while (std::getline(is, line)) {
    ++number;
    bool blank = true;
    for (char c : line)
      if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
    if (blank || line[line.find_first_not_of(" \t")] == '#') continue;
    lines.push_back(line);
    numbers->push_back(number);
  }
  return lines;
}

}  // namespace

std::string serialize_nc(const NCSeries& c) {
  std::ostringstream os;
  os << "nc m=" << c.m() << " comps=" << c.components() << " N=" << c.maxdeg()
     << "\n";
  for (const auto& [w, v] : c.terms()) {
    os << w.str();
    for (const auto& q : v) os << " " << rat_str(q);
    os << "\n";
  }
  return os.str();
}

std::string serialize_comm(const CommSeries& c) {
  std::ostringstream os;
  os << "comm vars=" << c.vars() << " comps=" << c.components() << " N=";
  if (c.is_polynomial())
    os << "poly";
  else
    os << c.maxdeg();
  os << "\n";
  for (const auto& [mono, v] : c.terms()) {
    os << mono.str();
    for (const auto& q : v) os << " " << rat_str(q);
    os << "\n";
  }
  return os.str();
}

NCSeries parse_nc(const std::string& text) {
  std::vector<int> numbers;
  auto lines = nonblank_lines(text, &numbers);
  if (lines.empty()) throw ParseError("empty series file", 1, 1);
  auto header = split_ws(lines[0]);
  if (header.size() != 4 || header[0] != "nc")
    throw ParseError("expected header 'nc m=<m> comps=<l> N=<n>'", numbers[0],
                     1);
  const int m = parse_header_int(header[1], "m", numbers[0],
                                 token_column(lines[0], header[1], 0));
  const int comps = parse_header_int(header[2], "comps", numbers[0],
                                     token_column(lines[0], header[2], 0));
  const int maxdeg = parse_header_int(header[3], "N", numbers[0],
                                      token_column(lines[0], header[3], 0));
  if (maxdeg == CommSeries::kPolynomial)
    throw ParseError("noncommutative series must carry a finite N",
                     numbers[0], 1);
  Alphabet alphabet(m);
  NCSeries out(alphabet, comps, maxdeg);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto toks = split_ws(lines[i]);
    if (static_cast<int>(toks.size()) != comps + 1)
      throw ParseError("term line needs a word and " + std::to_string(comps) +
                           " coefficients",
                       numbers[i], 1);
    Word w = parse_word(toks[0], alphabet, numbers[i], 1);
    if (w.length() > maxdeg)
      throw ParseError("word '" + toks[0] + "' exceeds N", numbers[i], 1);
    RatVec v(static_cast<std::size_t>(comps));
    for (int j = 0; j < comps; ++j)
      v[static_cast<std::size_t>(j)] =
          parse_rational(toks[static_cast<std::size_t>(j) + 1], numbers[i],
                         token_column(lines[i], toks[static_cast<std::size_t>(j) + 1], 0));
    out.set_coeff(w, v);
  }
  return out;
}

CommSeries parse_comm(const std::string& text) {
  std::vector<int> numbers;
  auto lines = nonblank_lines(text, &numbers);
  if (lines.empty()) throw ParseError("empty series file", 1, 1);
  auto header = split_ws(lines[0]);
  if (header.size() != 4 || header[0] != "comm")
    throw ParseError("expected header 'comm vars=<l> comps=<m> N=<n|poly>'",
                     numbers[0], 1);
  const int vars = parse_header_int(header[1], "vars", numbers[0],
                                    token_column(lines[0], header[1], 0));
  const int comps = parse_header_int(header[2], "comps", numbers[0],
                                     token_column(lines[0], header[2], 0));
  const int maxdeg = parse_header_int(header[3], "N", numbers[0],
                                      token_column(lines[0], header[3], 0));
  CommSeries out(vars, comps, maxdeg);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto toks = split_ws(lines[i]);
    if (static_cast<int>(toks.size()) != comps + 1)
      throw ParseError("term line needs a monomial and " +
                           std::to_string(comps) + " coefficients",
                       numbers[i], 1);
    CommMonomial mono = parse_monomial(toks[0], vars, numbers[i], 1);
    if (!out.is_polynomial() && mono.degree() > maxdeg)
      throw ParseError("monomial '" + toks[0] + "' exceeds N", numbers[i], 1);
    RatVec v(static_cast<std::size_t>(comps));
    for (int j = 0; j < comps; ++j)
      v[static_cast<std::size_t>(j)] =
          parse_rational(toks[static_cast<std::size_t>(j) + 1], numbers[i],
                         token_column(lines[i], toks[static_cast<std::size_t>(j) + 1], 0));
    out.set_coeff(mono, v);
  }
  return out;
}

AnySeries parse_series(const std::string& text) {
  std::vector<int> numbers;
  auto lines = nonblank_lines(text, &numbers);
  if (lines.empty()) throw ParseError("empty series file", 1, 1);
  auto header = split_ws(lines[0]);
  if (!header.empty() && header[0] == "nc") return parse_nc(text);
  if (!header.empty() && header[0] == "comm") return parse_comm(text);
  throw ParseError("unknown series kind '" +
                       (header.empty() ? "" : header[0]) + "'",
                   numbers[0], 1);
}

namespace {
std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'", 0, 0);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}
}  // namespace

AnySeries load_series_file(const std::string& path) {
  return parse_series(read_file(path));
}

NCSeries load_nc_file(const std::string& path) {
  auto any = load_series_file(path);
  if (!std::holds_alternative<NCSeries>(any))
    throw ParseError("'" + path + "' is not a noncommutative series", 1, 1);
  return std::get<NCSeries>(any);
}

CommSeries load_comm_file(const std::string& path) {
  auto any = load_series_file(path);
  if (!std::holds_alternative<CommSeries>(any))
    throw ParseError("'" + path + "' is not a commutative series", 1, 1);
  return std::get<CommSeries>(any);
}

void save_series_file(const std::string& path, const std::string& content) {
  // content is fully materialized before the file is created, so failures
  // upstream never leave partial output behind
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << content;
}

std::string pretty(const NCSeries& c) {
  if (c.components() != 1) return to_string(c);
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, v] : c.terms()) {
    const Rat& q = v[0];
    if (is_zero(q)) continue;
    const bool negative = sgn(q) < 0;
    const Rat mag = abs(q);
    if (first)
      os << (negative ? "-" : "");
    else
      os << (negative ? " - " : " + ");
    if (mag != 1 || w.is_empty()) {
      os << mag.get_str();
      if (!w.is_empty()) os << " ";
    }
    if (!w.is_empty()) os << w.str();
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace fpa
