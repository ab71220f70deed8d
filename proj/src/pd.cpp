#include "knots/pd.hpp"

#include <cctype>
#include <sstream>

#include "knots/errors.hpp"

namespace knots {

namespace {

std::string strip_comments(const std::string& text) {
  std::string out;
  out.reserve(text.size());
  bool in_comment = false;
  for (char ch : text) {
    if (ch == '#') in_comment = true;
    if (ch == '\n') in_comment = false;
    out.push_back(in_comment ? ' ' : ch);
  }
  return out;
}

}  // namespace

PDCode parse_pd_text(const std::string& text) {
  PDCode pd;
  std::istringstream in(strip_comments(text));
  std::string tok;
  while (in >> tok) {
    // Tokens may contain spaces inside brackets only if quoted away by the
    // caller; re-join pieces until the bracket closes.
    if (tok.rfind("X[", 0) == 0 || tok.rfind("X(", 0) == 0) {
      while (tok.find(']') == std::string::npos && tok.find(')') == std::string::npos) {
        std::string more;
        if (!(in >> more)) throw malformed_pd("unterminated crossing token: " + tok);
        tok += more;
      }
      std::array<int, 4> arcs{};
      std::string body = tok.substr(2, tok.size() - 3);
      std::istringstream bs(body);
      std::string field;
      int i = 0;
      while (std::getline(bs, field, ',')) {
        if (i >= 4) throw malformed_pd("crossing token has more than 4 entries: " + tok);
        try {
          size_t pos = 0;
          int v = std::stoi(field, &pos);
          while (pos < field.size() && std::isspace(static_cast<unsigned char>(field[pos]))) pos++;
          if (pos != field.size()) throw std::invalid_argument("trailing");
          if (v <= 0) throw malformed_pd("arc labels must be positive: " + tok);
          arcs[i++] = v;
        } catch (const Error&) {
          throw;
        } catch (const std::exception&) {
          throw malformed_pd("bad arc label in token: " + tok);
        }
      }
      if (i != 4) throw malformed_pd("crossing token needs 4 entries: " + tok);
      pd.crossings.push_back(arcs);
    } else if (tok == "O") {
      pd.free_loops++;
    } else {
      throw malformed_pd("unrecognized token: " + tok);
    }
  }
  return pd;
}

std::string pd_to_text(const PDCode& pd) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : pd.crossings) {
    if (!first) os << " ";
    first = false;
    os << "X[" << x[0] << "," << x[1] << "," << x[2] << "," << x[3] << "]";
  }
  for (int i = 0; i < pd.free_loops; i++) {
    if (!first) os << " ";
    first = false;
    os << "O";
  }
  return os.str();
}

}  // namespace knots
