#include "ricci/graph6.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include "ricci/errors.hpp"

namespace ricci {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

int sextet(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) throw ParseError("graph6: truncated at byte " + std::to_string(pos));
  int c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6: invalid character " + std::to_string(c) + " at byte " + std::to_string(pos));
  }
  return c - kBias;
}

void put_order(std::string& out, std::size_t n) {
  auto put_bits = [&](std::size_t value, int groups) {
    for (int k = groups - 1; k >= 0; --k) out.push_back(static_cast<char>(kBias + ((value >> (6 * k)) & 63)));
  };
  if (n <= 62) {
    put_bits(n, 1);
  } else if (n <= 258047) {
    out.push_back('~');
    put_bits(n, 3);
  } else {
    out.append("~~");
    put_bits(n, 6);
  }
}

}  // namespace

Graph graph6_decode(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) {
    line.remove_suffix(1);
  }
  std::size_t offset = 0;
  if (line.substr(0, kHeader.size()) == kHeader) offset = kHeader.size();
  std::string_view s = line;
  if (offset >= s.size()) throw ParseError("graph6: empty input");

  std::size_t pos = offset;
  std::size_t n = 0;
  if (s[pos] != '~') {
    n = static_cast<std::size_t>(sextet(s, pos++));
  } else if (pos + 1 < s.size() && s[pos + 1] == '~') {
    pos += 2;
    for (int k = 0; k < 6; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(s, pos++));
  } else {
    pos += 1;
    for (int k = 0; k < 3; ++k) n = (n << 6) | static_cast<std::size_t>(sextet(s, pos++));
  }

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (s.size() - pos < bytes) {
    throw ParseError("graph6: truncated at byte " + std::to_string(s.size()) + ", expected " +
                     std::to_string(pos + bytes) + " bytes");
  }
  if (s.size() - pos > bytes) {
    throw ParseError("graph6: unexpected trailing data at byte " + std::to_string(pos + bytes));
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  int current = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (k % 6 == 0) current = sextet(s, pos + k / 6);
      if ((current >> (5 - k % 6)) & 1) edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  // Padding bits must be zero.
  if (bits % 6 != 0 && (current & ((1 << (6 - bits % 6)) - 1)) != 0) {
    throw ParseError("graph6: non-zero padding at byte " + std::to_string(pos + bytes - 1));
  }
  return Graph::from_edge_list(n, edges);
}

std::string graph6_encode(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  put_order(out, n);
  int current = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      current = (current << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + current));
        current = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (current << (6 - filled))));
  return out;
}

Graph edge_list_parse(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0, m = 0;
  std::vector<Edge> edges;

  auto parse_pair = [&](const std::string& l, std::size_t& a, std::size_t& b) {
    std::istringstream fields(l);
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": expected two integers");
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::size_t a = 0, b = 0;
    parse_pair(line, a, b);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      continue;
    }
    if (a >= n || b >= n) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": vertex out of range [0, " +
                       std::to_string(n) + ")");
    }
    if (edges.size() == m) {
      throw ParseError("edge list line " + std::to_string(line_no) + ": more than " + std::to_string(m) + " edges");
    }
    edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
  }
  if (!have_header) throw ParseError("edge list line 1: missing \"n m\" header");
  if (edges.size() != m) {
    throw ParseError("edge list line " + std::to_string(line_no) + ": expected " + std::to_string(m) +
                     " edges, found " + std::to_string(edges.size()));
  }
  try {
    return Graph::from_edge_list(n, edges);
  } catch (const ConstructionError& e) {
    throw ParseError(std::string("edge list: ") + e.what());
  }
}

std::string edge_list_write(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace ricci
