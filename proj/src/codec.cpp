#include "colref/codec.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "colref/errors.hpp"
#include "colref/refine.hpp"

namespace colref {

namespace {

[[noreturn]] void code_error(const std::string& what, int pos) {
  fail(Errc::CodeError, what + " at position " + std::to_string(pos));
}

std::vector<int> x_positions(const Code& code) {
  std::vector<int> xs;
  for (int i = 1; i <= code.length(); ++i) {
    if (code.at(i) == Letter::X) xs.push_back(i);
  }
  return xs;
}

} // namespace

std::string letter_to_string(Letter l) {
  switch (l) {
    case Letter::Zero: return "0";
    case Letter::One: return "1";
    case Letter::S: return "S";
    case Letter::X: return "X";
  }
  return "?";
}

Code parse_code(std::string_view text) {
  Code code;
  int pos = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    switch (c) {
      case 'S':
        ++pos;
        if (pos != 1) code_error("S allowed only as the leading letter", pos);
        code.letters.push_back(Letter::S);
        break;
      case '0':
      case '1':
      case 'X':
        ++pos;
        if (pos == 1) code_error("code must start with S", pos);
        code.letters.push_back(c == '0' ? Letter::Zero : c == '1' ? Letter::One : Letter::X);
        break;
      case '^':
        if (pos == 0) code_error("hat mark before any letter", 1);
        if (code.has_hat()) code_error("multiple hat marks", pos);
        if (code.letters.back() == Letter::Zero) code_error("hatted ZERO", pos);
        if (code.letters.back() == Letter::S) code_error("hatted S", pos);
        code.hat = pos;
        break;
      default:
        code_error(std::string("unexpected character '") + c + "'", pos + 1);
    }
  }
  validate_code(code);
  return code;
}

void validate_code(const Code& code) {
  const int len = code.length();
  if (len < 3) code_error("code needs at least 3 letters", len);
  if (code.letters[0] != Letter::S) code_error("code must start with S", 1);
  for (int i = 2; i <= len; ++i) {
    if (code.at(i) == Letter::S) code_error("S allowed only as the leading letter", i);
  }
  auto xs = x_positions(code);
  if (xs.size() != 2) {
    code_error("wrong X count (" + std::to_string(xs.size()) + ", need exactly 2)",
               xs.empty() ? len : xs.back());
  }
  if (code.hat != 0) {
    if (code.hat < 1 || code.hat > len) code_error("hat position out of range", code.hat);
    Letter l = code.at(code.hat);
    if (l == Letter::Zero) code_error("hatted ZERO", code.hat);
    if (l == Letter::S) code_error("hatted S", code.hat);
  }
}

std::string render_code(const Code& code) {
  std::string out;
  for (int i = 1; i <= code.length(); ++i) {
    out += letter_to_string(code.at(i));
    if (code.hat == i) out += '^';
  }
  return out;
}

int code_order(const Code& code) {
  validate_code(code);
  return 2 * code.length() + (code.has_hat() ? 1 : 0);
}

Graph build_graph(const Code& code) {
  validate_code(code);
  const int len = code.length();
  auto xs = x_positions(code);
  const int r = xs[0], r2 = xs[1];

  // Terminal letters: ZERO and X complete to their declared degree with the
  // intra-pair edge; a bare ONE cannot reach degree 3 there.
  if (code.at(len) == Letter::One && code.hat != len) {
    fail(Errc::NotRealizable, "terminal ONE without a hat cannot reach degree 3");
  }
  // A hat needs the pair to be adjacent in the base graph: ONE pairs always
  // are, X pairs only at the terminal position (via completion).
  if (code.has_hat() && code.at(code.hat) == Letter::X && code.hat != len) {
    fail(Errc::NotRealizable, "hatted X is only realizable at the terminal position");
  }

  const int n = code_order(code);
  Graph g(n);
  auto vid = [](int i, int j) { return 2 * (i - 1) + (j - 1); }; // i, j 1-based
  const int hat_vertex = 2 * len;

  auto add = [&](int u, int v) {
    if (!g.add_edge(u, v)) {
      fail(Errc::NotRealizable, "duplicate edge between " + std::to_string(u) + " and " + std::to_string(v));
    }
  };

  for (int i = 1; i <= len; ++i) {
    Letter l = code.at(i);
    bool intra = false;
    if (l == Letter::One) {
      // A mid-string hat subdivides the intra edge; at the terminal position
      // the completion keeps it alongside the hat path.
      intra = !(code.hat == i && i < len);
    } else if (i == len && l == Letter::Zero) {
      intra = true;
    } else if (i == len && l == Letter::X && code.hat != i) {
      intra = true;
    }
    if (intra) add(vid(i, 1), vid(i, 2));
  }
  for (int i = 1; i < len; ++i) {
    add(vid(i, 1), vid(i + 1, 1));
    add(vid(i, 2), vid(i + 1, 2));
  }
  add(vid(r, 1), vid(1, 1));
  add(vid(r, 2), vid(1, 1));
  add(vid(r2, 1), vid(1, 2));
  add(vid(r2, 2), vid(1, 2));
  if (code.has_hat()) {
    add(vid(code.hat, 1), hat_vertex);
    add(vid(code.hat, 2), hat_vertex);
  }

  // Enforced postcondition: simple (by construction), connected, degrees
  // within {2,3}.
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 2 && g.degree(v) != 3) {
      fail(Errc::NotRealizable, "vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)));
    }
  }
  if (!is_connected(g)) fail(Errc::NotRealizable, "built graph is not connected");
  return g;
}

namespace {

struct PairChain {
  std::vector<std::array<int, 2>> pairs; // in splitting order, members sorted
  std::optional<int> hat;
};

// Locates the round whose classes are all pairs (plus at most one
// singleton) and reads the splitting order off the remaining rounds.
PairChain extract_pair_chain(const Graph& g, const ColouringTrace& trace) {
  const int n = trace.n;
  int pairs_round = -1;
  for (int t = 0; t < static_cast<int>(trace.rounds.size()); ++t) {
    int singletons = 0;
    bool ok = true;
    for (const auto& c : trace.rounds[t].classes) {
      if (c.size() == 1) {
        ++singletons;
      } else if (c.size() != 2) {
        ok = false;
        break;
      }
    }
    if (ok && singletons <= 1) {
      pairs_round = t;
      break;
    }
  }
  if (pairs_round < 0) fail(Errc::NotEncodable, "no refinement round consists of pairs only");

  PairChain chain;
  std::vector<std::array<int, 2>> pairs;
  for (const auto& c : trace.rounds[pairs_round].classes) {
    if (c.size() == 2) {
      pairs.push_back({c[0], c[1]});
    } else {
      chain.hat = c[0];
    }
  }
  const int len = static_cast<int>(pairs.size());
  if (pairs_round + len != n - 1) {
    fail(Errc::StructureError, "pair phase does not end at the discrete partition");
  }

  // Exactly one pair splits per subsequent round; order pairs by that round.
  std::vector<int> split_round(len, -1);
  for (int p = 0; p < len; ++p) {
    for (int t = pairs_round + 1; t < static_cast<int>(trace.rounds.size()); ++t) {
      const auto& classes = trace.rounds[t].classes;
      bool alive = std::any_of(classes.begin(), classes.end(), [&](const std::vector<int>& c) {
        return c.size() == 2 && c[0] == pairs[p][0] && c[1] == pairs[p][1];
      });
      if (!alive) {
        split_round[p] = t;
        break;
      }
    }
    if (split_round[p] < 0) fail(Errc::StructureError, "pair never splits into singletons");
  }
  std::vector<int> order(len);
  for (int p = 0; p < len; ++p) order[p] = p;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return split_round[a] < split_round[b]; });
  for (int i = 0; i + 1 < len; ++i) {
    if (split_round[order[i]] == split_round[order[i + 1]]) {
      fail(Errc::StructureError, "two pairs split in the same round");
    }
  }
  for (int i : order) chain.pairs.push_back(pairs[i]);
  return chain;
}

int edges_between(const Graph& g, const std::array<int, 2>& a, const std::array<int, 2>& b) {
  int count = 0;
  for (int u : a) {
    for (int v : b) count += g.adjacent(u, v) ? 1 : 0;
  }
  return count;
}

bool is_perfect_matching(const Graph& g, const std::array<int, 2>& a, const std::array<int, 2>& b) {
  if (edges_between(g, a, b) != 2) return false;
  for (int u : a) {
    if ((g.adjacent(u, b[0]) ? 1 : 0) + (g.adjacent(u, b[1]) ? 1 : 0) != 1) return false;
  }
  return true;
}

} // namespace

Code decode_graph(const Graph& g) {
  const int n = g.order();
  if (n == 0) fail(Errc::NotEncodable, "empty graph");
  auto summary = degree_summary(g);
  for (int d : summary.degrees) {
    if (d != 2 && d != 3) {
      fail(Errc::NotEncodable, "degree " + std::to_string(d) + " outside {2,3}");
    }
  }
  ColouringTrace trace = run(g, Partition::unit(n));
  if (trace.wl1 != n - 1) fail(Errc::NotEncodable, "not a long-refinement graph");

  PairChain chain = extract_pair_chain(g, trace);
  const int len = static_cast<int>(chain.pairs.size());
  if (len < 3) fail(Errc::StructureError, "fewer than three pairs");

  // Successive pairs must form matchings; the S pair is non-adjacent with
  // degree 3; the X pairs hang off single S vertices.
  for (int i = 0; i + 1 < len; ++i) {
    if (!is_perfect_matching(g, chain.pairs[i], chain.pairs[i + 1])) {
      fail(Errc::StructureError, "successive pairs are not joined by a matching");
    }
  }
  const auto& s_pair = chain.pairs[0];
  if (g.adjacent(s_pair[0], s_pair[1]) || g.degree(s_pair[0]) != 3 || g.degree(s_pair[1]) != 3) {
    fail(Errc::StructureError, "first-splitting pair is not a valid S pair");
  }

  Code code;
  code.letters.assign(len, Letter::S);
  std::vector<int> x_at;
  for (int i = 1; i < len; ++i) {
    const auto& pair = chain.pairs[i];
    int d0 = g.degree(pair[0]), d1 = g.degree(pair[1]);
    if (d0 != d1) fail(Errc::StructureError, "pair with mixed degrees");
    if (d0 == 2) {
      code.letters[i] = Letter::Zero;
      continue;
    }
    int to_s = edges_between(g, pair, s_pair);
    if (i >= 2 && to_s > 0) {
      // Both members attach to the same single S vertex.
      bool ok = to_s == 2 && ((g.adjacent(pair[0], s_pair[0]) && g.adjacent(pair[1], s_pair[0])) ||
                              (g.adjacent(pair[0], s_pair[1]) && g.adjacent(pair[1], s_pair[1])));
      if (!ok) fail(Errc::StructureError, "X pair is not attached to a single S vertex");
      code.letters[i] = Letter::X;
      x_at.push_back(i + 1);
    } else {
      code.letters[i] = Letter::One;
    }
  }
  if (x_at.size() != 2) fail(Errc::StructureError, "expected exactly two X pairs");

  if (chain.hat) {
    const auto& nb = g.neighbours(*chain.hat);
    if (nb.size() != 2) fail(Errc::StructureError, "singleton class is not a degree-2 hat");
    int hat_pos = -1;
    for (int i = 0; i < len; ++i) {
      const auto& pair = chain.pairs[i];
      if ((pair[0] == nb[0] && pair[1] == nb[1])) hat_pos = i + 1;
    }
    if (hat_pos < 0) fail(Errc::StructureError, "hat base is not a pair");
    if (code.letters[hat_pos - 1] == Letter::Zero || hat_pos == 1) {
      fail(Errc::StructureError, "hat attached to a non-hattable pair");
    }
    code.hat = hat_pos;
  }

  // Exact witness check: rebuild and compare through the extracted
  // correspondence. v_{i,1} follows the matching chain from the S vertex
  // attached to the earlier X pair.
  validate_code(code);
  const auto& first_x = chain.pairs[x_at[0] - 1];
  int v11 = g.adjacent(first_x[0], s_pair[0]) ? s_pair[0] : s_pair[1];
  int v12 = v11 == s_pair[0] ? s_pair[1] : s_pair[0];
  std::vector<int> to_original(2 * len + (code.has_hat() ? 1 : 0), -1);
  to_original[0] = v11;
  to_original[1] = v12;
  for (int i = 1; i < len; ++i) {
    int prev1 = to_original[2 * (i - 1)];
    const auto& pair = chain.pairs[i];
    int row1 = g.adjacent(pair[0], prev1) ? pair[0] : pair[1];
    to_original[2 * i] = row1;
    to_original[2 * i + 1] = pair[0] == row1 ? pair[1] : pair[0];
  }
  if (code.has_hat()) to_original[2 * len] = *chain.hat;
  try {
    Graph rebuilt = build_graph(code);
    if (edge_list(relabelled(rebuilt, to_original)) != edge_list(g)) {
      fail(Errc::StructureError, "decoded code does not rebuild the input graph");
    }
  } catch (const Error& e) {
    if (e.code() == Errc::StructureError) throw;
    fail(Errc::StructureError, std::string("decoded code is not realizable: ") + e.what());
  }
  return code;
}

} // namespace colref
