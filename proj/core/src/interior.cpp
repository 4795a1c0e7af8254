#include "tiletopo/interior.hpp"

#include <algorithm>
#include <unordered_set>

#include "tiletopo/errors.hpp"
#include "tiletopo/intersections.hpp"

namespace tiletopo {

namespace {

// succ[i][v]: label-i successors of v, root loops included.
std::vector<std::vector<VertexSet>> label_successors(const NeighborGraph& g) {
  const auto m = g.system().m();
  std::vector<std::vector<VertexSet>> succ(m + 1, std::vector<VertexSet>(g.size(), VertexSet(g.size())));
  for (std::size_t i = 1; i <= m; ++i) succ[i][NeighborGraph::kRoot].insert(NeighborGraph::kRoot);
  for (const auto& e : g.edges()) succ[static_cast<std::size_t>(e.label)][e.from].insert(e.to);
  return succ;
}

VertexSet advance(const std::vector<std::vector<VertexSet>>& succ, const VertexSet& x, int label) {
  VertexSet out(x.universe());
  x.for_each([&](std::size_t v) { out |= succ[static_cast<std::size_t>(label)][v]; });
  return out;
}

bool covers(const VertexSet& x, const std::vector<std::size_t>& targets) {
  return std::all_of(targets.begin(), targets.end(), [&](std::size_t t) { return x.contains(t); });
}

Address shifted(const Address& s, std::size_t n) {
  const Word& pre = s.preperiod();
  const Word& per = s.period();
  if (n <= pre.size()) return Address(Word(pre.begin() + static_cast<std::ptrdiff_t>(n), pre.end()), per);
  const std::size_t r = (n - pre.size()) % per.size();
  Word rot(per.begin() + static_cast<std::ptrdiff_t>(r), per.end());
  rot.insert(rot.end(), per.begin(), per.begin() + static_cast<std::ptrdiff_t>(r));
  return Address({}, rot);
}

}  // namespace

const char* to_string(CertificateVerdict v) {
  return v == CertificateVerdict::kConnected ? "connected" : "inconclusive";
}

VertexSet suffix_reach(const NeighborGraph& g, const Word& w) {
  const auto succ = label_successors(g);
  VertexSet x(g.size());
  x.insert(NeighborGraph::kRoot);
  for (int s : w) x = advance(succ, x, s);
  return x;
}

std::optional<Word> full_neighborhood_word(const NeighborGraph& g, const std::vector<std::size_t>& targets,
                                           const WordSearchParams& params) {
  const auto succ = label_successors(g);
  const int m = static_cast<int>(g.system().m());
  struct Node {
    VertexSet x;
    std::size_t parent;
    int label;
    std::size_t depth;
  };
  std::vector<Node> nodes;
  VertexSet start(g.size());
  start.insert(NeighborGraph::kRoot);
  if (covers(start, targets)) return Word{};
  nodes.push_back({start, SIZE_MAX, 0, 0});
  std::unordered_set<VertexSet, VertexSetHash> seen{start};
  for (std::size_t id = 0; id < nodes.size(); ++id) {
    if (nodes[id].depth >= params.max_len) break;
    for (int i = 1; i <= m; ++i) {
      VertexSet x = advance(succ, nodes[id].x, i);
      if (covers(x, targets)) {
        Word w{i};
        for (std::size_t k = id; nodes[k].parent != SIZE_MAX; k = nodes[k].parent) w.push_back(nodes[k].label);
        std::reverse(w.begin(), w.end());
        return w;
      }
      if (!seen.insert(x).second) continue;
      nodes.push_back({std::move(x), id, i, nodes[id].depth + 1});
    }
  }
  return std::nullopt;
}

std::optional<Word> center_neighborhood_word(const NeighborGraph& g, const std::vector<std::size_t>& targets,
                                             const Address& center, const WordSearchParams& params) {
  // Both flips address the center; on a tie the word starting with the first
  // period symbol of the center address wins.
  const int lead = center.period().front();
  Address first = center, second = center.flipped();
  if (first.at(0) != lead) std::swap(first, second);
  const auto succ = label_successors(g);
  for (std::size_t len = 0; len <= params.max_len; ++len)
    for (const auto& a : {first, second}) {
      const Word w = a.prefix(len);
      VertexSet x(g.size());
      x.insert(NeighborGraph::kRoot);
      for (int s : w) x = advance(succ, x, s);
      if (covers(x, targets)) return w;
    }
  return std::nullopt;
}

std::optional<Word> full_neighborhood_prefix(const NeighborGraph& g, const std::vector<std::size_t>& targets,
                                             const std::vector<Address>& addresses, const WordSearchParams& params) {
  const auto succ = label_successors(g);
  for (std::size_t len = 0; len <= params.max_len; ++len) {
    std::optional<Word> best;
    for (const auto& a : addresses) {
      Word w = a.prefix(len);
      VertexSet x(g.size());
      x.insert(NeighborGraph::kRoot);
      for (int s : w) x = advance(succ, x, s);
      if (covers(x, targets) && (!best || w < *best)) best = std::move(w);
    }
    if (best) return best;
  }
  return std::nullopt;
}

Word tiling_witness_word(const NeighborGraph& g) {
  if (!check_tiling_existence(g).ok)
    throw PreconditionError("tiling_witness_word requires an incoming edge with every label at every vertex");
  const std::size_t n = g.size();
  const int m = static_cast<int>(g.system().m());

  // Shortest, then least, label word of a path from the root to each vertex.
  std::vector<std::size_t> parent(n, SIZE_MAX);
  std::vector<int> via(n, 0);
  std::vector<bool> reached(n, false);
  reached[NeighborGraph::kRoot] = true;
  std::vector<std::size_t> queue{NeighborGraph::kRoot};
  for (std::size_t h = 0; h < queue.size(); ++h) {
    const std::size_t v = queue[h];
    std::vector<std::pair<int, std::size_t>> out;
    for (std::size_t id : g.out_edges(v)) out.push_back({g.edges()[id].label, g.edges()[id].to});
    std::sort(out.begin(), out.end());
    for (const auto& [label, to] : out)
      if (!reached[to]) {
        reached[to] = true;
        parent[to] = v;
        via[to] = label;
        queue.push_back(to);
      }
  }

  // pred[i][v]: least source of a label-i edge into v, the root first.
  std::vector<std::vector<std::size_t>> pred(static_cast<std::size_t>(m) + 1, std::vector<std::size_t>(n, SIZE_MAX));
  for (int i = 1; i <= m; ++i) pred[static_cast<std::size_t>(i)][NeighborGraph::kRoot] = NeighborGraph::kRoot;
  for (const auto& e : g.edges()) {
    auto& p = pred[static_cast<std::size_t>(e.label)][e.to];
    p = std::min(p, e.from);
  }

  Word word;
  std::vector<std::size_t> current;
  for (std::size_t v = 1; v < n; ++v) current.push_back(v);
  while (!current.empty()) {
    const std::size_t k = current.front();
    // Labels of the root path to k, read backwards from k.
    Word u;
    for (std::size_t v = k; v != NeighborGraph::kRoot; v = parent[v]) u.push_back(via[v]);
    std::vector<std::size_t> next;
    for (std::size_t x : current) {
      if (x == k) continue;
      std::size_t y = x;
      for (int label : u) y = pred[static_cast<std::size_t>(label)][y];
      if (y != NeighborGraph::kRoot && std::find(next.begin(), next.end(), y) == next.end()) next.push_back(y);
    }
    std::sort(next.begin(), next.end());
    std::reverse(u.begin(), u.end());
    word.insert(word.begin(), u.begin(), u.end());
    current = std::move(next);
  }
  return word;
}

bool address_in_piece(const NeighborGraph& g, const Address& s, const Word& u) {
  const Word head = s.prefix(u.size());
  const auto rel = piece_relation(g, head, u);
  if (!rel) return false;
  if (is_zero(*rel)) return true;
  return address_membership(g, shifted(s, u.size()), *g.find(*rel));
}

std::optional<FaceLink> face_link(const NeighborGraph& g, const Word& p, const Word& q,
                                  const std::vector<std::size_t>& faces, std::size_t max_padding) {
  const bool pad_p = p.size() < q.size();
  const std::size_t d = pad_p ? q.size() - p.size() : p.size() - q.size();
  if (d > max_padding) return std::nullopt;
  const int m = static_cast<int>(g.system().m());
  Word z(d, 1);
  while (true) {
    FaceLink link{pad_p ? concat(p, z) : p, pad_p ? q : concat(q, z), 0};
    const auto rel = piece_relation(g, link.p, link.q);
    if (rel && !is_zero(*rel)) {
      const std::size_t v = *g.find(*rel);
      if (std::find(faces.begin(), faces.end(), v) != faces.end()) {
        link.vertex = v;
        return link;
      }
    }
    // Next z in lexicographic order.
    std::size_t pos = d;
    while (pos > 0 && z[pos - 1] == m) z[--pos] = 1;
    if (pos == 0) return std::nullopt;
    ++z[pos - 1];
  }
}

ConnectivityCertificate interior_connectedness_certificate(const NeighborGraph& g, const std::vector<std::size_t>& faces,
                                                           const CertificateParams& params) {
  ConnectivityCertificate cert;
  auto fail = [&](const std::string& name, const std::string& detail) {
    cert.checks.push_back({name, false, detail});
    cert.verdict = CertificateVerdict::kInconclusive;
    if (cert.reason.empty()) cert.reason = name + ": " + detail;
  };
  if (g.system().m() != 2) {
    fail("digit count", "scheme requires twindragon symmetry");
    cert.reason = "scheme requires twindragon symmetry";
    return cert;
  }
  const auto w = full_neighborhood_word(g, faces, params.search);
  if (!w) {
    fail("neighborhood word", "no word of length <= " + std::to_string(params.search.max_len) + " has all face neighbors");
    return cert;
  }
  cert.checks.push_back({"neighborhood word", true, format_word(*w)});
  const auto center = center_address(g);
  if (!center) {
    fail("center word", "no center address");
    return cert;
  }
  const auto v = center_neighborhood_word(g, faces, *center, params.search);
  if (!v) {
    fail("center word", "no prefix of length <= " + std::to_string(params.search.max_len) + " of " + center->str() +
                            " or its flip has all face neighbors");
    return cert;
  }
  cert.checks.push_back({"center word", true, format_word(*v)});
  cert.words = {*w, *v, flip_word(*w), flip_word(*v)};

  bool safe = true;
  for (const auto& u : cert.words)
    if (!covers(suffix_reach(g, u), faces)) {
      fail("interior-safe", format_word(u) + " misses a face neighbor");
      safe = false;
    }
  if (safe) cert.checks.push_back({"interior-safe", true, "all four pieces have every face neighbor"});

  const std::vector<std::pair<Word, Word>> pairs = {
      {cert.words[0], cert.words[1]}, {cert.words[2], cert.words[3]}, {cert.words[1], cert.words[3]}};
  bool linked = true;
  auto nested = [](const Word& a, const Word& b) {
    const std::size_t n = std::min(a.size(), b.size());
    return std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n), b.begin());
  };
  for (const auto& [p, q] : pairs) {
    if (nested(p, q)) continue;
    const auto link = face_link(g, p, q, faces, params.max_padding);
    if (link) {
      cert.face_links.push_back(*link);
    } else {
      fail("face links", "pieces " + format_word(p) + " and " + format_word(q) + " share no face");
      linked = false;
    }
  }
  if (linked) cert.checks.push_back({"face links", true, "every pair of distinct pieces shares a face"});

  bool hit_all = true;
  for (const auto& s : {Address({}, {1, 2}), Address({}, {2, 1})}) {
    bool hit = false;
    for (const auto& u : cert.words)
      if (address_in_piece(g, s, u)) {
        cert.fixed_point_hits.push_back({s, u});
        hit = true;
        break;
      }
    if (!hit) {
      fail("fixed points", "pi(" + s.str() + ") lies in none of the pieces");
      hit_all = false;
    }
  }
  if (hit_all) cert.checks.push_back({"fixed points", true, "pi((12)w) and pi((21)w) covered"});

  if (cert.reason.empty()) cert.verdict = CertificateVerdict::kConnected;
  return cert;
}

}  // namespace tiletopo
