#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tiletopo/digraph.hpp"
#include "tiletopo/neighbor_graph.hpp"
#include "tiletopo/word.hpp"

namespace tiletopo {

// Vertices v such that some suffix of w labels a path from the root to v.
// The root itself is always included.
VertexSet suffix_reach(const NeighborGraph& g, const Word& w);

struct WordSearchParams {
  std::size_t max_len = 24;
};

// Shortest, then least, word w with every target in suffix_reach(g, w).
std::optional<Word> full_neighborhood_word(const NeighborGraph& g, const std::vector<std::size_t>& targets,
                                           const WordSearchParams& params = {});

// Shortest, then least, prefix of one of the given addresses with every
// target in suffix_reach.
std::optional<Word> full_neighborhood_prefix(const NeighborGraph& g, const std::vector<std::size_t>& targets,
                                             const std::vector<Address>& addresses,
                                             const WordSearchParams& params = {});

// Shortest prefix of the center address or of its flip with every target in
// suffix_reach. Of two prefixes of equal length, the one starting with the
// first period symbol of the center address is taken.
std::optional<Word> center_neighborhood_word(const NeighborGraph& g, const std::vector<std::size_t>& targets,
                                             const Address& center, const WordSearchParams& params = {});

// Word whose suffixes reach every vertex from the root, built by following
// backward paths to the root. Throws PreconditionError when some vertex lacks
// an incoming edge with some label.
Word tiling_witness_word(const NeighborGraph& g);

// pi(s) lies in the piece T_u.
bool address_in_piece(const NeighborGraph& g, const Address& s, const Word& u);

struct FaceLink {
  Word p;
  Word q;
  std::size_t vertex = 0;
};

struct FixedPointHit {
  Address address;
  Word piece;
};

enum class CertificateVerdict { kConnected, kInconclusive };
const char* to_string(CertificateVerdict v);

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ConnectivityCertificate {
  std::vector<Word> words;  // w, v, flip(w), flip(v)
  std::vector<FaceLink> face_links;
  std::vector<FixedPointHit> fixed_point_hits;
  std::vector<CertificateCheck> checks;
  CertificateVerdict verdict = CertificateVerdict::kInconclusive;
  std::string reason;
};

struct CertificateParams {
  WordSearchParams search;
  std::size_t max_padding = 12;
};

// Pieces T_w and T_v with all face neighbors, where T_v contains the center,
// together with their flips; checks face links between w.z and v, flip(w).z'
// and flip(v), v and flip(v) (nested pieces need none), and that the union
// contains pi((12)^w) and pi((21)^w). Requires m = 2; otherwise inconclusive.
ConnectivityCertificate interior_connectedness_certificate(const NeighborGraph& g, const std::vector<std::size_t>& faces,
                                                           const CertificateParams& params = {});

// Extends the shorter word by the least z of the missing length such that the
// piece relation is one of the faces.
std::optional<FaceLink> face_link(const NeighborGraph& g, const Word& p, const Word& q,
                                  const std::vector<std::size_t>& faces, std::size_t max_padding);

}  // namespace tiletopo
