#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "balforest/colouring.hpp"
#include "balforest/embedding.hpp"
#include "balforest/forest.hpp"

namespace balforest {

/// Two embeddings with c(negative) <= 0 <= c(positive), together with the
/// set I of forest vertices on which they disagree and the maximum forest
/// degree over I (0 when I is empty).
struct SignedPair {
  Embedding negative;
  Embedding positive;
  std::vector<Vertex> disagreement;
  int delta_i = 0;
};

/// Throws InvalidInput if the sums do not have the required signs.
SignedPair make_signed_pair(Embedding negative, Embedding positive, const Forest& forest);

struct InterpolationStep {
  std::size_t index = 0;
  Vertex u = 0;
  Vertex v = 0;
  int sum = 0;
};

/// Replaying the swaps from the positive embedding reproduces every
/// intermediate embedding, so steps only record the transposition.
struct InterpolationTrace {
  int start_sum = 0;
  int achieved_bound = 0;
  std::vector<InterpolationStep> steps;
};

struct InterpolationResult {
  Embedding embedding;
  InterpolationTrace trace;
};

/// Walks from pair.positive towards pair.negative one image transposition at
/// a time and returns the first embedding with |sum| <= delta_i + min_degree.
///
/// Disagreeing vertices are realigned in ascending index order. When neither
/// vertex of a transposition has minimum degree, the exchange is routed
/// through the lowest-index minimum-degree vertex w outside the pair as
/// (u w), (v w), (u w). Each transposition moves the sum by at most
/// 2 (delta_i + min_degree), which is what makes the walk land in the window.
InterpolationResult interpolate(const SignedPair& pair, const Forest& forest, const ColouredCompleteGraph& g);

/// One JSON object per line: {"step", "u", "v", "sum"}.
void write_trace_json_lines(std::ostream& out, const InterpolationTrace& trace);

/// h_0 .. h_{3r} interpolating between two placements of a vertex set M that
/// agree on N, moving one vertex per step and parking a displaced vertex at
/// the spare host vertex a.
struct Claim9Sequence {
  /// v_1 .. v_r: M \ N ascending, except that the vertex f maps to a (if
  /// any) goes last.
  std::vector<Vertex> labels;
  std::vector<PartialEmbedding> steps;
};

/// f and g must have domain exactly M, agree on N (a subset of M), and a must
/// lie outside the image of g. Returns steps[0] == g and steps[3r] == f.
Claim9Sequence claim9_sequence(const PartialEmbedding& f, const PartialEmbedding& g, std::span<const Vertex> m,
                               std::span<const Vertex> n, Vertex a);

}  // namespace balforest
