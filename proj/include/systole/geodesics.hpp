#pragma once

// Closed geodesics of developed groups, read off as closed turn sequences on
// the dual trivalent graph, and exact traces of words in named generators.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "systole/developing.hpp"
#include "systole/modular.hpp"
#include "systole/triangulation.hpp"

namespace systole {

/// One primitive, non-peripheral conjugacy class, inverses identified.
/// Combinatorial witnesses carry the crossed darts and an L/R word; matrix
/// witnesses carry a word in generator names and leave `darts` empty.
struct GeodesicWitness {
    std::string word;
    std::vector<Dart> darts;
    Moebius matrix;
    Rational trace;  ///< signed trace of `matrix`
    double length = 0;

    Rational abs_trace() const { return abs(trace); }
};

/// Orders by (|trace|, word length, word).
bool witness_less(const GeodesicWitness& a, const GeodesicWitness& b);

nlohmann::json witness_to_json(const GeodesicWitness& w);

// ---------------------------------------------------------------------------
// Dual-graph walks

/// A walk state is a dart c: the walk is crossing the edge of c from face(c)
/// into face(twin c).  A left turn goes to next(c), keeping origin(c) on the
/// left; a right turn goes to face_prev(twin c), keeping head(c) on the right.
Dart turn_left(const Triangulation& g, Dart c);
Dart turn_right(const Triangulation& g, Dart c);
/// Follows an L/R word; returns the final state.
Dart follow_walk(const Triangulation& g, Dart start, std::string_view word);

/// Every primitive, non-peripheral closed walk with trace at most `bound`,
/// one witness per class up to rotation and reversal, sorted by witness_less.
std::vector<GeodesicWitness> combinatorial_spectrum(const Triangulation& g, std::int64_t bound,
                                                    int threads = 1);

struct SystoleResult {
    Rational trace;  ///< |trace| of the shortest classes
    double length = 0;
    std::vector<GeodesicWitness> witnesses;  ///< all classes of minimal length
};

/// Shortest closed geodesics.  Throws invalid-argument for invalid maps.
SystoleResult systole_combinatorial(const Triangulation& g, int threads = 1);

/// Smallest bound B such that every closed walk containing both letters and
/// longer than B letters has trace above `bound`.  The slowest growth among
/// such words is L^(m-1) R, of trace m + 1.
int walk_length_cutoff(std::int64_t bound);

struct DensityWitness {
    int edge = -1;
    Dart start = -1;      ///< walk state at which the word closes up
    std::string word;     ///< L R^{m1-2} L R^{m2-2}
    Rational trace;
    double length = 0;
};

/// The closed walk encircling both endpoints of a non-loop edge.  Throws
/// not-hyperbolic when the density is at most 4, validation error if the
/// walk does not close or its trace differs from density - 2.
DensityWitness verify_density_length(const Triangulation& g, int edge);

// ---------------------------------------------------------------------------
// Words in named generators

struct WordLetter {
    int generator = 0;
    int power = 1;  ///< nonzero
};

/// Parses "g2 g1^-1 g3^2" against generator names ('*' and '.' also
/// separate).  Throws parse error on unknown names.
std::vector<WordLetter> parse_word(const std::vector<LabeledGenerator>& gens, std::string_view word);
std::string format_word(const std::vector<LabeledGenerator>& gens, const std::vector<WordLetter>& word);

/// Left-to-right product; the empty word is the identity.
Moebius word_value(const std::vector<LabeledGenerator>& gens, const std::vector<WordLetter>& word);
Moebius word_value(const std::vector<LabeledGenerator>& gens, std::string_view word);
Rational word_trace(const std::vector<LabeledGenerator>& gens, std::string_view word);

}  // namespace systole
