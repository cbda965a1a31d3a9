#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "gbg/complex.hpp"

namespace gbg {

/// A letter is a generator index g >= 1 written as +g, its inverse as -g.
using Word = std::vector<int>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

/// Free and cyclic reduction.
Word free_reduce(Word w);
Word cyclic_reduce(Word w);

/// Generators are the 1-cubes outside a BFS spanning tree rooted at
/// `basepoint`, each oriented from its lower-index label end; relators are
/// the boundary words of the squares, read from the square's least corner.
/// Throws ValidationError if the complex is disconnected.
Presentation pi1_presentation(const CubeComplex& cc, std::size_t basepoint = 0);

/// Free/cyclic reduction, removal of empty and duplicate relators, and
/// elimination of a generator occurring exactly once in a relator (shortest
/// relator first), repeated to a fixed point.
Presentation tietze_simplify(Presentation p);

struct Abelianization {
  long long free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1
};

Abelianization abelianization(const Presentation& p);

/// "<a, b | a b A B>" with capital letters (or a trailing "^-1" for long
/// names) for inverses.
std::string to_string(const Presentation& p);
std::string presentation_json(const Presentation& p);
/// Parses "<a,b | abAB, aa>" where every generator is a single lower-case
/// letter and upper case denotes the inverse.
Presentation parse_presentation(const std::string& text);

}  // namespace gbg
