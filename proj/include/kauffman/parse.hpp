#ifndef KAUFFMAN_PARSE_HPP
#define KAUFFMAN_PARSE_HPP

#include <string>
#include <string_view>

#include "kauffman/diagram.hpp"
#include "kauffman/kauffman.hpp"
#include "kauffman/words.hpp"

namespace kauffman {

// Identity grammar:
//   word     := letter+
//   letter   := [a-z][0-9]* | letter '^' int
//   identity := word ('=' | U+2250) word
// Whitespace is allowed between tokens; '^' repeats the preceding letter.
Word parse_word(std::string_view text);
Identity parse_identity(std::string_view text);
std::string print_word(const Word& w);
std::string print_identity(const Identity& id);

// Generator words: tokens c, d, h1..h9, optionally followed by '^' int.
GeneratorWord parse_generator_word(std::string_view text);
std::string print_generator_word(const GeneratorWord& w);

// Diagram literals: {n: 9, pairs: [[1,"5'"],[2,4],...], circles: 3}
// Primes mark right points; keys may appear in any order and circles
// defaults to 0.
WireDiagram parse_diagram_literal(std::string_view text);
std::string to_literal(const WireDiagram& d);
std::string to_literal(const KauffmanElement& x);
std::string to_literal(const ExtKauffmanElement& x);

}  // namespace kauffman

#endif
