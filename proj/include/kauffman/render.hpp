#ifndef KAUFFMAN_RENDER_HPP
#define KAUFFMAN_RENDER_HPP

#include <string>

#include "kauffman/diagram.hpp"
#include "kauffman/kauffman.hpp"

namespace kauffman {

enum class RenderFormat { Ascii, Svg };

// Schematic pictures, byte-identical for equal inputs.  Rows 1..n run top to
// bottom; same-side wires are nested bracket arcs, through wires straight or
// one-jog lines, circles listed beside the diagram.
std::string render_ascii(const WireDiagram& d);
std::string render_svg(const WireDiagram& d);
std::string render_ascii(const ExtKauffmanElement& x);
std::string render_svg(const ExtKauffmanElement& x);

std::string render(const WireDiagram& d, RenderFormat format);
std::string render(const ExtKauffmanElement& x, RenderFormat format);

}  // namespace kauffman

#endif
