#include "kauffman/render.hpp"

#include <algorithm>
#include <vector>

namespace kauffman {

namespace {

struct Arc {
  int top, bottom;  // 1-based rows, top < bottom
  int column = 0;
};

struct Through {
  int left, right;  // 1-based rows
  int jog = -1;     // canvas column of the vertical jog, -1 if straight
};

// greedy interval coloring; nested arcs end up one column deeper
void assign_columns(std::vector<Arc>& arcs) {
  std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
    if (a.top != b.top) return a.top < b.top;
    return a.bottom > b.bottom;
  });
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    std::vector<bool> taken;
    for (std::size_t j = 0; j < i; ++j) {
      if (arcs[j].bottom < arcs[i].top || arcs[i].bottom < arcs[j].top) {
        continue;
      }
      if (taken.size() <= static_cast<std::size_t>(arcs[j].column)) {
        taken.resize(arcs[j].column + 1, false);
      }
      taken[arcs[j].column] = true;
    }
    int c = 0;
    while (static_cast<std::size_t>(c) < taken.size() && taken[c]) {
      ++c;
    }
    arcs[i].column = c;
  }
}

struct Layout {
  int rank;
  long long circles;
  std::vector<Arc> left, right;
  std::vector<Through> through;
  int left_width, mid_width, right_width;

  int width() const { return left_width + mid_width + right_width; }
};

Layout layout(const WireDiagram& d, long long circles) {
  Layout out;
  out.rank = d.rank();
  out.circles = circles;
  for (const auto& [a, b] : d.pairs()) {
    switch (d.wire_kind(a, b)) {
      case WireKind::LWire:
        out.left.push_back(Arc{a.index, b.index});
        break;
      case WireKind::RWire:
        out.right.push_back(Arc{a.index, b.index});
        break;
      case WireKind::TWire:
        out.through.push_back(Through{a.index, b.index});
        break;
    }
  }
  assign_columns(out.left);
  assign_columns(out.right);
  std::sort(out.through.begin(), out.through.end(), [](const Through& a, const Through& b) {
    if (a.left != b.left) return a.left < b.left;
    return a.right < b.right;
  });

  int depth_l = 0, depth_r = 0;
  for (const Arc& a : out.left) depth_l = std::max(depth_l, a.column + 1);
  for (const Arc& a : out.right) depth_r = std::max(depth_r, a.column + 1);
  int jogs = 0;
  for (Through& t : out.through) {
    if (t.left != t.right) {
      t.jog = depth_l + 1 + 2 * jogs;
      ++jogs;
    }
  }
  out.left_width = depth_l;
  out.right_width = depth_r;
  out.mid_width = 2 * jogs + 3;
  return out;
}

void put(std::vector<std::string>& canvas, int row, int col, char c) {
  char& cell = canvas[row][col];
  if ((cell == '-' && c == '|') || (cell == '|' && c == '-')) {
    cell = '+';
  } else {
    cell = c;
  }
}

std::string compose_ascii(const Layout& l) {
  const int n = l.rank;
  const int width = l.width();
  std::vector<std::string> canvas(n, std::string(width, ' '));

  for (const Arc& a : l.left) {
    int col = a.column;
    put(canvas, a.top - 1, col, '\\');
    for (int r = a.top; r < a.bottom - 1; ++r) {
      put(canvas, r, col, '|');
    }
    put(canvas, a.bottom - 1, col, '/');
  }
  for (const Arc& a : l.right) {
    int col = width - 1 - a.column;
    put(canvas, a.top - 1, col, '/');
    for (int r = a.top; r < a.bottom - 1; ++r) {
      put(canvas, r, col, '|');
    }
    put(canvas, a.bottom - 1, col, '\\');
  }
  for (const Through& t : l.through) {
    if (t.jog < 0) {
      for (int c = 0; c < width; ++c) {
        put(canvas, t.left - 1, c, '-');
      }
      continue;
    }
    for (int c = 0; c < t.jog; ++c) {
      put(canvas, t.left - 1, c, '-');
    }
    for (int c = t.jog + 1; c < width; ++c) {
      put(canvas, t.right - 1, c, '-');
    }
    int lo = std::min(t.left, t.right), hi = std::max(t.left, t.right);
    for (int r = lo; r < hi - 1; ++r) {
      put(canvas, r, t.jog, '|');
    }
    put(canvas, t.left - 1, t.jog, '+');
    put(canvas, t.right - 1, t.jog, '+');
  }

  const int label_width = static_cast<int>(std::to_string(n).size());
  std::string out;
  for (int r = 0; r < n; ++r) {
    std::string label = std::to_string(r + 1);
    out.append(label_width - label.size(), ' ');
    out += label;
    out += ' ';
    out += canvas[r];
    out += ' ';
    out += label;
    out += '\n';
  }
  if (l.circles > 0) {
    for (long long s = 0; s < l.circles; ++s) {
      if (s > 0) {
        out += ' ';
      }
      out += 'O';
    }
    out += '\n';
  }
  out += "circles: " + std::to_string(l.circles) + "\n";
  return out;
}

std::string compose_svg(const Layout& l) {
  const int n = l.rank;
  const int x_left = 20;
  const int bulge_base = 14;
  const int mid_start = x_left + bulge_base * (l.left_width + 1) + 10;
  const int jog_count = (l.mid_width - 3) / 2;
  const int x_right = mid_start + 30 * jog_count + 60 + bulge_base * (l.right_width + 1);
  auto y = [](int row) { return 20 * row + 10; };

  std::string out;
  auto line = [&](int x1, int y1, int x2, int y2) {
    out += "<line x1=\"" + std::to_string(x1) + "\" y1=\"" + std::to_string(y1) + "\" x2=\"" +
           std::to_string(x2) + "\" y2=\"" + std::to_string(y2) + "\"/>\n";
  };
  auto arc = [&](int x, int top, int bottom, int bulge) {
    int ym = (y(top) + y(bottom)) / 2;
    out += "<path d=\"M " + std::to_string(x) + " " + std::to_string(y(top)) + " Q " +
           std::to_string(x + bulge) + " " + std::to_string(ym) + " " + std::to_string(x) + " " +
           std::to_string(y(bottom)) + "\"/>\n";
  };

  for (const Arc& a : l.left) {
    arc(x_left, a.top, a.bottom, bulge_base * (l.left_width - a.column));
  }
  for (const Arc& a : l.right) {
    arc(x_right, a.top, a.bottom, -bulge_base * (l.right_width - a.column));
  }
  int jog = 0;
  for (const Through& t : l.through) {
    if (t.jog < 0) {
      line(x_left, y(t.left), x_right, y(t.left));
      continue;
    }
    int xj = mid_start + 30 * jog;
    ++jog;
    line(x_left, y(t.left), xj, y(t.left));
    line(xj, y(t.left), xj, y(t.right));
    line(xj, y(t.right), x_right, y(t.right));
  }
  long long shown = std::max<long long>(l.circles, 0);
  for (long long s = 0; s < shown; ++s) {
    out += "<circle cx=\"" + std::to_string(x_right + 30 + 26 * s) + "\" cy=\"" +
           std::to_string(y(1)) + "\" r=\"8\"/>\n";
  }
  out += "<text x=\"" + std::to_string(x_left) + "\" y=\"" + std::to_string(y(n) + 24) +
         "\">circles: " + std::to_string(l.circles) + "</text>\n";

  int width = x_right + 30 + 26 * static_cast<int>(shown) + 20;
  int height = y(n) + 40;
  std::string head = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " +
                     std::to_string(width) + " " + std::to_string(height) +
                     "\" fill=\"none\" stroke=\"black\">\n";
  return head + out + "</svg>\n";
}

}  // namespace

std::string render_ascii(const WireDiagram& d) {
  return compose_ascii(layout(d, d.circles()));
}

std::string render_svg(const WireDiagram& d) {
  return compose_svg(layout(d, d.circles()));
}

std::string render_ascii(const ExtKauffmanElement& x) {
  return compose_ascii(layout(x.jones().diagram(), x.circles()));
}

std::string render_svg(const ExtKauffmanElement& x) {
  return compose_svg(layout(x.jones().diagram(), x.circles()));
}

std::string render(const WireDiagram& d, RenderFormat format) {
  return format == RenderFormat::Ascii ? render_ascii(d) : render_svg(d);
}

std::string render(const ExtKauffmanElement& x, RenderFormat format) {
  return format == RenderFormat::Ascii ? render_ascii(x) : render_svg(x);
}

}  // namespace kauffman
