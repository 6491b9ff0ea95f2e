#include "arc_diagram.hpp"

#include <algorithm>
#include <map>

namespace skolemgen::cli {

ArcDiagram arc_diagram(const OpenState& state) {
  ArcDiagram d;
  d.vertices = state.order();
  std::map<int, int> pending;  // closed value -> left position
  for (int pos = 1; pos <= d.vertices; ++pos) {
    const Entry e = state.entries()[pos - 1];
    d.labels.push_back((e.is_open() ? "*" : "") + std::to_string(e.value));
    if (e.is_open()) {
      d.open.push_back({pos, e.value});
    } else if (auto it = pending.find(e.value); it != pending.end()) {
      d.closed.push_back({it->second, pos});
      pending.erase(it);
    } else {
      pending.emplace(e.value, pos);
    }
  }
  std::sort(d.closed.begin(), d.closed.end(),
            [](const ClosedArc& a, const ClosedArc& b) { return a.left < b.left; });
  return d;
}

std::string render_ascii(const ArcDiagram& d) {
  std::size_t cell = 1;
  for (const auto& label : d.labels) cell = std::max(cell, label.size() + 1);
  const std::size_t width = cell * static_cast<std::size_t>(d.vertices);
  const auto column = [cell](int pos) { return cell * static_cast<std::size_t>(pos) - 1; };

  std::string out;
  for (const auto& label : d.labels) out += std::string(cell - label.size(), ' ') + label;
  out += '\n';

  struct Row {
    int left;
    std::string text;
  };
  std::vector<Row> rows;
  for (const ClosedArc& a : d.closed) {
    std::string row(width, ' ');
    std::fill(row.begin() + column(a.left), row.begin() + column(a.right), '-');
    row[column(a.left)] = row[column(a.right)] = '+';
    rows.push_back({a.left, row + "  " + std::to_string(a.span())});
  }
  for (const OpenArc& a : d.open) {
    std::string row(width + 1, '~');
    std::fill(row.begin(), row.begin() + column(a.position), ' ');
    row[column(a.position)] = '+';
    rows.push_back({a.position, row + " *" + std::to_string(a.star_value)});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const Row& a, const Row& b) { return a.left < b.left; });
  for (const Row& r : rows) {
    const auto end = r.text.find_last_not_of(' ');
    out += r.text.substr(0, end + 1) + '\n';
  }
  return out;
}

std::string render_svg(const ArcDiagram& d) {
  constexpr int spacing = 40, margin = 30, stub = spacing / 2, label_room = 40;
  int max_radius = stub;
  for (const ClosedArc& a : d.closed) max_radius = std::max(max_radius, a.span() * spacing / 2);
  const int baseline = margin + max_radius;
  const int width = 2 * margin + std::max(d.vertices - 1, 0) * spacing + stub;
  const int height = baseline + label_room;
  const auto x_of = [](int pos) { return margin + (pos - 1) * spacing; };
  const auto num = [](int v) { return std::to_string(v); };

  std::string out;
  out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(width) +
         "\" height=\"" + num(height) + "\" viewBox=\"0 0 " + num(width) + " " + num(height) + "\">\n";
  out += "<g fill=\"none\" stroke=\"black\" stroke-width=\"2\">\n";
  for (const ClosedArc& a : d.closed) {
    const int r = a.span() * spacing / 2;
    out += "<path class=\"closed\" data-span=\"" + num(a.span()) + "\" d=\"M " + num(x_of(a.left)) +
           " " + num(baseline) + " A " + num(r) + " " + num(r) + " 0 0 1 " + num(x_of(a.right)) +
           " " + num(baseline) + "\"/>\n";
  }
  for (const OpenArc& a : d.open) {
    const int x = x_of(a.position);
    out += "<path class=\"open\" data-star=\"" + num(a.star_value) + "\" d=\"M " + num(x) + " " +
           num(baseline) + " A " + num(stub) + " " + num(stub) + " 0 0 1 " + num(x + stub) + " " +
           num(baseline - stub) + "\"/>\n";
  }
  out += "</g>\n<g fill=\"black\" font-family=\"monospace\" font-size=\"14\" text-anchor=\"middle\">\n";
  for (int pos = 1; pos <= d.vertices; ++pos) {
    const int x = x_of(pos);
    out += "<circle cx=\"" + num(x) + "\" cy=\"" + num(baseline) + "\" r=\"4\"/>\n";
    out += "<text x=\"" + num(x) + "\" y=\"" + num(baseline + 24) + "\">" + d.labels[pos - 1] +
           "</text>\n";
  }
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace skolemgen::cli
