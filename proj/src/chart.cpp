#include "slicess/chart.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace slicess {

using json = nlohmann::json;

const std::vector<ArrowStyle>& arrow_legend()
{
    static const std::vector<ArrowStyle> legend = {
        {"τ", "blue", false},
        {"Sq2", "red", false},
        {"Sq2+ρSq1", "orange", false},
        {"Sq3Sq1", "green", false},
        {"Sq2∘pr", "#800000", true},
        {"τ∘pr", "#000080", true},
        {"δSq2Sq1", "#008000", true},
        {"Q1", "violet", false},
    };
    return legend;
}

const ArrowStyle& arrow_style(const std::string& kind)
{
    static const ArrowStyle other{"other", "black", false};
    for (const auto& s : arrow_legend())
        if (s.kind == kind)
            return s;
    return other;
}

namespace {

json big(const BigInt& b)
{
    if (b <= std::numeric_limits<long long>::max() && b >= std::numeric_limits<long long>::min())
        return json(static_cast<long long>(b));
    return json(b.str());
}

const char* kind_name(Component::Kind k)
{
    switch (k) {
    case Component::Kind::F2: return "F2";
    case Component::Kind::Z: return "Z";
    case Component::Kind::Div: return "divisible";
    }
    return "?";
}

std::string comp_text(const Component& c)
{
    if (c.name == "E2")
        return c.value_str();
    if (c.kind == Component::Kind::Div)
        return c.name + ":D";
    if (c.kind == Component::Kind::Z)
        return c.name + ":" + c.group.str();
    return c.name;
}

bool nonzero_block(const GroupHom::Block& b) { return !b.matrix.is_zero(); }

}  // namespace

json region_json(const PageRegion& reg)
{
    json doc;
    doc["spectrum"] = spectrum_name(reg.spectrum);
    doc["field"] = reg.field;
    doc["page"] = reg.page;
    doc["window"] = {{"pmin", reg.window.pmin}, {"pmax", reg.window.pmax}, {"qmin", reg.window.qmin},
                     {"qmax", reg.window.qmax}};
    json cells = json::array();
    for (const auto& [pq, g] : reg.cells) {
        json comps = json::array();
        for (const auto& c : g.comps) {
            json jc;
            jc["kind"] = kind_name(c.kind);
            jc["name"] = c.name;
            if (c.kind == Component::Kind::F2)
                jc["dim"] = c.dim;
            else
                jc["group"] = c.kind == Component::Kind::Z ? c.group.str() : "D";
            jc["labels"] = c.labels;
            if (c.name != "E2")
                jc["offset"] = c.offset;
            comps.push_back(jc);
        }
        json jc = {{"p", pq.first}, {"q", pq.second}, {"group", g.str()}, {"components", comps}};
        if (g.conditional)
            jc["conditional"] = true;
        if (auto it = reg.notes.find(pq); it != reg.notes.end())
            jc["note"] = it->second;
        cells.push_back(jc);
    }
    doc["cells"] = cells;
    json diffs = json::array();
    for (const auto& [pq, h] : reg.homs) {
        json blocks = json::array();
        for (const auto& b : h.blocks) {
            json m = json::array();
            for (std::size_t r = 0; r < b.matrix.rows(); ++r) {
                json row = json::array();
                for (std::size_t c = 0; c < b.matrix.cols(); ++c)
                    row.push_back(big(b.matrix(r, c)));
                m.push_back(row);
            }
            blocks.push_back({{"src_index", b.src_index}, {"tgt_index", b.tgt_index}, {"op", b.op}, {"kind", b.kind},
                              {"matrix", m}});
        }
        diffs.push_back({{"from", {pq.first, pq.second}}, {"to", {pq.first - 1, pq.second + 1}}, {"blocks", blocks}});
    }
    doc["differentials"] = diffs;
    return doc;
}

std::string render_ascii(const PageRegion& reg)
{
    constexpr int width = 14, lines_per_cell = 4;
    const Window& w = reg.window;
    std::ostringstream out;
    out << spectrum_name(reg.spectrum) << " over " << reg.field << ", E" << (reg.page == "inf" ? "∞" : reg.page)
        << "\n";
    auto pad = [](std::string s, std::size_t n) {
        // count code points so that Greek letters do not skew the grid
        std::size_t len = 0;
        for (unsigned char c : s)
            if ((c & 0xC0) != 0x80)
                ++len;
        if (len > n) {
            std::string cut;
            std::size_t k = 0;
            for (std::size_t i = 0; i < s.size() && k < n - 1; ++i) {
                cut += s[i];
                if (i + 1 >= s.size() || (static_cast<unsigned char>(s[i + 1]) & 0xC0) != 0x80)
                    ++k;
            }
            return cut + "~";
        }
        return s + std::string(n - len, ' ');
    };
    if (!w.empty()) {
        for (int q = w.qmax; q >= w.qmin; --q) {
            for (int line = 0; line < lines_per_cell; ++line) {
                out << (line == 0 ? pad("q=" + std::to_string(q), 6) : std::string(6, ' ')) << "|";
                for (int p = w.pmin; p <= w.pmax; ++p) {
                    std::string text;
                    auto it = reg.cells.find({p, q});
                    if (it != reg.cells.end()) {
                        const auto& comps = it->second.comps;
                        const std::size_t n = comps.size();
                        const auto li = static_cast<std::size_t>(line);
                        if (n > static_cast<std::size_t>(lines_per_cell) && line == lines_per_cell - 1)
                            text = "+" + std::to_string(n - li) + " more";
                        else if (li < n)
                            text = comp_text(comps[li]);
                        else if (line == 0)
                            text = ".";
                    }
                    out << pad(text, width);
                }
                out << "\n";
            }
        }
        out << std::string(7, ' ');
        for (int p = w.pmin; p <= w.pmax; ++p)
            out << pad("p=" + std::to_string(p), width);
        out << "\n";
    }
    bool any = false;
    for (const auto& [pq, h] : reg.homs)
        for (const auto& b : h.blocks) {
            if (!nonzero_block(b))
                continue;
            if (!any)
                out << "d1 blocks:\n";
            any = true;
            out << "  (" << pq.first << "," << pq.second << ") " << comp_text(h.source.comps[b.src_index]) << " --"
                << b.kind << "--> (" << pq.first - 1 << "," << pq.second + 1 << ") "
                << comp_text(h.target.comps[b.tgt_index]) << "\n";
        }
    for (const auto& [pq, note] : reg.notes)
        out << "note (" << pq.first << "," << pq.second << "): " << note << "\n";
    return out.str();
}

namespace {

std::string esc(const std::string& s)
{
    std::string o;
    for (char c : s) {
        switch (c) {
        case '&': o += "&amp;"; break;
        case '<': o += "&lt;"; break;
        case '>': o += "&gt;"; break;
        case '"': o += "&quot;"; break;
        default: o += c;
        }
    }
    return o;
}

}  // namespace

std::string render_svg(const PageRegion& reg)
{
    constexpr int cw = 90, ch = 70, margin = 50, legend_h = 30;
    const Window& w = reg.window;
    const int ncols = w.empty() ? 0 : w.pmax - w.pmin + 1;
    const int nrows = w.empty() ? 0 : w.qmax - w.qmin + 1;
    const int width = 2 * margin + std::max(std::max(ncols, 1) * cw, static_cast<int>(arrow_legend().size()) * 80);
    const int height = 2 * margin + std::max(nrows, 1) * ch + legend_h * 2;
    auto x_of = [&](int p) { return margin + (p - w.pmin) * cw + cw / 2; };
    auto y_of = [&](int q) { return margin + (w.qmax - q) * ch + ch / 2; };
    // component k of n stacks upward from the cell centre
    auto comp_y = [&](int q, std::size_t k) { return y_of(q) + 18 - static_cast<int>(k) * 12; };

    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" font-family=\"monospace\" font-size=\"9\">\n";
    o << "<title>" << esc(spectrum_name(reg.spectrum) + " over " + reg.field + ", page " + reg.page) << "</title>\n";
    o << "<defs>\n";
    for (const auto& s : arrow_legend())
        o << "<marker id=\"m" << &s - &arrow_legend()[0] << "\" markerWidth=\"6\" markerHeight=\"6\" refX=\"5\" refY=\"3\" "
          << "orient=\"auto\"><path d=\"M0,0 L6,3 L0,6 z\" fill=\"" << s.color << "\"/></marker>\n";
    o << "</defs>\n";
    // axes
    const int x0 = margin, y0 = margin + std::max(nrows, 1) * ch;
    o << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 + std::max(ncols, 1) * cw << "\" y2=\"" << y0
      << "\" stroke=\"black\"/>\n";
    o << "<line x1=\"" << x0 << "\" y1=\"" << margin << "\" x2=\"" << x0 << "\" y2=\"" << y0 << "\" stroke=\"black\"/>\n";
    for (int p = w.pmin; ncols > 0 && p <= w.pmax; ++p)
        o << "<text x=\"" << x_of(p) << "\" y=\"" << y0 + 14 << "\" text-anchor=\"middle\">" << p << "</text>\n";
    for (int q = w.qmin; nrows > 0 && q <= w.qmax; ++q)
        o << "<text x=\"" << x0 - 8 << "\" y=\"" << y_of(q) << "\" text-anchor=\"end\">" << q << "</text>\n";
    o << "<text x=\"" << x0 + std::max(ncols, 1) * cw / 2 << "\" y=\"" << y0 + 28 << "\" text-anchor=\"middle\">p</text>\n";
    o << "<text x=\"" << 12 << "\" y=\"" << margin + std::max(nrows, 1) * ch / 2 << "\">q</text>\n";

    for (const auto& [pq, g] : reg.cells) {
        if (!w.contains(pq.first, pq.second))
            continue;
        for (std::size_t k = 0; k < g.comps.size(); ++k) {
            const Component& c = g.comps[k];
            const int x = x_of(pq.first), y = comp_y(pq.second, k);
            const char* fill = c.kind == Component::Kind::F2 ? "black" : (c.kind == Component::Kind::Z ? "white" : "gray");
            o << "<circle cx=\"" << x - 30 << "\" cy=\"" << y - 3 << "\" r=\"3\" stroke=\"black\" fill=\"" << fill << "\"/>";
            o << "<text x=\"" << x - 24 << "\" y=\"" << y << "\">" << esc(comp_text(c)) << "</text>\n";
        }
        if (auto it = reg.notes.find(pq); it != reg.notes.end())
            o << "<text x=\"" << x_of(pq.first) - 30 << "\" y=\"" << y_of(pq.second) - 22 << "\" fill=\"gray\">*</text>\n";
    }
    for (const auto& [pq, h] : reg.homs)
        for (const auto& b : h.blocks) {
            if (!nonzero_block(b))
                continue;
            const ArrowStyle& s = arrow_style(b.kind);
            const auto idx = static_cast<std::size_t>(&s - &arrow_legend()[0]);
            const bool known = idx < arrow_legend().size();
            o << "<line x1=\"" << x_of(pq.first) - 30 << "\" y1=\"" << comp_y(pq.second, b.src_index) - 3 << "\" x2=\""
              << x_of(pq.first - 1) - 30 << "\" y2=\"" << comp_y(pq.second + 1, b.tgt_index) - 3 << "\" stroke=\""
              << s.color << "\"" << (s.dashed ? " stroke-dasharray=\"4,2\"" : "");
            if (known)
                o << " marker-end=\"url(#m" << idx << ")\"";
            o << "><title>" << esc(b.kind) << "</title></line>\n";
        }
    // legend
    int lx = margin;
    const int ly = height - legend_h;
    for (const auto& s : arrow_legend()) {
        o << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 18 << "\" y2=\"" << ly << "\" stroke=\""
          << s.color << "\"" << (s.dashed ? " stroke-dasharray=\"4,2\"" : "") << "/>";
        o << "<text x=\"" << lx + 22 << "\" y=\"" << ly + 3 << "\">" << esc(s.kind) << "</text>\n";
        lx += 80;
    }
    o << "</svg>\n";
    return o.str();
}

}  // namespace slicess
