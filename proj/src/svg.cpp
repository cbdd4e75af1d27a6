#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "mbook/io.hpp"

namespace mbook {

namespace {

const char* page_palette[] = {
    "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b",
    "#17becf", "#e377c2", "#bcbd22", "#7f7f7f", "#aec7e8", "#98df8a",
};
constexpr int palette_size = 12;

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt(double v) {
    std::ostringstream out;
    out.precision(1);
    out << std::fixed << v;
    return out.str();
}

}  // namespace

std::string render_svg(const Graph& g, const BookEmbedding& emb, const SvgOptions& options) {
    const int n = static_cast<int>(emb.spine.size());
    std::map<Label, int> position;
    for (int i = 0; i < n; ++i) position.emplace(emb.spine[i], i);

    // edges involved in violations get flagged red
    ValidationReport report = validate(g, emb);
    std::set<LabelEdge> bad_edges;
    for (const auto& v : report.violations)
        for (const auto& e : v.edges) bad_edges.insert(e);

    auto x_of = [&](int pos) { return options.margin + pos * options.spacing; };
    const double max_span = n > 1 ? (n - 1) * options.spacing : options.spacing;
    const double baseline = options.margin + max_span / 2.0;
    const double width = 2 * options.margin + std::max(1, n - 1) * options.spacing;
    const double height = baseline + (options.show_labels ? 48.0 : 24.0);

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(width)
        << "\" height=\"" << fmt(height) << "\" viewBox=\"0 0 " << fmt(width) << " "
        << fmt(height) << "\">\n";
    svg << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (n > 1) {
        svg << "  <line x1=\"" << fmt(x_of(0)) << "\" y1=\"" << fmt(baseline) << "\" x2=\""
            << fmt(x_of(n - 1)) << "\" y2=\"" << fmt(baseline)
            << "\" stroke=\"#444\" stroke-width=\"1\"/>\n";
    }

    for (int p = 0; p < emb.page_count(); ++p) {
        const char* color = page_palette[p % palette_size];
        std::vector<LabelEdge> edges = emb.pages[p];
        std::sort(edges.begin(), edges.end());
        for (const auto& e : edges) {
            auto ia = position.find(e.first);
            auto ib = position.find(e.second);
            if (ia == position.end() || ib == position.end()) continue;
            double xa = x_of(std::min(ia->second, ib->second));
            double xb = x_of(std::max(ia->second, ib->second));
            double r = (xb - xa) / 2.0;
            const bool bad = bad_edges.count(e) > 0;
            svg << "  <path d=\"M " << fmt(xa) << " " << fmt(baseline) << " A " << fmt(r)
                << " " << fmt(r) << " 0 0 1 " << fmt(xb) << " " << fmt(baseline)
                << "\" fill=\"none\" stroke=\"" << (bad ? "#ff0000" : color)
                << "\" stroke-width=\"1.5\"" << (bad ? " stroke-dasharray=\"4 3\"" : "")
                << ">\n    <title>page " << (p + 1) << ": " << escape_xml(e.first.str())
                << " - " << escape_xml(e.second.str()) << "</title>\n  </path>\n";
        }
    }

    for (int i = 0; i < n; ++i) {
        const Label& l = emb.spine[i];
        auto idx = g.find(l);
        const bool black = !idx || g.tag(*idx) == Tag::Black;
        svg << "  <circle cx=\"" << fmt(x_of(i)) << "\" cy=\"" << fmt(baseline)
            << "\" r=\"4\" fill=\"" << (black ? "#000" : "#fff")
            << "\" stroke=\"#000\" stroke-width=\"1.2\"/>\n";
        if (options.show_labels) {
            svg << "  <text x=\"" << fmt(x_of(i)) << "\" y=\"" << fmt(baseline + 18)
                << "\" font-size=\"11\" font-family=\"monospace\" text-anchor=\"middle\">"
                << escape_xml(l.str()) << "</text>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace mbook
