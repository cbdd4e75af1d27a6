#include "mbook/constructions.hpp"

#include <algorithm>
#include <map>

#include "mbook/bounds.hpp"

namespace mbook {

namespace {

void check_or_throw(const Graph& g, BookEmbedding& emb, const char* name) {
    for (auto& page : emb.pages) std::sort(page.begin(), page.end());
    ValidationReport report = validate(g, emb);
    if (!report.ok)
        throw construction_error(std::string(name) + ": layout failed validation", report);
}

std::vector<int> components_of(const Graph& g) {
    std::vector<int> comp(g.vertex_count(), -1);
    int count = 0;
    for (int root = 0; root < g.vertex_count(); ++root) {
        if (comp[root] != -1) continue;
        std::vector<int> stack{root};
        comp[root] = count;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int v : g.adjacency()[u])
                if (comp[v] == -1) {
                    comp[v] = count;
                    stack.push_back(v);
                }
        }
        ++count;
    }
    return comp;
}

bool has_odd_cycle_component(const Graph& g) {
    auto comp = components_of(g);
    int count = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
    for (int c = 0; c < count; ++c) {
        std::vector<int> keep;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (comp[v] == c) keep.push_back(v);
        if (keep.size() < 3 || keep.size() % 2 == 0) continue;
        bool all_two = true;
        for (int v : keep)
            if (g.degree(v) != 2) all_two = false;
        if (all_two) return true;
    }
    return false;
}

// Path in vertex order from one endpoint, or nullopt if g is not a
// connected path.
std::optional<std::vector<int>> path_order(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0 || g.edge_count() != n - 1 || !is_connected(g)) return std::nullopt;
    int start = 0;
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) > 2) return std::nullopt;
        if (g.degree(v) <= 1) start = v;
    }
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int w : g.adjacency()[cur])
            if (w != prev) next = w;
        if (next == -1) return std::nullopt;
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

std::optional<std::vector<int>> cycle_order(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 3 || g.edge_count() != n || !is_connected(g)) return std::nullopt;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 2) return std::nullopt;
    std::vector<int> order{0};
    int prev = -1, cur = 0;
    while (static_cast<int>(order.size()) < n) {
        int next = -1;
        for (int w : g.adjacency()[cur])
            if (w != prev) {
                next = w;
                break;
            }
        order.push_back(next);
        prev = cur;
        cur = next;
    }
    return order;
}

}  // namespace

BookEmbedding embed_outerplanar(const Graph& g, int vertex_cap, long long coloring_budget) {
    if (is_odd_cycle(g)) throw std::invalid_argument("embed_outerplanar: input is an odd cycle");
    const int delta = degree_profile(g).max_degree;
    if (delta <= 2 && has_odd_cycle_component(g))
        throw std::invalid_argument(
            "embed_outerplanar: an odd cycle component with max degree 2 has no "
            "max-degree-page layout");

    BookEmbedding emb;
    if (g.edge_count() == 0) {
        for (const auto& l : g.labels()) emb.spine.push_back(l);
        emb.pages.emplace_back();
        return emb;
    }

    if (auto order = path_order(g)) {
        // spine along the path, consecutive edges alternating between pages
        for (int v : *order) emb.spine.push_back(g.label(v));
        emb.pages.assign(delta, {});
        for (size_t i = 0; i + 1 < order->size(); ++i)
            emb.pages[i % delta].push_back(
                make_label_edge(g.label((*order)[i]), g.label((*order)[i + 1])));
        check_or_throw(g, emb, "embed_outerplanar");
        return emb;
    }
    if (auto order = cycle_order(g)) {
        // natural order; the closing edge nests over the odd-position page
        const int n = g.vertex_count();
        for (int v : *order) emb.spine.push_back(g.label(v));
        emb.pages.assign(2, {});
        for (int i = 0; i + 1 < n; ++i)
            emb.pages[i % 2].push_back(
                make_label_edge(g.label((*order)[i]), g.label((*order)[i + 1])));
        emb.pages[1].push_back(make_label_edge(g.label((*order)[0]), g.label((*order)[n - 1])));
        check_or_throw(g, emb, "embed_outerplanar");
        return emb;
    }

    auto order = outerplanar_order(g, vertex_cap);
    if (!order) throw std::invalid_argument("embed_outerplanar: input is not outerplanar");
    auto coloring = edge_coloring(g, delta, coloring_budget);
    if (!coloring)
        throw std::invalid_argument("embed_outerplanar: no max-degree edge coloring exists");

    for (int v : *order) emb.spine.push_back(g.label(v));
    emb.pages.assign(delta, {});
    for (const auto& [e, c] : coloring->colors)
        emb.pages[c].push_back(make_label_edge(g.label(e.first), g.label(e.second)));
    check_or_throw(g, emb, "embed_outerplanar");
    return emb;
}

DispersableInput DispersableInput::make(Graph h) {
    if (h.vertex_count() == 1) {
        BookEmbedding emb;
        emb.spine.push_back(h.label(0));
        return make(std::move(h), std::move(emb));
    }
    BookEmbedding emb = embed_outerplanar(h);
    return make(std::move(h), std::move(emb));
}

DispersableInput DispersableInput::make(Graph h, BookEmbedding emb,
                                        std::optional<std::vector<int>> coloring) {
    const int delta = degree_profile(h).max_degree;
    if (delta == 0 && h.vertex_count() > 1)
        throw std::invalid_argument("DispersableInput: edgeless multi-vertex graph rejected");
    ValidationReport report = validate(h, emb);
    if (!report.ok)
        throw construction_error("DispersableInput: embedding invalid", std::move(report));
    if (emb.page_count() != delta)
        throw std::invalid_argument("DispersableInput: embedding must use exactly " +
                                    std::to_string(delta) + " page(s), got " +
                                    std::to_string(emb.page_count()));
    std::vector<int> colors;
    if (coloring) {
        colors = std::move(*coloring);
        if (static_cast<int>(colors.size()) != h.vertex_count())
            throw std::invalid_argument("DispersableInput: coloring size mismatch");
        for (auto [u, v] : h.edges())
            if (colors[u] == colors[v] || colors[u] < 0 || colors[u] > 1 || colors[v] < 0 ||
                colors[v] > 1)
                throw std::invalid_argument("DispersableInput: coloring is not proper");
    } else {
        auto bp = bipartition(h);
        if (!bp) throw std::invalid_argument("DispersableInput: graph is not bipartite");
        colors = std::move(*bp);
    }
    return DispersableInput{std::move(h), std::move(emb), std::move(colors)};
}

namespace {

// Vertex naming shared by the star layouts: index 0 is the center, 1..n the
// white subdivision vertices, n+1..2n the leaves (index i pairs the white
// vertex k with the leaf 2n-k+1).
Label star_v_label(int n, int i) {
    if (i == 0) return Label::plain("0");
    if (i <= n) return Label::edge(Label::plain("0"), Label::plain(std::to_string(i)));
    return Label::plain(std::to_string(2 * n + 1 - i));
}

std::vector<int> star_spine_indices(int n) {
    std::vector<int> order{0};
    for (int k = 1; k <= n; ++k) {
        order.push_back(k);
        if (2 * n + 1 - k != k) order.push_back(2 * n + 1 - k);
    }
    return order;
}

// Pages 1..n+1 of the star layouts, as v-index pairs. Page t carries the
// pairs within the center/white block whose index sum is t mod (n+1), plus
// the white-leaf spokes with 2k = t mod (n+1). The T layout widens the last
// page's block by one to pick up the center-leaf edge (0, n+1).
std::vector<std::vector<std::pair<int, int>>> star_residue_pages(int n, bool total_graph) {
    std::vector<std::vector<std::pair<int, int>>> pages(n + 1);
    for (int t = 1; t <= n + 1; ++t) {
        auto& page = pages[t - 1];
        const int r = t % (n + 1);
        const int block_top = (total_graph && t == n + 1) ? n + 1 : n;
        for (int i = 0; i <= block_top; ++i)
            for (int j = i + 1; j <= block_top; ++j)
                if ((i + j) % (n + 1) == r) page.emplace_back(i, j);
        for (int k = 1; k <= n; ++k)
            if ((2 * k) % (n + 1) == r) page.emplace_back(k, 2 * n + 1 - k);
    }
    return pages;
}

BookEmbedding star_layout(int n, bool total_graph) {
    BookEmbedding emb;
    for (int i : star_spine_indices(n)) emb.spine.push_back(star_v_label(n, i));
    for (const auto& page : star_residue_pages(n, total_graph)) {
        std::vector<LabelEdge> edges;
        for (auto [i, j] : page)
            edges.push_back(make_label_edge(star_v_label(n, i), star_v_label(n, j)));
        emb.pages.push_back(std::move(edges));
    }
    if (total_graph) {
        for (int p = n + 2; p <= 2 * n; ++p)
            emb.pages.push_back({make_label_edge(star_v_label(n, 0), star_v_label(n, p))});
    }
    return emb;
}

}  // namespace

BookEmbedding embed_q_star(int n) {
    if (n < 1) throw std::invalid_argument("embed_q_star: n must be >= 1");
    BookEmbedding emb = star_layout(n, false);
    check_or_throw(transform(star_graph(n), TransformKind::Q), emb, "embed_q_star");
    return emb;
}

BookEmbedding embed_t_star(int n) {
    if (n < 2)
        throw std::invalid_argument(
            "embed_t_star: n must be >= 2 (the n = 1 case is a triangle; use the solver)");
    BookEmbedding emb = star_layout(n, true);
    check_or_throw(transform(star_graph(n), TransformKind::T), emb, "embed_t_star");
    return emb;
}

namespace {

// Per-copy spine blocks along H's spine: Red copies keep base_spine, Blue
// copies reverse it.
std::vector<Label> copy_spine(const std::vector<Label>& base_spine, const DispersableInput& h) {
    std::vector<Label> spine;
    spine.reserve(base_spine.size() * h.graph.vertex_count());
    for (const Label& u : h.embedding.spine) {
        const bool forward = h.coloring[h.graph.index_of(u)] == 0;
        if (forward) {
            for (const Label& x : base_spine) spine.push_back(Label::pair(x, u));
        } else {
            for (auto it = base_spine.rbegin(); it != base_spine.rend(); ++it)
                spine.push_back(Label::pair(*it, u));
        }
    }
    return spine;
}

std::vector<LabelEdge> bundle_edges(const std::vector<Label>& black_labels,
                                    const std::vector<LabelEdge>& h_page) {
    std::vector<LabelEdge> out;
    for (const auto& [uh, ug] : h_page)
        for (const Label& x : black_labels)
            out.push_back(make_label_edge(Label::pair(x, uh), Label::pair(x, ug)));
    return out;
}

}  // namespace

BookEmbedding embed_fsum_generic(const Graph& g, const DispersableInput& h,
                                 TransformKind kind, const BookEmbedding& emb_fg) {
    const Graph fg = transform(g, kind);
    {
        ValidationReport report = validate(fg, emb_fg);
        if (!report.ok)
            throw construction_error("embed_fsum_generic: base embedding invalid",
                                     std::move(report));
    }
    std::vector<Label> blacks;
    for (int v = 0; v < fg.vertex_count(); ++v)
        if (fg.tag(v) == Tag::Black) blacks.push_back(fg.label(v));

    BookEmbedding emb;
    emb.spine = copy_spine(emb_fg.spine, h);
    for (const auto& page : emb_fg.pages) {
        std::vector<LabelEdge> lifted;
        for (const Label& u : h.embedding.spine)
            for (const auto& [a, b] : page)
                lifted.push_back(make_label_edge(Label::pair(a, u), Label::pair(b, u)));
        emb.pages.push_back(std::move(lifted));
    }
    for (const auto& h_page : h.embedding.pages)
        emb.pages.push_back(bundle_edges(blacks, h_page));

    check_or_throw(f_sum(g, h.graph, kind), emb, "embed_fsum_generic");
    return emb;
}

BookEmbedding embed_star_q(int n, const DispersableInput& h, int e_page) {
    if (n < 1) throw std::invalid_argument("embed_star_q: n must be >= 1");
    const int dh = h.max_degree();
    if (dh > 0 && (e_page < 0 || e_page >= dh))
        throw std::invalid_argument("embed_star_q: chosen page out of range");

    std::vector<Label> base_spine;
    for (int i : star_spine_indices(n)) base_spine.push_back(star_v_label(n, i));
    const auto residue_pages = star_residue_pages(n, false);
    const std::vector<LabelEdge> chosen =
        dh > 0 ? h.embedding.pages[e_page] : std::vector<LabelEdge>{};

    BookEmbedding emb;
    emb.spine = copy_spine(base_spine, h);

    // pages 1..n+1: every copy's star page t, plus the chosen H-page's
    // bundles at leaf 2n+1-t (t <= n) or at the center (t = n+1)
    for (int t = 1; t <= n + 1; ++t) {
        std::vector<LabelEdge> page;
        for (const Label& u : h.embedding.spine)
            for (auto [i, j] : residue_pages[t - 1])
                page.push_back(make_label_edge(Label::pair(star_v_label(n, i), u),
                                               Label::pair(star_v_label(n, j), u)));
        const Label anchor = t <= n ? star_v_label(n, 2 * n + 1 - t) : star_v_label(n, 0);
        for (const auto& [uh, ug] : chosen)
            page.push_back(make_label_edge(Label::pair(anchor, uh), Label::pair(anchor, ug)));
        emb.pages.push_back(std::move(page));
    }

    std::vector<Label> blacks;
    blacks.push_back(star_v_label(n, 0));
    for (int i = n + 1; i <= 2 * n; ++i) blacks.push_back(star_v_label(n, i));
    for (int j = 0; j < dh; ++j) {
        if (j == e_page) continue;
        emb.pages.push_back(bundle_edges(blacks, h.embedding.pages[j]));
    }

    check_or_throw(f_sum(star_graph(n), h.graph, TransformKind::Q), emb, "embed_star_q");
    return emb;
}

namespace {

Label remap_core(const Label& l, const std::map<std::string, std::string>& name_map) {
    switch (l.kind()) {
        case Label::Kind::Plain: return Label::plain(name_map.at(l.name()));
        case Label::Kind::Edge:
            return Label::edge(remap_core(l.first(), name_map),
                               remap_core(l.second(), name_map));
        case Label::Kind::Pair:
            // copy-side labels belong to H and stay put
            return Label::pair(remap_core(l.first(), name_map), l.second());
    }
    return l;
}

}  // namespace

BookEmbedding embed_path_q(int n, const DispersableInput& h, int e1_page, int e2_page) {
    if (n < 2) throw std::invalid_argument("embed_path_q: n must be >= 2");
    const int dh = h.max_degree();

    if (n <= 3) {
        // a short path is a star; rebuild labels afterwards
        std::map<std::string, std::string> star_to_path =
            n == 2 ? std::map<std::string, std::string>{{"0", "1"}, {"1", "2"}}
                   : std::map<std::string, std::string>{{"0", "2"}, {"1", "1"}, {"2", "3"}};
        BookEmbedding star = embed_star_q(n - 1, h, e1_page);
        BookEmbedding emb;
        for (const Label& l : star.spine) emb.spine.push_back(remap_core(l, star_to_path));
        for (const auto& page : star.pages) {
            std::vector<LabelEdge> mapped;
            for (const auto& [a, b] : page)
                mapped.push_back(
                    make_label_edge(remap_core(a, star_to_path), remap_core(b, star_to_path)));
            emb.pages.push_back(std::move(mapped));
        }
        check_or_throw(f_sum(path_graph(n), h.graph, TransformKind::Q), emb, "embed_path_q");
        return emb;
    }

    if (dh > 0 && (e1_page < 0 || e1_page >= dh))
        throw std::invalid_argument("embed_path_q: first chosen page out of range");
    if (dh >= 2 && (e2_page < 0 || e2_page >= dh || e2_page == e1_page))
        throw std::invalid_argument("embed_path_q: second chosen page out of range");

    // blacks 1..n left to right, whites n+1..2n-1 in reverse: the white
    // vertex of edge (i, i+1) is 2n-i
    auto v_label = [n](int i) {
        if (i <= n) return Label::plain(std::to_string(i));
        return Label::edge(Label::plain(std::to_string(2 * n - i)),
                           Label::plain(std::to_string(2 * n - i + 1)));
    };
    std::vector<Label> base_spine;
    for (int i = 1; i <= 2 * n - 1; ++i) base_spine.push_back(v_label(i));

    const std::vector<LabelEdge> e1 =
        dh > 0 ? h.embedding.pages[e1_page] : std::vector<LabelEdge>{};
    const std::vector<LabelEdge> e2 =
        dh >= 2 ? h.embedding.pages[e2_page] : std::vector<LabelEdge>{};

    BookEmbedding emb;
    emb.spine = copy_spine(base_spine, h);

    auto lift_pairs = [&](const std::vector<std::pair<int, int>>& pairs) {
        std::vector<LabelEdge> out;
        for (const Label& u : h.embedding.spine)
            for (auto [i, j] : pairs)
                out.push_back(
                    make_label_edge(Label::pair(v_label(i), u), Label::pair(v_label(j), u)));
        return out;
    };
    auto black_bundles = [&](const std::vector<LabelEdge>& h_page) {
        std::vector<Label> blacks;
        for (int i = 1; i <= n; ++i) blacks.push_back(v_label(i));
        return bundle_edges(blacks, h_page);
    };

    std::vector<std::pair<int, int>> page1, page2, ww_odd, ww_even;
    for (int i = 1; i <= n - 1; ++i) page1.emplace_back(i, 2 * n - i);
    for (int j = 2; j <= n; ++j) page2.emplace_back(j, 2 * n + 1 - j);
    for (int i = n + 1; i <= 2 * n - 2; ++i)
        (i % 2 == 1 ? ww_odd : ww_even).emplace_back(i, i + 1);

    emb.pages.push_back(lift_pairs(page1));
    emb.pages.push_back(lift_pairs(page2));
    auto page3 = lift_pairs(ww_odd);
    auto b1 = black_bundles(e1);
    page3.insert(page3.end(), b1.begin(), b1.end());
    emb.pages.push_back(std::move(page3));
    auto page4 = lift_pairs(ww_even);
    auto b2 = black_bundles(e2);
    page4.insert(page4.end(), b2.begin(), b2.end());
    emb.pages.push_back(std::move(page4));
    for (int j = 0; j < dh; ++j) {
        if (j == e1_page || (dh >= 2 && j == e2_page)) continue;
        emb.pages.push_back(black_bundles(h.embedding.pages[j]));
    }

    check_or_throw(f_sum(path_graph(n), h.graph, TransformKind::Q), emb, "embed_path_q");
    return emb;
}

BookEmbedding embed_cycle_q_cycle(int p, int q) {
    if (p < 3) throw std::invalid_argument("embed_cycle_q_cycle: p must be >= 3");
    if (q < 3) throw std::invalid_argument("embed_cycle_q_cycle: q must be >= 3");
    if (q % 2 != 0)
        throw std::invalid_argument(
            "embed_cycle_q_cycle: odd q is not supported (use the experiment harness)");

    const DispersableInput h = DispersableInput::make(cycle_graph(q));

    // blacks 1..p around the cycle; whites labelled from the (p-1, p) edge
    // backwards, so the white vertex of edge (i, i+1) is 2p-i and the white
    // vertex of the closing edge (p, 1) is 2p
    auto v_label = [p](int i) {
        if (i <= p) return Label::plain(std::to_string(i));
        if (i < 2 * p)
            return Label::edge(Label::plain(std::to_string(2 * p - i)),
                               Label::plain(std::to_string(2 * p - i + 1)));
        return Label::edge(Label::plain("1"), Label::plain(std::to_string(p)));
    };
    std::vector<Label> base_spine;
    for (int i = 1; i <= 2 * p; ++i) base_spine.push_back(v_label(i));

    BookEmbedding emb;
    emb.spine = copy_spine(base_spine, h);

    auto lift_pairs = [&](const std::vector<std::pair<int, int>>& pairs) {
        std::vector<LabelEdge> out;
        for (const Label& u : h.embedding.spine)
            for (auto [i, j] : pairs)
                out.push_back(
                    make_label_edge(Label::pair(v_label(i), u), Label::pair(v_label(j), u)));
        return out;
    };

    std::vector<std::pair<int, int>> page1, page2, page3, page4, page5;
    for (int i = 1; i <= p - 1; ++i) page1.emplace_back(i, 2 * p - i);
    for (int i = 1; i <= p - 1; ++i) page2.emplace_back(i + 1, 2 * p - i);
    page2.emplace_back(1, 2 * p);

    page3.emplace_back(p, 2 * p);
    page4.emplace_back(p + 1, 2 * p);
    page5.emplace_back(2 * p - 1, 2 * p);
    if (p % 2 == 0) {
        for (int i = p + 1; i <= 2 * p - 3; i += 2) page3.emplace_back(i, i + 1);  // odd i
        for (int i = p + 2; i <= 2 * p - 2; i += 2) page4.emplace_back(i, i + 1);  // even i
    } else {
        for (int i = p + 1; i <= 2 * p - 2; i += 2) page3.emplace_back(i, i + 1);  // even i
        for (int i = p + 2; i <= 2 * p - 3; i += 2) page4.emplace_back(i, i + 1);  // odd i
    }

    std::vector<Label> blacks;
    for (int i = 1; i <= p; ++i) blacks.push_back(v_label(i));

    emb.pages.push_back(lift_pairs(page1));
    emb.pages.push_back(lift_pairs(page2));
    emb.pages.push_back(lift_pairs(page3));
    auto p4 = lift_pairs(page4);
    auto b1 = bundle_edges(blacks, h.embedding.pages[0]);
    p4.insert(p4.end(), b1.begin(), b1.end());
    emb.pages.push_back(std::move(p4));
    auto p5 = lift_pairs(page5);
    auto b2 = bundle_edges(blacks, h.embedding.pages[1]);
    p5.insert(p5.end(), b2.begin(), b2.end());
    emb.pages.push_back(std::move(p5));

    check_or_throw(f_sum(cycle_graph(p), cycle_graph(q), TransformKind::Q), emb,
                   "embed_cycle_q_cycle");
    return emb;
}

}  // namespace mbook
