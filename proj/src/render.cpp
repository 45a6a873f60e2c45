#include "oncross/render.hpp"

#include <algorithm>
#include <sstream>

namespace oncross {

namespace {

std::string pad_left(const std::string& s, size_t width) {
    return s.size() >= width ? s : std::string(width - s.size(), ' ') + s;
}

}  // namespace

std::string render_diagram(const OrderedTree& t) {
    const int n = t.n();
    const size_t cell = std::to_string(n).size();
    const size_t level_w = std::to_string(std::max(n - 1, 1)).size();
    std::ostringstream os;
    os << std::string(level_w + 3, ' ');
    for (int x = 1; x <= n; ++x) {
        if (x > 1) os << ' ';
        os << pad_left(std::to_string(x), cell);
    }
    os << '\n';
    for (int q = 0; q < n; ++q) {
        os << pad_left(std::to_string(q), level_w) << " | ";
        for (int x = 1; x <= n; ++x) {
            if (x > 1) os << ' ';
            const char* mark = t.level(x) == q ? "*" : (t.level(x) < q ? "|" : ".");
            os << pad_left(mark, cell);
        }
        os << '\n';
    }
    return os.str();
}

std::string render_dot(const OrderedTree& t) {
    std::ostringstream os;
    os << "digraph ordered_tree {\n  node [shape=circle];\n";
    for (int v = 1; v <= t.n(); ++v) os << "  " << v << ";\n";
    for (int v = 1; v <= t.n(); ++v) {
        if (t.son(v) != 0) os << "  " << v << " -> " << t.son(v) << " [label=\"s\"];\n";
        if (t.daughter(v) != 0) os << "  " << v << " -> " << t.daughter(v) << " [label=\"d\"];\n";
    }
    os << "}\n";
    return os.str();
}

std::string render_arrows(const Transformation& t) {
    std::ostringstream os;
    for (int x = 1; x <= t.n(); ++x) os << x << " -> " << t.apply(x) << '\n';
    return os.str();
}

std::string render_arrows(const CrossSection& s) {
    std::ostringstream os;
    for (size_t i = 0; i < s.elements.size(); ++i) {
        if (i) os << '\n';
        os << render_arrows(s.elements[i]);
    }
    return os.str();
}

namespace {

std::pair<std::string, std::string> two_row(const Transformation& t) {
    ConvexPartition k = t.convex_kernel();
    std::string blocks = "(", images = "(";
    for (int i = 0; i < k.block_count(); ++i) {
        auto [lo, hi] = k.block(i);
        std::string token = " {";
        for (int x = lo; x <= hi; ++x) token += std::to_string(x);
        token += "}";
        std::string image = std::to_string(t.apply(lo));
        blocks += token;
        // Center the image under its block token.
        size_t pad = token.size() - image.size();
        images += std::string(pad / 2 + pad % 2, ' ') + image + std::string(pad / 2, ' ');
    }
    blocks += " )";
    images += " )";
    return {blocks, images};
}

}  // namespace

std::string phi_table_text(const PhiSemigroup& sg) {
    std::ostringstream os;
    for (const auto& part : ConvexPartition::all(sg.n())) {
        const Transformation& t = sg.at(part);
        auto [blocks, images] = two_row(t);
        os << "K = " << part << '\n';
        os << "    " << blocks << '\n';
        os << "    " << images << '\n';
    }
    return os.str();
}

json phi_table_json(const PhiSemigroup& sg) {
    json rows = json::array();
    for (const auto& part : ConvexPartition::all(sg.n())) {
        const Transformation& t = sg.at(part);
        json blocks = json::array();
        std::vector<int> images;
        for (int i = 0; i < part.block_count(); ++i) {
            auto [lo, hi] = part.block(i);
            json b = json::array();
            for (int x = lo; x <= hi; ++x) b.push_back(x);
            blocks.push_back(b);
            images.push_back(t.apply(lo));
        }
        rows.push_back(json{{"partition", partition_to_string(part)},
                            {"blocks", blocks},
                            {"block_images", images},
                            {"transformation", to_json(t)}});
    }
    return json{{"n", sg.n()}, {"tree", to_json(sg.tree())}, {"rows", rows}};
}

std::string count_table_text(const std::vector<CountRow>& rows) {
    std::ostringstream os;
    os << "  n |    |O_n| | parts | dec.trees | R-sections | respectful | L-sections | "
          "two-fixed R | 2*respectful(n-1)\n";
    for (const auto& r : rows) {
        os << pad_left(std::to_string(r.n), 3) << " | " << pad_left(std::to_string(r.on_size), 8)
           << " | " << pad_left(std::to_string(r.convex_partitions), 5) << " | "
           << pad_left(std::to_string(r.decreasing_trees), 9) << " | "
           << pad_left(std::to_string(r.r_cross_sections), 10) << " | "
           << pad_left(std::to_string(r.respectful_trees), 10) << " | "
           << pad_left(r.l_cross_sections >= 0 ? std::to_string(r.l_cross_sections) : "-", 10)
           << " | " << pad_left(std::to_string(r.two_fixed_r), 11) << " | "
           << pad_left(std::to_string(r.dual_prediction), 17) << '\n';
    }
    return os.str();
}

}  // namespace oncross
