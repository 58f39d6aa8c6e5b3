#pragma once

// Two-dimensional layout of kernel-form judgments on an integer grid.
//
// Each node draws a short run on its row and hands the rest of the row to its
// child. A conditional keeps its consequent on its own row and attaches the
// condition below, on the first row after the consequent's subtree, joined by
// a vertical stroke. The diagram therefore has 1 + #Cond rows.
//
//   content (~B -> A):   ──┬── A
//                          └─┬─ B

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ast.hpp"
#include "modern.hpp"

namespace begriff {

enum class GlyphKind { STROKE, NEG_TICK, CONCAVITY, JUDGE_BAR, BRANCH_CORNER, VERTICAL };

// STROKE covers cells [col_start, col_end) of one row. VERTICAL sits in
// column col_start and covers rows [row, row_end); its top cell is the
// branch point on the parent's line. CONCAVITY covers [col_start, col_end)
// and carries its letters. The rest occupy a single cell.
struct GlyphRun {
    GlyphKind kind;
    int row = 0;
    int col_start = 0;
    int col_end = 0;
    int row_end = 0;
    std::string letters;
};

struct DiagramNode {
    enum class Kind { Root, Atom, Not, Cond, Forall };

    Kind kind = Kind::Root;
    int row = 0;
    int col_start = 0;  // first cell drawn by this node
    int col_end = 0;    // one past its last cell; the child starts here
    std::vector<GlyphRun> glyphs;
    std::optional<std::string> leaf_label;  // atoms only, at col_end + 1
    std::vector<std::size_t> children;      // Cond: consequent, then condition
};

struct Diagram {
    std::vector<DiagramNode> nodes;  // nodes[0] is the root stroke
    int rows = 0;
    int columns = 0;  // including leaf labels
    bool asserted = false;

    // All glyphs in node pre-order.
    std::vector<GlyphRun> glyphs() const {
        std::vector<GlyphRun> out;
        for (const auto& n : nodes) out.insert(out.end(), n.glyphs.begin(), n.glyphs.end());
        return out;
    }

    std::size_t count(GlyphKind kind) const {
        std::size_t c = 0;
        for (const auto& g : glyphs())
            if (g.kind == kind) ++c;
        return c;
    }
};

// Letters over a concavity: "x" or "m,k".
inline std::string concavity_letters(const std::vector<std::string>& vars) {
    std::string s;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (i > 0) s += ',';
        s += vars[i];
    }
    return s;
}

namespace detail {

class Layouter {
public:
    Diagram run(const Judgment& j) {
        d_.asserted = j.asserted;
        DiagramNode root;
        root.kind = DiagramNode::Kind::Root;
        int col = 0;
        if (j.asserted) {
            root.glyphs.push_back({GlyphKind::JUDGE_BAR, 0, 0, 1, 1, {}});
            col = 1;
        }
        root.col_start = 0;
        root.glyphs.push_back({GlyphKind::STROKE, 0, col, col + 1, 1, {}});
        root.col_end = col + 1;
        d_.nodes.push_back(std::move(root));
        int rows = 0;
        std::size_t child = place(j.body, 0, d_.nodes[0].col_end, rows);
        d_.nodes[0].children.push_back(child);
        d_.rows = rows;
        return std::move(d_);
    }

private:
    // Lays f out starting at (row, col); rows receives the rows used.
    std::size_t place(const Formula& f, int row, int col, int& rows) {
        std::size_t index = d_.nodes.size();
        d_.nodes.push_back({});
        DiagramNode node;
        node.row = row;
        node.col_start = col;
        std::vector<std::size_t> kids;
        rows = 1;

        if (const auto* a = as<AtomF>(f)) {
            node.kind = DiagramNode::Kind::Atom;
            node.glyphs.push_back({GlyphKind::STROKE, row, col, col + 1, row + 1, {}});
            node.col_end = col + 1;
            node.leaf_label = print_atom(a->atom);
            d_.columns = std::max(d_.columns, node.col_end + 1 + static_cast<int>(node.leaf_label->size()));
        } else if (const auto* n = as<Not>(f)) {
            node.kind = DiagramNode::Kind::Not;
            node.glyphs.push_back({GlyphKind::STROKE, row, col, col + 1, row + 1, {}});
            node.glyphs.push_back({GlyphKind::NEG_TICK, row, col + 1, col + 2, row + 1, {}});
            node.col_end = col + 2;
            kids.push_back(place(n->body, row, node.col_end, rows));
        } else if (const auto* c = as<Cond>(f)) {
            node.kind = DiagramNode::Kind::Cond;
            const int anchor = col + 1;
            node.col_end = col + 3;
            int consequent_rows = 0;
            kids.push_back(place(c->consequent, row, node.col_end, consequent_rows));
            const int corner_row = row + consequent_rows;
            int condition_rows = 0;
            kids.push_back(place(c->condition, corner_row, anchor + 1, condition_rows));
            rows = consequent_rows + condition_rows;
            node.glyphs.push_back({GlyphKind::STROKE, row, col, col + 1, row + 1, {}});
            node.glyphs.push_back({GlyphKind::VERTICAL, row, anchor, anchor + 1, corner_row, {}});
            node.glyphs.push_back({GlyphKind::STROKE, row, anchor + 1, anchor + 2, row + 1, {}});
            node.glyphs.push_back({GlyphKind::BRANCH_CORNER, corner_row, anchor, anchor + 1, corner_row + 1, {}});
        } else if (const auto* q = as<Quant>(f)) {
            if (q->block.kind != QuantKind::FORALL)
                throw KernelError("existential block in diagram input; desugar first");
            if (q->block.guard) throw KernelError("guarded block in diagram input; desugar first");
            node.kind = DiagramNode::Kind::Forall;
            std::string letters = concavity_letters(q->block.vars);
            const int width = static_cast<int>(letters.size()) + 2;
            node.glyphs.push_back({GlyphKind::STROKE, row, col, col + 1, row + 1, {}});
            node.glyphs.push_back({GlyphKind::CONCAVITY, row, col + 1, col + 1 + width, row + 1, letters});
            node.col_end = col + 1 + width;
            kids.push_back(place(q->body, row, node.col_end, rows));
        } else {
            throw KernelError(std::string(is<And>(f) ? "conjunction" : "disjunction") +
                              " in diagram input; desugar first");
        }
        d_.columns = std::max(d_.columns, node.col_end);
        node.children = std::move(kids);
        d_.nodes[index] = std::move(node);
        return index;
    }

    Diagram d_;
};

}  // namespace detail

// Throws KernelError unless j.body uses only atoms, Not, Cond and guardless
// forall blocks (several letters per block allowed).
inline Diagram layout(const Judgment& j) { return detail::Layouter{}.run(j); }

}  // namespace begriff
