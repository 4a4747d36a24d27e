#pragma once

#include <utility>
#include <vector>

#include "dqp/double_quasi_poset.hpp"

namespace dqp {

// Diagram with weakly increasing row lengths, rows indexed in drawing order
// (shortest row first). Cells are (row, column) pairs listed in reading
// order, which also fixes the 0-based labels used by the derived structures.
class YoungDiagram {
public:
    explicit YoungDiagram(std::vector<int> rows);

    const std::vector<int>& rows() const { return rows_; }
    int cell_count() const { return static_cast<int>(cells_.size()); }
    const std::vector<std::pair<int, int>>& cells() const { return cells_; }

    // Componentwise order of the plane embedding: cell a below cell b iff a
    // sits weakly below (later drawn row) and weakly left of b.
    bool cell_leq(int a, int b) const;

private:
    std::vector<int> rows_;
    std::vector<std::pair<int, int>> cells_;
};

// First relation: componentwise cell order. Second relation: the given
// preorder on cells (reading-order labels), or the reading-order chain.
DoubleQuasiPoset q_lambda(const YoungDiagram& shape, const Preorder& second);
DoubleQuasiPoset q_lambda(const YoungDiagram& shape);
DoubleQuasiPoset p_lambda(const YoungDiagram& shape);

// Trivial first relation; second relation the total preorder with blocks of
// the given sizes, lower blocks first.
DoubleQuasiPoset q_of_composition(const std::vector<int>& composition);

enum class FillMode { strict, weak };

// Number of fillings of the shape by the elements of q, each used once, with
// values (strictly/weakly) increasing toward componentwise-larger cells in
// q's second relation. Direct backtracking over fillings.
long long tableau_oracle(const YoungDiagram& shape, const DoubleQuasiPoset& q, FillMode mode);

// Number of fillings by letters 1..k, letter i used content[i-1] times,
// weakly increasing toward componentwise-larger cells.
long long content_filling_count(const YoungDiagram& shape, const std::vector<int>& content);

} // namespace dqp
