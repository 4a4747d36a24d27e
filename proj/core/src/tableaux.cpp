#include "dqp/tableaux.hpp"

#include <numeric>

namespace dqp {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
    for (size_t r = 0; r < rows_.size(); ++r) {
        if (rows_[r] <= 0)
            throw ParseError("row lengths must be positive");
        if (r > 0 && rows_[r] < rows_[r - 1])
            throw ParseError("row lengths must be weakly increasing");
        for (int c = 0; c < rows_[r]; ++c)
            cells_.emplace_back(static_cast<int>(r), c);
    }
}

bool YoungDiagram::cell_leq(int a, int b) const {
    // The plane embedding has the vertical axis pointing up while rows are
    // drawn top-down, so larger cells sit up and to the right: the hook with
    // rows (1,2) is a V, not a chain, and has two standard fillings.
    const auto& [ra, ca] = cells_[static_cast<size_t>(a)];
    const auto& [rb, cb] = cells_[static_cast<size_t>(b)];
    return ra >= rb && ca <= cb;
}

DoubleQuasiPoset q_lambda(const YoungDiagram& shape, const Preorder& second) {
    const int n = shape.cell_count();
    if (second.size() != n)
        throw std::invalid_argument("second relation must live on the cells");
    std::vector<uint32_t> rows(static_cast<size_t>(n), 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (shape.cell_leq(a, b))
                rows[static_cast<size_t>(a)] |= 1u << b;
    return {Preorder::from_rows(n, std::move(rows)), second};
}

DoubleQuasiPoset q_lambda(const YoungDiagram& shape) {
    return q_lambda(shape, Preorder::chain(shape.cell_count()));
}

DoubleQuasiPoset p_lambda(const YoungDiagram& shape) {
    return q_lambda(shape, Preorder::chain(shape.cell_count()));
}

DoubleQuasiPoset q_of_composition(const std::vector<int>& composition) {
    int n = 0;
    for (int part : composition) {
        if (part <= 0)
            throw ParseError("composition parts must be positive");
        n += part;
    }
    std::vector<int> block(static_cast<size_t>(n));
    int index = 0;
    for (size_t b = 0; b < composition.size(); ++b)
        for (int k = 0; k < composition[b]; ++k)
            block[static_cast<size_t>(index++)] = static_cast<int>(b);
    std::vector<uint32_t> rows(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (block[static_cast<size_t>(i)] <= block[static_cast<size_t>(j)])
                rows[static_cast<size_t>(i)] |= 1u << j;
    return {Preorder::discrete(n), Preorder::from_rows(n, std::move(rows))};
}

namespace {

// Fill cells in reading order with distinct elements of q; compare the new
// value against every placed comparable cell.
void fill_distinct(const YoungDiagram& shape, const DoubleQuasiPoset& q, FillMode mode,
                   std::vector<int>& value, uint32_t used, int cell, long long& count) {
    const int n = shape.cell_count();
    if (cell == n) {
        ++count;
        return;
    }
    for (int v = 0; v < n; ++v) {
        if (used >> v & 1u)
            continue;
        bool ok = true;
        for (int prev = 0; prev < cell && ok; ++prev) {
            const int pv = value[static_cast<size_t>(prev)];
            if (shape.cell_leq(prev, cell))
                ok = mode == FillMode::strict ? q.le2().lt(pv, v) : q.le2().leq(pv, v);
            if (ok && shape.cell_leq(cell, prev))
                ok = mode == FillMode::strict ? q.le2().lt(v, pv) : q.le2().leq(v, pv);
        }
        if (!ok)
            continue;
        value[static_cast<size_t>(cell)] = v;
        fill_distinct(shape, q, mode, value, used | (1u << v), cell + 1, count);
    }
}

void fill_content(const YoungDiagram& shape, std::vector<int>& remaining, std::vector<int>& value,
                  int cell, long long& count) {
    const int n = shape.cell_count();
    if (cell == n) {
        ++count;
        return;
    }
    for (size_t letter = 0; letter < remaining.size(); ++letter) {
        if (remaining[letter] == 0)
            continue;
        const int v = static_cast<int>(letter);
        bool ok = true;
        for (int prev = 0; prev < cell && ok; ++prev) {
            const int pv = value[static_cast<size_t>(prev)];
            if (shape.cell_leq(prev, cell))
                ok = pv <= v;
            if (ok && shape.cell_leq(cell, prev))
                ok = v <= pv;
        }
        if (!ok)
            continue;
        value[static_cast<size_t>(cell)] = v;
        --remaining[letter];
        fill_content(shape, remaining, value, cell + 1, count);
        ++remaining[letter];
    }
}

} // namespace

long long tableau_oracle(const YoungDiagram& shape, const DoubleQuasiPoset& q, FillMode mode) {
    if (shape.cell_count() != q.size())
        throw std::invalid_argument("shape size must match the ground set");
    long long count = 0;
    std::vector<int> value(static_cast<size_t>(shape.cell_count()), -1);
    fill_distinct(shape, q, mode, value, 0, 0, count);
    return count;
}

long long content_filling_count(const YoungDiagram& shape, const std::vector<int>& content) {
    const int total = std::accumulate(content.begin(), content.end(), 0);
    if (total != shape.cell_count())
        throw std::invalid_argument("content must sum to the number of cells");
    for (int part : content)
        if (part < 0)
            throw std::invalid_argument("content entries must be non-negative");
    long long count = 0;
    std::vector<int> remaining = content;
    std::vector<int> value(static_cast<size_t>(shape.cell_count()), -1);
    fill_content(shape, remaining, value, 0, count);
    return count;
}

} // namespace dqp
