#pragma once
// Sparse Gaussian elimination over Q with a caller-chosen pivot order.

#include "core.hpp"

#include <functional>
#include <map>
#include <vector>

namespace gmod {

// Rows are sparse maps Key -> Q. The pivot of a row is its first key under
// Cmp. By default pivot rows are kept fully reduced against each other, so
// after all inserts each pivot row reads "pivot + (non-pivot terms) = 0".
// With reduced = false only echelon form is kept, which is enough for rank
// and membership and much cheaper.
template <class Key, class Cmp = std::less<Key>>
class SparseRref {
public:
    using Row = std::map<Key, Q, Cmp>;

    explicit SparseRref(Cmp cmp = Cmp(), bool reduced = true) : cmp_(cmp), reduced_(reduced), pivots_(cmp) {}

    // reduce a row against the current pivots
    Row reduce(Row r) const {
        // eliminate in pivot order; reductions only introduce non-pivot keys
        // or keys that are later in order, so one forward sweep suffices.
        for (auto it = r.begin(); it != r.end();) {
            auto pv = pivots_.find(it->first);
            if (pv == pivots_.end()) { ++it; continue; }
            Q c = it->second;
            Key k = it->first;
            for (auto& [key, v] : pv->second) {
                auto [jt, fresh] = r.try_emplace(key, -c * v);
                if (!fresh) {
                    jt->second -= c * v;
                    if (jt->second == 0) r.erase(jt);
                }
            }
            it = r.upper_bound(k);
        }
        return r;
    }

    // returns true when the row was independent of the previous ones
    bool add(Row r) {
        r = reduce(std::move(r));
        if (r.empty()) return false;
        Key p = r.begin()->first;
        Q c = r.begin()->second;
        for (auto& [k, v] : r) v /= c;
        if (!reduced_) {
            pivots_.emplace(p, std::move(r));
            return true;
        }
        for (auto& [q, row] : pivots_) {
            auto it = row.find(p);
            if (it == row.end()) continue;
            Q cc = it->second;
            for (auto& [k, v] : r) {
                auto [jt, fresh] = row.try_emplace(k, -cc * v);
                if (!fresh) {
                    jt->second -= cc * v;
                    if (jt->second == 0) row.erase(jt);
                }
            }
        }
        pivots_.emplace(p, std::move(r));
        return true;
    }

    std::size_t rank() const { return pivots_.size(); }
    bool is_pivot(const Key& k) const { return pivots_.count(k) > 0; }
    const std::map<Key, Row, Cmp>& pivots() const { return pivots_; }

private:
    Cmp cmp_;
    bool reduced_ = true;
    std::map<Key, Row, Cmp> pivots_;
};

}  // namespace gmod
