#pragma once

#include <unordered_map>

namespace detskein {

// Disjoint sets over sparse keys; a key is its own root until united.
template <typename T>
class UnionFind {
public:
    T find(T x) {
        auto it = parent_.find(x);
        if (it == parent_.end() || it->second == x) return x;
        T root = find(it->second);
        parent_[x] = root;
        return root;
    }

    // The smaller root survives so results do not depend on call order.
    void unite(T a, T b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;
        parent_.try_emplace(a, a);
    }

private:
    std::unordered_map<T, T> parent_;
};

}  // namespace detskein
