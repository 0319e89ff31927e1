#include "pantsgraph/free_group.hpp"

#include <algorithm>

namespace pantsgraph::free_group {

Word inverse(std::span<const int> w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = -x;
    return out;
}

void append_reduced(Word& head, std::span<const int> tail) {
    for (int x : tail) {
        if (!head.empty() && head.back() == -x)
            head.pop_back();
        else
            head.push_back(x);
    }
}

Word reduce(std::span<const int> w) {
    Word out;
    out.reserve(w.size());
    append_reduced(out, w);
    return out;
}

Word cyclic_reduce(std::span<const int> w) {
    Word r = reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo] == -r[hi - 1]) {
        ++lo;
        --hi;
    }
    return Word(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
}

Word substitute(std::span<const int> w, const std::vector<Word>& images) {
    Word out;
    for (int x : w) {
        const Word& img = images[static_cast<std::size_t>(x > 0 ? x : -x)];
        if (x > 0) {
            append_reduced(out, img);
        } else {
            for (auto it = img.rbegin(); it != img.rend(); ++it) {
                const int y = -*it;
                if (!out.empty() && out.back() == -y)
                    out.pop_back();
                else
                    out.push_back(y);
            }
        }
    }
    return out;
}

}  // namespace pantsgraph::free_group
