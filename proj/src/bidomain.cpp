#include "mcs/bidomain.hpp"

#include <algorithm>
#include <map>

namespace mcs {

BidomainList::BidomainList(const Graph& g0, const Graph& g1)
    : g0_(&g0),
      g1_(&g1),
      multiway_(g0.directed() || g0.has_edge_labels() || g1.has_edge_labels()) {
    std::map<Label, std::pair<std::vector<int>, std::vector<int>>> classes;
    for (int v = 0; v < g0.n(); ++v) classes[g0.vertex_label(v)].first.push_back(v);
    for (int v = 0; v < g1.n(); ++v) classes[g1.vertex_label(v)].second.push_back(v);
    for (auto& [label, sides] : classes) {
        auto& [ls, rs] = sides;
        if (ls.empty() || rs.empty()) continue;
        Bidomain e;
        e.left_start = static_cast<int>(left_.size());
        e.right_start = static_cast<int>(right_.size());
        e.left_len = static_cast<int>(ls.size());
        e.right_len = static_cast<int>(rs.size());
        e.adjacent = false;
        left_.insert(left_.end(), ls.begin(), ls.end());
        right_.insert(right_.end(), rs.begin(), rs.end());
        entries_.push_back(e);
    }
}

int BidomainList::over_estimate() const {
    int bound = 0;
    for (const Bidomain& e : entries_) bound += std::min(e.left_len, e.right_len);
    return bound;
}

int BidomainList::select_bidomain(bool connected, bool solution_nonempty) const {
    int best = -1;
    int best_size = 0;
    int best_maxdeg = -1;
    for (int i = 0; i < entry_count(); ++i) {
        const Bidomain& e = entries_[static_cast<std::size_t>(i)];
        if (connected && solution_nonempty && !e.adjacent) continue;
        const int size = std::max(e.left_len, e.right_len);
        if (best >= 0 && size > best_size) continue;
        int maxdeg = -1;
        for (int j = 0; j < e.left_len; ++j)
            maxdeg = std::max(maxdeg, g0_->degree(left_[static_cast<std::size_t>(e.left_start + j)]));
        if (best < 0 || size < best_size || maxdeg > best_maxdeg) {
            best = i;
            best_size = size;
            best_maxdeg = maxdeg;
        }
    }
    return best;
}

int BidomainList::find_entry_left(int v) const {
    for (int i = 0; i < entry_count(); ++i)
        for (int x : left_of(i))
            if (x == v) return i;
    return -1;
}

int BidomainList::find_entry_right(int v) const {
    for (int i = 0; i < entry_count(); ++i)
        for (int x : right_of(i))
            if (x == v) return i;
    return -1;
}

void BidomainList::detach_impl(std::vector<int>& arr, bool right_side, int entry_idx, int v) {
    Bidomain& e = entries_[static_cast<std::size_t>(entry_idx)];
    const int start = right_side ? e.right_start : e.left_start;
    int& len = right_side ? e.right_len : e.left_len;
    int pos = -1;
    for (int j = 0; j < len; ++j) {
        if (arr[static_cast<std::size_t>(start + j)] == v) {
            pos = j;
            break;
        }
    }
    if (pos < 0)
        throw InternalError("detach: vertex " + std::to_string(v) + " not in entry " +
                            std::to_string(entry_idx));
    journal_.push_back({right_side ? Op::DetachRight : Op::DetachLeft, entry_idx, pos, 0, 0});
    std::swap(arr[static_cast<std::size_t>(start + pos)], arr[static_cast<std::size_t>(start + len - 1)]);
    --len;
}

void BidomainList::detach_left(int entry_idx, int v) {
    begin_frame();
    detach_impl(left_, false, entry_idx, v);
}

void BidomainList::detach_right(int entry_idx, int v) {
    begin_frame();
    detach_impl(right_, true, entry_idx, v);
}

void BidomainList::discard_impl(int entry_idx) {
    journal_.push_back({Op::Discard, entry_idx, 0, 0, 0});
    saved_entries_.push_back(entries_[static_cast<std::size_t>(entry_idx)]);
    entries_[static_cast<std::size_t>(entry_idx)] = entries_.back();
    entries_.pop_back();
}

void BidomainList::remove_left_vertex(int v) {
    const int idx = find_entry_left(v);
    if (idx < 0)
        throw InternalError("remove_left_vertex: vertex " + std::to_string(v) +
                            " not in any entry");
    remove_left_vertex_at(idx, v);
}

void BidomainList::remove_left_vertex_at(int entry_idx, int v) {
    begin_frame();
    detach_impl(left_, false, entry_idx, v);
    if (entries_[static_cast<std::size_t>(entry_idx)].left_len == 0) discard_impl(entry_idx);
}

void BidomainList::divide(int p, int q) {
    begin_frame();
    Rec rec{Op::Divide, 0, 0, static_cast<std::uint32_t>(entries_.size()), 0};
    saved_entries_.insert(saved_entries_.end(), entries_.begin(), entries_.end());
    for (const Bidomain& e : entries_) {
        if (e.left_len) {
            saved_segs_.push_back({e.left_start, e.left_len, false});
            saved_vals_.insert(saved_vals_.end(), left_.begin() + e.left_start,
                               left_.begin() + e.left_start + e.left_len);
            ++rec.n_segs;
        }
        if (e.right_len) {
            saved_segs_.push_back({e.right_start, e.right_len, true});
            saved_vals_.insert(saved_vals_.end(), right_.begin() + e.right_start,
                               right_.begin() + e.right_start + e.right_len);
            ++rec.n_segs;
        }
    }
    journal_.push_back(rec);

    const Graph& g0 = *g0_;
    const Graph& g1 = *g1_;
    auto left_key = [&g0, p](int x) -> std::uint32_t {
        std::uint32_t out = g0.cell(p, x);
        return g0.directed() ? (out << 16) | g0.cell(x, p) : out;
    };
    auto right_key = [&g1, q](int y) -> std::uint32_t {
        std::uint32_t out = g1.cell(q, y);
        return g1.directed() ? (out << 16) | g1.cell(y, q) : out;
    };
    // Moves nonzero-key members to the front of the slice, returns their count.
    auto split = [](std::vector<int>& arr, int start, int len, auto&& key) {
        int k = 0;
        for (int j = 0; j < len; ++j) {
            if (key(arr[static_cast<std::size_t>(start + j)]) != 0)
                std::swap(arr[static_cast<std::size_t>(start + k++)],
                          arr[static_cast<std::size_t>(start + j)]);
        }
        return k;
    };

    scratch_.clear();
    const std::size_t old_begin = saved_entries_.size() - rec.n_entries;
    for (std::size_t ei = old_begin; ei < saved_entries_.size(); ++ei) {
        const Bidomain e = saved_entries_[ei];
        const int ll1 = split(left_, e.left_start, e.left_len, left_key);
        const int rl1 = split(right_, e.right_start, e.right_len, right_key);
        const int ll0 = e.left_len - ll1;
        const int rl0 = e.right_len - rl1;
        if (ll0 && rl0)
            scratch_.push_back({e.left_start + ll1, e.right_start + rl1, ll0, rl0, e.adjacent});
        if (!multiway_) {
            if (ll1 && rl1) scratch_.push_back({e.left_start, e.right_start, ll1, rl1, true});
        } else if (ll1 && rl1) {
            // Directed and/or edge-labelled: group the adjacent members by
            // their full pattern and pair up equal-pattern runs.
            auto lb = left_.begin() + e.left_start;
            auto rb = right_.begin() + e.right_start;
            std::sort(lb, lb + ll1, [&](int a, int b) { return left_key(a) < left_key(b); });
            std::sort(rb, rb + rl1, [&](int a, int b) { return right_key(a) < right_key(b); });
            int li = 0, ri = 0;
            while (li < ll1 && ri < rl1) {
                const std::uint32_t lk = left_key(left_[static_cast<std::size_t>(e.left_start + li)]);
                const std::uint32_t rk = right_key(right_[static_cast<std::size_t>(e.right_start + ri)]);
                if (lk < rk) {
                    ++li;
                } else if (lk > rk) {
                    ++ri;
                } else {
                    const int l0 = li, r0 = ri;
                    while (li < ll1 &&
                           left_key(left_[static_cast<std::size_t>(e.left_start + li)]) == lk)
                        ++li;
                    while (ri < rl1 &&
                           right_key(right_[static_cast<std::size_t>(e.right_start + ri)]) == lk)
                        ++ri;
                    scratch_.push_back(
                        {e.left_start + l0, e.right_start + r0, li - l0, ri - r0, true});
                }
            }
        }
    }
    entries_.swap(scratch_);
}

void BidomainList::undo_rec(const Rec& rec) {
    switch (rec.op) {
        case Op::DetachLeft: {
            Bidomain& e = entries_[static_cast<std::size_t>(rec.entry)];
            ++e.left_len;
            std::swap(left_[static_cast<std::size_t>(e.left_start + rec.pos)],
                      left_[static_cast<std::size_t>(e.left_start + e.left_len - 1)]);
            break;
        }
        case Op::DetachRight: {
            Bidomain& e = entries_[static_cast<std::size_t>(rec.entry)];
            ++e.right_len;
            std::swap(right_[static_cast<std::size_t>(e.right_start + rec.pos)],
                      right_[static_cast<std::size_t>(e.right_start + e.right_len - 1)]);
            break;
        }
        case Op::Discard: {
            if (rec.entry == entry_count()) {
                entries_.push_back(saved_entries_.back());
            } else {
                Bidomain displaced = entries_[static_cast<std::size_t>(rec.entry)];
                entries_.push_back(displaced);
                entries_[static_cast<std::size_t>(rec.entry)] = saved_entries_.back();
            }
            saved_entries_.pop_back();
            break;
        }
        case Op::Divide: {
            for (std::uint32_t s = 0; s < rec.n_segs; ++s) {
                const Seg seg = saved_segs_.back();
                saved_segs_.pop_back();
                auto src = saved_vals_.end() - seg.len;
                std::vector<int>& arr = seg.right ? right_ : left_;
                std::copy(src, saved_vals_.end(), arr.begin() + seg.dst);
                saved_vals_.erase(src, saved_vals_.end());
            }
            entries_.assign(saved_entries_.end() - rec.n_entries, saved_entries_.end());
            saved_entries_.resize(saved_entries_.size() - rec.n_entries);
            break;
        }
    }
}

void BidomainList::undo() {
    if (frames_.empty()) throw InternalError("undo: empty journal");
    const std::size_t floor = frames_.back();
    frames_.pop_back();
    while (journal_.size() > floor) {
        undo_rec(journal_.back());
        journal_.pop_back();
    }
}

void BidomainList::rollback(Mark m) {
    while (frames_.size() > m) undo();
}

}  // namespace mcs
