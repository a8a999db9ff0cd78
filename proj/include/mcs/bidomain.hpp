#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcs/graph.hpp"

namespace mcs {

/// One label class: a slice of candidate vertices from each graph. Any
/// cross pair inside it is a legal match. `adjacent` is true once the
/// class's split history contains a nonzero pattern; the connected variant
/// restricts branching to such classes.
struct Bidomain {
    int left_start = 0;
    int right_start = 0;
    int left_len = 0;
    int right_len = 0;
    bool adjacent = false;

    friend bool operator==(const Bidomain&, const Bidomain&) = default;
};

/// The live partition of unmatched candidate vertices into label classes.
///
/// Classes are kept as (start, length) slices over two shared vertex
/// arrays; dividing a class permutes members within its slice and emits
/// child slices, so no label strings are ever materialised. Every mutation
/// appends to a journal, and undo restores the previous state bit for bit
/// (entry records and slice contents both).
class BidomainList {
public:
    /// Builds the initial partition: one class per vertex label shared by
    /// both graphs, ascending by label value. Unlabelled graphs produce a
    /// single class holding every vertex of each side.
    BidomainList(const Graph& g0, const Graph& g1);

    int entry_count() const { return static_cast<int>(entries_.size()); }
    const Bidomain& entry(int i) const { return entries_[static_cast<std::size_t>(i)]; }
    const std::vector<Bidomain>& entries() const { return entries_; }

    std::span<const int> left_of(int i) const {
        const Bidomain& e = entry(i);
        return {left_.data() + e.left_start, static_cast<std::size_t>(e.left_len)};
    }
    std::span<const int> right_of(int i) const {
        const Bidomain& e = entry(i);
        return {right_.data() + e.right_start, static_cast<std::size_t>(e.right_len)};
    }

    /// Admissible bound: sum over classes of min(|left|, |right|).
    int over_estimate() const;

    /// Picks the class minimising max(|left|, |right|); ties go to the class
    /// whose left side holds the largest degree, then to the lowest index.
    /// In connected mode with a nonempty solution only adjacent classes are
    /// eligible; returns -1 when nothing is eligible.
    int select_bidomain(bool connected, bool solution_nonempty) const;

    int find_entry_left(int v) const;
    int find_entry_right(int v) const;

    /// Journaled removal of one vertex from one side of one class. The
    /// class is kept even if the side empties (the search loop needs its
    /// other side while enumerating).
    void detach_left(int entry_idx, int v);
    void detach_right(int entry_idx, int v);

    /// Removes v from the class holding it on the left; discards the class
    /// if its left side empties. Throws InternalError if v is in no class.
    void remove_left_vertex(int v);
    void remove_left_vertex_at(int entry_idx, int v);

    /// Splits every class by its members' adjacency pattern to p (left
    /// side) and q (right side). Pattern-0 children inherit the parent's
    /// adjacent flag and are emitted first; nonzero-pattern children set
    /// adjacent=true. Children with an empty side are dropped. p and q must
    /// already have been detached by the caller.
    void divide(int p, int q);

    /// Undoes the most recent mutation (divide / detach / remove).
    void undo();
    bool has_history() const { return !frames_.empty(); }

    using Mark = std::size_t;
    Mark mark() const { return frames_.size(); }
    void rollback(Mark m);

private:
    enum class Op : std::uint8_t { DetachLeft, DetachRight, Discard, Divide };
    struct Rec {
        Op op;
        int entry;               // DetachLeft/DetachRight/Discard
        int pos;                 // Detach*: member position within the slice
        std::uint32_t n_entries; // Divide: snapshot length
        std::uint32_t n_segs;    // Divide: saved segment count
    };
    struct Seg {
        int dst;
        int len;
        bool right;
    };

    void begin_frame() { frames_.push_back(journal_.size()); }
    void detach_impl(std::vector<int>& arr, bool right_side, int entry_idx, int v);
    void discard_impl(int entry_idx);
    void undo_rec(const Rec& rec);

    const Graph* g0_ = nullptr;
    const Graph* g1_ = nullptr;
    bool multiway_ = false;

    std::vector<Bidomain> entries_;
    std::vector<int> left_;
    std::vector<int> right_;

    std::vector<Rec> journal_;
    std::vector<std::size_t> frames_;
    std::vector<Bidomain> saved_entries_;
    std::vector<Seg> saved_segs_;
    std::vector<int> saved_vals_;
    std::vector<Bidomain> scratch_;
};

}  // namespace mcs
