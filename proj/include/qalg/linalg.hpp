#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <unordered_map>
#include <utility>
#include <vector>

namespace qalg {

template <class K>
using SparseVec = std::vector<std::pair<std::uint32_t, typename K::Elem>>;  // sorted by index

// Dense scratch vector that remembers which slots it touched, for sparse accumulation.
template <class K>
class Accumulator {
public:
    using Elem = typename K::Elem;

    Accumulator(const K& k, std::size_t n) : k_(k), vals_(n, k.zero()), flag_(n, 0) {}

    void resize(std::size_t n)
    {
        if (n > vals_.size()) {
            vals_.resize(n, k_.zero());
            flag_.resize(n, 0);
        }
    }

    void add(std::uint32_t i, const Elem& c)
    {
        if (!flag_[i]) {
            flag_[i] = 1;
            touched_.push_back(i);
            heap_.push(i);
            vals_[i] = c;
        } else {
            vals_[i] = k_.add(vals_[i], c);
        }
    }
    // this += c * v
    void axpy(const Elem& c, const SparseVec<K>& v)
    {
        for (const auto& [i, x] : v)
            add(i, k_.mul(c, x));
    }
    const Elem& get(std::uint32_t i) const { return vals_[i]; }
    bool touched(std::uint32_t i) const { return flag_[i]; }

    // Smallest index holding a nonzero value, consuming zero entries on the way.
    std::optional<std::uint32_t> pop_min()
    {
        while (!heap_.empty()) {
            std::uint32_t i = heap_.top();
            if (!k_.is_zero(vals_[i]))
                return i;
            heap_.pop();
        }
        return std::nullopt;
    }
    void drop_min() { heap_.pop(); }

    SparseVec<K> extract()
    {
        std::sort(touched_.begin(), touched_.end());
        SparseVec<K> out;
        for (std::uint32_t i : touched_) {
            if (!k_.is_zero(vals_[i]))
                out.emplace_back(i, std::move(vals_[i]));
            vals_[i] = k_.zero();
            flag_[i] = 0;
        }
        touched_.clear();
        heap_ = {};
        return out;
    }

private:
    K k_;
    std::vector<Elem> vals_;
    std::vector<char> flag_;
    std::vector<std::uint32_t> touched_;
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> heap_;
};

// Incremental row echelon form over a field. Rows are sparse; each stored row is monic at its
// pivot, which is its smallest column. With tracking enabled every row remembers the combination
// of inserted input rows it came from, which yields kernels and solutions of linear systems.
template <class K>
class RowEchelon {
public:
    using Elem = typename K::Elem;

    RowEchelon(const K& k, std::size_t ncols, bool track = false)
        : k_(k), ncols_(ncols), track_(track), acc_(k, ncols), comb_(k, 0)
    {
    }

    std::size_t rank() const { return rows_.size(); }
    std::size_t ncols() const { return ncols_; }
    bool tracking() const { return track_; }

    struct Reduced {
        SparseVec<K> row;   // remainder after reduction
        SparseVec<K> comb;  // remainder = input + sum comb[i] * input_i (tracking only)
    };

    // Reduces v against the stored rows. When tracking, input_id names v in the combination.
    Reduced reduce(const SparseVec<K>& v, std::optional<std::uint32_t> input_id = std::nullopt)
    {
        if (!v.empty())
            acc_.resize(v.back().first + 1);
        for (const auto& [i, x] : v)
            acc_.add(i, x);
        if (track_ && input_id) {
            comb_.resize(*input_id + 1);
            comb_.add(*input_id, k_.one());
        }
        while (auto c = acc_.pop_min()) {
            auto it = pivot_.find(*c);
            if (it == pivot_.end()) {
                break;
            }
            Elem f = k_.neg(acc_.get(*c));
            const auto& r = rows_[it->second];
            acc_.axpy(f, r.row);
            if (track_)
                comb_.axpy(f, r.comb);
            acc_.drop_min();
        }
        Reduced out;
        out.row = acc_.extract();
        if (track_)
            out.comb = comb_.extract();
        return out;
    }

    // Inserts v; returns true when it increased the rank. Otherwise, when tracking, the returned
    // combination (including v itself) is a linear dependency among the inputs.
    bool insert(const SparseVec<K>& v, std::uint32_t input_id = 0, SparseVec<K>* dependency = nullptr)
    {
        if (track_)
            comb_.resize(input_id + 1);
        Reduced r = reduce(v, track_ ? std::optional<std::uint32_t>(input_id) : std::nullopt);
        if (r.row.empty()) {
            if (dependency)
                *dependency = std::move(r.comb);
            return false;
        }
        Elem inv = k_.inv(r.row.front().second);
        for (auto& e : r.row)
            e.second = k_.mul(e.second, inv);
        for (auto& e : r.comb)
            e.second = k_.mul(e.second, inv);
        pivot_.emplace(r.row.front().first, rows_.size());
        rows_.push_back({std::move(r.row), std::move(r.comb)});
        return true;
    }

    bool contains(const SparseVec<K>& v) { return reduce(v).row.empty(); }

    // Finds x with sum x_i * input_i = v, when v lies in the span (tracking only).
    std::optional<SparseVec<K>> solve(const SparseVec<K>& v)
    {
        Reduced r = reduce(v);
        if (!r.row.empty())
            return std::nullopt;
        for (auto& e : r.comb)
            e.second = k_.neg(e.second);
        return r.comb;
    }

    struct Row {
        SparseVec<K> row;
        SparseVec<K> comb;
    };
    const std::vector<Row>& rows() const { return rows_; }

private:
    K k_;
    std::size_t ncols_;
    bool track_;
    std::vector<Row> rows_;
    std::unordered_map<std::uint32_t, std::size_t> pivot_;
    Accumulator<K> acc_;
    Accumulator<K> comb_;
};

// Kernel of the linear map whose i-th input vector is rows[i]: a basis of the coefficient
// vectors c with sum c_i rows[i] = 0.
template <class K>
std::vector<SparseVec<K>> kernel_basis(const K& k, std::size_t ncols, const std::vector<SparseVec<K>>& rows)
{
    RowEchelon<K> ech(k, ncols, true);
    std::vector<SparseVec<K>> out;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        SparseVec<K> dep;
        if (!ech.insert(rows[i], static_cast<std::uint32_t>(i), &dep))
            out.push_back(std::move(dep));
    }
    return out;
}

template <class K>
std::size_t rank_of(const K& k, std::size_t ncols, const std::vector<SparseVec<K>>& rows)
{
    RowEchelon<K> ech(k, ncols);
    for (const auto& r : rows)
        ech.insert(r);
    return ech.rank();
}

}  // namespace qalg
