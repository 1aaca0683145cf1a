#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ffr/field.hpp"
#include "ffr/options.hpp"

namespace ffr {

/// J_{gamma,m} = gamma + V_m inside `field`, where V_m is the F_q-span of
/// 1, alpha, ..., alpha^(m-1) over the immediate base F_q. Punctured drops 0.
///
/// Because element codes are base-q digit strings in the power basis, the
/// element of V_m with coordinates (a_0, ..., a_{m-1}) has code equal to its
/// enumeration index sum a_i q^i, and the interval element is gamma + index.
struct Interval {
    FieldPtr field = nullptr;
    u64 gamma = 0;
    int m = 1;
    bool punctured = false;

    // Throws DimensionOutOfRange unless 1 <= m <= degree over the base.
    static Interval make(FieldPtr field, u64 gamma, int m, bool punctured);
    // "gamma=<element>;m=<int>;punctured=<bool>"; keys other than m optional.
    static Interval parse(FieldPtr field, std::string_view spec);

    u64 q() const noexcept;
    int n() const noexcept { return field->degree(); }
    // q^m, the size of V_m.
    u64 span() const noexcept { return span_; }
    // True when 0 lies in gamma + V_m, i.e. gamma itself is in V_m.
    bool zero_in_span() const noexcept { return gamma < span_; }
    bool excludes_zero() const noexcept { return punctured || !zero_in_span(); }
    u64 cardinality() const noexcept { return span_ - (punctured && zero_in_span() ? 1 : 0); }

    u64 at(u64 index) const noexcept { return field->add(gamma, index); }
    bool contains(u64 x) const noexcept;

    // Visits elements with enumeration index in [begin, end), skipping 0 if punctured.
    template <class Fn>
    void for_each(u64 begin, u64 end, Fn&& fn) const {
        for (u64 i = begin; i < end; ++i) {
            const u64 x = at(i);
            if (punctured && x == 0) continue;
            fn(x);
        }
    }
    template <class Fn>
    void for_each(Fn&& fn) const {
        for_each(0, span_, fn);
    }

    // Materialized enumeration; refused with BudgetExceeded above the budget.
    std::vector<u64> elements(const Budget& budget = {}) const;

    std::string str() const;

private:
    u64 span_ = 0;
};

// A contiguous block [begin, end) of the enumeration index counter.
struct IntervalRange {
    Interval iv;
    u64 begin;
    u64 end;

    template <class Fn>
    void for_each(Fn&& fn) const {
        iv.for_each(begin, end, fn);
    }
    std::vector<u64> elements() const;
};

/// Splits the enumeration into `parts` contiguous blocks; in lexicographic
/// order with a_{m-1} most significant these are high-order coefficient blocks.
/// Concatenating the blocks reproduces the full enumeration.
std::vector<IntervalRange> interval_partition(const Interval& iv, int parts);

}  // namespace ffr
