#pragma once

// Project-and-lift completion for Graver bases.
//
// Start from lattice generators whose projection onto a pivot coordinate set
// is injective. Compute the Graver basis of that projection, then add the
// remaining coordinates one at a time. When coordinate j joins the active
// set, only sums f + g of elements that are sign-compatible on the old
// active set and have opposite signs in coordinate j can produce new
// ⊑-minimal vectors; everything else reduces away. Each sum is reduced by
// conformal (on the active set) subtraction and irreducible remainders are
// added until the pair queue drains, then the working set is cut back to its
// minimal elements.
//
// Scalar is either int64_t (arithmetic checked, ArithmeticOverflow on wrap)
// or Integer.

#include "nfold/core.hpp"
#include "nfold/graver.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace nfold::detail {

struct ArithmeticOverflow {};

inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
  return r;
}
inline std::int64_t magnitude(std::int64_t a) {
  if (a == INT64_MIN) throw ArithmeticOverflow{};
  return a < 0 ? -a : a;
}
inline Integer checked_add(const Integer& a, const Integer& b) { return a + b; }
inline Integer checked_sub(const Integer& a, const Integer& b) { return a - b; }
inline Integer checked_mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer magnitude(const Integer& a) { return abs(a); }

template <typename Scalar>
class LiftingCompletion {
public:
  using Vec = std::vector<Scalar>;

  /// `bounds[i]` < 0 leaves coordinate i unbounded; otherwise only
  /// vectors with |v_i| <= bounds[i] are kept.
  LiftingCompletion(Index cols, std::size_t budget, Vec bounds = {})
      : cols_(cols),
        words_(static_cast<std::size_t>((cols + 63) / 64)),
        active_(words_, 0),
        budget_(budget),
        bounds_(std::move(bounds)) {}

  /// `generators` span the lattice; their projection onto `pivots` is
  /// injective, and the identity when `unit_pivots` holds.
  std::vector<Vec> run(const std::vector<Vec>& generators, const std::vector<Index>& pivots,
                       bool unit_pivots) {
    for (Index p : pivots) activate(p);
    for (const Vec& g : generators) push_pair(g);
    refresh_bits();
    if (!unit_pivots) complete(-1);
    drop_out_of_box();
    keep_minimal();
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols_), false);
    for (Index p : pivots) is_pivot[static_cast<std::size_t>(p)] = true;
    for (Index j = 0; j < cols_; ++j) {
      if (is_pivot[static_cast<std::size_t>(j)]) continue;
      activate(j);
      refresh_bits();
      complete(j);
      drop_out_of_box();
      keep_minimal();
    }
    return std::move(elems_);
  }

private:
  Index cols_;
  std::size_t words_;
  std::vector<std::uint64_t> active_;
  std::size_t budget_;
  std::vector<Vec> elems_;
  std::vector<std::uint64_t> pos_;  // words_ per element, masked by active_
  std::vector<std::uint64_t> neg_;
  Vec bounds_;

  void activate(Index j) {
    active_[static_cast<std::size_t>(j) / 64] |= std::uint64_t{1} << (j % 64);
  }

  static bool bit(const std::uint64_t* w, Index j) {
    return (w[static_cast<std::size_t>(j) / 64] >> (j % 64)) & 1U;
  }

  void signs_of(const Vec& v, std::uint64_t* p, std::uint64_t* n) const {
    for (std::size_t w = 0; w < words_; ++w) {
      p[w] = 0;
      n[w] = 0;
    }
    for (Index i = 0; i < cols_; ++i) {
      const auto word = static_cast<std::size_t>(i) / 64;
      const std::uint64_t mask = std::uint64_t{1} << (i % 64);
      if (!(active_[word] & mask)) continue;
      const Scalar& x = v[static_cast<std::size_t>(i)];
      if (x > 0) p[word] |= mask;
      else if (x < 0) n[word] |= mask;
    }
  }

  const std::uint64_t* pos(std::size_t e) const { return pos_.data() + e * words_; }
  const std::uint64_t* neg(std::size_t e) const { return neg_.data() + e * words_; }

  void refresh_bits() {
    pos_.assign(elems_.size() * words_, 0);
    neg_.assign(elems_.size() * words_, 0);
    for (std::size_t e = 0; e < elems_.size(); ++e)
      signs_of(elems_[e], pos_.data() + e * words_, neg_.data() + e * words_);
  }

  void push_one(Vec v) {
    elems_.push_back(std::move(v));
    pos_.resize(elems_.size() * words_);
    neg_.resize(elems_.size() * words_);
    const std::size_t e = elems_.size() - 1;
    signs_of(elems_[e], pos_.data() + e * words_, neg_.data() + e * words_);
  }

  // Appends v and -v; returns the index of v.
  std::size_t push_pair(const Vec& v) {
    if (budget_ != 0 && elems_.size() + 2 > budget_) throw GraverBudgetExceeded(budget_);
    Vec minus(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) minus[i] = checked_sub(Scalar(0), v[i]);
    const std::size_t index = elems_.size();
    push_one(v);
    push_one(std::move(minus));
    return index;
  }

  // g ⊑ s on the active coordinates, given the sign masks of s.
  bool conformal_on_active(std::size_t g, const Vec& s, const std::uint64_t* sp,
                           const std::uint64_t* sn) const {
    const std::uint64_t* gp = pos(g);
    const std::uint64_t* gn = neg(g);
    for (std::size_t w = 0; w < words_; ++w) {
      if ((gp[w] & ~sp[w]) || (gn[w] & ~sn[w])) return false;
    }
    const Vec& gv = elems_[g];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t support = gp[w] | gn[w];
      while (support) {
        const auto i = w * 64 + static_cast<std::size_t>(std::countr_zero(support));
        support &= support - 1;
        if (magnitude(gv[i]) > magnitude(s[i])) return false;
      }
    }
    return true;
  }

  // Reduces s in place; false when it reduced to zero.
  bool normal_form(Vec& s) const {
    std::vector<std::uint64_t> sp(words_), sn(words_);
    signs_of(s, sp.data(), sn.data());
    auto nonzero = [&] {
      for (std::size_t w = 0; w < words_; ++w)
        if (sp[w] | sn[w]) return true;
      return false;
    };
    if (!nonzero()) return false;
    // One pass suffices: s only shrinks in ⊑, so a vector that fails to be
    // conformal to s never becomes conformal later.
    for (std::size_t g = 0; g < elems_.size(); ++g) {
      if (!conformal_on_active(g, s, sp.data(), sn.data())) continue;
      const Vec& gv = elems_[g];
      Scalar factor(0);
      bool first = true;
      for (std::size_t w = 0; w < words_; ++w) {
        std::uint64_t support = pos(g)[w] | neg(g)[w];
        while (support) {
          const auto i = w * 64 + static_cast<std::size_t>(std::countr_zero(support));
          support &= support - 1;
          Scalar ratio = s[i] / gv[i];
          if (first || ratio < factor) factor = ratio;
          first = false;
        }
      }
      for (std::size_t i = 0; i < s.size(); ++i) {
        if (gv[i] != 0) s[i] = checked_sub(s[i], checked_mul(factor, gv[i]));
      }
      signs_of(s, sp.data(), sn.data());
      if (!nonzero()) return false;
    }
    return true;
  }

  bool sign_compatible_except(std::size_t a, std::size_t b, Index skip) const {
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t clash = (pos(a)[w] & neg(b)[w]) | (neg(a)[w] & pos(b)[w]);
      if (skip >= 0 && static_cast<std::size_t>(skip) / 64 == w)
        clash &= ~(std::uint64_t{1} << (skip % 64));
      if (clash) return false;
    }
    return true;
  }

  bool is_critical(std::size_t a, std::size_t b, Index lift) const {
    if (lift < 0) return !sign_compatible_except(a, b, -1);
    const bool opposite = (bit(pos(a), lift) && bit(neg(b), lift)) ||
                          (bit(neg(a), lift) && bit(pos(b), lift));
    return opposite && sign_compatible_except(a, b, lift);
  }

  Scalar active_norm_of_sum(std::size_t a, std::size_t b) const {
    Scalar total(0);
    const Vec& av = elems_[a];
    const Vec& bv = elems_[b];
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t support = pos(a)[w] | neg(a)[w] | pos(b)[w] | neg(b)[w];
      while (support) {
        const auto i = w * 64 + static_cast<std::size_t>(std::countr_zero(support));
        support &= support - 1;
        total = checked_add(total, magnitude(checked_add(av[i], bv[i])));
      }
    }
    return total;
  }

  // Within the box on the active coordinates, ignoring `skip`.
  bool in_box(const Vec& v, Index skip) const {
    if (bounds_.empty()) return true;
    for (Index i = 0; i < cols_; ++i) {
      if (i == skip || !bit(active_.data(), i)) continue;
      const Scalar& limit = bounds_[static_cast<std::size_t>(i)];
      if (limit >= 0 && magnitude(v[static_cast<std::size_t>(i)]) > limit) return false;
    }
    return true;
  }

  void drop_out_of_box() {
    if (bounds_.empty()) return;
    std::vector<Vec> kept;
    kept.reserve(elems_.size());
    for (Vec& v : elems_)
      if (in_box(v, -1)) kept.push_back(std::move(v));
    elems_ = std::move(kept);
    refresh_bits();
  }

  static bool negative_leading(const Vec& v) {
    for (const Scalar& x : v) {
      if (x != 0) return x < 0;
    }
    return false;
  }

  void complete(Index lift) {
    using Pair = std::pair<std::uint32_t, std::uint32_t>;
    std::map<Scalar, std::vector<Pair>> queue;
    auto consider = [&](std::size_t a, std::size_t b) {
      if (!is_critical(a, b, lift)) return;
      queue[active_norm_of_sum(a, b)].emplace_back(static_cast<std::uint32_t>(a),
                                                   static_cast<std::uint32_t>(b));
    };
    for (std::size_t a = 0; a < elems_.size(); ++a)
      for (std::size_t b = a + 1; b < elems_.size(); ++b) consider(a, b);

    while (!queue.empty()) {
      auto it = queue.begin();
      std::vector<Pair> batch = std::move(it->second);
      queue.erase(it);
      for (const auto& [a, b] : batch) {
        Vec s(elems_[a].size());
        for (std::size_t i = 0; i < s.size(); ++i) s[i] = checked_add(elems_[a][i], elems_[b][i]);
        // The pair of negations yields -s; handle each ± class once.
        if (negative_leading(s)) continue;
        // Sums leaving the box on the settled coordinates never take part
        // in a conformal representation of an in-box vector.
        if (lift >= 0 && !in_box(s, lift)) continue;
        if (!normal_form(s)) continue;
        const std::size_t fresh = push_pair(s);
        for (std::size_t h = 0; h < fresh; ++h) {
          consider(fresh, h);
          consider(fresh + 1, h);
        }
      }
    }
  }

  void keep_minimal() {
    std::vector<bool> drop(elems_.size(), false);
    for (std::size_t e = 0; e < elems_.size(); ++e) {
      for (std::size_t g = 0; g < elems_.size(); ++g) {
        if (g == e || drop[g]) continue;
        if (conformal_on_active(g, elems_[e], pos(e), neg(e))) {
          drop[e] = true;
          break;
        }
      }
    }
    std::vector<Vec> kept;
    kept.reserve(elems_.size());
    for (std::size_t e = 0; e < elems_.size(); ++e)
      if (!drop[e]) kept.push_back(std::move(elems_[e]));
    elems_ = std::move(kept);
    refresh_bits();
  }
};

}  // namespace nfold::detail
