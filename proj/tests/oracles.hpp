#pragma once

// Brute-force reference implementations used only by the tests. None of them
// call decompose, adjacent or the library's coset machinery; they work from
// the definitions directly.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "qonsager/exact_scalars.hpp"
#include "qonsager/qstrings.hpp"

namespace qonsager::oracle {

using Bag = std::vector<Rational>;  // sorted multiset

inline Bag sorted(Bag b) {
  std::sort(b.begin(), b.end());
  return b;
}

/// { a q^(2i - ell + 1) : 0 <= i < ell }, straight from the definition.
inline Bag string_elements(const QParam& q, long ell, const Rational& a) {
  Bag out;
  for (long i = 0; i < ell; ++i) out.push_back(a * q.value().pow(2 * i - ell + 1));
  return sorted(out);
}

inline Bag string_elements(const QParam& q, const QString& s) { return string_elements(q, s.ell(), s.base()); }

/// If the set of distinct scalars is a q-string S(m, a), return it.
inline std::optional<QString> as_qstring(const QParam& q, Bag set) {
  set = sorted(set);
  set.erase(std::unique(set.begin(), set.end()), set.end());
  if (set.empty()) return std::nullopt;
  const long m = static_cast<long>(set.size());
  const Rational q2 = q.value() * q.value();
  for (const Rational& start : set) {
    Bag run;
    Rational x = start;
    for (long k = 0; k < m; ++k, x *= q2) run.push_back(x);
    if (sorted(run) == set) return QString(m, start * q.value().pow(m - 1));
  }
  return std::nullopt;
}

/// Adjacency by definition: the union is a strictly longer q-string.
inline bool adjacent_by_definition(const QParam& q, const QString& a, const QString& b) {
  Bag u = string_elements(q, a);
  const Bag eb = string_elements(q, b);
  u.insert(u.end(), eb.begin(), eb.end());
  const auto s = as_qstring(q, u);
  return s && s->ell() > std::max(a.ell(), b.ell());
}

inline bool general_position_by_definition(const QParam& q, const QStringMultiset& strings) {
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      if (adjacent_by_definition(q, strings[i], strings[j])) return false;
    }
  }
  return true;
}

inline QStringMultiset with_signs(const QStringMultiset& strings, std::uint32_t mask) {
  QStringMultiset out;
  for (std::size_t i = 0; i < strings.size(); ++i) {
    const bool flip = (mask >> i) & 1U;
    out.emplace_back(strings[i].ell(), flip ? strings[i].base().inverse() : strings[i].base());
  }
  return out;
}

/// Exhaustive over all 2^n sign vectors.
inline bool strongly_general_by_enumeration(const QParam& q, const QStringMultiset& strings) {
  const std::uint32_t count = 1U << strings.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (!general_position_by_definition(q, with_signs(strings, mask))) return false;
  }
  return true;
}

inline QStringMultiset canonical(QStringMultiset s) {
  std::sort(s.begin(), s.end());
  return s;
}

/// Exhaustive over sign vectors with sorted multiset comparison.
inline bool equivalent_by_enumeration(const QStringMultiset& a, const QStringMultiset& b) {
  if (a.size() != b.size()) return false;
  const QStringMultiset target = canonical(b);
  const std::uint32_t count = 1U << a.size();
  for (std::uint32_t mask = 0; mask < count; ++mask) {
    if (canonical(with_signs(a, mask)) == target) return true;
  }
  return false;
}

/// Removes every element of part from bag (multiset difference); false if
/// part is not contained in bag.
inline bool remove_all(Bag& bag, const Bag& part) {
  for (const Rational& x : part) {
    const auto it = std::find(bag.begin(), bag.end(), x);
    if (it == bag.end()) return false;
    bag.erase(it);
  }
  return true;
}

/// All q-strings containing x, of length up to max_len.
inline std::vector<QString> strings_through(const QParam& q, const Rational& x, long max_len) {
  std::vector<QString> out;
  for (long len = 1; len <= max_len; ++len) {
    for (long pos = 0; pos < len; ++pos) {
      // x is element pos: x = a q^(2 pos - len + 1).
      out.emplace_back(len, x * q.value().pow(len - 1 - 2 * pos));
    }
  }
  return out;
}

namespace detail {

inline void partitions(const QParam& q, const Bag& remaining, QStringMultiset& current,
                       std::set<QStringMultiset>& found) {
  if (remaining.empty()) {
    found.insert(canonical(current));
    return;
  }
  const Rational x = remaining.front();
  for (const QString& s : strings_through(q, x, static_cast<long>(remaining.size()))) {
    Bag rest = remaining;
    if (!remove_all(rest, string_elements(q, s))) continue;
    current.push_back(s);
    partitions(q, rest, current, found);
    current.pop_back();
  }
}

inline void inverse_covers(const QParam& q, const Bag& remaining, QStringMultiset& current,
                           std::set<QStringMultiset>& found) {
  if (remaining.empty()) {
    found.insert(canonical(current));
    return;
  }
  const Rational x = remaining.front();
  for (const QString& s : strings_through(q, x, static_cast<long>(remaining.size()))) {
    Bag rest = remaining;
    if (!remove_all(rest, string_elements(q, s))) continue;
    if (!remove_all(rest, string_elements(q, s.ell(), s.base().inverse()))) continue;
    current.push_back(s);
    inverse_covers(q, rest, current, found);
    current.pop_back();
  }
}

}  // namespace detail

/// Every multiset of q-strings whose union is omega and which is in general
/// position.
inline std::vector<QStringMultiset> general_partitions(const QParam& q, const Bag& omega) {
  std::set<QStringMultiset> found;
  QStringMultiset current;
  detail::partitions(q, sorted(omega), current, found);
  std::vector<QStringMultiset> out;
  for (const auto& p : found) {
    if (general_position_by_definition(q, p)) out.push_back(p);
  }
  return out;
}

/// Every multiset {S_i}, strongly in general position, with
/// union_i (S_i u S_i^-1) == omega.
inline std::vector<QStringMultiset> strong_inverse_covers(const QParam& q, const Bag& omega) {
  std::set<QStringMultiset> found;
  QStringMultiset current;
  detail::inverse_covers(q, sorted(omega), current, found);
  std::vector<QStringMultiset> out;
  for (const auto& p : found) {
    if (strongly_general_by_enumeration(q, p)) out.push_back(p);
  }
  return out;
}

inline Bag union_of(const QParam& q, const QStringMultiset& strings, bool with_inverses) {
  Bag out;
  for (const auto& s : strings) {
    const Bag e = string_elements(q, s);
    out.insert(out.end(), e.begin(), e.end());
    if (with_inverses) {
      const Bag inv = string_elements(q, s.ell(), s.base().inverse());
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return sorted(out);
}

}  // namespace qonsager::oracle
