#include "qonsager/qstrings.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>

namespace qonsager {

namespace {

// Multiplicity profile of one q^2-coset, indexed by the coset exponent.
using Profile = std::map<long, long>;

// The string occupying coset exponents [lo, lo + ell) above representative rep.
QString string_from_run(const QParam& q, const Rational& rep, long lo, long ell) {
  return QString(ell, rep * q.pow(2 * lo + ell - 1));
}

std::map<Rational, Profile> split_by_coset(const QParam& q, std::span<const Rational> omega) {
  std::map<Rational, Profile> cosets;
  for (const Rational& c : omega) {
    if (c.is_zero()) throw std::invalid_argument("scalar multiset contains zero");
    const CosetForm form = coset_normal_form(q, c);
    ++cosets[form.representative][form.exponent];
  }
  return cosets;
}

// Peels maximal runs off the profile layer by layer; runs within a layer are
// gap-separated and each later run lies inside an earlier one.
void peel_layers(const QParam& q, const Rational& rep, Profile profile, QStringMultiset& out) {
  while (!profile.empty()) {
    std::vector<std::pair<long, long>> runs;  // (lo, length)
    for (const auto& [e, count] : profile) {
      if (!runs.empty() && runs.back().first + runs.back().second == e) {
        ++runs.back().second;
      } else {
        runs.emplace_back(e, 1);
      }
    }
    for (const auto& [lo, len] : runs) {
      out.push_back(string_from_run(q, rep, lo, len));
      for (long e = lo; e < lo + len; ++e) {
        if (--profile[e] == 0) profile.erase(e);
      }
    }
  }
}

bool strongly_compatible(const QParam& q, const QString& lhs, const QString& rhs) {
  const QString lhs_inv = inverse_string(lhs);
  const QString rhs_inv = inverse_string(rhs);
  return !adjacent(q, lhs, rhs) && !adjacent(q, lhs_inv, rhs) && !adjacent(q, lhs, rhs_inv) &&
         !adjacent(q, lhs_inv, rhs_inv);
}

// Backtracking cover of a self-inverse coset, where exponent e mirrors to
// mirror_shift - e. The lowest remaining exponent starts the next string
// (choosing that orientation loses nothing up to equivalence); longer
// candidates are tried first.
bool cover_self_inverse(const QParam& q, const Rational& rep, long mirror_shift, Profile& profile,
                        QStringMultiset& chosen) {
  if (profile.empty()) return true;
  const long lo = profile.begin()->first;
  long max_hi = lo;
  while (profile.contains(max_hi + 1)) ++max_hi;

  for (long hi = max_hi; hi >= lo; --hi) {
    Profile trial = profile;
    bool feasible = true;
    auto take = [&](long e) {
      auto it = trial.find(e);
      if (it == trial.end()) {
        feasible = false;
        return;
      }
      if (--it->second == 0) trial.erase(it);
    };
    for (long e = lo; e <= hi && feasible; ++e) take(e);
    for (long e = lo; e <= hi && feasible; ++e) take(mirror_shift - e);
    if (!feasible) continue;

    QString candidate = string_from_run(q, rep, lo, hi - lo + 1);
    const bool compatible = std::all_of(chosen.begin(), chosen.end(), [&](const QString& s) {
      return strongly_compatible(q, s, candidate);
    });
    if (!compatible) continue;

    chosen.push_back(std::move(candidate));
    if (cover_self_inverse(q, rep, mirror_shift, trial, chosen)) {
      profile = std::move(trial);
      return true;
    }
    chosen.pop_back();
  }
  return false;
}

QString oriented(const QString& s) {
  QString inv = inverse_string(s);
  return inv < s ? inv : s;
}

}  // namespace

QString::QString(long ell, Rational base) : ell_(ell), base_(std::move(base)) {
  if (ell_ < 1) throw std::invalid_argument("q-string length must be >= 1");
  if (base_.is_zero()) throw std::invalid_argument("q-string base must be nonzero");
}

NotInverseClosed::NotInverseClosed(Rational offending)
    : std::invalid_argument("not inverse-closed: scalar " + offending.to_string() +
                            " is not paired with its inverse " +
                            offending.inverse().to_string()),
      offending_(std::move(offending)) {}

ScalarMultiset elements(const QParam& q, const QString& s) {
  ScalarMultiset out;
  out.reserve(static_cast<std::size_t>(s.ell()));
  for (long i = 0; i < s.ell(); ++i) out.push_back(s.base() * q.pow(2 * i - s.ell() + 1));
  return out;
}

QString inverse_string(const QString& s) { return QString(s.ell(), s.base().inverse()); }

bool adjacent(const QParam& q, const QString& lhs, const QString& rhs) {
  const long span = lhs.ell() + rhs.ell();
  const auto index = q_power_index(q, rhs.base() / lhs.base(), -span, span);
  if (!index) return false;
  const long i = std::labs(*index);
  return i >= std::labs(lhs.ell() - rhs.ell()) + 2 && (span - i) % 2 == 0;
}

bool in_general_position(const QParam& q, std::span<const QString> strings) {
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      if (adjacent(q, strings[i], strings[j])) return false;
    }
  }
  return true;
}

bool strongly_in_general_position(const QParam& q, std::span<const QString> strings) {
  // General position is a pairwise condition, so it suffices to check the
  // four sign choices on every pair.
  for (std::size_t i = 0; i < strings.size(); ++i) {
    for (std::size_t j = i + 1; j < strings.size(); ++j) {
      if (!strongly_compatible(q, strings[i], strings[j])) return false;
    }
  }
  return true;
}

QStringMultiset decompose(const QParam& q, std::span<const Rational> omega) {
  if (omega.empty()) throw std::invalid_argument("cannot decompose an empty multiset");
  QStringMultiset out;
  for (auto& [rep, profile] : split_by_coset(q, omega)) peel_layers(q, rep, std::move(profile), out);
  return out;
}

QStringMultiset decompose_inverse_closed(const QParam& q, std::span<const Rational> omega) {
  if (omega.empty()) throw std::invalid_argument("cannot decompose an empty multiset");
  std::map<Rational, long> counts;
  for (const Rational& c : omega) {
    if (c.is_zero()) throw std::invalid_argument("scalar multiset contains zero");
    ++counts[c];
  }
  for (const auto& [c, n] : counts) {
    const auto it = counts.find(c.inverse());
    const long mirrored = it == counts.end() ? 0 : it->second;
    if (mirrored != n) throw NotInverseClosed(c);
    if (c.abs().is_one() && n % 2 != 0) throw NotInverseClosed(c);
  }

  QStringMultiset out;
  for (auto& [rep, profile] : split_by_coset(q, omega)) {
    const CosetForm mirror = coset_normal_form(q, rep.inverse());
    if (mirror.representative != rep) {
      // Of each pair of mutually inverse cosets keep the one with larger |rep|.
      if (rep.abs() > mirror.representative.abs()) peel_layers(q, rep, std::move(profile), out);
      continue;
    }
    QStringMultiset chosen;
    if (!cover_self_inverse(q, rep, mirror.exponent, profile, chosen)) {
      throw std::logic_error("no strongly general cover found for coset of " + rep.to_string());
    }
    out.insert(out.end(), chosen.begin(), chosen.end());
  }
  return out;
}

bool equivalent(std::span<const QString> lhs, std::span<const QString> rhs) {
  if (lhs.size() != rhs.size()) return false;
  // Sign flips act independently on each entry, so comparing canonical
  // orientations decides the existence of a sign vector.
  QStringMultiset a;
  QStringMultiset b;
  for (const auto& s : lhs) a.push_back(oriented(s));
  for (const auto& s : rhs) b.push_back(oriented(s));
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

QStringMultiset canonical_order(std::span<const QString> strings) {
  QStringMultiset out(strings.begin(), strings.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qonsager
