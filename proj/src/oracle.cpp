// Copyright 2026 The coprimemax Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coprimemax/oracle.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>

#include "coprimemax/classifier.hpp"

namespace coprimemax::oracle {

Perm operator*(const Perm& a, const Perm& b) {
  Perm r;
  r.img.resize(b.img.size());
  for (std::size_t x = 0; x < b.img.size(); ++x)
    r.img[x] = a.img[b.img[x]];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (std::size_t x = 0; x < img.size(); ++x)
    r.img[img[x]] = static_cast<std::uint8_t>(x);
  return r;
}

bool Perm::is_identity() const {
  for (std::size_t x = 0; x < img.size(); ++x)
    if (img[x] != x)
      return false;
  return true;
}

Perm Perm::identity(std::size_t degree) {
  Perm r;
  r.img.resize(degree);
  std::iota(r.img.begin(), r.img.end(), std::uint8_t{0});
  return r;
}

std::size_t ElementSet::count() const {
  std::size_t c = 0;
  for (auto w : w_)
    c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::subset_of(const ElementSet& o) const {
  for (std::size_t i = 0; i < w_.size(); ++i)
    if (w_[i] & ~o.w_[i])
      return false;
  return true;
}

std::vector<std::uint32_t> ElementSet::members() const {
  std::vector<std::uint32_t> out;
  for (std::size_t i = 0; i < w_.size(); ++i)
    for (std::uint64_t w = w_[i]; w; w &= w - 1)
      out.push_back(static_cast<std::uint32_t>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
  return out;
}

std::size_t ElementSet::hash() const {
  std::size_t h = 1469598103934665603ULL;
  for (auto w : w_)
    h = (h ^ w) * 1099511628211ULL;
  return h;
}

namespace {

bool small_prime(unsigned q) {
  if (q < 2)
    return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0)
      return false;
  return true;
}

}  // namespace

std::uint32_t Psl2Group::key(std::uint8_t inf, std::uint8_t zero, std::uint8_t one) const {
  std::uint32_t m = q_ + 1;
  return (static_cast<std::uint32_t>(inf) * m + zero) * m + one;
}

Perm Psl2Group::element(std::uint32_t i) const {
  Perm p;
  p.img.assign(img_.begin() + static_cast<std::ptrdiff_t>(i * (q_ + 1)),
               img_.begin() + static_cast<std::ptrdiff_t>((i + 1) * (q_ + 1)));
  return p;
}

std::uint32_t Psl2Group::mul(std::uint32_t a, std::uint32_t b) const {
  const std::uint8_t* A = &img_[a * (q_ + 1)];
  const std::uint8_t* B = &img_[b * (q_ + 1)];
  return static_cast<std::uint32_t>(by_key_[key(A[B[q_]], A[B[0]], A[B[1]])]);
}

std::uint32_t Psl2Group::index_of(const Perm& p) const {
  if (p.degree() != q_ + 1)
    throw std::invalid_argument("permutation of the wrong degree");
  std::int32_t i = by_key_[key(p.img[q_], p.img[0], p.img[1])];
  if (i < 0 || element(static_cast<std::uint32_t>(i)) != p)
    throw std::invalid_argument("permutation is not in the group");
  return static_cast<std::uint32_t>(i);
}

Psl2Group build_psl2(unsigned q) {
  if (!small_prime(q) || q < 5 || q > 23)
    throw OracleRangeError("oracle needs a prime 5 <= q <= 23, got " + std::to_string(q));
  Psl2Group g;
  g.q_ = q;
  const std::size_t deg = q + 1;
  const std::uint8_t inf = static_cast<std::uint8_t>(q);

  Perm t, s;
  t.img.resize(deg);
  s.img.resize(deg);
  for (unsigned z = 0; z < q; ++z) {
    t.img[z] = static_cast<std::uint8_t>((z + 1) % q);
    unsigned zinv = 1;
    if (z != 0)
      while (zinv * z % q != 1)
        ++zinv;
    s.img[z] = z == 0 ? inf : static_cast<std::uint8_t>((q - zinv) % q);
  }
  t.img[q] = inf;
  s.img[q] = 0;

  g.by_key_.assign(deg * deg * deg, -1);
  std::vector<Perm> elems{Perm::identity(deg)};
  auto remember = [&](const Perm& p) {
    auto& slot = g.by_key_[g.key(p.img[q], p.img[0], p.img[1])];
    if (slot >= 0)
      return false;
    slot = static_cast<std::int32_t>(elems.size());
    elems.push_back(p);
    return true;
  };
  g.by_key_[g.key(inf, 0, 1)] = 0;
  remember(t);
  remember(s);
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const Perm* gen : {&t, &s})
      remember(elems[i] * *gen);

  g.n_ = elems.size();
  const std::size_t expected = static_cast<std::size_t>(q) * (q * q - 1) / 2;
  if (g.n_ != expected)
    throw std::logic_error("PSL(2," + std::to_string(q) + ") closure has " +
                           std::to_string(g.n_) + " elements, expected " +
                           std::to_string(expected));
  g.img_.reserve(g.n_ * deg);
  for (const auto& p : elems)
    g.img_.insert(g.img_.end(), p.img.begin(), p.img.end());
  g.gens_ = {g.index_of(t), g.index_of(s)};
  g.inv_.resize(g.n_);
  g.ord_.resize(g.n_);
  for (std::uint32_t i = 0; i < g.n_; ++i) {
    g.inv_[i] = g.index_of(elems[i].inverse());
    std::uint32_t k = 1;
    for (std::uint32_t x = i; x != 0; x = g.mul(x, i))
      ++k;
    g.ord_[i] = k;
  }
  return g;
}

std::size_t max_oracle_group_order() { return 7000; }

namespace {

class LatticeBuilder {
public:
  explicit LatticeBuilder(const Psl2Group& g) : g_(g), limit_(g.order() / 2) {}

  // Subgroup generated by gens, or nullopt when it has more than |G|/2
  // elements (and so is G).
  std::optional<ElementSet> closure(const std::vector<std::uint32_t>& gens) const {
    ElementSet bits(g_.order());
    std::vector<std::uint32_t> list{g_.identity()};
    bits.set(g_.identity());
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (auto x : gens) {
        std::uint32_t y = g_.mul(list[i], x);
        if (!bits.test(y)) {
          bits.set(y);
          list.push_back(y);
          if (list.size() > limit_)
            return std::nullopt;
        }
      }
    }
    return bits;
  }

  ElementSet whole() const {
    ElementSet all(g_.order());
    for (std::uint32_t i = 0; i < g_.order(); ++i)
      all.set(i);
    return all;
  }

  ElementSet conjugate(const ElementSet& s, std::uint32_t x) const {
    ElementSet r(g_.order());
    std::uint32_t xi = g_.inv(x);
    for (auto e : s.members())
      r.set(g_.mul(g_.mul(x, e), xi));
    return r;
  }

  std::optional<std::size_t> find(const ElementSet& s) const {
    auto it = index_.find(s.hash());
    if (it == index_.end())
      return std::nullopt;
    for (auto id : it->second)
      if (subs_[id].elements == s)
        return id;
    return std::nullopt;
  }

  // Adds s and all its conjugates; returns the number of new subgroups.
  std::size_t add_class(const ElementSet& s, std::vector<std::uint32_t> gens) {
    if (find(s))
      return 0;
    std::size_t added = 0;
    std::deque<std::size_t> todo{insert(s, std::move(gens))};
    ++added;
    while (!todo.empty()) {
      std::size_t id = todo.front();
      todo.pop_front();
      for (auto x : g_.generators()) {
        ElementSet c = conjugate(subs_[id].elements, x);
        if (find(c))
          continue;
        std::vector<std::uint32_t> cg;
        for (auto y : subs_[id].generators)
          cg.push_back(g_.mul(g_.mul(x, y), g_.inv(x)));
        todo.push_back(insert(c, std::move(cg)));
        ++added;
      }
    }
    return added;
  }

  std::size_t insert(const ElementSet& s, std::vector<std::uint32_t> gens) {
    SubgroupRecord r;
    r.elements = s;
    r.order = s.count();
    r.generators = std::move(gens);
    subs_.push_back(std::move(r));
    index_[s.hash()].push_back(subs_.size() - 1);
    return subs_.size() - 1;
  }

  // One representative per conjugacy class among the current subgroups.
  std::vector<std::size_t> class_representatives() const {
    std::vector<std::size_t> reps;
    std::vector<bool> seen(subs_.size(), false);
    for (std::size_t i = 0; i < subs_.size(); ++i) {
      if (seen[i])
        continue;
      reps.push_back(i);
      std::deque<std::size_t> todo{i};
      seen[i] = true;
      while (!todo.empty()) {
        std::size_t id = todo.front();
        todo.pop_front();
        for (auto x : g_.generators()) {
          auto c = find(conjugate(subs_[id].elements, x));
          if (c && !seen[*c]) {
            seen[*c] = true;
            todo.push_back(*c);
          }
        }
      }
    }
    return reps;
  }

  // Joins every class representative with every subgroup present at the
  // start of the round; returns the number of subgroups added.
  std::size_t join_round() {
    std::vector<std::size_t> reps = class_representatives();
    std::size_t n = subs_.size();
    std::size_t added = 0;
    for (auto r : reps) {
      for (std::size_t s = 0; s < n; ++s) {
        const ElementSet& a = subs_[r].elements;
        const ElementSet& b = subs_[s].elements;
        if (a.subset_of(b) || b.subset_of(a))
          continue;
        std::vector<std::uint32_t> gens = subs_[r].generators;
        gens.insert(gens.end(), subs_[s].generators.begin(), subs_[s].generators.end());
        auto j = closure(gens);
        if (!j)
          continue;  // G itself is already present
        if (!find(*j))
          added += add_class(*j, std::move(gens));
      }
    }
    return added;
  }

  std::vector<SubgroupRecord>& subgroups() { return subs_; }
  const std::vector<SubgroupRecord>& subgroups() const { return subs_; }

private:
  const Psl2Group& g_;
  std::size_t limit_;
  std::vector<SubgroupRecord> subs_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> index_;
};

void seed_cyclic(const Psl2Group& g, LatticeBuilder& b) {
  b.add_class(b.whole(), g.generators());
  for (std::uint32_t x = 0; x < g.order(); ++x) {
    auto c = b.closure({x});
    if (c && !b.find(*c))
      b.insert(*c, x == g.identity() ? std::vector<std::uint32_t>{} : std::vector<std::uint32_t>{x});
  }
}

}  // namespace

SubgroupLattice subgroup_lattice(const Psl2Group& g) {
  if (g.order() > max_oracle_group_order())
    throw OracleRangeError("group of order " + std::to_string(g.order()) +
                           " exceeds the oracle bound");
  LatticeBuilder b(g);
  seed_cyclic(g, b);
  SubgroupLattice lat;
  do {
    ++lat.join_rounds;
  } while (b.join_round() > 0);

  auto& subs = b.subgroups();
  std::sort(subs.begin(), subs.end(), [](const SubgroupRecord& x, const SubgroupRecord& y) {
    return x.order != y.order ? x.order < y.order : x.elements < y.elements;
  });
  lat.subgroups = std::move(subs);

  LatticeBuilder again(g);
  for (const auto& r : lat.subgroups)
    again.insert(r.elements, r.generators);
  std::vector<std::size_t> reps = again.class_representatives();

  std::vector<std::size_t> class_of(lat.subgroups.size(), SIZE_MAX);
  for (auto rep : reps) {
    SubgroupClass c;
    c.representative = rep;
    c.order = lat.subgroups[rep].order;
    std::size_t cid = lat.classes.size();
    std::deque<std::size_t> todo{rep};
    class_of[rep] = cid;
    while (!todo.empty()) {
      std::size_t id = todo.front();
      todo.pop_front();
      ++c.size;
      for (auto x : g.generators()) {
        auto other = again.find(again.conjugate(lat.subgroups[id].elements, x));
        if (other && class_of[*other] == SIZE_MAX) {
          class_of[*other] = cid;
          todo.push_back(*other);
        }
      }
    }
    for (auto e : lat.subgroups[rep].elements.members())
      ++c.signature[g.element_order(e)];
    bool proper = c.order < g.order();
    bool covered = false;
    for (const auto& s : lat.subgroups)
      if (s.order > c.order && s.order < g.order() &&
          lat.subgroups[rep].elements.subset_of(s.elements)) {
        covered = true;
        break;
      }
    c.is_maximal = proper && !covered;
    lat.classes.push_back(std::move(c));
  }
  for (std::size_t i = 0; i < lat.subgroups.size(); ++i) {
    lat.subgroups[i].class_id = class_of[i];
    lat.subgroups[i].is_maximal = lat.classes[class_of[i]].is_maximal;
  }
  return lat;
}

std::size_t extra_join_round(const Psl2Group& g, const SubgroupLattice& lat) {
  LatticeBuilder b(g);
  for (const auto& r : lat.subgroups)
    b.insert(r.elements, r.generators);
  return b.join_round();
}

std::vector<SubgroupRecord> maximal_subgroups(const SubgroupLattice& lat) {
  std::vector<SubgroupRecord> out;
  for (const auto& s : lat.subgroups)
    if (s.is_maximal)
      out.push_back(s);
  return out;
}

std::vector<SubgroupClass> maximal_classes(const SubgroupLattice& lat) {
  std::vector<SubgroupClass> out;
  for (const auto& c : lat.classes)
    if (c.is_maximal)
      out.push_back(c);
  return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> coprime_pairs_bruteforce(
    const std::vector<SubgroupClass>& maximals) {
  std::vector<const SubgroupClass*> types;
  for (const auto& c : maximals) {
    bool dup = std::any_of(types.begin(), types.end(), [&](const SubgroupClass* t) {
      return t->order == c.order && t->signature == c.signature;
    });
    if (!dup)
      types.push_back(&c);
  }
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  for (std::size_t i = 0; i < types.size(); ++i)
    for (std::size_t j = i + 1; j < types.size(); ++j) {
      std::uint64_t a = types[i]->order, b = types[j]->order;
      if (std::gcd(a, b) != 1)
        continue;
      if (a % 2 == 0 || (b % 2 == 1 && b < a))
        std::swap(a, b);
      out.emplace_back(a, b);
    }
  std::sort(out.begin(), out.end());
  return out;
}

CrossCheckReport cross_check(unsigned q) {
  CrossCheckReport r;
  r.q = q;
  Psl2Group g = build_psl2(q);
  SubgroupLattice lat = subgroup_lattice(g);
  r.group_order = g.order();
  r.subgroup_count = lat.subgroups.size();
  r.class_count = lat.classes.size();
  auto maxc = maximal_classes(lat);
  for (const auto& c : maxc)
    r.maximal_class_orders.push_back(c.order);
  std::sort(r.maximal_class_orders.begin(), r.maximal_class_orders.end());
  r.oracle_pairs = coprime_pairs_bruteforce(maxc);

  ClassifierVerdict v = classify_psl2(q);
  for (const auto& p : v.pairs)
    r.classifier_pairs.emplace_back(p.H().order.value().get_ui(), p.M().order.value().get_ui());
  std::sort(r.classifier_pairs.begin(), r.classifier_pairs.end());
  r.agree = r.oracle_pairs == r.classifier_pairs;
  return r;
}

}  // namespace coprimemax::oracle
