// Copyright 2026 The qdouble Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qdouble/heckerep.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qdouble {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be weakly decreasing");
  }
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int k) {
  if (k < 0) throw std::invalid_argument("partitions_of: negative weight");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(k, k, cur, out);
  return out;
}

std::vector<Partition> partitions_of(int k, int max_length) {
  std::vector<Partition> out;
  for (auto& p : partitions_of(k))
    if (p.length() <= max_length) out.push_back(std::move(p));
  return out;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    parts.push_back(std::stoi(item));
  }
  return Partition(std::move(parts));
}

long weyl_dimension(const Partition& lambda, int n) {
  if (lambda.length() > n) return 0;
  // prod_{i<j} (l_i - l_j + j - i) / (j - i), accumulated exactly.
  mpq_class d = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) d *= mpq_class(lambda.part(i) - lambda.part(j) + j - i, j - i);
  d.canonicalize();
  return d.get_num().get_si();
}

long hook_length_count(const Partition& lambda) {
  const int k = lambda.weight();
  mpz_class num = 1;
  for (int i = 2; i <= k; ++i) num *= i;
  mpz_class hooks = 1;
  for (int r = 1; r <= lambda.length(); ++r)
    for (int c = 1; c <= lambda.part(r); ++c) {
      int below = 0;
      for (int rr = r + 1; rr <= lambda.length() && lambda.part(rr) >= c; ++rr) ++below;
      hooks *= lambda.part(r) - c + below + 1;
    }
  return mpz_class(num / hooks).get_si();
}

StandardTableau::StandardTableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  for (const auto& r : rows_) size_ += static_cast<int>(r.size());
  position_.assign(static_cast<std::size_t>(size_), {-1, -1});
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty()) throw std::invalid_argument("StandardTableau: empty row");
    if (r > 0 && rows_[r].size() > rows_[r - 1].size())
      throw std::invalid_argument("StandardTableau: rows must weakly decrease");
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int e = rows_[r][c];
      if (e < 1 || e > size_ || position_[static_cast<std::size_t>(e - 1)].first >= 0)
        throw std::invalid_argument("StandardTableau: entries must be a permutation of 1..k");
      position_[static_cast<std::size_t>(e - 1)] = {static_cast<int>(r), static_cast<int>(c)};
      if (c > 0 && rows_[r][c - 1] >= e) throw std::invalid_argument("StandardTableau: rows must increase");
      if (r > 0 && rows_[r - 1][c] >= e) throw std::invalid_argument("StandardTableau: columns must increase");
    }
  }
}

Partition StandardTableau::shape() const {
  std::vector<int> parts;
  for (const auto& r : rows_) parts.push_back(static_cast<int>(r.size()));
  return Partition(std::move(parts));
}

int StandardTableau::content(int entry) const {
  if (entry < 1 || entry > size_) throw std::out_of_range("StandardTableau::content: bad entry");
  const auto [r, c] = position_[static_cast<std::size_t>(entry - 1)];
  return c - r;
}

std::vector<int> StandardTableau::addable_contents(int m) const {
  std::vector<int> row_len;
  for (int e = 1; e <= m; ++e) {
    const auto [r, c] = position_[static_cast<std::size_t>(e - 1)];
    if (static_cast<int>(row_len.size()) <= r) row_len.resize(static_cast<std::size_t>(r) + 1, 0);
    row_len[static_cast<std::size_t>(r)] = std::max(row_len[static_cast<std::size_t>(r)], c + 1);
  }
  std::vector<int> out;
  for (std::size_t r = 0; r <= row_len.size(); ++r) {
    const int len = r < row_len.size() ? row_len[r] : 0;
    if (r == 0 || len < row_len[r - 1]) out.push_back(len - static_cast<int>(r));
  }
  return out;
}

std::string StandardTableau::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    os << (r ? "|" : "");
    for (std::size_t c = 0; c < rows_[r].size(); ++c) os << (c ? "," : "") << rows_[r][c];
  }
  os << "]";
  return os.str();
}

namespace {

// Removes the box holding the largest entry, recursing on the smaller shape;
// corners are visited top to bottom.
void tableaux_rec(std::vector<int> shape, int k, std::vector<std::vector<int>>& fill,
                  std::vector<StandardTableau>& out) {
  if (k == 0) {
    out.emplace_back(fill);
    return;
  }
  for (std::size_t r = 0; r < shape.size(); ++r) {
    const bool corner = shape[r] > 0 && (r + 1 == shape.size() || shape[r + 1] < shape[r]);
    if (!corner) continue;
    fill[r][static_cast<std::size_t>(shape[r] - 1)] = k;
    --shape[r];
    tableaux_rec(shape, k - 1, fill, out);
    ++shape[r];
  }
}

}  // namespace

std::vector<StandardTableau> standard_tableaux(const Partition& lambda) {
  if (lambda.weight() == 0) throw std::invalid_argument("standard_tableaux: empty partition");
  std::vector<std::vector<int>> fill;
  for (int p : lambda.parts()) fill.emplace_back(static_cast<std::size_t>(p), 0);
  std::vector<StandardTableau> out;
  tableaux_rec(lambda.parts(), lambda.weight(), fill, out);
  return out;
}

namespace {

std::string nk(int n, int k) { return " N=" + std::to_string(n) + " k=" + std::to_string(k); }

}  // namespace

VerificationReport verify_heckerep(int max_n, int max_k) {
  VerificationReport rep;
  rep.suite = "heckerep";
  for (int n = 1; n <= max_n; ++n) {
    const auto r = standard_hecke(n);
    const Scalar q = r.q();
    for (int k = 1; k <= max_k; ++k) {
      const auto tag = nk(n, k);
      const auto id = TensorOperator<Scalar>::identity(n, k);
      const auto jm = jucys_murphy(r, k);
      rep.add(timed_check([&] {
        bool ok = true;
        for (std::size_t i = 0; i < jm.size(); ++i)
          for (std::size_t j = i + 1; j < jm.size(); ++j) ok = ok && jm[i] * jm[j] == jm[j] * jm[i];
        return make_check("Jucys-Murphy commute" + tag, "Section 3 J recursion", ok, ok ? "" : "J_i J_j != J_j J_i");
      }));
      rep.add(timed_check([&] {
        const auto a = skew_symmetrizer(r, k);
        bool ok = a * a == a;
        std::string w = ok ? "" : "A^2 != A";
        const Scalar mq = Scalar(-1) / q;
        for (int i = 1; i < k && ok; ++i) {
          const auto ri = r.lift(k, i);
          ok = a * ri == mq * a && ri * a == mq * a;
          if (!ok) w = "A R_" + std::to_string(i) + " != -q^-1 A";
        }
        return make_check("skew-symmetrizer idempotent and skew" + tag, "Section 3 A recursion", ok, w);
      }));
      rep.add(timed_check([&] {
        const auto fam = idempotent_family(r, k);
        TensorOperator<Scalar> sum(n, k);
        std::string w;
        for (std::size_t a = 0; a < fam.members.size(); ++a) {
          const auto& [t, p] = fam.members[a];
          sum = sum + p;
          for (std::size_t b = 0; b < fam.members.size(); ++b)
            if (a != b && !(p * fam.members[b].second).is_zero() && w.empty())
              w = "P_T P_T' != 0 for " + t.str() + ", " + fam.members[b].first.str();
          for (int i = 1; i <= k && w.empty(); ++i)
            if (!(jm[static_cast<std::size_t>(i - 1)] * p == power(q, 2 * t.content(i)) * p))
              w = "J_" + std::to_string(i) + " eigenvalue on " + t.str();
        }
        if (w.empty() && !(sum == id)) w = "sum of P_T != I";
        auto rec = make_check("idempotents complete, orthogonal, J-diagonal" + tag, "Section 3 idempotents", w.empty(), w);
        rec.details.emplace_back("tableaux", std::to_string(fam.members.size()));
        return rec;
      }));
      rep.add(timed_check([&] {
        // Ranks at q = 1 from the symbolic projectors against the Weyl formula.
        const auto fam = idempotent_family(r, k);
        std::string w;
        for (const auto& [t, p] : fam.members) {
          try {
            const long got = static_cast<long>(evaluate(p, Rational(1)).rank());
            const long want = weyl_dimension(t.shape(), n);
            if (got != want && w.empty())
              w = t.str() + ": rank " + std::to_string(got) + ", Weyl " + std::to_string(want);
          } catch (const std::exception& e) {
            if (w.empty()) w = t.str() + ": " + e.what();
          }
        }
        return make_check("projector ranks at q=1 match Weyl dimensions" + tag, "Section 3 idempotents", w.empty(), w);
      }));
    }
    rep.add(timed_check([&] {
      const auto a = skew_symmetrizer(r, n);
      const auto a1 = skew_symmetrizer(r, n + 1);
      const bool ok = a.rank() == 1 && a1.is_zero();
      return make_check("rank A^(N) = 1, A^(N+1) = 0 N=" + std::to_string(n), "Eq. (4.2)", ok,
                        ok ? "" : "rank " + std::to_string(a.rank()));
    }));
  }
  return rep;
}

}  // namespace qdouble
