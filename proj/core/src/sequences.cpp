#include "chromcon/sequences.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace chromcon {

int WeightedClass::total_weight() const {
  return std::accumulate(weights.begin(), weights.end(), 0);
}

std::vector<int> FitSequence::cumulative_weights() const {
  std::vector<int> out;
  out.reserve(terms.size());
  int acc = 0;
  for (const FitTerm& t : terms) out.push_back(acc += t.weight);
  return out;
}

int FitSequence::total_weight() const {
  int acc = 0;
  for (const FitTerm& t : terms) acc += t.weight;
  return acc;
}

bool is_fit_sequence(const FitSequence& s, int k) {
  for (const FitTerm& t : s.terms)
    if (t.vertices.empty() || t.weight < 0 || t.weight >= k) return false;
  return true;
}

std::vector<std::vector<std::size_t>> partition_bounded_indices(const std::vector<int>& values,
                                                                int k, int q) {
  if (k < 1 || q < 1) throw std::invalid_argument("partition_bounded: need k >= 1 and q >= 1");
  long long sum = 0;
  for (int a : values) {
    if (a < 0 || a > k)
      throw std::invalid_argument("partition_bounded: element " + std::to_string(a) +
                                  " outside [0, k]");
    sum += a;
  }
  if (sum < static_cast<long long>(q) * k || sum >= static_cast<long long>(q + 1) * k)
    throw std::invalid_argument("partition_bounded: sum must satisfy qk <= sum < (q+1)k");

  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (values[a] != values[b]) return values[a] > values[b];
    return a < b;
  });

  // Peel the last part off a minimal descending prefix of sum >= (part-1)k,
  // then recurse on the prefix; done iteratively from part q down to 2.
  std::vector<std::vector<std::size_t>> parts(static_cast<std::size_t>(q));
  std::vector<std::size_t> remaining = order;
  for (int part = q; part >= 2; --part) {
    long long prefix_sum = 0;
    std::size_t cut = 0;
    while (cut < remaining.size() && prefix_sum < static_cast<long long>(part - 1) * k)
      prefix_sum += values[remaining[cut++]];
    parts[static_cast<std::size_t>(part - 1)].assign(remaining.begin() + cut, remaining.end());
    remaining.resize(cut);
  }
  parts[0] = std::move(remaining);

  for (const auto& part : parts) {
    if (part.empty()) throw std::logic_error("partition_bounded: produced an empty part");
    long long part_sum = 0;
    for (std::size_t i : part) part_sum += values[i];
    if (part_sum >= 2LL * k) throw std::logic_error("partition_bounded: part sum reached 2k");
  }
  return parts;
}

std::vector<std::vector<int>> partition_bounded(const std::vector<int>& values, int k, int q) {
  const auto parts = partition_bounded_indices(values, k, q);
  std::vector<std::vector<int>> out;
  out.reserve(parts.size());
  for (const auto& part : parts) {
    std::vector<int> vals;
    vals.reserve(part.size());
    for (std::size_t i : part) vals.push_back(values[i]);
    out.push_back(std::move(vals));
  }
  return out;
}

namespace {

void check_class(const WeightedClass& p, int k) {
  if (k < 1) throw std::invalid_argument("weighted class: need k >= 1");
  if (p.vertices.empty()) throw std::invalid_argument("weighted class: empty class");
  if (p.vertices.size() != p.weights.size())
    throw std::invalid_argument("weighted class: vertex/weight size mismatch");
  for (int w : p.weights)
    if (w < 0 || w >= k)
      throw std::invalid_argument("weighted class: weight " + std::to_string(w) +
                                  " outside [0, k); template not good");
}

std::vector<bool> jump_tags(const FitSequence& s, int k) {
  std::vector<bool> tags;
  tags.reserve(s.terms.size());
  int prev = 0, acc = 0;
  for (const FitTerm& t : s.terms) {
    acc += t.weight;
    const int diff = acc / k - prev / k;
    if (diff != 0 && diff != 1)
      throw std::logic_error("jump tags: cumulative quotient moved by more than one");
    tags.push_back(diff == 1);
    prev = acc;
  }
  return tags;
}

}  // namespace

FitSequence fit_singletons(const WeightedClass& p, int k) {
  check_class(p, k);
  std::vector<std::size_t> order(p.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return p.vertices[a] < p.vertices[b]; });
  FitSequence s;
  for (std::size_t i : order) s.terms.push_back({{p.vertices[i]}, p.weights[i]});
  return s;
}

FitSequence critical_sequence(const WeightedClass& p, int k) {
  check_class(p, k);
  std::vector<std::size_t> order(p.vertices.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (p.weights[a] != p.weights[b]) return p.weights[a] < p.weights[b];
    return p.vertices[a] < p.vertices[b];
  });
  FitSequence s;
  for (std::size_t i : order) s.terms.push_back({{p.vertices[i]}, p.weights[i]});

  for (;;) {
    const std::vector<bool> tags = jump_tags(s, k);
    std::size_t merge_at = s.terms.size();
    for (std::size_t j = 0; j + 1 < tags.size(); ++j) {
      if (!tags[j] && !tags[j + 1]) {
        merge_at = j;
        break;
      }
    }
    if (merge_at == s.terms.size()) break;
    FitTerm merged;
    std::merge(s.terms[merge_at].vertices.begin(), s.terms[merge_at].vertices.end(),
               s.terms[merge_at + 1].vertices.begin(), s.terms[merge_at + 1].vertices.end(),
               std::back_inserter(merged.vertices));
    merged.weight = s.terms[merge_at].weight + s.terms[merge_at + 1].weight;
    if (merged.weight >= k)
      throw std::logic_error("critical_sequence: merged consecutive non-jumps reached weight k");
    s.terms.erase(s.terms.begin() + static_cast<std::ptrdiff_t>(merge_at),
                  s.terms.begin() + static_cast<std::ptrdiff_t>(merge_at) + 2);
    s.terms.insert(s.terms.begin() + static_cast<std::ptrdiff_t>(merge_at), merged);
    std::stable_sort(s.terms.begin(), s.terms.end(),
                     [](const FitTerm& a, const FitTerm& b) { return a.weight < b.weight; });
  }

  // Structural identities of critical sequences.
  const JumpProfile prof = jump_profile(s, k);
  const int n = static_cast<int>(s.terms.size());
  const int total = s.total_weight();
  const int ell = static_cast<int>(prof.landmarks.size());
  if (ell != n - total / k)
    throw std::logic_error("critical_sequence: landmark count != n - floor(w/k)");
  const auto cum = s.cumulative_weights();
  for (int r = 0; r < ell; ++r) {
    const int q = prof.landmarks[r];
    const int pos = prof.landmark_positions[r];  // 1-based
    if (r > 0 && prof.landmarks[r - 1] >= q)
      throw std::logic_error("critical_sequence: landmarks not strictly increasing");
    if (pos != q + r + 1) throw std::logic_error("critical_sequence: landmark position mismatch");
    if (!(q * k <= cum[pos - 1] && cum[pos - 1] < (q + 1) * k))
      throw std::logic_error("critical_sequence: landmark window bound violated");
  }
  int trailing_jumps = 0;
  for (int j = prof.landmark_positions.back(); j < n; ++j)
    if (prof.is_jump[static_cast<std::size_t>(j)]) ++trailing_jumps;
  if (trailing_jumps != total / k - prof.landmarks.back())
    throw std::logic_error("critical_sequence: trailing jump count mismatch");
  return s;
}

JumpProfile jump_profile(const FitSequence& s, int k) {
  if (k < 1) throw std::invalid_argument("jump_profile: need k >= 1");
  if (!is_fit_sequence(s, k)) throw std::invalid_argument("jump_profile: not a fit sequence");
  JumpProfile prof;
  prof.is_jump = jump_tags(s, k);
  int acc = 0;
  for (std::size_t j = 0; j < s.terms.size(); ++j) {
    acc += s.terms[j].weight;
    if (prof.is_jump[j]) {
      ++prof.jump_count;
    } else {
      prof.landmarks.push_back(acc / k);
      prof.landmark_positions.push_back(static_cast<int>(j) + 1);
    }
  }
  const int total = acc;
  if (!s.terms.empty()) {
    if (prof.is_jump.front())
      throw std::logic_error("jump_profile: first term cannot be a jump");
    if (prof.jump_count != total / k)
      throw std::logic_error("jump_profile: jump count != floor(w/k)");
    for (int q : prof.landmarks)
      if (q > total / k) throw std::logic_error("jump_profile: landmark exceeds floor(w/k)");
  }
  return prof;
}

}  // namespace chromcon
