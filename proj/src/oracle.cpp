#include "rsee/oracle.hpp"

#include <limits>
#include <stdexcept>

namespace rsee {

namespace {

class Search {
 public:
  Search(const CodeParams& params, const ReceivedWord& received)
      : field_(params.field()), received_(received), n_(params.n()), k_(params.k()) {
    rows_.assign(k_, std::vector<Element>(n_));
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        rows_[i][j] = field_.alpha_pow(static_cast<std::int64_t>(i * j));
      }
    }
    partial_.assign(k_ + 1, std::vector<Element>(n_));
    digits_.assign(k_, Element::zero());
    for (std::size_t j = 0; j < n_; ++j) unerased_.push_back(!received.is_erased(j));
  }

  NearestCodeword run() {
    descend(0);
    return {best_, best_distance_, minimizers_};
  }

 private:
  void descend(std::size_t level) {
    if (level == k_) {
      score();
      return;
    }
    const auto& base = partial_[level];
    auto& next = partial_[level + 1];
    for (std::uint32_t v = 0; v < field_.size(); ++v) {
      const Element coeff{v};
      digits_[level] = coeff;
      for (std::size_t j = 0; j < n_; ++j) {
        next[j] = Field::add(base[j], field_.mul(coeff, rows_[level][j]));
      }
      descend(level + 1);
    }
  }

  void score() {
    const auto& word = partial_[k_];
    std::size_t dist = 0;
    for (std::size_t j = 0; j < n_ && dist <= best_distance_; ++j) {
      if (unerased_[j] && word[j] != received_.symbols()[j]) ++dist;
    }
    if (dist < best_distance_) {
      best_distance_ = dist;
      best_ = digits_;
      minimizers_ = 1;
    } else if (dist == best_distance_) {
      ++minimizers_;
    }
  }

  const Field& field_;
  const ReceivedWord& received_;
  std::size_t n_;
  std::size_t k_;
  std::vector<std::vector<Element>> rows_;
  std::vector<std::vector<Element>> partial_;
  std::vector<bool> unerased_;
  Message digits_;
  Message best_;
  std::size_t best_distance_ = std::numeric_limits<std::size_t>::max();
  std::size_t minimizers_ = 0;
};

}  // namespace

NearestCodeword nearest_codeword(const CodeParams& params, const ReceivedWord& received) {
  if (received.size() != params.n()) throw std::domain_error("received word length != n");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < params.k(); ++i) {
    count *= params.field().size();
    if (count > kOracleMaxCodewords) {
      throw std::domain_error("code too large for brute-force decoding; use the property tests");
    }
  }
  UncountedScope quiet;
  return Search(params, received).run();
}

DecodeResult oracle_decode(const CodeParams& params, const ReceivedWord& received) {
  auto nearest = nearest_codeword(params, received);
  if (nearest.minimizers != 1) return DecodeResult::failure(FailureCause::Ambiguous);
  return DecodeResult::success(std::move(nearest.message), {}, {});
}

}  // namespace rsee
