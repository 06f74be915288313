#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace actinf {

enum class Kind { post, retweet, mention };

const char* to_string(Kind k);
std::optional<Kind> kind_from_string(const std::string& s);

/// Thrown when a hazard exponent leaves the representable range.
struct SaturationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Static directed follower graph over n accounts.
///
/// Orientation contract: edge(i, j) == true means account j follows
/// account i, so content posted by i reaches j. This is fixed by the
/// influence definition (the per-follower hazard contributions of i sum
/// over exactly these edges) and must not be flipped.
class FollowersNetwork {
 public:
  FollowersNetwork() = default;
  explicit FollowersNetwork(int n);
  FollowersNetwork(int n, std::vector<std::string> labels);

  int size() const { return n_; }

  bool edge(int influencer, int follower) const {
    return adj_[static_cast<std::size_t>(influencer) * n_ + follower] != 0;
  }
  /// Adds (or removes) the edge "follower follows influencer".
  /// Self-edges are rejected.
  void set_edge(int influencer, int follower, bool present = true);

  /// Accounts that follow `influencer` (ascending index).
  const std::vector<int>& followers_of(int influencer) const {
    return followers_[influencer];
  }
  /// Accounts that `follower` follows (ascending index).
  const std::vector<int>& followees_of(int follower) const {
    return followees_[follower];
  }
  int follower_count(int influencer) const {
    return static_cast<int>(followers_[influencer].size());
  }
  std::size_t edge_count() const;

  const std::string& label(int account) const { return labels_[account]; }
  void set_label(int account, std::string label);
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int n_ = 0;
  std::vector<std::uint8_t> adj_;             // row i, column j: j follows i
  std::vector<std::vector<int>> followers_;   // per influencer
  std::vector<std::vector<int>> followees_;   // per follower
  std::vector<std::string> labels_;
};

/// One platform action. Times are real-valued day offsets.
struct Event {
  double time = 0.0;
  int account = -1;  // 0-based
  int topic = -1;    // 0-based
  Kind kind = Kind::post;
  std::optional<int> target;  // retweet/mention only; not used by the model

  bool is_response() const { return kind != Kind::post; }
};

/// Validated, (topic, time, account)-sorted action log.
///
/// Construction rejects out-of-range indices, times outside [0, horizon],
/// posts carrying targets, and duplicate retweet/mention timestamps within
/// a topic (the estimation theory requires distinct response times per
/// topic; ties across topics are fine).
class EventLog {
 public:
  EventLog(std::vector<Event> events, double horizon, int topic_count,
           int account_count);

  const std::vector<Event>& events() const { return events_; }
  double horizon() const { return horizon_; }
  int topic_count() const { return topic_count_; }
  int account_count() const { return account_count_; }
  std::size_t response_event_count() const { return response_count_; }

 private:
  std::vector<Event> events_;
  double horizon_ = 0.0;
  int topic_count_ = 0;
  int account_count_ = 0;
  std::size_t response_count_ = 0;
};

/// Response/susceptibility parameters. alpha[0] is pinned to zero for
/// identification; the free coordinates are [alpha_2..alpha_n, beta_1..beta_n].
struct ParamVector {
  std::vector<double> alpha;
  std::vector<double> beta;

  ParamVector() = default;
  explicit ParamVector(int n) : alpha(n, 0.0), beta(n, 0.0) {}

  int size() const { return static_cast<int>(alpha.size()); }
  void validate() const;  // throws on non-finite entries or alpha[0] != 0
};

inline int free_dimension(int n) { return 2 * n - 1; }

std::vector<double> pack_free(const ParamVector& params);
ParamVector unpack_free(const std::vector<double>& free, int n);

class ActivityIndex;

/// Cox-type hazard of account `account` on `topic` at time t:
///   baseline * exp(sum over followees i of (alpha_i + beta_account) *
///                  log(M_i(t-, topic) + 1))
/// where M_i counts all of i's actions strictly before t. Throws
/// SaturationError when |exponent| > 700.
double hazard_rate(const ParamVector& params, const FollowersNetwork& network,
                   const ActivityIndex& index, int account, int topic, double t,
                   double baseline);

}  // namespace actinf
