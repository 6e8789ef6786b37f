#include "masq/matching.hpp"

#include <algorithm>

namespace masq {

BalanceResult check_balanced_epoch(const std::vector<TokenId>& adversary_tokens,
                                   const std::vector<TokenId>& user_tokens) {
    BalanceResult r;
    std::size_t u = 0;
    std::size_t last_match_end = 0;  // index one past the last consumed user token
    for (TokenId a : adversary_tokens) {
        while (u < user_tokens.size() && user_tokens[u] <= a) ++u;
        if (u == user_tokens.size()) {
            r.balanced = false;
            r.witness = a;
            r.mapping.clear();
            return r;
        }
        r.mapping.emplace_back(a, user_tokens[u]);
        ++u;
        last_match_end = u;
    }
    r.balanced = true;
    r.unmatched_tail = static_cast<double>(user_tokens.size() - last_match_end);
    return r;
}

RleBalance check_balanced_timeline(const std::vector<OwnerRun>& timeline) {
    RleBalance r;
    double deficit = 0;  // adversary tokens awaiting a later user token
    double tail = 0;     // user tokens since the last consumed match
    for (const auto& run : timeline) {
        if (run.owner == Party::Adversary) {
            deficit += run.count;
        } else {
            double consumed = std::min(deficit, run.count);
            deficit -= consumed;
            if (consumed > 0) tail = run.count - consumed;
            else tail += run.count;
        }
    }
    r.deficit = deficit;
    r.balanced = deficit == 0;
    r.unmatched_tail = tail;
    return r;
}

}  // namespace masq
