#include "masq/protocol.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace masq {

const char* violation_name(Violation v) {
    switch (v) {
        case Violation::Ok: return "Ok";
        case Violation::OutOfOrder: return "OutOfOrder";
        case Violation::DoubleSpend: return "DoubleSpend";
        case Violation::UnconfirmedToken: return "UnconfirmedToken";
        case Violation::Expired: return "Expired";
        case Violation::CapExceeded: return "CapExceeded";
        case Violation::TokenizedAfterPlain: return "TokenizedAfterPlain";
        case Violation::UnknownToken: return "UnknownToken";
        case Violation::WrongOwner: return "WrongOwner";
    }
    return "?";
}

TokenId Ledger::fresh_id() {
    if (order_ == TokenOrder::WorstCaseSequential) return next_id_++;
    // Lottery mode: uniform draw, retried on collision. next_id_ still tracks
    // the issue count so snapshots stay meaningful.
    for (;;) {
        TokenId id = (lottery_.next_u64() >> 16) + 1;  // 48-bit space, nonzero
        if (registry_.find(id) == registry_.end()) {
            ++next_id_;
            return id;
        }
    }
}

std::vector<TokenId> Ledger::issue_tokens(Party party, std::int64_t count, Round round,
                                          Money token_cost, Round expiry_rounds) {
    if (count < 0) throw std::invalid_argument("issue_tokens: negative count");
    if (count == 0) return {};
    const Money cost = token_cost * count;
    if (cost > liquid(party)) throw std::runtime_error("InsufficientFunds");
    std::vector<TokenId> ids;
    ids.reserve(static_cast<std::size_t>(count));
    for (std::int64_t i = 0; i < count; ++i) {
        Token t;
        t.id = fresh_id();
        t.owner = party;
        t.purchase_round = round;
        if (expiry_rounds > 0) {
            t.expiry_round = round + expiry_rounds;
            expiry_index_.emplace(t.expiry_round, t.id);
        }
        registry_.emplace(t.id, t);
        ids.push_back(t.id);
    }
    funds(party).liquid -= cost;
    funds(party).locked += cost;
    return ids;
}

void Ledger::spend_token(TokenId id, Round round, Money token_cost, bool refund) {
    auto it = registry_.find(id);
    if (it == registry_.end()) throw std::runtime_error("spend_token: unknown token");
    Token& t = it->second;
    if (t.spent() || t.expired) throw std::runtime_error("spend_token: token not spendable");
    t.spent_round = round;
    funds(t.owner).locked -= token_cost;
    if (refund) funds(t.owner).liquid += token_cost;
}

std::vector<TokenId> Ledger::expire_tokens(Round round, Money token_cost) {
    std::vector<TokenId> burned;
    auto end = expiry_index_.upper_bound(round);
    for (auto it = expiry_index_.begin(); it != end; ++it) {
        Token& t = registry_.at(it->second);
        if (t.spent() || t.expired) continue;
        t.expired = true;
        funds(t.owner).locked -= token_cost;
        burned.push_back(t.id);
    }
    expiry_index_.erase(expiry_index_.begin(), end);
    return burned;
}

std::vector<TokenId> Ledger::owned_unspent(Party party) const {
    std::vector<TokenId> out;
    for (const auto& [id, t] : registry_)
        if (t.owner == party && !t.spent() && !t.expired) out.push_back(id);
    return out;  // map iteration order is ascending already
}

std::string Ledger::snapshot() const {
    std::ostringstream os;
    for (const auto& [id, t] : registry_) {
        os << id << ',' << party_name(t.owner) << ',' << t.purchase_round << ','
           << (t.spent() ? 1 : 0) << ',' << t.expiry_round << '\n';
    }
    return os.str();
}

BuildResult build_block(Round round, const std::vector<Transaction>& candidates,
                        std::int64_t cap) {
    BuildResult out;
    out.block.round = round;
    std::vector<Transaction> tokenized, rest;
    for (const auto& tx : candidates) {
        if (tx.kind == TxKind::TokenizedMev) tokenized.push_back(tx);
        else rest.push_back(tx);
    }
    std::sort(tokenized.begin(), tokenized.end(),
              [](const Transaction& a, const Transaction& b) { return a.token_id < b.token_id; });
    if (cap > 0 && static_cast<std::int64_t>(tokenized.size()) > cap) {
        out.dropped.assign(tokenized.begin() + cap, tokenized.end());
        tokenized.resize(static_cast<std::size_t>(cap));
    }
    out.block.transactions = std::move(tokenized);
    out.block.transactions.insert(out.block.transactions.end(), rest.begin(), rest.end());
    return out;
}

Violation validate_block(const Block& block, const Ledger& ledger, std::int64_t cap) {
    bool seen_plain = false;
    std::int64_t tokenized_count = 0;
    TokenId prev_id = 0;
    std::set<TokenId> seen_in_block;
    for (const auto& tx : block.transactions) {
        if (tx.kind != TxKind::TokenizedMev) {
            seen_plain = true;
            continue;
        }
        if (seen_plain) return Violation::TokenizedAfterPlain;
        ++tokenized_count;
        if (cap > 0 && tokenized_count > cap) return Violation::CapExceeded;
        if (tokenized_count > 1 && tx.token_id <= prev_id) return Violation::OutOfOrder;
        prev_id = tx.token_id;
        const auto& reg = ledger.registry();
        auto it = reg.find(tx.token_id);
        if (it == reg.end()) return Violation::UnknownToken;
        const Token& t = it->second;
        if (!seen_in_block.insert(tx.token_id).second || t.spent()) return Violation::DoubleSpend;
        if (t.expired || (t.expiry_round > 0 && t.expiry_round <= block.round))
            return Violation::Expired;
        if (t.purchase_round >= block.round) return Violation::UnconfirmedToken;
        if (t.owner != tx.submitter) return Violation::WrongOwner;
    }
    return Violation::Ok;
}

}  // namespace masq
