// Token registry, transaction and block types, and the token-number
// ordering rule: within a block every tokenized transaction precedes every
// non-tokenized one, and tokenized transactions are sorted by strictly
// ascending token id.
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "masq/currency.hpp"
#include "masq/rng.hpp"

namespace masq {

using TokenId = std::uint64_t;
using Round = std::int64_t;

enum class Party : std::uint8_t { User = 0, Adversary = 1 };

inline const char* party_name(Party p) { return p == Party::User ? "user" : "adversary"; }

struct Token {
    TokenId id = 0;
    Party owner = Party::User;
    Round purchase_round = 0;
    Round spent_round = -1;       // -1 == unspent
    Round expiry_round = 0;       // 0 == never expires
    bool expired = false;         // burned by the expiry ablation

    bool spent() const { return spent_round >= 0; }
    bool usable_at(Round r) const {
        if (spent() || expired) return false;
        if (purchase_round >= r) return false;  // confirmed strictly earlier
        if (expiry_round > 0 && expiry_round <= r) return false;
        return true;
    }
};

// How fresh token numbers are assigned.
//   WorstCaseSequential: one global counter; within a round all adversary
//     purchases are numbered before all user purchases (the adversary has
//     full control over assignment).
//   Lottery: numbers drawn uniformly at random from a 2^48 space; purchase
//     order carries no information.
enum class TokenOrder : std::uint8_t { WorstCaseSequential = 0, Lottery = 1 };

enum class TxKind : std::uint8_t { TokenPurchase, TokenizedMev, NonTokenizedMev, Regular };

struct Transaction {
    TxKind kind = TxKind::Regular;
    Party submitter = Party::User;
    Round round = 0;
    // TokenPurchase
    std::int64_t purchase_count = 0;
    // TokenizedMev / NonTokenizedMev
    TokenId token_id = 0;
    Money opportunity_value = 0;
    bool fatal = false;  // Type-2 opportunity (arbitrage/liquidation)
};

struct Block {
    Round round = 0;
    std::vector<Transaction> transactions;  // tokenized prefix, then the rest
};

enum class Violation : std::uint8_t {
    Ok = 0,
    OutOfOrder,
    DoubleSpend,
    UnconfirmedToken,
    Expired,
    CapExceeded,
    TokenizedAfterPlain,
    UnknownToken,
    WrongOwner,
};

const char* violation_name(Violation v);

struct PartyFunds {
    Money liquid = 0;
    Money locked = 0;
    Money total() const { return liquid + locked; }
};

// Single-threaded deterministic state machine holding every token ever
// issued plus both parties' liquid/locked balances.
class Ledger {
public:
    Ledger(Money user_liquid, Money adversary_liquid, TokenOrder order,
           std::uint64_t lottery_seed = 0)
        : order_(order), lottery_(Rng(lottery_seed).fork(0x70CCE7)) {
        funds_[0].liquid = user_liquid;
        funds_[1].liquid = adversary_liquid;
    }

    const PartyFunds& funds(Party p) const { return funds_[static_cast<int>(p)]; }
    PartyFunds& funds(Party p) { return funds_[static_cast<int>(p)]; }

    Money liquid(Party p) const { return funds(p).liquid; }
    Money locked(Party p) const { return funds(p).locked; }
    Money total(Party p) const { return funds(p).total(); }

    const std::map<TokenId, Token>& registry() const { return registry_; }
    const Token& token(TokenId id) const { return registry_.at(id); }
    TokenId next_token_id() const { return next_id_; }

    // Issues `count` tokens to `party` at cost y each. Throws
    // InsufficientFunds (std::runtime_error) when count*y > liquid.
    // Caller is responsible for the worst-case intra-round order (adversary
    // purchase requests before user ones).
    std::vector<TokenId> issue_tokens(Party party, std::int64_t count, Round round,
                                      Money token_cost, Round expiry_rounds);

    // Marks a token spent and settles its cost: the locked y moves back to
    // liquid when `refund` is set, otherwise it leaves the system.
    void spend_token(TokenId id, Round round, Money token_cost, bool refund);

    // Burns tokens whose expiry has arrived; their cost leaves the system.
    // Returns the ids burned.
    std::vector<TokenId> expire_tokens(Round round, Money token_cost);

    void credit(Party p, Money amount) { funds(p).liquid += amount; }

    // Unspent, unexpired token ids owned by `party`, ascending.
    std::vector<TokenId> owned_unspent(Party party) const;

    // One token per line: id,owner,purchase_round,spent,expiry
    std::string snapshot() const;

private:
    TokenId fresh_id();

    TokenOrder order_;
    Rng lottery_;
    TokenId next_id_ = 1;
    std::map<TokenId, Token> registry_;
    std::multimap<Round, TokenId> expiry_index_;
    PartyFunds funds_[2];
};

// Orders candidate transactions into a valid block: tokenized MEV sorted by
// ascending token id (capped at `cap` when cap > 0, dropping the highest
// ids), then everything else. Dropped transactions are returned so the
// engine can count them and leave their tokens spendable.
struct BuildResult {
    Block block;
    std::vector<Transaction> dropped;
};
BuildResult build_block(Round round, const std::vector<Transaction>& candidates,
                        std::int64_t cap);

// Consensus-side check: block invariants plus, for every tokenized
// transaction, that the token exists, is unspent, unexpired, confirmed
// before block.round and owned by the submitter.
Violation validate_block(const Block& block, const Ledger& ledger, std::int64_t cap);

}  // namespace masq
