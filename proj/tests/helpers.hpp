#pragma once

#include <deque>

#include "oddcycle/engine.hpp"

namespace testing {

// Plays a fixed list of actions, then forfeits.
class Scripted : public oddcycle::Strategy {
 public:
  explicit Scripted(std::deque<oddcycle::Action> actions) : actions_(std::move(actions)) {}
  std::string name() const override { return "scripted"; }
  oddcycle::Action act(const oddcycle::GameState&, std::span<const oddcycle::EdgeId>) override {
    if (actions_.empty()) return oddcycle::Action::forfeit("script exhausted");
    oddcycle::Action a = actions_.front();
    actions_.pop_front();
    return a;
  }
  std::unique_ptr<oddcycle::Strategy> clone() const override {
    return std::make_unique<Scripted>(*this);
  }

 private:
  std::deque<oddcycle::Action> actions_;
};

// Claims the lowest legal (builder) or unclaimed (blocker) edge; offers the
// lowest b+1 offerable edges; chooses the first offered edge.
class Lowest : public oddcycle::Strategy {
 public:
  explicit Lowest(oddcycle::Role role) : role_(role) {}
  std::string name() const override { return "lowest"; }
  oddcycle::Action act(const oddcycle::GameState& st,
                       std::span<const oddcycle::EdgeId> offer) override {
    using namespace oddcycle;
    if (st.config().variant == Variant::ClientWaiter) {
      if (role_ == Role::Builder) return Action::choose(offer.front());
      auto pool = offerable_edges(st);
      pool.resize(std::min<std::size_t>(pool.size(), st.config().b + 1));
      return Action::make_offer(pool);
    }
    for (EdgeId e = 0; e < st.num_edges(); ++e)
      if (role_ == Role::Builder ? st.is_legal_builder_move(e) : st.owner(e) == Owner::Unclaimed)
        return Action::claim(e);
    return Action::forfeit("none");
  }
  std::unique_ptr<oddcycle::Strategy> clone() const override {
    return std::make_unique<Lowest>(*this);
  }

 private:
  oddcycle::Role role_;
};

}  // namespace testing
