#pragma once

#include <map>
#include <memory>

#include "simplexpaths/complex.hpp"

namespace simplexpaths::detail {

/// Lazily materialized tree of iterated vertex links rooted at one complex.
/// The recursive definitions walk the same link chains over and over; this
/// keeps each materialized link alive for the lifetime of a traversal.
/// Worker-local: one instance per thread.
class LinkCache {
  public:
    struct Node {
        const Complex* complex = nullptr;
        std::unique_ptr<Complex> owned;
        std::map<VertexLabel, std::unique_ptr<Node>> children;
    };

    explicit LinkCache(const Complex& root) { root_.complex = &root; }

    Node* root() { return &root_; }

    Node* child(Node* node, const VertexLabel& v) {
        auto it = node->children.find(v);
        if (it == node->children.end()) {
            auto kid = std::make_unique<Node>();
            kid->owned = std::make_unique<Complex>(link(*node->complex, Face{v}));
            kid->complex = kid->owned.get();
            it = node->children.emplace(v, std::move(kid)).first;
        }
        return it->second.get();
    }

  private:
    Node root_;
};

}  // namespace simplexpaths::detail
