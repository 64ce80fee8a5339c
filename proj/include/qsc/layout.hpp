// Copyright 2026 The QSC Authors
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

#pragma once

#include <map>
#include <stdexcept>
#include <string>

namespace qsc {

/// Injective map from logical qubits to physical qubits. Partial while
/// a layout is under construction; total at routing time.
class Layout {
public:
    Layout() = default;

    static Layout identity(int n) {
        Layout l;
        for (int i = 0; i < n; i++) {
            l.assign(i, i);
        }
        return l;
    }

    void assign(int logical, int physical) {
        auto it = p2l_.find(physical);
        if (it != p2l_.end() && it->second != logical) {
            throw std::runtime_error("physical qubit " + std::to_string(physical) +
                                     " already assigned");
        }
        auto jt = l2p_.find(logical);
        if (jt != l2p_.end()) {
            p2l_.erase(jt->second);
        }
        l2p_[logical] = physical;
        p2l_[physical] = logical;
    }

    [[nodiscard]] bool has_logical(int logical) const {
        return l2p_.count(logical) > 0;
    }
    [[nodiscard]] bool has_physical(int physical) const {
        return p2l_.count(physical) > 0;
    }

    [[nodiscard]] int physical(int logical) const {
        auto it = l2p_.find(logical);
        if (it == l2p_.end()) {
            throw std::runtime_error("unmapped logical qubit " +
                                     std::to_string(logical));
        }
        return it->second;
    }

    [[nodiscard]] int logical(int physical) const {
        auto it = p2l_.find(physical);
        if (it == p2l_.end()) {
            throw std::runtime_error("unmapped physical qubit " +
                                     std::to_string(physical));
        }
        return it->second;
    }

    /// Exchange the logical occupants of two physical qubits (either may
    /// be free).
    void swap_physical(int pa, int pb) {
        auto a = p2l_.find(pa);
        auto b = p2l_.find(pb);
        const bool has_a = a != p2l_.end();
        const bool has_b = b != p2l_.end();
        const int la = has_a ? a->second : -1;
        const int lb = has_b ? b->second : -1;
        if (has_a) {
            p2l_.erase(pa);
            l2p_.erase(la);
        }
        if (has_b) {
            p2l_.erase(pb);
            l2p_.erase(lb);
        }
        if (has_a) {
            assign(la, pb);
        }
        if (has_b) {
            assign(lb, pa);
        }
    }

    [[nodiscard]] int size() const { return static_cast<int>(l2p_.size()); }
    [[nodiscard]] const std::map<int, int>& logical_to_physical() const {
        return l2p_;
    }
    [[nodiscard]] const std::map<int, int>& physical_to_logical() const {
        return p2l_;
    }

    bool operator==(const Layout& rhs) const { return l2p_ == rhs.l2p_; }

private:
    std::map<int, int> l2p_;
    std::map<int, int> p2l_;
};

}  // namespace qsc
