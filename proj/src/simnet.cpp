#include "spb/simnet.hpp"

namespace spb {

Engine::Engine(std::uint64_t seed, LatencyModel latency) : rng_(seed), latency_(latency) {}

NodeId Engine::add_node(Node& node, std::string name) {
    node.node_id = static_cast<NodeId>(nodes_.size());
    node.node_name = std::move(name);
    nodes_.push_back(&node);
    return node.node_id;
}

Node* Engine::node(NodeId id) { return id < nodes_.size() ? nodes_[id] : nullptr; }

Status Engine::schedule(SimTime fire_time, NodeId target, MessagePtr payload) {
    if (fire_time < now_) return {Errc::EventInPast, "fire_time before current sim time"};
    if (target >= nodes_.size()) return {Errc::UnknownNode, "target not registered"};
    queue_.push(SimEvent{fire_time, next_sequence_++, target, std::move(payload)});
    ++scheduled_total_;
    return Status::ok();
}

Status Engine::schedule_in(SimTime delay, NodeId target, MessagePtr payload) {
    if (delay < 0) return {Errc::EventInPast, "negative delay"};
    return schedule(now_ + delay, target, std::move(payload));
}

SimTime Engine::draw_latency() {
    SimTime jitter = 0;
    if (latency_.jitter_ms > 0) {
        jitter = static_cast<SimTime>(rng_() % static_cast<std::uint64_t>(latency_.jitter_ms + 1));
    }
    return latency_.base_ms + jitter;
}

Status Engine::unicast(NodeId from, NodeId to, MessagePtr payload) {
    if (from >= nodes_.size() || to >= nodes_.size()) {
        return {Errc::UnknownNode, "unicast endpoint not registered"};
    }
    return schedule(now_ + draw_latency(), to, std::move(payload));
}

Status Engine::broadcast(NodeId from, MessagePtr payload) {
    if (from >= nodes_.size()) return {Errc::UnknownNode, "broadcast source not registered"};
    for (NodeId id = 0; id < nodes_.size(); ++id) {
        if (id == from) continue;
        auto st = schedule(now_ + draw_latency(), id, payload);
        if (!st) return st;
    }
    return Status::ok();
}

Result<std::uint64_t> Engine::run_until(SimTime t) {
    if (t < now_) return {Errc::EventInPast, "horizon before current sim time"};
    std::uint64_t processed = 0;
    while (!queue_.empty() && queue_.top().fire_time <= t) {
        SimEvent ev = queue_.top();
        queue_.pop();
        now_ = ev.fire_time;
        if (trace_enabled_) {
            std::string line = "event," + std::to_string(now_) + "," +
                               nodes_[ev.target]->node_name + "," +
                               std::string(ev.payload->kind()) + "," +
                               digest(ev.payload->canonical()).hex().substr(0, 16);
            trace_.push_back(std::move(line));
        }
        nodes_[ev.target]->handle(*this, ev.payload);
        ++processed;
        ++processed_total_;
    }
    now_ = t;
    return processed;
}

std::uint64_t Engine::run_all() {
    std::uint64_t processed = 0;
    while (!queue_.empty()) {
        SimTime horizon = queue_.top().fire_time;
        processed += run_until(horizon).take();
    }
    return processed;
}

void Engine::trace_line(std::string line) {
    if (trace_enabled_) trace_.push_back(std::move(line));
}

Hash Engine::trace_digest() const {
    Bytes buf;
    for (const auto& line : trace_) {
        put_prefixed(buf, std::string_view(line));
    }
    return digest(buf);
}

}  // namespace spb
