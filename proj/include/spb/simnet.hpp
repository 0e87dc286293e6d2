#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <queue>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "spb/bytes.hpp"
#include "spb/crypto.hpp"
#include "spb/result.hpp"

namespace spb {

// Deterministic single-threaded discrete-event substrate. Simulated time is
// in milliseconds; every delivery, timer and mining tick flows through one
// queue ordered by (fire_time, sequence), so a fixed seed replays the exact
// same event trace.

using SimTime = std::int64_t;
using NodeId = std::uint32_t;

inline constexpr NodeId kNoNode = 0xffffffff;

class Engine;

struct Message {
    virtual ~Message() = default;
    virtual std::string_view kind() const = 0;
    // Stable byte form used for trace digests; not a wire format.
    virtual Bytes canonical() const = 0;
};

using MessagePtr = std::shared_ptr<const Message>;

class Node {
public:
    virtual ~Node() = default;
    virtual void handle(Engine& engine, const MessagePtr& msg) = 0;

    NodeId node_id = kNoNode;
    std::string node_name;
};

struct LatencyModel {
    SimTime base_ms = 50;
    SimTime jitter_ms = 20;
};

struct SimEvent {
    SimTime fire_time = 0;
    std::uint64_t sequence = 0;
    NodeId target = kNoNode;
    MessagePtr payload;
};

class Engine {
public:
    explicit Engine(std::uint64_t seed, LatencyModel latency = {});

    NodeId add_node(Node& node, std::string name);
    Node* node(NodeId id);
    std::size_t node_count() const { return nodes_.size(); }

    SimTime now() const { return now_; }

    Status schedule(SimTime fire_time, NodeId target, MessagePtr payload);
    Status schedule_in(SimTime delay, NodeId target, MessagePtr payload);

    // One delivery with a fresh latency draw.
    Status unicast(NodeId from, NodeId to, MessagePtr payload);
    // One delivery per other registered node, each with an independent draw.
    Status broadcast(NodeId from, MessagePtr payload);

    // Number of events processed. Advances the clock to `t` even when the
    // queue is empty.
    Result<std::uint64_t> run_until(SimTime t);
    // Drains everything currently schedulable.
    std::uint64_t run_all();

    SimTime draw_latency();
    std::uint64_t draw_u64() { return rng_(); }
    std::uint64_t draw_below(std::uint64_t bound) { return bound == 0 ? 0 : rng_() % bound; }

    const LatencyModel& latency() const { return latency_; }
    void set_latency(LatencyModel latency) { latency_ = latency; }

    std::size_t pending_events() const { return queue_.size(); }
    std::uint64_t scheduled_total() const { return scheduled_total_; }
    std::uint64_t processed_total() const { return processed_total_; }

    void enable_trace(bool on) { trace_enabled_ = on; }
    const std::vector<std::string>& trace() const { return trace_; }
    void trace_line(std::string line);
    Hash trace_digest() const;

private:
    struct EventOrder {
        bool operator()(const SimEvent& a, const SimEvent& b) const {
            if (a.fire_time != b.fire_time) return a.fire_time > b.fire_time;
            return a.sequence > b.sequence;
        }
    };

    SimTime now_ = 0;
    std::uint64_t next_sequence_ = 0;
    std::uint64_t scheduled_total_ = 0;
    std::uint64_t processed_total_ = 0;
    std::mt19937_64 rng_;
    LatencyModel latency_;
    std::vector<Node*> nodes_;
    std::priority_queue<SimEvent, std::vector<SimEvent>, EventOrder> queue_;
    bool trace_enabled_ = false;
    std::vector<std::string> trace_;
};

}  // namespace spb
