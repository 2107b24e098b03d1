#pragma once

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>

#include <json.hpp>

#include "lcgeo/construct.hpp"

namespace lcgeo {

constexpr int kWireVersion = 1;

enum class Policy { Auto, Manual };

struct SessionState {
    std::shared_ptr<const Construction> construction;
    Assignment assignment;
    Policy policy = Policy::Auto;
    std::uint64_t seed = 0;
    std::size_t n = 5;
    // Resolutions requested by probe or check-extended, cleared by the next drag or load.
    std::map<std::string, ResolveOutcome> forced;
};

using Frame = nlohmann::json;

// Every request yields exactly one response: a scene or an error.
std::pair<SessionState, Frame> handle(const Frame& request, SessionState state);
// One newline-free text frame in, one out.
std::string handle_line(std::string_view line, SessionState& state);

Frame error_frame(std::string_view code, std::string_view detail);

// Line-delimited TCP and optional WebSocket transports on 127.0.0.1; port 0
// picks a free port. One session per connection.
class BridgeServer {
public:
    BridgeServer(unsigned short tcp_port, std::optional<unsigned short> ws_port);
    ~BridgeServer();
    BridgeServer(const BridgeServer&) = delete;
    BridgeServer& operator=(const BridgeServer&) = delete;

    unsigned short tcp_port() const;
    unsigned short ws_port() const;  // 0 when disabled

    void run();    // blocks until stop()
    void start();  // runs on a background thread
    void stop();

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

}  // namespace lcgeo
