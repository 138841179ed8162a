#pragma once
// Stream transport between the VP (client) and the world server. Endpoints
// are written as "unix:/tmp/cosim.sock" or "tcp:127.0.0.1:7070"; the env var
// COSIM_ENDPOINT overrides the default when set.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <cosim/wire/packet.hpp>
#include <cosim/wire/registry.hpp>

namespace cosim::wire {

struct Endpoint {
    enum class Kind { unix_socket, tcp };

    Kind kind = Kind::unix_socket;
    std::string path;         // unix socket path
    std::string host;         // tcp host
    std::uint16_t port = 0;   // tcp port

    static Endpoint parse(const std::string& text); // throws ConfigError
    std::string to_string() const;
};

// Endpoint from COSIM_ENDPOINT if set, otherwise parsed from `fallback`.
Endpoint endpoint_from_env_or(const std::string& fallback);

class Connection {
public:
    Connection() = default;
    explicit Connection(int fd) : fd_(fd) {}
    ~Connection();

    Connection(Connection&& other) noexcept;
    Connection& operator=(Connection&& other) noexcept;
    Connection(const Connection&) = delete;
    Connection& operator=(const Connection&) = delete;

    bool valid() const { return fd_ >= 0; }
    int fd() const { return fd_; }
    void close();

    void send_packet(const Packet& p, const Registry& registry);

    // Blocks until one full frame arrives. Throws TransportError when the
    // peer closes mid-stream or before the next frame.
    Packet recv_packet(const Registry& registry);

    void send_raw(const std::vector<std::uint8_t>& bytes);

private:
    int fd_ = -1;
    std::vector<std::uint8_t> rx_;
};

Connection connect_client(const Endpoint& ep); // throws TransportError

class Listener {
public:
    Listener() = default;
    ~Listener();

    Listener(Listener&& other) noexcept;
    Listener& operator=(Listener&& other) noexcept;
    Listener(const Listener&) = delete;
    Listener& operator=(const Listener&) = delete;

    static Listener bind(const Endpoint& ep); // throws TransportError

    // Blocks until a client connects; throws TransportError once closed.
    Connection accept();

    void close();
    bool valid() const { return fd_ >= 0; }

private:
    int fd_ = -1;
    std::string unlink_path_; // unix socket file removed on close
};

} // namespace cosim::wire
