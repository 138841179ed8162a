#include <cosim/world/server.hpp>

#include <cstdio>

#include <sys/socket.h>

#include <cosim/errors.hpp>

namespace cosim::world {

WorldServer::WorldServer(wire::Registry registry, WorldServerOptions options)
    : registry_(std::move(registry)), options_(std::move(options)),
      world_(options_.initial_scenario) {}

WorldServer::~WorldServer() { stop(); }

void WorldServer::start(const wire::Endpoint& endpoint) {
    listener_ = wire::Listener::bind(endpoint);
    running_.store(true);
    accept_thread_ = std::thread(&WorldServer::accept_loop, this);
    if (options_.verbose)
        std::fprintf(stderr, "[world] listening on %s\n", endpoint.to_string().c_str());
}

void WorldServer::accept_loop() {
    std::uint64_t next_id = 0;
    while (running_.load()) {
        wire::Connection conn;
        try {
            conn = listener_.accept();
        } catch (const TransportError&) {
            break; // listener closed
        }
        std::lock_guard lock(threads_mutex_);
        client_threads_.emplace_back(&WorldServer::client_loop, this, std::move(conn),
                                     next_id++);
    }
}

void WorldServer::client_loop(wire::Connection conn, std::uint64_t client_id) {
    {
        std::lock_guard lock(fds_mutex_);
        client_fds_.push_back(conn.fd());
    }
    std::uint64_t last_time_us = 0;
    try {
        for (;;) {
            const wire::Packet request = conn.recv_packet(registry_);
            wire::Packet response;
            if (request.is_response()) {
                response = wire::make_error_response(request, world_.time_us(),
                                                     "expected a request, got a response");
            } else if (request.time_us < last_time_us) {
                // per-connection timestamps must be non-decreasing
                response = wire::make_error_response(
                    request, world_.time_us(),
                    "non-monotonic request timestamp on connection " +
                        std::to_string(client_id));
            } else {
                last_time_us = request.time_us;
                std::lock_guard lock(world_mutex_);
                response = dispatch(world_, request, options_.scenario_dir);
            }
            conn.send_packet(response, registry_);

            if (request.opcode == wire::kOpShutdown && response.ok()) {
                shutdown_requested_.store(true);
                shutdown_cv_.notify_all();
                running_.store(false);
                listener_.close();
                break;
            }
        }
    } catch (const TransportError&) {
        // client went away
    } catch (const wire::ProtocolError& e) {
        if (options_.verbose)
            std::fprintf(stderr, "[world] protocol error on connection %llu: %s\n",
                         static_cast<unsigned long long>(client_id), e.what());
    }
}

void WorldServer::stop() {
    running_.store(false);
    shutdown_cv_.notify_all();
    listener_.close();
    {
        // unblock any client thread still parked in recv
        std::lock_guard lock(fds_mutex_);
        for (int fd : client_fds_) ::shutdown(fd, SHUT_RDWR);
    }
    if (accept_thread_.joinable()) accept_thread_.join();
    std::lock_guard lock(threads_mutex_);
    for (auto& t : client_threads_)
        if (t.joinable()) t.join();
    client_threads_.clear();
    {
        std::lock_guard fds_lock(fds_mutex_);
        client_fds_.clear();
    }
}

void WorldServer::wait_shutdown() {
    std::unique_lock lock(shutdown_mutex_);
    shutdown_cv_.wait(lock, [&] { return shutdown_requested_.load() || !running_.load(); });
}

} // namespace cosim::world
